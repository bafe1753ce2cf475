"""
Основная дихотомия: по набору боксов и (r, k) вернуть правильную раскраску
в пределах оценки либо индуцированную копию T_{r,k}.

1. граф пересечений G и ω(G);
2. разложение на 4^d орграфов G_R;
3. для каждого G_R - поиск path-induced копии T_{r, k^d·ω} (параллельно);
4. все паттерны дали раскраски - произведение раскрасок;
5. иначе копия прореживается до индуцированного T_{r,k}.
"""
import logging
from collections import deque
from dataclasses import replace

from joblib import Parallel, delayed

from scripts.config import resolve_limits
from scripts.embedding.calm import CalmEmbedding, find_path_induced_tree
from scripts.errors import InputError, InternalError, OracleLimitError
from scripts.geometry.boxes import normalize
from scripts.graphs import oracles
from scripts.graphs.graph_core import intersection_graph
from scripts.graphs.trees import make_trk, trk_size
from scripts.patterns.decomposition import decompose, product_coloring
from scripts.pipeline.bounds import chi_bound
from scripts.pipeline.certificates import (
    InducedTree,
    ProperColoring,
    coloring_violations,
    induced_tree_violations,
)
from scripts.pipeline.extraction import extract_independent, interval_coloring, interval_omega

logger = logging.getLogger(__name__)


def _pattern_omega(pd, fallback, limits):
    """Точное ω' основы G_R, если помещается в лимит, иначе верхняя оценка fallback"""
    dg = pd.digraph
    if pd.arc_count == 0:
        return 1
    if dg.number_of_nodes() > limits.omega:
        return fallback
    return max(1, oracles.omega(dg, limits))


def _solve_pattern(pd, g, t, fallback_omega, limits):
    w = _pattern_omega(pd, fallback_omega, limits)
    result = find_path_induced_tree(pd.digraph, g, t, omega=w, limits=limits)
    logger.debug("Паттерн %s: %d дуг, ω'=%d, %s", pd.pattern, pd.arc_count, w,
                 "копия дерева" if isinstance(result, CalmEmbedding) else "раскраска")
    return result


def _independent_children(g, by_id, children_boxes, k, limits):
    if len(children_boxes) <= limits.alpha:
        chosen = oracles.maximum_independent_set(g.subgraph(children_boxes), limits)
    else:
        chosen = extract_independent([by_id[b] for b in children_boxes], target=k).ids
    return sorted(chosen)[:k]


def prune_children(emb, boxes, k, limits=None):
    """
    Прореживание path-induced копии T_{r,K} до индуцированной T_{r,k}:
    от корня по уровням для каждой оставленной вершины выбираются k детей
    с попарно непересекающимися боксами.
    """
    if k < 1:
        raise InputError(f"нужно k >= 1, получено {k}")
    limits = resolve_limits(limits)
    boxes = list(boxes)
    by_id = {box.id: box for box in boxes}
    g = intersection_graph(boxes)

    source = emb.tree
    r = source.depth()
    target = make_trk(r, k)
    phi = {target.root: emb.phi[source.root]}

    queue = deque([(source.root, target.root)])
    while queue:
        src, tgt = queue.popleft()
        slots = target.children(tgt)
        if not slots:
            continue
        kids = source.children(src)
        box_to_kid = {emb.phi[c]: c for c in kids}
        chosen = _independent_children(g, by_id, sorted(box_to_kid), k, limits)
        if len(chosen) < k:
            raise InternalError(
                f"у вершины {src} только {len(chosen)} независимых детей из {len(kids)}, нужно {k}",
                witness=tuple(sorted(box_to_kid)),
            )
        for slot, box_id in zip(slots, chosen):
            phi[slot] = box_id
            queue.append((box_to_kid[box_id], slot))

    cert = InducedTree(target, phi, r, k)
    problems = induced_tree_violations(g, target, phi)
    if problems:
        raise InternalError(f"прореженное дерево не индуцировано: {problems[0].message}",
                            witness=problems[0].witness)
    return cert


def color_or_find_forest(boxes, r, k, omega=None, threads=1, limits=None):
    """
    Раскрашивает граф пересечений боксов или находит в нём индуцированное T_{r,k}

    Параметры:
        boxes (list[Box]): Боксы одной размерности (нормализуются внутри)
        r (int): Глубина дерева, r >= 0
        k (int): Ветвление дерева, k >= 1
        omega (int/None): Верхняя оценка ω(G) вместо точного оракула
        threads (int): Число потоков для обработки паттернов
        limits (OracleLimits/None): Лимиты оракулов

    Возвращает:
        ProperColoring: Раскраска с палитрой <= derived_bound
        InducedTree: Индуцированная копия T_{r,k} с отображением на id боксов
    """
    # Проверка параметров
    if r < 0 or k < 1:
        raise InputError(f"нужно r >= 0 и k >= 1, получено r={r}, k={k}")
    if threads < 1:
        raise InputError(f"threads должно быть >= 1, получено {threads}")
    if omega is not None and omega < 1:
        raise InputError(f"верхняя оценка ω должна быть >= 1, получено {omega}")
    limits = resolve_limits(limits)

    # Приведение к общему положению и построение графа
    boxes = normalize(boxes)
    d = boxes[0].d
    g = intersection_graph(boxes)
    if omega is None:
        omega = interval_omega(boxes) if d == 1 else oracles.omega(g, limits)

    # Дерево, которое ищется в паттернах
    big_k = k ** d * omega
    size = trk_size(r, big_k)
    if size > limits.tree:
        raise OracleLimitError("tree", size, limits.tree)
    t = make_trk(r, big_k)
    logger.info("n=%d, d=%d, ω=%d: ищем T_{%d,%d} на %d вершинах", len(boxes), d, omega, r, big_k, t.n)

    family = decompose(boxes)
    results = Parallel(n_jobs=threads, prefer="threads")(
        delayed(_solve_pattern)(pd, g, t, omega, limits) for pd in family
    )

    for pd, result in zip(family, results):
        if isinstance(result, CalmEmbedding):
            logger.info("Паттерн %s содержит path-induced T_{%d,%d}", pd.pattern, r, big_k)
            return replace(prune_children(result, boxes, k, limits), omega=omega)

    report = chi_bound(d, r, k, omega)
    per_pattern = {pd.pattern: result.coloring.palette_size for pd, result in zip(family, results)}
    if d == 1:
        coloring = interval_coloring(boxes)
    else:
        coloring = product_coloring({pd.pattern: res.coloring for pd, res in zip(family, results)}, family)

    problems = coloring_violations(g, coloring, report.derived_bound)
    if problems:
        raise InternalError(f"раскраска не прошла проверку: {problems[0].message}",
                            witness=problems[0].witness)
    logger.info("Раскраска в %d цветов (оценка %d)", coloring.palette_size, report.derived_bound)
    return ProperColoring(coloring, report.derived_bound, per_pattern,
                          omega=omega, paper_bound=report.paper_bound)
