"""
Разложение графа пересечений по паттернам пересечения: семейство
ориентированных графов G_R, проверка их свойств (ацикличность, скромность,
расхождение) и произведение раскрасок.
"""
import logging
from dataclasses import dataclass

import networkx as nx

from scripts.config import resolve_limits
from scripts.errors import InputError, OracleLimitError
from scripts.geometry.boxes import all_patterns, intersection_pattern
from scripts.graphs.graph_core import Coloring, underlying

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PatternDigraph:
    """G_R: дуга u->v, если бокс u имеет паттерн R относительно бокса v"""
    pattern: object
    digraph: nx.DiGraph

    @property
    def arc_count(self):
        return self.digraph.number_of_edges()


@dataclass(frozen=True)
class BasicReport:
    """Результат проверки свойств G_R; None - проверка не выполнялась"""
    acyclic: bool
    modest: bool = None
    divergent: bool = None
    witness: tuple = None

    @property
    def ok(self):
        return self.acyclic and self.modest is not False and self.divergent is not False


def decompose(boxes):
    """Семейство из 4^d PatternDigraph над всеми вершинами, в каноническом порядке паттернов"""
    boxes = list(boxes)
    if not boxes:
        raise InputError("пустой набор боксов")
    d = boxes[0].d
    ids = [box.id for box in boxes]

    digraphs = {}
    for pattern in all_patterns(d):
        dg = nx.DiGraph()
        dg.add_nodes_from(ids)
        digraphs[pattern] = dg

    for i, bu in enumerate(boxes):
        for bv in boxes[i + 1:]:
            pattern = intersection_pattern(bu, bv)
            if pattern is None:
                continue
            digraphs[pattern].add_edge(bu.id, bv.id)
            digraphs[pattern.mirror()].add_edge(bv.id, bu.id)

    family = [PatternDigraph(p, dg) for p, dg in digraphs.items()]
    logger.debug("Разложение: %d паттернов, %d непустых",
                 len(family), sum(1 for pd in family if pd.arc_count))
    return family


def _closure(dg):
    """Множества достижимости: v -> вершины, достижимые из v (включая v)"""
    return {v: nx.descendants(dg, v) | {v} for v in dg.nodes}


def modest_violation(dg, g, reach=None):
    """
    Первая пара (x, y) на некотором пути u->...->v с дугой u->v, не смежная в g.
    Пары одного пути - это x, y с u ~> x ~> y ~> v, поэтому перебор путей
    заменяется достижимостью.
    """
    reach = _closure(dg) if reach is None else reach
    for u, v in sorted(dg.edges()):
        between = sorted(w for w in reach[u] if v in reach[w])
        for x in between:
            for y in between:
                if x != y and y in reach[x] and not g.has_edge(x, y):
                    return (u, v, x, y)
    return None


def divergence_violation(dg, g, reach=None):
    """
    Первая четвёрка (x1, y1, xa, yb): пути u x1..xa и u y1..yb, x1 и y1 не смежны,
    а концы xa, yb смежны или совпадают
    """
    reach = _closure(dg) if reach is None else reach
    for u in sorted(dg.nodes):
        succ = sorted(dg.successors(u))
        for i, x1 in enumerate(succ):
            for y1 in succ[i + 1:]:
                if g.has_edge(x1, y1):
                    continue
                for xa in sorted(reach[x1]):
                    for yb in sorted(reach[y1]):
                        if xa == yb or g.has_edge(xa, yb):
                            return (x1, y1, xa, yb)
    return None


def verify_basic(pd, g, limits=None):
    """
    Проверка трёх свойств G_R: ацикличность (топологическая сортировка),
    скромность и свойство расхождения (только при n <= лимита basic).
    """
    dg = pd.digraph
    acyclic = nx.is_directed_acyclic_graph(dg)
    if not acyclic:
        cycle = tuple(u for u, _ in nx.find_cycle(dg))
        return BasicReport(False, witness=cycle)

    limit = resolve_limits(limits).basic
    n = dg.number_of_nodes()
    if n > limit:
        raise OracleLimitError("basic", n, limit)

    reach = _closure(dg)
    bad_modest = modest_violation(dg, g, reach)
    bad_divergent = divergence_violation(dg, g, reach)
    return BasicReport(
        acyclic=True,
        modest=bad_modest is None,
        divergent=bad_divergent is None,
        witness=bad_modest or bad_divergent,
    )


def product_coloring(colorings, family):
    """
    Произведение раскрасок: цвет вершины - кортеж цветов по паттернам
    (в каноническом порядке), перенумерованный целыми числами.
    """
    vertices = set()
    for pd in family:
        if pd.pattern not in colorings:
            raise InputError(f"нет раскраски для паттерна {pd.pattern}")
        coloring = colorings[pd.pattern]
        bad = coloring.conflicts(underlying(pd.digraph))
        if bad:
            raise InputError(f"раскраска паттерна {pd.pattern} некорректна на ребре {bad[0]}")
        vertices.update(pd.digraph.nodes)

    order = sorted(pd.pattern for pd in family)
    tuples = {v: tuple(colorings[p].color.get(v, 0) for p in order) for v in vertices}
    index = {t: i for i, t in enumerate(sorted(set(tuples.values())))}
    return Coloring({v: index[t] for v, t in tuples.items()}, len(index))
