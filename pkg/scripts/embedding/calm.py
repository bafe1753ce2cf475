"""
Спокойные (calm) копии корневых деревьев в градуировках и поиск
path-induced копии дерева в ациклическом скромном орграфе.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx

from scripts.errors import HostGraphError, InternalError, PreconditionError
from scripts.embedding.grading import LayeredColoring, peel_grading
from scripts.graphs import oracles
from scripts.graphs.graph_core import Coloring, underlying
from scripts.graphs.trees import is_path_induced

logger = logging.getLogger(__name__)


class TournamentSizes:
    """
    t(u, v) - наибольший транзитивный турнир с источником u и стоком v.
    В ациклическом орграфе это 2 + ω(D[N+(u) ∩ N-(v)]); значения кэшируются.
    """

    def __init__(self, dg):
        if not nx.is_directed_acyclic_graph(dg):
            raise PreconditionError("t(u, v) определено только для ациклического орграфа")
        self.dg = dg
        self._graph = underlying(dg)
        self._cache = {}

    def __call__(self, u, v):
        key = (u, v)
        if key not in self._cache:
            self._cache[key] = self._compute(u, v)
        return self._cache[key]

    def _compute(self, u, v):
        if not self.dg.has_edge(u, v):
            return 0
        inner = set(self.dg.successors(u)) & set(self.dg.predecessors(v))
        if not inner:
            return 2
        clique, _ = nx.max_weight_clique(self._graph.subgraph(inner), weight=None)
        return 2 + len(clique)


def tournament_size(dg, u, v):
    return TournamentSizes(dg)(u, v)


@dataclass(frozen=True)
class CalmEmbedding:
    """phi: вершина дерева -> вершина орграфа; tournament_sizes: дуга дерева -> t(phi(u), phi(v))"""
    tree: object
    phi: dict
    tournament_sizes: dict = field(default_factory=dict)


def _required_levels(depth, omega):
    # шагу расширения нужен уровень родителя < m, отсюда 2 + (depth-1)(ω-1)
    if depth == 0:
        return 1
    return 2 + (depth - 1) * (omega - 1)


def embed_calm_tree(dg, grading, t, omega=None, limits=None):
    """
    Спокойная копия дерева t: корень - наименьшая вершина X_1, далее вершины
    дерева добавляются в порядке DFS; ребёнок родителя u - вершина w вне образа
    с дугой u->w и t(u,w) - 1 >= g(w) - g(u), максимизирующая t(u,w)
    (при равенстве - наименьший id).

    PreconditionError - градуировка не подходит; None - кандидат не найден.
    """
    problems = grading.violations(dg)
    if problems:
        raise PreconditionError(f"градуировка некорректна: {problems[0]}")
    if grading.k < t.n - 1:
        raise PreconditionError(f"нужно k >= n - 1 = {t.n - 1}, получено k = {grading.k}")
    w_max = oracles.omega(dg, limits) if omega is None else omega
    need = _required_levels(t.depth(), w_max)
    if grading.m < need:
        raise PreconditionError(f"нужно m >= {need} уровней, получено m = {grading.m}")

    levels = grading.level_map()
    sizes = TournamentSizes(dg)
    root_image = min(grading.levels[0])
    phi = {t.root: root_image}
    used = {root_image}
    recorded = {}

    for v in t.dfs_order()[1:]:
        p = t.parent[v]
        u = phi[p]
        candidates = [
            w for w in dg.successors(u)
            if w not in used and sizes(u, w) - 1 >= levels[w] - levels[u]
        ]
        if not candidates:
            logger.warning("Нет кандидата для вершины дерева %d (родитель %d -> %d)", v, p, u)
            return None
        best = min(candidates, key=lambda w: (-sizes(u, w), w))
        phi[v] = best
        used.add(best)
        recorded[(p, v)] = sizes(u, best)

    return CalmEmbedding(t, phi, recorded)


def calm_violations(dg, grading, emb):
    """Все нарушения определения спокойной копии, с пересчётом t-значений"""
    t, phi = emb.tree, emb.phi
    problems = []

    image = [phi.get(v) for v in t.vertices]
    if None in image or len(set(image)) != len(image):
        return ["phi не инъективно или определено не на всех вершинах"]
    for p, c in t.arcs():
        if not dg.has_edge(phi[p], phi[c]):
            problems.append(f"дуга {p}->{c} не переходит в дугу орграфа")
    if problems:
        return problems

    try:
        sizes = TournamentSizes(dg)
    except PreconditionError as e:
        return [str(e)]
    try:
        levels = grading.level_map()
        if phi[t.root] not in grading.levels[0]:
            problems.append(f"корень отображён в {phi[t.root]} вне X_1")

        for p, c in t.arcs():
            u, v = phi[p], phi[c]
            t_uv = sizes(u, v)
            if emb.tournament_sizes and emb.tournament_sizes.get((p, c)) != t_uv:
                problems.append(f"дуга {p}->{c}: записано t={emb.tournament_sizes.get((p, c))}, на деле {t_uv}")
            if t_uv - 1 < levels[v] - levels[u]:
                problems.append(f"дуга {p}->{c}: t-1={t_uv - 1} < g(v)-g(u)={levels[v] - levels[u]}")

            excluded = set(image) - {phi[x] for x in t.descendants(c)}
            for w in dg.successors(u):
                if w in excluded:
                    continue
                t_uw = sizes(u, w)
                if t_uw - 1 >= levels[w] - levels[u] and t_uw > t_uv:
                    problems.append(f"дуга {p}->{c}: вершина {w} даёт t={t_uw} > {t_uv}")
    except KeyError as e:
        problems.append(f"вершина {e} вне градуировки")
    return problems


def verify_calm(dg, grading, emb):
    return not calm_violations(dg, grading, emb)


def path_levels(t, omega):
    """Число уровней градуировки для поиска path-induced копии дерева t"""
    depth = t.depth()
    if depth == 0:
        return 1
    return max(depth * omega, _required_levels(depth, omega))


def find_path_induced_tree(dg, g, t, omega=None, limits=None):
    """
    Path-induced копия дерева t в ациклическом скромном орграфе dg либо
    раскраска dg по слоям не более чем в 2·depth·n·ω' цветов.

    omega - верхняя оценка ω' основы dg (по умолчанию считается точно).
    """
    if dg.number_of_nodes() == 0:
        return LayeredColoring((), Coloring({}, 0))

    w = oracles.omega(dg, limits) if omega is None else omega
    m = path_levels(t, w)
    result = peel_grading(dg, t.n, m)
    if isinstance(result, LayeredColoring):
        return result

    emb = embed_calm_tree(dg, result, t, omega=w, limits=limits)
    if emb is None:
        raise InternalError("градуировка достаточной глубины, но спокойная копия не найдена")
    if not is_path_induced(dg, t, emb.phi, host=g):
        raise HostGraphError("найденная копия не path-induced: граф-носитель не скромный",
                             witness=emb.phi)
    logger.debug("Path-induced копия дерева на %d вершинах найдена", t.n)
    return emb

