"""
Точные оракулы ω, α и χ для небольших графов.

Превышение лимита - всегда OracleLimitError, приближённых значений нет.
"""
import logging

import networkx as nx

from scripts.config import resolve_limits
from scripts.errors import OracleLimitError
from scripts.graphs.graph_core import Coloring, underlying

logger = logging.getLogger(__name__)


def _as_graph(g):
    return underlying(g) if g.is_directed() else g


def _check_limit(oracle, g, limit):
    n = g.number_of_nodes()
    if n > limit:
        raise OracleLimitError(oracle, n, limit)


def maximum_clique(g, limits=None):
    """Наибольшая клика (отсортированный список вершин), branch-and-bound networkx"""
    g = _as_graph(g)
    _check_limit("omega", g, resolve_limits(limits).omega)
    if g.number_of_nodes() == 0:
        return []
    clique, _ = nx.max_weight_clique(g, weight=None)
    return sorted(clique)


def maximum_independent_set(g, limits=None):
    """Наибольшее независимое множество как наибольшая клика дополнения"""
    g = _as_graph(g)
    _check_limit("alpha", g, resolve_limits(limits).alpha)
    if g.number_of_nodes() == 0:
        return []
    clique, _ = nx.max_weight_clique(nx.complement(g), weight=None)
    return sorted(clique)


def omega(g, limits=None):
    return len(maximum_clique(g, limits))


def alpha(g, limits=None):
    return len(maximum_independent_set(g, limits))


def _k_coloring(nodes, adj, k):
    """
    Поиск раскраски в k цветов перебором с возвратом в порядке DSATUR.
    Новый цвет открывается только как следующий по номеру (симметрия палитры).
    """
    colors = {}
    neighbor_colors = {v: {} for v in nodes}

    def choose():
        best, best_key = None, None
        for v in nodes:
            if v in colors:
                continue
            key = (len(neighbor_colors[v]), len(adj[v]))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def assign(v, c, delta):
        for u in adj[v]:
            counts = neighbor_colors[u]
            counts[c] = counts.get(c, 0) + delta
            if counts[c] == 0:
                del counts[c]

    def backtrack(used):
        v = choose()
        if v is None:
            return True
        for c in range(min(used + 1, k)):
            if c in neighbor_colors[v]:
                continue
            colors[v] = c
            assign(v, c, 1)
            if backtrack(max(used, c + 1)):
                return True
            assign(v, c, -1)
            del colors[v]
        return False

    return dict(colors) if backtrack(0) else None


def chromatic_coloring(g, limits=None):
    """
    Оптимальная раскраска: двоичный поиск по k между ω и числом цветов
    жадного DSATUR с точной проверкой k-раскрашиваемости
    """
    g = _as_graph(g)
    _check_limit("chi", g, resolve_limits(limits).chi)
    n = g.number_of_nodes()
    if n == 0:
        return Coloring({}, 0)

    nodes = sorted(g.nodes)
    adj = {v: set(g[v]) for v in nodes}

    greedy = nx.greedy_color(g, strategy="DSATUR")
    best = Coloring(dict(greedy), max(greedy.values()) + 1)
    lo, hi = len(nx.max_weight_clique(g, weight=None)[0]), best.palette_size

    while lo < hi:
        mid = (lo + hi) // 2
        found = _k_coloring(nodes, adj, mid)
        if found is None:
            lo = mid + 1
        else:
            best = Coloring(found, max(found.values()) + 1)
            hi = best.palette_size
    logger.debug("χ = %d для графа на %d вершинах", best.palette_size, n)
    return best


def chi(g, limits=None):
    return chromatic_coloring(g, limits).palette_size
