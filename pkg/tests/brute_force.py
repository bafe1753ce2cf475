"""
Независимые переборные оракулы для перекрёстной проверки.

Ничего не импортируют из scripts, кроме генератора экземпляров: каждое
значение считается перебором подмножеств, инъекций или путей.
"""
import itertools

import networkx as nx


def _nodes_and_adj(g):
    nodes = sorted(g.nodes)
    adj = {v: set(g[v]) for v in nodes}
    if g.is_directed():
        for v in nodes:
            adj[v] |= set(g.predecessors(v))
    return nodes, adj


def _subsets_by_size(nodes):
    for size in range(len(nodes), -1, -1):
        yield from itertools.combinations(nodes, size)


def brute_omega(g):
    nodes, adj = _nodes_and_adj(g)
    for subset in _subsets_by_size(nodes):
        if all(b in adj[a] for a, b in itertools.combinations(subset, 2)):
            return len(subset)
    return 0


def brute_alpha(g):
    nodes, adj = _nodes_and_adj(g)
    for subset in _subsets_by_size(nodes):
        if all(b not in adj[a] for a, b in itertools.combinations(subset, 2)):
            return len(subset)
    return 0


def brute_chi(g):
    """Динамика по подмножествам: dp[mask] - χ подграфа на mask"""
    nodes, adj = _nodes_and_adj(g)
    n = len(nodes)
    index = {v: i for i, v in enumerate(nodes)}
    neigh = [sum(1 << index[u] for u in adj[v]) for v in nodes]

    independent = [True] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        independent[mask] = independent[rest] and not (neigh[low] & rest)

    dp = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        best = n
        sub = mask
        while sub:
            if sub & low and independent[sub]:
                best = min(best, dp[mask & ~sub] + 1)
            sub = (sub - 1) & mask
        dp[mask] = best
    return dp[(1 << n) - 1]


def brute_tournament(dg, u, v):
    """Наибольший транзитивный турнир с источником u и стоком v перебором подмножеств"""
    if not dg.has_edge(u, v):
        return 0
    others = [w for w in dg.nodes if w not in (u, v)]
    best = 2
    for size in range(1, len(others) + 1):
        for subset in itertools.combinations(others, size):
            chain = (u,) + subset + (v,)
            if all(dg.has_edge(a, b) or dg.has_edge(b, a) for a, b in itertools.combinations(chain, 2)) \
                    and all(dg.has_edge(u, w) and dg.has_edge(w, v) for w in subset):
                best = max(best, len(chain))
    return best


def tree_paths(t):
    """Все ориентированные пути дерева длины >= 2 (последовательности вершин)"""
    paths = []
    for v in t.vertices:
        chain = [v] + t.ancestors(v)
        for top in range(2, len(chain)):
            paths.append(list(reversed(chain[:top + 1])))
    return paths


def brute_path_induced(host, t, phi):
    for path in tree_paths(t):
        for i, j in itertools.combinations(range(len(path)), 2):
            if j - i >= 2 and host.has_edge(phi[path[i]], phi[path[j]]):
                return False
    return True


def brute_modest(dg, g):
    """Для каждой дуги u->v вершины каждого u-v пути попарно смежны в g"""
    for u, v in dg.edges():
        for path in nx.all_simple_paths(dg, u, v):
            if not all(g.has_edge(a, b) for a, b in itertools.combinations(path, 2)):
                return False
    return True


def brute_induced_copy_exists(g, t):
    vertices = t.vertices
    tree_edges = {frozenset(e) for e in t.arcs()}
    for image in itertools.permutations(sorted(g.nodes), len(vertices)):
        phi = dict(zip(vertices, image))
        if all((frozenset((a, b)) in tree_edges) == g.has_edge(phi[a], phi[b])
               for a, b in itertools.combinations(vertices, 2)):
            return True
    return False
