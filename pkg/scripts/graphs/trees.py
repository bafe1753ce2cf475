"""
Корневые ориентированные деревья, T_{r,k}, проверка path-induced и поиск
индуцированной копии дерева.
"""
from collections import deque
from dataclasses import dataclass

import networkx as nx
from networkx.algorithms import isomorphism

from scripts.config import resolve_limits
from scripts.errors import InputError, OracleLimitError, PreconditionError


@dataclass(frozen=True)
class RootedTree:
    """Корневое дерево: parent - отображение потомок -> родитель, дуги от родителя к детям"""
    root: int
    parent: dict

    def __post_init__(self):
        if self.root in self.parent:
            raise InputError("у корня не может быть родителя")
        for v in self.parent:
            seen = {v}
            u = v
            while u != self.root:
                if u not in self.parent:
                    raise InputError(f"вершина {v} не достигает корня")
                u = self.parent[u]
                if u in seen:
                    raise InputError(f"цикл в отображении родителей через {u}")
                seen.add(u)

    @property
    def n(self):
        return len(self.parent) + 1

    @property
    def vertices(self):
        return [self.root] + sorted(self.parent)

    def children(self, v):
        return sorted(c for c, p in self.parent.items() if p == v)

    def arcs(self):
        """Дуги (родитель, ребёнок) в порядке обхода в ширину"""
        return [(self.parent[v], v) for v in self.bfs_order()[1:]]

    def bfs_order(self):
        order, queue = [], deque([self.root])
        kids = self._children_map()
        while queue:
            v = queue.popleft()
            order.append(v)
            queue.extend(kids.get(v, []))
        return order

    def dfs_order(self):
        order, stack = [], [self.root]
        kids = self._children_map()
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(kids.get(v, [])))
        return order

    def _children_map(self):
        kids = {}
        for c in sorted(self.parent):
            kids.setdefault(self.parent[c], []).append(c)
        return kids

    def level(self, v):
        depth = 0
        while v != self.root:
            v = self.parent[v]
            depth += 1
        return depth

    def depth(self):
        return max((self.level(v) for v in self.parent), default=0)

    def descendants(self, v):
        """Вершины поддерева T_v, включая v"""
        kids = self._children_map()
        result, stack = [], [v]
        while stack:
            u = stack.pop()
            result.append(u)
            stack.extend(kids.get(u, []))
        return result

    def ancestors(self, v):
        result = []
        while v != self.root:
            v = self.parent[v]
            result.append(v)
        return result

    def to_digraph(self):
        dg = nx.DiGraph()
        dg.add_nodes_from(self.vertices)
        dg.add_edges_from(self.arcs())
        return dg

    def to_graph(self):
        return nx.Graph(self.to_digraph())

    @classmethod
    def from_digraph(cls, dg, root):
        parent = {}
        for u, v in nx.bfs_edges(dg, root):
            parent[v] = u
        if len(parent) + 1 != dg.number_of_nodes():
            raise InputError("не все вершины достижимы из корня")
        return cls(root, parent)


def make_trk(r, k):
    """Полное k-арное корневое дерево глубины r; вершины нумеруются в ширину от корня 0"""
    if r < 0 or k < 1:
        raise InputError(f"нужно r >= 0 и k >= 1, получено r={r}, k={k}")
    dg = nx.balanced_tree(k, r, create_using=nx.DiGraph)
    return RootedTree.from_digraph(dg, 0)


def trk_size(r, k):
    """Число вершин T_{r,k}"""
    return r + 1 if k == 1 else (k ** (r + 1) - 1) // (k - 1)


def is_path_induced(dg, t, phi, host=None):
    """
    Проверяет, что образ каждого ориентированного пути дерева t индуцирован
    в графе host (по умолчанию - неориентированная основа dg).

    Пара вершин одного пути, не соседних на нём, - это пара предок/потомок
    на расстоянии >= 2, поэтому достаточно проверить такие пары.
    """
    image = [phi.get(v) for v in t.vertices]
    if None in image or len(set(image)) != len(image):
        raise PreconditionError("phi должно быть инъекцией, определённой на всех вершинах дерева")
    for p, c in t.arcs():
        if not dg.has_edge(phi[p], phi[c]):
            raise PreconditionError(f"дуга дерева {p}->{c} не переходит в дугу {phi[p]}->{phi[c]}")

    if host is None:
        def adjacent(a, b):
            return dg.has_edge(a, b) or dg.has_edge(b, a)
    else:
        def adjacent(a, b):
            return host.has_edge(a, b)

    for v in t.vertices:
        for anc in t.ancestors(v)[1:]:
            if adjacent(phi[anc], phi[v]):
                return False
    return True


def find_induced_copy(g, t, limits=None):
    """
    Индуцированная копия дерева t в графе g: отображение вершина дерева -> вершина g
    или None. Поиск - VF2 с возвратом (networkx GraphMatcher, node-induced).
    """
    limit = resolve_limits(limits).induced_copy
    if t.n > limit:
        raise OracleLimitError("induced_copy", t.n, limit)

    pattern = t.to_graph()
    matcher = isomorphism.GraphMatcher(g, pattern)
    for mapping in matcher.subgraph_isomorphisms_iter():
        return {tree_v: g_v for g_v, tree_v in mapping.items()}
    return None
