"""
Базовые графовые структуры: граф пересечений боксов, раскраски и
раскраска по вырожденности.

Graph - networkx.Graph над целыми id боксов, Digraph - networkx.DiGraph.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from scripts.errors import InternalError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coloring:
    """Раскраска: вершина -> номер цвета, palette_size - размер палитры"""
    color: dict = field(default_factory=dict)
    palette_size: int = 0

    def conflicts(self, g):
        """Рёбра графа g с одинаково окрашенными концами, а также вершины без цвета"""
        bad = []
        for u, v in g.edges():
            if u not in self.color or v not in self.color:
                bad.append((u, v))
            elif self.color[u] == self.color[v]:
                bad.append((u, v))
        return bad

    def is_proper(self, g):
        in_palette = all(0 <= c < self.palette_size for c in self.color.values())
        return in_palette and all(v in self.color for v in g.nodes) and not self.conflicts(g)


def intersection_graph(boxes):
    """
    Граф пересечений: вершины - id боксов, ребро uv тогда и только тогда,
    когда боксы пересекаются по каждой оси
    """
    g = nx.Graph()
    g.add_nodes_from(box.id for box in boxes)
    if len(boxes) < 2:
        return g

    ids = [box.id for box in boxes]
    lo = np.array([[side.lo for side in box.sides] for box in boxes], dtype=object)
    hi = np.array([[side.hi for side in box.sides] for box in boxes], dtype=object)

    # overlap[u, v] - проекции u и v пересекаются на всех осях
    overlap = np.all((lo[:, None, :] < hi[None, :, :]) & (lo[None, :, :] < hi[:, None, :]), axis=2)
    us, vs = np.nonzero(np.triu(overlap, k=1))
    g.add_edges_from((ids[u], ids[v]) for u, v in zip(us.tolist(), vs.tolist()))
    logger.debug("Граф пересечений: %d вершин, %d рёбер", g.number_of_nodes(), g.number_of_edges())
    return g


def underlying(dg):
    """Неориентированный граф, получаемый забыванием направлений дуг"""
    return nx.Graph(dg)


def induced_digraph(dg, vertices):
    return dg.subgraph(vertices).copy()


def degeneracy_coloring(g, bound):
    """
    Жадная раскраска в обратном порядке удаления вершин минимальной степени.
    Возвращает None, если вырожденность графа >= bound (нет порядка, в котором
    у каждой вершины меньше bound более ранних соседей).
    """
    if g.is_directed():
        g = underlying(g)
    if g.number_of_nodes() == 0:
        return Coloring({}, 0)

    degeneracy = max(nx.core_number(g).values())
    if degeneracy >= bound:
        return None

    colors = nx.greedy_color(g, strategy="smallest_last")
    palette = max(colors.values()) + 1
    if palette > bound:
        # smallest_last даёт не более degeneracy + 1 цветов
        raise InternalError(f"жадная раскраска дала {palette} цветов при вырожденности {degeneracy}")
    return Coloring(dict(colors), palette)
