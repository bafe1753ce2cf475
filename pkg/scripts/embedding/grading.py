"""
Градуировки ориентированных графов и их построение отслаиванием вершин
малой полустепени исхода.
"""
import logging
from dataclasses import dataclass

from scripts.errors import InputError, InternalError
from scripts.graphs.graph_core import Coloring, degeneracy_coloring, induced_digraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Grading:
    """
    (k,m)-градуировка X_1 ⊆ ... ⊆ X_m = V: у каждой v из X_i (i < m)
    не меньше k out-соседей в X_{i+1}
    """
    levels: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(frozenset(x) for x in self.levels))
        if not self.levels or not self.levels[0]:
            raise InputError("X_1 должно быть непустым")
        for inner, outer in zip(self.levels, self.levels[1:]):
            if not inner <= outer:
                raise InputError("уровни градуировки должны быть вложены")

    @property
    def m(self):
        return len(self.levels)

    def g(self, v):
        """Уровень вершины: минимальное i (с единицы), для которого v ∈ X_i"""
        for i, level in enumerate(self.levels, start=1):
            if v in level:
                return i
        raise KeyError(v)

    def level_map(self):
        return {v: self.g(v) for v in self.levels[-1]}

    def violations(self, dg):
        """Нарушения определения градуировки для графа dg (пустой список - всё верно)"""
        problems = []
        if self.levels[-1] != frozenset(dg.nodes):
            problems.append("X_m не совпадает с множеством вершин")
        for i in range(self.m - 1):
            nxt = self.levels[i + 1]
            for v in sorted(self.levels[i]):
                count = sum(1 for w in dg.successors(v) if w in nxt) if v in dg else 0
                if count < self.k:
                    problems.append(f"вершина {v} уровня X_{i + 1}: {count} < {self.k} out-соседей в X_{i + 2}")
        return problems


@dataclass(frozen=True)
class LayeredColoring:
    """Слои L_1..L_{m-1}, в каждом полустепень исхода <= k-1, и раскраска с раздельными палитрами"""
    layers: tuple
    coloring: Coloring


def peel_grading(dg, k, m):
    """
    Отслаивание: Z_1 = V, L_i - вершины с полустепенью исхода <= k-1 в dg[Z_i],
    Z_{i+1} = Z_i \\ L_i для i = 1..m-1. Непустое Z_m даёт градуировку
    X_i = Z_{m-i+1}; иначе каждый слой красится жадно не более чем в 2k-1 цветов
    на собственной палитре.
    """
    if k < 1 or m < 1:
        raise InputError(f"нужно k >= 1 и m >= 1, получено k={k}, m={m}")

    survivors = [frozenset(dg.nodes)]
    layers = []
    for _ in range(m - 1):
        z = survivors[-1]
        sub = induced_digraph(dg, z)
        layer = frozenset(v for v in z if sub.out_degree(v) <= k - 1)
        layers.append(layer)
        survivors.append(z - layer)

    if survivors[-1]:
        logger.debug("Градуировка: k=%d, m=%d, |X_1|=%d", k, m, len(survivors[-1]))
        return Grading(tuple(reversed(survivors)), k)

    color, offset = {}, 0
    for layer in layers:
        part = degeneracy_coloring(induced_digraph(dg, layer), 2 * k - 1)
        if part is None:
            raise InternalError("слой с полустепенью исхода <= k-1 должен быть (2k-2)-вырожден")
        for v, c in part.color.items():
            color[v] = offset + c
        offset += part.palette_size
    logger.debug("Раскраска по слоям: k=%d, m=%d, %d цветов", k, m, offset)
    return LayeredColoring(tuple(layers), Coloring(color, offset))
