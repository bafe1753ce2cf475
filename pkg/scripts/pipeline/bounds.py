"""
Оценки хроматического числа: опубликованная формула (2rk^dω²)^(4^d) и
оценка, которую фактически гарантирует конвейер через поиск деревьев.
"""
from dataclasses import dataclass

from scripts.errors import InputError
from scripts.graphs.trees import trk_size


@dataclass(frozen=True)
class BoundReport:
    paper_bound: int
    derived_bound: int
    per_pattern_threshold: int
    tree_size: int


def chi_bound(d, r, k, omega):
    """
    paper_bound = (2·r·k^d·ω²)^(4^d);
    derived_bound = (2·r·|T_{r,k^d·ω}|·ω)^(4^d) - порог на паттерн из поиска
    path-induced дерева, возведённый в число паттернов.
    """
    for name, value in (("d", d), ("r", r), ("k", k), ("omega", omega)):
        if value < 1:
            raise InputError(f"{name} должно быть >= 1, получено {value}")
    patterns = 4 ** d
    tree_size = trk_size(r, k ** d * omega)
    threshold = 2 * r * tree_size * omega
    return BoundReport(
        paper_bound=(2 * r * k ** d * omega ** 2) ** patterns,
        derived_bound=threshold ** patterns,
        per_pattern_threshold=threshold,
        tree_size=tree_size,
    )


def eh_guarantee(n, omega, d):
    """Наименьшее s с s^d·ω >= n, то есть ceil((n/ω)^(1/d)) в целых числах"""
    if n <= 0:
        return 0
    s = 1
    while s ** d * omega < n:
        s += 1
    return s
