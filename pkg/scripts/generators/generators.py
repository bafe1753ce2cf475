"""
Генераторы наборов боксов для тестов и нагрузочных прогонов.

Семейства:
    uniform-random - концы независимы и равномерны на малом целом отрезке
                     (совпадения концов нарочно часты), затем нормализация;
    nested-chain   - n строго вложенных боксов, граф - клика K_n;
    grid-disjoint  - попарно непересекающиеся боксы в узлах решётки;
    burling-like   - рекурсивная конструкция в R^3 без треугольников.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from scripts.config import AppConfig
from scripts.errors import InputError
from scripts.geometry.boxes import make_box, normalize

logger = logging.getLogger(__name__)

SEED_BOUND = 2 ** 64


@dataclass(frozen=True)
class GenSpec:
    n: int
    d: int
    seed: int = 0
    family: str = "uniform-random"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in AppConfig.FAMILIES:
            raise InputError(f"неизвестное семейство '{self.family}', доступны: {', '.join(AppConfig.FAMILIES)}")
        if self.d < 1:
            raise InputError(f"размерность должна быть >= 1, получено {self.d}")
        if self.n < 1:
            raise InputError(f"число боксов должно быть >= 1, получено {self.n}")
        if not 0 <= self.seed < SEED_BOUND:
            raise InputError(f"seed должен быть 64-битным неотрицательным числом, получено {self.seed}")


def _uniform_random(spec):
    span = spec.params.get("span", 2 * spec.n)
    if span < 1:
        raise InputError(f"span должен быть >= 1, получено {span}")
    rng = np.random.default_rng(spec.seed)
    ends = np.sort(rng.integers(0, span + 1, size=(spec.n, spec.d, 2)), axis=2)
    return [make_box(i, ends[i].tolist()) for i in range(spec.n)]


def _nested_chain(spec):
    n = spec.n
    return [make_box(i, [(i, 2 * n - i)] * spec.d) for i in range(n)]


def _grid_disjoint(spec):
    side = 1
    while side ** spec.d < spec.n:
        side += 1
    boxes = []
    for i in range(spec.n):
        digits, rest = [], i
        for _ in range(spec.d):
            rest, c = divmod(rest, side)
            digits.append(c)
        boxes.append(make_box(i, [(3 * c, 3 * c + 1) for c in digits]))
    return boxes


def burling_size(level):
    """Число боксов burling-like уровня level: 1, 7, 51, 1123, ..."""
    boxes, probes = 1, 2
    for _ in range(level):
        boxes, probes = boxes + probes * boxes + probes * probes, probes * probes
    return boxes


def _scale(interval, target):
    """Образ interval из [0, 1] (или [0, W] по x) при аффинном переносе target = (lo, scale)"""
    lo, scale = target
    return (lo + interval[0] * scale, lo + interval[1] * scale)


def _burling_state(level):
    """
    Состояние: боксы (списки сторон по x, y, z), зонды (сечения (y, z)) и ширина W.
    Боксы лежат в x ∈ [0, W-1], зонды тянутся по x ∈ [0, W]; каждый бокс либо
    содержит сечение зонда, либо отделён от него зазором.
    """
    one, tenth = Fraction(1), Fraction(1, 10)
    boxes = [[(0, one), (0, one), (0, one)]]
    probes = [
        ((tenth, 4 * tenth), (tenth, 4 * tenth)),
        ((6 * tenth, 9 * tenth), (6 * tenth, 9 * tenth)),
    ]
    width = Fraction(2)

    for _ in range(level):
        new_boxes, new_probes = list(boxes), []
        x_target = (width - Fraction(1, 2), Fraction(1, 2) / width)
        for py, pz in probes:
            y_target, z_target = (py[0], py[1] - py[0]), (pz[0], pz[1] - pz[0])
            for x, y, z in boxes:
                new_boxes.append([_scale(x, x_target), _scale(y, y_target), _scale(z, z_target)])
            for qy, qz in probes:
                a, b = _scale(qy, y_target)
                z = _scale(qz, z_target)
                # новый бокс видит ровно то, что видели внешний и внутренний зонды
                new_boxes.append([(0, width), (a, a + Fraction(2, 5) * (b - a)), z])
                new_probes.append(((a + Fraction(3, 5) * (b - a), b), z))
        boxes, probes, width = new_boxes, new_probes, width + 1
    return boxes


def _burling_like(spec):
    if spec.d != 3:
        raise InputError(f"burling-like строится только в R^3, получено d={spec.d}")
    level = spec.params.get("level")
    if level is None:
        level = 0
        while level < AppConfig.BURLING_MAX_LEVEL and burling_size(level + 1) <= spec.n:
            level += 1
    if not 0 <= level <= AppConfig.BURLING_MAX_LEVEL:
        raise InputError(f"уровень burling-like должен быть от 0 до {AppConfig.BURLING_MAX_LEVEL}, получено {level}")
    return [make_box(i, sides) for i, sides in enumerate(_burling_state(level))]


FAMILY_BUILDERS = {
    "uniform-random": _uniform_random,
    "nested-chain": _nested_chain,
    "grid-disjoint": _grid_disjoint,
    "burling-like": _burling_like,
}


def generate(spec):
    """Нормализованные боксы семейства spec.family; результат детерминирован по (seed, spec)"""
    boxes = normalize(FAMILY_BUILDERS[spec.family](spec))
    logger.info("Сгенерировано %d боксов семейства %s (d=%d, seed=%d)",
                len(boxes), spec.family, boxes[0].d, spec.seed)
    return boxes
