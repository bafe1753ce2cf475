"""
Боксы, интервалы, проекции и типы пересечения интервалов.

Координаты хранятся точно (int или Fraction). После normalize() все концы
на каждой оси - попарно различные целые ранги 0..2n-1.
"""
import itertools
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

from scripts.errors import GeneralPositionError, InputError


class OverlapType(IntEnum):
    """Тип пересечения интервала I_1 относительно I_2"""
    CONTAINS = 0
    CONTAINED = 1
    LEFT = 2
    RIGHT = 3
    DISJOINT = 4

    @property
    def code(self):
        return _CODES[self]

    def mirror(self):
        return _MIRROR[self]


_CODES = {
    OverlapType.CONTAINS: "C",
    OverlapType.CONTAINED: "c",
    OverlapType.LEFT: "L",
    OverlapType.RIGHT: "R",
    OverlapType.DISJOINT: "-",
}

_MIRROR = {
    OverlapType.CONTAINS: OverlapType.CONTAINED,
    OverlapType.CONTAINED: OverlapType.CONTAINS,
    OverlapType.LEFT: OverlapType.RIGHT,
    OverlapType.RIGHT: OverlapType.LEFT,
    OverlapType.DISJOINT: OverlapType.DISJOINT,
}

INTERSECTING_TYPES = (
    OverlapType.CONTAINS,
    OverlapType.CONTAINED,
    OverlapType.LEFT,
    OverlapType.RIGHT,
)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.hi < self.lo:
            raise InputError(f"пустой интервал [{self.lo}, {self.hi}]")

    def overlaps(self, other):
        # пересечение внутренностей; для нормализованных концов совпадает с пересечением
        return self.lo < other.hi and other.lo < self.hi


@dataclass(frozen=True)
class Box:
    id: int
    sides: tuple

    def __post_init__(self):
        if len(self.sides) < 1:
            raise InputError(f"бокс {self.id}: размерность должна быть >= 1")
        object.__setattr__(self, "sides", tuple(self.sides))

    @property
    def d(self):
        return len(self.sides)

    def restricted(self, axes):
        """Проекция на подпространство, натянутое на оси axes"""
        return Box(self.id, tuple(self.sides[a] for a in axes))


@dataclass(frozen=True, order=True)
class Pattern:
    """Паттерн пересечения: d-кортеж типов пересечения по осям"""
    coords: tuple

    def __post_init__(self):
        if not self.coords:
            raise InputError("паттерн должен иметь хотя бы одну координату")
        if any(c == OverlapType.DISJOINT for c in self.coords):
            raise InputError("паттерн состоит только из типов пересекающихся интервалов")
        object.__setattr__(self, "coords", tuple(OverlapType(c) for c in self.coords))

    @property
    def d(self):
        return len(self.coords)

    @property
    def label(self):
        return "".join(c.code for c in self.coords)

    @classmethod
    def from_label(cls, label):
        lookup = {code: t for t, code in _CODES.items() if t != OverlapType.DISJOINT}
        try:
            return cls(tuple(lookup[ch] for ch in label))
        except KeyError:
            raise InputError(f"неизвестный паттерн '{label}'") from None

    def mirror(self):
        return mirror(self)

    def __str__(self):
        return self.label


def mirror(p):
    """Зеркальный паттерн: Contains<->Contained, Left<->Right по каждой координате"""
    return Pattern(tuple(c.mirror() for c in p.coords))


def all_patterns(d):
    """Все 4^d паттернов в каноническом порядке"""
    if d < 1:
        raise InputError(f"размерность должна быть >= 1, получено {d}")
    return [Pattern(coords) for coords in itertools.product(INTERSECTING_TYPES, repeat=d)]


def _check_dimensions(boxes):
    if not boxes:
        raise InputError("пустой набор боксов")
    d = boxes[0].d
    if len({box.id for box in boxes}) != len(boxes):
        raise InputError("идентификаторы боксов должны быть уникальны")
    for box in boxes:
        if box.d != d:
            raise InputError(f"бокс {box.id}: размерность {box.d}, ожидалась {d}")
    return d


def normalize(boxes):
    """
    Приводит боксы к общему положению заменой концов на ранги.

    На каждой оси 2n концов сортируются по (значение, id бокса, lo раньше hi)
    и заменяются номерами 0..2n-1. Порядок строго сохраняется там, где концы
    уже были различны; вырожденные интервалы получают lo < hi.
    """
    boxes = list(boxes)
    d = _check_dimensions(boxes)

    ranked = [[None] * d for _ in boxes]
    for axis in range(d):
        endpoints = []
        for pos, box in enumerate(boxes):
            side = box.sides[axis]
            endpoints.append((side.lo, box.id, 0, pos))
            endpoints.append((side.hi, box.id, 1, pos))
        endpoints.sort(key=lambda e: (e[0], e[1], e[2]))

        ranks = {}
        for rank, (_, _, kind, pos) in enumerate(endpoints):
            ranks[(pos, kind)] = rank
        for pos in range(len(boxes)):
            ranked[pos][axis] = Interval(ranks[(pos, 0)], ranks[(pos, 1)])

    return [Box(box.id, tuple(sides)) for box, sides in zip(boxes, ranked)]


def classify_overlap(a, b):
    """
    Тип пересечения интервала a относительно b (строгие неравенства).
    Возвращает OverlapType.DISJOINT для непересекающихся интервалов.
    """
    if len({a.lo, a.hi, b.lo, b.hi}) != 4:
        raise GeneralPositionError(f"интервалы {a} и {b} имеют общий конец: нужна нормализация")

    if a.hi < b.lo or b.hi < a.lo:
        return OverlapType.DISJOINT
    if a.lo < b.lo:
        return OverlapType.CONTAINS if b.hi < a.hi else OverlapType.LEFT
    return OverlapType.CONTAINED if a.hi < b.hi else OverlapType.RIGHT


def intersection_pattern(b1, b2):
    """Паттерн пересечения b1 относительно b2 или None, если боксы не пересекаются"""
    if b1.d != b2.d:
        raise InputError(f"боксы {b1.id} и {b2.id} разной размерности")
    coords = []
    for a, b in zip(b1.sides, b2.sides):
        kind = classify_overlap(a, b)
        if kind == OverlapType.DISJOINT:
            return None
        coords.append(kind)
    return Pattern(tuple(coords))


def boxes_intersect(b1, b2):
    """Прямая проверка пересечения по координатам всех осей"""
    return all(a.overlaps(b) for a, b in zip(b1.sides, b2.sides))


def make_box(box_id, bounds):
    """Бокс из списка пар (lo, hi); числа приводятся к Fraction"""
    return Box(box_id, tuple(Interval(Fraction(lo), Fraction(hi)) for lo, hi in bounds))

