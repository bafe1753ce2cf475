"""
Классические алгоритмы на интервалах и конструктивное извлечение
независимого множества боксов рекурсией по осям.
"""
import heapq
import logging
from dataclasses import dataclass

from scripts.errors import InputError
from scripts.graphs.graph_core import Coloring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtractionResult:
    ids: tuple
    shortfall: bool = False


def interval_max_independent(items):
    """Наибольшее множество попарно непересекающихся интервалов: жадно по правому концу"""
    chosen, last_hi = [], None
    for box_id, iv in sorted(items, key=lambda item: (item[1].hi, item[0])):
        if last_hi is None or iv.lo >= last_hi:
            chosen.append(box_id)
            last_hi = iv.hi
    return chosen


def interval_max_clique(items):
    """Наибольшая клика интервального графа: точка максимального покрытия"""
    events = []
    for box_id, iv in items:
        events.append((iv.lo, 1, box_id))
        events.append((iv.hi, 0, box_id))
    # закрытие раньше открытия в той же точке: касание не считается пересечением
    events.sort()

    active, best = set(), []
    for _, is_open, box_id in events:
        if is_open:
            active.add(box_id)
            if len(active) > len(best):
                best = sorted(active)
        else:
            active.discard(box_id)
    return best


def _axis_items(boxes, axis):
    return [(box.id, box.sides[axis]) for box in boxes]


def _extract(boxes):
    d = boxes[0].d
    items = _axis_items(boxes, d - 1)
    independent = interval_max_independent(items)
    if d == 1:
        return independent

    # клика по последней оси: боксы X пересекаются по ней, независимость в проекции
    # на первые d-1 осей даёт независимость в G
    clique = set(interval_max_clique(items))
    projected = [box.restricted(range(d - 1)) for box in boxes if box.id in clique]
    recursive = _extract(projected)
    return independent if len(independent) >= len(recursive) else recursive


def extract_independent(boxes, target=None):
    """
    Извлекает независимое множество боксов размера не меньше ceil((n/ω)^(1/d))

    Берётся лучшее из двух: независимое множество интервалов по последней оси
    или рекурсия внутри наибольшей клики этой оси.

    Параметры:
        boxes (list[Box]): Непустой набор боксов
        target (int/None): Нужный размер; без него возвращается всё найденное

    Возвращает:
        ExtractionResult: Отсортированные id и флаг shortfall, если найдено меньше target
    """
    boxes = list(boxes)
    if not boxes:
        raise InputError("пустой набор боксов")
    ids = sorted(_extract(boxes))
    if target is None:
        return ExtractionResult(tuple(ids))
    if len(ids) >= target:
        return ExtractionResult(tuple(ids[:target]))
    logger.info("Извлечено %d независимых боксов из %d, нужно %d", len(ids), len(boxes), target)
    return ExtractionResult(tuple(ids), shortfall=True)


def interval_omega(boxes):
    if boxes and boxes[0].d != 1:
        raise InputError("interval_omega определена только для d = 1")
    return len(interval_max_clique(_axis_items(boxes, 0)))


def interval_coloring(boxes):
    """Жадная раскраска интервалов в порядке левых концов: ровно ω цветов"""
    boxes = list(boxes)
    if boxes and boxes[0].d != 1:
        raise InputError("interval_coloring определена только для d = 1")

    color, active, free, next_color = {}, [], [], 0
    for box in sorted(boxes, key=lambda b: (b.sides[0].lo, b.id)):
        iv = box.sides[0]
        while active and active[0][0] <= iv.lo:
            _, c = heapq.heappop(active)
            heapq.heappush(free, c)
        if free:
            c = heapq.heappop(free)
        else:
            c, next_color = next_color, next_color + 1
        color[box.id] = c
        heapq.heappush(active, (iv.hi, c))
    return Coloring(color, next_color)
