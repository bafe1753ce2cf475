"""
Чтение и запись файлов с боксами.

Текстовый формат: первая строка "d n", далее n строк по 2d чисел
"lo_1 hi_1 ... lo_d hi_d"; id бокса - номер строки с нуля.
JSON: {"boxes": [[[lo, hi], ...], ...]}.
"""
import json
import logging
from fractions import Fraction
from pathlib import Path

from scripts.errors import InputError
from scripts.geometry.boxes import make_box

logger = logging.getLogger(__name__)


def _number(token):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"'{token}' не является числом") from None


def _format_number(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_text(text):
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise InputError("пустой файл боксов")

    header = lines[0].split()
    if len(header) != 2:
        raise InputError(f"заголовок должен быть 'd n', получено '{lines[0]}'")
    try:
        d, n = int(header[0]), int(header[1])
    except ValueError:
        raise InputError(f"заголовок должен быть 'd n', получено '{lines[0]}'") from None
    if d < 1 or n < 1:
        raise InputError(f"некорректный заголовок: d={d}, n={n}")
    if len(lines) - 1 != n:
        raise InputError(f"ожидалось {n} строк с боксами, найдено {len(lines) - 1}")

    boxes = []
    for box_id, line in enumerate(lines[1:]):
        tokens = line.split()
        if len(tokens) != 2 * d:
            raise InputError(f"строка бокса {box_id}: ожидалось {2 * d} чисел, найдено {len(tokens)}")
        values = [_number(t) for t in tokens]
        boxes.append(make_box(box_id, list(zip(values[0::2], values[1::2]))))
    return boxes


def parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"некорректный JSON: {e}") from None
    entries = data.get("boxes") if isinstance(data, dict) else None
    if not entries:
        raise InputError("JSON должен содержать непустой ключ 'boxes'")

    boxes = []
    for box_id, entry in enumerate(entries):
        try:
            bounds = [(_number(str(lo)), _number(str(hi))) for lo, hi in entry]
        except (TypeError, ValueError):
            raise InputError(f"бокс {box_id}: ожидался список пар [lo, hi]") from None
        boxes.append(make_box(box_id, bounds))

    d = boxes[0].d
    if any(box.d != d for box in boxes):
        raise InputError("все боксы JSON должны иметь одинаковую размерность")
    return boxes


def parse_boxes(text):
    """Разбор текста в формате файла боксов или его JSON-зеркала"""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def read_boxes(path):
    """
    Чтение файла боксов (текстовый формат или JSON)

    Параметры:
        path (str/Path): Путь к файлу

    Возвращает:
        list[Box]: Боксы с id по порядку строк, без нормализации
    """
    path = Path(path)
    # Чтение файла целиком
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"не удалось прочитать {path}: {e}") from None
    boxes = parse_boxes(text)
    logger.info("Загружено %d боксов размерности %d из %s", len(boxes), boxes[0].d, path)
    return boxes


def format_boxes(boxes):
    boxes = sorted(boxes, key=lambda b: b.id)
    lines = [f"{boxes[0].d} {len(boxes)}"]
    for box in boxes:
        lines.append(" ".join(
            f"{_format_number(side.lo)} {_format_number(side.hi)}" for side in box.sides
        ))
    return "\n".join(lines) + "\n"


def write_boxes(path, boxes):
    Path(path).write_text(format_boxes(boxes), encoding="utf-8")
    logger.info("Боксы сохранены в %s", path)
