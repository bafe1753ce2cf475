"""Иерархия исключений проекта.

Каждый класс соответствует коду завершения CLI (см. AppConfig.EXIT_CODES).
"""


class BoxChiError(Exception):
    """Базовое исключение проекта"""


class InputError(BoxChiError):
    """Некорректные входные данные: файл, размерность, параметры генератора"""


class GeneralPositionError(InputError):
    """Общие концы интервалов там, где требуется нормализация"""


class OracleLimitError(BoxChiError):
    """Экземпляр превышает настроенный лимит точного оракула"""

    def __init__(self, oracle, size, limit):
        super().__init__(f"оракул {oracle}: размер {size} превышает лимит {limit}")
        self.oracle = oracle
        self.size = size
        self.limit = limit


class VerificationError(BoxChiError):
    """Сертификат не прошёл проверку; witness - нарушающее ребро или пара"""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(BoxChiError):
    """Нарушено документированное предусловие операции"""


class InternalError(BoxChiError):
    """Доказанное свойство нарушено во время работы - ошибка реализации"""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class HostGraphError(InternalError):
    """Вложение не path-induced: граф-носитель не скромный (modest)"""
