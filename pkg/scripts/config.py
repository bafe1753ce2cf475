import os
from dataclasses import dataclass, fields

from scripts.errors import InputError


class AppConfig:
    """Конфигурация приложения"""
    ENV_LIMITS = "BOXCHI_ORACLE_LIMITS"

    # Лимиты точных оракулов (число вершин)
    OMEGA_LIMIT = 40
    ALPHA_LIMIT = 40
    CHI_LIMIT = 20
    INDUCED_COPY_LIMIT = 16
    BASIC_LIMIT = 14
    TREE_LIMIT = 5000

    FAMILIES = ["uniform-random", "nested-chain", "grid-disjoint", "burling-like"]
    BURLING_MAX_LEVEL = 3
    ORACLE_STATS = ["chi", "omega", "alpha", "ehcheck"]

    EXIT_CODES = {
        "ok": 0,
        "error": 1,
        "input": 2,
        "induced_tree": 3,
        "oracle_limit": 4,
        "verification": 5,
    }


@dataclass(frozen=True)
class OracleLimits:
    """Лимиты оракулов; превышение - всегда явный отказ, не приближение"""
    omega: int = AppConfig.OMEGA_LIMIT
    alpha: int = AppConfig.ALPHA_LIMIT
    chi: int = AppConfig.CHI_LIMIT
    induced_copy: int = AppConfig.INDUCED_COPY_LIMIT
    basic: int = AppConfig.BASIC_LIMIT
    tree: int = AppConfig.TREE_LIMIT

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value <= 0:
                raise InputError(f"лимит {f.name} должен быть положительным целым, получено {value!r}")

    @classmethod
    def from_env(cls, environ=None, **overrides):
        """
        Читает лимиты из переменной окружения BOXCHI_ORACLE_LIMITS
        ("omega=40,chi=20,...") и накладывает явные значения overrides (флаги CLI)
        """
        environ = os.environ if environ is None else environ
        known = {f.name for f in fields(cls)}
        values = {}

        raw = environ.get(AppConfig.ENV_LIMITS, "").strip()
        if raw:
            for item in raw.split(","):
                key, sep, value = item.partition("=")
                key = key.strip()
                if not sep or key not in known:
                    raise InputError(f"{AppConfig.ENV_LIMITS}: неизвестный элемент '{item}'")
                try:
                    values[key] = int(value)
                except ValueError:
                    raise InputError(f"{AppConfig.ENV_LIMITS}: '{value}' не целое число") from None

        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


DEFAULT_LIMITS = OracleLimits()


def resolve_limits(limits):
    return DEFAULT_LIMITS if limits is None else limits
