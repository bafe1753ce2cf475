import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

import networkx as nx
import pandas as pd

from scripts.config import AppConfig, OracleLimits
from scripts.errors import BoxChiError, InputError, OracleLimitError, VerificationError
from scripts.generators.generators import GenSpec, generate
from scripts.geometry.box_io import format_boxes, read_boxes
from scripts.geometry.boxes import normalize
from scripts.graphs import oracles
from scripts.graphs.graph_core import intersection_graph
from scripts.patterns.decomposition import BasicReport, decompose, verify_basic
from scripts.pipeline.bounds import chi_bound
from scripts.pipeline.certificates import (
    certificate_from_json,
    certificate_to_json,
    certificate_violations,
)
from scripts.pipeline.chi_pipeline import color_or_find_forest

logger = logging.getLogger("boxchi")


@dataclass(frozen=True)
class RunConfig:
    """Параметры запуска, собранные из аргументов командной строки"""
    command: str
    limits: OracleLimits
    input: str = None
    output: str = None
    certificate: str = None
    threads: int = 1
    seed: int = 0
    n: int = 10
    d: int = 2
    family: str = "uniform-random"
    level: int = None
    r: int = 1
    k: int = 1
    omega: int = None
    stat: str = None

    def __post_init__(self):
        if self.r < 0:
            raise InputError(f"--r должно быть >= 0, получено {self.r}")
        if self.k < 1:
            raise InputError(f"--k должно быть >= 1, получено {self.k}")
        if self.threads < 1:
            raise InputError(f"--threads должно быть >= 1, получено {self.threads}")

    @classmethod
    def from_args(cls, args):
        limits = OracleLimits.from_env(
            omega=args.omega_limit,
            alpha=args.alpha_limit,
            chi=args.chi_limit,
            basic=args.basic_limit,
        )
        values = {name: getattr(args, name) for name in (
            "input", "output", "certificate", "threads", "seed", "n", "d",
            "family", "level", "r", "k", "omega", "stat",
        ) if getattr(args, name, None) is not None}
        return cls(command=args.command, limits=limits, **values)


def _load_boxes(path):
    return normalize(read_boxes(path))


def _emit(text, output):
    """Запись результата в файл или в stdout"""
    if output:
        Path(output).write_text(text, encoding="utf-8")
        return sys.stdout
    sys.stdout.write(text)
    return sys.stderr


class CommandRunner:
    """Подкоманды CLI; каждая возвращает код завершения"""

    @staticmethod
    def cmd_gen(config):
        """Генерация набора боксов в формате файла боксов"""
        params = {} if config.level is None else {"level": config.level}
        spec = GenSpec(n=config.n, d=config.d, seed=config.seed, family=config.family, params=params)
        boxes = generate(spec)
        summary = _emit(format_boxes(boxes), config.output)
        if config.output:
            print(f"Сохранено {len(boxes)} боксов в {config.output}", file=summary)
        return AppConfig.EXIT_CODES["ok"]

    @staticmethod
    def cmd_decompose(config):
        """Таблица паттернов: число дуг и свойства ацикличности, скромности, расхождения"""
        boxes = _load_boxes(config.input)
        g = intersection_graph(boxes)
        rows, limited = [], False
        for item in decompose(boxes):
            try:
                report = verify_basic(item, g, config.limits)
            except OracleLimitError:
                limited = True
                report = BasicReport(acyclic=nx.is_directed_acyclic_graph(item.digraph))
            rows.append({
                "pattern": item.pattern.label,
                "arcs": item.arc_count,
                "acyclic": report.acyclic,
                "modest": "-" if report.modest is None else report.modest,
                "divergent": "-" if report.divergent is None else report.divergent,
            })

        table = pd.DataFrame(rows, columns=["pattern", "arcs", "acyclic", "modest", "divergent"])
        print(table.to_string(index=False))
        if limited:
            print(f"Внимание: n={len(boxes)} больше лимита basic={config.limits.basic}, "
                  f"проверена только ацикличность")
        if config.output:
            table.to_csv(config.output, index=False, sep=";")
            print(f"Таблица сохранена в {config.output}")
        return AppConfig.EXIT_CODES["ok"]

    @staticmethod
    def cmd_color(config):
        """Раскраска в пределах оценки или индуцированное дерево T_{r,k}"""
        boxes = _load_boxes(config.input)
        cert = color_or_find_forest(boxes, config.r, config.k, omega=config.omega,
                                    threads=config.threads, limits=config.limits)
        summary = _emit(certificate_to_json(cert), config.output)

        if cert.kind == "coloring":
            print(f"kind=coloring palette={cert.coloring.palette_size} omega={cert.omega}", file=summary)
            print(f"paper_bound={cert.paper_bound}", file=summary)
            print(f"derived_bound={cert.bound}", file=summary)
            return AppConfig.EXIT_CODES["ok"]

        print(f"kind=induced_tree r={cert.r} k={cert.k} tree_size={cert.tree.n} omega={cert.omega}",
              file=summary)
        if cert.r >= 1 and cert.omega is not None:
            report = chi_bound(boxes[0].d, cert.r, cert.k, cert.omega)
            print(f"paper_bound={report.paper_bound}", file=summary)
            print(f"derived_bound={report.derived_bound}", file=summary)
        return AppConfig.EXIT_CODES["induced_tree"]

    @staticmethod
    def cmd_verify(config):
        """Проверка сертификата на наборе боксов"""
        boxes = _load_boxes(config.input)
        try:
            text = Path(config.certificate).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise InputError(f"не удалось прочитать {config.certificate}: {e}") from None
        cert = certificate_from_json(text)

        problems = certificate_violations(intersection_graph(boxes), cert)
        if not problems:
            print(f"PASS: сертификат {cert.kind} корректен")
            return AppConfig.EXIT_CODES["ok"]
        for problem in problems:
            print(f"FAIL: {problem.message}")
        return AppConfig.EXIT_CODES["verification"]

    @staticmethod
    def cmd_oracle(config):
        """Точные значения χ, ω, α и проверка n <= α^d·ω"""
        boxes = _load_boxes(config.input)
        g = intersection_graph(boxes)
        if config.stat == "chi":
            print(oracles.chi(g, config.limits))
        elif config.stat == "omega":
            print(oracles.omega(g, config.limits))
        elif config.stat == "alpha":
            print(oracles.alpha(g, config.limits))
        else:
            n, d = len(boxes), boxes[0].d
            value = oracles.alpha(g, config.limits) ** d * oracles.omega(g, config.limits)
            verdict = "pass" if n <= value else "fail"
            print(f"n={n} alpha^d*omega={value} {n} <= {value}: {verdict}")
            if verdict == "fail":
                return AppConfig.EXIT_CODES["verification"]
        return AppConfig.EXIT_CODES["ok"]


COMMANDS = {
    "gen": CommandRunner.cmd_gen,
    "decompose": CommandRunner.cmd_decompose,
    "color": CommandRunner.cmd_color,
    "verify": CommandRunner.cmd_verify,
    "oracle": CommandRunner.cmd_oracle,
}


def parse_arguments(argv=None):
    """Парсинг аргументов командной строки"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="Подробный журнал (DEBUG)")
    common.add_argument("--omega-limit", type=int, help="Лимит оракула ω (число вершин)")
    common.add_argument("--alpha-limit", type=int, help="Лимит оракула α (число вершин)")
    common.add_argument("--chi-limit", type=int, help="Лимит оракула χ (число вершин)")
    common.add_argument("--basic-limit", type=int, help="Лимит проверки скромности и расхождения")

    parser = argparse.ArgumentParser(description="χ-ограниченность графов пересечений боксов")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="Сгенерировать набор боксов")
    gen.add_argument("--family", choices=AppConfig.FAMILIES, default="uniform-random")
    gen.add_argument("--n", type=int, default=10, help="Число боксов")
    gen.add_argument("--d", type=int, default=2, help="Размерность")
    gen.add_argument("--seed", type=int, default=0, help="Зерно генератора")
    gen.add_argument("--level", type=int, help="Уровень burling-like (по умолчанию по --n)")
    gen.add_argument("--out", dest="output", help="Файл результата (по умолчанию stdout)")

    dec = sub.add_parser("decompose", parents=[common], help="Разложение по паттернам пересечения")
    dec.add_argument("input", help="Файл боксов")
    dec.add_argument("--out", dest="output", help="CSV с таблицей паттернов")

    color = sub.add_parser("color", parents=[common], help="Раскраска или индуцированное дерево T_{r,k}")
    color.add_argument("input", help="Файл боксов")
    color.add_argument("--r", type=int, default=1, help="Глубина дерева T_{r,k}")
    color.add_argument("--k", type=int, default=1, help="Ветвление дерева T_{r,k}")
    color.add_argument("--threads", type=int, default=1, help="Потоки для обработки паттернов")
    color.add_argument("--omega", type=int, help="Верхняя оценка ω вместо точного оракула")
    color.add_argument("--out", dest="output", help="Файл сертификата (по умолчанию stdout)")

    verify = sub.add_parser("verify", parents=[common], help="Проверить сертификат")
    verify.add_argument("input", help="Файл боксов")
    verify.add_argument("certificate", help="JSON сертификата")

    oracle = sub.add_parser("oracle", parents=[common], help="Точные χ, ω, α или проверка n <= α^d·ω")
    oracle.add_argument("input", help="Файл боксов")
    oracle.add_argument("--stat", choices=AppConfig.ORACLE_STATS, required=True)

    return parser.parse_args(argv)


def run(argv=None):
    """Запуск подкоманды; возвращает код завершения"""
    args = parse_arguments(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        config = RunConfig.from_args(args)
        return COMMANDS[config.command](config)
    except InputError as e:
        print(f"Ошибка входных данных: {e}", file=sys.stderr)
        return AppConfig.EXIT_CODES["input"]
    except OracleLimitError as e:
        print(f"Отказ оракула: {e}", file=sys.stderr)
        return AppConfig.EXIT_CODES["oracle_limit"]
    except VerificationError as e:
        print(f"Проверка не пройдена: {e}", file=sys.stderr)
        return AppConfig.EXIT_CODES["verification"]
    except BoxChiError as e:
        logger.error("Внутренняя ошибка: %s (witness=%s)", e, getattr(e, "witness", None))
        print(f"Ошибка: {e}", file=sys.stderr)
        return AppConfig.EXIT_CODES["error"]


def main():
    """Точка входа в приложение"""
    sys.exit(run())


if __name__ == "__main__":
    main()
