import argparse
import csv
import sys
from pathlib import Path
from typing import NoReturn, Optional, Sequence

from pydantic import ValidationError

from core import settings
from core.exceptions import (
    CorpusIoError,
    MetadataError,
    ReleaseError,
    StatsError,
    StrictModeError,
)
from infrastructure.schemas.release import ReleaseConfig
from services.loggs import logg_error_data, logger
from services.release import (
    build_release,
    compute_stats,
    format_stats,
    stats_rows,
    validate_input,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class CliParser(argparse.ArgumentParser):
    """Парсер аргументов, завершающийся с кодом 1 при ошибке использования."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: ошибка: {message}\n")


def make_parser() -> CliParser:
    """Создает парсер команд validate, build и stats."""
    parser = CliParser(
        prog=settings.PROG_NAME,
        description="Сборка релизов корпуса воспроизведенных диалогов.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="Проверить входной корпус.")
    validate.add_argument("input", type=Path, help="Входная директория корпуса.")
    validate.add_argument("--report", type=Path, help="CSV отчет диагностик.")
    validate.add_argument(
        "--strict",
        action="store_true",
        help="Код выхода 2, если найдена хотя бы одна диагностика.",
    )

    build = commands.add_parser("build", help="Собрать релиз корпуса.")
    build.add_argument("input", type=Path, help="Входная директория корпуса.")
    build.add_argument("output", type=Path, help="Пустая директория релиза.")
    build.add_argument("--report", type=Path, help="CSV отчет диагностик.")
    build.add_argument(
        "--strict",
        action="store_true",
        help="Не собирать релиз, если найдена хотя бы одна диагностика.",
    )
    build.add_argument(
        "--workers",
        type=int,
        default=settings.RELEASE.WORKERS,
        help="Число параллельных задач сборки.",
    )

    stats = commands.add_parser("stats", help="Статистика собранного релиза.")
    stats.add_argument("release", type=Path, help="Директория релиза.")
    stats.add_argument("--csv", action="store_true", help="Вывод в формате CSV.")
    return parser


def run_validate(args: argparse.Namespace) -> int:
    """Команда validate: печатает отчет, корпус не изменяется."""
    checked = validate_input(args.input, args.report)
    if args.strict and not checked.report.is_clean:
        logger.error(
            "Строгий режим: найдено диагностик %s", len(checked.report.diagnostics)
        )
        return EXIT_FAILURE
    return EXIT_OK


def run_build(args: argparse.Namespace) -> int:
    """Команда build.

    :raises StrictModeError: В строгом режиме найдены диагностики.
    """
    try:
        cfg = ReleaseConfig(
            input_dir=args.input,
            output_dir=args.output,
            strict=args.strict,
            report_path=args.report,
            workers=args.workers,
        )
    except ValidationError as e:
        logger.error(msg="Неверные параметры сборки.", extra=logg_error_data(e))
        return EXIT_USAGE
    build_release(cfg)
    return EXIT_OK


def run_stats(args: argparse.Namespace) -> int:
    """Команда stats: статистика релиза в stdout."""
    stats = compute_stats(args.release)
    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(("metric", "value"))
        writer.writerows(stats_rows(stats))
    else:
        sys.stdout.write(format_stats(stats) + "\n")
    return EXIT_OK


COMMANDS = {
    "validate": run_validate,
    "build": run_build,
    "stats": run_stats,
}


def cli(argv: Optional[Sequence[str]] = None) -> int:
    """Точка входа командной строки.

    :param argv: Аргументы без имени программы; по умолчанию sys.argv.
    :return: 0 - успех, 1 - ошибка использования, 2 - диагностики в
        строгом режиме или ошибка ввода-вывода.
    """
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except StrictModeError:
        return EXIT_FAILURE
    except (MetadataError, CorpusIoError, ReleaseError, StatsError, OSError) as e:
        logger.error(
            msg=f"Команда {args.command} не выполнена.", extra=logg_error_data(e)
        )
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(cli())
