# lieinv/main.py

import logging

import click

from lieinv import __version__
from lieinv.config import get_settings, setup_logging
from lieinv.errors import EXIT_USAGE, ConfigError

# 🔹 서브커맨드들
from lieinv.commands.catalog import catalog_cmd
from lieinv.commands.cohomology import cohomology_cmd
from lieinv.commands.complex import complex_cmd
from lieinv.commands.kahler import kahler_cmd
from lieinv.commands.symplectic import symplectic_cmd
from lieinv.commands.verify import verify_cmd

log = logging.getLogger("lieinv.main")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


# =========================
# 그룹
# =========================
@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="lieinv")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help="override LIEINV_LOG_LEVEL")
def cli(log_level):
    """Invariant structures on four-dimensional real solvable Lie algebras, recomputed exactly."""
    try:
        get_settings()
    except ConfigError as e:
        click.echo(f"error: {e}", err=True)
        raise SystemExit(EXIT_USAGE)
    setup_logging(log_level)
    log.debug("lieinv %s started", __version__)


# =========================
# 서브커맨드 등록
# =========================
cli.add_command(catalog_cmd)
cli.add_command(cohomology_cmd)
cli.add_command(complex_cmd)
cli.add_command(symplectic_cmd)
cli.add_command(kahler_cmd)
cli.add_command(verify_cmd)


def main():
    cli(prog_name="lieinv")


if __name__ == "__main__":
    main()
