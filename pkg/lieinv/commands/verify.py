# lieinv/commands/verify.py

from pathlib import Path

import click

from lieinv.commands import grid_option, handle_errors, json_option
from lieinv.complex_structures import GRIDS
from lieinv.parsing import parse_params
from lieinv.report import write_json_lines, write_pdf, write_text
from lieinv.verify import exit_code, make_context, run_verification


@click.command("verify")
@click.option("--all", "run_all", is_flag=True, help="every catalog case on its parameter grid")
@click.option("--case", "case_ids", multiple=True, metavar="ID", help="restrict to these case ids (repeatable)")
@click.option("--params", "params_text", default=None, metavar="K=V,...", help="one parameter point (needs one --case)")
@json_option
@click.option("--strict", is_flag=True, help="PAPER_TYPO_SUSPECTED also fails the run")
@grid_option
@click.option("--pdf", "pdf_path", type=click.Path(dir_okay=False), default=None, help="also write a PDF summary")
@click.option("--verbose", "-v", is_flag=True, help="print the notes of every record")
@click.option("--progress/--no-progress", default=True, help="progress bar on stderr")
@handle_errors
def verify_cmd(run_all, case_ids, params_text, as_json, strict, grid_name, pdf_path, verbose, progress):
    """Recompute every table entry and report MATCH / MISMATCH / PAPER_TYPO_SUSPECTED / SKIPPED."""
    if run_all == bool(case_ids):
        raise click.UsageError("give --all or at least one --case")
    if params_text and len(case_ids) != 1:
        raise click.UsageError("--params needs exactly one --case")
    if grid_name and grid_name not in GRIDS:
        raise click.BadParameter(f"unknown grid {grid_name!r} (known: {', '.join(GRIDS)})", param_hint="--grid")

    ctx = make_context(grid=grid_name)
    params = parse_params(params_text) if params_text else None
    records = run_verification(list(case_ids) or None, params, ctx, progress=progress and not as_json)

    if as_json:
        write_json_lines(records)
    else:
        write_text(records, verbose=verbose)
    if pdf_path:
        write_pdf(records, Path(pdf_path))
    raise SystemExit(exit_code(records, strict))
