# lieinv/commands/catalog.py

import click

from lieinv.catalog import CASE_IDS, LABEL_ALIASES, case_config, default_grid, format_params
from lieinv.commands import emit_json, handle_errors, json_option
from lieinv.report import format_table


@click.command("catalog")
@json_option
@click.option("--aliases", is_flag=True, help="also list the table labels and the cases they resolve to")
@handle_errors
def catalog_cmd(as_json: bool, aliases: bool):
    """List the catalog cases with their parameter ranges and derived algebras."""
    rows = []
    for case_id in CASE_IDS:
        cfg = case_config(case_id)
        grid = [format_params(p) for p in default_grid(case_id)]
        if as_json:
            emit_json({
                "case": case_id,
                "label": cfg["label"],
                "params": cfg["params"],
                "ranges": cfg["ranges"],
                "derived": cfg["derived_text"],
                "grid": grid,
                "note": cfg["note"],
            })
            continue
        rows.append([case_id, cfg["label"], ",".join(cfg["params"]) or "-", cfg["ranges"] or "-",
                     cfg["derived_text"], str(len(grid)), cfg["note"]])
    if not as_json:
        for line in format_table(rows, ["case", "label", "params", "ranges", "g'", "samples", "note"]):
            click.echo(line)
    if aliases:
        for label, (case_id, fixed) in LABEL_ALIASES.items():
            fixed_text = format_params(fixed)
            if as_json:
                emit_json({"alias": label, "case": case_id, "params": fixed_text})
            else:
                click.echo(f"{label:>12} -> {case_id}" + (f" [{fixed_text}]" if fixed_text else ""))
