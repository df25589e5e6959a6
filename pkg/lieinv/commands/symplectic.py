# lieinv/commands/symplectic.py

import click

from lieinv.commands import (
    case_option,
    emit_json,
    file_option,
    handle_errors,
    json_option,
    load_algebra,
    params_option,
)
from lieinv.forms import is_closed
from lieinv.linalg import format_scalar
from lieinv.parsing import parse_form
from lieinv.symplectic import (
    exact_symplectic_family,
    gram_nondegenerate,
    pfaffian,
    symplectic_exists,
)


def _decision_data(decision) -> dict:
    fam = decision.family
    return {
        "dimension": fam.dimension,
        "basis": [str(b) for b in fam.basis],
        "pfaffian": str(fam.pfaffian_poly),
        "exists": decision.exists,
        "witness": str(decision.witness) if decision.witness is not None else None,
        "certificate": decision.certificate,
    }


def _echo_decision(title: str, data: dict) -> None:
    coords = ", ".join(f"{c}" for c in data["basis"]) or "-"
    click.echo(f"{title}: dim {data['dimension']}  basis [{coords}]")
    click.echo(f"  Pf = {data['pfaffian']}")
    click.echo(f"  symplectic: {'yes' if data['exists'] else 'no'}  ({data['certificate']})")


@click.command("symplectic")
@case_option
@params_option
@file_option
@json_option
@click.option("--form", "form_text", default=None, help="test one 2-form, e.g. '1*e12 + 1*e34'")
@click.option("--exact", is_flag=True, help="also decide exact symplectic forms (d of a 1-form)")
@handle_errors
def symplectic_cmd(case_id, params_text, file_path, as_json, form_text, exact):
    """Closed invariant 2-forms, their Pfaffian and whether a symplectic one exists."""
    g, _ = load_algebra(case_id, params_text, file_path)
    data = {"algebra": g.name, "closed": _decision_data(symplectic_exists(g))}
    if form_text:
        w = parse_form(form_text, g.dim, 2)
        data["form"] = {"form": str(w), "closed": is_closed(g, w), "pfaffian": format_scalar(pfaffian(w)),
                        "symplectic": is_closed(g, w) and gram_nondegenerate(w)}
    if exact:
        data["exact"] = _decision_data(exact_symplectic_family(g))
    if as_json:
        emit_json(data)
        return
    click.echo(f"{g.name}: {g.describe()}")
    _echo_decision("closed 2-forms", data["closed"])
    if form_text:
        f = data["form"]
        click.echo(f"form {f['form']}: closed={f['closed']} Pf={f['pfaffian']} -> "
                   f"{'symplectic' if f['symplectic'] else 'not symplectic'}")
    if exact:
        _echo_decision("exact 2-forms", data["exact"])
