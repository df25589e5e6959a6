# lieinv/commands/kahler.py

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
from lieinv.complex_structures import AlmostComplexStructure
from lieinv.kahler import (
    KahlerStatus,
    compatibility_transport_check,
    conjugate_structure,
    diagonal_automorphisms,
    kahler_exists,
    metric_is_j_invariant,
    scan_kahler_family,
    solvable_points,
)
from lieinv.linalg import format_scalar
from lieinv.parsing import parse_j
from lieinv.tables import load_tables, rows_for


def _structures(g, case_id, j_text):
    """--j 하나, 아니면 Table 5.1 에서 case 에 해당하는 J 들 → [(이름, J)]"""
    if j_text:
        return [("J", AlmostComplexStructure(parse_j(j_text, g.dim)))]
    if not case_id:
        raise click.UsageError("give --j, or --case to use the table's structures")
    out = []
    for row in rows_for(load_tables().table_5_1, case_id, g.params):
        for entry in row.structures:
            out.append((f"{row.label} {entry.name}", AlmostComplexStructure(parse_j(entry.J, g.dim))))
    return out


def _decision_data(name, J, decision) -> dict:
    fam = decision.compatible.family
    data = {
        "name": name,
        "J": J.describe(),
        "integrable": decision.compatible.integrable,
        "dimension": fam.dimension,
        "basis": [str(b) for b in fam.basis],
        "pfaffian": str(fam.pfaffian_poly),
        "status": decision.status.value,
        "certificate": decision.certificate,
        "witness": None,
        "signature": None,
    }
    if decision.witness is not None:
        data["witness"] = str(decision.witness)
        data["signature"] = list(decision.metric.signature)
        data["metric_j_invariant"] = metric_is_j_invariant(decision.metric, J)
    return data


def _transport_data(g, J, decision) -> dict:
    if decision.witness is None:
        return {"checked": False, "reason": "no compatible symplectic form"}
    autos = diagonal_automorphisms(g)
    if not autos:
        return {"checked": False, "reason": "no diagonal automorphism"}
    x = autos[0]
    J2 = conjugate_structure(J, x)
    check = compatibility_transport_check(g, J, J2, x, decision.witness)
    return {
        "checked": True,
        "x": [format_scalar(x.to_list()[i][i]) for i in range(g.dim)],
        "J2": J2.describe(),
        "transported": str(check.transported),
        "ok": check.ok,
        "same_form_compatible": check.same_form_compatible,
    }


@click.command("kahler")
@case_option
@params_option
@file_option
@json_option
@click.option("--j", "j_text", default=None, help="structure to test; default: the table's structures for --case")
@click.option("--scan", is_flag=True, help="scan the two-parameter family J_{mu,nu} instead")
@click.option("--transport", is_flag=True,
              help="move the witness along a diagonal automorphism and recheck compatibility")
@handle_errors
def kahler_cmd(case_id, params_text, file_path, as_json, j_text, scan, transport):
    """Compatible closed 2-forms for a complex structure and the Kähler decision."""
    g, case_id = load_algebra(case_id, params_text, file_path)

    if scan:
        points = scan_kahler_family(g)
        solvable = solvable_points(points)
        if as_json:
            emit_json({
                "algebra": g.name,
                "points": [{"mu": format_scalar(p.mu), "nu": format_scalar(p.nu), "integrable": p.integrable,
                            "status": p.status.value, "family_dim": p.family_dim} for p in points],
                "solvable": [[format_scalar(m), format_scalar(n)] for m, n in solvable],
            })
            return
        click.echo(f"{g.name}: J_(mu,nu) scan over {len(points)} point(s)")
        for p in points:
            if p.status is not KahlerStatus.NONE:
                click.echo(f"  mu={format_scalar(p.mu)} nu={format_scalar(p.nu)}: {p.status.value} "
                           f"(compatible family dim {p.family_dim})")
        if not solvable:
            click.echo("  no point admits a compatible symplectic form")
        return

    for name, J in _structures(g, case_id, j_text):
        decision = kahler_exists(g, J)
        data = _decision_data(name, J, decision)
        if transport:
            data["transport"] = _transport_data(g, J, decision)
        if as_json:
            emit_json({"algebra": g.name, **data})
            continue
        click.echo(f"{g.name} {name}: J = {data['J']}  (integrable = {data['integrable']})")
        click.echo(f"  compatible closed 2-forms: dim {data['dimension']}  [{', '.join(data['basis']) or '-'}]")
        click.echo(f"  Pf = {data['pfaffian']}")
        click.echo(f"  {data['status']}: {data['certificate']}")
        if data["signature"] is not None:
            click.echo(f"  metric signature (+, -, 0) = {tuple(data['signature'])}")
        if transport:
            t = data["transport"]
            if not t["checked"]:
                click.echo(f"  transport: skipped ({t['reason']})")
            else:
                click.echo(f"  transport by diag({', '.join(t['x'])}): {t['transported']} "
                           f"{'compatible and closed' if t['ok'] else 'FAILS'} for J2 = {t['J2']}")
