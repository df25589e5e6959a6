# lieinv/commands/complex.py

import click

from lieinv.commands import (
    case_option,
    emit_json,
    file_option,
    grid_option,
    handle_errors,
    json_option,
    load_algebra,
    params_option,
)
from lieinv.complex_structures import (
    AlmostComplexStructure,
    GeneralFormInstance,
    grid_search_subalgebras,
    grid_values,
    is_abelian_structure,
    is_biinvariant,
    is_integrable,
    j_from_subalgebra,
    match_templates,
    nijenhuis_defects,
    subalgebra_from_j,
    verify_general_form,
)
from lieinv.config import get_settings
from lieinv.errors import NotIntegrableError
from lieinv.linalg import format_number
from lieinv.parsing import parse_gaussian_list, parse_j
from lieinv.tables import load_tables, templates_for


def _vector_text(v) -> str:
    return "(" + ", ".join(format_number(x) for x in v) + ")"


def resolve_grid(grid_name, values_text):
    if values_text:
        return parse_gaussian_list(values_text)
    name = grid_name or get_settings().verify_grid
    try:
        return grid_values(name)
    except KeyError as e:
        raise click.BadParameter(str(e.args[0]), param_hint="--grid")


def _assignment(text):
    out = {}
    for item in (text or "").split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise click.BadParameter(f"{item!r} is not of the form name=value", param_hint="--assign")
        key, value = (s.strip() for s in item.split("=", 1))
        out[key] = parse_gaussian_list(value)[0]
    return out


@click.command("complex")
@case_option
@params_option
@file_option
@json_option
@grid_option
@click.option("--values", "values_text", default=None, metavar="Z,...",
              help="explicit Gaussian rationals for the search grid, e.g. '0,1,-1,i,-i'")
@click.option("--literal", is_flag=True, help="search the literal ansatz U = e4 + ..., V = ... instead of echelon pairs")
@click.option("--j", "j_text", default=None, help="test one structure, e.g. 'e1->e2, e3->e4'")
@click.option("--template", "template_id", default=None, help="general-form template id of the case")
@click.option("--assign", "assign_text", default=None, metavar="X=Z,...",
              help="coefficients for --template, e.g. 'a1=1,b2=i'")
@handle_errors
def complex_cmd(case_id, params_text, file_path, as_json, grid_name, values_text, literal,
                j_text, template_id, assign_text):
    """Complex structures: grid search, integrability of a given J, or one template instance."""
    g, case_id = load_algebra(case_id, params_text, file_path)

    # ── 1) J 하나 ──
    if j_text:
        J = AlmostComplexStructure(parse_j(j_text, g.dim))
        defects = nijenhuis_defects(g, J)
        data = {
            "algebra": g.name,
            "J": J.describe(),
            "integrable": not defects,
            "defects": [{"pair": [i, j], "N": _vector_text(v)} for i, j, v in defects],
        }
        if not defects:
            data["abelian"] = is_abelian_structure(g, J)
            data["biinvariant"] = is_biinvariant(g, J)
            data["subalgebra"] = subalgebra_from_j(g, J).describe()
        else:
            try:
                subalgebra_from_j(g, J)
            except NotIntegrableError as e:
                data["failing_bracket"] = str(e)
        if as_json:
            emit_json(data)
            return
        click.echo(f"{g.name}: J = {data['J']}")
        if not defects:
            click.echo(f"integrable; -i eigenspace {data['subalgebra']}; "
                       f"abelian = {data['abelian']}, bi-invariant = {data['biinvariant']}")
        else:
            click.echo("not integrable:")
            for d in data["defects"]:
                click.echo(f"  N(e{d['pair'][0]}, e{d['pair'][1]}) = {d['N']}")
            if "failing_bracket" in data:
                click.echo(f"  {data['failing_bracket']}")
        return

    # ── 2) 템플릿 인스턴스 ──
    if template_id:
        if not case_id:
            raise click.UsageError("--template needs --case")
        params = g.params
        inst = GeneralFormInstance(case_id, template_id, dict(params), _assignment(assign_text))
        verdict = verify_general_form(g, inst, templates_for(load_tables(), case_id, params))
        data = {
            "algebra": g.name,
            "template": verdict.template_id,
            "assignment": verdict.assignment,
            "constraint": verdict.constraint_ok,
            "closed": verdict.closed,
            "direct_sum": verdict.direct_sum,
            "valid": verdict.valid,
        }
        if as_json:
            emit_json(data)
        else:
            click.echo(f"{g.name} {verdict.template_id} [{verdict.assignment}]: "
                       f"constraint={verdict.constraint_ok} closed={verdict.closed} "
                       f"direct_sum={verdict.direct_sum} -> {'valid' if verdict.valid else 'invalid'}")
        return

    # ── 3) grid 탐색 ──
    if assign_text:
        raise click.UsageError("--assign needs --template")
    grid = resolve_grid(grid_name, values_text)
    result = grid_search_subalgebras(g, grid, normalized=not literal, cap=get_settings().grid_cap)
    compiled = []
    if case_id:
        compiled = [t.compile(g.params, g.dim) for t in templates_for(load_tables(), case_id, g.params)]

    rows = []
    for q in result.hits:
        J = j_from_subalgebra(q)
        match = match_templates(q, compiled) if compiled else None
        rows.append({
            "q": q.describe(),
            "J": J.describe(),
            "integrable": is_integrable(g, J),
            "abelian": is_abelian_structure(g, J),
            "biinvariant": is_biinvariant(g, J),
            "template": f"{match[0]} [{match[1]}]" if match else None,
        })
    if as_json:
        emit_json({"algebra": g.name, "enumerated": result.enumerated, "truncated": result.truncated,
                   "found": len(rows), "subalgebras": rows})
        return
    click.echo(f"{g.name}: {len(rows)} complex subalgebra(s) from {result.enumerated} ansatz instance(s)"
               + (" (stopped at cap)" if result.truncated else ""))
    for r in rows:
        flags = [name for name in ("abelian", "biinvariant") if r[name]]
        tail = f"  [{', '.join(flags)}]" if flags else ""
        click.echo(f"  q = {r['q']}  J = {r['J']}{tail}")
        if compiled:
            click.echo(f"      template: {r['template'] or 'none (not covered by the table)'}")
