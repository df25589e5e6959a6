# lieinv/commands/cohomology.py

import click

from lieinv.cohomology import PATHS, b1_from_derived, cohomology, compare_paths, complex_of, is_exact, summarize
from lieinv.commands import (
    case_option,
    emit_json,
    file_option,
    handle_errors,
    json_option,
    load_algebra,
    params_option,
)
from lieinv.parsing import parse_form


@click.command("cohomology")
@case_option
@params_option
@file_option
@json_option
@click.option("--path", "path", type=click.Choice(sorted(PATHS)), default="pointwise", show_default=True,
              help="how the differential matrices are built")
@click.option("--form", "form_text", default=None, help="closed form to test for exactness, e.g. '1*e12'")
@handle_errors
def cohomology_cmd(case_id, params_text, file_path, as_json, path, form_text):
    """Betti numbers and representative classes of the invariant-form complex."""
    g, _ = load_algebra(case_id, params_text, file_path)
    cx = complex_of(g, path)
    report = cohomology(g, path, cx)
    _, _, same = compare_paths(g)
    data = summarize(report)
    data.update({"algebra": g.name, "path": path, "paths_agree": same, "b1_from_derived": b1_from_derived(g)})

    exact = None
    if form_text:
        w = parse_form(form_text, g.dim)
        exact = is_exact(g, w, cx)
        data["form"] = {
            "form": str(w),
            "exact": exact.exact,
            "primitive": str(exact.primitive) if exact.primitive is not None else None,
        }

    if as_json:
        emit_json(data)
        return

    click.echo(f"{g.name}: {g.describe()}")
    click.echo(f"betti = ({', '.join(map(str, report.betti))}), euler = {report.euler_characteristic()}, "
               f"unimodular = {report.unimodular}")
    for d in report.degrees:
        reps = ", ".join(str(r) for r in d.representatives) or "-"
        click.echo(f"  H{d.degree}: b{d.degree} = {d.betti}  [{reps}]")
    click.echo(f"pointwise and Leibniz differentials agree: {same}")
    if exact is not None:
        if exact.exact:
            click.echo(f"{data['form']['form']} is exact: d({exact.primitive})")
        else:
            coords = ", ".join(str(c) for c in exact.class_coordinates)
            click.echo(f"{data['form']['form']} is not exact; class coordinates ({coords})")
