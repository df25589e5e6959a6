# lieinv/verify.py

"""
표 검증 엔진

catalog 의 각 (case, 파라미터) 인스턴스마다 표 하나당 VerificationRecord 하나를 만든다.

  2.1   괄호 관계 / 유도 대수 / 가해성
  3.3   q 열, 𝒬 템플릿 샘플, grid 탐색 결과의 포함 여부, 적분가능성 두 경로 비교
  3.5   abelian / bi-invariant 복소구조 목록
  4.2   닫힌 2-형식 family 와 비퇴화 조건
  4.3   exact 심플렉틱 family
  4.5   코호몰로지 (두 경로 + 대표원)
  5.1   호환 family, witness, 계량
  cross 복소 / 심플렉틱 / Kähler 교차 분류 (+ 전체 요약 한 줄)

한 레코드 안에서 여러 확인 결과가 나오면 가장 심각한 상태를 쓴다.
"""

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy
from tqdm import tqdm

from lieinv.catalog import (
    AMBIGUOUS_LABELS,
    CASE_IDS,
    catalog_build,
    default_grid,
    expected_derived,
    format_params,
    normalize_params,
    resolve_label,
    suspected_derived,
)
from lieinv.cohomology import b1_from_derived, check_representatives, compare_paths, complex_of
from lieinv.complex_structures import (
    AlmostComplexStructure,
    ComplexSubalgebra,
    abelian_subalgebra,
    direct_sum_ok,
    grid_search_subalgebras,
    grid_values,
    integrable_by_eigenspace,
    is_biinvariant,
    is_integrable,
    is_subalgebra,
    j_from_subalgebra,
    match_templates,
    random_complex_structure,
    template_samples,
    verify_compiled,
)
from lieinv.config import get_settings
from lieinv.errors import EXIT_MISMATCH, EXIT_OK, LieInvError, TablesError
from lieinv.forms import KForm
from lieinv.kahler import (
    compatibility_transport_check,
    conjugate_structure,
    diagonal_automorphisms,
    kahler_exists,
    kahler_over,
    metric_is_j_invariant,
    scan_kahler_family,
    solvable_points,
)
from lieinv.lie import antisymmetry_defect, derived_subalgebra, is_nilpotent, is_solvable, jacobi_defect
from lieinv.linalg import equal, format_scalar, same_span
from lieinv.models import Status, VerificationRecord
from lieinv.parsing import parse_j
from lieinv.symbolic import (
    exact_number,
    form_coefficients,
    form_family,
    gaussian_vector,
    param_subs,
    parse_expr,
    same_zero_set,
    vector_coefficients,
)
from lieinv.symplectic import (
    ClosedTwoFormFamily,
    closed_two_forms,
    exact_symplectic_family,
    pfaffian_in_coordinates,
    symplectic_exists,
)
from lieinv.tables import (
    ComplexRow,
    FormRow,
    KahlerEntry,
    KahlerRow,
    PaperTables,
    alt_rows_for,
    load_tables,
    rows_for,
    templates_of,
)

log = logging.getLogger("lieinv.verify")

NILPOTENT_CASES = ("a4", "rh3", "n4")
JMUNU_EXPECTED = [(0, -1)]
TEMPLATE_SAMPLES = 5


# ---------- 인스턴스 / 실행 문맥 ----------

class Instance:
    """catalog 인스턴스 하나와 그 위에서 재사용하는 계산들"""

    def __init__(self, case_id: str, params, grid: Sequence, grid_cap: int):
        self.case_id = case_id
        self.params = normalize_params(case_id, params)
        self.g = catalog_build(case_id, self.params)
        self.grid = tuple(grid)
        self.grid_cap = grid_cap

    @property
    def params_text(self) -> str:
        return format_params(self.params)

    @property
    def key(self) -> Tuple[str, str]:
        return self.case_id, self.params_text

    @cached_property
    def cx(self):
        return complex_of(self.g)

    @cached_property
    def paths(self):
        return compare_paths(self.g)

    @cached_property
    def search(self):
        return grid_search_subalgebras(self.g, self.grid, cap=self.grid_cap)

    @cached_property
    def symplectic(self):
        return symplectic_exists(self.g, self.cx)

    @cached_property
    def exact(self):
        return exact_symplectic_family(self.g, self.cx)

    @cached_property
    def automorphisms(self):
        return diagonal_automorphisms(self.g)


@dataclass
class RunContext:
    tables: PaperTables
    grid: Tuple
    grid_cap: int
    seed: int
    random_j: int
    instances: Dict[Tuple[str, str], Instance] = field(default_factory=dict)
    cross_checked: set = field(default_factory=set)
    candidates: Dict[Tuple[str, str], List[ComplexSubalgebra]] = field(default_factory=dict)
    kahler: Dict[Tuple[str, str], Optional[str]] = field(default_factory=dict)
    classification: Dict[Tuple[str, str], Tuple[bool, bool, bool]] = field(default_factory=dict)

    def instance(self, case_id: str, params) -> Instance:
        inst = Instance(case_id, params, self.grid, self.grid_cap)
        return self.instances.setdefault(inst.key, inst)


def make_context(tables: Optional[PaperTables] = None, grid: Optional[str] = None) -> RunContext:
    settings = get_settings()
    return RunContext(
        tables=tables or load_tables(),
        grid=grid_values(grid or settings.verify_grid),
        grid_cap=settings.grid_cap,
        seed=settings.random_seed,
        random_j=settings.random_j,
    )


# ---------- 결과 모으기 ----------

@dataclass
class _Findings:
    table: str
    inst: Instance
    items: List[Tuple[Status, str, str]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, status: Status, computed: str, expected: str, note: str = "") -> None:
        self.items.append((status, computed, expected))
        if note:
            self.note(note)

    def note(self, text: str) -> None:
        if text and text not in self.notes:
            self.notes.append(text)

    def record(self) -> VerificationRecord:
        if not self.items:
            return VerificationRecord(table=self.table, case=self.inst.case_id, params=self.inst.params_text,
                                      status=Status.SKIPPED, notes="; ".join(self.notes))
        worst = Status.worst(s for s, _, _ in self.items)
        chosen = self.items if worst is Status.MATCH else [i for i in self.items if i[0] is worst]
        return VerificationRecord(
            table=self.table,
            case=self.inst.case_id,
            params=self.inst.params_text,
            status=worst,
            computed=" | ".join(_unique(c for _, c, _ in chosen if c)),
            expected=" | ".join(_unique(e for _, _, e in chosen if e)),
            notes="; ".join(self.notes),
        )


def _unique(items: Iterable[str]) -> List[str]:
    out: List[str] = []
    for x in items:
        if x not in out:
            out.append(x)
    return out


# ---------- 출력용 문자열 ----------

def _family_text(family: ClosedTwoFormFamily) -> str:
    if not family.dimension:
        return "<>"
    return "<" + ", ".join(str(b) for b in family.basis) + ">"


def _vectors_text(vectors: Sequence[Sequence]) -> str:
    return "<" + ", ".join(" ".join(format_scalar(x) for x in v) for v in vectors) + ">"


def _betti_text(report) -> str:
    return "b=(" + ",".join(map(str, report.betti)) + ")"


def _cohomology_text(report) -> str:
    parts = [_betti_text(report)]
    for k in (1, 2, 3):
        parts.append(f"H{k}=[" + ", ".join(str(r) for r in report.representatives(k)) + "]")
    return " ".join(parts)


def _row_classes_text(row) -> str:
    return " ".join(f"H{k}=[" + ", ".join(row.classes(k)) + "]" for k in (1, 2, 3))


def _template_text(t) -> str:
    text = f"{t.template_id}: U = {t.U}, V = {t.V}"
    return text if t.nonzero is None else f"{text}, {t.nonzero} != 0"


def _pf_text(poly) -> str:
    return f"{sympy.factor(poly)} != 0"


# ---------- 공용 확인 ----------

def _q_from_entry(U: str, V: str, params) -> Tuple[list, list]:
    subs = param_subs(params)
    return (gaussian_vector(vector_coefficients(parse_expr(U)), subs),
            gaussian_vector(vector_coefficients(parse_expr(V)), subs))


def _q_problem(g, U: list, V: list) -> Optional[str]:
    """q = <U, V> 가 부분대수 + 직합 + 적분가능 J 를 주는지. 문제가 없으면 None."""
    cert = is_subalgebra(g, U, V)
    q = ComplexSubalgebra.of(U, V)
    if not cert.closed:
        return f"{q.describe()} is not closed under the bracket"
    if not direct_sum_ok(U, V):
        return f"{q.describe()} does not give g^C = q + σq"
    try:
        J = j_from_subalgebra(q)
    except LieInvError as e:
        return str(e)
    if not is_integrable(g, J):
        return f"{q.describe()} induces a non-integrable J"
    return None


def _template_problems(g, ct, grid) -> Tuple[List[str], int]:
    good, bad = template_samples(ct, grid, want=TEMPLATE_SAMPLES)
    problems = []
    for values in good:
        v = verify_compiled(g, ct, values)
        if not v.valid:
            reason = "not closed" if not v.closed else "not a direct sum"
            problems.append(f"{ct.template_id} at {v.assignment or 'no unknowns'}: {reason}")
    for values in bad:
        v = verify_compiled(g, ct, values)
        if v.closed and v.direct_sum:
            problems.append(f"{ct.template_id} at {v.assignment}: condition fails but q is valid")
    return problems, len(good)


def _form_literal(text: str, degree: int) -> KForm:
    found = form_coefficients(parse_expr(text), degree)
    return KForm.from_dict(degree, 4, {idx: exact_number(c) for idx, c in found.items()})


def _compare_condition(f: _Findings, vectors, names, nonzero: Optional[str],
                       alt_nonzero: Optional[str], params, label: str) -> None:
    """계산한 Pf(좌표 = 인쇄된 계수 이름) 와 인쇄된 조건의 영점집합 비교"""
    if not nonzero or not vectors:
        return
    computed = pfaffian_in_coordinates(vectors, names)
    subs = param_subs(params)
    printed = parse_expr(nonzero).subs(subs)
    if same_zero_set(computed, printed):
        return
    note = f"{label}: Pf in the printed coordinates is {sympy.factor(computed)}"
    if alt_nonzero and same_zero_set(computed, parse_expr(alt_nonzero).subs(subs)):
        note += f"; alternative condition {alt_nonzero} != 0 matches"
    f.add(Status.PAPER_TYPO_SUSPECTED, _pf_text(computed), f"{nonzero} != 0", note)


def _check_family_row(f: _Findings, row: FormRow, family: ClosedTwoFormFamily, exists: bool,
                      certificate: str, params) -> None:
    """4.2 / 4.3 행 하나: family 의 부분공간 동등성 + 조건"""
    expected = f"{row.label}: {row.form}"
    names, vectors = form_family(row.form, params)
    computed = f"YES, family {_family_text(family)}" if exists else f"NO: {certificate}"
    if not row.printed:
        if exists and family.same_span_as(vectors):
            f.add(Status.PAPER_TYPO_SUSPECTED, computed, "row not printed", row.suspected)
        else:
            f.add(Status.MISMATCH, computed, expected)
        return
    if not exists:
        f.add(Status.MISMATCH, computed, expected)
        return

    nonzero = row.nonzero
    if family.same_span_as(vectors):
        f.add(Status.MATCH, computed, expected)
    else:
        alt_ok = False
        if row.alt_form:
            alt_names, alt_vectors = form_family(row.alt_form, params)
            alt_ok = family.same_span_as(alt_vectors)
        if not (alt_ok and row.suspected):
            f.add(Status.MISMATCH, computed, expected)
            return
        f.add(Status.PAPER_TYPO_SUSPECTED, computed, expected,
              f"{row.suspected}; alternative reading {row.alt_form} matches")
        names, vectors = alt_names, alt_vectors
        nonzero = row.alt_nonzero or row.nonzero
    _compare_condition(f, vectors, names, nonzero, row.alt_nonzero, params, row.label)


# ---------- 후보 부분대수 (grid + 표) ----------

def candidate_subalgebras(inst: Instance, ctx: RunContext) -> List[ComplexSubalgebra]:
    """
    grid 탐색 결과 + 해당 Table 3.3 행의 q (검증 통과분) + 템플릿 샘플 (검증 통과분).
    Remark 3.5 검색, 교차 분류, 표에 없는 case 의 Kähler 탐색에 쓴다.
    """
    if inst.key in ctx.candidates:
        return ctx.candidates[inst.key]
    found: List[ComplexSubalgebra] = list(inst.search.hits)
    keys = {q.key() for q in found}

    def push(U, V):
        q = ComplexSubalgebra.of(U, V)
        if q.key() not in keys:
            keys.add(q.key())
            found.append(q)

    for row in rows_for(ctx.tables.table_3_3, inst.case_id, inst.params):
        for entry in row.q:
            for U_text, V_text in ((entry.U, entry.V), (entry.alt_U, entry.alt_V)):
                if U_text is None:
                    continue
                U, V = _q_from_entry(U_text, V_text, inst.params)
                if _q_problem(inst.g, U, V) is None:
                    push(U, V)
        for alt in (False, True):
            for t in templates_of(row, alt=alt):
                ct = t.compile(inst.params)
                good, _ = template_samples(ct, inst.grid, want=TEMPLATE_SAMPLES)
                for values in good:
                    if verify_compiled(inst.g, ct, values).valid:
                        push(*ct.instantiate(values))
    ctx.candidates[inst.key] = found
    return found


def _structures(inst: Instance, ctx: RunContext) -> List[AlmostComplexStructure]:
    return [j_from_subalgebra(q) for q in candidate_subalgebras(inst, ctx)]


def _table_structures(inst: Instance, ctx: RunContext) -> List[Tuple[KahlerRow, KahlerEntry, AlmostComplexStructure]]:
    out = []
    for row in rows_for(ctx.tables.table_5_1, inst.case_id, inst.params):
        for entry in row.structures:
            try:
                out.append((row, entry, AlmostComplexStructure(parse_j(entry.J))))
            except LieInvError as e:
                log.warning("%s %s: cannot read J %r (%s)", row.label, entry.name, entry.J, e)
    return out


def kahler_witness(inst: Instance, ctx: RunContext) -> Optional[str]:
    """표의 J 와 후보 J 중 Kähler 쌍이 되는 첫 번째의 설명 (없으면 None)"""
    if inst.key in ctx.kahler:
        return ctx.kahler[inst.key]
    text = None
    for row, entry, J in _table_structures(inst, ctx):
        decision = kahler_exists(inst.g, J, inst.cx)
        if decision.exists:
            text = f"{row.label} {entry.name}: {decision.certificate}"
            break
    if text is None:
        decision, tried = kahler_over(inst.g, _structures(inst, ctx), inst.cx)
        if decision is not None:
            text = f"J = {decision.compatible.J.describe()}: {decision.certificate}"
    ctx.kahler[inst.key] = text
    return text


# ---------- Table 2.1 ----------

def verify_table_2_1(inst: Instance, ctx: RunContext) -> VerificationRecord:
    f = _Findings("2.1", inst)
    g = inst.g
    jac, anti = jacobi_defect(g), antisymmetry_defect(g)
    if jac or anti:
        f.add(Status.MISMATCH, f"{len(jac)} Jacobi and {len(anti)} antisymmetry defect(s)", "a Lie algebra")
    computed = derived_subalgebra(g)
    expected = expected_derived(inst.case_id, inst.params)
    same = (not computed and not expected) or (computed and expected and same_span(computed, expected))
    derived = f"g' = {_vectors_text(computed)} (dim {len(computed)})"
    if same:
        f.add(Status.MATCH, derived, f"g' = {_vectors_text(expected)}")
    else:
        alt = suspected_derived(inst.case_id, inst.params)
        if alt is not None and computed and same_span(computed, alt[0]):
            f.add(Status.PAPER_TYPO_SUSPECTED, derived, f"g' = {_vectors_text(expected)}", alt[1])
        else:
            f.add(Status.MISMATCH, derived, f"g' = {_vectors_text(expected)}")
    if not is_solvable(g):
        f.add(Status.MISMATCH, "derived series does not reach 0", "solvable")
    nilpotent = is_nilpotent(g)
    if nilpotent != (inst.case_id in NILPOTENT_CASES):
        f.add(Status.MISMATCH, f"nilpotent={nilpotent}", f"nilpotent={inst.case_id in NILPOTENT_CASES}")
    elif nilpotent:
        f.note("nilpotent")
    return f.record()


# ---------- Table 3.3 ----------

def _integrability_cross_check(inst: Instance, ctx: RunContext, f: _Findings) -> None:
    """Nijenhuis 경로와 고유공간 경로를 무작위 J 에서 비교 (case 마다 한 번)"""
    if inst.case_id in ctx.cross_checked:
        return
    ctx.cross_checked.add(inst.case_id)
    rng = random.Random(f"{ctx.seed}:{inst.case_id}")
    disagree, integrable = 0, 0
    for _ in range(ctx.random_j):
        J = random_complex_structure(rng)
        a, b = is_integrable(inst.g, J), integrable_by_eigenspace(inst.g, J)
        integrable += a
        if a != b:
            disagree += 1
    text = f"{ctx.random_j} random J: {integrable} integrable, {disagree} disagreement(s)"
    if disagree:
        f.add(Status.MISMATCH, text, "Nijenhuis and eigenspace paths agree")
    else:
        f.note(text)


def _check_q_entries(f: _Findings, row: ComplexRow, inst: Instance) -> List[ComplexSubalgebra]:
    listed = []
    for entry in row.q:
        U, V = _q_from_entry(entry.U, entry.V, inst.params)
        problem = _q_problem(inst.g, U, V)
        expected = f"{row.label}: q = <{entry.U}, {entry.V}>"
        if problem is None:
            listed.append(ComplexSubalgebra.of(U, V))
            f.add(Status.MATCH, f"q {ComplexSubalgebra.of(U, V).describe()} valid", expected)
            continue
        if entry.has_alt:
            aU, aV = _q_from_entry(entry.alt_U, entry.alt_V, inst.params)
            if _q_problem(inst.g, aU, aV) is None and row.suspected:
                listed.append(ComplexSubalgebra.of(aU, aV))
                f.add(Status.PAPER_TYPO_SUSPECTED, problem, expected,
                      f"{row.suspected}; alternative reading <{entry.alt_U}, {entry.alt_V}> is valid")
                continue
        f.add(Status.MISMATCH, problem, expected)
    return listed


def _check_templates(f: _Findings, row: ComplexRow, inst: Instance) -> None:
    alternatives = {t.template_id.replace("'", ""): t for t in templates_of(row, alt=True)}
    for t in templates_of(row):
        ct = t.compile(inst.params)
        problems, n_good = _template_problems(inst.g, ct, inst.grid)
        if ct.unknowns and n_good < TEMPLATE_SAMPLES:
            f.note(f"{ct.template_id}: only {n_good} constraint-satisfying grid point(s)")
        if not problems:
            f.add(Status.MATCH, f"{ct.template_id}: {n_good} sample(s) valid", _template_text(t))
            continue
        alt = alternatives.get(t.template_id)
        if alt is not None and row.suspected:
            alt_problems, _ = _template_problems(inst.g, alt.compile(inst.params), inst.grid)
            if not alt_problems:
                f.add(Status.PAPER_TYPO_SUSPECTED, problems[0], _template_text(t),
                      f"{row.suspected}; alternative reading {_template_text(alt)} holds")
                continue
        f.add(Status.MISMATCH, problems[0], _template_text(t))


def _check_coverage(f: _Findings, rows: Sequence[ComplexRow], listed: Sequence[ComplexSubalgebra],
                    inst: Instance) -> None:
    """grid 에서 찾은 q 가 모두 어떤 템플릿 (또는 q 열) 에 들어가는지"""
    compiled = [t.compile(inst.params) for row in rows for t in templates_of(row)]
    if not compiled:
        return
    compiled_alt = [t.compile(inst.params) for row in rows for t in templates_of(row, alt=True)]
    gaps = []
    for q in inst.search.hits:
        if match_templates(q, compiled) is not None:
            continue
        if any(q.same_space(p) or q.conjugate().same_space(p) for p in listed):
            continue
        if compiled_alt and match_templates(q, compiled_alt) is not None:
            continue
        gaps.append(q)
    f.note(f"grid: {len(inst.search.hits)} subalgebra(s) from {inst.search.enumerated} instances")
    if inst.search.truncated:
        f.note("grid search truncated at the configured cap")
    if gaps:
        shown = ", ".join(q.describe() for q in gaps[:3])
        f.add(Status.PAPER_TYPO_SUSPECTED, f"{len(gaps)} grid subalgebra(s) outside every template: {shown}",
              "templates cover every complex subalgebra", "potential table gap")


def verify_table_3_3(inst: Instance, ctx: RunContext) -> VerificationRecord:
    f = _Findings("3.3", inst)
    rows = rows_for(ctx.tables.table_3_3, inst.case_id, inst.params)
    hits = inst.search.hits
    if not rows:
        if hits:
            f.add(Status.MISMATCH, f"{len(hits)} complex subalgebra(s), e.g. {hits[0].describe()}",
                  "no row (no complex structure)")
        else:
            f.add(Status.MATCH, f"no complex subalgebra on the grid ({inst.search.enumerated} instances)",
                  "no row")
    listed: List[ComplexSubalgebra] = []
    for row in rows:
        if not row.printed:
            if hits:
                f.add(Status.PAPER_TYPO_SUSPECTED, f"{len(hits)} complex subalgebra(s) on the grid",
                      "row not printed", row.suspected)
            else:
                f.add(Status.MISMATCH, "no complex subalgebra on the grid", f"{row.label} admits one")
            continue
        listed.extend(_check_q_entries(f, row, inst))
        _check_templates(f, row, inst)
    if rows:
        _check_coverage(f, [r for r in rows if r.printed], listed, inst)
    _integrability_cross_check(inst, ctx, f)
    return f.record()


# ---------- Remark 3.5 ----------

def _readings(label: str) -> List[Tuple[str, Dict]]:
    if label in AMBIGUOUS_LABELS:
        return [(c, dict(p)) for c, p in AMBIGUOUS_LABELS[label]]
    return [resolve_label(label)]


def _reads_as(inst: Instance, reading: Tuple[str, Dict]) -> bool:
    case_id, fixed = reading
    return case_id == inst.case_id and all(inst.params.get(k) == v for k, v in fixed.items())


def _abelian_witness(inst: Instance, ctx: RunContext) -> Optional[ComplexSubalgebra]:
    return next((q for q in candidate_subalgebras(inst, ctx) if abelian_subalgebra(inst.g, q)), None)


def _biinvariant_witness(inst: Instance, ctx: RunContext) -> Optional[ComplexSubalgebra]:
    for q in candidate_subalgebras(inst, ctx):
        if is_biinvariant(inst.g, j_from_subalgebra(q)):
            return q
    return None


def _remark_check(f: _Findings, kind: str, labels: Sequence[str], witness: Optional[ComplexSubalgebra],
                  inst: Instance, ctx: RunContext, finder) -> None:
    computed = f"{kind}: " + (witness.describe() if witness is not None else "none found")
    plain = [lab for lab in labels if lab not in AMBIGUOUS_LABELS and _reads_as(inst, resolve_label(lab))]
    ambiguous = [lab for lab in labels if lab in AMBIGUOUS_LABELS
                 and any(_reads_as(inst, r) for r in AMBIGUOUS_LABELS[lab])]
    if plain:
        status = Status.MATCH if witness is not None else Status.MISMATCH
        f.add(status, computed, f"{kind}: listed as {plain[0]}")
        return
    if ambiguous:
        label = ambiguous[0]
        readings = _readings(label)
        verdicts = []
        for case_id, fixed in readings:
            other = inst if _reads_as(inst, (case_id, fixed)) else ctx.instance(case_id, fixed)
            verdicts.append(f"{other.g.name}: {'yes' if finder(other, ctx) is not None else 'no'}")
        any_yes = any(v.endswith("yes") for v in verdicts)
        status = Status.PAPER_TYPO_SUSPECTED if any_yes else Status.MISMATCH
        f.add(status, computed, f"{kind}: listed as {label}",
              f"label {label} is ambiguous ({', '.join(verdicts)})")
        return
    if witness is not None:
        f.add(Status.MISMATCH, computed, f"{kind}: not listed")
    else:
        f.add(Status.MATCH, computed, f"{kind}: not listed")


def verify_remark_3_5(inst: Instance, ctx: RunContext) -> VerificationRecord:
    f = _Findings("3.5", inst)
    lists = ctx.tables.remark_3_5
    _remark_check(f, "abelian", lists.abelian, _abelian_witness(inst, ctx), inst, ctx, _abelian_witness)
    _remark_check(f, "bi-invariant", lists.biinvariant, _biinvariant_witness(inst, ctx), inst, ctx,
                  _biinvariant_witness)
    return f.record()


# ---------- Table 4.2 / 4.3 ----------

def verify_table_4_2(inst: Instance, ctx: RunContext) -> VerificationRecord:
    f = _Findings("4.2", inst)
    decision = inst.symplectic
    other = closed_two_forms(inst.g, complex_of(inst.g, "leibniz"))
    mine, theirs = decision.family.vectors(), other.vectors()
    if (mine or theirs) and not (mine and theirs and same_span(mine, theirs)):
        f.add(Status.MISMATCH, f"pointwise {_family_text(decision.family)} vs Leibniz {_family_text(other)}",
              "identical closed families")
    rows = rows_for(ctx.tables.table_4_2, inst.case_id, inst.params)
    if not rows:
        if decision.exists:
            f.add(Status.MISMATCH, f"YES: {decision.certificate}", "no row (no symplectic structure)")
        else:
            f.add(Status.MATCH, f"NO: {decision.certificate} (closed family dim {decision.family.dimension})",
                  "no row")
        return f.record()
    for row in rows:
        _check_family_row(f, row, decision.family, decision.exists, decision.certificate, inst.params)
    if any(s is Status.PAPER_TYPO_SUSPECTED for s, _, _ in f.items):
        f.note("pointwise and Leibniz differentials give the same closed family")
    return f.record()


def verify_table_4_3(inst: Instance, ctx: RunContext) -> VerificationRecord:
    f = _Findings("4.3", inst)
    decision = inst.exact
    rows = rows_for(ctx.tables.table_4_3, inst.case_id, inst.params)
    if not rows:
        if decision.exists:
            f.add(Status.MISMATCH, f"YES: {decision.certificate}", "no row (no exact symplectic structure)")
        else:
            f.add(Status.MATCH, f"NO: {decision.certificate} (exact family dim {decision.family.dimension})",
                  "no row")
        return f.record()
    for row in rows:
        _check_family_row(f, row, decision.family, decision.exists, decision.certificate, inst.params)
    return f.record()


# ---------- Table 4.5 ----------

def _cohomology_problems(row, inst: Instance, report) -> List[str]:
    problems = []
    for k in (1, 2, 3):
        forms = [_form_literal(s, k) for s in row.classes(k)]
        check = check_representatives(inst.cx, k, forms)
        if check.ok:
            continue
        if not all(check.closed):
            bad = [s for s, c in zip(row.classes(k), check.closed) if not c]
            problems.append(f"H{k}: {', '.join(bad)} not closed")
        elif not check.independent:
            problems.append(f"H{k}: classes dependent modulo exact forms")
        else:
            problems.append(f"H{k}: {len(forms)} class(es) but b{k} = {report.betti[k]}")
    return problems


def verify_table_4_5(inst: Instance, ctx: RunContext) -> VerificationRecord:
    f = _Findings("4.5", inst)
    a, b, same = inst.paths
    computed = _cohomology_text(a)
    if not same:
        f.add(Status.MISMATCH, f"pointwise {_betti_text(a)} vs Leibniz {_betti_text(b)}", "identical complexes")
    betti = a.betti
    if betti[0] != 1 or a.euler_characteristic() != 0:
        f.add(Status.MISMATCH, computed, "b0 = 1 and Euler characteristic 0")
    b1 = b1_from_derived(inst.g)
    if betti[1] != b1:
        f.add(Status.MISMATCH, computed, f"b1 = dim g/g' = {b1}")
    if (betti[4] == 1) != a.unimodular:
        f.add(Status.MISMATCH, computed, f"b4 = 1 iff unimodular ({a.unimodular})")

    rows = rows_for(ctx.tables.table_4_5, inst.case_id, inst.params)
    for row in rows:
        problems = _cohomology_problems(row, inst, a)
        expected = f"{row.label}: {_row_classes_text(row)}"
        if not problems:
            f.add(Status.MATCH, computed, expected)
        elif row.suspected and same:
            f.add(Status.PAPER_TYPO_SUSPECTED, f"{computed} ({'; '.join(problems)})", expected,
                  f"{row.suspected}; pointwise and Leibniz paths agree")
        else:
            f.add(Status.MISMATCH, f"{computed} ({'; '.join(problems)})", expected)
    for row in alt_rows_for(ctx.tables.table_4_5, inst.case_id, inst.params):
        problems = _cohomology_problems(row, inst, a)
        verdict = "also holds" if not problems else "does not hold (" + "; ".join(problems) + ")"
        f.note(f"wider range of row {row.label} {verdict}")
    if not rows:
        f.note(f"no cohomology row printed for {inst.g.name}; "
               f"only the b0, b1, b4 and Euler checks ran, computed {computed}")
    return f.record()


# ---------- Table 5.1 ----------

def _transport_problem(inst: Instance, J: AlmostComplexStructure, w: KForm) -> Optional[str]:
    for x in inst.automorphisms[:1]:
        J2 = conjugate_structure(J, x)
        check = compatibility_transport_check(inst.g, J, J2, x, w)
        if not check.ok:
            return f"transport by an automorphism breaks compatibility ({check.transported})"
    return None


def _check_kahler_entry(f: _Findings, row: KahlerRow, entry: KahlerEntry, inst: Instance) -> None:
    label = f"{row.label} {entry.name}"
    expected = f"{label}: J = {entry.J}; {entry.form}" + (f", {entry.nonzero} != 0" if entry.nonzero else "")
    try:
        J = AlmostComplexStructure(parse_j(entry.J))
    except LieInvError as e:
        f.add(Status.MISMATCH, f"{label}: {e}", expected)
        return
    decision = kahler_exists(inst.g, J, inst.cx)
    family = decision.compatible.family
    computed = f"{label}: {decision.status.value}, family {_family_text(family)}"
    if not decision.compatible.integrable:
        f.add(Status.MISMATCH, f"{label}: J is not integrable", expected)
        return
    if not row.printed:
        if decision.exists:
            f.add(Status.PAPER_TYPO_SUSPECTED, computed, "row not printed", row.suspected)
        else:
            f.add(Status.MISMATCH, computed, expected)
        return

    names, vectors = form_family(entry.form, inst.params)
    nonzero = entry.nonzero
    if not family.same_span_as(vectors):
        suspected = entry.suspected or row.suspected
        alt_names, alt_vectors = form_family(entry.alt_form, inst.params) if entry.alt_form else ((), [])
        if not (entry.alt_form and suspected and family.same_span_as(alt_vectors)):
            f.add(Status.MISMATCH, computed, expected)
            return
        f.add(Status.PAPER_TYPO_SUSPECTED, computed, expected,
              f"{suspected}; alternative reading {entry.alt_form} matches")
        names, vectors, nonzero = alt_names, alt_vectors, entry.alt_nonzero or entry.nonzero
    elif entry.suspected:
        f.note(f"{label}: {entry.suspected}")

    if not decision.exists:
        f.add(Status.MISMATCH, f"{label}: {decision.status.value}: {decision.certificate}", expected)
        return
    if not metric_is_j_invariant(decision.metric, J):
        f.add(Status.MISMATCH, f"{label}: φ is not J-invariant", "φ(JX, JY) = φ(X, Y)")
    problem = _transport_problem(inst, J, decision.witness)
    if problem:
        f.add(Status.MISMATCH, f"{label}: {problem}", "compatibility transported by automorphisms")
    f.add(Status.MATCH, f"{computed}, signature {decision.metric.signature}", expected)
    _compare_condition(f, vectors, names, nonzero, entry.alt_nonzero, inst.params, label)


def _duplicate_structures(f: _Findings, row: KahlerRow) -> None:
    seen: List[Tuple[str, object]] = []
    for entry in row.structures:
        try:
            M = parse_j(entry.J)
        except LieInvError:
            continue
        for name, other in seen:
            if equal(M, other):
                f.add(Status.PAPER_TYPO_SUSPECTED, f"{entry.name} = {name}",
                      f"distinct structures in row {row.label}", entry.suspected)
        seen.append((entry.name, M))


def _alt_case_rows(inst: Instance, ctx: RunContext) -> List[KahlerRow]:
    out = []
    for row in ctx.tables.table_5_1:
        for ref in row.alt_cases:
            if ref.case == inst.case_id and normalize_params(ref.case, ref.params) == inst.params:
                out.append(row)
    return out


def _jmunu_check(f: _Findings, inst: Instance) -> None:
    points = solvable_points(scan_kahler_family(inst.g))
    found = [(format_scalar(m), format_scalar(n)) for m, n in points]
    expected = [(str(m), str(n)) for m, n in JMUNU_EXPECTED]
    text = "J_{mu,nu} solvable at " + (", ".join(f"({m},{n})" for m, n in found) or "no point")
    if found == expected:
        f.note(text)
    else:
        f.add(Status.MISMATCH, text, "solvable only at (0,-1)")


def verify_table_5_1(inst: Instance, ctx: RunContext) -> VerificationRecord:
    f = _Findings("5.1", inst)
    rows = rows_for(ctx.tables.table_5_1, inst.case_id, inst.params)
    if not rows:
        structures = _structures(inst, ctx)
        decision, tried = kahler_over(inst.g, structures, inst.cx)
        if decision is not None:
            f.add(Status.MISMATCH, f"KAHLER with J = {decision.compatible.J.describe()}: {decision.certificate}",
                  "no row (no Kähler pair)")
        else:
            f.add(Status.MATCH, f"no Kähler pair among {tried} complex structure(s)", "no row")
    for row in rows:
        for entry in row.structures:
            _check_kahler_entry(f, row, entry, inst)
        _duplicate_structures(f, row)
        if row.suspected and row.printed:
            f.note(row.suspected)
    for row in _alt_case_rows(inst, ctx):
        for entry in row.structures:
            J = AlmostComplexStructure(parse_j(entry.J))
            status = kahler_exists(inst.g, J, inst.cx).status if is_integrable(inst.g, J) else None
            verdict = status.value if status is not None else "J not integrable"
            f.note(f"row {row.label} {entry.name} read on this algebra: {verdict}")
    if inst.case_id == "r2p":
        _jmunu_check(f, inst)
    return f.record()


# ---------- 교차 분류 ----------

def verify_cross(inst: Instance, ctx: RunContext) -> VerificationRecord:
    f = _Findings("cross", inst)
    tables = ctx.tables
    has_complex = bool(candidate_subalgebras(inst, ctx))
    has_symplectic = inst.symplectic.exists
    witness = kahler_witness(inst, ctx) if has_complex and has_symplectic else None
    has_kahler = witness is not None
    ctx.classification[inst.key] = (has_complex, has_symplectic, has_kahler)

    def listed(rows):
        return bool(rows_for(rows, inst.case_id, inst.params))

    expected = (listed(tables.table_3_3), listed(tables.table_4_2), listed(tables.table_5_1))
    computed = (has_complex, has_symplectic, has_kahler)

    def text(flags):
        return "complex={} symplectic={} kahler={}".format(*("YES" if x else "NO" for x in flags))

    status = Status.MATCH if computed == expected else Status.MISMATCH
    f.add(status, text(computed), text(expected))
    if witness:
        f.note(witness)
    elif has_complex and has_symplectic:
        f.note(f"no compatible symplectic form for any of {len(candidate_subalgebras(inst, ctx))} complex structure(s)")
    return f.record()


def cross_summary(ctx: RunContext) -> VerificationRecord:
    groups = {
        "symplectic without complex": [k for k, (c, s, _) in ctx.classification.items() if s and not c],
        "complex without symplectic": [k for k, (c, s, _) in ctx.classification.items() if c and not s],
        "complex and symplectic without Kähler": [
            k for k, (c, s, kk) in ctx.classification.items() if c and s and not kk
        ],
    }
    parts = []
    for title, keys in groups.items():
        names = [f"{c}[{p}]" if p else c for c, p in sorted(keys)]
        parts.append(f"{title}: {', '.join(names) or 'none'}")
    ok = all(groups.values())
    return VerificationRecord(
        table="cross",
        case="summary",
        status=Status.MATCH if ok else Status.MISMATCH,
        computed="; ".join(parts),
        expected="each group has at least one case",
    )


# ---------- 실행 ----------

TABLE_CHECKS = (
    ("2.1", verify_table_2_1),
    ("3.3", verify_table_3_3),
    ("3.5", verify_remark_3_5),
    ("4.2", verify_table_4_2),
    ("4.3", verify_table_4_3),
    ("4.5", verify_table_4_5),
    ("5.1", verify_table_5_1),
    ("cross", verify_cross),
)


def _guarded(table: str, check, inst: Instance, ctx: RunContext) -> VerificationRecord:
    """검사 하나가 터져도 실행 전체는 계속. 예외는 MISMATCH 레코드로 남긴다."""
    try:
        return check(inst, ctx)
    except TablesError:
        raise
    except LieInvError as e:
        log.error("%s on %s failed: %s", table, inst.g.name, e)
        text = str(e)
    except Exception as e:
        log.exception("%s on %s crashed", table, inst.g.name)
        text = f"{type(e).__name__}: {e}"
    return VerificationRecord(table=table, case=inst.case_id, params=inst.params_text,
                              status=Status.MISMATCH, computed=f"error: {text}", expected="a decision")


def verify_instance(inst: Instance, ctx: RunContext) -> List[VerificationRecord]:
    return [_guarded(table, check, inst, ctx) for table, check in TABLE_CHECKS]


def _targets(case_ids: Optional[Sequence[str]], params) -> List[Tuple[str, Dict]]:
    if params is not None:
        if not case_ids or len(case_ids) != 1:
            raise LieInvError("--params needs exactly one --case")
        return [(case_ids[0], params)]
    out = []
    for case_id in case_ids or CASE_IDS:
        out.extend((case_id, p) for p in default_grid(case_id))
    return out


def run_verification(case_ids: Optional[Sequence[str]] = None, params=None,
                     ctx: Optional[RunContext] = None, progress: bool = False) -> List[VerificationRecord]:
    """전체(또는 일부) catalog 에 대해 모든 표를 검증하고 (표, case, 파라미터) 순으로 정렬해서 돌려준다."""
    ctx = ctx or make_context()
    targets = _targets(case_ids, params)
    records: List[VerificationRecord] = []
    for case_id, p in tqdm(targets, desc="verify", unit="instance", disable=not progress):
        inst = ctx.instance(case_id, p)
        records.extend(verify_instance(inst, ctx))
        log.debug("%s verified", inst.g.name)
    if not case_ids:
        records.append(cross_summary(ctx))
    records.sort(key=lambda r: r.sort_key())
    counts = {s.value: sum(r.status is s for r in records) for s in Status}
    log.info("verify: %d record(s) %s", len(records), counts)
    return records


def exit_code(records: Iterable[VerificationRecord], strict: bool = False) -> int:
    failing = {Status.MISMATCH} | ({Status.PAPER_TYPO_SUSPECTED} if strict else set())
    return EXIT_MISMATCH if any(r.status in failing for r in records) else EXIT_OK
