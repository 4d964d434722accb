"""Deformation verifier: builds g + f^N across a sweep of exponents, certifies
isolation, and checks the deformation identities row by row.

Rows below the gap-ratio threshold are labeled OUT-OF-RANGE and evaluated for
information only; their outcomes are never asserted.  Rows at or above the
threshold must pass: a non-isolated deformation there is a hard error, and
any failing identity makes the table (and the CLI) report failure.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .errors import (
    DegenerateBranchError,
    GenericityError,
    GermlabError,
    HypothesisError,
    UndefinedLeError,
)
from .ideals import IdealPresentation, dim_at_origin, quotient_dim_local
from .invariants import (
    MAX_TAU_HALVINGS,
    BranchParam,
    SliceSpec,
    branch_slice_milnor,
    jacobian_ideal,
    local_degree,
    milnor_number,
    restrict_to_hyperplane,
    translate,
    validate_branch,
)
from .le import LeData, euler_char_fibre, le_numbers
from .polar import (
    PolarCurve,
    intersection_number,
    iomdin_threshold,
    relative_polar_ideal,
)
from .rings import Poly
from .scenario import Scenario
from .stratified import BranchTableRow, IdentityVerdict, StratifiedDataset, StratumRecord

MAX_LADDER_ATTEMPTS = 16
SCHEMA_VERSION = "1"


def generic_linear_candidates(ring, attempts: int = MAX_LADDER_ATTEMPTS):
    """Deterministic ladder of candidate generic linear forms.

    Attempt k uses coefficients 1, 1 + (k+1), 1 + 2(k+1), ...; randomness is
    never used, so reruns pick identical forms.
    """
    for k in range(attempts):
        form = ring.zero()
        for i in range(ring.nvars):
            form = form + ring.variable(i) * (1 + i * (k + 1))
        yield form


@dataclass(frozen=True)
class HypothesisChecks:
    """Results of the deformation-case hypotheses.

    The first three are hard requirements; slice_tractable records whether g
    restricted to {f = 0} has at worst an isolated critical point (checkable
    for linear f) and is reported without being enforced.
    """

    sigma_dim: int
    sigma_meets_f_only_at_origin: bool
    f_isolated: bool
    slice_tractable: bool | None

    @property
    def ok(self) -> bool:
        return self.sigma_dim <= 1 and self.sigma_meets_f_only_at_origin and self.f_isolated


@dataclass(frozen=True)
class DeformationCase:
    """One deformation g_tilde = g + f^N with its isolation certificate."""

    g: Poly
    f: Poly
    n: int
    g_tilde: Poly
    certificate: int | None  # local Jacobian quotient dimension, None = infinite
    threshold: int
    hypotheses: HypothesisChecks

    @property
    def is_isolated(self) -> bool:
        return self.certificate is not None


def check_hypotheses(g: Poly, f: Poly, cap=None) -> HypothesisChecks:
    jac_g = jacobian_ideal(g)
    sigma_dim = dim_at_origin(jac_g, cap)
    meets = dim_at_origin(jac_g.plus([f]), cap) <= 0
    f_isolated = dim_at_origin(jacobian_ideal(f), cap) <= 0
    slice_tractable = None
    if f.is_linear_form:
        restricted = restrict_to_hyperplane(g, f)
        slice_tractable = dim_at_origin(jacobian_ideal(restricted), cap) <= 0
    return HypothesisChecks(sigma_dim, meets, f_isolated, slice_tractable)


def build_deformation(g: Poly, f: Poly, n: int, threshold: int | None = None, cap=None) -> DeformationCase:
    """Assemble g + f^N after checking the case hypotheses.

    Raises HypothesisError when a hard hypothesis fails, and when the
    deformation is not isolated although n reached the threshold.
    """
    if n < 2:
        raise ValueError("the deformation exponent must be at least 2")
    hypotheses = check_hypotheses(g, f, cap)
    if hypotheses.sigma_dim > 1:
        raise HypothesisError("sigma-dimension", f"critical locus has dimension {hypotheses.sigma_dim}")
    if not hypotheses.sigma_meets_f_only_at_origin:
        raise HypothesisError(
            "sigma-meets-f", "the critical locus of g meets {f = 0} outside the origin"
        )
    if not hypotheses.f_isolated:
        raise HypothesisError("f-isolated", "f does not have an isolated singularity at the origin")
    if threshold is None:
        threshold = iomdin_threshold(f, g, cap=cap)
    g_tilde = g + f**n
    certificate = quotient_dim_local(jacobian_ideal(g_tilde), cap)
    if certificate is None and n >= threshold:
        raise HypothesisError(
            "isolation-at-threshold",
            f"g + f^{n} has a non-isolated singularity although n >= threshold {threshold}",
        )
    return DeformationCase(g, f, n, g_tilde, certificate, threshold, hypotheses)


@dataclass(frozen=True)
class BranchTerm:
    """Per-branch data entering the identity sums: the local degree of f and
    the Milnor number of the slice of g at a branch point."""

    name: str
    multiplicity: int
    local_degree: int
    slice_milnor: int


def branch_terms(g: Poly, f: Poly, branches: Sequence[BranchParam], cap=None) -> tuple[BranchTerm, ...]:
    terms = []
    for b in branches:
        m = local_degree(f, b)
        mu = branch_slice_milnor(g, SliceSpec(f), b, cap)
        terms.append(BranchTerm(b.name, b.multiplicity, m, mu))
    return tuple(terms)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def verify_le_number_identity(case: DeformationCase, le: LeData) -> IdentityVerdict:
    """mu of the deformation against lambda0 + (N-1) * lambda1."""
    if not case.f.is_linear_form:
        return IdentityVerdict("massey", "SKIPPED", note="needs a linear deformation direction")
    if case.certificate is None:
        return IdentityVerdict("massey", "SKIPPED", note="deformation is not isolated")
    left = case.certificate
    right = le.lambda0 + (case.n - 1) * le.lambda1
    return IdentityVerdict("massey", "PASS" if left == right else "FAIL", left=left, right=right)


def verify_chi_identity(
    case: DeformationCase, chi_g: int, terms: Sequence[BranchTerm] | None
) -> IdentityVerdict:
    """Euler characteristic of the deformed fibre against the branch sum."""
    if terms is None:
        return IdentityVerdict("chi", "SKIPPED", note="branch slice data needs a linear deformation direction")
    if case.certificate is None:
        return IdentityVerdict("chi", "SKIPPED", note="deformation is not isolated")
    v = case.g.ring.nvars
    left = 1 + _sign(v - 1) * case.certificate
    right = chi_g + _sign(v - 1) * case.n * sum(
        t.multiplicity * t.local_degree * t.slice_milnor for t in terms
    )
    return IdentityVerdict("chi", "PASS" if left == right else "FAIL", left=left, right=right)


def verify_tibar_identity(
    case: DeformationCase, chi_g: int, terms: Sequence[BranchTerm] | None
) -> IdentityVerdict:
    """Fibre Euler-characteristic defect against N * sum m_b (1 - chi(F_b))."""
    if not case.f.is_linear_form or terms is None:
        return IdentityVerdict("tibar", "SKIPPED", note="stated for a generic linear form")
    if case.certificate is None:
        return IdentityVerdict("tibar", "SKIPPED", note="deformation is not isolated")
    v = case.g.ring.nvars
    chi_gtilde = 1 + _sign(v - 1) * case.certificate
    left = chi_gtilde - chi_g
    right = case.n * sum(
        t.multiplicity * t.local_degree * (1 - (1 + _sign(v - 2) * t.slice_milnor))
        for t in terms
    )
    return IdentityVerdict("tibar", "PASS" if left == right else "FAIL", left=left, right=right)


def morse_defect(
    case: DeformationCase, chi_g: int, terms: Sequence[BranchTerm] | None
) -> tuple[IdentityVerdict, int | None, int | None]:
    """Morse-count defect both ways: from the chi values and from the branch
    expansion; the two derived counts must agree."""
    if terms is None:
        return (
            IdentityVerdict("morse", "SKIPPED", note="branch slice data needs a linear deformation direction"),
            None,
            None,
        )
    if case.certificate is None:
        return (IdentityVerdict("morse", "SKIPPED", note="deformation is not isolated"), None, None)
    v = case.g.ring.nvars
    d = v
    chi_gtilde = 1 + _sign(v - 1) * case.certificate
    defect = _sign(d - 1) * (chi_g - chi_gtilde)  # n - n~
    expansion = _sign(d - 1) * case.n * sum(
        t.multiplicity * t.local_degree * _sign(v - 1) * t.slice_milnor for t in terms
    )  # n~ - n
    verdict = IdentityVerdict(
        "morse",
        "PASS" if -defect == expansion else "FAIL",
        left=-defect,
        right=expansion,
        note="n~ - n via chi defect vs branch expansion",
    )
    return verdict, defect, expansion


def verify_gap_stability(case: DeformationCase, polar: PolarCurve, cap=None) -> IdentityVerdict:
    """Intersection of the polar curve with V(g) against V(g + f^N)."""
    if polar.is_empty:
        return IdentityVerdict("polar_stability", "SKIPPED", note="empty polar curve")
    left = intersection_number(polar, case.g, cap)
    try:
        right = intersection_number(polar, case.g_tilde, cap)
    except GermlabError as exc:
        return IdentityVerdict("polar_stability", "FAIL", left=left, right=str(exc))
    return IdentityVerdict(
        "polar_stability", "PASS" if left == right else "FAIL", left=left, right=right
    )


@dataclass(frozen=True)
class SweepRow:
    n: int
    in_range: bool
    certificate: int | None
    chi_gtilde: int | None
    verdicts: tuple[IdentityVerdict, ...]
    morse_defect: int | None
    morse_expansion: int | None

    @property
    def ok(self) -> bool:
        return self.certificate is not None and all(
            v.status != "FAIL" for v in self.verdicts
        )


@dataclass
class VerdictTable:
    scenario: str
    variables: tuple[str, ...]
    g: str
    f: str
    threshold: int
    le: LeData
    chi_g: int
    terms: tuple[BranchTerm, ...] | None
    rows: list[SweepRow] = field(default_factory=list)
    defaults: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        asserted = [row for row in self.rows if row.in_range]
        return all(row.ok for row in asserted)

    def to_json_dict(self) -> dict:
        def verdict_dict(v: IdentityVerdict) -> dict:
            out: dict[str, Any] = {"name": v.name, "status": v.status}
            if v.left is not None:
                out["left"] = v.left
            if v.right is not None:
                out["right"] = v.right
            if v.note:
                out["note"] = v.note
            return out

        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "verdict-table",
            "scenario": self.scenario,
            "variables": list(self.variables),
            "g": self.g,
            "f": self.f,
            "threshold": self.threshold,
            "lambda0": self.le.lambda0,
            "lambda1": self.le.lambda1,
            "chi_fibre_g": self.chi_g,
            "branch_terms": None
            if self.terms is None
            else [
                {
                    "name": t.name,
                    "multiplicity": t.multiplicity,
                    "local_degree": t.local_degree,
                    "slice_milnor": t.slice_milnor,
                }
                for t in self.terms
            ],
            "defaults": self.defaults,
            "ok": self.ok,
            "rows": [
                {
                    "N": row.n,
                    "asserted": row.in_range,
                    "range_label": "IN-RANGE" if row.in_range else "OUT-OF-RANGE",
                    "mu_gtilde": "INFINITE" if row.certificate is None else row.certificate,
                    "chi_gtilde": row.chi_gtilde,
                    "morse_defect": row.morse_defect,
                    "morse_expansion": row.morse_expansion,
                    "verdicts": [verdict_dict(v) for v in row.verdicts],
                }
                for row in self.rows
            ],
        }

    def to_text(self) -> str:
        lines = [
            f"scenario {self.scenario}: g = {self.g}, f = {self.f}",
            f"lambda = ({self.le.lambda0}, {self.le.lambda1}), chi(F_g) = {self.chi_g}, "
            f"threshold = {self.threshold}",
        ]
        for row in self.rows:
            mu = "INFINITE" if row.certificate is None else row.certificate
            label = "" if row.in_range else "  [OUT-OF-RANGE, informational]"
            lines.append(f"N = {row.n}: mu(g~) = {mu}{label}")
            for v in row.verdicts:
                sides = ""
                if v.left is not None or v.right is not None:
                    sides = f"  left={v.left} right={v.right}"
                note = f"  ({v.note})" if v.note else ""
                lines.append(f"    {v.name:<16} {v.status}{sides}{note}")
        lines.append(f"overall: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def resolve_linear_form(scenario: Scenario, cap=None) -> tuple[Poly, LeData]:
    """The scenario's deformation direction and the Le data computed with it.

    An explicit f is used as given (linear f doubles as the coordinate form);
    a GENERIC-LINEAR request walks the deterministic ladder until every
    genericity check passes.
    """
    assert scenario.ring is not None and scenario.g is not None
    g = scenario.g
    sigma_branches = tuple(b for b in scenario.branches if b.host == "sigma")
    if scenario.f is not None:
        f = scenario.f
        if f.is_linear_form:
            le = le_numbers(g, f, sigma_branches, cap)
        else:
            le = _le_with_ladder(scenario, sigma_branches, cap)
        return f, le

    last_error: Exception | None = None
    for candidate in generic_linear_candidates(scenario.ring):
        try:
            if dim_at_origin(jacobian_ideal(g).plus([candidate]), cap) > 0:
                raise GenericityError("candidate form contains a critical branch")
            le = le_numbers(g, candidate, sigma_branches, cap)
            return candidate, le
        except (UndefinedLeError, DegenerateBranchError, GenericityError) as exc:
            last_error = exc
    raise GenericityError(f"generic linear ladder exhausted: {last_error}")


def _le_with_ladder(scenario: Scenario, sigma_branches, cap=None) -> LeData:
    assert scenario.ring is not None and scenario.g is not None
    last_error: Exception | None = None
    for candidate in generic_linear_candidates(scenario.ring):
        try:
            return le_numbers(scenario.g, candidate, sigma_branches, cap)
        except (UndefinedLeError, DegenerateBranchError) as exc:
            last_error = exc
    raise GenericityError(f"generic linear ladder exhausted: {last_error}")


def verify_scenario(
    scenario: Scenario,
    n_range: tuple[int, int] | None = None,
    jobs: int = 1,
    relative_to_threshold: bool = False,
) -> VerdictTable:
    """Run the whole pipeline on a scenario and assemble the verdict table.

    With relative_to_threshold the sweep runs over threshold .. threshold +
    (hi - lo) regardless of the requested bounds, which keeps fixture sweeps
    aligned with their thresholds.
    """
    if scenario.ring is None or scenario.g is None:
        raise GermlabError("this scenario carries only a stratified dataset; nothing to deform")
    cap = scenario.limits.reduction_cap
    g = scenario.g
    f, le = resolve_linear_form(scenario, cap)
    chi_g = euler_char_fibre(g, le)

    sigma_branches = tuple(b for b in scenario.branches if b.host == "sigma")
    polar_branches = tuple(b for b in scenario.branches if b.host == "polar")
    for b in sigma_branches:
        check = validate_branch(b, jacobian_ideal(g))
        if not check:
            gen, order = check.violation or ("?", -1)
            raise GermlabError(
                f"branch {b.name!r} is not on the critical locus: generator {gen} "
                f"vanishes only to order {order}"
            )
    polar = relative_polar_ideal(f, g, components=polar_branches, cap=cap)
    threshold = iomdin_threshold(f, g, polar, cap=cap)

    terms: tuple[BranchTerm, ...] | None
    if f.is_linear_form:
        terms = branch_terms(g, f, sigma_branches, cap)
    else:
        terms = None

    lo, hi = n_range if n_range is not None else scenario.n_range
    if relative_to_threshold:
        lo, hi = threshold, threshold + (hi - lo)

    def make_row(n: int) -> SweepRow:
        case = build_deformation(g, f, n, threshold, cap)
        verdicts = [
            verify_le_number_identity(case, le),
            verify_chi_identity(case, chi_g, terms),
            verify_tibar_identity(case, chi_g, terms),
        ]
        morse_verdict, defect, expansion = morse_defect(case, chi_g, terms)
        verdicts.append(morse_verdict)
        verdicts.append(verify_gap_stability(case, polar, cap))
        v = g.ring.nvars
        chi_gtilde = None if case.certificate is None else 1 + _sign(v - 1) * case.certificate
        return SweepRow(
            n=n,
            in_range=n >= threshold,
            certificate=case.certificate,
            chi_gtilde=chi_gtilde,
            verdicts=tuple(verdicts),
            morse_defect=defect,
            morse_expansion=expansion,
        )

    ns = list(range(lo, hi + 1))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(make_row, ns))
    else:
        rows = [make_row(n) for n in ns]

    return VerdictTable(
        scenario=scenario.name,
        variables=scenario.ring.variables,
        g=str(g),
        f=str(f),
        threshold=threshold,
        le=le,
        chi_g=chi_g,
        terms=terms,
        rows=rows,
        defaults={
            "N": list(scenario.n_range),
            "limits": {
                "reduction_cap": scenario.limits.reduction_cap,
                "power_cap": scenario.limits.power_cap,
                "trunc": scenario.limits.trunc,
                "halvings": scenario.limits.halvings,
            },
        },
    )


# ---------------------------------------------------------------------------
# dataset export
# ---------------------------------------------------------------------------


def _slice_milnor_at_origin(g: Poly, form: Poly, cap=None) -> int | None:
    """Milnor number of g restricted to {form = 0}; None when non-isolated."""
    restricted = restrict_to_hyperplane(g, form)
    restricted = restricted - restricted.constant_term()
    if restricted.is_zero or dim_at_origin(jacobian_ideal(restricted), cap) > 0:
        return None
    return milnor_number(restricted, cap)


def _certify_slice_generic(scenario: Scenario, f: Poly, g_tilde: Poly, cap=None) -> bool:
    """Whether the f-hyperplane slices of g and of the deformation carry the
    same Milnor numbers as slices by a ladder-generic form.

    This is the gate for exporting Euler obstructions (quantities defined
    through generic hyperplanes) out of f-slice data: a special direction
    like f = x - y against x^2*y^2 - (x-y)^2 inflates the slice invariants
    and would plant wrong absolute values.
    """
    assert scenario.ring is not None and scenario.g is not None
    for candidate in generic_linear_candidates(scenario.ring):
        if candidate == f:
            return True
        via_f = _slice_milnor_at_origin(scenario.g, f, cap)
        via_l = _slice_milnor_at_origin(scenario.g, candidate, cap)
        if via_l is None:
            continue  # unlucky ladder rung, try the next form
        if via_f != via_l:
            return False
        return _slice_milnor_at_origin(g_tilde, f, cap) == _slice_milnor_at_origin(
            g_tilde, candidate, cap
        )
    return False


def export_dataset(scenario: Scenario, n: int) -> StratifiedDataset:
    """Distill a verified deformation run at one exponent into stratified data.

    Every exported number has an honest route: Euler characteristics come from
    the Le pair and the deformation's Milnor number, Morse counts from polar
    intersection numbers, restriction values from slice Milnor numbers, and
    Euler obstructions either from curve multiplicities (two variables) or
    from transverse slice data once the f-direction is certified to behave
    generically (three variables).  Quantities without a sound route for the
    scenario at hand are omitted, which downgrades the identities that need
    them to SKIPPED.
    """
    if scenario.ring is None or scenario.g is None:
        raise GermlabError("dataset export needs a polynomial scenario")
    cap = scenario.limits.reduction_cap
    g = scenario.g
    f, le = resolve_linear_form(scenario, cap)
    v = scenario.ring.nvars
    chi_g = euler_char_fibre(g, le)

    case = build_deformation(g, f, n, cap=cap)
    if case.certificate is None:
        raise HypothesisError("isolation", f"g + f^{n} is not isolated; export needs an isolated deformation")
    chi_gtilde = 1 + _sign(v - 1) * case.certificate

    mu_f = milnor_number(f, cap) if dim_at_origin(jacobian_ideal(f), cap) <= 0 else None
    chi_f_fibre = None if mu_f is None else 1 + _sign(v - 1) * mu_f

    sigma_branches = tuple(b for b in scenario.branches if b.host == "sigma")
    terms = branch_terms(g, f, sigma_branches, cap) if f.is_linear_form else None

    chi = {"g": chi_g, "gtilde": chi_gtilde, "l": 1}
    if chi_f_fibre is not None:
        chi["f"] = chi_f_fibre
    strata = (
        StratumRecord("origin", 0, 1, {}, frozenset()),
        StratumRecord("regular", v, 1, chi, frozenset()),
    )

    known: dict[str, int] = {
        "d": v,
        "N": n,
        "eu_X_0": 1,
        "B_g_X_0": chi_g,
        "B_gtilde_X_0": chi_gtilde,
    }

    polar = relative_polar_ideal(f, g, cap=cap)
    known["m"] = 0 if polar.is_empty else intersection_number(polar, f, cap)
    deformed_polar = relative_polar_ideal(f, case.g_tilde, cap=cap)
    known["m_tilde"] = (
        0 if deformed_polar.is_empty else intersection_number(deformed_polar, f, cap)
    )

    certified = (
        _certify_slice_generic(scenario, f, case.g_tilde, cap) if f.is_linear_form else False
    )

    rows: tuple[BranchTableRow, ...] | None = None
    if terms is not None:
        row_list = []
        for b, t in zip(sigma_branches, terms):
            chi_f_j = 1 + _sign(v - 2) * t.slice_milnor
            fields: dict[str, int] = {
                "m_f": t.local_degree,
                "eu_X_b": 1,
                "B_g_f_fibre": chi_f_j,
                "eu_g_f_fibre": 1 - chi_f_j,
                "eu_f_gtilde_fibre": _sign(v - 1) * t.slice_milnor,
                "B_f_gtilde_fibre": chi_f_j,
            }
            if v == 3 and t.local_degree == 1:
                # the f-slice meets the branch transversally, so its germ is
                # a transverse curve slice and the obstruction is its
                # multiplicity
                fields["eu_Xg_b"] = _transverse_multiplicity(g, f, b)
            row_list.append(BranchTableRow(b.name, **fields))
        rows = tuple(row_list)

    if f.is_linear_form:
        mu_h = _slice_milnor_at_origin(g, f, cap)
        if mu_h is not None:
            # g and its deformation agree on {f = 0}, so one slice Milnor
            # number covers both restriction values; the swap value comes from
            # the partial-smoothing route for the f-slice of the deformed
            # hypersurface, which is smooth off the origin
            chi_slice = 1 + _sign(v - 2) * mu_h
            known["B_g_Xf_0"] = chi_slice
            known["B_gtilde_Xf_0"] = chi_slice
            known["B_f_Xgtilde_0"] = chi_slice
            if v == 2 and rows == () and case.hypotheses.sigma_dim <= 0:
                # reduced plane curves: obstructions are germ multiplicities
                # and the Brasselet numbers of f count slice points exactly
                known["eu_Xg_0"] = g.min_degree()
                known["eu_Xgtilde_0"] = case.g_tilde.min_degree()
                known["B_f_Xg_0"] = intersection_number(
                    IdealPresentation(g.ring, [g]), f, cap
                )
                known["B_f_Xgtilde_0"] = intersection_number(
                    IdealPresentation(g.ring, [case.g_tilde]), f, cap
                )
            elif v == 3 and certified and rows is not None and all(
                r.eu_Xg_b is not None for r in rows
            ):
                # chi of the hyperplane slice of the g-hypersurface: the
                # generic-slice value corrected by the vanishing cycles at the
                # branch points, then reweighted by the per-branch Euler
                # obstructions
                known["eu_Xgtilde_0"] = chi_slice
                link_chi = chi_slice - _sign(v - 2) * sum(
                    t.multiplicity * t.local_degree * t.slice_milnor for t in terms or ()
                )
                eu_xg = link_chi
                for r, t in zip(rows, terms or ()):
                    assert r.eu_Xg_b is not None
                    eu_xg += t.multiplicity * t.local_degree * (r.eu_Xg_b - 1)
                known["eu_Xg_0"] = eu_xg
                known["B_f_Xg_0"] = eu_xg

    dataset = StratifiedDataset(
        strata=strata,
        branch_table=rows,
        known=known,
        f_is_linear=certified,
    )
    dataset.validate()
    return dataset


def _transverse_multiplicity(g: Poly, f: Poly, branch: BranchParam) -> int:
    """Multiplicity of the transverse slice germ of {g = 0} at a branch point:
    the minimal total degree of g translated to the point and restricted to
    the f-hyperplane through it.  Walks the same shrinking parameter ladder
    as the slice Milnor numbers to step past accidental degenerations."""

    def at(tau: Fraction) -> int:
        point = branch.point_at(tau)
        sliced = restrict_to_hyperplane(translate(g, point), f)
        return (sliced - sliced.constant_term()).min_degree()

    tau = Fraction(1, 2)
    previous = at(tau)
    for _ in range(MAX_TAU_HALVINGS):
        tau = tau / 2
        current = at(tau)
        if current == previous:
            return current
        previous = current
    raise GermlabError(
        f"transverse multiplicity along branch {branch.name!r} never stabilized"
    )
