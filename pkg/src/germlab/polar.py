"""Relative polar curves, intersection numbers at the origin, gap ratios, the
Iomdin threshold, and the polar-decomposition check for deformations g + f^N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ComponentMismatchError, ImproperIntersectionError
from .ideals import (
    IdealPresentation,
    dim_at_origin,
    has_power_in,
    quotient_dim_local,
    saturate_single,
)
from .invariants import BranchParam, compose_on_branch, local_degree, order_in_t, validate_branch
from .rings import Poly, jacobian

DEFAULT_POWER_CAP = 6


@dataclass(frozen=True)
class PolarCurve:
    """The symmetric relative polar curve of (f, g) as a scheme at the origin.

    ideal is the 2x2-minors ideal of the Jacobian rows of f and g, saturated
    so that components inside {f*g = 0} (in particular the critical locus of
    g) are removed; components, when supplied, are validated parametrizations
    of its branches.
    """

    ideal: IdealPresentation
    dim: int
    components: tuple[BranchParam, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.dim < 0


@dataclass(frozen=True)
class GapRatio:
    name: str
    ord_g: int
    ord_f: int
    ratio: Fraction


@dataclass(frozen=True)
class GapReport:
    """Per-component gap ratios plus a sound a-priori bound.

    sound_bound is always valid: component ratios never exceed the total
    g-intersection number, so sound_bound = total + 1 certifies N > ratio for
    every component.  exact_max is present only when components are supplied.
    """

    ratios: tuple[GapRatio, ...]
    sound_bound: int
    exact_max: Fraction | None = None

    def __post_init__(self):
        if self.exact_max is not None and self.exact_max > self.sound_bound:
            raise ValueError("exact maximum exceeds the sound bound")


def jacobian_minors(f: Poly, g: Poly) -> list[Poly]:
    """All 2x2 minors of the two Jacobian rows of f and g."""
    df = jacobian(f)
    dg = jacobian(g)
    v = f.ring.nvars
    minors = []
    for i in range(v):
        for j in range(i + 1, v):
            m = df[i] * dg[j] - df[j] * dg[i]
            if not m.is_zero:
                minors.append(m)
    return minors


def relative_polar_ideal(
    f: Poly,
    g: Poly,
    components: Sequence[BranchParam] = (),
    cap=None,
) -> PolarCurve:
    """The relative polar curve of (f, g): dependency locus of df and dg with
    every component inside {f = 0} or {g = 0} removed by saturation."""
    if f.constant_term() != 0 or g.constant_term() != 0:
        raise ValueError("f and g must vanish at the origin")
    ring = f.ring
    minors = jacobian_minors(f, g)
    if not minors:
        ideal = IdealPresentation(ring, [ring.one()])
        return PolarCurve(ideal, -1, tuple(components))
    ideal = saturate_single(IdealPresentation(ring, minors), f * g, cap)
    dim = dim_at_origin(ideal, cap)
    curve = PolarCurve(ideal, dim, tuple(components))
    for comp in curve.components:
        check = validate_branch(comp, ideal)
        if not check:
            gen, order = check.violation or ("?", -1)
            raise ComponentMismatchError(
                f"component {comp.name!r} is not on the polar curve: "
                f"generator {gen} has order {order}"
            )
    return curve


def intersection_number(
    curve: PolarCurve | IdealPresentation, h: Poly, cap=None
) -> int:
    """Intersection number at the origin of the (1-dimensional) scheme with
    the hypersurface {h = 0}, as a local quotient dimension.

    When parametrized components are supplied on a PolarCurve, the sum of
    t-orders of h along them (weighted by declared multiplicities) must equal
    the scheme-side number; a disagreement raises ComponentMismatchError
    rather than guessing which route is right.
    """
    ideal = curve.ideal if isinstance(curve, PolarCurve) else curve
    total = quotient_dim_local(ideal.plus([h]), cap)
    if total is None:
        raise ImproperIntersectionError(
            f"intersection with {h} has positive dimension at the origin"
        )
    if isinstance(curve, PolarCurve) and curve.components:
        by_orders = 0
        for comp in curve.components:
            order = order_in_t(compose_on_branch(h, comp))
            if order is None:
                raise ImproperIntersectionError(
                    f"{h} vanishes identically on component {comp.name!r}"
                )
            by_orders += comp.multiplicity * order
        if by_orders != total:
            raise ComponentMismatchError(
                f"component orders sum to {by_orders} but the scheme-side "
                f"intersection number is {total}; the component list is "
                "incomplete or has wrong multiplicities"
            )
    return total


def gap_ratios(f: Poly, g: Poly, curve: PolarCurve, cap=None) -> GapReport:
    """Gap ratios ord_t g / ord_t f of the polar components, plus a sound
    upper bound derived from the total g-intersection number."""
    if curve.is_empty:
        return GapReport(ratios=(), sound_bound=2, exact_max=None)
    total_g = intersection_number(curve, g, cap)
    sound_bound = total_g + 1
    ratios = []
    for comp in curve.components:
        og = local_degree(g, comp)
        of = local_degree(f, comp)
        ratios.append(GapRatio(comp.name, og, of, Fraction(og, of)))
    exact_max = max((r.ratio for r in ratios), default=None) if curve.components else None
    return GapReport(ratios=tuple(ratios), sound_bound=sound_bound, exact_max=exact_max)


def iomdin_threshold(f: Poly, g: Poly, curve: PolarCurve | None = None, cap=None) -> int:
    """Smallest admissible exponent N for the deformation g + f^N: strictly
    larger than every gap ratio (exactly when components are supplied, by the
    sound bound otherwise) and never less than 2."""
    if curve is None:
        curve = relative_polar_ideal(f, g, cap=cap)
    report = gap_ratios(f, g, curve, cap)
    if report.exact_max is not None:
        return max(2, int(report.exact_max) + 1)
    return max(2, report.sound_bound)


@dataclass(frozen=True)
class DecompositionVerdict:
    """Outcome of checking that the polar curve of (f, g + f^N) equals the
    union of the critical locus of g and the polar curve of (f, g)."""

    status: str  # "PASS" | "FAIL"
    n: int
    witness: str = ""

    def __bool__(self) -> bool:
        return self.status == "PASS"


def verify_polar_decomposition(
    f: Poly,
    g: Poly,
    n: int,
    components: Sequence[BranchParam] = (),
    power_cap: int = DEFAULT_POWER_CAP,
    cap=None,
) -> DecompositionVerdict:
    """Check, at radical level near the origin, that deforming g to g + f^N
    turns the critical locus of g into polar-curve components.

    Both inclusions are certified by power membership of generators (each
    generator of one side has a power in the other side's ideal); supplied
    component parametrizations of either side are additionally validated
    against the deformed polar ideal.
    """
    if n < 2:
        raise ValueError("the deformation exponent must be at least 2")
    g_tilde = g + f**n
    deformed = relative_polar_ideal(f, g_tilde, cap=cap).ideal
    base = relative_polar_ideal(f, g, cap=cap).ideal
    jac_g = IdealPresentation(g.ring, jacobian(g))
    product_gens = [a * b for a in jac_g.generators for b in base.generators]
    product = IdealPresentation(g.ring, product_gens)

    for p in product.generators:
        if not has_power_in(p, deformed, power_cap, cap):
            return DecompositionVerdict(
                "FAIL", n, witness=f"no power of {p} lies in the deformed polar ideal"
            )
    for q in deformed.generators:
        if not has_power_in(q, product, power_cap, cap):
            return DecompositionVerdict(
                "FAIL", n, witness=f"no power of {q} lies in Jac(g) * polar(f, g)"
            )
    for comp in components:
        check = validate_branch(comp, deformed)
        if not check:
            gen, order = check.violation or ("?", -1)
            return DecompositionVerdict(
                "FAIL",
                n,
                witness=f"component {comp.name!r} fails against the deformed polar "
                f"ideal: generator {gen} has order {order}",
            )
    return DecompositionVerdict("PASS", n)
