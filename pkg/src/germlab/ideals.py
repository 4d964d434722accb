"""Ideal arithmetic: normal forms, standard bases, local quotient dimensions,
dimension at the origin, colon ideals and saturation.

Global orders use ordinary multivariate division and Buchberger's algorithm.
Local orders use Mora reduction with ecart control, which terminates on
polynomial input; the resulting bases are standard bases of the localized
ideal at the origin.  Every loop spends from an iteration budget and raises
IterationLimitError instead of spinning.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GermlabError, IterationLimitError, RingMismatchError
from .orders import DEGREVLEX, ELIM_FIRST, LOCAL, MonomialOrder, ecart, leading_term
from .rings import Exponents, Poly, PolyRing, mono_div, mono_divides, mono_lcm, mono_mul

DEFAULT_REDUCTION_CAP = 10**6


class Budget:
    """A decrementing step counter shared across one top-level computation."""

    __slots__ = ("remaining",)

    def __init__(self, cap: int | None = None):
        self.remaining = DEFAULT_REDUCTION_CAP if cap is None else int(cap)

    def spend(self, n: int = 1) -> None:
        self.remaining -= n
        if self.remaining < 0:
            raise IterationLimitError("reduction step cap exceeded")


def _as_budget(cap) -> Budget:
    return cap if isinstance(cap, Budget) else Budget(cap)


def _check_same_ring(polys: Iterable[Poly]) -> PolyRing:
    ring = None
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise RingMismatchError("all polynomials must share one ring")
    if ring is None:
        raise ValueError("empty polynomial collection")
    return ring


def _shift(p: Poly, exps: Exponents, coeff: Fraction) -> Poly:
    """coeff * x^exps * p."""
    return Poly._make(
        p.ring, {mono_mul(e, exps): c * coeff for e, c in p.terms.items()}
    )


def _monic(p: Poly, order: MonomialOrder) -> Poly:
    _, lc = leading_term(p, order)
    return p if lc == 1 else p * (1 / lc)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------


def _divide_global(p: Poly, basis: Sequence[Poly], order: MonomialOrder, budget: Budget) -> Poly:
    """Fully reduced remainder of p modulo basis for a global order."""
    lead = [leading_term(g, order) for g in basis]
    rem_terms: dict[Exponents, Fraction] = {}
    h = p
    while not h.is_zero:
        lm, lc = leading_term(h, order)
        for g, (lmg, lcg) in zip(basis, lead):
            if mono_divides(lmg, lm):
                budget.spend()
                h = h - _shift(g, mono_div(lm, lmg), lc / lcg)
                break
        else:
            rem_terms[lm] = lc
            h = h - Poly._make(h.ring, {lm: lc})
    return Poly._make(p.ring, rem_terms)


def _mora_weak(p: Poly, basis: Sequence[Poly], order: MonomialOrder, budget: Budget) -> Poly:
    """Mora weak normal form: the leading term of the result is irreducible.

    The returned remainder r satisfies u*p = q + r in the local ring for some
    unit u and q in the ideal generated by the basis; in particular r == 0
    exactly when p lies in the localized ideal, provided the basis is a
    standard basis.
    """
    reducers = list(basis)
    ecarts = [ecart(g, order) for g in reducers]
    h = p
    while not h.is_zero:
        lm, lc = leading_term(h, order)
        best = -1
        best_ecart = None
        for i, g in enumerate(reducers):
            lmg, _ = leading_term(g, order)
            if mono_divides(lmg, lm) and (best_ecart is None or ecarts[i] < best_ecart):
                best = i
                best_ecart = ecarts[i]
        if best < 0:
            return h
        eh = h.total_degree() - sum(lm)
        if best_ecart is not None and best_ecart > eh:
            reducers.append(h)
            ecarts.append(eh)
        g = reducers[best]
        lmg, lcg = leading_term(g, order)
        budget.spend()
        h = h - _shift(g, mono_div(lm, lmg), lc / lcg)
    return h


def _reduce_local(p: Poly, basis: Sequence[Poly], order: MonomialOrder, budget: Budget) -> Poly:
    """Tail-reduced local normal form: pop irreducible leading terms and keep
    running Mora reduction on the rest.  Termination is budget-guarded."""
    rem_terms: dict[Exponents, Fraction] = {}
    h = p
    while not h.is_zero:
        h = _mora_weak(h, basis, order, budget)
        if h.is_zero:
            break
        lm, lc = leading_term(h, order)
        rem_terms[lm] = lc
        h = h - Poly._make(h.ring, {lm: lc})
    return Poly._make(p.ring, rem_terms)


def normal_form(p: Poly, basis: Sequence[Poly], order: MonomialOrder, cap=None) -> Poly:
    """Remainder of p on division by basis.

    No term of the result is divisible by a basis leading term.  For global
    orders the difference p - result lies in the ideal generated by the basis;
    for local orders the statement holds in the local ring up to a unit
    factor, and result == 0 still characterizes ideal membership whenever the
    basis is a standard basis.
    """
    budget = _as_budget(cap)
    basis = [g for g in basis if not g.is_zero]
    if not basis:
        return p
    _check_same_ring([p, *basis])
    if order.is_global:
        return _divide_global(p, basis, order, budget)
    return _reduce_local(p, basis, order, budget)


def _weak_nf(p: Poly, basis: Sequence[Poly], order: MonomialOrder, budget: Budget) -> Poly:
    """Cheapest normal form adequate for membership tests and basis building."""
    if order.is_global:
        return _divide_global(p, basis, order, budget)
    return _mora_weak(p, basis, order, budget)


# ---------------------------------------------------------------------------
# standard bases
# ---------------------------------------------------------------------------


def _spoly(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    lmf, lcf = leading_term(f, order)
    lmg, lcg = leading_term(g, order)
    lcm = mono_lcm(lmf, lmg)
    return _shift(f, mono_div(lcm, lmf), 1 / lcf) - _shift(g, mono_div(lcm, lmg), 1 / lcg)


def _interreduce_global(basis: list[Poly], order: MonomialOrder, budget: Budget) -> list[Poly]:
    """Tail-reduce a minimal global basis to the unique reduced basis."""
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1 :]
            r = _divide_global(basis[i], others, order, budget)
            if r != basis[i]:
                if r.is_zero:
                    raise GermlabError("interreduction killed a minimal basis element")
                basis[i] = _monic(r, order)
                changed = True
    return basis


def standard_basis_of(
    generators: Sequence[Poly], order: MonomialOrder, cap=None
) -> tuple[Poly, ...]:
    """Buchberger/Mora completion of the generators under the given order.

    The result is deterministic: pairs are selected by smallest lcm key, the
    basis is minimalized, made monic, sorted by leading monomial, and (for
    global orders) fully tail-reduced.
    """
    budget = _as_budget(cap)
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        return ()
    _check_same_ring(gens)
    gens = [_monic(g, order) for g in gens]
    gens.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    basis: list[Poly] = []
    for g in gens:
        if g not in basis:
            basis.append(g)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        budget.spend()
        def pair_key(pr):
            i, j = pr
            lcm = mono_lcm(
                leading_term(basis[i], order)[0], leading_term(basis[j], order)[0]
            )
            return (order.key(lcm), i, j)

        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        lmi = leading_term(basis[i], order)[0]
        lmj = leading_term(basis[j], order)[0]
        if mono_lcm(lmi, lmj) == mono_mul(lmi, lmj):
            continue  # coprime leading terms reduce to zero
        s = _spoly(basis[i], basis[j], order)
        if s.is_zero:
            continue
        r = _weak_nf(s, basis, order, budget)
        if r.is_zero:
            continue
        r = _monic(r, order)
        basis.append(r)
        k = len(basis) - 1
        pairs.update((i2, k) for i2 in range(k))

    # minimalize: drop elements whose leading monomial is divisible by another
    lead = [leading_term(g, order)[0] for g in basis]
    keep: list[int] = []
    for i, lm in enumerate(lead):
        dominated = False
        for j, lm2 in enumerate(lead):
            if i == j:
                continue
            if mono_divides(lm2, lm) and (lm2 != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    minimal.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    if order.is_global:
        minimal = _interreduce_global(minimal, order, budget)
        minimal.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    return tuple(minimal)


def standard_basis(I: "IdealPresentation", order: MonomialOrder, cap=None) -> tuple[Poly, ...]:
    """Standard basis of a presented ideal under the given order (cached)."""
    return I.standard_basis(order, cap)


class IdealPresentation:
    """A generator list together with cached standard bases per order.

    The cache is confined to this object; distinct presentations never share
    state, so separate sessions are safe to use on separate threads.
    """

    __slots__ = ("ring", "generators", "_bases")

    def __init__(self, ring: PolyRing, generators: Iterable[Poly] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator ring mismatch")
            if not g.is_zero and g not in gens:
                gens.append(g)
        if not gens:
            gens = [ring.zero()]
        self.ring = ring
        self.generators = tuple(gens)
        self._bases: dict[MonomialOrder, tuple[Poly, ...]] = {}

    @classmethod
    def span(cls, *polys: Poly) -> "IdealPresentation":
        if not polys:
            raise ValueError("need at least one generator")
        return cls(polys[0].ring, polys)

    def standard_basis(self, order: MonomialOrder, cap=None) -> tuple[Poly, ...]:
        cached = self._bases.get(order)
        if cached is None:
            cached = standard_basis_of(self.generators, order, cap)
            self._bases[order] = cached
        return cached

    def plus(self, extra: Iterable[Poly]) -> "IdealPresentation":
        return IdealPresentation(self.ring, list(self.generators) + list(extra))

    def is_zero_ideal(self) -> bool:
        return all(g.is_zero for g in self.generators)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal<{gens}>"


def contains(I: IdealPresentation, p: Poly, order: MonomialOrder = LOCAL, cap=None) -> bool:
    """Ideal membership of p, local by default (membership in the localized
    ideal at the origin)."""
    if p.is_zero:
        return True
    basis = I.standard_basis(order, cap)
    if not basis:
        return False
    return _weak_nf(p, basis, order, _as_budget(cap)).is_zero


def ideal_contains(I: IdealPresentation, J: IdealPresentation, order: MonomialOrder, cap=None) -> bool:
    return all(contains(I, g, order, cap) for g in J.generators)


def ideal_equal(I: IdealPresentation, J: IdealPresentation, order: MonomialOrder = DEGREVLEX, cap=None) -> bool:
    return ideal_contains(I, J, order, cap) and ideal_contains(J, I, order, cap)


# ---------------------------------------------------------------------------
# local quotient dimension and dimension at the origin
# ---------------------------------------------------------------------------


def _local_leading_monomials(I: IdealPresentation, cap) -> list[Exponents]:
    basis = I.standard_basis(LOCAL, cap)
    return [leading_term(g, LOCAL)[0] for g in basis]


def quotient_dim_local(I: IdealPresentation, cap=None) -> int | None:
    """Dimension over QQ of the local ring at the origin modulo I.

    Counts standard monomials of the local standard basis.  Returns None when
    the quotient is infinite-dimensional, which happens exactly when some
    variable has no pure power among the leading terms.
    """
    lms = _local_leading_monomials(I, cap)
    if not lms:
        return None  # zero ideal in at least one variable
    v = I.ring.nvars
    zero = (0,) * v
    if zero in lms:
        return 0
    bounds = []
    for i in range(v):
        pure = [e[i] for e in lms if all(x == 0 for j, x in enumerate(e) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    count = 0
    for exps in itertools.product(*(range(b) for b in bounds)):
        if not any(mono_divides(lm, exps) for lm in lms):
            count += 1
    return count


def dim_at_origin(I: IdealPresentation, cap=None) -> int:
    """Krull dimension at the origin of the vanishing locus of I.

    Returns -1 for the empty germ (unit ideal).  Computed from the staircase
    of the local leading-term ideal via maximal independent variable sets.
    """
    lms = _local_leading_monomials(I, cap)
    v = I.ring.nvars
    if not lms:
        return v
    if (0,) * v in lms:
        return -1
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in lms]
    for size in range(v, 0, -1):
        for subset in itertools.combinations(range(v), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


# ---------------------------------------------------------------------------
# intersection, colon ideals, saturation
# ---------------------------------------------------------------------------


def _fresh_tag(ring: PolyRing) -> str:
    tag = "_t"
    while tag in ring.variables:
        tag += "_"
    return tag


def _lift(p: Poly, ext: PolyRing) -> Poly:
    return Poly._make(ext, {(0, *e): c for e, c in p.terms.items()})


def _canonical_gens(gens: Iterable[Poly]) -> list[Poly]:
    """Monic generators in ascending degrevlex leading-term order."""
    cleaned = []
    for g in gens:
        if g.is_zero:
            continue
        g = _monic(g, DEGREVLEX)
        if g not in cleaned:
            cleaned.append(g)
    cleaned.sort(key=lambda g: order_key_degrevlex(g))
    return cleaned


def order_key_degrevlex(g: Poly):
    return DEGREVLEX.key(leading_term(g, DEGREVLEX)[0])


def intersect(I: IdealPresentation, J: IdealPresentation, cap=None) -> IdealPresentation:
    """Intersection of two polynomial ideals via one-variable elimination."""
    ring = I.ring
    if ring != J.ring:
        raise RingMismatchError("ideal rings differ")
    ext = PolyRing((_fresh_tag(ring), *ring.variables))
    t = ext.variable(0)
    one = ext.one()
    gens = [t * _lift(g, ext) for g in I.generators if not g.is_zero]
    gens += [(one - t) * _lift(g, ext) for g in J.generators if not g.is_zero]
    if not gens:
        return IdealPresentation(ring)
    basis = standard_basis_of(gens, ELIM_FIRST, cap)
    kept = []
    for g in basis:
        if all(e[0] == 0 for e in g.terms):
            kept.append(Poly._make(ring, {e[1:]: c for e, c in g.terms.items()}))
    return IdealPresentation(ring, _canonical_gens(kept))


def exact_divide(p: Poly, f: Poly) -> Poly:
    """Quotient p/f when f divides p exactly; raises otherwise."""
    if f.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = _check_same_ring([p, f])
    quotient: dict[Exponents, Fraction] = {}
    lmf, lcf = leading_term(f, DEGREVLEX)
    h = p
    while not h.is_zero:
        lm, lc = leading_term(h, DEGREVLEX)
        if not mono_divides(lmf, lm):
            raise GermlabError("exact division failed: divisor does not divide")
        q = mono_div(lm, lmf)
        c = lc / lcf
        quotient[q] = c
        h = h - _shift(f, q, c)
    return Poly._make(ring, quotient)


def colon_single(I: IdealPresentation, f: Poly, cap=None) -> IdealPresentation:
    """The colon ideal I : <f>."""
    if f.is_zero:
        return IdealPresentation(I.ring, [I.ring.one()])
    meet = intersect(I, IdealPresentation(I.ring, [f]), cap)
    gens = [exact_divide(g, f) for g in meet.generators if not g.is_zero]
    return IdealPresentation(I.ring, _canonical_gens(gens))


def saturate_single(I: IdealPresentation, f: Poly, cap=None) -> IdealPresentation:
    """The saturation I : <f>^infinity by iterated colon ideals.

    The chain I : f <= I : f^2 <= ... stabilizes; stabilization is detected by
    membership of the new generators in the previous step.
    """
    current = I
    for _ in range(DEFAULT_REDUCTION_CAP):
        bigger = colon_single(current, f, cap)
        if ideal_contains(current, bigger, DEGREVLEX, cap):
            return current
        current = bigger
    raise IterationLimitError("saturation chain failed to stabilize")


def saturate(I: IdealPresentation, J: IdealPresentation, cap=None) -> IdealPresentation:
    """The saturation I : J^infinity.

    Computed as the intersection over the generators f of J of the principal
    saturations I : f^infinity; the result contains I and saturating again is
    a no-op.
    """
    gens = [f for f in J.generators if not f.is_zero]
    if not gens:
        return IdealPresentation(I.ring, [I.ring.one()])
    acc: IdealPresentation | None = None
    for f in gens:
        sat = saturate_single(I, f, cap)
        acc = sat if acc is None else intersect(acc, sat, cap)
    assert acc is not None
    return acc


def has_power_in(p: Poly, I: IdealPresentation, power_cap: int = 6, cap=None) -> bool:
    """Whether some power p^k (k <= power_cap) lies in I locally at the origin."""
    if p.is_zero:
        return True
    q = p.ring.one()
    for _ in range(power_cap):
        q = q * p
        if contains(I, q, LOCAL, cap):
            return True
    return False
