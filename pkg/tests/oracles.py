"""Independent closed-form oracles used to freeze expected values.

These deliberately avoid the library's ideal machinery: monomial quotients
are counted by brute-force box enumeration over exponent tuples, and the
classical product formulas are evaluated directly.
"""

from __future__ import annotations

from itertools import product


def brieskorn_mu(*exponents: int) -> int:
    """Milnor number of x_1^a_1 + ... + x_k^a_k: prod (a_i - 1)."""
    out = 1
    for a in exponents:
        out *= a - 1
    return out


def thom_sebastiani(mu_h: int, n: int) -> int:
    """Milnor number of h(x, y) + z^n from the factor values."""
    return mu_h * (n - 1)


def homogeneous_plane_mu(degree: int) -> int:
    """Milnor number of a reduced homogeneous plane curve of the degree."""
    return (degree - 1) ** 2


def monomial_quotient_count(generators: list[tuple[int, ...]]) -> int | None:
    """Dimension of k[x]/I for a monomial ideal by direct enumeration.

    Returns None when the quotient is infinite (some variable has no pure
    power among the generators).
    """
    if not generators:
        return None
    nvars = len(generators[0])
    bounds = []
    for i in range(nvars):
        pure = [g[i] for g in generators if all(e == 0 for j, e in enumerate(g) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    count = 0
    for exps in product(*(range(b) for b in bounds)):
        if not any(all(e >= ge for e, ge in zip(exps, gen)) for gen in generators):
            count += 1
    return count


def euler_chi_isolated(v: int, mu: int) -> int:
    """chi of the Milnor fibre of an isolated singularity in v variables."""
    return 1 + (-1) ** (v - 1) * mu
