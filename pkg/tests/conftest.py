from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from germlab import Poly, PolyRing

RING_XY = PolyRing(("x", "y"))
RING_XYZ = PolyRing(("x", "y", "z"))


@pytest.fixture
def ring_xy() -> PolyRing:
    return RING_XY


@pytest.fixture
def ring_xyz() -> PolyRing:
    return RING_XYZ


def poly_strategy(ring: PolyRing, max_degree: int = 3, max_terms: int = 4) -> st.SearchStrategy[Poly]:
    exponent = st.integers(min_value=0, max_value=max_degree)
    exps = st.tuples(*[exponent] * ring.nvars)
    coeff = st.fractions(
        min_value=Fraction(-4), max_value=Fraction(4), max_denominator=3
    ).filter(lambda c: c != 0)
    terms = st.dictionaries(exps, coeff, min_size=0, max_size=max_terms)
    return terms.map(ring.from_terms)


def nonzero_poly_strategy(ring: PolyRing, **kw) -> st.SearchStrategy[Poly]:
    return poly_strategy(ring, **kw).filter(lambda p: not p.is_zero)
