from fractions import Fraction

from hypothesis import strategies as st

from gtzlab.ring import Poly, zvar
from gtzlab.systems import HighestWeight

POOL = [zvar(-3, -1), zvar(-2, -1), zvar(-2, 1), zvar(0, 1)]


def B(*values):
    return HighestWeight.parse("B", [str(v) for v in values])


def A(*values):
    return HighestWeight.parse("A", [str(v) for v in values])


coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda c: c != 0)


@st.composite
def monomials(draw, max_degree=3):
    k = draw(st.integers(0, max_degree))
    chosen = draw(st.lists(st.sampled_from(POOL), min_size=k, max_size=k))
    exps = {}
    for v in chosen:
        exps[v] = exps.get(v, 0) + 1
    return tuple(sorted(exps.items()))


@st.composite
def polys(draw, max_terms=4, max_degree=3):
    terms = draw(st.lists(st.tuples(monomials(max_degree), coefficients), max_size=max_terms))
    out = {}
    for m, c in terms:
        out[m] = out.get(m, Fraction(0)) + c
    return Poly(out)
