from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtzlab.ops import DerivationOp, NotEigenvector, apply, apply_power, euler_eigenvalue
from gtzlab.ring import Poly, zvar
from gtzlab.systems import build_indicator_b, euler_ops_b, shift_claims, uv_polys
from conftest import B, polys

t = Poly.var(zvar(0, 1))
a = Poly.var(zvar(-2, -1))
b = Poly.var(zvar(-2, 1))
half_t2 = t * t * Fraction(1, 2)

d_t = DerivationOp(((1, zvar(0, 1)),))
L21 = DerivationOp(((1, zvar(-2, -1)), (half_t2, zvar(-2, 1))))
L32 = DerivationOp(((a, zvar(-3, -1)), (b, zvar(-3, 1))))


def test_apply_examples():
    assert apply(d_t, t) == Poly.const(1)
    assert apply(L21, Poly.const(1)).is_zero()
    assert apply(L21, b - half_t2 * a).is_zero()


def test_apply_power_examples():
    assert apply_power(d_t, 3, t * t).is_zero()
    assert apply_power(d_t, 2, t * t) == Poly.const(2)
    assert apply(L21, a) == Poly.const(1)
    assert apply_power(L21, 2, a).is_zero()
    with pytest.raises(ValueError):
        apply_power(d_t, 0, t)


def test_euler_examples():
    f_m1 = euler_ops_b(B(1, 1))[-1]
    assert euler_eigenvalue(f_m1, Poly.const(1)) == 2
    assert euler_eigenvalue(f_m1, t * t) == -2
    f_m2 = euler_ops_b(B(1, 1))[0]
    assert euler_eigenvalue(f_m2, b - half_t2 * a) == 0


def test_not_eigenvector():
    f_m1 = euler_ops_b(B(1, 1))[-1]
    with pytest.raises(NotEigenvector):
        euler_eigenvalue(f_m1, t + 1)
    with pytest.raises(NotEigenvector):
        euler_eigenvalue(f_m1, Poly())


@settings(max_examples=200)
@given(polys(), polys(), st.sampled_from([d_t, L21, L32]))
def test_derivation_property(f, g, op):
    assert apply(op, f * g) == apply(op, f) * g + f * apply(op, g)


@settings(max_examples=200)
@given(polys(), st.integers(1, 3), st.integers(1, 3), st.sampled_from([d_t, L21, L32]))
def test_power_composition(f, j, k, op):
    assert apply_power(op, j + k, f) == apply_power(op, j, apply_power(op, k, f))


@settings(max_examples=200)
@given(polys())
def test_euler_operators_commute(f):
    ops = euler_ops_b(B("3/2", "1/2"))
    for x in ops:
        for y in ops:
            assert x(y(f)) == y(x(f))


def test_shift_claims_k3_hold_and_k2_recorded():
    u, v = uv_polys(3)
    claims = shift_claims(3, 1)
    k3 = [c for c in claims if c["operator"] == "L[-3,-2]"]
    assert k3 and all(c["holds"] for c in k3)
    k2_u = next(c for c in claims if c["argument"] == "u[-2]")
    assert not k2_u["holds"]
    assert k2_u["image"] == str(u[1] * u[1])
    # with the other sign the u image vanishes instead
    minus = {c["argument"]: c for c in shift_claims(3, -1)}
    assert minus["u[-2]"]["image"] == "0"


def test_operators_from_system_match_hand_built():
    system = build_indicator_b(B(1, 1), 1)
    (l21, p1), (l10, p2) = system.equations
    assert (p1, p2) == (1, 3)
    for f in (a * b, t * t * a, b ** 2):
        assert apply(l21, f) == apply(L21, f)
        assert apply(l10, f) == apply(d_t, f)
