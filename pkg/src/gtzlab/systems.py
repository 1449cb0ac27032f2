"""Indicator systems for o(2n+1) | o(2n-1) and gl(n+1) | gl(n-1).

Both problems live on polynomials in ``z[-k,-1], z[-k,1]`` (k = 2..n) plus one
special variable: ``z[0,1]`` on the orthogonal (B) side, ``z[-1,1]`` on the
gl (A) side.  Weight entries are stored doubled throughout, so ``(1/2, 1/2)``
is ``(1, 1)`` with odd parity.
"""

from dataclasses import dataclass
from fractions import Fraction

from gtzlab.ops import DerivationOp, EulerOp
from gtzlab.ring import Poly, zvar


class InvalidWeight(ValueError):
    pass


def doubled(value):
    """Twice a number given as int, Fraction or string like ``"3/2"``."""
    x = Fraction(value) * 2
    if x.denominator != 1:
        raise InvalidWeight(f"{value} is not an integer or half-integer")
    return int(x)


@dataclass(frozen=True)
class HighestWeight:
    """``entries`` holds ``(2*m[-n], ..., 2*m[-1])``; ``algebra`` is ``"B"`` or ``"A"``."""

    algebra: str
    n: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if self.algebra not in ("A", "B"):
            raise InvalidWeight(f"unknown algebra {self.algebra!r}")
        if self.n < 2:
            raise InvalidWeight("rank n must be at least 2")
        if len(self.entries) != self.n:
            raise InvalidWeight(f"expected {self.n} entries, got {len(self.entries)}")
        e = self.entries
        if any(a < b for a, b in zip(e, e[1:])) or e[-1] < 0:
            raise InvalidWeight(f"{self} is not dominant")
        if len({x % 2 for x in e}) != 1:
            raise InvalidWeight(f"{self}: entries mix integers and half-integers")
        if self.algebra == "A" and e[0] % 2:
            raise InvalidWeight(f"{self}: gl weights must be integral")

    @classmethod
    def parse(cls, algebra, values, n=None):
        """Build from ordinary values, e.g. ``parse("B", "1/2,1/2")``."""
        if isinstance(values, str):
            values = [s for s in values.replace(" ", "").split(",") if s]
        entries = tuple(doubled(v) for v in values)
        return cls(algebra, len(entries) if n is None else n, entries)

    @property
    def values(self):
        return tuple(Fraction(e, 2) for e in self.entries)

    @property
    def is_half(self):
        return self.entries[0] % 2 == 1

    @property
    def parity(self):
        return "half-integer" if self.is_half else "integer"

    def r_vector(self):
        """``(r[-n], ..., r[-1])``: consecutive differences, then ``2 m[-1]`` (B) or ``m[-1]`` (A)."""
        e = self.entries
        diffs = [(a - b) // 2 for a, b in zip(e, e[1:])]
        last = e[-1] if self.algebra == "B" else e[-1] // 2
        return tuple(diffs) + (last,)

    def shifted(self, delta2):
        """Same algebra, every entry moved by ``delta2 / 2``."""
        return HighestWeight(self.algebra, self.n, tuple(x + delta2 for x in self.entries))

    def as_algebra(self, algebra):
        return HighestWeight(algebra, self.n, self.entries)

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.values) + ")"


def special_var(algebra):
    return zvar(0, 1) if algebra == "B" else zvar(-1, 1)


def variables(algebra, n):
    vs = [zvar(-k, s) for k in range(n, 1, -1) for s in (-1, 1)]
    return sorted(vs + [special_var(algebra)])


def pair_vars(k):
    return zvar(-k, -1), zvar(-k, 1)


@dataclass(frozen=True)
class IndicatorSystem:
    """Equations ``op**power f = 0`` ordered ``L[-n,-n+1], ..., L[-2,-1]`` then the special one."""

    weight: HighestWeight
    variables: tuple
    equations: tuple
    sign: int = 1

    @property
    def algebra(self):
        return self.weight.algebra

    @property
    def n(self):
        return self.weight.n

    @property
    def special(self):
        return special_var(self.algebra)

    @property
    def r(self):
        return self.weight.r_vector()


def _shift_ops(n):
    # L[-k,-k+1] for k = n..3; identical on both sides
    ops = []
    for k in range(n, 2, -1):
        lo_m, lo_p = pair_vars(k)
        hi_m, hi_p = pair_vars(k - 1)
        ops.append(DerivationOp(((Poly.var(hi_m), lo_m), (Poly.var(hi_p), lo_p)),
                                name=f"L[-{k},-{k - 1}]"))
    return ops


def _check(weight, algebra):
    if weight.algebra != algebra:
        raise InvalidWeight(f"expected a {algebra} weight, got {weight.algebra}")


def build_indicator_b(weight, sign_choice=1):
    """The o(2n+1) system restricted to the o(2n-1)-highest variable set.

    ``sign_choice`` is the sign in front of ``z[0,1]^2/2`` in ``L[-2,-1]``.
    """
    _check(weight, "B")
    if sign_choice not in (1, -1):
        raise ValueError("sign_choice must be +1 or -1")
    n = weight.n
    t = Poly.var(zvar(0, 1))
    a, b = pair_vars(2)
    ops = _shift_ops(n)
    ops.append(DerivationOp(((1, a), (t * t * Fraction(sign_choice, 2), b)), name="L[-2,-1]"))
    ops.append(DerivationOp(((1, zvar(0, 1)),), name="L[-1,0]"))
    powers = [r + 1 for r in weight.r_vector()]
    return IndicatorSystem(weight, tuple(variables("B", n)), tuple(zip(ops, powers)), sign_choice)


def build_indicator_a(weight):
    """The gl(n+1) system on the gl(n-1)-highest variable set."""
    _check(weight, "A")
    n = weight.n
    x = Poly.var(zvar(-1, 1))
    a, b = pair_vars(2)
    ops = _shift_ops(n)
    ops.append(DerivationOp(((1, a), (x, b)), name="L[-2,-1]"))
    ops.append(DerivationOp(((1, zvar(-1, 1)),), name="L[-1,1]"))
    powers = [r + 1 for r in weight.r_vector()]
    return IndicatorSystem(weight, tuple(variables("A", n)), tuple(zip(ops, powers)))


def build_indicator(weight, sign_choice=1):
    if weight.algebra == "B":
        return build_indicator_b(weight, sign_choice)
    return build_indicator_a(weight)


# -- Cartan (Euler) operators ----------------------------------------------

def _lower_diag(weight, i):
    zm, zp = pair_vars(i)
    d = weight.entries[weight.n - i]
    return EulerOp(((-1, zm), (-1, zp)), d, name=f"{'F' if weight.algebra == 'B' else 'E'}[-{i},-{i}]")


def euler_ops_b(weight):
    """``F[-n,-n], ..., F[-1,-1]`` with the constant term ``+m[-1]`` on the last one."""
    _check(weight, "B")
    n = weight.n
    ops = [_lower_diag(weight, i) for i in range(n, 1, -1)]
    terms = []
    for i in range(2, n + 1):
        zm, zp = pair_vars(i)
        terms += [(1, zm), (-1, zp)]
    terms.append((-1, zvar(0, 1)))
    ops.append(EulerOp(tuple(terms), weight.entries[-1], name="F[-1,-1]"))
    return ops


def euler_ops_a(weight):
    """``E[-n,-n], ..., E[-1,-1]``."""
    _check(weight, "A")
    n = weight.n
    ops = [_lower_diag(weight, i) for i in range(n, 1, -1)]
    terms = [(1, pair_vars(i)[0]) for i in range(2, n + 1)]
    terms.append((-1, zvar(-1, 1)))
    ops.append(EulerOp(tuple(terms), weight.entries[-1], name="E[-1,-1]"))
    return ops


def e11_op(n):
    terms = tuple((1, zvar(-i, 1)) for i in range(1, n + 1))
    return EulerOp(terms, 0, name="E[1,1]")


def euler_ops(weight):
    return euler_ops_b(weight) if weight.algebra == "B" else euler_ops_a(weight)


# -- derived variables -------------------------------------------------------

@dataclass(frozen=True, order=True)
class ExponentTuple:
    """``p_minus1`` plus ``pairs = ((p[-2], q[-2]), ..., (p[-n], q[-n]))``."""

    p_minus1: int
    pairs: tuple

    def sort_key(self):
        return (self.p_minus1,) + tuple(x for pq in reversed(self.pairs) for x in pq)

    def pair_total(self):
        return sum(p + q for p, q in self.pairs)

    def __str__(self):
        return f"({self.p_minus1};" + ";".join(f"{p},{q}" for p, q in self.pairs) + ")"


def uv_polys(n):
    """``u[-k], v[-k]`` as z-polynomials, k = 1..n (``v[-1] = 0``)."""
    t = Poly.var(zvar(0, 1))
    half_t2 = t * t * Fraction(1, 2)
    u, v = {1: t}, {1: Poly()}
    for k in range(2, n + 1):
        zm, zp = pair_vars(k)
        u[k] = Poly.var(zp) + half_t2 * Poly.var(zm)
        v[k] = Poly.var(zp) - half_t2 * Poly.var(zm)
    return u, v


def xy_polys(n):
    """``x[-k], y[-k]`` as z-polynomials, k = 1..n (``y[-1] = 0``)."""
    s = Poly.var(zvar(-1, 1))
    x, y = {1: s}, {1: Poly()}
    for k in range(2, n + 1):
        zm, zp = pair_vars(k)
        x[k] = Poly.var(zp) + s * Poly.var(zm)
        y[k] = Poly.var(zp) - s * Poly.var(zm)
    return x, y


def _expand(t, first, second, basis_form):
    if basis_form not in ("paper", "plain"):
        raise ValueError(f"unknown basis form {basis_form!r}")
    f = first[1] ** t.p_minus1
    for k, (p, q) in enumerate(t.pairs, start=2):
        if basis_form == "paper":
            f = f * (first[k] + second[k]) ** p * (first[k] - second[k]) ** q
        else:
            f = f * first[k] ** p * second[k] ** q
    return f


def expand_uv_monomial(t, n, basis_form="paper"):
    """Expand a B basis monomial in the z variables.

    ``paper`` builds ``u[-1]^p * prod (u+v)^p (u-v)^q``; ``plain`` builds
    ``u[-1]^p * prod u^p v^q``.
    """
    if len(t.pairs) != n - 1:
        raise ValueError("exponent tuple does not match the rank")
    u, v = uv_polys(n)
    return _expand(t, u, v, basis_form)


def expand_xy_monomial(t, n, basis_form="paper"):
    if len(t.pairs) != n - 1:
        raise ValueError("exponent tuple does not match the rank")
    x, y = xy_polys(n)
    return _expand(t, x, y, basis_form)


def shift_claims(n, sign_choice=1):
    """Images of ``u[-k], v[-k]`` under ``L[-k,-k+1]`` next to the expected ``u[-k+1], v[-k+1]``.

    For k >= 3 the images agree; at k = 2 the computed image is recorded as is.
    """
    from gtzlab.ops import apply

    weight = HighestWeight("B", n, (0,) * n)
    system = build_indicator_b(weight, sign_choice)
    ops = {n - j: op for j, (op, _) in enumerate(system.equations[:-1])}
    u, v = uv_polys(n)
    out = []
    for k in range(n, 1, -1):
        for name, table in (("u", u), ("v", v)):
            image = apply(ops[k], table[k])
            out.append({
                "operator": ops[k].name,
                "argument": f"{name}[-{k}]",
                "image": str(image),
                "expected": str(table[k - 1]),
                "holds": image == table[k - 1],
            })
    return out
