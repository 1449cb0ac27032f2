"""First-order differential operators with polynomial coefficients.

:class:`DerivationOp` covers the left-shift operators of the indicator
systems; :class:`EulerOp` covers the diagonal (Cartan) operators, which act on
monomials by scalars.  Eigenvalues are returned in doubled encoding so that
half-integer weights stay integral.
"""

from dataclasses import dataclass
from fractions import Fraction

from gtzlab.ring import Poly, mono_degree


class NotEigenvector(ValueError):
    """The monomials of a polynomial carry different Euler eigenvalues."""


@dataclass(frozen=True)
class DerivationOp:
    """``sum(coeff * d/d var)`` over ``terms = ((coeff, var), ...)``."""

    terms: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(
            (c if isinstance(c, Poly) else Poly.const(c), v) for c, v in self.terms))

    def __str__(self):
        parts = []
        for c, v in self.terms:
            d = f"d/d{v}"
            parts.append(d if c == Poly.const(1) else f"({c})*{d}")
        return " + ".join(parts) if parts else "0"


def apply(op, f):
    """Apply a derivation once."""
    out = Poly()
    for c, v in op.terms:
        d = f.diff(v)
        if d:
            out = out + c * d
    return out


def apply_power(op, k, f):
    """``op`` composed with itself ``k`` times, applied to ``f``."""
    if k < 1:
        raise ValueError("power must be positive")
    for _ in range(k):
        if not f:
            break
        f = apply(op, f)
    return f


@dataclass(frozen=True)
class EulerOp:
    """``sum(sign * var * d/d var) + shift``; ``shift2`` is twice the shift."""

    terms: tuple
    shift2: int = 0
    name: str = ""

    def monomial_eigenvalue2(self, mono):
        total = self.shift2
        for sign, v in self.terms:
            total += 2 * sign * mono_degree(mono, v)
        return total

    def __call__(self, f):
        out = {}
        for mono, c in f.terms.items():
            ev = Fraction(self.monomial_eigenvalue2(mono), 2)
            if ev:
                out[mono] = c * ev
        return Poly(out)

    def __str__(self):
        parts = [f"{'+' if s > 0 else '-'}{v}*d/d{v}" for s, v in self.terms]
        return " ".join(parts) + f" + {Fraction(self.shift2, 2)}"


def euler_eigenvalue(op, f):
    """Common eigenvalue (doubled) of ``op`` on the monomials of ``f``."""
    if not f:
        raise NotEigenvector("the zero polynomial has no eigenvalue")
    values = {op.monomial_eigenvalue2(m) for m in f.terms}
    if len(values) != 1:
        raise NotEigenvector(f"{op.name or op}: monomials give {sorted(values)}")
    return values.pop()
