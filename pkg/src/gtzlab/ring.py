"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``(VarId, exponent)`` pairs sorted by variable, with
no zero exponents; the empty tuple is the constant monomial.  A :class:`Poly`
maps monomials to nonzero :class:`~fractions.Fraction` coefficients and is
treated as immutable.
"""

from enum import IntEnum
from fractions import Fraction
from typing import NamedTuple

from gtzlab import linalg


class Kind(IntEnum):
    Z = 0
    U = 1
    V = 2
    X = 3
    Y = 4


class VarId(NamedTuple):
    """A named variable.

    Z-kind variables carry a ``(row, col)`` pair, the derived kinds a single
    index.  Tuple ordering (kind first, then indices) is the variable order
    used everywhere.
    """

    kind: Kind
    index: tuple

    def __str__(self):
        return f"{self.kind.name.lower()}[{','.join(map(str, self.index))}]"

    __repr__ = __str__


def zvar(row, col):
    return VarId(Kind.Z, (row, col))


def uvar(k):
    return VarId(Kind.U, (k,))


def vvar(k):
    return VarId(Kind.V, (k,))


def xvar(k):
    return VarId(Kind.X, (k,))


def yvar(k):
    return VarId(Kind.Y, (k,))


_LAST = (VarId(Kind.Y + 1, ()), 0)


def monomial_key(mono):
    """Sort key for descending lexicographic order; the constant comes last."""
    return tuple((v, -e) for v, e in mono) + (_LAST,)


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(mono, var):
    for v, e in mono:
        if v == var:
            return e
    return 0


class Poly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[tuple(sorted((v, e) for v, e in mono if e))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # caller guarantees canonical monomials and nonzero coefficients
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def var(cls, v, power=1):
        return cls._raw({((v, power),): Fraction(1)} if power else {(): Fraction(1)})

    @classmethod
    def monomial(cls, mono, coeff=1):
        return cls({mono: coeff})

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def variables(self):
        return sorted({v for mono in self.terms for v, _ in mono})

    def degree(self, var=None):
        """Total degree, or the degree in ``var``; ``-1`` for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e for _, e in mono) for mono in self.terms)
        return max(mono_degree(mono, var) for mono in self.terms)

    def monomials(self):
        return sorted(self.terms, key=monomial_key)

    def coeff(self, mono):
        return self.terms.get(mono, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly._raw({m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def diff(self, var):
        """Partial derivative with respect to ``var``."""
        out = {}
        for mono, c in self.terms.items():
            e = mono_degree(mono, var)
            if not e:
                continue
            new = tuple((v, x - 1) if v == var else (v, x) for v, x in mono)
            new = tuple(p for p in new if p[1])
            out[new] = out.get(new, 0) + c * e
        return Poly._raw({m: c for m, c in out.items() if c})

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in self.monomials():
            c = self.terms[mono]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            factors = [str(v) if e == 1 else f"{v}^{e}" for v, e in mono]
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append((sign, "*".join(factors)))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self})"


def substitute(f, assignment):
    """Replace each assigned variable of ``f`` by its image polynomial.

    Variables missing from ``assignment`` are kept as they are.  Powers of the
    images are cached per call, so repeated substitutions of one variable cost
    a single expansion each.
    """
    powers = {}

    def image_power(v, e):
        key = (v, e)
        if key not in powers:
            powers[key] = assignment[v] ** e
        return powers[key]

    result = Poly()
    for mono, c in f.terms.items():
        kept = []
        term = Poly.const(c)
        for v, e in mono:
            if v in assignment:
                term = term * image_power(v, e)
            else:
                kept.append((v, e))
        if kept:
            term = term * Poly._raw({tuple(kept): Fraction(1)})
        result = result + term
    return result


def coefficient_matrix(fs):
    """Rows of coefficients over the union of monomials, in monomial order."""
    monos = sorted({m for f in fs for m in f.terms}, key=monomial_key)
    col = {m: j for j, m in enumerate(monos)}
    rows = []
    for f in fs:
        row = [Fraction(0)] * len(monos)
        for m, c in f.terms.items():
            row[col[m]] = c
        rows.append(row)
    return rows, monos


def rank_of_span(fs):
    """Dimension of the rational span of the polynomials ``fs``."""
    rows, monos = coefficient_matrix(list(fs))
    return linalg.rank(rows, len(monos))
