"""Gelfand-Tsetlin type patterns and Weyl dimensions.

All pattern entries are doubled, like the weights they come from.  A gl
pattern has rows of length n+1, n, n-1; a B pattern has rows of length n, n,
n-1 plus a bit ``sigma``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from gtzlab.systems import doubled


class NonIntegerDimension(ArithmeticError):
    pass


@dataclass(frozen=True, order=True)
class GLTableau:
    top: tuple
    middle: tuple
    bottom: tuple

    def __str__(self):
        return _fmt_rows(self.top, self.middle, self.bottom)


@dataclass(frozen=True, order=True)
class BTableau:
    top: tuple
    middle: tuple
    bottom: tuple
    sigma: int

    def __str__(self):
        return _fmt_rows(self.top, self.middle, self.bottom) + f" s={self.sigma}"


def _fmt(x2):
    return str(Fraction(x2, 2))


def _fmt_rows(*rows):
    return " | ".join(",".join(_fmt(x) for x in row) for row in rows)


def _between(hi, lo, parity):
    """Doubled values ``v`` with ``lo <= v <= hi`` and ``v % 2 == parity``, ascending."""
    start = lo + ((lo - parity) % 2)
    return range(start, hi + 1, 2)


def _rows_under(upper, length, parity, floor=None):
    """All rows ``w`` with ``upper[i] >= w[i] >= upper[i+1]``.

    ``length`` is ``len(upper) - 1`` for ordinary interlacing; when it equals
    ``len(upper)`` the last entry is bounded below by ``floor`` instead.
    """
    ranges = []
    for i in range(length):
        lo = upper[i + 1] if i + 1 < len(upper) else floor
        ranges.append(_between(upper[i], lo, parity))
    return [tuple(w) for w in product(*ranges)]


def enumerate_gl_tableaux(top):
    """Patterns under ``top = (m[-n], ..., m[-1], 0)`` (ordinary values), in lexicographic order."""
    top2 = tuple(doubled(x) for x in top)
    if any(a < b for a, b in zip(top2, top2[1:])) or top2[-1] != 0:
        raise ValueError("top row must be weakly decreasing and end in 0")
    if any(x % 2 for x in top2):
        raise ValueError("gl patterns need integer entries")
    out = []
    for middle in _rows_under(top2, len(top2) - 1, 0):
        for bottom in _rows_under(middle, len(middle) - 1, 0):
            out.append(GLTableau(top2, middle, bottom))
    return sorted(out)


def enumerate_b_tableaux(weight):
    """Interlacing patterns with the sigma bit for a B highest weight."""
    if weight.algebra != "B":
        raise ValueError("expected a B weight")
    top = weight.entries
    parity = top[0] % 2
    out = []
    for middle in _rows_under(top, len(top), parity, floor=0):
        for bottom in _rows_under(middle, len(middle) - 1, parity):
            sigmas = (0,) if (parity == 0 and middle[-1] == 0) else (0, 1)
            out.extend(BTableau(top, middle, bottom, s) for s in sigmas)
    return sorted(out)


def gl_top(weight):
    """gl top row ``(m[-n], ..., m[-1], 0)`` for an A weight, as ordinary values."""
    return weight.values + (0,)


# -- Weyl dimension formula ---------------------------------------------------

def _positive_roots(kind, rank):
    if kind == "A":
        size = rank + 1
        for i in range(size):
            for j in range(i + 1, size):
                yield tuple(1 if x == i else -1 if x == j else 0 for x in range(size))
    elif kind == "B":
        for i in range(rank):
            for j in range(i + 1, rank):
                yield tuple(1 if x == i else -1 if x == j else 0 for x in range(rank))
                yield tuple(1 if x in (i, j) else 0 for x in range(rank))
            yield tuple(1 if x == i else 0 for x in range(rank))
    else:
        raise ValueError(f"unsupported type {kind!r}")


def _rho(kind, rank):
    if kind == "A":
        return [Fraction(rank - i) for i in range(rank + 1)]
    return [Fraction(2 * (rank - i) - 1, 2) for i in range(rank)]


def weyl_dim(kind, rank, weight):
    """Dimension of the irreducible module of type ``A_rank`` or ``B_rank``.

    ``weight`` is in the orthogonal basis: ``rank + 1`` entries for A (a gl
    weight) and ``rank`` entries for B, largest first.  Ranks 0 give 1.
    """
    lam = [Fraction(x) for x in weight]
    expected = rank + 1 if kind == "A" else rank
    if rank == 0:
        return 1
    if len(lam) != expected:
        raise ValueError(f"{kind}{rank} needs {expected} weight entries")
    rho = _rho(kind, rank)
    num = den = Fraction(1)
    for alpha in _positive_roots(kind, rank):
        num *= sum(a * (l + r) for a, l, r in zip(alpha, lam, rho))
        den *= sum(a * r for a, r in zip(alpha, rho))
    d = num / den
    if d.denominator != 1:
        raise NonIntegerDimension(f"{kind}{rank} {weight}: {d}")
    return int(d)


# -- weights of tableau vectors --------------------------------------------------

WESS_VARIANTS = ("printed", "proof_diff", "sigma_neg")


def b_tableau_weight(t, variant="sigma_neg"):
    """Doubled o(2n+1) weight attached to a pattern: the bottom row, then the (-1) component.

    The last component is ``s + 2*sum(middle) - sum(top) + b`` where ``s`` is
    ``sigma`` (``printed``, ``proof_diff``) or ``-sigma`` (``sigma_neg``) and ``b``
    is ``+sum(bottom)`` for ``printed`` and ``-sum(bottom)`` otherwise.
    """
    if variant not in WESS_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    s = -t.sigma if variant == "sigma_neg" else t.sigma
    b = sum(t.bottom) if variant == "printed" else -sum(t.bottom)
    return t.bottom + (2 * s + 2 * sum(t.middle) - sum(t.top) + b,)


def gl_tableau_weight(t):
    """Doubled ``(E[-n,-n], ..., E[-1,-1])`` eigenvalues of a gl pattern vector."""
    return t.bottom + (sum(t.middle) - sum(t.bottom),)


def branching_terms(weight):
    """``[(bottom_row, multiplicity, dim)]`` for the restriction to the rank n-1 algebra."""
    if weight.algebra == "B":
        tabs = enumerate_b_tableaux(weight)
        kind = "B"
    else:
        tabs = enumerate_gl_tableaux(gl_top(weight))
        kind = "A"
    counts = {}
    for t in tabs:
        counts[t.bottom] = counts.get(t.bottom, 0) + 1
    rank = weight.n - 1 if kind == "B" else weight.n - 2
    out = []
    for bottom in sorted(counts, reverse=True):
        vals = [Fraction(x, 2) for x in bottom]
        out.append((bottom, counts[bottom], weyl_dim(kind, rank, vals)))
    return out


def full_dim(weight):
    if weight.algebra == "B":
        return weyl_dim("B", weight.n, weight.values)
    return weyl_dim("A", weight.n, gl_top(weight))


def branching_check(weight, kernel_multiset=None, sign_choice=1):
    """Dimension bookkeeping plus the per-variant weight-multiset comparison.

    ``kernel_multiset`` (doubled Euler weight vectors of the kernel basis) is
    computed with the kernel oracle when not supplied.  Returns a dict of
    check id to ``{"status": ..., "details": ...}``.
    """
    terms = branching_terms(weight)
    total = sum(mult * dim for _, mult, dim in terms)
    target = full_dim(weight)
    out = {"WEYL-BRANCH": {
        "status": "PASS" if total == target else "FAIL",
        "details": {"branch_sum": total, "weyl_dim": target,
                    "terms": [{"bottom": list(b), "multiplicity": m, "dim": d} for b, m, d in terms]},
    }}
    if kernel_multiset is None:
        from gtzlab.kernel import solve_kernel, weight_multiset
        from gtzlab.systems import build_indicator
        kernel_multiset = weight_multiset(solve_kernel(build_indicator(weight, sign_choice)))
    kernel_multiset = sorted(kernel_multiset, reverse=True)
    if weight.algebra == "B":
        tabs = enumerate_b_tableaux(weight)
        for variant in WESS_VARIANTS:
            ms = sorted((b_tableau_weight(t, variant) for t in tabs), reverse=True)
            out[f"WESS-{variant}"] = {
                "status": "PASS" if ms == kernel_multiset else "FAIL",
                "details": {"tableau_multiset": [list(w) for w in ms]},
            }
    else:
        tabs = enumerate_gl_tableaux(gl_top(weight))
    lower_k = sorted((w[:-1] for w in kernel_multiset), reverse=True)
    lower_t = sorted((t.bottom for t in tabs), reverse=True)
    out["LOWROW-MULTISET"] = {
        "status": "PASS" if lower_k == lower_t else "FAIL",
        "details": {"kernel": [list(w) for w in lower_k], "tableaux": [list(w) for w in lower_t]},
    }
    return out
