"""Exact bounded-degree kernel of an indicator system.

Every equation of a system is homogeneous for the Euler (Cartan) grading, so
monomials are grouped into weight blocks and each block is eliminated on its
own.  The bound on degrees is checked a posteriori: the solve is repeated with
the bound doubled and the dimension must not move.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from gtzlab import linalg
from gtzlab.ops import apply, euler_eigenvalue
from gtzlab.ring import Poly, monomial_key
from gtzlab.systems import euler_ops, pair_vars


class NotStabilized(RuntimeError):
    def __init__(self, weight, dims):
        self.weight = weight
        self.dims = dims
        super().__init__(f"kernel dimension for weight {weight} ({weight.algebra}) moved "
                         f"from {dims[0]} to {dims[1]} when the degree bound was doubled")


@dataclass(frozen=True)
class DegreeBound:
    """Max degree of the special variable and max combined degree of each ``z[-k,+-1]`` pair."""

    special: int
    pair: int

    def doubled(self):
        return DegreeBound(max(2 * self.special, self.special + 1), max(2 * self.pair, self.pair + 1))

    def covers(self, other):
        return self.special >= other.special and self.pair >= other.pair


def default_bound(system):
    r = system.r
    return DegreeBound(r[-1], sum(r[:-1]) + r[-1])


@dataclass
class KernelResult:
    basis: list
    dimension: int
    grading: dict
    bound_used: DegreeBound
    stabilized: bool
    weights: list = field(default_factory=list)
    system: object = None

    def special_parity_dims(self):
        """``(even, odd)`` counts of basis vectors by degree parity in the special variable."""
        var = self.system.special
        odd = sum(f.degree(var) % 2 for f in self.basis)
        return self.dimension - odd, odd


def _monomials(system, bound):
    n = system.n
    pair_choices = [(i, j) for i in range(bound.pair + 1) for j in range(bound.pair + 1 - i)]
    pairs = [pair_vars(k) for k in range(2, n + 1)]
    special = system.special
    for s in range(bound.special + 1):
        for choice in product(pair_choices, repeat=n - 1):
            d = {special: s}
            for (zm, zp), (i, j) in zip(pairs, choice):
                d[zm] = i
                d[zp] = j
            yield tuple(sorted((v, e) for v, e in d.items() if e))


class _Images:
    """Memoised images of monomials under the system's operators and their powers."""

    def __init__(self, system):
        self.ops = [op for op, _ in system.equations]
        self.single = {}

    def once(self, e, mono):
        key = (e, mono)
        hit = self.single.get(key)
        if hit is None:
            hit = apply(self.ops[e], Poly.monomial(mono)).terms
            self.single[key] = hit
        return hit

    def power(self, e, k, mono):
        current = {mono: Fraction(1)}
        for _ in range(k):
            nxt = defaultdict(Fraction)
            for m, c in current.items():
                for m2, c2 in self.once(e, m).items():
                    nxt[m2] += c * c2
            current = {m: c for m, c in nxt.items() if c}
            if not current:
                break
        return current


def _solve(system, bound):
    eulers = euler_ops(system.weight)
    blocks = defaultdict(list)
    for mono in _monomials(system, bound):
        blocks[tuple(op.monomial_eigenvalue2(mono) for op in eulers)].append(mono)

    images = _Images(system)
    basis, weights = [], []
    for w in sorted(blocks, reverse=True):
        cols = sorted(blocks[w], key=monomial_key)
        rows = []
        for e, (_, k) in enumerate(system.equations):
            targets = defaultdict(dict)
            for j, mono in enumerate(cols):
                for tm, c in images.power(e, k, mono).items():
                    targets[tm][j] = c
            for tm in sorted(targets, key=monomial_key):
                row = [0] * len(cols)
                for j, c in targets[tm].items():
                    row[j] = c
                rows.append(row)
        for vec in linalg.nullspace(rows, len(cols)):
            basis.append(Poly({cols[j]: c for j, c in enumerate(vec) if c}))
            weights.append(w)
    grading = dict(Counter(weights))
    return KernelResult(basis, len(basis), grading, bound, False, weights, system)


def solve_kernel(system, bound=None, verify=True):
    """Weight-graded basis of the polynomial solutions of ``system``.

    With ``verify`` (the default) the system is solved again under the doubled
    bound; a change in dimension raises :class:`NotStabilized`.
    """
    floor = default_bound(system)
    if bound is None:
        bound = floor
    elif not bound.covers(floor):
        raise ValueError(f"degree bound {bound} is below the default {floor}")
    result = _solve(system, bound)
    if verify:
        wider = _solve(system, bound.doubled())
        if wider.dimension != result.dimension:
            raise NotStabilized(system.weight, (result.dimension, wider.dimension))
        result.stabilized = True
    return result


def weight_multiset(result, eulers=None):
    """Sorted list of doubled Euler eigenvalue vectors, one per basis vector."""
    if eulers is None:
        eulers = euler_ops(result.system.weight)
    return sorted((tuple(euler_eigenvalue(op, f) for op in eulers) for f in result.basis),
                  reverse=True)
