"""Monomial bases built from the derived variables, compared to the kernel oracle.

The admissible exponent tuples come straight from the printed inequalities;
nothing here corrects them.  :func:`compare_basis_to_kernel` reports whether
the expanded monomials solve the system, are independent, and span it.
"""

from dataclasses import dataclass
from itertools import product

from gtzlab.kernel import solve_kernel
from gtzlab.ops import apply_power
from gtzlab.ring import rank_of_span
from gtzlab.systems import ExponentTuple, build_indicator, expand_uv_monomial, expand_xy_monomial

__all__ = [
    "ExponentTuple", "BasisComparison", "enumerate_exponents_b", "enumerate_exponents_a",
    "enumerate_exponents", "admissible", "compare_basis_to_kernel", "expand",
]


def admissible(t, weight):
    """The printed inequalities: ``p+q <= r[-k]`` and ``p[-1] + c * sum(p+q) <= r[-1]``.

    ``c`` is 2 on the B side and 1 on the gl side.
    """
    r = weight.r_vector()
    n = weight.n
    if t.p_minus1 < 0 or len(t.pairs) != n - 1:
        return False
    for k, (p, q) in enumerate(t.pairs, start=2):
        if p < 0 or q < 0 or p + q > r[n - k]:
            return False
    c = 2 if weight.algebra == "B" else 1
    return t.p_minus1 + c * t.pair_total() <= r[-1]


def _enumerate(weight):
    r = weight.r_vector()
    n = weight.n
    c = 2 if weight.algebra == "B" else 1
    per_k = []
    for k in range(2, n + 1):
        rk = r[n - k]
        per_k.append([(p, q) for p in range(rk + 1) for q in range(rk + 1 - p)])
    out = []
    for pairs in product(*per_k):
        used = c * sum(p + q for p, q in pairs)
        for p1 in range(r[-1] - used + 1):
            out.append(ExponentTuple(p1, tuple(pairs)))
    return sorted(out, key=ExponentTuple.sort_key)


def enumerate_exponents_b(weight):
    if weight.algebra != "B":
        raise ValueError("expected a B weight")
    return _enumerate(weight)


def enumerate_exponents_a(weight):
    if weight.algebra != "A":
        raise ValueError("expected a gl weight")
    return _enumerate(weight)


def enumerate_exponents(weight):
    return _enumerate(weight)


def expand(t, weight, basis_form):
    if weight.algebra == "B":
        return expand_uv_monomial(t, weight.n, basis_form)
    return expand_xy_monomial(t, weight.n, basis_form)


@dataclass(frozen=True)
class BasisComparison:
    claimed_count: int
    kernel_dim: int
    contained: bool
    independent: bool
    spanning: bool
    status: str
    details: str = ""

    def as_dict(self):
        return {
            "claimed_count": self.claimed_count,
            "kernel_dim": self.kernel_dim,
            "contained": self.contained,
            "independent": self.independent,
            "spanning": self.spanning,
            "status": self.status,
            "details": self.details,
        }


def compare_basis_to_kernel(weight, basis_form="paper", sign_choice=1, kernel=None):
    """Check the claimed basis for ``weight`` against the kernel oracle.

    ``spanning`` means the claimed span contains every kernel vector.  The
    status is ``MATCH`` exactly when the claimed monomials solve the system,
    are independent and are as many as the kernel dimension.
    """
    system = build_indicator(weight, sign_choice)
    if kernel is None:
        kernel = solve_kernel(system)
    tuples = enumerate_exponents(weight)
    polys = [expand(t, weight, basis_form) for t in tuples]
    bad = [str(t) for t, f in zip(tuples, polys)
           if any(apply_power(op, k, f) for op, k in system.equations)]
    contained = not bad
    rank_claimed = rank_of_span(polys)
    independent = rank_claimed == len(polys)
    spanning = rank_of_span(polys + kernel.basis) == rank_claimed
    match = contained and independent and len(polys) == kernel.dimension
    notes = []
    if len(polys) != kernel.dimension:
        notes.append(f"claimed {len(polys)} vs kernel {kernel.dimension}")
    if bad:
        notes.append("not solutions: " + " ".join(bad))
    if not spanning:
        notes.append("claimed span misses kernel vectors")
    return BasisComparison(len(polys), kernel.dimension, contained, independent, spanning,
                           "MATCH" if match else "DISCREPANCY", "; ".join(notes))
