"""Correspondence between the B and gl restriction problems.

At exponent level a B tuple ``(p[-1]; pairs)`` goes to ``(p[-1] // 2; pairs)``
plus the parity bit ``sigma``.  At polynomial level the inverse direction is
:func:`soot_apply`: substitute ``z[-1,1] -> z[0,1]^2 / 2`` and multiply by
``z[0,1]^sigma``.
"""

from dataclasses import dataclass
from fractions import Fraction

from gtzlab.claimed import admissible, enumerate_exponents_a, enumerate_exponents_b
from gtzlab.kernel import solve_kernel
from gtzlab.ops import apply_power, euler_eigenvalue
from gtzlab.ring import Poly, rank_of_span, substitute, zvar
from gtzlab.systems import (ExponentTuple, HighestWeight, build_indicator_a, build_indicator_b,
                            e11_op, euler_ops_a, euler_ops_b)
from gtzlab.tableaux import enumerate_gl_tableaux, gl_top


@dataclass(frozen=True)
class CorrespondenceImage:
    p_prime: int
    sigma: int
    pairs: tuple
    target_weight: HighestWeight

    def as_tuple(self):
        return ExponentTuple(self.p_prime, self.pairs)


def target_weight(weight_b):
    """gl weight whose r-vector is ``(r[-n], ..., r[-2], r[-1] // 2)``.

    Integer weights carry over unchanged; half-integer ones drop by 1/2.
    """
    shift = -1 if weight_b.is_half else 0
    return HighestWeight("A", weight_b.n, tuple(e + shift for e in weight_b.entries))


def source_weight(weight_b, sigma):
    """gl weight whose kernel :func:`soot_apply` sends into the B kernel for this ``sigma``.

    For an integer weight and ``sigma = 1`` every entry is lowered by one;
    ``None`` when that leaves the dominant chamber (``m[-1] = 0``).
    """
    base = target_weight(weight_b)
    if sigma == 0 or weight_b.is_half:
        return base
    if base.entries[-1] < 2:
        return None
    return base.shifted(-2)


def correspond_exponents(t, weight_b):
    return CorrespondenceImage(t.p_minus1 // 2, t.p_minus1 % 2, t.pairs, target_weight(weight_b))


def soot_apply(f, sigma):
    t = Poly.var(zvar(0, 1))
    g = substitute(f, {zvar(-1, 1): t * t * Fraction(1, 2)})
    return t * g if sigma else g


def _status(ok):
    return "PASS" if ok else "FAIL"


def check_correspondence_claims(weight_b):
    """Exponent-level checks of the even-case bijection and the odd-case count."""
    tgt = target_weight(weight_b)
    b_tuples = enumerate_exponents_b(weight_b)
    a_tuples = enumerate_exponents_a(tgt)
    even = [t for t in b_tuples if t.p_minus1 % 2 == 0]
    odd = [t for t in b_tuples if t.p_minus1 % 2 == 1]

    images = [correspond_exponents(t, weight_b).as_tuple() for t in even]
    bijective = len(set(images)) == len(images) and set(images) == set(a_tuples)

    odd_images = [correspond_exponents(t, weight_b).as_tuple() for t in odd]
    odd_ok = all(admissible(t, tgt) for t in odd_images) and len(set(odd_images)) == len(odd_images)
    gl_tabs = enumerate_gl_tableaux(gl_top(tgt))
    if weight_b.is_half:
        reference = len(gl_tabs)
        rule = "all gl tableaux"
    else:
        reference = sum(1 for t in gl_tabs if t.middle[-1] > 0)
        rule = "gl tableaux with m'[-1] > 0"
    return {
        "SOP1-BIJ": {
            "status": _status(bijective),
            "details": {"even_b_tuples": len(even), "a_tuples": len(a_tuples),
                        "target_r": list(tgt.r_vector())},
        },
        "SOP2-COUNT": {
            "status": "PASS" if len(odd) == reference else "DISCREPANCY",
            "details": {"odd_b_tuples": len(odd), "reference": reference, "rule": rule,
                        "odd_images_admissible": odd_ok},
        },
    }


def _annihilated(system, f):
    return not any(apply_power(op, k, f) for op, k in system.equations)


def check_soot(weight_b, b_kernel_dim=None):
    """Push gl kernel vectors through :func:`soot_apply` and test them on the B side.

    ``SOOT-IMAGE``: every image solves the B system with the printed ``+`` sign,
    and the images together are independent.  ``SOOT-CONJ``: for i = n..2 the
    ``F[-i,-i]`` eigenvalue of an image is the ``E[-i,-i]`` eigenvalue of the
    source shifted by the difference of the two highest weights.
    """
    plus = build_indicator_b(weight_b, 1)
    minus = build_indicator_b(weight_b, -1)
    f_ops = euler_ops_b(weight_b)
    n = weight_b.n
    images, image_fail, minus_ok = [], [], 0
    conj_fail, minus1_fail = [], []
    per_sigma = {}
    for sigma in (0, 1):
        src = source_weight(weight_b, sigma)
        if src is None:
            per_sigma[str(sigma)] = {"source_weight": None, "count": 0}
            continue
        kernel = solve_kernel(build_indicator_a(src))
        e_ops = euler_ops_a(src)
        e11 = e11_op(n)
        shift = [b - a for b, a in zip(weight_b.entries, src.entries)]
        per_sigma[str(sigma)] = {"source_weight": list(src.entries), "count": kernel.dimension,
                                 "shift2": shift[0]}
        for f in kernel.basis:
            g = soot_apply(f, sigma)
            images.append(g)
            if not _annihilated(plus, g):
                image_fail.append(str(g))
            if _annihilated(minus, g):
                minus_ok += 1
            e = [euler_eigenvalue(op, f) for op in e_ops]
            fv = [euler_eigenvalue(op, g) for op in f_ops]
            if any(fv[j] != e[j] + shift[j] for j in range(n - 1)):
                conj_fail.append(str(f))
            expected_last = e[-1] - euler_eigenvalue(e11, f) - 2 * sigma + shift[-1]
            if fv[-1] != expected_last:
                minus1_fail.append(str(f))
    rank = rank_of_span(images)
    details = {
        "images": len(images),
        "independent": rank == len(images),
        "by_sigma": per_sigma,
        "failures": image_fail,
        "annihilated_by_minus_sign_system": minus_ok,
    }
    if b_kernel_dim is not None:
        details["b_kernel_dim"] = b_kernel_dim
    return {
        "SOOT-IMAGE": {"status": _status(not image_fail and rank == len(images)), "details": details},
        "SOOT-CONJ": {
            "status": _status(not conj_fail),
            "details": {"tested": len(images), "failures": conj_fail,
                        "minus1_component_relation_holds": not minus1_fail},
        },
    }
