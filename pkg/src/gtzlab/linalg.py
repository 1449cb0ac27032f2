"""Dense exact linear algebra over the rationals.

Rows are lists of :class:`fractions.Fraction` (ints are accepted and
promoted).  Everything here is plain Gaussian elimination; matrices in this
package stay small because the kernel solver works block by block.
"""

from fractions import Fraction


def rref(rows, ncols):
    """Reduced row-echelon form.

    Returns ``(reduced_rows, pivot_columns)``.  Zero rows are dropped, so
    ``len(pivot_columns)`` is the rank.  Pivot search scans columns left to
    right, which makes the result depend only on the column order.
    """
    m = [[Fraction(x) for x in row] for row in rows if any(row)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        prow = m[r]
        nz = [j for j in range(c, ncols) if prow[j] != 0]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` read off the reduced row-echelon form.

    One vector per free column ``j``; it has a 1 in position ``j``, zeros in
    the other free positions, and the negated pivot-row entries elsewhere.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[j] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            if row[j] != 0:
                vec[pc] = -row[j]
        basis.append(vec)
    return basis
