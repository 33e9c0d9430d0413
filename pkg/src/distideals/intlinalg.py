"""Exact integer matrices, Smith normal form, and gcd-of-minors.

Everything here is arbitrary-precision integer arithmetic; no floating
point appears anywhere in the computation.  ``snf`` and ``delta`` are two
deliberately independent code paths (elimination vs. explicit minor
enumeration) so that one can serve as an oracle for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd


class IntMatrix:
    """Immutable dense integer matrix, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.entries = rows

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]})"

    def to_lists(self):
        return [list(r) for r in self.entries]

    def transpose(self):
        return IntMatrix(list(zip(*self.entries)))

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                row.append(sum(self.entries[i][k] * other.entries[k][j]
                               for k in range(self.cols)))
            out.append(row)
        return IntMatrix(out)

    @staticmethod
    def identity(n):
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors (positive, divisibility chain) plus optional transforms.

    When transforms are present, ``left * a * right`` is the diagonal matrix
    with the invariant factors followed by zeros, and both transforms are
    unimodular.
    """

    factors: tuple[int, ...]
    left: IntMatrix | None = None
    right: IntMatrix | None = None

    @property
    def rank(self):
        return len(self.factors)


def snf(a: IntMatrix, want_transforms: bool = False) -> SnfResult:
    """Smith normal form by row/column elimination.

    Pivot selection: smallest nonzero absolute value in the remaining
    submatrix, full row+column elimination, with a divisibility repair pass
    so the diagonal satisfies f_i | f_{i+1}.
    """
    m = [list(r) for r in a.entries]
    nr, nc = a.rows, a.cols
    left = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)] if want_transforms else None
    right = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)] if want_transforms else None

    def row_swap(i1, i2):
        m[i1], m[i2] = m[i2], m[i1]
        if left is not None:
            left[i1], left[i2] = left[i2], left[i1]

    def col_swap(j1, j2):
        for r in m:
            r[j1], r[j2] = r[j2], r[j1]
        if right is not None:
            for r in right:
                r[j1], r[j2] = r[j2], r[j1]

    def row_addmul(dst, src, q):
        # row_dst += q * row_src
        md, ms = m[dst], m[src]
        for j in range(nc):
            md[j] += q * ms[j]
        if left is not None:
            ld, ls = left[dst], left[src]
            for j in range(nr):
                ld[j] += q * ls[j]

    def col_addmul(dst, src, q):
        for r in m:
            r[dst] += q * r[src]
        if right is not None:
            for r in right:
                r[dst] += q * r[src]

    def row_negate(i):
        m[i] = [-x for x in m[i]]
        if left is not None:
            left[i] = [-x for x in left[i]]

    def balanced_q(a, p):
        # quotient with remainder in (-|p|/2, |p|/2], keeping entries small
        q, r = divmod(a, p)
        if 2 * r > abs(p):
            q += 1
        return q

    t = 0
    while t < min(nr, nc):
        while True:
            # re-select the globally smallest nonzero |entry| as the pivot
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    v = m[i][j]
                    if v != 0 and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                t = min(nr, nc)
                break
            if best != (t, t):
                if best[0] != t:
                    row_swap(t, best[0])
                if best[1] != t:
                    col_swap(t, best[1])
            if m[t][t] < 0:
                row_negate(t)
            p = m[t][t]
            clean = True
            for i in range(t + 1, nr):
                if m[i][t] != 0:
                    row_addmul(i, t, -balanced_q(m[i][t], p))
                    if m[i][t] != 0:
                        clean = False
            for j in range(t + 1, nc):
                if m[t][j] != 0:
                    col_addmul(j, t, -balanced_q(m[t][j], p))
                    if m[t][j] != 0:
                        clean = False
            if not clean:
                continue
            # row/column cleared; enforce divisibility of the remaining block
            fix = None
            for i in range(t + 1, nr):
                if any(m[i][j] % p for j in range(t + 1, nc)):
                    fix = i
                    break
            if fix is None:
                t += 1
                break
            row_addmul(t, fix, 1)

    factors = tuple(m[i][i] for i in range(min(nr, nc)) if m[i][i] != 0)
    if want_transforms:
        return SnfResult(factors, IntMatrix(left), IntMatrix(right))
    return SnfResult(factors)


def det_int(rows) -> int:
    """Exact determinant of a square list-of-lists via fraction-free elimination."""
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - aik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def delta(a: IntMatrix, i: int) -> int:
    """gcd of all i x i minors of ``a`` (0 when all vanish).

    Brute-force minor enumeration, kept free of any elimination code so it
    can act as an oracle against ``snf``.
    """
    if not 1 <= i <= min(a.rows, a.cols):
        raise ValueError(f"minor size {i} out of range for {a.rows}x{a.cols} matrix")
    g = 0
    for rset in combinations(range(a.rows), i):
        rows = [a.entries[r] for r in rset]
        for cset in combinations(range(a.cols), i):
            sub = [[row[c] for c in cset] for row in rows]
            g = gcd(g, det_int(sub))
            if g == 1:
                return 1
    return g


def phi_unit_count(g) -> int:
    """Number of invariant factors of the distance matrix equal to 1."""
    from .graphs import distance_matrix

    d = distance_matrix(g)
    return sum(1 for f in snf(d).factors if f == 1)
