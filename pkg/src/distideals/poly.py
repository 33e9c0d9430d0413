"""Sparse multivariate polynomials over exact integers, and symbolic matrices.

Monomials are dense exponent tuples over the ring's declared variable list
(the rings used here have at most ~16 variables, so dense tuples hash and
compare fast).  Polynomials are dicts mapping exponent tuples to nonzero
integer coefficients.
"""

from __future__ import annotations

import re
from itertools import combinations
from math import gcd


class InexactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division turns out not to be exact.

    This is a correctness tripwire for fraction-free elimination, not a
    recoverable state.
    """


class Ring:
    """Polynomial ring context: an ordered tuple of variable names."""

    __slots__ = ("variables", "index", "_zero_exps")

    def __init__(self, variables):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.variables = variables
        self.index = {v: k for k, v in enumerate(variables)}
        self._zero_exps = (0,) * len(variables)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"Ring({', '.join(self.variables)})"

    @property
    def nvars(self):
        return len(self.variables)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = int(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {self._zero_exps: c})

    def var(self, name):
        if name not in self.index:
            raise KeyError(f"unknown variable {name!r}")
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return Polynomial(self, {tuple(e): 1})

    def monomial(self, exps, coeff=1):
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector")
        if coeff == 0:
            return self.zero()
        return Polynomial(self, {exps: int(coeff)})

    def parse(self, text):
        return _parse_polynomial(self, text)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[a-zA-Z](?:_[a-zA-Z0-9]+|\d+)?)"
                    r"|(?P<pow>\*\*|\^)|(?P<mul>\*)|(?P<sign>[+-])|(?P<lpar>\()|(?P<rpar>\)))")


def _parse_polynomial(ring, text):
    """Parse the display syntax: integer coefficients, '*' optional, '^' or '**' powers.

    Accepts e.g. ``y0*y1 - 2*y0 + 3``, ``2y0y1``, ``3y4^2``, ``x_u + 2``.
    Parentheses are not supported; the inputs are plain sums of terms.
    """
    pos = 0
    result = {}
    n = len(text)
    sign = 1
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            raise ValueError(f"bad polynomial syntax at {text[pos:pos+20]!r}")
        pos = m.end()
        if m.group("sign"):
            sign = sign * (-1 if m.group("sign") == "-" else 1)
            continue
        if m.group("mul") or m.group("pow") or m.group("lpar") or m.group("rpar"):
            raise ValueError(f"unexpected operator at {text[max(0,pos-3):pos+10]!r}")
        # start of a term: number and/or variables
        coeff = 1
        exps = [0] * ring.nvars
        if m.group("num"):
            coeff = int(m.group("num"))
        else:
            name = m.group("var")
            if name not in ring.index:
                raise ValueError(f"unknown variable {name!r}")
            e = _parse_power(text, pos)
            exps[ring.index[name]] += e[0]
            pos = e[1]
        # continue consuming factors of this term
        while pos < n:
            save = pos
            m2 = _TOKEN.match(text, pos)
            if not m2:
                break
            if m2.group("sign"):
                break
            pos = m2.end()
            if m2.group("mul"):
                continue
            if m2.group("num"):
                coeff *= int(m2.group("num"))
                continue
            if m2.group("var"):
                name = m2.group("var")
                if name not in ring.index:
                    raise ValueError(f"unknown variable {name!r}")
                e = _parse_power(text, pos)
                exps[ring.index[name]] += e[0]
                pos = e[1]
                continue
            pos = save
            break
        key = tuple(exps)
        result[key] = result.get(key, 0) + sign * coeff
        if result[key] == 0:
            del result[key]
        sign = 1
    return Polynomial(ring, result)


def _parse_power(text, pos):
    m = _TOKEN.match(text, pos)
    if m and m.group("pow"):
        m2 = _TOKEN.match(text, m.end())
        if not m2 or not m2.group("num"):
            raise ValueError("exponent must be a positive integer")
        return int(m2.group("num")), m2.end()
    return 1, pos


class Polynomial:
    """Sparse polynomial: map from exponent tuple to nonzero int coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # owned; callers must not mutate

    # -- basics ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exps in self.terms)

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[self.ring._zero_exps]

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name):
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=0)

    def content(self):
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                return 1
        return g

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.constant_value() == other
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different variable contexts")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(self.ring, res)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        res = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = res.get(m, 0) + c1 * c2
                if s:
                    res[m] = s
                else:
                    del res[m]
        return Polynomial(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    # -- substitution ---------------------------------------------------

    def evaluate(self, assignment):
        """Substitute integers for some variables; returns a polynomial
        in the remaining ones (a constant if the assignment is full)."""
        idx = {}
        for name, val in assignment.items():
            if name not in self.ring.index:
                raise KeyError(f"unknown variable {name!r}")
            idx[self.ring.index[name]] = int(val)
        res = {}
        for m, c in self.terms.items():
            v = c
            newm = list(m)
            for i, val in idx.items():
                e = m[i]
                if e:
                    v *= val ** e
                newm[i] = 0
            key = tuple(newm)
            s = res.get(key, 0) + v
            if s:
                res[key] = s
            else:
                res.pop(key, None)
        return Polynomial(self.ring, res)

    # -- display --------------------------------------------------------

    def to_str(self, key=None):
        """Display with integer coefficients and implicit '*'; terms are
        sorted descending by ``key`` (default: degree then exponents)."""
        if not self.terms:
            return "0"
        if key is None:
            key = lambda m: (sum(m), m)
        parts = []
        for m in sorted(self.terms, key=key, reverse=True):
            c = self.terms[m]
            mono = "".join(
                (v if e == 1 else f"{v}^{e}")
                for v, e in zip(self.ring.variables, m) if e)
            if mono:
                if c == 1:
                    body = mono
                elif c == -1:
                    body = f"-{mono}"
                else:
                    body = f"{c}{mono}"
            else:
                body = str(c)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"<poly {self.to_str()}>"


def divexact(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact division p / q; raises InexactDivisionError if q does not divide p."""
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p.ring.zero()
    key = lambda m: (sum(m), m)
    qlead = max(q.terms, key=key)
    qc = q.terms[qlead]
    rem = dict(p.terms)
    quot = {}
    while rem:
        m = max(rem, key=key)
        c = rem[m]
        dm = tuple(a - b for a, b in zip(m, qlead))
        if any(e < 0 for e in dm) or c % qc != 0:
            raise InexactDivisionError("inexact polynomial division")
        f = c // qc
        quot[dm] = f
        for qm, qcf in q.terms.items():
            t = tuple(a + b for a, b in zip(dm, qm))
            s = rem.get(t, 0) - f * qcf
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return Polynomial(p.ring, quot)


class SymMatrix:
    """Square matrix of polynomials sharing one ring."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring, entries):
        rows = tuple(tuple(e for e in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        for row in rows:
            for e in row:
                if e.ring != ring:
                    raise ValueError("entry from a different variable context")
        self.ring = ring
        self.entries = rows

    @property
    def n(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self):
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.n) for j in range(i))

    def evaluate(self, assignment):
        return SymMatrix(self.ring,
                         [[e.evaluate(assignment) for e in row] for row in self.entries])

    def to_int_matrix(self):
        from .intlinalg import IntMatrix
        return IntMatrix([[e.constant_value() for e in row] for row in self.entries])


def generalized_distance_matrix(g) -> SymMatrix:
    """Distance matrix with the diagonal replaced by one indeterminate per vertex."""
    from .graphs import distance_matrix

    d = distance_matrix(g)
    ring = Ring(tuple(f"x{i}" for i in range(g.n)))
    ents = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            row.append(ring.var(f"x{i}") if i == j else ring.const(d[i, j]))
        ents.append(row)
    return SymMatrix(ring, ents)


def submatrix_det(m: SymMatrix, rows, cols) -> Polynomial:
    """Determinant of the submatrix with the given (sorted) row/column indices."""
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column sets must have equal size")
    return _det_rows(m, rows, cols)


def _det_rows(m, rows, cols):
    ring = m.ring
    ents = m.entries
    k = len(rows)
    if k == 0:
        return ring.one()
    memo = {}

    def rec(cset):
        if cset in memo:
            return memo[cset]
        r = rows[k - len(cset)]
        if len(cset) == 1:
            res = ents[r][cset[0]]
        else:
            res = ring.zero()
            sign = 1
            for idx, c in enumerate(cset):
                e = ents[r][c]
                if e.terms:
                    sub = rec(cset[:idx] + cset[idx + 1:])
                    term = e * sub
                    res = res + term if sign > 0 else res - term
                sign = -sign
        memo[cset] = res
        return res

    return rec(tuple(cols))


def determinant(m: SymMatrix) -> Polynomial:
    """Exact determinant by cofactor expansion memoized over column subsets."""
    return _det_rows(m, tuple(range(m.n)), tuple(range(m.n)))


def determinant_bareiss(m: SymMatrix) -> Polynomial:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Independent of ``determinant``; every division performed is exact by the
    Sylvester identity and is checked by ``divexact``.
    """
    n = m.n
    a = [[e for e in row] for row in m.entries]
    ring = m.ring
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * pk - aik * a[k][j]
                a[i][j] = divexact(num, prev)
            a[i][k] = ring.zero()
        prev = pk
    last = a[n - 1][n - 1]
    return -last if sign < 0 else last


def iter_minor_index_sets(n, i):
    """(row subset, column subset) pairs in lexicographic order, 0-based."""
    for rset in combinations(range(n), i):
        for cset in combinations(range(n), i):
            yield rset, cset


def iter_minors(m: SymMatrix, i: int):
    """Yield ((rows, cols), determinant) in the documented enumeration order."""
    if not 1 <= i <= m.n:
        raise ValueError(f"minor size {i} out of range")
    for rset, cset in iter_minor_index_sets(m.n, i):
        yield (rset, cset), submatrix_det(m, rset, cset)


def minors(m: SymMatrix, i: int):
    """All i x i minors, enumerated lexicographically by (rows, cols)."""
    return [p for _, p in iter_minors(m, i)]
