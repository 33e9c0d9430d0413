"""Strong Groebner bases over the integers, reduced bases over the rationals,
ideal membership, ideal equality, and triviality detection.

Over ZZ a *strong* basis is computed: every element of the ideal has a
leading term divisible -- monomial and coefficient -- by some basis leading
term.  Completion uses both S-polynomials and gcd-polynomials; reduction
uses integer division with nonnegative remainder.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .poly import Polynomial, Ring


class BudgetExceededError(Exception):
    """Raised when a completion exceeds its pair-reduction budget.

    This is an explicit "inconclusive" outcome, never a wrong answer.
    """


@dataclass(frozen=True)
class MonomialOrder:
    kind: str                      # "lex" | "grevlex"
    precedence: tuple[str, ...]    # highest variable first

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")

    def key_func(self, ring: Ring):
        perm = tuple(ring.index[v] for v in self.precedence)
        if len(perm) != ring.nvars:
            raise ValueError("order precedence must cover all ring variables")
        if self.kind == "lex":
            def key(m, _perm=perm):
                return tuple(m[i] for i in _perm)
        else:
            rperm = tuple(reversed(perm))

            def key(m, _rperm=rperm):
                return (sum(m), tuple(-m[i] for i in _rperm))
        return key


def lex_order(ring: Ring) -> MonomialOrder:
    return MonomialOrder("lex", ring.variables)


def grevlex_order(ring: Ring) -> MonomialOrder:
    return MonomialOrder("grevlex", ring.variables)


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    domain: str                     # "int" | "rational"
    interreduced: bool = True

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


# -- term-dict helpers (hot path works on raw dicts) -----------------------


def _lt(terms, keyf):
    m = max(terms, key=keyf)
    return m, terms[m]


def _mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _addmul_into(dst, terms, coeff, shift):
    """dst += coeff * X^shift * terms  (in place)."""
    if coeff == 0:
        return
    for m, c in terms.items():
        t = _mono_add(m, shift)
        s = dst.get(t, 0) + coeff * c
        if s:
            dst[t] = s
        else:
            del dst[t]


def _xgcd(a, b):
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


class _Entry:
    __slots__ = ("terms", "ltm", "ltc", "sugar")

    def __init__(self, terms, keyf, sugar=None):
        self.terms = terms
        self.ltm, self.ltc = _lt(terms, keyf)
        self.sugar = max(sum(m) for m in terms) if sugar is None else sugar


def _reduce_terms(work, entries, keyf, rational):
    """Strong (ZZ) or ordinary (QQ) normal form of a term dict."""
    work = dict(work)
    rem = {}
    while work:
        mu = max(work, key=keyf)
        c = work[mu]
        hit = None
        for e in entries:
            if _mono_divides(e.ltm, mu):
                if rational:
                    hit = (e, c / e.ltc)
                    break
                q = c // e.ltc
                if q:
                    hit = (e, q)
                    break
        if hit is None:
            rem[mu] = c
            del work[mu]
        else:
            e, q = hit
            _addmul_into(work, e.terms, -q, _mono_sub(mu, e.ltm))
    return rem


def _normalized(terms, keyf, rational):
    """Sign/scale normalization: positive leading coefficient over ZZ,
    primitive integer form (a scalar multiple of the monic one) over QQ."""
    if not terms:
        return terms
    if rational:
        num_gcd = 0
        den_lcm = 1
        for c in terms.values():
            num_gcd = gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        scale = Fraction(den_lcm, num_gcd)
        out = {m: int(c * scale) for m, c in terms.items()}
        _, lc = _lt(out, keyf)
        if lc < 0:
            out = {m: -c for m, c in out.items()}
        return out
    _, lc = _lt(terms, keyf)
    if lc < 0:
        return {m: -c for m, c in terms.items()}
    return dict(terms)


class _Completion:
    """Incremental Buchberger completion (strong over ZZ, ordinary over QQ)."""

    def __init__(self, ring, order, budget, rational=False):
        self.ring = ring
        self.keyf = order.key_func(ring)
        self.rational = rational
        self.budget = budget
        self.steps = 0
        self.entries = []
        self.pairs = []   # heap of (sugar, tiebreak, counter, kind, i, j)
        self._counter = 0
        self.unit = False

    def _tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceededError(f"completion exceeded {self.budget} pair reductions")

    def _push_pairs(self, k):
        ek = self.entries[k]
        for i, ei in enumerate(self.entries[:k]):
            gamma = _mono_lcm(ei.ltm, ek.ltm)
            sugar = max(ei.sugar + sum(_mono_sub(gamma, ei.ltm)),
                        ek.sugar + sum(_mono_sub(gamma, ek.ltm)))
            self._counter += 1
            heapq.heappush(self.pairs, (sugar, sum(gamma), self._counter, "s", i, k))
            if not self.rational:
                a, b = ei.ltc, ek.ltc
                if a % b != 0 and b % a != 0:
                    self._counter += 1
                    heapq.heappush(self.pairs, (sugar, sum(gamma), self._counter, "g", i, k))

    def add_generator(self, terms):
        if not terms:
            return
        if self.rational:
            terms = {m: Fraction(c) for m, c in terms.items()}
        red = _reduce_terms(terms, self.entries, self.keyf, self.rational)
        if not red:
            return
        red = _normalized(red, self.keyf, self.rational)
        if self.rational:
            red = {m: Fraction(c) for m, c in red.items()}
        e = _Entry(red, self.keyf)
        if self._is_unit(e):
            self.unit = True
        self.entries.append(e)
        self._push_pairs(len(self.entries) - 1)

    def _is_unit(self, e):
        if sum(e.ltm) != 0:
            return False
        return abs(e.ltc) == 1 if not self.rational else e.ltc != 0

    def run(self, stop_on_unit=False):
        while self.pairs:
            if stop_on_unit and self.unit:
                return
            self._tick()
            _, _, _, kind, i, j = heapq.heappop(self.pairs)
            ei, ej = self.entries[i], self.entries[j]
            gamma = _mono_lcm(ei.ltm, ej.ltm)
            if kind == "s":
                # product criterion: safe to skip only when both the leading
                # monomials and the leading coefficients are coprime
                if gamma == _mono_add(ei.ltm, ej.ltm):
                    if self.rational or gcd(ei.ltc, ej.ltc) == 1:
                        continue
                h = {}
                if self.rational:
                    _addmul_into(h, ei.terms, Fraction(1, 1) / ei.ltc, _mono_sub(gamma, ei.ltm))
                    _addmul_into(h, ej.terms, Fraction(-1, 1) / ej.ltc, _mono_sub(gamma, ej.ltm))
                else:
                    l = ei.ltc * ej.ltc // gcd(ei.ltc, ej.ltc)
                    _addmul_into(h, ei.terms, l // ei.ltc, _mono_sub(gamma, ei.ltm))
                    _addmul_into(h, ej.terms, -(l // ej.ltc), _mono_sub(gamma, ej.ltm))
            else:
                a, b = ei.ltc, ej.ltc
                if a % b == 0 or b % a == 0:
                    continue
                d, u, v = _xgcd(a, b)
                h = {}
                _addmul_into(h, ei.terms, u, _mono_sub(gamma, ei.ltm))
                _addmul_into(h, ej.terms, v, _mono_sub(gamma, ej.ltm))
            red = _reduce_terms(h, self.entries, self.keyf, self.rational)
            if red:
                red = _normalized(red, self.keyf, self.rational)
                if self.rational:
                    red = {m: Fraction(c) for m, c in red.items()}
                e = _Entry(red, self.keyf)
                if self._is_unit(e):
                    self.unit = True
                self.entries.append(e)
                self._push_pairs(len(self.entries) - 1)

    def interreduced_polys(self):
        """Final interreduction; returns integer-coefficient Polynomials."""
        if self.unit:
            return [self.ring.one()]
        items = [dict(e.terms) for e in self.entries]
        changed = True
        rounds = 0
        while changed:
            rounds += 1
            if rounds > 4 * len(items) + 16:
                break
            changed = False
            keep = []
            for k, terms in enumerate(items):
                others = [e for idx, e in enumerate(items) if idx != k and e]
                ents = [_Entry(t, self.keyf) for t in others]
                red = _reduce_terms(terms, ents, self.keyf, self.rational)
                red = _normalized(red, self.keyf, self.rational) if red else red
                if self.rational and red:
                    red = {m: Fraction(c) for m, c in red.items()}
                if red != terms:
                    changed = True
                keep.append(red)
            items = [t for t in keep if t]
        out = []
        for terms in items:
            out.append(Polynomial(self.ring, {m: int(c) for m, c in terms.items()}))
        out.sort(key=lambda p: (p.total_degree(), sorted(p.terms)))
        return out


def _as_completion(gens, order, budget, rational):
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators from different variable contexts")
    comp = _Completion(ring, order, budget, rational)
    for g in gens:
        comp.add_generator(g.terms)
    return comp


DEFAULT_BUDGET = 200_000


def strong_groebner(gens, order: MonomialOrder, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Interreduced strong Groebner basis over ZZ."""
    comp = _as_completion(list(gens), order, budget, rational=False)
    comp.run()
    polys = comp.interreduced_polys()
    return GroebnerBasis(tuple(polys), order, "int")


def rational_groebner(gens, order: MonomialOrder, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced basis over QQ, reported as primitive integer polynomials
    (each a scalar multiple of the monic basis element)."""
    comp = _as_completion(list(gens), order, budget, rational=True)
    comp.run()
    polys = comp.interreduced_polys()
    return GroebnerBasis(tuple(polys), order, "rational")


def strong_reduce(p: Polynomial, basis, order: MonomialOrder) -> Polynomial:
    """Strong normal form of p modulo a list of polynomials over ZZ."""
    basis = [b for b in basis if not b.is_zero()]
    if not basis:
        return p
    keyf = order.key_func(p.ring)
    ents = [_Entry(dict(b.terms), keyf) for b in basis]
    red = _reduce_terms(p.terms, ents, keyf, rational=False)
    return Polynomial(p.ring, red)


def reduce_rational(p: Polynomial, basis, order: MonomialOrder) -> Polynomial:
    """Normal form over QQ, reported primitive-integer (zero iff p is in the ideal)."""
    basis = [b for b in basis if not b.is_zero()]
    if not basis:
        return p
    keyf = order.key_func(p.ring)
    ents = [_Entry({m: Fraction(c) for m, c in b.terms.items()}, keyf) for b in basis]
    red = _reduce_terms({m: Fraction(c) for m, c in p.terms.items()}, ents, keyf, rational=True)
    if not red:
        return p.ring.zero()
    red = _normalized(red, keyf, rational=True)
    return Polynomial(p.ring, {m: int(c) for m, c in red.items()})


def contains_one(basis: GroebnerBasis) -> bool:
    """True iff some basis element is a constant of absolute value 1
    (over QQ: any nonzero constant, though reduced bases emit 1 itself)."""
    for p in basis.generators:
        if p.is_constant() and not p.is_zero():
            c = p.constant_value()
            if basis.domain == "rational" or abs(c) == 1:
                return True
    return False


# -- fast integer triviality router ----------------------------------------
#
# Deciding 1 in I over ZZ via a full strong completion can be slow when the
# generators are many large minors.  The router below is exact and usually
# far cheaper:
#
#   1. a fraction-free (pseudo) Buchberger pass: every polynomial it forms
#      is an integer combination of the inputs, except that inserted basis
#      elements are made primitive, with the stripped contents' primes
#      recorded in a pool.  A nonzero constant k it produces therefore
#      certifies k * (product of pool) in I; no constant at quiescence
#      proves the ideal proper already over QQ.
#   2. with an honest member N = k * (pool product) in hand, 1 in I holds
#      iff the ideal is trivial modulo every prime p | N (fast field
#      computations): N in I plus invertibility of each such p modulo I
#      forces 1 in I, while a proper reduction modulo one of them refutes
#      it.  Spurious pool primes cannot flip either outcome.


def _pseudo_reduce(work, entries, keyf):
    """Fraction-free normal form: cross-multiplies by basis leading
    coefficients, so the result is an integer combination of the basis and
    the input (an integer multiple of the field normal form)."""
    work = dict(work)
    rem = {}
    while work:
        mu = max(work, key=keyf)
        c = work[mu]
        hit = None
        for e in entries:
            if _mono_divides(e.ltm, mu):
                hit = e
                break
        if hit is None:
            rem[mu] = c
            del work[mu]
        else:
            g = gcd(c, hit.ltc)
            scale = hit.ltc // g
            if scale != 1:
                for m in work:
                    work[m] *= scale
                for m in rem:
                    rem[m] *= scale
                c = work[mu]
            _addmul_into(work, hit.terms, -(c // hit.ltc), _mono_sub(mu, hit.ltm))
    return rem


class _FactorizationGiveUp(Exception):
    pass


def _prime_factors(n, limit=10**6):
    n = abs(n)
    out = []
    d = 2
    while d * d <= n and d <= limit:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if _is_probable_prime(n):
            out.append(n)
        else:
            raise _FactorizationGiveUp(f"cannot factor {n}")
    return out


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class _PseudoCompletion:
    """Monomial-span completion over QQ carried out in integer arithmetic.

    ``constant`` is the first nonzero constant produced; together with the
    contents stripped into ``pool_primes`` it certifies an integer member
    of the ideal (see the router comment above).
    """

    def __init__(self, ring, order, budget):
        self.ring = ring
        self.keyf = order.key_func(ring)
        self.budget = budget
        self.steps = 0
        self.entries = []
        self.pairs = []
        self._counter = 0
        self.constant = 0
        self.pool_primes = set()

    def _tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceededError(f"completion exceeded {self.budget} pair reductions")

    def _insert(self, terms):
        """Returns True once a nonzero constant member is certified."""
        if not terms:
            return False
        only = next(iter(terms)) if len(terms) == 1 else None
        if only is not None and sum(only) == 0:
            self.constant = abs(terms[only])
            return True
        g = 0
        for c in terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            self.pool_primes.update(_prime_factors(g))
            terms = {m: c // g for m, c in terms.items()}
        e = _Entry(terms, self.keyf)
        if e.ltc < 0:
            terms = {m: -c for m, c in terms.items()}
            e = _Entry(terms, self.keyf)
        k = len(self.entries)
        self.entries.append(e)
        for i, ei in enumerate(self.entries[:k]):
            gamma = _mono_lcm(ei.ltm, e.ltm)
            if gamma == _mono_add(ei.ltm, e.ltm):
                continue    # field product criterion
            sugar = max(ei.sugar + sum(_mono_sub(gamma, ei.ltm)),
                        e.sugar + sum(_mono_sub(gamma, e.ltm)))
            self._counter += 1
            heapq.heappush(self.pairs, (sugar, sum(gamma), self._counter, i, k))
        return False

    def add_generator(self, terms):
        red = _pseudo_reduce(terms, self.entries, self.keyf)
        return self._insert(red)

    def run(self):
        """Returns True as soon as a nonzero constant member is certified."""
        while self.pairs:
            self._tick()
            _, _, _, i, j = heapq.heappop(self.pairs)
            ei, ej = self.entries[i], self.entries[j]
            gamma = _mono_lcm(ei.ltm, ej.ltm)
            l = ei.ltc * ej.ltc // gcd(ei.ltc, ej.ltc)
            h = {}
            _addmul_into(h, ei.terms, l // ei.ltc, _mono_sub(gamma, ei.ltm))
            _addmul_into(h, ej.terms, -(l // ej.ltc), _mono_sub(gamma, ej.ltm))
            red = _pseudo_reduce(h, self.entries, self.keyf)
            if self._insert(red):
                return True
        return False


def _modp_trivial(gens_terms, ring, order, p, budget):
    """Whether the reduction of the ideal modulo the prime p is trivial."""
    keyf = order.key_func(ring)
    entries = []
    pairs = []
    counter = 0
    steps = 0

    def reduce_terms(terms):
        work = {m: c % p for m, c in terms.items() if c % p}
        rem = {}
        while work:
            mu = max(work, key=keyf)
            hit = None
            for e in entries:
                if _mono_divides(e.ltm, mu):
                    hit = e
                    break
            if hit is None:
                rem[mu] = work.pop(mu)
            else:
                q = (work[mu] * pow(hit.ltc, -1, p)) % p
                shift = _mono_sub(mu, hit.ltm)
                for m2, c2 in hit.terms.items():
                    t = _mono_add(m2, shift)
                    s = (work.get(t, 0) - q * c2) % p
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
        return rem

    def insert(terms):
        nonlocal counter
        if not terms:
            return False
        only = next(iter(terms)) if len(terms) == 1 else None
        if only is not None and sum(only) == 0:
            return True
        e = _Entry(terms, keyf)
        k = len(entries)
        entries.append(e)
        for i, ei in enumerate(entries[:k]):
            gamma = _mono_lcm(ei.ltm, e.ltm)
            if gamma == _mono_add(ei.ltm, e.ltm):
                continue
            counter += 1
            sugar = max(ei.sugar + sum(_mono_sub(gamma, ei.ltm)),
                        e.sugar + sum(_mono_sub(gamma, e.ltm)))
            heapq.heappush(pairs, (sugar, sum(gamma), counter, i, k))
        return False

    for terms in gens_terms:
        if insert(reduce_terms(terms)):
            return True
    while pairs:
        steps += 1
        if steps > budget:
            raise BudgetExceededError(f"mod-{p} completion exceeded {budget} steps")
        _, _, _, i, j = heapq.heappop(pairs)
        ei, ej = entries[i], entries[j]
        gamma = _mono_lcm(ei.ltm, ej.ltm)
        h = {}
        _addmul_into(h, ei.terms, pow(ei.ltc, -1, p), _mono_sub(gamma, ei.ltm))
        _addmul_into(h, ej.terms, -pow(ej.ltc, -1, p), _mono_sub(gamma, ej.ltm))
        h = {m: c % p for m, c in h.items() if c % p}
        if insert(reduce_terms(h)):
            return True
    return False


def integer_ideal_contains_one(gens, order: MonomialOrder,
                               budget: int = DEFAULT_BUDGET):
    """Exact decision of 1 in <gens> over ZZ via the pseudo/modular router.

    Returns (True, info) or (False, info); raises BudgetExceededError when
    a completion blows its budget or a certified constant resists factoring.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False, {"route": "empty"}
    ring = gens[0].ring
    comp = _PseudoCompletion(ring, order, budget)
    try:
        done = False
        for g in gens:
            if comp.add_generator(g.terms):
                done = True
                break
        if not done:
            done = comp.run()
        if not done:
            return False, {"route": "proper-over-rationals"}
        test_primes = sorted(set(_prime_factors(comp.constant)) | comp.pool_primes)
    except _FactorizationGiveUp as exc:
        raise BudgetExceededError(str(exc)) from exc
    if comp.constant == 1 and not comp.pool_primes:
        return True, {"route": "integer-combination", "constant": 1}
    for p in test_primes:
        if not _modp_trivial([g.terms for g in gens], ring, order, p, budget):
            return False, {"route": f"proper-mod-{p}", "constant": comp.constant}
    return True, {"route": "modular", "constant": comp.constant,
                  "primes": test_primes}


def ideal_equal(gens_a, gens_b, order: MonomialOrder, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the two generator lists span the same ideal (domain ZZ)."""
    gens_a, gens_b = list(gens_a), list(gens_b)
    ga = strong_groebner(gens_a, order, budget)
    for p in gens_b:
        if not strong_reduce(p, ga.generators, order).is_zero():
            return False
    gb = strong_groebner(gens_b, order, budget)
    for p in gens_a:
        if not strong_reduce(p, gb.generators, order).is_zero():
            return False
    return True
