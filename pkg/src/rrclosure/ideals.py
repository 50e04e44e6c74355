"""Ideal calculus: reduced Groebner bases, normal forms, colons,
intersections, powers, colength and m-primary certification.

Monomial ideals take combinatorial fast paths through the kernel layer and
never touch Buchberger; everything else runs through a Buchberger engine
with the normal selection strategy and the coprimality/chain criteria.
Internally the engine works on integer-primitive coefficient dicts (over the
rationals) or monic least-residue dicts (over a prime field); the public
reduced bases are always monic.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm

from . import _kernels
from .errors import (
    ExponentOverflowError,
    RingMismatchError,
    RRClosureError,
    ZeroPolynomialError,
)
from .orders import elimination_order
from .polynomials import MAX_EXPONENT, Polynomial, PolyRing

INFINITE = float("inf")

_CONTENT_STRIP_EVERY = 64


# ---------------------------------------------------------------------------
# engine representation
# ---------------------------------------------------------------------------


def _to_int_terms(poly: Polynomial) -> dict:
    """Clear denominators and strip content: integer-primitive term dict."""
    den = 1
    for c in poly.terms.values():
        den = lcm(den, c.denominator)
    terms = {e: int(c * den) for e, c in poly.terms.items()}
    g = 0
    for v in terms.values():
        g = gcd(g, v)
    if g > 1:
        terms = {e: v // g for e, v in terms.items()}
    return terms


def _normalize_qq(terms: dict, lm) -> dict:
    g = 0
    for v in terms.values():
        g = gcd(g, v)
    if g and g != 1:
        terms = {e: v // g for e, v in terms.items()}
    if terms[lm] < 0:
        terms = {e: -v for e, v in terms.items()}
    return terms


def _normalize_fp(terms: dict, lm, p: int) -> dict:
    lc = terms[lm]
    if lc == 1:
        return terms
    inv = pow(lc, -1, p)
    return {e: v * inv % p for e, v in terms.items()}


class _Basis:
    """Parallel arrays describing reducers for the hot normal-form loop."""

    __slots__ = ("lms", "lcs", "tails", "monos", "terms")

    def __init__(self):
        self.lms = []
        self.lcs = []
        self.tails = []
        self.monos = []
        self.terms = []

    def append(self, terms: dict, lm):
        self.lms.append(lm)
        self.lcs.append(terms[lm])
        self.tails.append([(e, c) for e, c in terms.items() if e != lm])
        self.monos.append(len(terms) == 1)
        self.terms.append(terms)

    def __len__(self):
        return len(self.lms)


def _nf_engine(fterms: dict, basis: _Basis, order, p: int | None, stop_early: bool = False):
    """Full normal form of an integer term dict against ``basis``.

    Over the rationals the result equals the true remainder up to a positive
    scalar (fraction-free pseudo-reduction); over F_p it is exact.  With
    ``stop_early`` the return value is just the is-zero boolean.
    """
    mono_mul = _kernels.mono_mul
    mono_div = _kernels.mono_div
    find_div = _kernels.find_divisor_index
    heap_key = order.heap_key
    lms, lcs, tails, monos = basis.lms, basis.lcs, basis.tails, basis.monos

    work = dict(fterms)
    out = {}
    heap = [(heap_key(e), e) for e in work]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, e = heapq.heappop(heap)
        c = work.get(e)
        if c is None:
            continue
        j = find_div(lms, e)
        if j < 0:
            if stop_early:
                return False
            del work[e]
            out[e] = c
            continue
        del work[e]
        steps += 1
        if monos[j]:
            continue
        q = mono_div(e, lms[j])
        if p is None:
            g0 = gcd(c, lcs[j])
            lam = lcs[j] // g0
            mu = c // g0
            if lam != 1:
                for k2 in work:
                    work[k2] *= lam
                for k2 in out:
                    out[k2] *= lam
        else:
            mu = c  # reducers are monic mod p
        for e2, c2 in tails[j]:
            en = mono_mul(q, e2)
            v = work.get(en)
            if v is None:
                v = -mu * c2 if p is None else -mu * c2 % p
                if v:
                    work[en] = v
                    heapq.heappush(heap, (heap_key(en), en))
            else:
                v = v - mu * c2 if p is None else (v - mu * c2) % p
                if v:
                    work[en] = v
                else:
                    del work[en]
        if p is None and steps % _CONTENT_STRIP_EVERY == 0 and (work or out):
            g = 0
            for v in work.values():
                g = gcd(g, v)
            for v in out.values():
                g = gcd(g, v)
            if g > 1:
                for k2 in work:
                    work[k2] //= g
                for k2 in out:
                    out[k2] //= g
    if stop_early:
        return not out
    return out


def _spoly(basis: _Basis, i: int, j: int, p: int | None) -> dict:
    mono_mul = _kernels.mono_mul
    mono_div = _kernels.mono_div
    L = _kernels.mono_lcm(basis.lms[i], basis.lms[j])
    qi = mono_div(L, basis.lms[i])
    qj = mono_div(L, basis.lms[j])
    if p is None:
        g0 = gcd(basis.lcs[i], basis.lcs[j])
        a = basis.lcs[j] // g0
        b = basis.lcs[i] // g0
    else:
        a = b = 1  # monic
    out = {}
    for e, c in basis.terms[i].items():
        out[mono_mul(qi, e)] = a * c if p is None else a * c % p
    for e, c in basis.terms[j].items():
        en = mono_mul(qj, e)
        v = out.get(en, 0) - b * c
        if p is not None:
            v %= p
        if v:
            out[en] = v
        else:
            out.pop(en, None)
    return out


def _update_pairs(basis: _Basis, pairs: set, new_lm, new_is_mono, order):
    """Gebauer-Moeller update: chain criterion on old pairs, coprimality and
    lcm-minimality on the new ones; returns (pairs, freshly added list)."""
    mono_lcm = _kernels.mono_lcm
    mono_divides = _kernels.mono_divides
    mono_mul = _kernels.mono_mul
    lms, monos = basis.lms, basis.monos
    m = len(lms)

    kept = set()
    for i, j in pairs:
        lij = mono_lcm(lms[i], lms[j])
        if (
            not mono_divides(new_lm, lij)
            or mono_lcm(lms[i], new_lm) == lij
            or mono_lcm(lms[j], new_lm) == lij
        ):
            kept.add((i, j))

    classes: dict = {}
    for i in range(m):
        classes.setdefault(mono_lcm(lms[i], new_lm), []).append(i)
    minimal = []
    for L in sorted(classes, key=order.key):
        if not any(mono_divides(L2, L) for L2 in minimal):
            minimal.append(L)
    added = []
    for L in minimal:
        idxs = classes[L]
        if any(L == mono_mul(lms[i], new_lm) for i in idxs):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        if new_is_mono and any(monos[i] for i in idxs):
            continue  # S-polynomial of two monomials is identically zero
        pair = (min(idxs), m)
        kept.add(pair)
        added.append(pair)
    return kept, added


def _engine_groebner(polys, ring: PolyRing) -> list[dict]:
    """Reduced basis as engine term dicts (primitive over QQ, monic mod p)."""
    order = ring.order
    p = ring.field.characteristic or None
    key = order.key

    inputs = []
    for f in polys:
        if isinstance(f, Polynomial):
            if f.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if f.is_zero():
                continue
            terms = _to_int_terms(f) if p is None else dict(f.terms)
        else:
            terms = dict(f)
            if not terms:
                continue
        lm = max(terms, key=key)
        terms = _normalize_qq(terms, lm) if p is None else _normalize_fp(terms, lm, p)
        inputs.append((terms, lm))
    if not inputs:
        return []
    inputs.sort(key=lambda t: key(t[1]))

    basis = _Basis()
    pairs: set = set()
    heap: list = []

    def push(terms, lm):
        nonlocal pairs
        pairs, added = _update_pairs(basis, pairs, lm, len(terms) == 1, order)
        basis.append(terms, lm)
        for i, j in added:
            L = _kernels.mono_lcm(basis.lms[i], basis.lms[j])
            heapq.heappush(heap, (sum(L), key(L), i, j))

    for terms, lm in inputs:
        push(terms, lm)

    zero_exps = (0,) * ring.dim
    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        pairs.discard((i, j))
        s = _spoly(basis, i, j, p)
        if not s:
            continue
        r = _nf_engine(s, basis, order, p)
        if not r:
            continue
        lm = max(r, key=key)
        r = _normalize_qq(r, lm) if p is None else _normalize_fp(r, lm, p)
        if lm == zero_exps:
            return [{zero_exps: 1}]
        push(r, lm)

    # minimalize: drop elements whose leading monomial is divisible by another's
    idxs = sorted(range(len(basis)), key=lambda i: key(basis.lms[i]))
    kept: list[int] = []
    for i in idxs:
        if not any(_kernels.mono_divides(basis.lms[k], basis.lms[i]) for k in kept):
            kept.append(i)
    if len(kept) == 1 and basis.lms[kept[0]] == zero_exps:
        return [{zero_exps: 1}]

    # interreduce tails against the other kept elements
    final = []
    for i in kept:
        others = _Basis()
        for k in kept:
            if k != i:
                others.append(basis.terms[k], basis.lms[k])
        r = _nf_engine(dict(basis.terms[i]), others, order, p)
        lm = basis.lms[i]
        r = _normalize_qq(r, lm) if p is None else _normalize_fp(r, lm, p)
        final.append((lm, r))
    final.sort(key=lambda t: key(t[0]))
    return [terms for _, terms in final]


def _engine_to_monic_poly(terms: dict, ring: PolyRing) -> Polynomial:
    if ring.field.characteristic:
        return Polynomial(ring, dict(terms))
    lm = max(terms, key=ring.order.key)
    lc = terms[lm]
    return Polynomial(ring, {e: Fraction(c, lc) for e, c in terms.items()})


# ---------------------------------------------------------------------------
# reduced bases
# ---------------------------------------------------------------------------


class ReducedBasis:
    """The unique reduced Groebner basis: monic, pairwise reduced, sorted
    ascending by leading monomial."""

    __slots__ = ("polys", "ring", "_engine")

    def __init__(self, polys, ring: PolyRing):
        self.polys = tuple(polys)
        self.ring = ring
        self._engine = None

    @property
    def leading_monomials(self):
        return [p.leading_monomial() for p in self.polys]

    def is_monomial(self) -> bool:
        return all(len(p.terms) == 1 for p in self.polys)

    def _engine_basis(self) -> _Basis:
        if self._engine is None:
            basis = _Basis()
            p = self.ring.field.characteristic or None
            for poly in self.polys:
                terms = _to_int_terms(poly) if p is None else dict(poly.terms)
                basis.append(terms, poly.leading_monomial())
            self._engine = basis
        return self._engine

    def reduces_to_zero(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if not self.polys:
            return False
        p = self.ring.field.characteristic or None
        terms = _to_int_terms(f) if p is None else dict(f.terms)
        return _nf_engine(terms, self._engine_basis(), self.ring.order, p, stop_early=True)

    def normal_form(self, f: Polynomial) -> Polynomial:
        """Exact tail-reduced remainder of f modulo the basis."""
        if f.ring != self.ring:
            raise RingMismatchError("polynomial from a different ring")
        if f.is_zero() or not self.polys:
            return f
        field = self.ring.field
        order = self.ring.order
        lms = self.leading_monomials
        tails = [[(e, c) for e, c in p.terms.items() if e != lms[i]] for i, p in enumerate(self.polys)]
        work = dict(f.terms)
        out = {}
        heap = [(order.heap_key(e), e) for e in work]
        heapq.heapify(heap)
        while heap:
            _, e = heapq.heappop(heap)
            c = work.get(e)
            if c is None:
                continue
            j = _kernels.find_divisor_index(lms, e)
            if j < 0:
                del work[e]
                out[e] = c
                continue
            del work[e]
            q = _kernels.mono_div(e, lms[j])
            for e2, c2 in tails[j]:
                en = _kernels.mono_mul(q, e2)
                v = field.sub(work.get(en, field.zero), field.mul(c, c2))
                if v == field.zero:
                    work.pop(en, None)
                else:
                    if en not in work:
                        heapq.heappush(heap, (order.heap_key(en), en))
                    work[en] = v
        return Polynomial(self.ring, out)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        return isinstance(other, ReducedBasis) and other.polys == self.polys

    def __hash__(self):
        return hash(self.polys)

    def __repr__(self):
        return "ReducedBasis[" + ", ".join(str(p) for p in self.polys) + "]"


def groebner_basis(generators, ring: PolyRing | None = None) -> ReducedBasis:
    """Reduced Groebner basis of a generator list (or of an Ideal)."""
    if isinstance(generators, Ideal):
        return generators.reduced_basis()
    generators = list(generators)
    if ring is None:
        if not generators:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = generators[0].ring
    mono = _monomial_exponent_list(generators)
    if mono is not None:
        return _basis_from_exponents(mono, ring)
    terms = _engine_groebner(generators, ring)
    return ReducedBasis([_engine_to_monic_poly(t, ring) for t in terms], ring)


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f modulo a reduced basis (or an ideal's basis)."""
    if isinstance(basis, Ideal):
        basis = basis.reduced_basis()
    return basis.normal_form(f)


def _monomial_exponent_list(polys):
    exps = []
    for f in polys:
        if isinstance(f, Polynomial):
            if f.is_zero():
                continue
            if len(f.terms) != 1:
                return None
            exps.append(next(iter(f.terms)))
        else:
            return None
    return exps


def _basis_from_exponents(exps, ring: PolyRing) -> ReducedBasis:
    minimal = _kernels.minimalize(exps)
    one = ring.field.one
    return ReducedBasis([Polynomial(ring, {e: one}) for e in minimal], ring)


def _m_power(ring: PolyRing, n: int) -> "Ideal":
    """The n-th power of the irrelevant maximal ideal (all degree-n monomials)."""
    d = ring.dim
    if d == 1:
        return Ideal.from_exponents(ring, [(n,)])
    exps = []

    def build(prefix, remaining, slots):
        if slots == 1:
            exps.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            build(prefix + (e,), remaining - e, slots - 1)

    build((), n, d)
    return Ideal.from_exponents(ring, exps)


# ---------------------------------------------------------------------------
# tag-variable elimination
# ---------------------------------------------------------------------------


def _tag_ring(ring: PolyRing) -> PolyRing:
    name = "t"
    while name in ring.variables:
        name += "_"
    return PolyRing(ring.field, (name,) + ring.variables, elimination_order())


def _tag_intersection(ring: PolyRing, a_polys, b_polys) -> list[Polynomial]:
    """Generators of (a) ∩ (b) via a tag variable t and a block order:
    the t-free part of the reduced basis of t*A + (1-t)*B."""
    S = _tag_ring(ring)
    gens = []
    for f in a_polys:
        gens.append({(1,) + e: c for e, c in f.terms.items()})
    for g in b_polys:
        terms = {(0,) + e: c for e, c in g.terms.items()}
        for e, c in g.terms.items():
            terms[(1,) + e] = ring.field.neg(c)
        gens.append(terms)
    basis_terms = _engine_groebner([Polynomial(S, t) for t in gens], S)
    out = []
    for terms in basis_terms:
        lm = max(terms, key=S.order.key)
        if lm[0] == 0:  # elimination order: t-free lead means t-free element
            out.append(_engine_to_monic_poly({e[1:]: c for e, c in terms.items()}, ring))
    return out


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when g divides f exactly."""
    if g.is_zero():
        raise ZeroPolynomialError("division by the zero polynomial")
    ring = f.ring
    q = ring.zero
    r = f
    lm_g, lc_g = g.leading_term()
    while not r.is_zero():
        lm_r, lc_r = r.leading_term()
        if not _kernels.mono_divides(lm_g, lm_r):
            raise RRClosureError("exact division failed: remainder is nonzero")
        t = ring.monomial(_kernels.mono_div(lm_r, lm_g), ring.field.div(lc_r, lc_g))
        q = q + t
        r = r - t * g
    return q


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


class Ideal:
    """An ideal of a polynomial ring, with cached reduced basis and flags.

    Instances are immutable apart from single-assignment caches; semantic
    comparisons go through :meth:`equals` (generator lists are not
    canonical).
    """

    __slots__ = (
        "ring",
        "generators",
        "_basis",
        "_mono_exps",
        "_m_primary",
        "_colength",
        "_powers",
    )

    def __init__(self, ring: PolyRing, generators=(), *, basis: ReducedBasis | None = None):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.const(g)
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._basis = basis
        self._mono_exps = None
        self._m_primary = None
        self._colength = None
        self._powers = None
        if basis is not None and basis.is_monomial():
            self._mono_exps = [p.leading_monomial() for p in basis.polys]
        elif gens and all(len(g.terms) == 1 for g in gens):
            self._mono_exps = _kernels.minimalize([g.leading_monomial() for g in gens])

    # -- construction helpers ---------------------------------------------

    @classmethod
    def from_exponents(cls, ring: PolyRing, exponents) -> "Ideal":
        exps = _kernels.minimalize(list(exponents))
        one = ring.field.one
        polys = [Polynomial(ring, {e: one}) for e in exps]
        ideal = cls(ring, polys, basis=ReducedBasis(polys, ring))
        ideal._mono_exps = exps
        return ideal

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls.from_exponents(ring, [(0,) * ring.dim])

    # -- structure ----------------------------------------------------------

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def monomial_generators(self):
        """Minimal exponent vectors when the ideal is known monomial, else None.

        Cheap: inspects the generators and any cached basis, never triggers a
        Groebner computation.
        """
        if self._mono_exps is not None:
            return self._mono_exps
        if self._basis is not None and self._basis.is_monomial():
            self._mono_exps = self._basis.leading_monomials
            return self._mono_exps
        return None

    def is_monomial_ideal(self) -> bool:
        """True iff the ideal has a monomial generating set (computes the
        reduced basis when the generators are not already monomial)."""
        if self.monomial_generators() is not None:
            return True
        if self.is_zero_ideal():
            return True
        return self.reduced_basis().is_monomial()

    def reduced_basis(self) -> ReducedBasis:
        if self._basis is None:
            if self.is_zero_ideal():
                self._basis = ReducedBasis((), self.ring)
            else:
                mono = self.monomial_generators()
                if mono is not None:
                    self._basis = _basis_from_exponents(mono, self.ring)
                else:
                    terms = _engine_groebner(self.generators, self.ring)
                    self._basis = ReducedBasis(
                        [_engine_to_monic_poly(t, self.ring) for t in terms], self.ring
                    )
                    if self._basis.is_monomial():
                        self._mono_exps = self._basis.leading_monomials
        return self._basis

    def leading_exponents(self):
        mono = self.monomial_generators()
        if mono is not None:
            return mono
        return self.reduced_basis().leading_monomials

    # -- membership / comparison -------------------------------------------

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError("polynomial from a different ring")
        if f.is_zero():
            return True
        if self.is_zero_ideal():
            return False
        mono = self.monomial_generators()
        if mono is not None:
            return all(_kernels.monomial_contains(mono, e) for e in f.terms)
        return self.reduced_basis().reduces_to_zero(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise RingMismatchError("ideals from different rings")
        a, b = self.monomial_generators(), other.monomial_generators()
        if a is not None and b is not None:
            # minimal monomial generators are canonical as a set; the list
            # order depends on which path produced them
            return set(a) == set(b)
        return self.reduced_basis().polys == other.reduced_basis().polys

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, [other])
        if self.ring != other.ring:
            raise RingMismatchError("ideals from different rings")
        a, b = self.monomial_generators(), other.monomial_generators()
        if a is not None and b is not None:
            return Ideal.from_exponents(self.ring, _kernels.monomial_sum(a, b))
        return Ideal(self.ring, self.generators + other.generators)

    def multiply(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise RingMismatchError("ideals from different rings")
        if self.is_zero_ideal() or other.is_zero_ideal():
            return Ideal(self.ring)
        a, b = self.monomial_generators(), other.monomial_generators()
        if a is not None and b is not None:
            return Ideal.from_exponents(self.ring, _kernels.monomial_product(a, b))
        gens = {g * h for g in self.generators for h in other.generators}
        return Ideal(self.ring, gens)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, [other])
        return self.multiply(other)

    def power(self, n: int) -> "Ideal":
        """I^n, computed incrementally with interreduction and cached."""
        if not isinstance(n, int) or n < 0:
            raise ValueError("ideal powers need a nonnegative integer exponent")
        if n == 0:
            return Ideal.unit(self.ring)
        if n == 1:
            return self
        if self.generators:
            degree = max(g.total_degree() for g in self.generators)
            if degree * n > MAX_EXPONENT:
                raise ExponentOverflowError(f"I^{n} exceeds the exponent width")
        if self._powers is None:
            self._powers = {1: self}
        cache = self._powers
        top = max(cache)
        while top < n:
            nxt = cache[top].multiply(self)
            if nxt.monomial_generators() is None:
                # interreduce: keep the reduced basis as the generating set
                basis = nxt.reduced_basis()
                nxt = Ideal(self.ring, basis.polys, basis=basis)
            top += 1
            cache[top] = nxt
        return cache[n]

    def intersection(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise RingMismatchError("ideals from different rings")
        if self.is_zero_ideal() or other.is_zero_ideal():
            return Ideal(self.ring)
        a, b = self.monomial_generators(), other.monomial_generators()
        if a is not None and b is not None:
            return Ideal.from_exponents(self.ring, _kernels.monomial_intersection(a, b))
        polys = _tag_intersection(self.ring, self._best_generators(), other._best_generators())
        return Ideal(self.ring, polys, basis=ReducedBasis(polys, self.ring))

    def colon(self, other) -> "Ideal":
        """(self : other) for an ideal, polynomial or polynomial list."""
        if isinstance(other, Polynomial):
            divisors = [other]
        elif isinstance(other, Ideal):
            if other.ring != self.ring:
                raise RingMismatchError("ideals from different rings")
            divisors = list(other.generators)
        else:
            divisors = list(other)
        divisors = [g for g in divisors if not g.is_zero()]
        if not divisors:
            raise ZeroPolynomialError("colon by the zero ideal")
        result = None
        for g in divisors:
            single = self._colon_single(g)
            result = single if result is None else result.intersection(single)
        return result

    def _colon_single(self, g: Polynomial) -> "Ideal":
        if g.ring != self.ring:
            raise RingMismatchError("polynomial from a different ring")
        mono = self.monomial_generators()
        if mono is not None and len(g.terms) == 1:
            exps = _kernels.monomial_colon_single(mono, g.leading_monomial())
            return Ideal.from_exponents(self.ring, exps)
        inter = self.intersection(Ideal(self.ring, [g]))
        return Ideal(self.ring, [exact_divide(h, g) for h in inter.generators])

    def _best_generators(self):
        mono = self.monomial_generators()
        if mono is not None:
            one = self.ring.field.one
            return [Polynomial(self.ring, {e: one}) for e in mono]
        if self._basis is not None:
            return list(self._basis.polys)
        return list(self.generators)

    # -- numeric invariants ---------------------------------------------------

    def colength(self):
        """dim_k R/I: the number of standard monomials, or INFINITE."""
        if self._colength is None:
            exps = self.leading_exponents()
            count = _kernels.staircase_colength(list(exps), self.ring.dim)
            self._colength = INFINITE if count < 0 else count
        return self._colength

    def colength_at_origin(self, expect=None, cap: int = 65536):
        """Length of R_m/(I R_m), the localization at the origin.

        For an m-primary ideal this equals :meth:`colength`; in general the
        ideal may have components away from the origin, so the local length
        is read off the truncations I + m^N: their colengths increase to the
        local length, and equality at two consecutive N certifies
        stabilization (Krull intersection).  With ``expect`` given, the scan
        stops early once the monotone lower bound exceeds it.
        """
        if self.is_zero_ideal():
            return INFINITE
        total = self.colength()
        if total == 0:
            return 0
        degrees = [g.total_degree() for g in self.generators]
        N = max(degrees) + 1 if degrees else 1
        while True:
            here = (self + _m_power(self.ring, N)).colength()
            if expect is not None and here > expect:
                return here
            after = (self + _m_power(self.ring, N + 1)).colength()
            if here == after:
                return here
            if expect is not None and after > expect:
                return after
            N *= 2
            if N > cap:
                raise RRClosureError(
                    f"localized length did not stabilize below the cap {cap}"
                )

    def is_m_primary(self) -> bool:
        """True iff rad(I) is the irrelevant maximal ideal.

        Certified by: 1 not in I, finite colength D, and x_i^D in I for every
        variable (x_i is nilpotent mod I of index at most D).
        """
        if self._m_primary is None:
            self._m_primary = self.m_primary_witness() is None
        return self._m_primary

    def m_primary_witness(self):
        """None when m-primary; otherwise a human-readable reason."""
        if self.is_zero_ideal():
            return "the zero ideal is not m-primary"
        D = self.colength()
        if D == 0:
            return "1 lies in the ideal"
        if D is INFINITE:
            lms = self.leading_exponents()
            for i, name in enumerate(self.ring.variables):
                if not any(sum(e) == e[i] > 0 for e in lms):
                    return f"colength is infinite: no pure power of {name} in the leading ideal"
            return "colength is infinite"
        if self.monomial_generators() is not None:
            return None
        basis = self.reduced_basis()
        for i, name in enumerate(self.ring.variables):
            exps = [0] * self.ring.dim
            exps[i] = D
            if not basis.reduces_to_zero(self.ring.monomial(exps)):
                return f"{name}^{D} does not lie in the ideal, so {name} is not nilpotent mod I"
        return None

    def minimal_generators(self) -> tuple[Polynomial, ...]:
        """Lifts of a basis of I/mI (unique monomial generators when monomial)."""
        mono = self.monomial_generators()
        if mono is not None:
            if mono and not any(mono[0]):
                raise ValueError("the unit ideal is not contained in the maximal ideal")
            one = self.ring.field.one
            return tuple(Polynomial(self.ring, {e: one}) for e in mono)
        basis = self.reduced_basis()
        if self.colength() == 0:
            raise ValueError("the unit ideal is not contained in the maximal ideal")
        ring = self.ring
        m_times_i = [ring.var(i) * b for i in range(ring.dim) for b in basis.polys]
        kept: list[Polynomial] = []
        for g in basis.polys:  # ascending by leading monomial
            if not Ideal(ring, m_times_i + kept).contains(g):
                kept.append(g)
        return tuple(kept)

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({inside})"
