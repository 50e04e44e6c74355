"""Pure-Python implementations of the hot monomial kernels.

Monomials are tuples of nonnegative ints; monomial ideals are lists of such
tuples.  The compiled backend (``fast.pyx``) implements exactly the same
functions with identical semantics; randomized equivalence between the two
is part of the test suite.
"""

BACKEND_NAME = "pure"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff monomial a divides monomial b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(a, b):
    """Exponent vector of a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(x if x < y else y for x, y in zip(a, b))


def find_divisor_index(lms, m):
    """Index of the first monomial in lms dividing m, or -1."""
    for i, lm in enumerate(lms):
        ok = True
        for x, y in zip(lm, m):
            if x > y:
                ok = False
                break
        if ok:
            return i
    return -1


def _canonical_key(e):
    # degrevlex-ascending; used only to present generator lists canonically
    return (sum(e), tuple(-v for v in reversed(e)))


def minimalize(monomials):
    """Minimal generators of the monomial ideal spanned by ``monomials``.

    Removes duplicates and every monomial divisible by another; the result is
    sorted canonically (degrevlex ascending).
    """
    cands = sorted(set(monomials), key=_canonical_key)
    kept = []
    for m in cands:
        divisible = False
        for g in kept:
            ok = True
            for x, y in zip(g, m):
                if x > y:
                    ok = False
                    break
            if ok:
                divisible = True
                break
        if not divisible:
            kept.append(m)
    return kept


def monomial_product(gens_a, gens_b):
    """Minimal generators of the product of two monomial ideals."""
    prods = {mono_mul(a, b) for a in gens_a for b in gens_b}
    return minimalize(prods)


def monomial_sum(gens_a, gens_b):
    return minimalize(list(gens_a) + list(gens_b))


def monomial_colon_single(gens, b):
    """Minimal generators of (A : x^b) for monomial A."""
    return minimalize(tuple(x - y if x > y else 0 for x, y in zip(a, b)) for a in gens)


def monomial_intersection(gens_a, gens_b):
    """Minimal generators of the intersection of two monomial ideals."""
    return minimalize(mono_lcm(a, b) for a in gens_a for b in gens_b)


def monomial_contains(gens, m):
    """Membership of the monomial m in the monomial ideal."""
    return find_divisor_index(gens, m) >= 0


def staircase_colength(gens, nvars):
    """Number of monomials outside the staircase of a monomial ideal.

    ``gens`` must be minimalized.  Returns -1 when the count is infinite
    (some variable has no pure power among the generators); 0 when the ideal
    is the unit ideal.
    """
    for g in gens:
        if not any(g):
            return 0
    if not gens:
        return -1
    for i in range(nvars):
        if not any(g[i] > 0 and sum(g) == g[i] for g in gens):
            return -1
    return _colength_rec(gens, nvars)


def _colength_rec(gens, nvars):
    if nvars == 1:
        return min(g[0] for g in gens)
    if nvars == 2:
        seq = sorted(gens)
        total = 0
        for i in range(len(seq) - 1):
            total += (seq[i + 1][0] - seq[i][0]) * seq[i][1]
        return total
    # slice on the last variable: monomials with last exponent e are standard
    # iff their projection avoids the ideal generated by gens with last
    # exponent <= e
    cap = min(g[-1] for g in gens if sum(g) == g[-1])
    total = 0
    for e in range(cap):
        slice_gens = minimalize(g[:-1] for g in gens if g[-1] <= e)
        total += _colength_rec(slice_gens, nvars - 1)
    return total
