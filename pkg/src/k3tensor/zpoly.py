"""Dense integer/rational univariate polynomials: exact division, cyclotomic
polynomials, Sturm root counting and dyadic root isolation.

Coefficient lists are low degree first.  Nothing here touches floats; root
isolation works on Fractions so every sign decision is exact.
"""

from fractions import Fraction
from math import gcd


def trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(f) - 1


def add(f, g):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return trim(out)


def neg(f):
    return [-c for c in f]


def sub(f, g):
    return add(f, neg(g))


def mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def divmod_exact(f, g):
    """Polynomial division over Q returning (quotient, remainder) as
    Fraction lists; exact for any nonzero g."""
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]
    trim(f)
    trim(g)
    if not g:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    while f and len(f) >= len(g):
        c = f[-1] / g[-1]
        d = len(f) - len(g)
        q[d] = c
        for i in range(len(g)):
            f[d + i] -= c * g[i]
        trim(f)
    return q, f


def divides(f, g):
    """True when g divides f exactly over Q."""
    _, r = divmod_exact(f, g)
    return not r


def div_exact_int(f, g):
    """Quotient of integer polynomials when division is exact."""
    q, r = divmod_exact(f, g)
    if r:
        raise ArithmeticError("inexact division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError("non-integer quotient")
        out.append(int(c))
    return trim(out)


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f):
    return trim([i * c for i, c in enumerate(f)][1:])


def content(f):
    g = 0
    for c in f:
        g = gcd(g, abs(c))
    return g or 1


def primitive(f):
    c = content(f)
    return [x // c for x in f]


def squarefree_part(f):
    """f / gcd(f, f') as a primitive integer polynomial."""
    if degree(f) <= 0:
        return list(f)
    g = poly_gcd_q(f, derivative(f))
    q, r = divmod_exact(f, g)
    assert not r
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    out = [int(c * den) for c in q]
    return primitive(out)


def poly_gcd_q(f, g):
    """Monic-free gcd over Q returned as a primitive integer polynomial."""
    a = [Fraction(c) for c in f]
    b = [Fraction(c) for c in g]
    trim(a)
    trim(b)
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, r
    if not a:
        return []
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    out = [int(c * den) for c in a]
    return primitive(out)


_cyclo_cache = {1: [-1, 1]}


def cyclotomic(n):
    """The n-th cyclotomic polynomial (integer coefficients)."""
    if n in _cyclo_cache:
        return list(_cyclo_cache[n])
    f = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            f = div_exact_int(f, cyclotomic(d))
    _cyclo_cache[n] = list(f)
    return f


def sturm_chain(f):
    chain = [[Fraction(c) for c in f], [Fraction(c) for c in derivative(f)]]
    while chain[-1]:
        _, r = divmod_exact(chain[-2], chain[-1])
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _sign_changes(chain, x):
    signs = []
    for f in chain:
        v = evaluate(f, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_changes_inf(chain, positive):
    signs = []
    for f in chain:
        if not f:
            continue
        lead = f[-1]
        if not positive and (len(f) - 1) % 2 == 1:
            lead = -lead
        signs.append(1 if lead > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f, lo=None, hi=None):
    """Distinct real roots of squarefree f in (lo, hi]; None bound = infinity."""
    chain = sturm_chain(f)
    a = _sign_changes_inf(chain, False) if lo is None else _sign_changes(chain, Fraction(lo))
    b = _sign_changes_inf(chain, True) if hi is None else _sign_changes(chain, Fraction(hi))
    return a - b


def cauchy_bound(f):
    """All real roots lie in (-B, B)."""
    lead = abs(f[-1])
    m = max(abs(c) for c in f[:-1]) if len(f) > 1 else 0
    return Fraction(m, lead) + 1


def isolate_root_above(f, a):
    """Dyadic bisection bracket of the unique root of squarefree f in
    (a, infinity); returns a shrinking-interval generator of Fractions."""
    b = cauchy_bound(f)
    a = Fraction(a)
    if count_real_roots(f, a, b) != 1:
        raise ValueError("expected exactly one root above the cut")
    # nudge `a` upward to a nonzero point still below the root
    if evaluate(f, a) == 0:
        k = 10
        while True:
            cand = a + Fraction(1, 1 << k)
            if evaluate(f, cand) != 0 and count_real_roots(f, cand, b) == 1:
                a = cand
                break
            k += 2
    fa = evaluate(f, a)
    fb = evaluate(f, b)
    if fb == 0:
        b += 1
        fb = evaluate(f, b)
    assert fa * fb < 0

    def gen():
        lo, hi, flo = a, b, fa
        while True:
            yield lo, hi
            mid = (lo + hi) / 2
            fm = evaluate(f, mid)
            if fm == 0:
                eps = (hi - lo) / 1024
                lo, hi = mid - eps, mid + eps
                flo = evaluate(f, lo)
            elif (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
    return gen()
