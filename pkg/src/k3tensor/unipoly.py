"""Dense univariate polynomials over a finite field.

A polynomial is a list of field element codes, low degree first, with a
nonzero leading coefficient ([] is the zero polynomial).  Every routine takes
the field F as its first argument so the same code runs over F_p and over
extension fields, which the point-counting machinery relies on.

Factorization is squarefree decomposition, then distinct-degree splitting,
then Cantor-Zassenhaus equal-degree splitting (odd characteristic).
"""

import random


def trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(f):
    return len(f) - 1


def is_zero(f):
    return not f


def constant(F, c):
    return [c] if c != F.zero else []


def add(F, f, g):
    n = max(len(f), len(g))
    out = [F.zero] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(out)


def sub(F, f, g):
    n = max(len(f), len(g))
    out = [F.zero] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = F.sub(out[i], c)
    return trim(out)


def neg(F, f):
    return [F.neg(c) for c in f]


def scale(F, f, c):
    if c == F.zero:
        return []
    return trim([F.mul(x, c) for x in f])


def mul(F, f, g):
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == F.zero:
            continue
        for j, b in enumerate(g):
            if b != F.zero:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def divmod_poly(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = degree(g)
    lg = F.inv(g[-1])
    q = [F.zero] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        c = F.mul(f[-1], lg)
        d = len(f) - 1 - dg
        q[d] = c
        for i, b in enumerate(g):
            f[d + i] = F.sub(f[d + i], F.mul(c, b))
        trim(f)
    return trim(q), f


def mod(F, f, g):
    return divmod_poly(F, f, g)[1]


def monic(F, f):
    if not f:
        return f
    return scale(F, f, F.inv(f[-1]))


def gcd(F, f, g):
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def pow_mod(F, f, n, m):
    r = [F.one]
    f = mod(F, f, m)
    while n:
        if n & 1:
            r = mod(F, mul(F, r, f), m)
        f = mod(F, mul(F, f, f), m)
        n >>= 1
    return r


def evaluate(F, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def derivative(F, f):
    out = []
    for i in range(1, len(f)):
        out.append(F.mul(f[i], F.from_int(i)))
    return trim(out)


def interpolate(F, points):
    """Lagrange interpolation through [(x, y)] pairs with distinct x."""
    out = []
    for i, (xi, yi) in enumerate(points):
        num = [F.one]
        den = F.one
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            num = mul(F, num, [F.neg(xj), F.one])
            den = F.mul(den, F.sub(xi, xj))
        out = add(F, out, scale(F, num, F.mul(yi, F.inv(den))))
    return out


def xpow_q_mod(F, f):
    """x^{|F|} mod f, via repeated Frobenius powers (handles big |F|)."""
    x = [F.zero, F.one]
    r = pow_mod(F, x, F.char, f)
    for _ in range(F.degree - 1):
        r = pow_mod(F, r, F.char, f)
    return r


def is_irreducible(F, f):
    """Rabin irreducibility test over F (used to build extension fields)."""
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [F.zero, F.one]
    # x^{q^n} == x mod f, and gcd(x^{q^{n/r}} - x, f) == 1 for prime r | n
    h = x
    powers = {}
    for i in range(1, n + 1):
        h = pow_mod(F, h, F.q, f)
        powers[i] = h
    if sub(F, powers[n], x):
        return False
    for r in _prime_divisors(n):
        g = gcd(F, sub(F, powers[n // r], x), f)
        if degree(g) != 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def squarefree_decomposition(F, f):
    """Yield (factor, multiplicity) with factors squarefree and coprime.

    Handles the characteristic-p collapse f = g(x^p) via recursion.
    """
    p = F.char
    f = monic(F, f)
    out = []
    if degree(f) <= 0:
        return out
    df = derivative(F, f)
    if not df:
        # f = g(x^p); p-th root the exponents (coefficients need a p-th root,
        # which for F_p is identity and for GF(p^k) is frobenius^{k-1})
        g = _pth_root(F, f)
        for fac, m in squarefree_decomposition(F, g):
            out.append((fac, m * p))
        return out
    c = gcd(F, f, df)
    w = divmod_poly(F, f, c)[0]
    m = 1
    while degree(w) > 0:
        y = gcd(F, w, c)
        z = divmod_poly(F, w, y)[0]
        if degree(z) > 0:
            out.append((z, m))
        w = y
        c = divmod_poly(F, c, y)[0]
        m += 1
    if degree(c) > 0:
        for fac, mm in squarefree_decomposition(F, c):
            out.append((fac, mm * p))
    return out


def _pth_root(F, f):
    p = F.char
    coeffs = []
    for i in range(0, len(f), p):
        c = f[i]
        for _ in range(F.degree - 1):
            c = F.frobenius(c)
        coeffs.append(c)
    return trim(coeffs)


def distinct_degree_split(F, f):
    """[(product-of-irreducibles-of-degree-d, d)] for squarefree monic f."""
    out = []
    h = [F.zero, F.one]
    fstar = list(f)
    d = 0
    while degree(fstar) >= 2 * (d + 1):
        d += 1
        h = _frob_power(F, h, fstar)
        g = gcd(F, sub(F, h, [F.zero, F.one]), fstar)
        if degree(g) > 0:
            out.append((g, d))
            fstar = divmod_poly(F, fstar, g)[0]
            h = mod(F, h, fstar)
    if degree(fstar) > 0:
        out.append((fstar, degree(fstar)))
    return out


def _frob_power(F, h, m):
    r = pow_mod(F, h, F.char, m)
    for _ in range(F.degree - 1):
        r = pow_mod(F, r, F.char, m)
    return r


def equal_degree_split(F, f, d, rng):
    """Split squarefree monic f, all of whose irreducible factors have degree
    d, into its irreducible factors (Cantor-Zassenhaus, odd q)."""
    n = degree(f)
    if n == d:
        return [f]
    e = (pow(F.q, d) - 1) // 2
    while True:
        r = [rng.randrange(F.q) for _ in range(n)] + [F.one]
        g = gcd(F, r, f)
        if 0 < degree(g) < n:
            break
        h = sub(F, pow_mod(F, r, e, f), [F.one])
        g = gcd(F, h, f)
        if 0 < degree(g) < n:
            break
    rest = divmod_poly(F, f, g)[0]
    return equal_degree_split(F, g, d, rng) + equal_degree_split(F, rest, d, rng)


def factor(F, f, seed=0):
    """Full factorization: list of (irreducible monic factor, multiplicity)."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(("cz", F.q, tuple(f), seed).__hash__())
    out = []
    for sqf, m in squarefree_decomposition(F, f):
        for prod, d in distinct_degree_split(F, sqf):
            for irr in equal_degree_split(F, prod, d, rng):
                out.append((irr, m))
    out.sort(key=lambda t: (degree(t[0]), t[0]))
    return out


def roots(F, f):
    """Roots of f in F (each once, ignoring multiplicity)."""
    if not f:
        raise ValueError("zero polynomial")
    x = [F.zero, F.one]
    xq = xpow_q_mod(F, f)
    g = gcd(F, sub(F, xq, x), f)
    if degree(g) <= 0:
        return []
    rng = random.Random(("roots", F.q, tuple(f)).__hash__())
    out = []
    for lin in equal_degree_split(F, g, 1, rng):
        out.append(F.neg(lin[0]))
    out.sort()
    return out
