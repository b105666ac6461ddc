"""Finite field arithmetic: prime fields F_p and extensions GF(p^k).

Elements are plain ints.  For F_p they are residues in [0, p).  For GF(p^k)
they are codes in [0, p^k): the base-p digits of the code are the coefficients
of the element written in the power basis 1, t, ..., t^{k-1} modulo a fixed
irreducible polynomial.  Small extension fields (q <= TABLE_LIMIT) get
discrete log/exp tables so multiplication is a lookup; larger ones fall back
to polynomial arithmetic.
"""

import random

TABLE_LIMIT = 1 << 18


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """F_p with elements 0..p-1."""

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.q = p
        self.char = p
        self.degree = 1
        self.zero = 0
        self.one = 1

    def elements(self):
        return range(self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, n):
        return pow(a, n, self.p)

    def from_int(self, n):
        return n % self.p

    def sqrt(self, a):
        """A square root of a, or None if a is a non-residue."""
        p = self.p
        if a == 0:
            return 0
        if p == 2:
            return a
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            return pow(a, (p + 1) // 4, p)
        return _tonelli_shanks(a, p)

    def frobenius(self, a):
        return a

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


def _tonelli_shanks(a, p):
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _poly_code_mul(a, b, p, k, modv):
    """Multiply codes a,b as polynomials mod the monic irreducible with
    coefficient list modv (length k, low to high, of x^k = modv)."""
    da = []
    x = a
    for _ in range(k):
        da.append(x % p)
        x //= p
    db = []
    x = b
    for _ in range(k):
        db.append(x % p)
        x //= p
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(da):
        if ai:
            for j, bj in enumerate(db):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(k):
                prod[d - k + j] = (prod[d - k + j] + c * modv[j]) % p
    code = 0
    for c in reversed(prod[:k]):
        code = code * p + c
    return code


def find_irreducible(p, k, seed=0):
    """Deterministic monic irreducible of degree k over F_p (coefficient list,
    low to high, excluding the leading 1)."""
    from . import unipoly

    F = PrimeField(p)
    rng = random.Random((p, k, seed).__hash__())
    # deterministic sweep first (small constant coefficients), then random
    def candidates():
        for c0 in range(1, p):
            for c1 in range(p):
                yield [c0, c1] + [0] * (k - 2)
        while True:
            yield [rng.randrange(p) for _ in range(k)]

    for low in candidates():
        f = low + [1]
        if unipoly.is_irreducible(F, f):
            return low
    raise RuntimeError("unreachable")


class ExtField:
    """GF(p^k), k >= 2.  Element codes encode coefficient vectors base p."""

    def __init__(self, p, k, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 2:
            raise ValueError("use PrimeField for k = 1")
        self.p = p
        self.k = k
        self.q = p ** k
        self.char = p
        self.degree = k
        self.zero = 0
        self.one = 1
        if modulus is None:
            modulus = find_irreducible(p, k)
        self.modulus = list(modulus)
        # x^k = -modulus (as reduction rule)
        self._red = [(-c) % p for c in self.modulus]
        self._tables = self.q <= TABLE_LIMIT
        if self._tables:
            self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        # find a generator of the multiplicative group
        exp = [0] * (q - 1)
        n = q - 1
        fac = _factorize(n)
        g = self.p  # the element t; try successive codes
        cand = 2
        while True:
            if all(self._pow_poly(cand, n // f) != 1 for f in fac):
                g = cand
                break
            cand += 1
        log = [0] * q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = _poly_code_mul(x, g, p, k, self._red)
        self._exp = exp
        self._log = log
        self.generator = g

    def _pow_poly(self, a, n):
        r = 1
        b = a
        while n:
            if n & 1:
                r = _poly_code_mul(r, b, self.p, self.k, self._red)
            b = _poly_code_mul(b, b, self.p, self.k, self._red)
            n >>= 1
        return r

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub(self, a, b):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a - b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._tables:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return _poly_code_mul(a, b, self.p, self.k, self._red)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._tables:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self._pow_poly(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if a == 0:
            return 0 if n else 1
        if self._tables:
            return self._exp[(self._log[a] * n) % (self.q - 1)]
        if n < 0:
            return self._pow_poly(self.inv(a), -n)
        return self._pow_poly(a, n)

    def from_int(self, n):
        return n % self.p

    def embed(self, a):
        """Embed an F_p residue."""
        return a % self.p

    def gen(self):
        """The class of t (a root of the defining polynomial)."""
        return self.p  # code of the monomial t

    def frobenius(self, a):
        return self.pow(a, self.p)

    def sqrt(self, a):
        if a == 0:
            return 0
        if self._tables:
            e = self._log[a]
            if e % 2:
                return None
            return self._exp[e // 2]
        if self.pow(a, (self.q - 1) // 2) != 1:
            return None
        if self.q % 4 == 3:
            return self.pow(a, (self.q + 1) // 4)
        return _cipolla(self, a)

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return (isinstance(other, ExtField) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ExtField", self.p, self.k, tuple(self.modulus)))


def _cipolla(F, n):
    rng = random.Random(0xC1B0)
    while True:
        t = rng.randrange(F.q)
        w = F.sub(F.mul(t, t), n)
        if w == 0:
            return t
        if F.pow(w, (F.q - 1) // 2) != 1:
            break
    # compute (t + sqrt(w))^((q+1)/2) in F[sqrt(w)]
    def mul2(x, y):
        a, b = x
        c, d = y
        return (F.add(F.mul(a, c), F.mul(F.mul(b, d), w)),
                F.add(F.mul(a, d), F.mul(b, c)))

    r = (F.one, F.zero)
    base = (t, F.one)
    e = (F.q + 1) // 2
    while e:
        if e & 1:
            r = mul2(r, base)
        base = mul2(base, base)
        e >>= 1
    return r[0]


def _factorize(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def GF(p, k=1, modulus=None):
    """Field constructor: GF(p) or GF(p^k)."""
    if k == 1:
        return PrimeField(p)
    return ExtField(p, k, modulus=modulus)
