"""Salem certification with exact root location and certified entropy.

A polynomial gets status "salem" when it is reciprocal of even degree and,
after the substitution y = x + 1/x, its squarefree trace polynomial has all
roots real with exactly one in (2, oo) and none in (-oo, -2).  That puts one
root lambda > 1 and its inverse off the unit circle and every remaining root
on it.  Root counting is by Sturm chains over Q and isolation by dyadic
bisection, so no float enters the pass/fail decision; mpmath interval
arithmetic only widens the already-isolated root into a certified decimal
enclosure for lambda and log(lambda).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import zpoly

ENCLOSURE_WIDTH = Fraction(1, 10 ** 12)


@dataclass(frozen=True)
class SalemCertificate:
    poly: tuple
    status: str                     # "salem" or "not_salem"
    reason: str = ""
    lambda_interval: tuple = None   # (Fraction lo, Fraction hi)
    entropy_interval: tuple = None  # (float lo, float hi), outward rounded
    exact_quadratic: tuple = None   # (a, s, d): lambda = (a + s*sqrt(d))/2

    @property
    def is_salem(self):
        return self.status == "salem"

    @property
    def entropy(self):
        if self.entropy_interval is None:
            return 0.0
        return (self.entropy_interval[0] + self.entropy_interval[1]) / 2

    @property
    def lambda_value(self):
        if self.lambda_interval is None:
            return None
        return float((self.lambda_interval[0] + self.lambda_interval[1]) / 2)


def trace_polynomial(p):
    """q with p(x) = x^d q(x + 1/x) for reciprocal p of even degree 2d."""
    d = zpoly.degree(p) // 2
    # C_k(y) = x^k + x^-k: C_0 = 2, C_1 = y, C_k = y C_{k-1} - C_{k-2}
    C = [[2], [0, 1]]
    for k in range(2, d + 1):
        C.append(zpoly.sub(zpoly.mul([0, 1], C[k - 1]), C[k - 2]))
    q = [p[d]]
    for k in range(1, d + 1):
        q = zpoly.add(q, [p[d + k] * c for c in C[k]])
    return q


def salem_certify(p) -> SalemCertificate:
    """Certify or refute the Salem property of an integer polynomial."""
    p = zpoly.trim([int(c) for c in p])
    if not p:
        raise ValueError("zero polynomial")
    if p[-1] < 0:
        p = [-c for c in p]
    key = tuple(p)
    n = zpoly.degree(p)
    if n < 2:
        return SalemCertificate(key, "not_salem", "degree below 2")
    if p != p[::-1]:
        return SalemCertificate(key, "not_salem", "not reciprocal")
    if n % 2:
        return SalemCertificate(key, "not_salem", "odd degree")
    q = trace_polynomial(p)
    qs = zpoly.squarefree_part(q)
    d = zpoly.degree(qs)
    if zpoly.count_real_roots(qs) != d:
        return SalemCertificate(key, "not_salem",
                                "conjugates off the unit circle")
    above = zpoly.count_real_roots(qs, 2, None)
    below = zpoly.count_real_roots(qs, None, Fraction(-2))
    if zpoly.evaluate(qs, Fraction(-2)) == 0:
        below -= 1
    if above != 1 or below != 0:
        return SalemCertificate(
            key, "not_salem",
            f"{above} roots above 1 and {below} real conjugates below -1")
    # isolate the trace root in (2, oo) and convert to a lambda enclosure
    lam_lo = lam_hi = None
    for ylo, yhi in zpoly.isolate_root_above(qs, 2):
        if yhi - ylo > ENCLOSURE_WIDTH:
            continue
        lam_lo, lam_hi = _lambda_interval(ylo, yhi)
        if lam_hi - lam_lo <= ENCLOSURE_WIDTH * 4:
            break
    ent = _log_interval(lam_lo, lam_hi)
    return SalemCertificate(key, "salem", "", (lam_lo, lam_hi), ent,
                            _quadratic_description(p))


def _lambda_interval(ylo, yhi):
    """Exact rational enclosure of (y + sqrt(y^2 - 4))/2 over [ylo, yhi]."""
    return (_half_plus_sqrt(ylo, lower=True),
            _half_plus_sqrt(yhi, lower=False))


def _half_plus_sqrt(y, lower):
    t = y * y - 4
    return (y + _sqrt_frac(t, lower)) / 2


def _sqrt_frac(t, lower, bits=64):
    """Directed rational sqrt bound of a nonnegative Fraction."""
    if t < 0:
        raise ValueError("negative radicand")
    num = t.numerator << (2 * bits)
    den = t.denominator
    s = math.isqrt(num // den)
    lo = Fraction(s, 1 << bits)
    while lo * lo > t:
        s -= 1
        lo = Fraction(s, 1 << bits)
    if lower:
        return lo
    return Fraction(s + 2, 1 << bits)


def _log_interval(lam_lo, lam_hi):
    with mpmath.workdps(40):
        iv = mpmath.iv.log(mpmath.iv.mpf([
            mpmath.mpf(lam_lo.numerator) / mpmath.mpf(lam_lo.denominator),
            mpmath.mpf(lam_hi.numerator) / mpmath.mpf(lam_hi.denominator)]))
        lo = float(mpmath.mpf(iv.a)) * (1 - 1e-15)
        hi = float(mpmath.mpf(iv.b)) * (1 + 1e-15)
    return (lo, hi)


def _quadratic_description(p):
    """For x^2 - a x + 1: lambda = (a + s*sqrt(d))/2 with d squarefree."""
    if zpoly.degree(p) != 2 or p[0] != 1 or p[2] != 1:
        return None
    a = -p[1]
    disc = a * a - 4
    if disc <= 0:
        return None
    s, d = _squarefree_split(disc)
    return (a, s, d)


def _squarefree_split(n):
    """n = s^2 * d with d squarefree; returns (s, d)."""
    s, d = 1, 1
    m = n
    f = 2
    while f * f <= m:
        e = 0
        while m % f == 0:
            m //= f
            e += 1
        s *= f ** (e // 2)
        if e % 2:
            d *= f
        f += 1
    d *= m
    return s, d


def strip_cyclotomic(p):
    """Divide out every cyclotomic factor; returns (pairs, remainder) with
    pairs a sorted list of (n, multiplicity)."""
    p = zpoly.trim([int(c) for c in p])
    if not p:
        raise ValueError("zero polynomial")
    if p[-1] < 0:
        p = [-c for c in p]
    D = zpoly.degree(p)
    pairs = []
    # phi(n) >= sqrt(n/2), so phi(n) <= D forces n <= 2 D^2 (+ slack)
    for n in range(1, 2 * D * D + 3):
        phi = zpoly.cyclotomic(n)
        if zpoly.degree(phi) > zpoly.degree(p):
            continue
        m = 0
        while zpoly.degree(p) >= zpoly.degree(phi) and zpoly.divides(p, phi):
            p = zpoly.div_exact_int(p, phi)
            m += 1
        if m:
            pairs.append((n, m))
        if zpoly.degree(p) == 0:
            break
    return pairs, p
