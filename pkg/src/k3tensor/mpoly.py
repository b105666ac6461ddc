"""Sparse multivariate polynomials over Q or F_p with variable blocks.

Variables are grouped into named blocks (one block per projective factor),
e.g. blocks = (("v", 2), ("w", 2), ("x", 2)) for P1 x P1 x P1.  A term maps a
flat exponent tuple to a coefficient: Fraction over Q, an int in [0, p) over
F_p.  Iteration order is graded lex on the flat exponent tuples, which makes
serialization and golden files reproducible.
"""

import json
from dataclasses import dataclass
from fractions import Fraction


class DegreeError(ValueError):
    pass


class DivisibilityError(ArithmeticError):
    pass


def _gradedlex_key(e):
    return (sum(e), tuple(-x for x in e))


class MultiPoly:
    __slots__ = ("blocks", "p", "terms")

    def __init__(self, blocks, terms, p=None, normalize=True):
        self.blocks = tuple((str(n), int(s)) for n, s in blocks)
        self.p = p
        if normalize:
            clean = {}
            for e, c in terms.items():
                if p is not None:
                    c = c % p
                else:
                    c = Fraction(c)
                if c:
                    clean[tuple(e)] = c
            terms = clean
        self.terms = terms

    # -- construction helpers -------------------------------------------
    @property
    def nvars(self):
        return sum(s for _, s in self.blocks)

    def _block_range(self, block):
        off = 0
        for name, size in self.blocks:
            if name == block:
                return off, size
            off += size
        raise KeyError(f"no block named {block!r}")

    @staticmethod
    def zero(blocks, p=None):
        return MultiPoly(blocks, {}, p=p, normalize=False)

    @staticmethod
    def const(blocks, c, p=None):
        n = sum(s for _, s in blocks)
        return MultiPoly(blocks, {tuple([0] * n): c}, p=p)

    @staticmethod
    def variable(blocks, block, index, p=None):
        n = sum(s for _, s in blocks)
        off = 0
        for name, size in blocks:
            if name == block:
                break
            off += size
        e = [0] * n
        e[off + index] = 1
        one = 1 if p is not None else Fraction(1)
        return MultiPoly(blocks, {tuple(e): one}, p=p)

    def is_zero(self):
        return not self.terms

    def _check_compatible(self, other):
        if self.blocks != other.blocks or self.p != other.p:
            raise ValueError("incompatible polynomial rings")

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        p = self.p
        for e, c in other.terms.items():
            nc = terms.get(e, 0) + c
            if p is not None:
                nc %= p
            if nc:
                terms[e] = nc
            elif e in terms:
                del terms[e]
        return MultiPoly(self.blocks, terms, p=p, normalize=False)

    def __neg__(self):
        p = self.p
        if p is None:
            terms = {e: -c for e, c in self.terms.items()}
        else:
            terms = {e: (-c) % p for e, c in self.terms.items()}
        return MultiPoly(self.blocks, terms, p=p, normalize=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        p = self.p
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nc = terms.get(e, 0) + c1 * c2
                if p is not None:
                    nc %= p
                if nc:
                    terms[e] = nc
                elif e in terms:
                    del terms[e]
        return MultiPoly(self.blocks, terms, p=p, normalize=False)

    __rmul__ = __mul__

    def scale(self, c):
        p = self.p
        if p is not None:
            c = c % p
            if c == 0:
                return MultiPoly.zero(self.blocks, p)
            terms = {e: (v * c) % p for e, v in self.terms.items()}
        else:
            c = Fraction(c)
            if c == 0:
                return MultiPoly.zero(self.blocks, p)
            terms = {e: v * c for e, v in self.terms.items()}
        return MultiPoly(self.blocks, terms, p=p, normalize=False)

    def __pow__(self, n):
        result = MultiPoly.const(self.blocks, 1, p=self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.blocks == other.blocks
                and self.p == other.p and self.terms == other.terms)

    def __hash__(self):
        return hash((self.blocks, self.p, frozenset(self.terms.items())))

    # -- structure -------------------------------------------------------
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def block_degree(self, block):
        off, size = self._block_range(block)
        return max((sum(e[off:off + size]) for e in self.terms), default=-1)

    def multidegree(self):
        return tuple(self.block_degree(name) for name, _ in self.blocks)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _gradedlex_key(t[0]))

    def leading(self):
        """Leading term in graded lex order (highest degree, then lex)."""
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def coefficients_in_block(self, block):
        """Split by the named block: {block-exponent-tuple: MultiPoly in the
        other variables (same ring, block exponents zeroed)}."""
        off, size = self._block_range(block)
        out = {}
        for e, c in self.terms.items():
            be = e[off:off + size]
            rest = e[:off] + (0,) * size + e[off + size:]
            bucket = out.setdefault(be, {})
            bucket[rest] = bucket.get(rest, 0) + c
        return {be: MultiPoly(self.blocks, t, p=self.p) for be, t in out.items()}

    def substitute_block(self, block, values):
        """Plug field/rational constants into one block's variables."""
        off, size = self._block_range(block)
        if len(values) != size:
            raise ValueError("wrong number of values for block")
        p = self.p
        terms = {}
        for e, c in self.terms.items():
            f = c
            for i in range(size):
                k = e[off + i]
                if k:
                    f = f * values[i] ** k
            if p is not None:
                f %= p
            rest = e[:off] + (0,) * size + e[off + size:]
            nc = terms.get(rest, 0) + f
            if p is not None:
                nc %= p
            if nc:
                terms[rest] = nc
            elif rest in terms:
                del terms[rest]
        return MultiPoly(self.blocks, terms, p=p, normalize=False)

    def evaluate(self, assignment):
        """Evaluate at a full point: list of values, one per flat variable."""
        p = self.p
        total = 0
        for e, c in self.terms.items():
            f = c
            for x, k in zip(assignment, e):
                if k:
                    f = f * x ** k
                    if p is not None:
                        f %= p
            total += f
            if p is not None:
                total %= p
        return total

    def reduce_mod(self, p):
        """Map a rational polynomial with p-integral coefficients into F_p."""
        if self.p is not None:
            raise ValueError("already over a finite field")
        terms = {}
        for e, c in self.terms.items():
            if c.denominator % p == 0:
                raise ZeroDivisionError("denominator divisible by p")
            terms[e] = c.numerator * pow(c.denominator, p - 2, p) % p
        return MultiPoly(self.blocks, terms, p=p)

    # -- serialization ----------------------------------------------------
    def to_json(self):
        return {
            "field": "Q" if self.p is None else f"Fp:{self.p}",
            "blocks": [[n, s] for n, s in self.blocks],
            "terms": [[list(e), str(c)] for e, c in self.sorted_terms()],
        }

    @staticmethod
    def from_json(obj):
        field = obj["field"]
        p = None if field == "Q" else int(field.split(":")[1])
        terms = {}
        for e, c in obj["terms"]:
            terms[tuple(e)] = (int(c) if p is not None else Fraction(c))
        return MultiPoly([tuple(b) for b in obj["blocks"]], terms, p=p)

    def __repr__(self):
        names = []
        for n, s in self.blocks:
            names += [f"{n}{i}" for i in range(s)]
        parts = []
        for e, c in self.sorted_terms()[:12]:
            mon = "*".join(f"{nm}^{k}" if k > 1 else nm
                           for nm, k in zip(names, e) if k)
            parts.append(f"{c}" + ("*" + mon if mon else ""))
        s = " + ".join(parts) if parts else "0"
        if len(self.terms) > 12:
            s += f" + ... ({len(self.terms)} terms)"
        return s


# -- ring operations -------------------------------------------------------

def det_of_form_matrix(entries):
    """Exact determinant of a square matrix of MultiPoly (minor expansion).

    Memoizes on (row index, frozen column subset); fine through 4x4 of
    multilinear forms.
    """
    n = len(entries)
    if any(len(r) != n for r in entries):
        raise ValueError("non-square matrix of forms")
    if n == 0:
        raise ValueError("empty matrix")
    proto = entries[0][0]
    for row in entries:
        for x in row:
            proto._check_compatible(x)
    cache = {}

    def minor(i, cols):
        if i == n:
            return MultiPoly.const(proto.blocks, 1, p=proto.p)
        key = (i, cols)
        if key in cache:
            return cache[key]
        acc = MultiPoly.zero(proto.blocks, proto.p)
        sign = 1
        for idx, c in enumerate(cols):
            sub = minor(i + 1, cols[:idx] + cols[idx + 1:])
            term = entries[i][c] * sub
            acc = acc + (term if sign > 0 else -term)
            sign = -sign
        cache[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def exact_divide(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Quotient q with q * den == num; DivisibilityError if inexact."""
    num._check_compatible(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = num.p
    q_terms = {}
    r = num
    le, lc = den.leading()
    lc_inv = pow(lc, p - 2, p) if p is not None else 1 / lc
    while not r.is_zero():
        re, rc = r.leading()
        qe = tuple(a - b for a, b in zip(re, le))
        if any(x < 0 for x in qe):
            raise DivisibilityError("inexact polynomial division")
        qc = rc * lc_inv
        if p is not None:
            qc %= p
        q_terms[qe] = qc
        t = MultiPoly(num.blocks, {qe: qc}, p=p, normalize=False)
        r = r - t * den
    return MultiPoly(num.blocks, q_terms, p=p)


def _binary_coeffs(q: MultiPoly, block, deg):
    """Coefficient list [c_0..c_deg] of q as a form of degree `deg` in the
    2-variable block (c_i multiplies s^i t^(deg-i)); each c_i a MultiPoly."""
    off, size = q._block_range(block)
    if size != 2:
        raise DegreeError(f"block {block!r} is not 2-dimensional")
    if not q.is_zero() and q.block_degree(block) != deg:
        raise DegreeError(f"expected degree {deg} in block {block!r}, "
                          f"got {q.block_degree(block)}")
    split = q.coefficients_in_block(block)
    zero = MultiPoly.zero(q.blocks, q.p)
    out = []
    for i in range(deg + 1):
        out.append(split.get((i, deg - i), zero))
    for be in split:
        if sum(be) != deg:
            raise DegreeError("form is not homogeneous in the block")
    return out


def disc_binary_quadratic(q: MultiPoly, block) -> MultiPoly:
    """b^2 - 4ac for q = a s^2 + b s t + c t^2 in the named block."""
    c2, c1, c0 = _binary_coeffs(q, block, 2)[::-1]  # a=s^2 coeff etc.
    a, b, c = c2, c1, c0
    return b * b - 4 * (a * c)


def disc_binary_quartic(q: MultiPoly, block) -> MultiPoly:
    """Discriminant of a binary quartic in the named block.

    Scaling matches Res(q, dq/ds)/lc; a quartic with a repeated root maps
    to zero.
    """
    e, d, c, b, a = _binary_coeffs(q, block, 4)  # a = s^4 coefficient
    return (256 * (a * a * a) * (e * e * e)
            - 192 * (a * a) * (b * d) * (e * e)
            - 128 * (a * a) * (c * c) * (e * e)
            + 144 * (a * a) * c * (d * d) * e
            - 27 * (a * a) * (d * d) * (d * d)
            + 144 * a * (b * b) * c * (e * e)
            - 6 * a * (b * b) * (d * d) * e
            - 80 * a * b * (c * c) * (d * e)
            + 18 * a * (b * c) * (d * d * d)
            + 16 * a * (c * c) * (c * c) * e
            - 4 * a * (c * c * c) * (d * d)
            - 27 * (b * b) * (b * b) * (e * e)
            + 18 * (b * b * b) * (c * d) * e
            - 4 * (b * b * b) * (d * d * d)
            - 4 * (b * b) * (c * c * c) * e
            + (b * b) * (c * c) * (d * d))


@dataclass(frozen=True)
class FactorProfile:
    """Degrees and multiplicities of the irreducible factors over F_p."""
    pairs: tuple           # sorted ((degree, multiplicity), ...)
    leading: int
    p: int

    def total_degree(self):
        return sum(d * m for d, m in self.pairs)

    def by_multiplicity(self):
        out = {}
        for d, m in self.pairs:
            out[m] = out.get(m, 0) + d
        return out


def factor_profile_mod_p(coeffs, p) -> FactorProfile:
    """Factor profile of a univariate polynomial over F_p.

    `coeffs` is a low-first coefficient list (ints).  The factors themselves
    are computed (squarefree + distinct-degree + equal-degree splitting) and
    the product is checked against the input.
    """
    from . import unipoly
    from .fields import PrimeField

    F = PrimeField(p)
    f = unipoly.trim([c % p for c in coeffs])
    if not f:
        raise ValueError("zero polynomial has no factor profile")
    lead = f[-1]
    facs = unipoly.factor(F, f)
    check = [lead]
    for g, m in facs:
        for _ in range(m):
            check = unipoly.mul(F, check, g)
    assert check == f, "factorization self-check failed"
    pairs = tuple(sorted((unipoly.degree(g), m) for g, m in facs))
    return FactorProfile(pairs, lead, p)


def binary_form_profile(q: MultiPoly, block) -> FactorProfile:
    """Profile of a nonzero binary form over F_p, root at infinity included
    as a degree-1 factor of the appropriate multiplicity."""
    if q.p is None:
        raise ValueError("binary_form_profile needs an F_p polynomial")
    deg = q.block_degree(block)
    cs = _binary_coeffs(q, block, deg)
    consts = []
    for c in cs:
        if c.is_zero():
            consts.append(0)
        else:
            if c.total_degree() != 0:
                raise ValueError("form has extra variables beyond the block")
            consts.append(next(iter(c.terms.values())))
    prof = factor_profile_mod_p(consts, q.p)
    drop = deg - prof.total_degree()
    if drop > 0:  # root at (1:0)
        prof = FactorProfile(tuple(sorted(prof.pairs + ((1, drop),))),
                             prof.leading, q.p)
    return prof
