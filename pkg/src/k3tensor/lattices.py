"""Integral lattices from the catalog: reports, rule-built Gram matrices,
even overlattice enumeration, and the embedding/class-number criteria.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog
from .intmat import (IntMatrix, det, signature, smith_normal_form,
                     disc_group_structure, hnf_rows, inverse_fractions)


class LookupError_(KeyError):
    pass


class RuleError(ValueError):
    pass


@dataclass(frozen=True)
class GramLattice:
    gram: IntMatrix
    basis_labels: tuple
    family: str = ""
    declared_disc: int = None

    def __post_init__(self):
        if not self.gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        if len(self.basis_labels) != self.gram.rows:
            raise ValueError("label count must match rank")
        if len(set(self.basis_labels)) != len(self.basis_labels):
            raise ValueError("duplicate basis labels")

    @property
    def rank(self):
        return self.gram.rows

    def is_even(self):
        return all(self.gram[i, i] % 2 == 0 for i in range(self.rank))


@dataclass(frozen=True)
class DivisorClass:
    """Integer (or rational) coordinate vector in a lattice basis."""
    coords: tuple
    lattice: GramLattice

    def pair(self, other):
        g = self.lattice.gram
        return sum(self.coords[i] * g[i, j] * other.coords[j]
                   for i in range(g.rows) for j in range(g.cols))

    def norm(self):
        return self.pair(self)


def catalog_get(family: str) -> GramLattice:
    if family not in catalog.GRAM_DATA:
        raise LookupError_(f"unknown lattice family {family!r}")
    return GramLattice(IntMatrix(catalog.GRAM_DATA[family]),
                       tuple(catalog.BASIS[family]), family,
                       catalog.DECLARED_DISC[family])


def lattice_report(g: GramLattice) -> dict:
    d = det(g.gram)
    sig = signature(g.gram)
    grp = disc_group_structure(g.gram)
    return {
        "family": g.family,
        "rank": g.rank,
        "det": d,
        "abs_det": abs(d),
        "signature": sig,
        "even": g.is_even(),
        "invariant_factors": list(smith_normal_form(g.gram).invariant_factors),
        "discriminant_group": list(grp),
        "declared_abs_disc": g.declared_disc,
    }


def gram_from_rules(family: str, basis_labels) -> GramLattice:
    """Gram matrix of the requested labels from the family's intersection
    rules (the catalog matrices are all reproducible this way)."""
    if family not in catalog.RULES:
        raise LookupError_(f"no intersection rules for family {family!r}")
    labels, pair = catalog.RULES[family]
    for lbl in basis_labels:
        if lbl not in labels:
            raise RuleError(f"label {lbl!r} not defined for family {family!r}")
    g = IntMatrix([[pair(a, b) for b in basis_labels] for a in basis_labels])
    return GramLattice(g, tuple(basis_labels), family)


def relation_check(family: str, relation: dict) -> bool:
    """True when sum coeff*label pairs to zero against every label of the
    family (i.e. the relation holds in the divisor group)."""
    if family not in catalog.RULES:
        raise LookupError_(f"no intersection rules for family {family!r}")
    labels, pair = catalog.RULES[family]
    for lbl in relation:
        if lbl not in labels:
            raise LookupError_(f"label {lbl!r} not defined for {family!r}")
    for t in labels:
        if sum(c * pair(u, t) for u, c in relation.items()) != 0:
            return False
    return True


def family_relations(family: str):
    return [dict(r) for r in catalog.RELATIONS[family]]


def pair_labels(family: str, a, b) -> int:
    labels, pair = catalog.RULES[family]
    if a not in labels or b not in labels:
        raise LookupError_(f"unknown label for {family!r}")
    return pair(a, b)


def class_profile(family: str, combo: dict) -> dict:
    """Self-intersection and pairings of a formal divisor combination."""
    labels, pair = catalog.RULES[family]
    self_int = sum(ca * cb * pair(a, b)
                   for a, ca in combo.items() for b, cb in combo.items())
    meets = {t: sum(c * pair(u, t) for u, c in combo.items()) for t in labels}
    return {"self_intersection": self_int, "meets": meets}


# ---------------------------------------------------------------------------
# even overlattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Overlattice:
    glue: tuple                  # Fractions, coordinates in the old basis
    gram: IntMatrix              # Gram in an HNF basis of the overlattice
    basis: tuple                 # rows: rational coordinates in old basis
    nikulin_flag: object         # None, or (n, n in {0,8,16}) for half sums
                                 # of disjoint (-2)-classes


def even_overlattices(g: GramLattice, p: int):
    """Index-p even overlattices of g, one entry per glue subgroup.

    Returns Overlattice records.  Entries whose glue vector is (mod the
    lattice) half the sum of pairwise orthogonal (-2)-basis classes carry the
    count-based advisory flag; deciding whether those classes are actual
    disjoint rational curves needs geometry, so the flag is advisory only.
    """
    from .fields import is_prime
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    d = det(g.gram)
    if d == 0:
        raise ValueError("degenerate lattice")
    if d % p != 0:
        raise ValueError(f"{p} does not divide the discriminant {d}")
    n = g.rank
    snf = smith_normal_form(g.gram)
    # order-p subgroup generators of the discriminant group: rows (1/p) * U_i
    # for the invariant factors divisible by p
    gens = []
    for i, di in enumerate(snf.invariant_factors):
        if di != 0 and di % p == 0:
            gens.append([Fraction(x, p) for x in snf.left.row(i)])
    out = []
    seen_subgroups = set()
    for coeffs in itertools.product(range(p), repeat=len(gens)):
        if not any(coeffs):
            continue
        v = [sum(c * gi for c, gi in zip(coeffs, col)) for col in zip(*gens)]
        v = [x % 1 for x in v]  # reduce mod Z^n
        if all(x == 0 for x in v):
            continue
        # subgroup key: the set of multiples of v mod Z^n
        orbit = frozenset(tuple((k * x) % 1 for x in v) for k in range(1, p))
        if orbit in seen_subgroups:
            continue
        seen_subgroups.add(orbit)
        # integrality against the lattice is automatic (v is in the dual);
        # check evenness of the norm
        norm = sum(v[i] * g.gram[i, j] * v[j]
                   for i in range(n) for j in range(n))
        if norm.denominator != 1 or norm.numerator % 2 != 0:
            continue
        # also need all pairings with Z^n integral (dual membership)
        pairings = [sum(v[i] * g.gram[i, j] for i in range(n))
                    for j in range(n)]
        if any(x.denominator != 1 for x in pairings):
            continue
        # overlattice basis: HNF of p*(Z^n + Zv), divided back by p
        rows = [[p if i == j else 0 for j in range(n)] for i in range(n)]
        rows.append([int(x * p) for x in v])
        h = hnf_rows(rows)
        basis = tuple(tuple(Fraction(x, p) for x in row) for row in h)
        gram = IntMatrix([[_pair_frac(g.gram, r1, r2) for r2 in basis]
                          for r1 in basis])
        out.append(Overlattice(tuple(v), gram, basis,
                               _nikulin_flag(g, v) if p == 2 else None))
    # one entry per distinct overlattice (equal HNF Gram = same lattice)
    dedup = {}
    for o in out:
        dedup.setdefault(o.gram.data, o)
    return sorted(dedup.values(), key=lambda o: o.gram.data)


def _pair_frac(gram, r1, r2):
    n = gram.rows
    val = sum(r1[i] * gram[i, j] * r2[j] for i in range(n) for j in range(n))
    assert val.denominator == 1
    return int(val)


def _nikulin_flag(g, v):
    """If v = (sum of S)/2 with S pairwise orthogonal (-2) basis classes,
    report (|S|, |S| in {0,8,16}); otherwise None."""
    supp = [i for i, x in enumerate(v) if x != 0]
    if any(v[i] != Fraction(1, 2) for i in supp):
        return None
    for i in supp:
        if g.gram[i, i] != -2:
            return None
        for j in supp:
            if i != j and g.gram[i, j] != 0:
                return None
    return (len(supp), len(supp) in (0, 8, 16))


# ---------------------------------------------------------------------------
# embedding criteria
# ---------------------------------------------------------------------------

def nikulin_embedding_check(g: GramLattice, ambient_signature=(3, 19)) -> dict:
    """Inequality parts of the unique-primitive-embedding criterion into an
    even unimodular lattice of the given signature.

    Checks (a) t+ < s+, (b) t- < s-, (c) l(A_p) <= rank difference - 2 for
    odd primes p; the 2-adic form identification of the boundary case is not
    implemented, so l(A_2) >= rank difference reports "boundary_case".
    """
    if not g.is_even():
        raise ValueError("criterion applies to even lattices")
    s_plus, s_minus = ambient_signature
    t_plus, t_minus, t_zero = signature(g.gram)
    if t_zero:
        raise ValueError("degenerate lattice")
    if not t_plus < s_plus:
        return {"status": "fails", "condition": "a",
                "detail": f"t+={t_plus} !< s+={s_plus}"}
    if not t_minus < s_minus:
        return {"status": "fails", "condition": "b",
                "detail": f"t-={t_minus} !< s-={s_minus}"}
    rank_diff = (s_plus + s_minus) - g.rank
    factors = disc_group_structure(g.gram)
    d = abs(det(g.gram))
    for p in sorted(_prime_divisors(d)):
        ell = sum(1 for f in factors if f % p == 0)
        if p == 2:
            if ell >= rank_diff:
                return {"status": "boundary_case", "condition": "d",
                        "detail": f"l(A_2)={ell} vs rank diff {rank_diff}"}
        else:
            if not ell <= rank_diff - 2:
                return {"status": "fails", "condition": "c",
                        "detail": f"l(A_{p})={ell} > {rank_diff - 2}"}
    return {"status": "holds"}


def class_number_one_check(g: GramLattice) -> dict:
    """Class-number-one sufficient criterion for indefinite lattices of rank
    at least 3: no odd prime p with p^{n(n-1)/2} | d, and
    2^{n(n-3)/2 + floor((n+1)/2)} does not divide d."""
    n = g.rank
    npos, nneg, nzero = signature(g.gram)
    if nzero or npos == 0 or nneg == 0:
        raise ValueError("criterion needs an indefinite nondegenerate lattice")
    if n < 3:
        raise ValueError("criterion needs rank >= 3")
    d = abs(det(g.gram))
    odd_exp = n * (n - 1) // 2
    for p in sorted(_prime_divisors(d)):
        if p == 2:
            continue
        if d % (p ** odd_exp) == 0:
            return {"status": "does_not_apply",
                    "reason": f"{p}^{odd_exp} divides {d}"}
    two_exp = n * (n - 3) // 2 + (n + 1) // 2
    if d % (2 ** two_exp) == 0:
        return {"status": "does_not_apply",
                "reason": f"2^{two_exp} divides {d}"}
    return {"status": "applies"}


def _prime_divisors(n):
    out = []
    n = abs(n)
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


def catalog_as_json():
    out = {}
    for fam in catalog.FAMILIES:
        lat = catalog_get(fam)
        out[fam] = {"labels": list(lat.basis_labels),
                    "gram": lat.gram.to_lists(),
                    "declared_abs_disc": lat.declared_disc}
    return out
