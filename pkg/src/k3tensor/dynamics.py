"""Automorphism matrices on the catalog lattices: isometry checks, word
evaluation in the involutive generators, Salem families, entropy reports and
the odd Pell solver.

Composition convention: matrices act on row vectors, and the word g . h
evaluates to the product M_g M_h.  This is pinned by the requirement that the
displayed product of the two basic involutions equals the displayed gamma_1,
which holds for this order and fails for the reverse.
"""

from dataclasses import dataclass

from . import catalog, salem, zpoly
from .intmat import IntMatrix, det, char_poly, mat_pow
from .lattices import GramLattice, catalog_get, LookupError_


@dataclass(frozen=True)
class NSAction:
    name: str
    matrix: IntMatrix
    lattice: GramLattice
    declared_order: int = 0   # 0 = infinite or unstated

    def char_poly(self):
        return char_poly(self.matrix)


def isometry_check(a: NSAction) -> bool:
    """Exact M Q M^t == Q and det = +-1."""
    q = a.lattice.gram
    m = a.matrix
    if m.rows != q.rows:
        raise ValueError("matrix size does not match lattice rank")
    return (m * q * m.transpose()) == q and det(m) in (1, -1)


def catalog_action(name: str) -> NSAction:
    if name not in catalog.AUT_DATA:
        raise LookupError_(f"unknown automorphism {name!r}")
    fam, order, rows = catalog.AUT_DATA[name]
    return NSAction(name, IntMatrix(rows), catalog_get(fam), order)


def all_catalog_actions():
    return [catalog_action(n) for n in catalog.AUT_NAMES]


def pent_alpha(k: int, l: int) -> NSAction:
    """The involution alpha_{kl,5} on the rank-4 penteract lattice: fixes the
    two classes not in {k, l} and reflects the other two."""
    if not (1 <= k <= 4 and 1 <= l <= 4 and k != l):
        raise LookupError_("alpha indices must be distinct in 1..4")
    other = [i for i in range(1, 5) if i not in (k, l)]
    rows = []
    for i in range(1, 5):
        r = [0, 0, 0, 0]
        if i in (k, l):
            for j in other:
                r[j - 1] = 2
            r[i - 1] = -1
        else:
            r[i - 1] = 1
        rows.append(r)
    return NSAction(f"alpha_{min(k,l)}{max(k,l)}_5", IntMatrix(rows),
                    catalog_get("pent"), 2)


_PENT_WORDS = {
    "gamma1": ("a34_5", "a24_5"),
    "gamma2": ("a13_5", "a12_5"),
}

_FAMILY_ACTIONS = {
    "rr": ("Phi_rr",),
    "sym2rr": ("Phi_sym2rr",),
    "pent": ("Phi_51234@pent",),
    "2sympent": ("Phi_54321@2sympent",),
    "3sympent": ("Phi_54123@3sympent",),
    "22sympent": ("Phi_53214@22sympent",),
    "23sympent": ("Phi_53214@23sympent",),
    "4sympent": ("Phi_54321@4sympent",),
}


def alpha_generators(family: str):
    """The standard generators: for "pent" the six alpha_{kl,5}; for the
    symmetric penteract families the cataloged cycle matrices."""
    if family == "pent":
        return [pent_alpha(k, l)
                for (k, l) in ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))]
    if family in ("2sympent", "3sympent", "22sympent", "23sympent",
                  "4sympent"):
        return [catalog_action(n) for n in _FAMILY_ACTIONS[family]]
    raise LookupError_(f"no generators defined for family {family!r}")


def _resolve_token(family, tok):
    name, _, power = tok.partition("^")
    e = int(power) if power else 1
    if family == "pent":
        if name in _PENT_WORDS:
            m = word_eval(family, " ".join(_PENT_WORDS[name])).matrix
            return m, e
        if name.startswith("a") and name.endswith("_5") and len(name) == 5:
            return pent_alpha(int(name[1]), int(name[2])).matrix, e
    if name in catalog.AUT_DATA and catalog.AUT_DATA[name][0] == family:
        return catalog_action(name).matrix, e
    raise LookupError_(f"unknown generator {tok!r} for family {family!r}")


def word_eval(family: str, word) -> NSAction:
    """Evaluate a word like "a34_5 a24_5" or "gamma1^3 gamma2"; the empty
    word is the identity."""
    lat = catalog_get(family if family in catalog.GRAM_DATA else "pent")
    if isinstance(word, str):
        tokens = word.split()
    else:
        tokens = list(word)
    m = IntMatrix.identity(lat.rank)
    for tok in tokens:
        g, e = _resolve_token(family, tok)
        if e < 0:
            raise ValueError("negative powers are not supported in words")
        m = m * mat_pow(g, e)
    return NSAction(f"word({' '.join(tokens)})", m, lat)


def entropy_report(a: NSAction) -> dict:
    """Characteristic polynomial split into cyclotomic and Salem parts, with
    a certified entropy enclosure (entropy 0 when no Salem part remains)."""
    if not isometry_check(a):
        raise ValueError(f"{a.name} is not an isometry of its lattice")
    cp = a.char_poly()
    cyc, rest = salem.strip_cyclotomic(cp)
    out = {
        "name": a.name,
        "char_poly": list(cp),
        "cyclotomic_part": cyc,
        "salem_factor": None,
        "salem": None,
        "entropy_interval": (0.0, 0.0),
        "entropy": 0.0,
    }
    if zpoly.degree(rest) >= 2:
        cert = salem.salem_certify(rest)
        out["salem_factor"] = list(rest)
        out["salem"] = cert
        if cert.is_salem:
            out["entropy_interval"] = cert.entropy_interval
            out["entropy"] = cert.entropy
    return out


# the four Salem families of words on the penteract lattice
SALEM_FAMILIES = {
    "main": {"word": lambda k: f"gamma1^{k} gamma2",
             "coeff": lambda k: 4 * (2 * k + 1) ** 2 - 2},
    "one": {"g1": ("a34_5", "a24_5"), "g2": ("a14_5",),
            "word": lambda k: "a34_5 a24_5 " * k + "a14_5",
            "coeff": lambda k: 4 * (2 * k) ** 2 + 2},
    "two": {"word": lambda k: "a34_5 a24_5 a34_5 " + "a23_5 a12_5 " * k,
            "coeff": lambda k: 12 * (2 * k) ** 2 - 2},
    "three": {"word": lambda k: "a12_5 a34_5 " + "a23_5 a34_5 a24_5 a34_5 " * k,
              "coeff": lambda k: 12 * (2 * k + 1) ** 2 + 2},
}


def salem_family(family_id: str, k: int) -> dict:
    """Evaluate the k-th member of a named Salem family of penteract words
    and compare its Salem factor with the closed form x^2 - c x + 1."""
    if family_id not in SALEM_FAMILIES:
        raise LookupError_(f"unknown Salem family {family_id!r}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    spec = SALEM_FAMILIES[family_id]
    word = spec["word"](k).strip()
    coeff = spec["coeff"](k)
    action = word_eval("pent", word)
    predicted = [1, -coeff, 1]
    degenerate = abs(coeff) <= 2
    cp = action.char_poly()
    verified = zpoly.divides(cp, predicted)
    out = {
        "family": family_id, "k": k, "word": word,
        "predicted": predicted, "degenerate": degenerate,
        "verified": verified,
    }
    if not degenerate:
        _, rest = salem.strip_cyclotomic(cp)
        out["salem_factor"] = rest
        out["factor_matches"] = rest == predicted
    return out


def pell_odd_solve(D: int):
    """Minimal (m, n) with m odd and m^2 - D n^2 = 1.

    Continued fraction expansion gives the fundamental solution; if its x is
    even, squaring the unit makes x odd (2x^2 - 1).
    """
    if D <= 1:
        raise ValueError("D must be at least 2")
    r = _isqrt(D)
    if r * r == D:
        raise ValueError("D must not be a perfect square")
    x, y = _pell_fundamental(D, r)
    if x % 2 == 0:
        x, y = x * x + D * y * y, 2 * x * y
    assert x * x - D * y * y == 1 and x % 2 == 1
    return x, y


def _isqrt(n):
    import math
    return math.isqrt(n)


def _pell_fundamental(D, a0):
    m, d, a = 0, 1, a0
    num1, num = 1, a0
    den1, den = 0, 1
    while num * num - D * den * den != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        num1, num = num, a * num + num1
        den1, den = den, a * den + den1
    return num, den


def pell_salem_link(D: int) -> dict:
    """The Salem polynomial x^2 - (4m^2 - 2)x + 1 attached to the odd Pell
    solution; its splitting field is Q(sqrt(D)) since the discriminant is
    16 m^2 (m^2 - 1) = D (4 m n)^2."""
    m, n = pell_odd_solve(D)
    a = 4 * m * m - 2
    disc = a * a - 4
    s, d = salem._squarefree_split(disc)
    return {"D": D, "m": m, "n": n, "salem_poly": [1, -a, 1],
            "disc": disc, "squarefree_part": d,
            "splitting_field_matches": d == salem._squarefree_split(D)[1]}
