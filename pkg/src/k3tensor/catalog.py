"""Static catalog: Gram matrices, divisor labels, intersection rules and
automorphism matrices for every family in the dictionary.

Families and tags:
    rr           4x4x4                    rank  2
    sym2rr       4 (x) Sym^2 4            rank 11
    hessian      Sym^3 4                  rank 16
    pent         2x2x2x2x2                rank  4
    2sympent     2x2x2 (x) Sym^2 2        rank  9
    3sympent     2x2 (x) Sym^3 2          rank 14
    22sympent    2 (x) Sym^2 2 (x) Sym^2 2  rank 12
    23sympent    Sym^2 2 (x) Sym^3 2      rank 15
    4sympent     2 (x) Sym^4 2            rank 17
    5sympent     Sym^5 2                  rank 18
    2224         2x2x2 (x) 4              rank 13
    22s24        2x2 (x) Sym^2 4          rank  2
    sym22sym24   Sym^2 2 (x) Sym^2 4      rank  9

Intersection rules are given as pairing functions on divisor labels; the
relations list, per family, the linear combinations of labels that vanish in
the divisor group.  All of it feeds lattices.gram_from_rules/relation_check.
"""

import itertools


def _parse(text):
    return [[int(x) for x in line.split()] for line in text.strip().splitlines()]


GRAM_DATA = {}
BASIS = {}
DECLARED_DISC = {}

GRAM_DATA["rr"] = _parse("""
4 6
6 4
""")
BASIS["rr"] = ["H", "C"]
DECLARED_DISC["rr"] = 20

GRAM_DATA["sym2rr"] = _parse("""
4 6 0 0 0 0 0 0 0 0 0
6 4 1 1 1 1 1 1 1 1 1
0 1 -2 0 0 0 0 0 0 0 0
0 1 0 -2 0 0 0 0 0 0 0
0 1 0 0 -2 0 0 0 0 0 0
0 1 0 0 0 -2 0 0 0 0 0
0 1 0 0 0 0 -2 0 0 0 0
0 1 0 0 0 0 0 -2 0 0 0
0 1 0 0 0 0 0 0 -2 0 0
0 1 0 0 0 0 0 0 0 -2 0
0 1 0 0 0 0 0 0 0 0 -2
""")
BASIS["sym2rr"] = ["L1", "L2"] + [f"P{i}" for i in range(1, 10)]
DECLARED_DISC["sym2rr"] = 1024

GRAM_DATA["hessian"] = _parse("""
4 6 1 1 1 1 1 0 0 0 0 0 0 0 0 0
6 4 0 0 0 0 0 1 1 1 1 1 1 1 1 1
1 0 -2 0 0 0 0 1 1 1 0 0 0 0 0 0
1 0 0 -2 0 0 0 1 0 0 1 1 0 0 0 0
1 0 0 0 -2 0 0 0 1 0 1 0 1 0 0 0
1 0 0 0 0 -2 0 1 0 0 0 0 0 1 1 0
1 0 0 0 0 0 -2 0 0 0 1 0 0 1 0 0
0 1 1 1 0 1 0 -2 0 0 0 0 0 0 0 0
0 1 1 0 1 0 0 0 -2 0 0 0 0 0 0 0
0 1 1 0 0 0 0 0 0 -2 0 0 0 0 0 0
0 1 0 1 1 0 1 0 0 0 -2 0 0 0 0 0
0 1 0 1 0 0 0 0 0 0 0 -2 0 0 0 0
0 1 0 0 1 0 0 0 0 0 0 0 -2 0 0 0
0 1 0 0 0 1 1 0 0 0 0 0 0 -2 0 0
0 1 0 0 0 1 0 0 0 0 0 0 0 0 -2 0
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 -2
""")
BASIS["hessian"] = ["H1", "H2", "L12", "L13", "L14", "L23", "L34",
                    "P123", "P124", "P125", "P134", "P135", "P145",
                    "P234", "P235", "P245"]
DECLARED_DISC["hessian"] = 48

GRAM_DATA["pent"] = _parse("""
0 2 2 2
2 0 2 2
2 2 0 2
2 2 2 0
""")
BASIS["pent"] = ["L1", "L2", "L3", "L4"]
DECLARED_DISC["pent"] = 48

GRAM_DATA["2sympent"] = _parse("""
0 2 2 2 0 0 0 0 0
2 0 2 2 0 0 0 0 0
2 2 0 2 0 0 0 0 0
2 2 2 0 1 1 1 1 1
0 0 0 1 -2 0 0 0 0
0 0 0 1 0 -2 0 0 0
0 0 0 1 0 0 -2 0 0
0 0 0 1 0 0 0 -2 0
0 0 0 1 0 0 0 0 -2
""")
BASIS["2sympent"] = ["L1", "L2", "L3", "L4"] + [f"E{i}" for i in range(1, 6)]
DECLARED_DISC["2sympent"] = 256

GRAM_DATA["3sympent"] = _parse("""
0 2 2 2 0 0 0 0 0 0 0 0 0 0
2 0 2 2 0 0 0 0 0 0 0 0 0 0
2 2 0 2 0 1 0 1 0 1 0 1 0 1
2 2 2 0 1 0 1 0 1 0 1 0 1 0
0 0 0 1 -2 1 0 0 0 0 0 0 0 0
0 0 1 0 1 -2 0 0 0 0 0 0 0 0
0 0 0 1 0 0 -2 1 0 0 0 0 0 0
0 0 1 0 0 0 1 -2 0 0 0 0 0 0
0 0 0 1 0 0 0 0 -2 1 0 0 0 0
0 0 1 0 0 0 0 0 1 -2 0 0 0 0
0 0 0 1 0 0 0 0 0 0 -2 1 0 0
0 0 1 0 0 0 0 0 0 0 1 -2 0 0
0 0 0 1 0 0 0 0 0 0 0 0 -2 1
0 0 1 0 0 0 0 0 0 0 0 0 1 -2
""")
BASIS["3sympent"] = (["L1", "L2", "L3", "L4"]
                     + [x for i in range(1, 6) for x in (f"P{i}", f"Q{i}")])
DECLARED_DISC["3sympent"] = 324

GRAM_DATA["22sympent"] = _parse("""
0 2 2 2 0 0 0 0 0 0 0 0
2 0 2 2 0 1 0 0 1 0 0 1
2 2 0 2 0 1 0 0 1 0 0 1
2 2 2 0 1 0 1 1 0 1 1 0
0 0 0 1 -2 1 0 0 0 0 0 0
0 1 1 0 1 -2 1 0 0 0 0 0
0 0 0 1 0 1 -2 0 0 0 0 0
0 0 0 1 0 0 0 -2 1 0 0 0
0 1 1 0 0 0 0 1 -2 1 0 0
0 0 0 1 0 0 0 0 1 -2 0 0
0 0 0 1 0 0 0 0 0 0 -2 1
0 1 1 0 0 0 0 0 0 0 1 -2
""")
BASIS["22sympent"] = ["L1", "L2", "L3", "L4", "P1", "Q1", "P2",
                      "P3", "Q3", "P4", "P5", "Q5"]
DECLARED_DISC["22sympent"] = 256

GRAM_DATA["23sympent"] = _parse("""
0 2 2 2 0 0 0 0 0 0 0 0 0 0 1
2 0 2 2 0 0 0 0 0 0 0 0 0 0 1
2 2 0 2 0 1 0 1 0 1 0 1 0 1 0
2 2 2 0 1 0 1 0 1 0 1 0 1 0 0
0 0 0 1 -2 1 0 0 0 0 0 0 0 0 1
0 0 1 0 1 -2 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 -2 1 0 0 0 0 0 0 1
0 0 1 0 0 0 1 -2 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 -2 1 0 0 0 0 0
0 0 1 0 0 0 0 0 1 -2 0 0 0 0 1
0 0 0 1 0 0 0 0 0 0 -2 1 0 0 0
0 0 1 0 0 0 0 0 0 0 1 -2 0 0 1
0 0 0 1 0 0 0 0 0 0 0 0 -2 1 0
0 0 1 0 0 0 0 0 0 0 0 0 1 -2 0
1 1 0 0 1 0 1 0 0 1 0 1 0 0 -2
""")
BASIS["23sympent"] = (["L1", "L2", "L3", "L4"]
                      + [x for i in range(1, 6) for x in (f"P{i}", f"Q{i}")]
                      + ["E3"])
DECLARED_DISC["23sympent"] = 108

GRAM_DATA["4sympent"] = _parse("""
0 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0
2 0 2 2 1 0 0 1 0 1 0 0 1 0 1 0 0
2 2 0 2 0 1 0 0 1 0 1 0 0 1 0 1 0
2 2 2 0 0 0 1 0 0 0 0 1 0 0 0 0 1
0 1 0 0 -2 1 0 0 0 0 0 0 0 0 0 0 0
0 0 1 0 1 -2 1 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 1 -2 1 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 1 -2 1 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 1 -2 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 -2 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0 0 1 -2 1 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0 1 -2 1 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 1 -2 1 0 0 0
0 0 1 0 0 0 0 0 0 0 0 0 1 -2 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0 0 0 -2 1 0
0 0 1 0 0 0 0 0 0 0 0 0 0 0 1 -2 1
0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1 -2
""")
BASIS["4sympent"] = ["L1", "L2", "L3", "L4",
                     "E12", "E13", "E14", "E42", "E43",
                     "E22", "E23", "E24", "E52", "E53",
                     "E32", "E33", "E34"]
DECLARED_DISC["4sympent"] = 96

GRAM_DATA["5sympent"] = _parse("""
-2 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 1
0 -2 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0
0 0 -2 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0
0 0 0 -2 0 0 0 0 0 1 0 0 0 0 0 1 0 0
0 0 0 0 -2 0 0 0 0 0 1 0 0 0 1 0 1 0
0 0 0 0 0 -2 0 0 0 0 0 1 0 0 0 0 1 0
1 0 0 0 0 0 -2 0 0 0 0 0 1 0 0 1 0 0
0 1 0 0 0 0 0 -2 0 0 0 0 0 1 0 0 0 0
0 0 1 0 0 0 0 0 -2 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 -2 0 0 0 0 1 0 0 1
0 0 0 0 1 0 0 0 0 0 -2 0 0 0 0 0 0 0
0 1 0 0 0 1 0 0 0 0 0 -2 0 0 0 1 0 0
0 0 1 0 0 0 1 0 0 0 0 0 -2 0 0 0 1 0
0 0 0 0 0 0 0 1 0 0 0 0 0 -2 0 0 0 1
0 0 0 0 1 0 0 0 0 1 0 0 0 0 -2 0 0 0
0 0 0 1 0 0 1 0 0 0 0 1 0 0 0 -2 0 0
0 0 0 0 1 1 0 0 0 0 0 0 1 0 0 0 -2 0
1 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 -2
""")
# Resolved by matching the printed matrix against the line intersection
# graph (the stated L1..L4-containing basis is inconsistent with the all
# (-2) diagonal); any consistent labeling gives the same lattice.
BASIS["5sympent"] = [f"E_{s}" for s in (
    "1234", "1342", "1243", "1324", "1423", "3412", "3214", "3142", "3241",
    "3124", "3421", "4312", "4213", "4132", "4123", "2314", "2413", "2134")]
DECLARED_DISC["5sympent"] = 20

GRAM_DATA["2224"] = _parse("""
4 4 4 4 0 0 0 0 0 0 0 0 0
4 0 2 2 0 0 0 1 1 1 1 1 1
4 2 0 2 1 1 1 0 0 0 1 1 1
4 2 2 0 1 1 1 1 1 1 0 0 0
0 0 1 1 -2 0 0 0 0 0 0 0 0
0 0 1 1 0 -2 0 0 0 0 0 0 0
0 0 1 1 0 0 -2 0 0 0 0 0 0
0 1 0 1 0 0 0 -2 0 0 0 0 0
0 1 0 1 0 0 0 0 -2 0 0 0 0
0 1 0 1 0 0 0 0 0 -2 0 0 0
0 1 1 0 0 0 0 0 0 0 -2 0 0
0 1 1 0 0 0 0 0 0 0 0 -2 0
0 1 1 0 0 0 0 0 0 0 0 0 -2
""")
BASIS["2224"] = ["H", "L1", "L2", "L3", "E1", "E2", "E3", "E5", "E6", "E7",
                 "E9", "E10", "E11"]
DECLARED_DISC["2224"] = 1024

GRAM_DATA["22s24"] = _parse("""
0 4
4 4
""")
BASIS["22s24"] = ["L1", "L3"]
DECLARED_DISC["22s24"] = 16

GRAM_DATA["sym22sym24"] = _parse("""
0 4 1 1 1 1 1 1 1
4 4 0 0 0 0 0 0 0
1 0 -2 0 0 0 0 0 0
1 0 0 -2 0 0 0 0 0
1 0 0 0 -2 0 0 0 0
1 0 0 0 0 -2 0 0 0
1 0 0 0 0 0 -2 0 0
1 0 0 0 0 0 0 -2 0
1 0 0 0 0 0 0 0 -2
""")
BASIS["sym22sym24"] = ["L1", "L3"] + [f"E{i}" for i in range(1, 8)]
DECLARED_DISC["sym22sym24"] = 256

FAMILIES = tuple(GRAM_DATA)


# ---------------------------------------------------------------------------
# intersection rules: per family, the full label list and a pairing function
# ---------------------------------------------------------------------------

def _pair_rr(a, b):
    if a == b:
        return 4
    if {a, b} == {"C", "D"}:
        return 14
    return 6


def _pair_sym2rr(a, b):
    if a[0] == "L" and b[0] == "L":
        return 4 if a == b else 6
    if a[0] == "P" and b[0] == "P":
        return -2 if a == b else 0
    L = a if a[0] == "L" else b
    return 1 if L == "L2" else 0


def _pair_hessian(a, b):
    def kind(x):
        return x[0]
    ka, kb = kind(a), kind(b)
    if ka == "H" and kb == "H":
        return 4 if a == b else 6
    if ka == kb:
        return -2 if a == b else 0
    if "H" in (ka, kb):
        h, o = (a, b) if ka == "H" else (b, a)
        if o[0] == "L":
            return 1 if h == "H1" else 0
        return 1 if h == "H2" else 0
    L, P = (a, b) if ka == "L" else (b, a)
    return 1 if set(L[1:]) <= set(P[1:]) else 0


def _pair_pent(a, b):
    return 0 if a == b else 2


def _pair_2sympent(a, b):
    if a[0] == "L" and b[0] == "L":
        return 0 if a == b else 2
    if a[0] == "E" and b[0] == "E":
        return -2 if a == b else 0
    L = a if a[0] == "L" else b
    return 1 if L == "L4" else 0


def _pair_3sympent(a, b):
    ka, kb = a[0], b[0]
    if ka == "L" and kb == "L":
        return 0 if a == b else 2
    if "L" in (ka, kb):
        L, e = (a, b) if ka == "L" else (b, a)
        if L == "L3" and e[0] == "Q":
            return 1
        if L == "L4" and e[0] == "P":
            return 1
        return 0
    if a == b:
        return -2
    return 1 if (a[1:] == b[1:] and ka != kb) else 0


def _pair_22sympent(a, b):
    ka, kb = a[0], b[0]
    if ka == "L" and kb == "L":
        return 0 if a == b else 2
    if "L" in (ka, kb):
        L, e = (a, b) if ka == "L" else (b, a)
        if e[0] == "Q" and L in ("L2", "L3"):
            return 1
        if e[0] == "P" and L == "L4":
            return 1
        return 0
    if a == b:
        return -2
    if ka == kb:
        return 0
    P, Q = (a, b) if ka == "P" else (b, a)
    return 1 if (int(P[1:]) - 1) // 2 == (int(Q[1:]) - 1) // 2 else 0


# which E's each P/Q meets in the doubly-triply symmetric family
_23_MEET = {
    "P": {1: (3, 5), 2: (3, 5), 3: (1, 6), 4: (1, 6), 5: (2, 4), 6: (2, 4)},
    "Q": {1: (2, 6), 2: (2, 6), 3: (3, 4), 4: (3, 4), 5: (1, 5), 6: (1, 5)},
}


def _pair_23sympent(a, b):
    ka, kb = a[0], b[0]
    if ka == "L" and kb == "L":
        return 0 if a == b else 2
    if "L" in (ka, kb):
        L, e = (a, b) if ka == "L" else (b, a)
        ke = e[0]
        if ke == "E":
            return 1 if L in ("L1", "L2") else 0
        if ke == "Q":
            return 1 if L == "L3" else 0
        return 1 if L == "L4" else 0
    if a == b:
        return -2
    if ka == kb:
        return 0
    if {ka, kb} == {"P", "Q"}:
        return 1 if a[1:] == b[1:] else 0
    e, o = (a, b) if ka == "E" else (b, a)
    return 1 if int(e[1:]) in _23_MEET[o[0]][int(o[1:])] else 0


def _pair_4sympent(a, b):
    ka, kb = a[0], b[0]
    if ka == "L" and kb == "L":
        return 0 if a == b else 2
    if "L" in (ka, kb):
        L, e = (a, b) if ka == "L" else (b, a)
        return 1 if int(L[1]) == int(e[2]) else 0
    if a == b:
        return -2
    l1, j1 = int(a[1]), int(a[2])
    l2, j2 = int(b[1]), int(b[2])
    if l1 == l2 and abs(j1 - j2) == 1:
        return 1
    if abs(l1 - l2) == 3 and abs(j1 - j2) == 2:
        return 1
    return 0


# 5sympent: labels L1..L4 and E_sigma for sigma in S4 written as the string
# sigma(1)sigma(2)sigma(3)sigma(4).  E_sigma is the line obtained by letting
# sigma permute the positions of (*, a, b, c); the free slot is sigma(1).
# Two lines meet exactly when one is the other composed with a transposition
# (1 i) on the right.

def _perm_of(label):
    return tuple(int(c) for c in label[2:])


def _perm_inv(s):
    inv = [0] * 4
    for i in range(4):
        inv[s[i] - 1] = i + 1
    return tuple(inv)


def _perm_mul(s, t):
    return tuple(s[t[i] - 1] for i in range(4))


_TRANSPOSITIONS_1 = ((2, 1, 3, 4), (3, 2, 1, 4), (4, 2, 3, 1))


def _pair_5sympent(a, b):
    ka, kb = a[0], b[0]
    if ka == "L" and kb == "L":
        return 0 if a == b else 2
    if "L" in (ka, kb):
        L, e = (a, b) if ka == "L" else (b, a)
        return 1 if _perm_of(e)[0] == int(L[1]) else 0
    sa, sb = _perm_of(a), _perm_of(b)
    if sa == sb:
        return -2
    return 1 if _perm_mul(_perm_inv(sa), sb) in _TRANSPOSITIONS_1 else 0


_2224_E = {"L1": set(range(5, 13)),
           "L2": {1, 2, 3, 4, 9, 10, 11, 12},
           "L3": set(range(1, 9))}


def _pair_2224(a, b):
    if "H" in (a, b):
        if a == b:
            return 4
        o = b if a == "H" else a
        return 4 if o[0] == "L" else 0
    ka, kb = a[0], b[0]
    if ka == "L" and kb == "L":
        return 0 if a == b else 2
    if ka == "E" and kb == "E":
        return -2 if a == b else 0
    L, e = (a, b) if ka == "L" else (b, a)
    return 1 if int(e[1:]) in _2224_E[L] else 0


def _pair_22s24(a, b):
    if a == b:
        return 4 if a == "L3" else 0
    if {a, b} == {"L1", "L2"}:
        return 8
    return 4


def _pair_sym22sym24(a, b):
    if a == "L2":
        a = "L1"
    if b == "L2":
        b = "L1"
    if a == b:
        return {"L1": 0, "L3": 4}.get(a, -2)
    if {a, b} == {"L1", "L3"}:
        return 4
    if a[0] == "E" and b[0] == "E":
        return 0
    L = a if a[0] == "L" else b
    return 1 if L == "L1" else 0


_S4_LABELS = ["E_" + "".join(map(str, s))
              for s in itertools.permutations((1, 2, 3, 4))]

RULES = {
    "rr": (["H", "C", "D"], _pair_rr),
    "sym2rr": (["L1", "L2"] + [f"P{i}" for i in range(1, 11)], _pair_sym2rr),
    "hessian": (["H1", "H2"]
                + [f"L{i}{j}" for i in range(1, 6) for j in range(i + 1, 6)]
                + ["P" + "".join(map(str, c)) for c in
                   itertools.combinations(range(1, 6), 3)], _pair_hessian),
    "pent": (["L1", "L2", "L3", "L4"], _pair_pent),
    "2sympent": (["L1", "L2", "L3", "L4"] + [f"E{i}" for i in range(1, 7)],
                 _pair_2sympent),
    "3sympent": (["L1", "L2", "L3", "L4"]
                 + [f"P{i}" for i in range(1, 7)]
                 + [f"Q{i}" for i in range(1, 7)], _pair_3sympent),
    "22sympent": (["L1", "L2", "L3", "L4"]
                  + [f"P{i}" for i in range(1, 7)]
                  + [f"Q{i}" for i in range(1, 7)], _pair_22sympent),
    "23sympent": (["L1", "L2", "L3", "L4"]
                  + [f"{k}{i}" for k in "PQE" for i in range(1, 7)],
                  _pair_23sympent),
    "4sympent": (["L1", "L2", "L3", "L4"]
                 + [f"E{l}{j}" for l in range(1, 7) for j in (2, 3, 4)],
                 _pair_4sympent),
    "5sympent": (["L1", "L2", "L3", "L4"] + _S4_LABELS, _pair_5sympent),
    "2224": (["H", "L1", "L2", "L3"] + [f"E{i}" for i in range(1, 13)],
             _pair_2224),
    "22s24": (["L1", "L2", "L3"], _pair_22s24),
    "sym22sym24": (["L1", "L2", "L3"] + [f"E{i}" for i in range(1, 9)],
                   _pair_sym22sym24),
}


def _rel(pos, neg):
    out = {}
    for lbl, c in pos.items():
        out[lbl] = out.get(lbl, 0) + c
    for lbl, c in neg.items():
        out[lbl] = out.get(lbl, 0) - c
    return out


RELATIONS = {
    "rr": [_rel({"H": 3}, {"C": 1, "D": 1})],
    "sym2rr": [_rel({"L1": 3}, dict([("L2", 2)]
                                    + [(f"P{i}", 1) for i in range(1, 11)]))],
    "hessian": [],
    "pent": [],
    "2sympent": [_rel({"L1": 1, "L2": 1, "L3": 1},
                      dict([("L4", 2)] + [(f"E{i}", 1) for i in range(1, 7)]))],
    "3sympent": [
        _rel({"L1": 1, "L2": 1, "L3": 1},
             dict([("L4", 2)] + [(f"P{i}", 1) for i in range(1, 7)])),
        _rel({"L1": 1, "L2": 1, "L4": 1},
             dict([("L3", 2)] + [(f"Q{i}", 1) for i in range(1, 7)])),
    ],
    "22sympent": [
        _rel({"L1": 1, "L2": 1, "L3": 1},
             dict([("L4", 2)] + [(f"P{i}", 1) for i in range(1, 7)])),
        _rel({"L1": 2, "L4": 2},
             dict([("L2", 1), ("L3", 1)] + [(f"Q{i}", 1) for i in range(1, 7)])),
    ],
    "23sympent": [
        _rel({"L1": 1, "L2": 1, "L3": 1},
             dict([("L4", 2)] + [(f"P{i}", 1) for i in range(1, 7)])),
        _rel({"L1": 1, "L2": 1, "L4": 1},
             dict([("L3", 2)] + [(f"Q{i}", 1) for i in range(1, 7)])),
        _rel({"L3": 2, "L4": 2},
             dict([("L1", 1), ("L2", 1)] + [(f"E{i}", 1) for i in range(1, 7)])),
    ],
    "4sympent": [
        _rel({"L1": 1, "L2": 1, "L3": 1},
             dict([("L4", 2)] + [(f"E{l}4", 1) for l in range(1, 7)])),
        _rel({"L1": 1, "L2": 1, "L4": 1},
             dict([("L3", 2)] + [(f"E{l}3", 1) for l in range(1, 7)])),
        _rel({"L1": 1, "L3": 1, "L4": 1},
             dict([("L2", 2)] + [(f"E{l}2", 1) for l in range(1, 7)])),
    ],
    "5sympent": [
        _rel({f"L{i}": 1 for i in (1, 2, 3, 4) if i != m},
             dict([(f"L{m}", 2)]
                  + [(lbl, 1) for lbl in _S4_LABELS if _perm_of(lbl)[0] == m]))
        for m in (1, 2, 3, 4)
    ],
    "2224": [
        _rel(dict([("L1", 2)] + [(f"E{i}", 1) for i in range(5, 13)]), {"H": 2}),
        _rel(dict([("L2", 2)] + [(f"E{i}", 1) for i in (1, 2, 3, 4, 9, 10, 11, 12)]),
             {"H": 2}),
        _rel(dict([("L3", 2)] + [(f"E{i}", 1) for i in range(1, 9)]), {"H": 2}),
    ],
    "22s24": [_rel({"L3": 2}, {"L1": 1, "L2": 1})],
    "sym22sym24": [
        _rel({"L2": 1}, {"L1": 1}),
        _rel({"L3": 2}, dict([("L1", 2)] + [(f"E{i}", 1) for i in range(1, 9)])),
    ],
}


# ---------------------------------------------------------------------------
# automorphism matrices (acting on row vectors of the catalog bases)
# ---------------------------------------------------------------------------

AUT_DATA = {}

AUT_DATA["Phi_rr"] = ("rr", 0, _parse("""
-3 8
-8 21
"""))

# involution of the quartic symmetroid family: Phi*L1 = -3L1 + 8L2,
# Phi*L2 = -L1 + 3L2, Phi*Pi = 2L1 - sum_{j != i} Pj = -L1 + 2L2 + Pi after
# eliminating P10 via 3L1 = 2L2 + sum P.
AUT_DATA["Phi_sym2rr"] = ("sym2rr", 2, [
    [-3, 8] + [0] * 9,
    [-1, 3] + [0] * 9,
] + [[-1, 2] + [1 if j == i else 0 for j in range(9)] for i in range(9)])

AUT_DATA["Phi_51234@pent"] = ("pent", 0, _parse("""
-1 0 2 2
-2 1 2 4
-4 2 5 6
-6 2 8 11
"""))

AUT_DATA["Phi_54321@2sympent"] = ("2sympent", 0, _parse("""
5 2 -4 6 0 0 0 0 0
2 1 -2 4 0 0 0 0 0
2 0 -1 2 0 0 0 0 0
1 1 -1 1 0 0 0 0 0
1 0 -1 2 1 0 0 0 0
1 0 -1 2 0 1 0 0 0
1 0 -1 2 0 0 1 0 0
1 0 -1 2 0 0 0 1 0
1 0 -1 2 0 0 0 0 1
"""))

AUT_DATA["Phi_54123@3sympent"] = ("3sympent", 0, _parse("""
-1 0 2 2 0 0 0 0 0 0 0 0 0 0
-2 1 2 4 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0 0 0 0 0
-1 1 1 1 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 -1 0 0 0 0 0 0 0 0
-1 0 1 1 1 1 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 -1 0 0 0 0 0 0
-1 0 1 1 0 0 1 1 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 -1 0 0 0 0
-1 0 1 1 0 0 0 0 1 1 0 0 0 0
0 0 0 1 0 0 0 0 0 0 0 -1 0 0
-1 0 1 1 0 0 0 0 0 0 1 1 0 0
0 0 0 1 0 0 0 0 0 0 0 0 0 -1
-1 0 1 1 0 0 0 0 0 0 0 0 1 1
"""))

AUT_DATA["Phi_53214@22sympent"] = ("22sympent", 0, _parse("""
1 4 -2 2 0 0 0 0 0 0 0 0
0 2 -1 2 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0
1 1 -1 1 0 0 0 0 0 0 0 0
0 1 0 0 -1 0 0 0 0 0 0 0
1 1 -1 1 0 -1 0 0 0 0 0 0
0 1 0 0 0 0 -1 0 0 0 0 0
0 1 0 0 0 0 0 -1 0 0 0 0
1 1 -1 1 0 0 0 0 -1 0 0 0
0 1 0 0 0 0 0 0 0 -1 0 0
0 1 0 0 0 0 0 0 0 0 -1 0
1 1 -1 1 0 0 0 0 0 0 0 -1
"""))

AUT_DATA["Phi_53214@23sympent"] = ("23sympent", 0, _parse("""
2 -1 0 2 0 0 0 0 0 0 0 0 0 0 0
1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0 0 0 0 0 0
1 -1 1 1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0
1 0 0 0 -1 -1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0 0 0 0 0
1 0 0 0 0 0 -1 -1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
1 0 0 0 0 0 0 0 -1 -1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 0 0 0
1 0 0 0 0 0 0 0 0 0 -1 -1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
1 0 0 0 0 0 0 0 0 0 0 0 -1 -1 0
-1 -1 0 1 1 0 1 0 1 1 1 1 0 0 1
"""))

AUT_DATA["Phi_54321@4sympent"] = ("4sympent", 4, _parse("""
-1 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0
-1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1 0 0 0 -1 -1 -1 -1 -1 0 0 0 0 0 0 0 0
-1 0 1 0 0 1 1 1 1 0 0 0 0 0 0 0 0
0 1 0 0 0 -1 -1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 -1 -1 0 0 0 0 0 0 0 0 0
1 0 0 0 0 0 0 0 0 -1 -1 -1 -1 -1 0 0 0
-1 0 1 0 0 0 0 0 0 0 1 1 1 1 0 0 0
0 1 0 0 0 0 0 0 0 0 -1 -1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
0 0 1 0 0 0 0 0 0 0 0 -1 -1 0 0 0 0
-1 1 1 -2 1 1 0 1 1 1 1 0 1 1 0 0 -1
1 -1 0 2 -1 -1 0 -1 -1 -1 -1 0 -1 -1 -1 0 1
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 -1
"""))

# declared finite orders (0 = infinite / none claimed)
AUT_NAMES = tuple(AUT_DATA)
