"""Tensor -> surface constructions and the finite-field scan engine.

Every supported tensor family yields defining polynomials (built exactly over
Q or F_p) and point operations over finite fields: rank-singularity
enumeration, the kernel-chasing psi/alpha/Phi point maps, fixed-point and
decomposable-kernel searches, and genus-one fibration discriminants.

All scans take an explicit field object (PrimeField or ExtField), so the same
code runs over F_p and its extensions; results are deterministic and sorted.
"""

import itertools
import os
from dataclasses import dataclass, field

from .fields import GF, PrimeField
from .mpoly import (MultiPoly, det_of_form_matrix, exact_divide,
                    disc_binary_quadratic, disc_binary_quartic)
from .tensors import Tensor


class FormatError(ValueError):
    pass


class DegeneracyError(ValueError):
    pass


class SingularPointError(ValueError):
    pass


class DomainError(ValueError):
    pass


class ResourceError(RuntimeError):
    pass


DEFAULT_SCAN_BOUND = 10 ** 6


def scan_bound():
    return int(os.environ.get("K3TENSOR_SCAN_BOUND", DEFAULT_SCAN_BOUND))


FAMILY_OF = {
    ((4, 4, 4), "none"): "rr",
    ((4, 4, 4), "sym-last-2"): "sym2rr",
    ((4, 4, 4), "sym-all"): "hessian",
    ((2, 2, 2, 2, 2), "none"): "pent",
    ((2, 2, 2, 2, 2), "sym-last-2"): "2sympent",
    ((2, 2, 2, 2, 2), "sym-last-3"): "3sympent",
    ((2, 2, 2, 2, 2), "sym-23-45"): "22sympent",
    ((2, 2, 2, 2, 2), "sym-12-345"): "23sympent",
    ((2, 2, 2, 2, 2), "sym-last-4"): "4sympent",
    ((2, 2, 2, 2, 2), "sym-all"): "5sympent",
    ((2, 2, 2, 4), "none"): "2224",
    ((2, 2, 4, 4), "sym-last-2"): "22s24",
    ((2, 2, 4, 4), "sym-first-2-last-2"): "sym22sym24",
    ((2, 2, 2), "none"): "cube222",
}

RR_LIKE = ("rr", "sym2rr", "hessian")
PENT_LIKE = ("pent", "2sympent", "3sympent", "22sympent", "23sympent",
             "4sympent", "5sympent")
S24_LIKE = ("22s24", "sym22sym24")


def family_of(a: Tensor) -> str:
    key = (a.shape, a.symmetry)
    if key not in FAMILY_OF:
        raise FormatError(f"unsupported shape/symmetry {key}")
    return FAMILY_OF[key]


# ---------------------------------------------------------------------------
# defining polynomials
# ---------------------------------------------------------------------------

def _linear_form_matrix(a: Tensor, slot: int, block_name: str):
    """Matrix of linear forms: contract the given slot against variables."""
    r = len(a.shape)
    others = [s for s in range(r) if s != slot]
    blocks = ((block_name, a.shape[slot]),)
    rows = []
    for i in range(a.shape[others[0]]):
        row = []
        for j in range(a.shape[others[1]]):
            terms = {}
            for k in range(a.shape[slot]):
                idx = [0] * r
                idx[others[0]] = i
                idx[others[1]] = j
                idx[slot] = k
                c = a[tuple(idx)]
                if c:
                    e = [0] * a.shape[slot]
                    e[k] = 1
                    terms[tuple(e)] = c
            row.append(MultiPoly(blocks, terms, p=a.p))
        rows.append(row)
    return rows


def _multilinear_form(a: Tensor, slots, fixed_slot=None, fixed_index=None):
    """The full multilinear form of `a` in variable blocks named v{s+1} for
    the given slots, with at most one slot frozen at a basis index."""
    blocks = tuple((f"v{s + 1}", a.shape[s]) for s in slots)
    nv = sum(a.shape[s] for s in slots)
    offs = {}
    off = 0
    for s in slots:
        offs[s] = off
        off += a.shape[s]
    terms = {}
    ranges = []
    r = len(a.shape)
    for s in range(r):
        if s == fixed_slot:
            ranges.append((fixed_index,))
        elif s in slots:
            ranges.append(range(a.shape[s]))
        else:
            raise AssertionError("slot neither free nor fixed")
    for idx in itertools.product(*ranges):
        c = a[idx]
        if not c:
            continue
        e = [0] * nv
        for s in slots:
            e[offs[s] + idx[s]] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + c
    return MultiPoly(blocks, terms, p=a.p)


@dataclass
class SurfaceModel:
    family: str
    tensor: Tensor
    forms: dict = field(default_factory=dict)
    p: object = None

    def form(self, name):
        return self.forms[name]


def build_surface(a: Tensor) -> SurfaceModel:
    """All defining polynomials for the tensor's family."""
    fam = family_of(a)
    forms = {}
    if fam in RR_LIKE:
        for slot, name in ((0, "X1"), (1, "X2"), (2, "X3")):
            m = _linear_form_matrix(a, slot, f"x{slot + 1}")
            f = det_of_form_matrix(m)
            if f.is_zero():
                raise DegeneracyError(f"{name} defining quartic vanishes")
            forms[name] = f
    elif fam in PENT_LIKE:
        for trip in itertools.combinations(range(5), 3):
            name = "X" + "".join(str(t + 1) for t in trip)
            forms[name] = _pent_triple_form(a, trip)
        if all(forms[n].is_zero() for n in forms):
            raise DegeneracyError("all defining forms vanish")
        for quad in itertools.combinations(range(5), 4):
            name = "X" + "".join(str(t + 1) for t in quad)
            forms[name] = _pent_quad_system(a, quad)
    elif fam == "2224":
        forms["XU"] = _2224_xu_quartic(a)
        if forms["XU"].is_zero():
            raise DegeneracyError("disc quartic vanishes")
        forms["f"] = _2224_f_form(a)
        for i in range(3):
            forms[f"Y{i + 1}"] = _multilinear_form(
                a, [s for s in range(4) if s != i])
    elif fam in S24_LIKE:
        m = [[_s24_entry(a, i, j) for j in range(2)] for i in range(2)]
        f = det_of_form_matrix(m)
        if f.is_zero():
            raise DegeneracyError("X3 defining quartic vanishes")
        forms["X3"] = f
        forms["q11"], forms["q12"], forms["q22"] = m[0][0], m[0][1], m[1][1]
    elif fam == "cube222":
        forms["disc"] = cube_disc_poly(a)
    else:
        raise FormatError(f"no surface construction for {fam!r}")
    return SurfaceModel(fam, a, forms, a.p)


def _pent_triple_form(a: Tensor, trip):
    """det A(v_i, v_j, v_k, ., .) as a tridegree (2,2,2) form."""
    others = [s for s in range(5) if s not in trip]
    l, m = others
    entries = []
    for il in range(2):
        row = []
        for im in range(2):
            row.append(_contracted_multilinear(a, trip, {l: il, m: im}))
        entries.append(row)
    return det_of_form_matrix(entries)


def _contracted_multilinear(a: Tensor, slots, fixed: dict):
    blocks = tuple((f"v{s + 1}", a.shape[s]) for s in slots)
    nv = sum(a.shape[s] for s in slots)
    offs = {}
    off = 0
    for s in slots:
        offs[s] = off
        off += a.shape[s]
    terms = {}
    ranges = []
    for s in range(len(a.shape)):
        if s in fixed:
            ranges.append((fixed[s],))
        elif s in slots:
            ranges.append(range(a.shape[s]))
        else:
            raise AssertionError
    for idx in itertools.product(*ranges):
        c = a[idx]
        if not c:
            continue
        e = [0] * nv
        for s in slots:
            e[offs[s] + idx[s]] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + c
    return MultiPoly(blocks, terms, p=a.p)


def _pent_quad_system(a: Tensor, quad):
    """The pair of (1,1,1,1) forms cutting X_ijkl (components of the omitted
    slot)."""
    omitted = [s for s in range(5) if s not in quad][0]
    return tuple(_contracted_multilinear(a, quad, {omitted: i})
                 for i in range(2))


def _2224_xu_quartic(a: Tensor):
    """disc A(u): the quartic in u whose vanishing is the projection X_U."""
    # cube of linear forms in u: entries A[i][j][k] = sum_c a_{ijkc} u_c
    blocks = (("u", 4),)
    cube = [[[None, None], [None, None]], [[None, None], [None, None]]]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                terms = {}
                for c in range(4):
                    v = a[(i, j, k, c)]
                    if v:
                        e = [0, 0, 0, 0]
                        e[c] = 1
                        terms[tuple(e)] = v
                cube[i][j][k] = MultiPoly(blocks, terms, p=a.p)
    return _cube_disc_from_slices(cube, blocks, a.p)


def _cube_disc_from_slices(cube, blocks, p):
    """Discriminant of a 2x2x2 cube whose entries are MultiPoly: take the
    binary quadratic det(x0 M0 + x1 M1) in an auxiliary block and return its
    discriminant b^2 - 4ac."""
    m0 = cube[0]
    m1 = cube[1]
    a0 = m0[0][0] * m0[1][1] - m0[0][1] * m0[1][0]
    c0 = m1[0][0] * m1[1][1] - m1[0][1] * m1[1][0]
    b0 = (m0[0][0] * m1[1][1] + m1[0][0] * m0[1][1]
          - m0[0][1] * m1[1][0] - m1[0][1] * m0[1][0])
    return b0 * b0 - 4 * (a0 * c0)


def cube_disc_poly(a: Tensor):
    """The degree-4 discriminant of an integer/F_p 2x2x2 cube, as a constant
    (returned as a plain int or Fraction)."""
    if a.shape != (2, 2, 2):
        raise FormatError("discriminant needs a 2x2x2 cube")
    m0 = [[a[(0, i, j)] for j in range(2)] for i in range(2)]
    m1 = [[a[(1, i, j)] for j in range(2)] for i in range(2)]
    d0 = m0[0][0] * m0[1][1] - m0[0][1] * m0[1][0]
    d1 = m1[0][0] * m1[1][1] - m1[0][1] * m1[1][0]
    mix = (m0[0][0] * m1[1][1] + m1[0][0] * m0[1][1]
           - m0[0][1] * m1[1][0] - m1[0][1] * m0[1][0])
    disc = mix * mix - 4 * d0 * d1
    if a.p is not None:
        disc %= a.p
    return disc


def _s24_entry(a: Tensor, i, j):
    """Quadratic form in z: A[i][j] for the 2x2 symmetric-in-z families."""
    blocks = (("z", 4),)
    terms = {}
    for k in range(4):
        for l in range(4):
            c = a[(i, j, k, l)]
            if not c:
                continue
            e = [0, 0, 0, 0]
            e[k] += 1
            e[l] += 1
            key = tuple(e)
            terms[key] = terms.get(key, 0) + c
    return MultiPoly(blocks, terms, p=a.p)


def _2224_f_form(a: Tensor):
    """The tridegree (2,2,2) form on P1 x P1 x P1 from the division formula:
    the 4x4 determinant in primed/unprimed vectors divided by the three
    2x2 minors det(v_i, v_i')."""
    p = a.p
    blocks = (("v1", 2), ("w1", 2), ("v2", 2), ("w2", 2), ("v3", 2), ("w3", 2))

    def tri(c, primed):
        # trilinear form A_c evaluated on the (un)primed variable triple
        terms = {}
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    v = a[(i, j, k, c)]
                    if not v:
                        continue
                    e = [0] * 12
                    e[(2 if primed[0] else 0) + i] += 1
                    e[(6 if primed[1] else 4) + j] += 1
                    e[(10 if primed[2] else 8) + k] += 1
                    key = tuple(e)
                    terms[key] = terms.get(key, 0) + v
        return MultiPoly(blocks, terms, p=p)

    rows = []
    for primed in ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)):
        rows.append([tri(c, primed) for c in range(4)])
    d = det_of_form_matrix(rows)

    def pair_det(base, prime):
        x0 = MultiPoly.variable(blocks, base, 0, p=p)
        x1 = MultiPoly.variable(blocks, base, 1, p=p)
        y0 = MultiPoly.variable(blocks, prime, 0, p=p)
        y1 = MultiPoly.variable(blocks, prime, 1, p=p)
        return x0 * y1 - x1 * y0

    den = pair_det("v1", "w1") * pair_det("v2", "w2") * pair_det("v3", "w3")
    q = exact_divide(d, den)
    # rename to a clean three-block ring
    out_blocks = (("v1", 2), ("v2", 2), ("v3", 2))
    terms = {}
    for e, c in q.terms.items():
        v1 = e[0:2]
        v2 = e[4:6]
        v3 = e[8:10]
        assert e[2:4] == (0, 0) and e[6:8] == (0, 0) and e[10:12] == (0, 0)
        terms[v1 + v2 + v3] = c
    return MultiPoly(out_blocks, terms, p=p)


# ---------------------------------------------------------------------------
# finite-field point utilities
# ---------------------------------------------------------------------------

def proj_points(F, dim):
    """Normalized points of P^dim(F): first nonzero coordinate is 1."""
    for lead in range(dim + 1):
        prefix = (F.zero,) * lead + (F.one,)
        for rest in itertools.product(F.elements(), repeat=dim - lead):
            yield prefix + tuple(rest)


def proj_count(q, dim):
    return sum(q ** i for i in range(dim + 1))


def normalize_point(F, v):
    for x in v:
        if x != F.zero:
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise ValueError("zero vector cannot be normalized")


def mat_rank(F, rows):
    a = [list(r) for r in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    rank = 0
    for c in range(nc):
        piv = None
        for i in range(rank, nr):
            if a[i][c] != F.zero:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = F.inv(a[rank][c])
        a[rank] = [F.mul(inv, x) for x in a[rank]]
        for i in range(nr):
            if i != rank and a[i][c] != F.zero:
                f = a[i][c]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def right_kernel(F, rows):
    """Basis of the right kernel over F."""
    a = [list(r) for r in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if a[i][c] != F.zero:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.mul(inv, x) for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != F.zero:
                f = a[i][c]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * nc
        v[fc] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(a[i][fc])
        basis.append(tuple(v))
    return basis


def left_kernel(F, rows):
    cols = [[row[j] for row in rows] for j in range(len(rows[0]))]
    return right_kernel(F, cols)


def tensor_eval_entries(a: Tensor, F):
    """Tensor entries as field codes (requires matching characteristic)."""
    if a.p is not None and a.p != F.char:
        raise ValueError("tensor characteristic does not match field")
    return [e % F.char for e in a.entries]


def contract_at(a: Tensor, F, assignments: dict):
    """Contract several slots at field points; returns (entries, shape) of
    the remaining tensor over F, axes in increasing slot order."""
    shape = a.shape
    r = len(shape)
    slots = sorted(assignments)
    rem = [s for s in range(r) if s not in assignments]
    out_shape = tuple(shape[s] for s in rem)
    ent = tensor_eval_entries(a, F)
    strides = []
    acc = 1
    for d in reversed(shape):
        strides.append(acc)
        acc *= d
    strides = list(reversed(strides))
    out = []
    for idx in itertools.product(*[range(d) for d in out_shape]):
        full = [0] * r
        for pos, s in enumerate(rem):
            full[s] = idx[pos]
        total = F.zero
        for fixed in itertools.product(*[range(shape[s]) for s in slots]):
            coeff = F.one
            for pos, s in enumerate(slots):
                full[s] = fixed[pos]
                coeff = F.mul(coeff, assignments[s][fixed[pos]])
                if coeff == F.zero:
                    break
            if coeff == F.zero:
                continue
            flat = sum(i * st for i, st in zip(full, strides))
            total = F.add(total, F.mul(coeff, ent[flat]))
        out.append(total)
    return out, out_shape


def _as_matrix(entries, shape):
    nr, nc = shape
    return [entries[i * nc:(i + 1) * nc] for i in range(nr)]


@dataclass(frozen=True)
class PointRecord:
    coords: tuple          # tuple of normalized per-factor coordinate tuples
    on_surface: bool = True
    rank_singular: bool = False

    def key(self):
        return self.coords


# ---------------------------------------------------------------------------
# rank singularities
# ---------------------------------------------------------------------------

def _field_from(q):
    if isinstance(q, (PrimeField,)) or hasattr(q, "char"):
        return q
    # q = p^k prime power
    p = None
    for cand in range(2, 1 << 20):
        if q % cand == 0:
            p = cand
            break
    k = 0
    qq = q
    while qq > 1:
        if qq % p:
            raise ValueError(f"{q} is not a prime power")
        qq //= p
        k += 1
    return GF(p, k)


def rank_singular_points(model: SurfaceModel, q, surface=None, bound=None):
    """Exhaustive list of rank-singular points of the named surface over F_q.

    The enumeration is structured per family (loops run over projective lines
    or the relevant P^3, never over a product bigger than the scan bound).
    """
    F = _field_from(q)
    if F.char == 2:
        raise ValueError("odd characteristic required")
    bound = bound or scan_bound()
    fam = model.family
    a = model.tensor
    out = []
    if fam in RR_LIKE:
        slot = {"X1": 0, "X2": 1, "X3": 2}[surface or "X1"]
        if proj_count(F.q, 3) > bound:
            raise ResourceError("scan bound exceeded")
        for x in proj_points(F, 3):
            ent, shp = contract_at(a, F, {slot: x})
            m = _as_matrix(ent, shp)
            if mat_rank(F, m) <= 2:
                out.append(PointRecord((x,), True, True))
    elif fam in PENT_LIKE:
        trip = tuple(int(c) - 1 for c in (surface or "X123")[1:])
        if len(trip) != 3:
            raise FormatError("rank singularities live on the X_ijk models")
        if (F.q + 1) ** 2 > bound:
            raise ResourceError("scan bound exceeded")
        i, j, k = trip
        for vi in proj_points(F, 1):
            for vj in proj_points(F, 1):
                ent, shp = contract_at(a, F, {i: vi, j: vj})
                # axes: (k, l, m) in increasing slot order; k axis first
                # since k > i, j never holds in general -- locate it
                rem = [s for s in range(5) if s not in (i, j)]
                kpos = rem.index(k)
                cube = _reshape3(ent, shp)
                c0, c1 = _cube_slices(cube, kpos)
                v0 = [x for row in c0 for x in row]
                v1 = [x for row in c1 for x in row]
                rk = mat_rank(F, [v0, v1])
                if rk == 0:
                    # the whole (vi, vj) line is rank singular; record each
                    for xk in proj_points(F, 1):
                        out.append(_pent_record(trip, vi, vj, xk, True))
                elif rk == 1:
                    ker = right_kernel(F, [[v0[t], v1[t]] for t in range(4)])
                    if ker:
                        xk = normalize_point(F, ker[0])
                        out.append(_pent_record(trip, vi, vj, xk, True))
    elif fam == "2224":
        if surface in (None, "XU"):
            if 3 * (F.q + 1) > bound:
                raise ResourceError("scan bound exceeded")
            seen = set()
            for i in range(3):
                for v in proj_points(F, 1):
                    ent, shp = contract_at(a, F, {i: v})
                    m = _as_matrix(ent, (4, 4))
                    ker = right_kernel(F, m)
                    if len(ker) == 1:
                        u = normalize_point(F, ker[0])
                        if u not in seen:
                            seen.add(u)
                            out.append(PointRecord((u,), True, True))
                    elif len(ker) > 1:
                        for kv in _proj_points_of_span(F, ker):
                            if kv not in seen:
                                seen.add(kv)
                                out.append(PointRecord((kv,), True, True))
        else:
            raise FormatError("2224 rank singularities live on X_U")
    elif fam in S24_LIKE:
        if proj_count(F.q, 3) > bound:
            raise ResourceError("scan bound exceeded")
        for z in proj_points(F, 3):
            ent, shp = contract_at(a, F, {2: z, 3: z})
            if all(x == F.zero for x in ent):
                out.append(PointRecord((z,), True, True))
    else:
        raise FormatError(f"no rank-singularity scan for {fam!r}")
    out.sort(key=lambda r: r.coords)
    return out


def _pent_record(trip, vi, vj, xk, singular):
    coords = [None, None, None]
    order = sorted(range(3), key=lambda t: trip[t])
    # trip is already increasing; coords follow (i, j, k) slot order
    i, j, k = trip
    slot_coord = {i: vi, j: vj, k: xk}
    coords = tuple(slot_coord[s] for s in sorted(trip))
    return PointRecord(coords, True, singular)


def _reshape3(entries, shape):
    d0, d1, d2 = shape
    out = []
    t = 0
    for i in range(d0):
        plane = []
        for j in range(d1):
            plane.append(list(entries[t:t + d2]))
            t += d2
        out.append(plane)
    return out


def _cube_slices(cube, axis):
    """The two slices of a 2x2x2 nested-list cube along the given axis."""
    if axis == 0:
        return cube[0], cube[1]
    if axis == 1:
        return ([cube[i][0] for i in range(2)],
                [cube[i][1] for i in range(2)])
    return ([[cube[i][j][0] for j in range(2)] for i in range(2)],
            [[cube[i][j][1] for j in range(2)] for i in range(2)])


def _proj_points_of_span(F, basis):
    """Normalized projective points of the span of the basis vectors."""
    seen = set()
    k = len(basis)
    n = len(basis[0])
    for coeffs in itertools.product(F.elements(), repeat=k):
        if all(c == F.zero for c in coeffs):
            continue
        v = [F.zero] * n
        for c, b in zip(coeffs, basis):
            if c != F.zero:
                v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
        if all(x == F.zero for x in v):
            continue
        seen.add(normalize_point(F, v))
    return sorted(seen)


# ---------------------------------------------------------------------------
# psi maps and automorphism point dynamics (Rubik's revenge families)
# ---------------------------------------------------------------------------

def on_surface_rr(model, F, slot, x):
    ent, shp = contract_at(model.tensor, F, {slot: x})
    return mat_rank(F, _as_matrix(ent, shp)) < 4


def psi_step(model: SurfaceModel, frm: int, to: int, pt, F):
    """psi_{frm,to} on a Rubik's revenge family: send x in X_frm to the
    kernel direction of the contracted matrix on the X_to side.

    Factors are 1-based.  Raises SingularPointError at kernel dimension >= 2
    and DomainError off the surface.
    """
    if model.family not in RR_LIKE:
        raise FormatError("psi maps are defined for the 4x4x4 families")
    i, j = frm - 1, to - 1
    ent, shp = contract_at(model.tensor, F, {i: pt})
    m = _as_matrix(ent, shp)
    rem = sorted(s for s in range(3) if s != i)
    if mat_rank(F, m) == 4:
        raise DomainError("point is not on the source surface")
    ker = left_kernel(F, m) if rem.index(j) == 0 else right_kernel(F, m)
    if len(ker) != 1:
        raise SingularPointError("kernel dimension at least 2")
    return normalize_point(F, ker[0])


def phi_rr_point(model: SurfaceModel, pt, F):
    """The composition psi12 then psi23 then psi31 on X1."""
    y = psi_step(model, 1, 2, pt, F)
    z = psi_step(model, 2, 3, y, F)
    return psi_step(model, 3, 1, z, F)


# ---------------------------------------------------------------------------
# penteract point dynamics on X_1234
# ---------------------------------------------------------------------------

def _other_root(F, abc, root):
    """Second root of the binary quadratic a x0^2 + b x0 x1 + c x1^2 given
    one root; exact division by the known linear factor."""
    a, b, c = abc
    r0, r1 = root
    # q = (r1 x0 - r0 x1)(alpha x0 + beta x1)
    if r1 != F.zero:
        inv = F.inv(r1)
        alpha = F.mul(a, inv)
        beta = F.mul(F.add(b, F.mul(r0, alpha)), inv)
    else:
        # root (1:0): a = 0, q = x1 (b x0 + c x1)
        alpha = b
        beta = c
    if alpha == F.zero and beta == F.zero:
        raise DegeneracyError("quadratic vanishes identically on the fiber")
    return normalize_point(F, (beta, F.neg(alpha)))


def pent_on_surface(model, F, pt4):
    """Whether (p1, p2, p3, p4) lies on X_1234 (both defining forms zero)."""
    a = model.tensor
    ent, _ = contract_at(a, F, {s: pt4[s] for s in range(4)})
    return all(x == F.zero for x in ent)


def alpha_point(model: SurfaceModel, k, l, pt4, F):
    """alpha_{kl,5} on X_1234: replace the k-th coordinate by the second
    root of the fiber quadratic and recompute the l-th from the kernel."""
    if model.family not in PENT_LIKE:
        raise FormatError("alpha maps act on penteract families")
    if not (1 <= k <= 4 and 1 <= l <= 4 and k != l):
        raise ValueError("alpha indices must be distinct in 1..4")
    a = model.tensor
    ks, ls = k - 1, l - 1
    fixed = {s: pt4[s] for s in range(4) if s not in (ks, ls)}
    ent, shp = contract_at(a, F, fixed)   # axes (ks, ls, 4) sorted
    cube = _reshape3(ent, shp)
    rem = sorted([ks, ls, 4])
    kpos = rem.index(ks)
    c0, c1 = _cube_slices(cube, kpos)

    def det2(m):
        return F.sub(F.mul(m[0][0], m[1][1]), F.mul(m[0][1], m[1][0]))

    aa = det2(c0)
    cc = det2(c1)
    bb = F.sub(F.add(F.mul(c0[0][0], c1[1][1]), F.mul(c1[0][0], c0[1][1])),
               F.add(F.mul(c0[0][1], c1[1][0]), F.mul(c1[0][1], c0[1][0])))
    if aa == F.zero and bb == F.zero and cc == F.zero:
        raise SingularPointError("fiber quadratic vanishes identically")
    xk = _other_root(F, (aa, bb, cc), pt4[ks])
    # recompute the l coordinate: left kernel of A(.., xk, ., slot5)
    fixed2 = dict(fixed)
    fixed2[ks] = xk
    ent2, shp2 = contract_at(a, F, fixed2)   # axes (ls, 4)
    m = _as_matrix(ent2, shp2)
    if all(x == F.zero for r in m for x in r):
        raise SingularPointError("rank singularity hit by alpha step")
    ker = left_kernel(F, m)
    if len(ker) != 1:
        raise SingularPointError("kernel dimension at least 2")
    xl = normalize_point(F, ker[0])
    new = list(pt4)
    new[ks] = xk
    new[ls] = xl
    return tuple(new)


PENT_CYCLES = {
    "Phi_51234": ((3, 4), (2, 3), (1, 2)),
}


def phi_orbit(model: SurfaceModel, cycle, pt, F, max_steps=64):
    """Iterate a named automorphism on points; report the exact period if the
    orbit closes within max_steps.

    cycle: "Phi_rr" for the 4x4x4 families, "alpha_kl_5" or "Phi_51234" (or
    an explicit tuple of alpha index pairs) for penteract families.
    """
    def step(q):
        if cycle == "Phi_rr":
            return (phi_rr_point(model, q[0], F),)
        if isinstance(cycle, str) and cycle.startswith("alpha_"):
            k, l = int(cycle[6]), int(cycle[7])
            return alpha_point(model, k, l, q, F)
        pairs = PENT_CYCLES[cycle] if isinstance(cycle, str) else cycle
        for (k, l) in pairs:
            q = alpha_point(model, k, l, q, F)
        return q

    if model.family in RR_LIKE and not isinstance(pt[0], tuple):
        pt = (pt,)
    orbit = [pt]
    cur = pt
    for n in range(1, max_steps + 1):
        try:
            cur = step(cur)
        except (SingularPointError, DegeneracyError) as e:
            return {"orbit": orbit, "period": None, "escaped": False,
                    "error": str(e)}
        if cur == pt:
            return {"orbit": orbit, "period": n, "escaped": False}
        orbit.append(cur)
    return {"orbit": orbit, "period": None, "escaped": True}


# ---------------------------------------------------------------------------
# hyperdeterminant vanishing and fixed points
# ---------------------------------------------------------------------------

def hyperdet_admissible(shape):
    """Existence criterion for the hyperdeterminant of the format.

    Implemented as max dim constraint k_r <= k_1 + ... + k_{r-1} on the
    index bounds k_i = dim - 1 (the boundary case included).
    """
    ks = sorted(d - 1 for d in shape)
    return ks[-1] <= sum(ks[:-1])


def hyperdet_vanishes(a: Tensor, q, bound=None) -> dict:
    """Exhaustive search over F_q for a decomposable kernel element.

    Returns {"status": True/False, "witness": tuple-of-points or None} and,
    for 2x2x2 cubes, also the exact discriminant value.
    """
    if not hyperdet_admissible(a.shape):
        raise FormatError(f"format {a.shape} admits no hyperdeterminant")
    F = _field_from(q)
    bound = bound or scan_bound()
    fam = family_of(a)
    if fam == "cube222":
        disc_f = cube_disc_poly(a) % F.char
        wit = _generic_kernel_search(a, F, bound)
        return {"status": disc_f == 0, "witness": wit, "disc": disc_f}
    if fam in RR_LIKE:
        wit = _rr_kernel_search(a, F, bound)
    elif fam in PENT_LIKE:
        wit = _pent_kernel_search(a, F, bound)
    elif fam == "2224":
        wit = _2224_kernel_search(a, F, bound)
    else:
        wit = _generic_kernel_search(a, F, bound)
    return {"status": wit is not None, "witness": wit}


def _check_kernel_witness(a, F, pts):
    """All leave-one-out contractions vanish at the decomposable point."""
    r = len(a.shape)
    for drop in range(r):
        ent, _ = contract_at(a, F, {s: pts[s] for s in range(r) if s != drop})
        if any(x != F.zero for x in ent):
            return False
    return True


def _rr_kernel_search(a, F, bound):
    if proj_count(F.q, 3) > bound:
        raise ResourceError("scan bound exceeded")
    for v1 in proj_points(F, 3):
        ent, shp = contract_at(a, F, {0: v1})
        m = _as_matrix(ent, shp)
        rk = mat_rank(F, m)
        if rk == 4:
            continue
        lk = left_kernel(F, m)
        rkn = right_kernel(F, m)
        if rk == 3:
            cand = [(normalize_point(F, lk[0]), normalize_point(F, rkn[0]))]
        else:
            cand = [(x, y) for x in _proj_points_of_span(F, lk)
                    for y in _proj_points_of_span(F, rkn)]
        for (v2, v3) in cand:
            if _check_kernel_witness(a, F, (v1, v2, v3)):
                return (v1, v2, v3)
    return None


def _pent_kernel_search(a, F, bound):
    if (F.q + 1) ** 3 > bound:
        raise ResourceError("scan bound exceeded")
    P1 = list(proj_points(F, 1))
    for v1 in P1:
        for v2 in P1:
            ent12, _ = contract_at(a, F, {0: v1, 1: v2})
            for v3 in P1:
                # contract remaining slot 2 of the (2,2,2) block by hand
                m = [[F.add(F.mul(v3[0], ent12[0 + i * 2 + j * 1]),
                            F.mul(v3[1], ent12[4 + i * 2 + j]))
                      for j in range(2)] for i in range(2)]
                rk = mat_rank(F, m)
                if rk == 2:
                    continue
                if rk == 1:
                    v4 = normalize_point(F, left_kernel(F, m)[0])
                    v5 = normalize_point(F, right_kernel(F, m)[0])
                    cand = [(v4, v5)]
                else:
                    cand = [(x, y) for x in P1 for y in P1]
                for (v4, v5) in cand:
                    pts = (v1, v2, v3, v4, v5)
                    if _check_kernel_witness(a, F, pts):
                        return pts
    return None


def _2224_kernel_search(a, F, bound):
    if (F.q + 1) ** 3 > bound:
        raise ResourceError("scan bound exceeded")
    P1 = list(proj_points(F, 1))
    for v1 in P1:
        for v2 in P1:
            for v3 in P1:
                ent, _ = contract_at(a, F, {0: v1, 1: v2, 2: v3})
                if any(x != F.zero for x in ent):
                    continue
                rows = []
                for drop in range(3):
                    fixed = {s: (v1, v2, v3)[s] for s in range(3) if s != drop}
                    e2, shp2 = contract_at(a, F, fixed)
                    rows.extend(_as_matrix(e2, shp2))
                ker = right_kernel(F, rows)
                if ker:
                    u = normalize_point(F, ker[0])
                    if _check_kernel_witness(a, F, (v1, v2, v3, u)):
                        return (v1, v2, v3, u)
    return None


def _generic_kernel_search(a, F, bound):
    r = len(a.shape)
    dims = a.shape
    total = 1
    for d in dims[:-1]:
        total *= proj_count(F.q, d - 1)
    if total > bound:
        raise ResourceError("scan bound exceeded")
    spaces = [list(proj_points(F, d - 1)) for d in dims[:-1]]
    for combo in itertools.product(*spaces):
        ent, _ = contract_at(a, F, {s: combo[s] for s in range(r - 1)})
        if any(x != F.zero for x in ent):
            continue
        rows = []
        for drop in range(r - 1):
            fixed = {s: combo[s] for s in range(r - 1) if s != drop}
            e2, shp2 = contract_at(a, F, fixed)
            rows.extend(_as_matrix(e2, (len(e2) // dims[-1], dims[-1])))
        ker = right_kernel(F, rows)
        if ker:
            vr = normalize_point(F, ker[0])
            pts = combo + (vr,)
            if _check_kernel_witness(a, F, pts):
                return pts
    return None


def rr_fixed_point_search(model: SurfaceModel, F, bound=None):
    """Fixed points of Phi on X1 over F; skips rank-singular points.

    Returns (fixed_points, singular_seen).
    """
    bound = bound or scan_bound()
    if proj_count(F.q, 3) > bound:
        raise ResourceError("scan bound exceeded")
    fixed = []
    singular = False
    for x in proj_points(F, 3):
        ent, shp = contract_at(model.tensor, F, {0: x})
        m = _as_matrix(ent, shp)
        rk = mat_rank(F, m)
        if rk == 4:
            continue
        if rk <= 2:
            singular = True
            continue
        try:
            if phi_rr_point(model, x, F) == x:
                fixed.append(x)
        except SingularPointError:
            singular = True
    return fixed, singular


def pent_fixed_point_search(model: SurfaceModel, F, cycle="Phi_51234",
                            bound=None):
    """Fixed points of a 5-cycle on X_1234 over F (skipping singular data)."""
    bound = bound or scan_bound()
    if (F.q + 1) ** 3 > bound:
        raise ResourceError("scan bound exceeded")
    a = model.tensor
    P1 = list(proj_points(F, 1))
    fixed = []
    singular = False
    for v1 in P1:
        for v2 in P1:
            for v3 in P1:
                ent, shp = contract_at(a, F, {0: v1, 1: v2, 2: v3})
                m = _as_matrix(ent, shp)
                rk = mat_rank(F, m)
                if rk == 2:
                    continue
                if rk == 0:
                    singular = True
                    continue
                v4 = normalize_point(F, left_kernel(F, m)[0])
                pt = (v1, v2, v3, v4)
                try:
                    res = phi_orbit(model, cycle, pt, F, max_steps=1)
                except (SingularPointError, DegeneracyError):
                    singular = True
                    continue
                if res["period"] == 1:
                    fixed.append(pt)
    return fixed, singular


# ---------------------------------------------------------------------------
# fibration discriminants
# ---------------------------------------------------------------------------

def fibration_disc(model: SurfaceModel, base_factor, surface=None):
    """The degree-24 binary form of the genus-one fibration of a tridegree
    (2,2,2) model over the named base block."""
    if model.family in PENT_LIKE:
        f = model.forms[surface or "X123"]
    elif model.family == "2224":
        f = model.forms["f"]
    else:
        raise FormatError("fibration discriminants need a (2,2,2) model")
    blocks = [n for n, _ in f.blocks]
    if isinstance(base_factor, int):
        base = blocks[base_factor - 1]
    else:
        base = base_factor
    others = [b for b in blocks if b != base]
    if len(others) != 2:
        raise FormatError(f"unknown base block {base_factor!r}")
    d1 = disc_binary_quadratic(f, others[1])
    if d1.is_zero():
        return d1
    d24 = disc_binary_quartic(d1, others[0])
    return d24
