"""Integer and F_p tensors with the symmetry classes of the parametrization.

A Tensor stores its shape, a symmetry tag, and entries in row-major order.
The symmetry tag names a partition of the slots into symmetric groups; on
construction the entries are checked to be constant on the orbits of the
corresponding permutations.  Supported tags cover exactly the families in the
catalog plus unsymmetrized shapes.
"""

import itertools
import json
import random
from dataclasses import dataclass

# tag -> (shape, slot partition).  A partition lists the symmetric slot
# groups; singleton groups may be omitted.
SYMMETRY_TAGS = {
    "none": None,
    "sym-last-2": "last2",
    "sym-last-3": "last3",
    "sym-last-4": "last4",
    "sym-all": "all",
    "sym-23-45": ((1, 2), (3, 4)),
    "sym-12-345": ((0, 1), (2, 3, 4)),
    "sym-first-2-last-2": ((0, 1), (2, 3)),
    "sym-12-34-56": ((0, 1), (2, 3), (4, 5)),
}

# shape/symmetry pairs of the catalog (plus any unsymmetrized shape)
SUPPORTED = {
    ((4, 4, 4), "none"), ((4, 4, 4), "sym-last-2"), ((4, 4, 4), "sym-all"),
    ((2, 2, 2, 2, 2), "none"), ((2, 2, 2, 2, 2), "sym-last-2"),
    ((2, 2, 2, 2, 2), "sym-last-3"), ((2, 2, 2, 2, 2), "sym-23-45"),
    ((2, 2, 2, 2, 2), "sym-12-345"), ((2, 2, 2, 2, 2), "sym-last-4"),
    ((2, 2, 2, 2, 2), "sym-all"),
    ((2, 2, 2, 4), "none"),
    ((2, 2, 4, 4), "sym-last-2"), ((2, 2, 4, 4), "sym-first-2-last-2"),
    ((2, 2, 2), "none"),
    ((2, 2, 2, 2, 2, 2), "sym-12-34-56"),
}


class SymmetryError(ValueError):
    pass


def slot_groups(shape, symmetry):
    """The symmetric slot groups for a tag, resolved against a shape."""
    if symmetry not in SYMMETRY_TAGS:
        raise SymmetryError(f"unknown symmetry tag {symmetry!r}")
    spec = SYMMETRY_TAGS[symmetry]
    r = len(shape)
    if spec is None:
        groups = ()
    elif spec == "all":
        groups = (tuple(range(r)),)
    elif spec == "last2":
        groups = (tuple(range(r - 2, r)),)
    elif spec == "last3":
        groups = (tuple(range(r - 3, r)),)
    elif spec == "last4":
        groups = (tuple(range(r - 4, r)),)
    else:
        groups = tuple(tuple(g) for g in spec)
    for g in groups:
        if max(g) >= r:
            raise SymmetryError(f"tag {symmetry!r} does not fit shape {shape}")
        if len({shape[i] for i in g}) != 1:
            raise SymmetryError("symmetric slots must have equal dimension")
    return groups


def _orbit_perms(shape, groups):
    """All slot permutations generated by the symmetric groups."""
    r = len(shape)
    perm_lists = []
    for g in groups:
        perm_lists.append([dict(zip(g, q)) for q in itertools.permutations(g)])
    out = []
    for combo in itertools.product(*perm_lists) if perm_lists else [()]:
        perm = list(range(r))
        for d in combo:
            for k, v in d.items():
                perm[k] = v
        out.append(tuple(perm))
    return out


class Tensor:
    __slots__ = ("shape", "symmetry", "p", "entries", "_strides")

    def __init__(self, shape, entries, symmetry="none", p=None, check=True):
        self.shape = tuple(int(d) for d in shape)
        self.symmetry = symmetry
        self.p = p
        n = 1
        for d in self.shape:
            n *= d
        entries = [int(x) for x in entries]
        if len(entries) != n:
            raise ValueError("entry count does not match shape")
        if p is not None:
            entries = [x % p for x in entries]
        self.entries = tuple(entries)
        strides = []
        acc = 1
        for d in reversed(self.shape):
            strides.append(acc)
            acc *= d
        self._strides = tuple(reversed(strides))
        if check:
            groups = slot_groups(self.shape, symmetry)
            if groups and not self._invariant_under(groups):
                raise SymmetryError("entries are not invariant under the "
                                    "declared symmetry")

    def _invariant_under(self, groups):
        for perm in _orbit_perms(self.shape, groups):
            if perm == tuple(range(len(self.shape))):
                continue
            for idx in itertools.product(*[range(d) for d in self.shape]):
                pidx = tuple(idx[perm[i]] for i in range(len(idx)))
                if self[idx] != self[pidx]:
                    return False
        return True

    def __getitem__(self, idx):
        flat = sum(i * s for i, s in zip(idx, self._strides))
        return self.entries[flat]

    def __eq__(self, other):
        return (isinstance(other, Tensor) and self.shape == other.shape
                and self.symmetry == other.symmetry and self.p == other.p
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.shape, self.symmetry, self.p, self.entries))

    def __repr__(self):
        f = "Z" if self.p is None else f"Fp:{self.p}"
        return (f"Tensor(shape={self.shape}, symmetry={self.symmetry!r}, "
                f"field={f})")

    def rank_order(self):
        return len(self.shape)

    def slice_matrix(self, slot_rows, slot_cols, fixed):
        """2-D slice: rows indexed by slot_rows, cols by slot_cols, all other
        slots fixed by the dict `fixed`."""
        r = len(self.shape)
        rows = []
        for i in range(self.shape[slot_rows]):
            row = []
            for j in range(self.shape[slot_cols]):
                idx = [0] * r
                idx[slot_rows] = i
                idx[slot_cols] = j
                for k, v in fixed.items():
                    idx[k] = v
                row.append(self[tuple(idx)])
            rows.append(row)
        return rows

    def to_json(self):
        field = "Z" if self.p is None else f"Fp:{self.p}"
        return {"shape": list(self.shape), "symmetry": self.symmetry,
                "field": field, "entries": [str(x) for x in self.entries]}

    @staticmethod
    def from_json(obj):
        field = obj["field"]
        p = None if field == "Z" else int(field.split(":")[1])
        return Tensor(obj["shape"], [int(x) for x in obj["entries"]],
                      symmetry=obj.get("symmetry", "none"), p=p)

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=0, sort_keys=True)
            fh.write("\n")

    @staticmethod
    def load(path):
        with open(path) as fh:
            return Tensor.from_json(json.load(fh))


def contract(a: Tensor, slot: int, v) -> Tensor:
    """A contracted against vector v in the given slot; rank drops by one."""
    if len(v) != a.shape[slot]:
        raise ValueError("vector length does not match slot dimension")
    r = len(a.shape)
    new_shape = a.shape[:slot] + a.shape[slot + 1:]
    out = []
    for idx in itertools.product(*[range(d) for d in new_shape]):
        full = list(idx[:slot]) + [0] + list(idx[slot:])
        s = 0
        for i, c in enumerate(v):
            if c:
                full[slot] = i
                s += c * a[tuple(full)]
        if a.p is not None:
            s %= a.p
        out.append(s)
    return Tensor(new_shape, out, symmetry="none", p=a.p, check=False)


def symmetrize_embed(a: Tensor) -> Tensor:
    """Forget the symmetry tag, returning the same entries untagged.

    Symmetric tensors are represented as the orbit-constant element of the
    full tensor space (the subspace picture), so the embedding into the
    unsymmetrized space is the identity on entries.
    """
    if a.symmetry == "none":
        raise SymmetryError("tensor has no symmetry tag to forget")
    return Tensor(a.shape, a.entries, symmetry="none", p=a.p, check=False)


@dataclass(frozen=True)
class GroupElement:
    """One invertible matrix per tensor slot plus a global scalar."""
    matrices: tuple     # tuple of row-major square matrices (tuples of tuples)
    scalar: int = 1
    p: object = None

    def __post_init__(self):
        from .intmat import det, IntMatrix
        for m in self.matrices:
            mm = IntMatrix(m)
            if not mm.is_square():
                raise ValueError("group element matrices must be square")
            d = det(mm)
            if self.p is None:
                if d == 0:
                    raise ValueError("singular matrix in group element")
            else:
                if d % self.p == 0:
                    raise ValueError("singular matrix in group element")
        if self.scalar == 0 or (self.p is not None and self.scalar % self.p == 0):
            raise ValueError("zero scalar in group element")

    @staticmethod
    def identity(shape, p=None):
        mats = tuple(tuple(tuple(1 if i == j else 0 for j in range(d))
                           for i in range(d)) for d in shape)
        return GroupElement(mats, 1, p)


def group_act(g: GroupElement, a: Tensor) -> Tensor:
    """(g.A)(x_1..x_r) = scalar * A(g_1^T x_1, ..., g_r^T x_r).

    Concretely each slot index is rotated through the corresponding matrix:
    new[i_1..i_r] = scalar * sum over j of prod g_s[i_s][j_s] * old[j_1..j_r].
    """
    if len(g.matrices) != len(a.shape):
        raise ValueError("group element has wrong number of slots")
    for m, d in zip(g.matrices, a.shape):
        if len(m) != d:
            raise ValueError("matrix size does not match slot dimension")
    if g.p != a.p:
        raise ValueError("field mismatch between group element and tensor")
    groups = slot_groups(a.shape, a.symmetry)
    for grp in groups:
        mats = {g.matrices[i] for i in grp}
        if len(mats) != 1:
            raise ValueError("group element must act equally on symmetric "
                             "slots")
    cur = a
    for slot, m in enumerate(g.matrices):
        cur = _act_slot(cur, slot, m)
    entries = [g.scalar * x for x in cur.entries]
    if a.p is not None:
        entries = [x % a.p for x in entries]
    return Tensor(a.shape, entries, symmetry=a.symmetry, p=a.p)


def _act_slot(a: Tensor, slot: int, m) -> Tensor:
    r = len(a.shape)
    d = a.shape[slot]
    out = [0] * len(a.entries)
    for idx in itertools.product(*[range(k) for k in a.shape]):
        flat = sum(i * s for i, s in zip(idx, a._strides))
        s = 0
        row = m[idx[slot]]
        full = list(idx)
        for j in range(d):
            if row[j]:
                full[slot] = j
                s += row[j] * a[tuple(full)]
        if a.p is not None:
            s %= a.p
        out[flat] = s
    return Tensor(a.shape, out, symmetry="none", p=a.p, check=False)


def random_tensor(shape, symmetry="none", p=None, seed=0, coeff_bound=9):
    """Deterministic random tensor respecting the symmetry tag.

    Over Z entries lie in [-coeff_bound, coeff_bound]; over F_p in [0, p).
    """
    shape = tuple(shape)
    if (shape, symmetry) not in SUPPORTED:
        raise SymmetryError(f"unsupported shape/symmetry pair "
                            f"({shape}, {symmetry!r})")
    rng = random.Random(f"k3tensor:{shape}:{symmetry}:{p}:{seed}")
    groups = slot_groups(shape, symmetry)
    perms = _orbit_perms(shape, groups)
    n = 1
    for d in shape:
        n *= d
    entries = [None] * n

    strides = []
    acc = 1
    for d in reversed(shape):
        strides.append(acc)
        acc *= d
    strides = tuple(reversed(strides))

    def flat(idx):
        return sum(i * s for i, s in zip(idx, strides))

    for idx in itertools.product(*[range(d) for d in shape]):
        if entries[flat(idx)] is not None:
            continue
        if p is not None:
            val = rng.randrange(p)
        else:
            val = rng.randint(-coeff_bound, coeff_bound)
        orbit = {tuple(idx[pm[i]] for i in range(len(idx))) for pm in perms}
        for o in orbit:
            entries[flat(o)] = val
    return Tensor(shape, entries, symmetry=symmetry, p=p)
