"""Exact integer and rational matrix algebra.

Everything runs on Python ints (arbitrary precision) or Fraction, never
floats.  Determinants use fraction-free Bareiss elimination; characteristic
polynomials use Faddeev-LeVerrier (the interior divisions are exact);
signatures are Descartes sign counts on the characteristic polynomial, which
is exact for symmetric matrices since all eigenvalues are real.
"""

from dataclasses import dataclass
from fractions import Fraction


class ShapeError(ValueError):
    pass


class IntMatrix:
    """Immutable integer matrix, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows_of_entries):
        data = tuple(tuple(int(x) for x in row) for row in rows_of_entries)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ShapeError("ragged rows")
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        self.data = data

    @staticmethod
    def identity(n):
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r, c):
        return IntMatrix([[0] * c for _ in range(r)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]})"

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows) for j in range(i))

    def transpose(self):
        return IntMatrix([[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("size mismatch in addition")
        return IntMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("size mismatch in subtraction")
        return IntMatrix([[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return IntMatrix([[-a for a in r] for r in self.data])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[a * other for a in r] for r in self.data])
        if self.cols != other.rows:
            raise ShapeError("size mismatch in product")
        bt = other.transpose().data
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in bt]
                          for r in self.data])

    __rmul__ = __mul__

    def scale_rows_cols(self, perm):
        """Simultaneous row/column permutation (for symmetric reindexing)."""
        return IntMatrix([[self.data[perm[i]][perm[j]] for j in range(self.cols)]
                          for i in range(self.rows)])

    def to_lists(self):
        return [list(r) for r in self.data]


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square():
        raise ShapeError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def char_poly(m: IntMatrix):
    """Monic characteristic polynomial det(x I - m), coefficients low-first.

    Faddeev-LeVerrier: every division by k is exact for integer input.
    """
    if not m.is_square():
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = IntMatrix.identity(n)
    c = 1
    for k in range(1, n + 1):
        AM = m * Mk
        tr = sum(AM.data[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs[n - k] = c
        if k < n:
            Mk = AM + c * IntMatrix.identity(n)
    return coeffs


def mat_pow(m: IntMatrix, e: int) -> IntMatrix:
    """Exact e-th power by binary exponentiation (e >= 0)."""
    if not m.is_square():
        raise ShapeError("power of a non-square matrix")
    if e < 0:
        raise ValueError("negative exponent")
    result = IntMatrix.identity(m.rows)
    base = m
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


@dataclass(frozen=True)
class SNFResult:
    invariant_factors: tuple
    left: IntMatrix
    right: IntMatrix


def smith_normal_form(m: IntMatrix) -> SNFResult:
    """Smith normal form with unimodular transforms: left*m*right = diag(d_i).

    Pivot rule: smallest nonzero absolute value in the remaining block, ties
    broken by lowest row then lowest column, so runs are reproducible.
    """
    a = [list(r) for r in m.data]
    R, C = m.rows, m.cols
    L = [[1 if i == j else 0 for j in range(R)] for i in range(R)]
    Rt = [[1 if i == j else 0 for j in range(C)] for i in range(C)]

    def row_op(i, j, q):  # row i -= q * row j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        L[i] = [x - q * y for x, y in zip(L[i], L[j])]

    def col_op(i, j, q):  # col i -= q * col j
        for r in a:
            r[i] -= q * r[j]
        for r in Rt:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in Rt:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        L[i] = [-x for x in L[i]]

    t = 0
    while t < min(R, C):
        # find pivot
        best = None
        for i in range(t, R):
            for j in range(t, C):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        if a[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, R):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, C):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                col_op(j, t, q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # ensure pivot divides the rest of the block
        bad = None
        for i in range(t + 1, R):
            for j in range(t + 1, C):
                if a[i][j] % a[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)  # add row `bad` to row t
            continue
        t += 1
    factors = tuple(a[i][i] for i in range(min(R, C)))
    return SNFResult(factors, IntMatrix(L), IntMatrix(Rt))


def invariant_factors(m: IntMatrix):
    return smith_normal_form(m).invariant_factors


def disc_group_structure(m: IntMatrix):
    """Nontrivial invariant factors of coker(m), e.g. (2, 2, 4)."""
    return tuple(d for d in invariant_factors(m) if d not in (0, 1))


def kernel_mod_p(m: IntMatrix, p: int):
    """Row-reduced basis of the right null space of m over F_p."""
    from .fields import is_prime
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = [[x % p for x in row] for row in m.data]
    return _kernel_field(a, m.rows, m.cols, p)


def _kernel_field(a, rows, cols, p):
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-a[i][fc]) % p
        basis.append(v)
    return basis


def rank_mod_p(m: IntMatrix, p: int) -> int:
    return m.cols - len(kernel_mod_p(m, p))


def signature(g: IntMatrix):
    """(n_plus, n_minus, n_zero) eigenvalue sign counts of a symmetric matrix.

    Descartes' rule on the characteristic polynomial is exact here because all
    roots are real.
    """
    if not g.is_symmetric():
        raise ShapeError("signature needs a symmetric matrix")
    coeffs = char_poly(g)

    def variations(cs):
        cs = [c for c in cs if c != 0]
        return sum(1 for a, b in zip(cs, cs[1:]) if (a > 0) != (b > 0))

    n = g.rows
    npos = variations(coeffs)
    nneg = variations([c if i % 2 == 0 else -c for i, c in enumerate(coeffs)])
    return (npos, nneg, n - npos - nneg)


def rank(m: IntMatrix) -> int:
    """Rank over Q (fraction-free elimination)."""
    a = [[Fraction(x) for x in row] for row in m.data]
    r = 0
    for c in range(m.cols):
        piv = None
        for i in range(r, m.rows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def solve_right(m: IntMatrix, target):
    """One rational solution x of m x = target, or None (Gauss over Q)."""
    rows, cols = m.rows, m.cols
    a = [[Fraction(x) for x in row] + [Fraction(t)] for row, t in
         zip(m.data, target)]
    piv_of_col = {}
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_of_col[c] = r
        r += 1
    for i in range(r, rows):
        if a[i][cols]:
            return None
    x = [Fraction(0)] * cols
    for c, i in piv_of_col.items():
        x[c] = a[i][cols]
    return x


def inverse_fractions(m: IntMatrix):
    """Exact inverse as a list of Fraction rows."""
    if not m.is_square():
        raise ShapeError("inverse of a non-square matrix")
    n = m.rows
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0)
         for j in range(n)] for i, row in enumerate(m.data)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        a[c] = [x / a[c][c] for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def hnf_rows(rows):
    """Hermite normal form of the row space of an integer matrix.

    Returns the list of nonzero rows (a canonical basis of the row lattice).
    """
    a = [list(r) for r in rows]
    if not a:
        return []
    cols = len(a[0])
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(a)):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        # reduce all other rows below against row r by gcd steps
        changed = True
        while changed:
            changed = False
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    if abs(a[i][c]) < abs(a[r][c]):
                        a[r], a[i] = a[i], a[r]
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        changed = True
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
    return [row for row in a[:r]]
