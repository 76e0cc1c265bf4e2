"""Exact linear algebra over Q and F_p: fields, matrices, subspaces.

All arithmetic is exact.  Rational scalars are `fractions.Fraction` in lowest
terms with positive denominator; prime-field scalars are ints in [0, p).
Subspaces are stored in reduced row-echelon form, so two subspaces are equal
as sets exactly when their stored bases are identical.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import QuivkitError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field Q.  Values are Fractions (auto-reduced, positive denominator)."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return Fraction(1) / a

    def div(self, a, b):
        return a / b

    def fmt(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        return Fraction(text.strip())

    @property
    def name(self) -> str:
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(("quivkit.field", 0))

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p (p prime).  Values are ints in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise QuivkitError("NOT_PRIME", f"{p} is not prime")
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def of(self, x):
        p = self.char
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def neg(self, a):
        return (-a) % self.char

    def inv(self, a):
        if a % self.char == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.char}")
        return pow(a, self.char - 2, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def fmt(self, a) -> str:
        return f"{a} mod {self.char}"

    def parse(self, text: str):
        text = text.strip()
        if text.endswith(f"mod {self.char}"):
            text = text[: -len(f"mod {self.char}")].strip()
        return self.of(Fraction(text))

    @property
    def name(self) -> str:
        return f"F{self.char}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("quivkit.field", self.char))

    def __repr__(self):
        return f"GF({self.char})"


QQ = RationalField()
_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_by_name(name: str):
    """Parse a field tag: "Q" or "F<p>"."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return GF(int(name[1:]))
    raise QuivkitError("BAD_FIELD", f"unknown field {name!r} (use Q or F<p>)")


# ---------------------------------------------------------------------------
# vectors (plain lists of field values)
# ---------------------------------------------------------------------------

def vec_zero(field, n):
    return [field.zero] * n


def vec_unit(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_add(field, u, v):
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field, u, v):
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_neg(field, u):
    return [field.neg(a) for a in u]


def vec_scale(field, c, u):
    return [field.mul(c, a) for a in u]


def vec_is_zero(field, u):
    z = field.zero
    return all(a == z for a in u)


def dot(field, u, v):
    acc = field.zero
    for a, b in zip(u, v):
        if a != field.zero and b != field.zero:
            acc = field.add(acc, field.mul(a, b))
    return acc


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Mat:
    """Dense matrix with exact entries, row-major."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows: int, cols: int, data):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise QuivkitError("BAD_SHAPE", f"expected {rows}x{cols} data")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols, [[field.zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise QuivkitError("BAD_SHAPE", "cols required for empty row list")
            cols = len(rows[0])
        return cls(field, len(rows), cols, rows)

    @classmethod
    def from_cols(cls, field, cols_list, rows=None):
        cols_list = [list(c) for c in cols_list]
        if rows is None:
            if not cols_list:
                raise QuivkitError("BAD_SHAPE", "rows required for empty col list")
            rows = len(cols_list[0])
        data = [[cols_list[j][i] for j in range(len(cols_list))] for i in range(rows)]
        return cls(field, rows, len(cols_list), data)

    def copy(self):
        return Mat(self.field, self.rows, self.cols, [row[:] for row in self.data])

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def matvec(self, v):
        f = self.field
        out = []
        for row in self.data:
            out.append(dot(f, row, v))
        return out

    def matmul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise QuivkitError("BAD_SHAPE", "matmul dimension mismatch")
        f = self.field
        ocols = other.transpose().data
        data = [[dot(f, row, c) for c in ocols] for row in self.data]
        return Mat(f, self.rows, other.cols, data)

    def add(self, other: "Mat") -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols,
                   [vec_add(f, r1, r2) for r1, r2 in zip(self.data, other.data)])

    def sub(self, other: "Mat") -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols,
                   [vec_sub(f, r1, r2) for r1, r2 in zip(self.data, other.data)])

    def scale(self, c) -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols, [vec_scale(f, c, r) for r in self.data])

    def transpose(self) -> "Mat":
        return Mat(self.field, self.cols, self.rows,
                   [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(vec_is_zero(self.field, r) for r in self.data)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols})"


def rref(m: Mat):
    """Reduced row-echelon form and pivot column list (unique, canonical)."""
    f = m.field
    a = [row[:] for row in m.data]
    pivots = []
    r = 0
    for c in range(m.cols):
        pr = None
        for i in range(r, m.rows):
            if a[i][c] != f.zero:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = f.inv(a[r][c])
        a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != f.zero:
                coef = a[i][c]
                arow = a[i]
                prow = a[r]
                a[i] = [f.sub(arow[k], f.mul(coef, prow[k])) for k in range(m.cols)]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Mat(f, m.rows, m.cols, a), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def solve(m: Mat, b):
    """One solution of m x = b with free variables set to 0, or None."""
    f = m.field
    aug = Mat(f, m.rows, m.cols + 1,
              [m.data[i] + [b[i]] for i in range(m.rows)])
    red, piv = rref(aug)
    if piv and piv[-1] == m.cols:
        return None
    x = vec_zero(f, m.cols)
    for r_i, pc in enumerate(piv):
        x[pc] = red.data[r_i][m.cols]
    return x


def solve_multi(m: Mat, bs):
    """Solve m x = b for each b in bs; list of solutions (None where inconsistent)."""
    f = m.field
    k = len(bs)
    if k == 0:
        return []
    aug = Mat(f, m.rows, m.cols + k,
              [m.data[i] + [b[i] for b in bs] for i in range(m.rows)])
    red, piv = rref(aug)
    main_piv = [p for p in piv if p < m.cols]
    sols = []
    for j in range(k):
        col = m.cols + j
        # inconsistent iff some row is zero on the main block but not at col
        bad = False
        for r_i in range(red.rows):
            if all(red.data[r_i][c] == f.zero for c in range(m.cols)) \
                    and red.data[r_i][col] != f.zero:
                bad = True
                break
        if bad:
            sols.append(None)
            continue
        x = vec_zero(f, m.cols)
        for r_i, pc in enumerate(piv):
            if pc < m.cols:
                x[pc] = red.data[r_i][col]
        sols.append(x)
    return sols


def invert(m: Mat) -> Mat:
    """Inverse of a square matrix; raises if singular."""
    if m.rows != m.cols:
        raise QuivkitError("BAD_SHAPE", "inverse of non-square matrix")
    cols = solve_multi(m, [vec_unit(m.field, m.rows, i) for i in range(m.rows)])
    if any(c is None for c in cols):
        raise QuivkitError("SINGULAR", "matrix is not invertible")
    inv = Mat.from_cols(m.field, cols, rows=m.rows)
    if not m.matmul(inv).__eq__(Mat.identity(m.field, m.rows)):
        raise QuivkitError("SINGULAR", "matrix is not invertible")
    return inv


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """Subspace of k^n stored as a canonical RREF basis (no zero rows)."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis_rows, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis_rows
        self.pivots = pivots

    @classmethod
    def span(cls, field, ambient_dim, vectors):
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise QuivkitError("BAD_SHAPE", "vector length != ambient_dim")
        if not vectors:
            return cls(field, ambient_dim, [], [])
        red, piv = rref(Mat.from_rows(field, vectors, cols=ambient_dim))
        rows = [red.data[i] for i in range(len(piv))]
        return cls(field, ambient_dim, rows, piv)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, [], [])

    @classmethod
    def full(cls, field, ambient_dim):
        rows = [vec_unit(field, ambient_dim, i) for i in range(ambient_dim)]
        return cls(field, ambient_dim, rows, list(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v):
        """Remainder of v after elimination against the basis."""
        f = self.field
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c != f.zero:
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return vec_is_zero(self.field, self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def coords_of(self, v):
        """Coefficients of v in the stored basis, or None if v is outside."""
        f = self.field
        coords = [v[pc] for pc in self.pivots]
        rem = self.reduce(v)
        if not vec_is_zero(f, rem):
            return None
        return coords

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        # Zassenhaus: rows [u|u] for u in U, [w|0] for w in W; rows of the
        # echelon form that vanish on the left block span U∩W on the right.
        f = self.field
        n = self.ambient_dim
        rows = [r + r for r in self.basis] + [r + vec_zero(f, n) for r in other.basis]
        if not rows:
            return Subspace.zero(f, n)
        red, piv = rref(Mat.from_rows(f, rows, cols=2 * n))
        out = []
        for i in range(len(piv)):
            row = red.data[i]
            if vec_is_zero(f, row[:n]) and not vec_is_zero(f, row[n:]):
                out.append(row[n:])
        return Subspace.span(f, n, out)

    def to_mat(self) -> Mat:
        return Mat.from_rows(self.field, self.basis, cols=self.ambient_dim)

    def basis_key(self):
        return tuple(tuple(r) for r in self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis_key()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel(m: Mat) -> Subspace:
    """Solution space of m x = 0."""
    f = m.field
    red, piv = rref(m)
    pivset = set(piv)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for fc in free:
        v = vec_zero(f, m.cols)
        v[fc] = f.one
        for r_i, pc in enumerate(piv):
            v[pc] = f.neg(red.data[r_i][fc])
        basis.append(v)
    return Subspace.span(f, m.cols, basis)


def image(m: Mat) -> Subspace:
    """Column space of m (the image of the linear map v -> m v)."""
    return Subspace.span(m.field, m.rows, m.columns())


def sum_subspace(u: Subspace, w: Subspace) -> Subspace:
    return u.sum(w)


def intersect_subspace(u: Subspace, w: Subspace) -> Subspace:
    return u.intersect(w)


def contains(sub: Subspace, vector) -> bool:
    return sub.contains(vector)


def complement(ambient: Subspace, sub: Subspace, constraint=None) -> Subspace:
    """Deterministic complement W with ambient = sub ⊕ W.

    Without a constraint, the RREF basis of `ambient` is scanned in order and
    rows independent from `sub` are collected (for ambient = k^n these are
    standard basis vectors).  With `constraint` (a list of Subspaces), both
    ambient and sub must split as direct sums along the blocks, and W is the
    sum of blockwise complements.
    """
    f = ambient.field
    n = ambient.ambient_dim
    if not ambient.contains_subspace(sub):
        raise QuivkitError("NOT_A_SUBSPACE", "sub is not contained in ambient")
    if constraint is not None:
        amb_parts = [ambient.intersect(b) for b in constraint]
        sub_parts = [sub.intersect(b) for b in constraint]
        if sum(p.dim for p in amb_parts) != ambient.dim:
            raise QuivkitError("BLOCKS_NOT_DIRECT",
                               "ambient does not decompose along the blocks")
        if sum(p.dim for p in sub_parts) != sub.dim:
            raise QuivkitError("BLOCKS_NOT_DIRECT",
                               "sub does not decompose along the blocks")
        w = Subspace.zero(f, n)
        for ap, sp in zip(amb_parts, sub_parts):
            w = w.sum(complement(ap, sp))
        if w.dim != ambient.dim - sub.dim:
            raise QuivkitError("BLOCKS_NOT_DIRECT", "blockwise complement failed")
        return w
    added = []
    cur_rows = list(sub.basis)
    cur = Subspace.span(f, n, cur_rows)
    for row in ambient.basis:
        if cur.dim == ambient.dim:
            break
        if not cur.contains(row):
            added.append(row)
            cur_rows.append(row)
            cur = Subspace.span(f, n, cur_rows)
    return Subspace.span(f, n, added)


def quotient_basis(ambient: Subspace, sub: Subspace):
    """Representatives of a basis of ambient/sub plus a projection matrix.

    Returns (reps, proj) where reps is a list of vectors whose classes are a
    basis of the quotient, and proj is a (len(reps) x n) matrix computing
    quotient coordinates for vectors lying in `ambient`.
    """
    if not ambient.contains_subspace(sub):
        raise QuivkitError("NOT_A_SUBSPACE", "sub is not contained in ambient")
    f = ambient.field
    n = ambient.ambient_dim
    w = complement(ambient, sub)
    reps = [list(r) for r in w.basis]
    q = len(reps)
    rows = reps + [list(r) for r in sub.basis]
    if not rows:
        return [], Mat.zeros(f, 0, n)
    n_mat = Mat.from_rows(f, rows, cols=n)
    # proj rows P_i satisfy  N P_i^T = e_i, so P v recovers the rep
    # coefficients of any v = sum y_j (row_j of N) lying in ambient.
    targets = [vec_unit(f, n_mat.rows, i) for i in range(q)]
    prows = solve_multi(n_mat, targets)
    if any(p is None for p in prows):
        raise QuivkitError("INTERNAL", "quotient projection system inconsistent")
    proj = Mat.from_rows(f, prows, cols=n) if prows else Mat.zeros(f, 0, n)
    return reps, proj
