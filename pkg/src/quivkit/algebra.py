"""Finite-dimensional pointed associative algebras given by structure constants.

An algebra is admitted only if it is associative, unital, has nilpotent
radical and a radical quotient isomorphic to a product of copies of the base
field.  Constructions that build algebras from presentations (path algebras,
quotients) pass verified radical/idempotent hints, which keeps every field
characteristic usable; raw structure-constant input computes the radical from
the trace form, which requires char 0 or p > dim.
"""

from __future__ import annotations

from .errors import QuivkitError
from .exactlin import (
    Mat,
    Subspace,
    kernel,
    quotient_basis,
    rank,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vec_unit,
    vec_zero,
)


class FinAlgebra:
    """Associative unital algebra over an exact field, by structure constants.

    `structconst[i][j]` is the coordinate vector of b_i * b_j.  The radical
    filtration [A, J, J^2, ..., 0] is computed at validation time and cached;
    `truncation_level` is the least n with J^n = 0.  `ss_classes` are vectors
    whose images mod J are the canonical primitive orthogonal idempotents of
    A/J (they certify pointedness and seed idempotent lifting).
    """

    __slots__ = ("field", "dim", "basis_labels", "structconst", "unit",
                 "radical_filtration", "truncation_level", "ss_classes",
                 "_label_index", "_left_mats", "_right_mats", "_rq",
                 "_splitting_cache")

    def __init__(self, field, basis_labels, structconst, unit,
                 radical_filtration, ss_classes):
        self.field = field
        self.dim = len(basis_labels)
        self.basis_labels = list(basis_labels)
        self.structconst = structconst
        self.unit = unit
        self.radical_filtration = radical_filtration
        self.truncation_level = len(radical_filtration) - 1
        self.ss_classes = ss_classes
        self._label_index = {lab: i for i, lab in enumerate(basis_labels)}
        self._left_mats = None
        self._right_mats = None
        self._rq = None
        self._splitting_cache = None

    # -- elements ----------------------------------------------------------

    def basis_vector(self, i):
        return vec_unit(self.field, self.dim, i)

    def element(self, label):
        return self.basis_vector(self._label_index[label])

    def label_index(self, label):
        return self._label_index[label]

    def mul(self, x, y):
        f = self.field
        out = vec_zero(f, self.dim)
        sc = self.structconst
        for i, xi in enumerate(x):
            if xi == f.zero:
                continue
            sci = sc[i]
            for j, yj in enumerate(y):
                if yj == f.zero:
                    continue
                c = f.mul(xi, yj)
                row = sci[j]
                for m, cm in enumerate(row):
                    if cm != f.zero:
                        out[m] = f.add(out[m], f.mul(c, cm))
        return out

    def power(self, x, n):
        acc = self.unit
        for _ in range(n):
            acc = self.mul(acc, x)
        return acc

    def _basis_left_mats(self):
        if self._left_mats is None:
            f = self.field
            mats = []
            for i in range(self.dim):
                cols = [self.structconst[i][j] for j in range(self.dim)]
                mats.append(Mat.from_cols(f, cols, rows=self.dim))
            self._left_mats = mats
        return self._left_mats

    def _basis_right_mats(self):
        if self._right_mats is None:
            f = self.field
            mats = []
            for j in range(self.dim):
                cols = [self.structconst[i][j] for i in range(self.dim)]
                mats.append(Mat.from_cols(f, cols, rows=self.dim))
            self._right_mats = mats
        return self._right_mats

    def left_mult(self, x) -> Mat:
        f = self.field
        out = Mat.zeros(f, self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi == f.zero:
                continue
            out = out.add(self._basis_left_mats()[i].scale(xi))
        return out

    def right_mult(self, x) -> Mat:
        f = self.field
        out = Mat.zeros(f, self.dim, self.dim)
        for j, xj in enumerate(x):
            if xj == f.zero:
                continue
            out = out.add(self._basis_right_mats()[j].scale(xj))
        return out

    # -- radical -----------------------------------------------------------

    @property
    def radical(self) -> Subspace:
        return self.radical_filtration[1]

    def radical_power(self, n: int) -> Subspace:
        if n < 0:
            raise QuivkitError("BAD_ARGUMENT", "n must be >= 0")
        if n >= len(self.radical_filtration):
            return Subspace.zero(self.field, self.dim)
        return self.radical_filtration[n]

    def radical_quotient(self):
        """Cached (reps, proj) for A -> A/J in the canonical quotient basis."""
        if self._rq is None:
            full = Subspace.full(self.field, self.dim)
            self._rq = quotient_basis(full, self.radical)
        return self._rq

    # -- subspace arithmetic -----------------------------------------------

    def subspace_product(self, u: Subspace, w: Subspace) -> Subspace:
        prods = []
        for x in u.basis:
            for y in w.basis:
                prods.append(self.mul(x, y))
        return Subspace.span(self.field, self.dim, prods)

    def peirce_block(self, left_idem, right_idem, space: Subspace) -> Subspace:
        """Subspace  left_idem * space * right_idem."""
        vecs = [self.mul(left_idem, self.mul(v, right_idem)) for v in space.basis]
        return Subspace.span(self.field, self.dim, vecs)

    def same_as(self, other: "FinAlgebra") -> bool:
        if self is other:
            return True
        return (self.field == other.field and self.dim == other.dim
                and self.basis_labels == other.basis_labels
                and self.unit == other.unit
                and self.structconst == other.structconst)

    def __repr__(self):
        return f"FinAlgebra(dim={self.dim}, field={self.field!r})"


class IdealSubspace:
    """A two-sided ideal of a FinAlgebra, held as a Subspace."""

    __slots__ = ("parent", "space")

    def __init__(self, parent: FinAlgebra, space: Subspace):
        self.parent = parent
        self.space = space

    @property
    def dim(self):
        return self.space.dim

    def __eq__(self, other):
        return (isinstance(other, IdealSubspace)
                and self.parent.same_as(other.parent)
                and self.space == other.space)

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"IdealSubspace(dim={self.dim})"


class AlgMorphism:
    """Linear map between FinAlgebras known to be a valid morphism.

    Build through `validate_morphism` (or the constructions that guarantee
    validity); `matrix` is target-dim x source-dim and acts on coordinate
    columns.
    """

    __slots__ = ("source", "target", "matrix", "surjective")

    def __init__(self, source, target, matrix, surjective):
        self.source = source
        self.target = target
        self.matrix = matrix
        self.surjective = surjective

    def apply(self, v):
        return self.matrix.matvec(v)

    def compose(self, other: "AlgMorphism") -> "AlgMorphism":
        """self ∘ other (apply `other` first)."""
        if not other.target.same_as(self.source):
            raise QuivkitError("NOT_COMPOSABLE", "morphism targets do not line up")
        m = self.matrix.matmul(other.matrix)
        return AlgMorphism(other.source, self.target, m,
                           surjective=rank(m) == self.target.dim)

    def inverse(self) -> "AlgMorphism":
        from .exactlin import invert
        inv = invert(self.matrix)
        return AlgMorphism(self.target, self.source, inv, surjective=True)

    def is_identity(self) -> bool:
        return (self.source is self.target
                and self.matrix == Mat.identity(self.matrix.field, self.source.dim))

    def __eq__(self, other):
        return (isinstance(other, AlgMorphism)
                and self.source.same_as(other.source)
                and self.target.same_as(other.target)
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"AlgMorphism({self.source.dim} -> {self.target.dim})"


def identity_morphism(a: FinAlgebra) -> AlgMorphism:
    return AlgMorphism(a, a, Mat.identity(a.field, a.dim), surjective=True)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _check_unit(field, dim, sc, unit):
    for j in range(dim):
        bj = vec_unit(field, dim, j)
        left = _mul_raw(field, dim, sc, unit, bj)
        right = _mul_raw(field, dim, sc, bj, unit)
        if left != bj or right != bj:
            raise QuivkitError("UNIT_FAIL", f"unit fails on basis element {j}")


def _mul_raw(field, dim, sc, x, y):
    out = vec_zero(field, dim)
    for i, xi in enumerate(x):
        if xi == field.zero:
            continue
        for j, yj in enumerate(y):
            if yj == field.zero:
                continue
            c = field.mul(xi, yj)
            for m, cm in enumerate(sc[i][j]):
                if cm != field.zero:
                    out[m] = field.add(out[m], field.mul(c, cm))
    return out


def _check_associativity(field, dim, sc):
    for i in range(dim):
        for j in range(dim):
            ij = sc[i][j]
            for l in range(dim):
                left = _mul_raw(field, dim, sc, ij, vec_unit(field, dim, l))
                right = _mul_raw(field, dim, sc, vec_unit(field, dim, i), sc[j][l])
                if left != right:
                    raise QuivkitError(
                        "ASSOCIATIVITY_FAIL",
                        f"(b{i} b{j}) b{l} != b{i} (b{j} b{l})")


def trace_form_radical(a_or_data) -> Subspace:
    """Radical as the kernel of the trace form x -> (y -> tr(L_{xy})).

    Valid over characteristic 0, and over F_p when p > dim (otherwise raises
    CHAR_TOO_SMALL).  Works on a FinAlgebra or on raw (field, sc) data.
    """
    if isinstance(a_or_data, FinAlgebra):
        field, dim, sc = a_or_data.field, a_or_data.dim, a_or_data.structconst
    else:
        field, dim, sc = a_or_data
    if 0 < field.char <= dim:
        raise QuivkitError(
            "CHAR_TOO_SMALL",
            f"trace criterion needs char 0 or p > dim; got p={field.char}, dim={dim}")
    # tr(L_{b_m}) for each m
    tr = []
    for m in range(dim):
        acc = field.zero
        for l in range(dim):
            acc = field.add(acc, sc[m][l][l])
        tr.append(acc)
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            acc = field.zero
            for m, cm in enumerate(sc[i][j]):
                if cm != field.zero:
                    acc = field.add(acc, field.mul(cm, tr[m]))
            row.append(acc)
        rows.append(row)
    return kernel(Mat.from_rows(field, rows, cols=dim))


def _is_two_sided_ideal(field, dim, sc, space: Subspace) -> bool:
    for v in space.basis:
        for i in range(dim):
            bi = vec_unit(field, dim, i)
            if not space.contains(_mul_raw(field, dim, sc, bi, v)):
                return False
            if not space.contains(_mul_raw(field, dim, sc, v, bi)):
                return False
    return True


def _radical_filtration(field, dim, sc, j_space: Subspace):
    filtration = [Subspace.full(field, dim), j_space]
    cur = j_space
    while cur.dim > 0:
        prods = []
        for x in j_space.basis:
            for y in cur.basis:
                prods.append(_mul_raw(field, dim, sc, x, y))
        nxt = Subspace.span(field, dim, prods)
        if nxt.dim >= cur.dim:
            raise QuivkitError("RADICAL_NOT_NILPOTENT",
                               "radical powers do not descend to zero")
        filtration.append(nxt)
        cur = nxt
    return filtration


def _verify_pointed_classes(field, dim, sc, unit, j_space, classes):
    """Check that `classes` certify A/J = k^r (orthogonal idempotent classes)."""
    r = dim - j_space.dim
    if len(classes) != r:
        raise QuivkitError("NOT_POINTED",
                           f"expected {r} idempotent classes, got {len(classes)}")
    for i, c in enumerate(classes):
        if j_space.contains(c):
            raise QuivkitError("NOT_POINTED", f"class {i} vanishes mod J")
        sq = _mul_raw(field, dim, sc, c, c)
        if not j_space.contains(vec_sub(field, sq, c)):
            raise QuivkitError("NOT_POINTED", f"class {i} is not idempotent mod J")
        for j2 in range(i):
            pr = _mul_raw(field, dim, sc, c, classes[j2])
            pr2 = _mul_raw(field, dim, sc, classes[j2], c)
            if not j_space.contains(pr) or not j_space.contains(pr2):
                raise QuivkitError("NOT_POINTED",
                                   f"classes {i},{j2} not orthogonal mod J")
    total = vec_zero(field, dim)
    for c in classes:
        total = vec_add(field, total, c)
    if not j_space.contains(vec_sub(field, total, unit)):
        raise QuivkitError("NOT_POINTED", "classes do not sum to 1 mod J")


def _semisimple_pointed_classes(field, dim, sc, unit, j_space):
    """Split A/J into one-dimensional blocks; NOT_POINTED if impossible.

    Returns class representatives (vectors in A).  Eigenvalues of
    multiplication operators are found by exact factorization of
    characteristic polynomials (sympy), everything else is plain linear
    algebra over the field.
    """
    full = Subspace.full(field, dim)
    reps, proj = quotient_basis(full, j_space)
    qdim = len(reps)

    def lift(u):
        out = vec_zero(field, dim)
        for c, rep in zip(u, reps):
            if c != field.zero:
                out = vec_add(field, out, vec_scale(field, c, rep))
        return out

    def qmul(u, v):
        return proj.matvec(_mul_raw(field, dim, sc, lift(u), lift(v)))

    # commutativity of the radical quotient is necessary for pointedness
    for i in range(qdim):
        ei = vec_unit(field, qdim, i)
        for j in range(i):
            ej = vec_unit(field, qdim, j)
            if qmul(ei, ej) != qmul(ej, ei):
                raise QuivkitError("NOT_POINTED", "A/J is not commutative")

    idems = [proj.matvec(unit)]
    for x_idx in range(qdim):
        x = vec_unit(field, qdim, x_idx)
        new_idems = []
        for u in idems:
            block = Subspace.span(field, qdim,
                                  [qmul(u, vec_unit(field, qdim, j)) for j in range(qdim)])
            if block.dim <= 1:
                new_idems.append(u)
                continue
            ux = qmul(u, x)
            # matrix of multiplication by ux on the block, in block coordinates
            cols = []
            for bvec in block.basis:
                w = qmul(ux, bvec)
                coords = block.coords_of(w)
                if coords is None:
                    raise QuivkitError("INTERNAL", "block not multiplication-stable")
                cols.append(coords)
            m = Mat.from_cols(field, cols, rows=block.dim)
            roots = _split_eigenvalues(field, m)
            if roots is None:
                raise QuivkitError("NOT_POINTED",
                                   "A/J has a simple factor larger than k")
            # diagonalizability certificate: prod (M - r I) must vanish
            probe = Mat.identity(field, block.dim)
            for r_val in roots:
                probe = probe.matmul(m.sub(Mat.identity(field, block.dim).scale(r_val)))
            if not probe.is_zero():
                raise QuivkitError("NOT_POINTED",
                                   "A/J is not semisimple over k")
            if len(roots) == 1:
                new_idems.append(u)
                continue
            ucoords = block.coords_of(u)
            if ucoords is None:
                raise QuivkitError("INTERNAL", "unit piece outside its own block")
            for r_val in roots:
                piece = ucoords
                for other in roots:
                    if other == r_val:
                        continue
                    shifted = m.sub(Mat.identity(field, block.dim).scale(other))
                    piece = shifted.matvec(piece)
                    piece = vec_scale(field,
                                      field.inv(field.sub(r_val, other)), piece)
                out = vec_zero(field, qdim)
                for c, bvec in zip(piece, block.basis):
                    if c != field.zero:
                        out = vec_add(field, out, vec_scale(field, c, bvec))
                new_idems.append(out)
        idems = [u for u in new_idems if not vec_is_zero(field, u)]
    if len(idems) != qdim:
        raise QuivkitError("NOT_POINTED",
                           f"A/J splits into {len(idems)} blocks, dim is {qdim}")
    idems.sort(key=lambda u: tuple(u))
    return [lift(u) for u in idems]


def _split_eigenvalues(field, m: Mat):
    """Distinct eigenvalues of m in the base field, or None if any live outside."""
    import sympy

    n = m.rows
    lam = sympy.Symbol("lam")
    if field.char == 0:
        sm = sympy.Matrix(n, n, lambda i, j: sympy.Rational(m.data[i][j]))
        poly = sm.charpoly(lam)
        factors = sympy.Poly(poly.as_expr(), lam, domain="QQ").factor_list()[1]
    else:
        sm = sympy.Matrix(n, n, lambda i, j: int(m.data[i][j]))
        poly = sm.charpoly(lam)
        factors = sympy.Poly(poly.as_expr(), lam, modulus=field.char).factor_list()[1]
    roots = []
    for fac, _mult in factors:
        if fac.degree() > 1:
            return None
        coeffs = fac.all_coeffs()  # [c1, c0] for c1*lam + c0
        c1, c0 = coeffs if len(coeffs) == 2 else (coeffs[0], 0)
        if field.char == 0:
            from fractions import Fraction
            root = -Fraction(int(sympy.numer(c0)), int(sympy.denom(c0))) / \
                Fraction(int(sympy.numer(c1)), int(sympy.denom(c1)))
            roots.append(field.of(root))
        else:
            p = field.char
            root = (-int(c0)) * pow(int(c1), -1, p) % p
            roots.append(root)
    out = []
    for r in roots:
        if r not in out:
            out.append(r)
    out.sort()
    return out


def validate_algebra(field, basis_labels, structconst, unit, *,
                     radical_hint=None, ss_class_hint=None,
                     check_associativity=True) -> FinAlgebra:
    """Validate raw data and build a FinAlgebra.

    `structconst[i][j]` must be the coordinate vector of b_i b_j; entries are
    coerced through the field.  Constructions that already know the radical
    (path algebras, quotients) pass `radical_hint` and `ss_class_hint`; both
    are fully re-verified here, so hints can never smuggle in a wrong radical.
    """
    dim = len(basis_labels)
    if dim == 0:
        raise QuivkitError("BAD_SHAPE", "algebras must have positive dimension")
    if len(set(basis_labels)) != dim:
        raise QuivkitError("BAD_SHAPE", "basis labels must be unique")
    sc = [[[field.of(c) for c in structconst[i][j]] for j in range(dim)]
          for i in range(dim)]
    for i in range(dim):
        for j in range(dim):
            if len(sc[i][j]) != dim:
                raise QuivkitError("BAD_SHAPE", "structure constant vector length")
    unit = [field.of(c) for c in unit]
    if len(unit) != dim:
        raise QuivkitError("BAD_SHAPE", "unit vector length")
    _check_unit(field, dim, sc, unit)
    if check_associativity:
        _check_associativity(field, dim, sc)
    if radical_hint is not None:
        j_space = radical_hint
        if not _is_two_sided_ideal(field, dim, sc, j_space):
            raise QuivkitError("RADICAL_NOT_NILPOTENT",
                               "radical hint is not a two-sided ideal")
    else:
        j_space = trace_form_radical((field, dim, sc))
        if not _is_two_sided_ideal(field, dim, sc, j_space):
            raise QuivkitError("RADICAL_NOT_NILPOTENT",
                               "trace-form kernel is not an ideal")
    filtration = _radical_filtration(field, dim, sc, j_space)
    if ss_class_hint is not None:
        classes = [[field.of(c) for c in v] for v in ss_class_hint]
        _verify_pointed_classes(field, dim, sc, unit, j_space, classes)
    else:
        classes = _semisimple_pointed_classes(field, dim, sc, unit, j_space)
        _verify_pointed_classes(field, dim, sc, unit, j_space, classes)
    return FinAlgebra(field, basis_labels, sc, unit, filtration, classes)


def radical(a: FinAlgebra) -> Subspace:
    return a.radical


def radical_power(a: FinAlgebra, n: int) -> Subspace:
    return a.radical_power(n)


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

def validate_morphism(source: FinAlgebra, target: FinAlgebra, matrix: Mat,
                      ) -> AlgMorphism:
    """Admit a linear map as an algebra morphism.

    Checks: unital, multiplicative on all basis pairs, radical preservation,
    and surjectivity of the induced map on radical quotients (the admission
    condition for this category of pointed algebras).
    """
    if source.field != target.field:
        raise QuivkitError("BAD_FIELD", "source and target fields differ")
    if matrix.rows != target.dim or matrix.cols != source.dim:
        raise QuivkitError("BAD_SHAPE", "morphism matrix has wrong shape")
    f = source.field
    if matrix.matvec(source.unit) != target.unit:
        raise QuivkitError("NOT_UNITAL", "matrix does not send 1 to 1")
    cols = matrix.columns()
    for i in range(source.dim):
        ci = cols[i]
        for j in range(source.dim):
            lhs = matrix.matvec(source.structconst[i][j])
            rhs = target.mul(ci, cols[j])
            if lhs != rhs:
                raise QuivkitError(
                    "NOT_MULTIPLICATIVE",
                    f"fails on basis pair ({source.basis_labels[i]}, "
                    f"{source.basis_labels[j]})")
    # radical preservation (automatic for pointed targets; re-verified)
    jt = target.radical
    for v in source.radical.basis:
        if not jt.contains(matrix.matvec(v)):
            raise QuivkitError("RADICAL_NOT_PRESERVED",
                               "image of J(A) escapes J(B)")
    # induced map on radical quotients must be onto
    reps_s, _proj_s = source.radical_quotient()
    _reps_t, proj_t = target.radical_quotient()
    ind_cols = [proj_t.matvec(matrix.matvec(r)) for r in reps_s]
    r_t = target.dim - jt.dim
    if ind_cols:
        ind = Mat.from_cols(f, ind_cols, rows=r_t)
        ok = rank(ind) == r_t
    else:
        ok = r_t == 0
    if not ok:
        raise QuivkitError("RADICAL_QUOTIENT_NOT_SURJECTIVE",
                           "induced map A/J(A) -> B/J(B) is not onto")
    return AlgMorphism(source, target, matrix,
                       surjective=rank(matrix) == target.dim)


def morphism_from_images(source: FinAlgebra, target: FinAlgebra, images):
    """Morphism determined by images of the source basis vectors."""
    m = Mat.from_cols(source.field, images, rows=target.dim)
    return validate_morphism(source, target, m)


def image_of_radical_check(alpha: AlgMorphism) -> bool:
    """True iff alpha(J^n(A)) equals J^n(B) for every n up to truncation."""
    depth = max(alpha.source.truncation_level, alpha.target.truncation_level)
    for n in range(depth + 1):
        jn_a = alpha.source.radical_power(n)
        jn_b = alpha.target.radical_power(n)
        img = Subspace.span(alpha.target.field, alpha.target.dim,
                            [alpha.apply(v) for v in jn_a.basis])
        if img != jn_b:
            return False
    return True


# ---------------------------------------------------------------------------
# ideals and quotients
# ---------------------------------------------------------------------------

def ideal_subspace(a: FinAlgebra, space: Subspace) -> IdealSubspace:
    """Admit a subspace as a two-sided ideal (error NOT_AN_IDEAL otherwise)."""
    if space.ambient_dim != a.dim:
        raise QuivkitError("BAD_SHAPE", "ideal ambient dimension mismatch")
    if not _is_two_sided_ideal(a.field, a.dim, a.structconst, space):
        raise QuivkitError("NOT_AN_IDEAL", "subspace is not a two-sided ideal")
    return IdealSubspace(a, space)


def ideal_generated_by(a: FinAlgebra, vectors) -> IdealSubspace:
    """Two-sided ideal closure of a list of elements."""
    f = a.field
    cur = Subspace.span(f, a.dim, [list(v) for v in vectors])
    while True:
        prods = []
        for v in cur.basis:
            for i in range(a.dim):
                bi = a.basis_vector(i)
                prods.append(a.mul(bi, v))
                prods.append(a.mul(v, bi))
        nxt = Subspace.span(f, a.dim, list(cur.basis) + prods)
        if nxt.dim == cur.dim:
            return IdealSubspace(a, nxt)
        cur = nxt


def is_relation_ideal(ideal: IdealSubspace) -> bool:
    """True iff the ideal sits inside J^2."""
    return ideal.parent.radical_power(2).contains_subspace(ideal.space)


def is_admissible(ideal: IdealSubspace) -> bool:
    """True iff some radical power J^n lies inside the ideal.

    Every object here is truncated, so J^(truncation_level) = 0 is contained
    in any ideal and the answer is always True; at finite truncation the
    admissible/finite-dimensional dichotomy collapses.
    """
    a = ideal.parent
    for n in range(a.truncation_level + 1):
        if ideal.space.contains_subspace(a.radical_power(n)):
            return True
    return False


def quotient_algebra(a: FinAlgebra, ideal: IdealSubspace):
    """Quotient A/I with induced structure constants, plus the projection.

    Returns (Q, pi) where pi is the canonical surjection with kernel I.  The
    radical of Q is the image of J(A) (surjections map radicals onto
    radicals), so no trace-form computation is needed.
    """
    if not a.same_as(ideal.parent):
        raise QuivkitError("BAD_ARGUMENT", "ideal belongs to a different algebra")
    if not _is_two_sided_ideal(a.field, a.dim, a.structconst, ideal.space):
        raise QuivkitError("NOT_AN_IDEAL", "quotient by a non-ideal")
    f = a.field
    full = Subspace.full(f, a.dim)
    reps, proj = quotient_basis(full, ideal.space)
    qdim = len(reps)
    if qdim == 0:
        raise QuivkitError("BAD_ARGUMENT", "quotient by the whole algebra")
    labels = []
    for r_vec in reps:
        nz = [i for i, c in enumerate(r_vec) if c != f.zero]
        if len(nz) == 1 and r_vec[nz[0]] == f.one:
            labels.append(a.basis_labels[nz[0]])
        else:
            labels.append(f"q{len(labels)}")
    if len(set(labels)) != qdim:
        labels = [f"q{i}" for i in range(qdim)]
    sc = [[proj.matvec(a.mul(reps[i], reps[j])) for j in range(qdim)]
          for i in range(qdim)]
    unit_q = proj.matvec(a.unit)
    j_img = Subspace.span(f, qdim, [proj.matvec(v) for v in a.radical.basis])
    class_imgs = []
    for c in a.ss_classes:
        img = proj.matvec(c)
        if not j_img.contains(img):
            class_imgs.append(img)
    q = validate_algebra(f, labels, sc, unit_q,
                         radical_hint=j_img, ss_class_hint=class_imgs,
                         check_associativity=False)
    pi = validate_morphism(a, q, proj)
    if kernel(pi.matrix) != ideal.space:
        raise QuivkitError("INTERNAL", "projection kernel mismatch")
    return q, pi
