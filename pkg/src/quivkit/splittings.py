"""Constructive Wedderburn-Malcev data.

Lifting a complete set of primitive orthogonal idempotents along the
nilpotent radical, the induced algebra section of A -> A/J, the blockwise
section of J -> J/J^2, and conjugators between two such splittings.
"""

from __future__ import annotations

from .errors import QuivkitError
from .algebra import FinAlgebra
from .exactlin import (
    Mat,
    Subspace,
    complement,
    solve,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vec_zero,
)


class IdempotentSet:
    """A complete set of primitive orthogonal idempotents of an algebra."""

    __slots__ = ("parent", "elements")

    def __init__(self, parent: FinAlgebra, elements, *, verify=True):
        self.parent = parent
        self.elements = [list(e) for e in elements]
        if verify:
            self.verify()

    def verify(self):
        a = self.parent
        f = a.field
        total = vec_zero(f, a.dim)
        for i, e in enumerate(self.elements):
            if vec_is_zero(f, e):
                raise QuivkitError("NOT_VALIDATED", f"idempotent {i} is zero")
            if a.mul(e, e) != e:
                raise QuivkitError("NOT_VALIDATED", f"element {i} is not idempotent")
            total = vec_add(f, total, e)
            for j in range(i):
                if not vec_is_zero(f, a.mul(e, self.elements[j])) or \
                        not vec_is_zero(f, a.mul(self.elements[j], e)):
                    raise QuivkitError("NOT_VALIDATED",
                                       f"idempotents {i},{j} not orthogonal")
        if total != a.unit:
            raise QuivkitError("NOT_VALIDATED", "idempotents do not sum to 1")
        for i, e in enumerate(self.elements):
            if not _is_primitive(a, e):
                raise QuivkitError("NOT_VALIDATED", f"idempotent {i} not primitive")

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"IdempotentSet(r={len(self.elements)})"


def _is_primitive(a: FinAlgebra, e) -> bool:
    """e A e must be local: dim eAe - dim eJe == 1."""
    eae = a.peirce_block(e, e, Subspace.full(a.field, a.dim))
    eje = a.peirce_block(e, e, a.radical)
    return eae.dim - eje.dim == 1


def _idempotize(a: FinAlgebra, x):
    """Cubic iteration x <- 3x^2 - 2x^3; converges when x^2 = x mod J."""
    f = a.field
    three = f.of(3)
    two = f.of(2)
    steps = a.truncation_level.bit_length() + 2
    for _ in range(steps):
        sq = a.mul(x, x)
        if sq == x:
            return x
        cube = a.mul(sq, x)
        x = vec_sub(f, vec_scale(f, three, sq), vec_scale(f, two, cube))
    if a.mul(x, x) == x:
        return x
    raise QuivkitError("NOT_VALIDATED", "idempotent iteration failed to converge")


def lift_idempotents(a: FinAlgebra) -> IdempotentSet:
    """Lift the canonical idempotents of A/J to primitive orthogonal ones.

    Seeds come from the pointedness certificate stored on the algebra.  Each
    seed is framed away from the already-lifted idempotents and pushed to an
    exact idempotent by the cubic iteration; orthogonality to the previous
    ones and completeness of the final family follow from nilpotence of J.
    """
    f = a.field
    lifted = []
    prev_sum = vec_zero(f, a.dim)
    for seed in a.ss_classes:
        frame = vec_sub(f, a.unit, prev_sum)
        x = a.mul(frame, a.mul(seed, frame))
        e = _idempotize(a, x)
        lifted.append(e)
        prev_sum = vec_add(f, prev_sum, e)
    if prev_sum != a.unit:
        raise QuivkitError("NOT_VALIDATED", "lifted idempotents do not sum to 1")
    return IdempotentSet(a, lifted)


class Splitting:
    """A pair (s, t): algebra section of A -> A/J and blockwise section of
    J -> J/J^2, presented through concrete data.

    `idems` lists the lifted primitive idempotents f_i; `blocks[(i, j)]` is a
    list of radical elements spanning a complement of f_j J^2 f_i inside
    f_j J f_i (so their classes are a basis of the (i -> j) arrow space of the
    Gabriel quiver, and mapping classes to these vectors is the section t).
    """

    __slots__ = ("parent", "idems", "blocks")

    def __init__(self, parent: FinAlgebra, idems: IdempotentSet, blocks):
        self.parent = parent
        self.idems = idems
        self.blocks = blocks

    @property
    def rank(self):
        return len(self.idems)

    def s_apply(self, coords):
        """Section A/J -> A on canonical coordinates (one per idempotent)."""
        f = self.parent.field
        out = vec_zero(f, self.parent.dim)
        for c, e in zip(coords, self.idems.elements):
            if c != f.zero:
                out = vec_add(f, out, vec_scale(f, c, e))
        return out

    def block_vectors(self, i, j):
        return self.blocks.get((i, j), [])

    def total_block_dim(self):
        return sum(len(v) for v in self.blocks.values())

    def __repr__(self):
        return f"Splitting(r={self.rank}, arrows={self.total_block_dim()})"


def conjugate_element(a: FinAlgebra, w, x):
    """(1+w) x (1+w)^{-1} for w in the radical (exact geometric inverse)."""
    f = a.field
    one_plus = vec_add(f, a.unit, w)
    inv = a.unit
    term = a.unit
    for _ in range(a.truncation_level + 1):
        term = vec_scale(f, f.neg(f.one), a.mul(term, w))
        if vec_is_zero(f, term):
            break
        inv = vec_add(f, inv, term)
    if a.mul(one_plus, inv) != a.unit:
        raise QuivkitError("NOT_VALIDATED", "1+w is not invertible (w outside J?)")
    return a.mul(one_plus, a.mul(x, inv))


def make_splitting(a: FinAlgebra, *, conjugate_by=None, t_shift=None) -> Splitting:
    """Build a splitting; deterministic given the algebra.

    `conjugate_by` (an element of J) replaces every idempotent by its
    conjugate under 1+w, and `t_shift` perturbs the section of J -> J/J^2 by
    adding block-compatible elements of J^2; both knobs produce a different
    but equally valid splitting, which downstream independence checks use.
    """
    f = a.field
    idems = lift_idempotents(a)
    elements = idems.elements
    if conjugate_by is not None:
        if not a.radical.contains(conjugate_by):
            raise QuivkitError("BAD_ARGUMENT", "conjugator must lie in J")
        elements = [conjugate_element(a, conjugate_by, e) for e in elements]
        idems = IdempotentSet(a, elements)
    j1 = a.radical
    j2 = a.radical_power(2)
    blocks = {}
    r = len(elements)
    for i in range(r):
        for j in range(r):
            amb = a.peirce_block(elements[j], elements[i], j1)
            sub = a.peirce_block(elements[j], elements[i], j2)
            w_space = complement(amb, sub)
            vecs = [list(v) for v in w_space.basis]
            if t_shift is not None:
                shifted = []
                for k, v in enumerate(vecs):
                    extra = t_shift(i, j, k, sub)
                    if extra is not None:
                        if not sub.contains(extra):
                            raise QuivkitError("BAD_ARGUMENT",
                                               "t shift must land in the J^2 block")
                        v = vec_add(f, v, extra)
                    shifted.append(v)
                vecs = shifted
            if vecs:
                blocks[(i, j)] = vecs
    split = Splitting(a, idems, blocks)
    if split.total_block_dim() != j1.dim - j2.dim:
        raise QuivkitError("NOT_VALIDATED", "block dimensions do not add up")
    return split


def conjugator(s1: Splitting, s2: Splitting):
    """w in J with (1+w) s2(z) (1+w)^{-1} = s1(z) for all z in A/J.

    The conjugation identity is linear in w once cleared of the inverse, so w
    is found as the pivot-minimal solution of a linear system constrained to
    J.  Inconsistency would contradict the uniqueness theory and raises
    NO_CONJUGATOR.
    """
    a = s1.parent
    if a is not s2.parent and not a.same_as(s2.parent):
        raise QuivkitError("BAD_ARGUMENT", "splittings of different algebras")
    f = a.field
    jbasis = a.radical.basis
    if not jbasis:
        return vec_zero(f, a.dim)
    # (1+w) f2_i = f1_i (1+w)  <=>  w f2_i - f1_i w = f1_i - f2_i
    rows = []
    rhs = []
    for e1, e2 in zip(s1.idems.elements, s2.idems.elements):
        cols = []
        for jb in jbasis:
            cols.append(vec_sub(f, a.mul(jb, e2), a.mul(e1, jb)))
        block = Mat.from_cols(f, cols, rows=a.dim)
        rows.extend(block.data)
        rhs.extend(vec_sub(f, e1, e2))
    system = Mat.from_rows(f, rows, cols=len(jbasis))
    sol = solve(system, rhs)
    if sol is None:
        raise QuivkitError("NO_CONJUGATOR",
                           "conjugation system inconsistent (internal)")
    w = vec_zero(f, a.dim)
    for c, jb in zip(sol, jbasis):
        if c != f.zero:
            w = vec_add(f, w, vec_scale(f, c, jb))
    for e1, e2 in zip(s1.idems.elements, s2.idems.elements):
        if conjugate_element(a, w, e2) != e1:
            raise QuivkitError("NO_CONJUGATOR", "conjugator verification failed")
    return w


def same_orbit(a: FinAlgebra, e, f_idem):
    """Decide whether two primitive idempotents are conjugate under 1+J.

    Returns (bool, witness): the membership test is e - f in J, and when it
    holds a witness w with (1+w) e (1+w)^{-1} = f is produced by solving the
    linear conjugation system.
    """
    f = a.field
    diff = vec_sub(f, e, f_idem)
    if not a.radical.contains(diff):
        return False, None
    if e == f_idem:
        return True, vec_zero(f, a.dim)
    jbasis = a.radical.basis
    # (1+w) e = f (1+w)  <=>  w e - f w = f - e
    cols = []
    for jb in jbasis:
        cols.append(vec_sub(f, a.mul(jb, e), a.mul(f_idem, jb)))
    system = Mat.from_cols(f, cols, rows=a.dim)
    sol = solve(system, vec_sub(f, f_idem, e))
    if sol is None:
        raise QuivkitError("NO_CONJUGATOR",
                           "orbit witness system inconsistent (internal)")
    w = vec_zero(f, a.dim)
    for c, jb in zip(sol, jbasis):
        if c != f.zero:
            w = vec_add(f, w, vec_scale(f, c, jb))
    if conjugate_element(a, w, e) != f_idem:
        raise QuivkitError("NO_CONJUGATOR", "orbit witness verification failed")
    return True, w
