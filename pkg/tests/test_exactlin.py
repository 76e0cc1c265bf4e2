"""Exact linear algebra: examples plus hypothesis property checks."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import quivkit.exactlin as el
from quivkit.errors import QuivkitError

QQ = el.QQ
F2 = el.GF(2)
F5 = el.GF(5)


def mat(field, rows):
    return el.Mat.from_rows(field, [[field.of(x) for x in r] for r in rows],
                            cols=len(rows[0]) if rows else 0)


def test_field_basics():
    assert QQ.of("3") == Fraction(3)
    assert QQ.parse("3/7") == Fraction(3, 7)
    assert QQ.fmt(Fraction(-3, 7)) == "-3/7"
    assert F5.of(Fraction(1, 2)) == 3
    assert F5.fmt(2) == "2 mod 5"
    assert F5.parse("2 mod 5") == 2
    assert F5.inv(3) == 2
    with pytest.raises(QuivkitError):
        el.GF(6)
    assert el.field_by_name("F5") == F5
    assert el.field_by_name("Q") == QQ


def test_rref_identity():
    m = el.Mat.identity(QQ, 2)
    red, piv = el.rref(m)
    assert red == m and piv == [0, 1]


def test_rref_rank_one_rational():
    red, piv = el.rref(mat(QQ, [[2, 4], [1, 2]]))
    assert red.data == [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(0)]]
    assert piv == [0]


def test_rref_mod_two():
    red, piv = el.rref(mat(F2, [[1, 1], [1, 1]]))
    assert red.data == [[1, 1], [0, 0]]
    assert piv == [0]


def test_kernel_examples():
    assert el.kernel(el.Mat.zeros(QQ, 2, 3)).dim == 3
    assert el.kernel(el.Mat.identity(QQ, 2)).dim == 0
    k = el.kernel(mat(QQ, [[1, 1]]))
    assert k.dim == 1
    assert k.contains([QQ.of(1), QQ.of(-1)])


def test_quotient_basis_examples():
    full2 = el.Subspace.full(QQ, 2)
    reps, proj = el.quotient_basis(full2, el.Subspace.zero(QQ, 2))
    assert len(reps) == 2 and proj.matmul(el.Mat.identity(QQ, 2)) == proj
    line = el.Subspace.span(QQ, 2, [[QQ.of(1), QQ.of(0)]])
    reps, proj = el.quotient_basis(full2, line)
    assert len(reps) == 1
    # the class of (3, 5) equals 5 times the class of the representative
    assert proj.matvec([QQ.of(3), QQ.of(5)]) == [QQ.of(5)]


def test_intersection_of_axes_is_zero():
    x_axis = el.Subspace.span(QQ, 2, [[QQ.of(1), QQ.of(0)]])
    y_axis = el.Subspace.span(QQ, 2, [[QQ.of(0), QQ.of(1)]])
    assert x_axis.intersect(y_axis).dim == 0


def test_complement_examples():
    full2 = el.Subspace.full(QQ, 2)
    assert el.complement(full2, el.Subspace.zero(QQ, 2)) == full2
    diag = el.Subspace.span(QQ, 2, [[QQ.of(1), QQ.of(1)]])
    w = el.complement(full2, diag)
    assert w.dim == 1
    assert w.sum(diag) == full2 and w.intersect(diag).dim == 0
    # deterministic: recomputation gives the same basis
    assert el.complement(full2, diag) == w


def test_complement_requires_containment():
    line = el.Subspace.span(QQ, 2, [[QQ.of(1), QQ.of(0)]])
    other = el.Subspace.span(QQ, 2, [[QQ.of(0), QQ.of(1)]])
    with pytest.raises(QuivkitError) as exc:
        el.complement(line, other)
    assert exc.value.code == "NOT_A_SUBSPACE"


def test_blockwise_complement():
    # ambient spanned by e0,e1,e2 inside k^4; sub = span{e2};
    # blocks: span{e0, e2} and span{e1, e3}
    f = QQ
    amb = el.Subspace.span(f, 4, [el.vec_unit(f, 4, i) for i in (0, 1, 2)])
    sub = el.Subspace.span(f, 4, [el.vec_unit(f, 4, 2)])
    b1 = el.Subspace.span(f, 4, [el.vec_unit(f, 4, 0), el.vec_unit(f, 4, 2)])
    b2 = el.Subspace.span(f, 4, [el.vec_unit(f, 4, 1), el.vec_unit(f, 4, 3)])
    w = el.complement(amb, sub, constraint=[b1, b2])
    assert w.dim == 2
    assert w.sum(sub) == amb
    assert w.intersect(sub).dim == 0


def test_blockwise_complement_on_triangle_radical():
    # ambient = radical of the triangle path algebra, sub = its square,
    # blocks = the Peirce pieces; the complement is the arrow span
    import quivkit as qk
    from corpus import triangle_algebra

    t = triangle_algebra()
    a = t.carrier
    j1, j2 = a.radical, a.radical_power(2)
    idems = qk.lift_idempotents(a)
    blocks = []
    for fi in idems.elements:
        for fj in idems.elements:
            blocks.append(a.peirce_block(fj, fi, el.Subspace.full(QQ, a.dim)))
    w = el.complement(j1, j2, constraint=blocks)
    expected = el.Subspace.span(QQ, 7, [a.element(l) for l in ("a", "b", "c")])
    assert w == expected


def test_blockwise_complement_rejects_bad_blocks():
    f = QQ
    amb = el.Subspace.span(f, 2, [[f.of(1), f.of(1)]])
    sub = el.Subspace.zero(f, 2)
    b1 = el.Subspace.span(f, 2, [el.vec_unit(f, 2, 0)])
    b2 = el.Subspace.span(f, 2, [el.vec_unit(f, 2, 1)])
    with pytest.raises(QuivkitError) as exc:
        el.complement(amb, sub, constraint=[b1, b2])
    assert exc.value.code == "BLOCKS_NOT_DIRECT"


def test_solve_and_invert():
    m = mat(QQ, [[1, 2], [3, 4]])
    x = el.solve(m, [QQ.of(5), QQ.of(6)])
    assert m.matvec(x) == [QQ.of(5), QQ.of(6)]
    inv = el.invert(m)
    assert m.matmul(inv) == el.Mat.identity(QQ, 2)
    with pytest.raises(QuivkitError):
        el.invert(mat(QQ, [[1, 2], [2, 4]]))
    assert el.solve(mat(QQ, [[1, 1], [1, 1]]), [QQ.of(0), QQ.of(1)]) is None


# -- property tests ---------------------------------------------------------

fields = st.sampled_from([QQ, F2, F5])


@st.composite
def field_matrix(draw, max_dim=4):
    field = draw(fields)
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    if field.char == 0:
        entry = st.integers(-4, 4).map(Fraction)
    else:
        entry = st.integers(0, field.char - 1)
    data = draw(st.lists(st.lists(entry, min_size=cols, max_size=cols),
                         min_size=rows, max_size=rows))
    return el.Mat.from_rows(field, [[field.of(x) for x in r] for r in data],
                            cols=cols)


@settings(max_examples=80, deadline=None)
@given(field_matrix())
def test_rank_nullity(m):
    assert el.rank(m) + el.kernel(m).dim == m.cols


@settings(max_examples=80, deadline=None)
@given(field_matrix(), field_matrix())
def test_modular_dimension_law(m1, m2):
    if m1.field != m2.field or m1.cols != m2.cols:
        return
    u = el.image(m1.transpose())
    w = el.image(m2.transpose())
    lhs = u.sum(w).dim + u.intersect(w).dim
    assert lhs == u.dim + w.dim


@settings(max_examples=80, deadline=None)
@given(field_matrix())
def test_rref_is_idempotent(m):
    red, _ = el.rref(m)
    red2, _ = el.rref(red)
    assert red2 == red


@settings(max_examples=60, deadline=None)
@given(field_matrix())
def test_complement_properties(m):
    sub = el.image(m.transpose())
    full = el.Subspace.full(m.field, m.cols)
    w = el.complement(full, sub)
    assert w.dim == m.cols - sub.dim
    assert w.intersect(sub).dim == 0
    assert w.sum(sub) == full


@settings(max_examples=60, deadline=None)
@given(field_matrix())
def test_quotient_projection_consistency(m):
    sub = el.image(m.transpose())
    full = el.Subspace.full(m.field, m.cols)
    reps, proj = el.quotient_basis(full, sub)
    assert len(reps) == m.cols - sub.dim
    # classes of representatives map to unit coordinate vectors
    for i, r in enumerate(reps):
        coords = proj.matvec(r)
        expected = el.vec_unit(m.field, len(reps), i)
        assert coords == expected
    # anything in sub projects to zero
    for row in sub.basis:
        assert el.vec_is_zero(m.field, proj.matvec(row))
