"""Algebra validation, radicals, morphisms, ideals, quotients."""

from fractions import Fraction

import pytest

import quivkit as qk
import quivkit.exactlin as el
from quivkit.errors import QuivkitError

from corpus import (
    QQ,
    F2,
    F5,
    lower_triangular,
    semisimple,
    triangle_algebra,
    triangle_mod_cb,
    truncated_power_series,
)


def test_validate_semisimple_product():
    a = semisimple(QQ, 2)
    assert a.radical.dim == 0
    assert a.truncation_level == 1


def test_validate_lower_triangular():
    a = lower_triangular(QQ)
    assert a.radical.dim == 1
    assert a.radical.contains(a.element("E21"))
    # hand oracle: the trace form on E21 vanishes against everything
    assert qk.trace_form_radical(a) == a.radical


def test_full_matrix_algebra_rejected():
    pos = [(1, 1), (1, 2), (2, 1), (2, 2)]

    def prod(i, j):
        (a, b), (c, d) = pos[i], pos[j]
        out = [0] * 4
        if b == c:
            out[pos.index((a, d))] = 1
        return out

    sc = [[prod(i, j) for j in range(4)] for i in range(4)]
    with pytest.raises(QuivkitError) as exc:
        qk.validate_algebra(QQ, ["E11", "E12", "E21", "E22"], sc, [1, 0, 0, 1])
    assert exc.value.code == "NOT_POINTED"


def test_non_associative_rejected():
    sc = [[[0, 1], [1, 0]], [[1, 0], [0, 1]]]
    with pytest.raises(QuivkitError) as exc:
        qk.validate_algebra(QQ, ["e", "x"], sc, [1, 0])
    assert exc.value.code in ("ASSOCIATIVITY_FAIL", "UNIT_FAIL")


def test_bad_unit_rejected():
    sc = [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]
    with pytest.raises(QuivkitError) as exc:
        qk.validate_algebra(QQ, ["e", "x"], sc, [1, 0])
    assert exc.value.code == "UNIT_FAIL"


def test_field_extension_not_pointed():
    # F4 over F2: basis 1, t with t^2 = t + 1 (simple but not split)
    sc = [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]
    with pytest.raises(QuivkitError) as exc:
        qk.validate_algebra(qk.GF(3), ["one", "t"],
                            [[[1, 0], [0, 1]], [[0, 1], [2, 0]]], [1, 0])
    # t^2 = 2 = -1 over F3 has no root, so A/J is a quadratic field
    assert exc.value.code == "NOT_POINTED"
    del sc


def test_char_too_small_guard():
    sc = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    with pytest.raises(QuivkitError) as exc:
        qk.validate_algebra(F2, ["e", "x"], sc, [1, 0])
    assert exc.value.code == "CHAR_TOO_SMALL"
    # same data over a big enough prime is fine
    a = qk.validate_algebra(qk.GF(7), ["e", "x"], sc, [1, 0])
    assert a.radical.dim == 1


def test_radical_triangle():
    t = triangle_algebra()
    a = t.carrier
    expected = el.Subspace.span(QQ, 7, [a.element(l) for l in ("a", "b", "c", "cb")])
    assert a.radical == expected
    assert qk.radical(a) == expected
    assert qk.trace_form_radical(a) == expected


def test_radical_power_series():
    a = truncated_power_series(QQ, 2).carrier
    assert a.radical == el.Subspace.span(QQ, 2, [a.element("x")])
    jet = truncated_power_series(QQ, 4).carrier
    for n in range(4):
        expected = el.Subspace.span(
            QQ, 4, [jet.element("x" * m) for m in range(max(n, 1), 4)])
        if n == 0:
            expected = el.Subspace.full(QQ, 4)
        assert qk.radical_power(jet, n) == expected
    assert qk.radical_power(jet, 4).dim == 0
    assert qk.radical_power(jet, 9).dim == 0


def test_radical_powers_triangle():
    a = triangle_algebra().carrier
    assert qk.radical_power(a, 0).dim == 7
    assert qk.radical_power(a, 2) == el.Subspace.span(QQ, 7, [a.element("cb")])
    assert qk.radical_power(a, 3).dim == 0


def test_morphism_identity_valid():
    a = triangle_algebra().carrier
    m = qk.identity_morphism(a)
    assert m.surjective


def test_diagonal_inclusion_into_product_rejected():
    k1 = semisimple(QQ, 1)
    k2 = semisimple(QQ, 2)
    mat = el.Mat(QQ, 2, 1, [[Fraction(1)], [Fraction(1)]])
    with pytest.raises(QuivkitError) as exc:
        qk.validate_morphism(k1, k2, mat)
    assert exc.value.code == "RADICAL_QUOTIENT_NOT_SURJECTIVE"


def test_diagonal_into_lower_triangular_valid():
    k2 = semisimple(QQ, 2)
    lt = lower_triangular(QQ)
    cols = [lt.element("E11"), lt.element("E22")]
    m = qk.validate_morphism(k2, lt, el.Mat.from_cols(QQ, cols, rows=3))
    assert not m.surjective
    # image of the (zero) radical misses J(B)
    assert qk.image_of_radical_check(m) is False


def test_not_multiplicative_rejected():
    a = truncated_power_series(QQ, 2).carrier
    bad = el.Mat.from_cols(QQ, [a.unit, a.unit], rows=2)
    with pytest.raises(QuivkitError) as exc:
        qk.validate_morphism(a, a, bad)
    assert exc.value.code == "NOT_MULTIPLICATIVE"


def test_not_unital_rejected():
    a = semisimple(QQ, 1)
    bad = el.Mat(QQ, 1, 1, [[Fraction(2)]])
    with pytest.raises(QuivkitError) as exc:
        qk.validate_morphism(a, a, bad)
    assert exc.value.code == "NOT_UNITAL"


def test_image_of_radical_check_for_projection():
    t, ideal, quotient, pi = triangle_mod_cb()
    assert qk.image_of_radical_check(pi) is True


def test_surjections_map_radical_layers_onto_radical_layers():
    # every surjective morphism in sight satisfies the layerwise equality
    from corpus import algebra_corpus

    t, ideal, quotient, pi = triangle_mod_cb()
    assert qk.image_of_radical_check(pi)
    for name, a in algebra_corpus():
        assert qk.image_of_radical_check(qk.identity_morphism(a)), name
        cu = qk.counit(a)
        assert qk.image_of_radical_check(cu.morphism), name


def test_quotient_by_zero_is_isomorphic():
    a = triangle_algebra().carrier
    zero = qk.IdealSubspace(a, el.Subspace.zero(QQ, a.dim))
    q, pi = qk.quotient_algebra(a, zero)
    assert q.dim == a.dim
    assert pi.surjective


def test_quotient_triangle_mod_cb():
    t, ideal, quotient, pi = triangle_mod_cb()
    assert quotient.dim == 6
    assert quotient.truncation_level == 2
    assert el.kernel(pi.matrix) == ideal.space
    # J(A/I) = image of J(A)
    img = el.Subspace.span(QQ, 6, [pi.apply(v) for v in t.carrier.radical.basis])
    assert quotient.radical == img


def test_quotient_power_series():
    jet = truncated_power_series(QQ, 4)
    ideal = qk.ideal_generated_by(jet.carrier, [jet.carrier.element("xx")])
    q, pi = qk.quotient_algebra(jet.carrier, ideal)
    assert q.dim == 2
    assert q.truncation_level == 2


def test_quotient_rejects_non_ideal():
    # span{c} is not an ideal: c*b = cb falls outside it
    a = triangle_algebra().carrier
    sub = el.Subspace.span(QQ, 7, [a.element("c")])
    with pytest.raises(QuivkitError) as exc:
        qk.quotient_algebra(a, qk.IdealSubspace(a, sub))
    assert exc.value.code == "NOT_AN_IDEAL"


def test_ideal_generated_by_cb():
    a = triangle_algebra().carrier
    ideal = qk.ideal_generated_by(a, [a.element("cb")])
    assert ideal.space == el.Subspace.span(QQ, 7, [a.element("cb")])
    assert qk.is_relation_ideal(ideal)
    assert qk.is_admissible(ideal)


def test_ideal_generated_by_arrow_is_not_relation():
    a = triangle_algebra().carrier
    ideal = qk.ideal_generated_by(a, [a.element("a")])
    assert not qk.is_relation_ideal(ideal)
    assert ideal.space.contains(a.element("a"))


def test_zero_ideal_is_relation_ideal():
    a = triangle_algebra().carrier
    zero = qk.ideal_generated_by(a, [])
    assert zero.dim == 0
    assert qk.is_relation_ideal(zero)
    assert qk.is_admissible(zero)


def test_radical_quotient_commutes_with_quotient():
    # J(A/I) = (J(A)+I)/I for a relation ideal
    t, ideal, quotient, pi = triangle_mod_cb()
    lifted = t.carrier.radical.sum(ideal.space)
    img = el.Subspace.span(QQ, 6, [pi.apply(v) for v in lifted.basis])
    assert img == quotient.radical


def test_f5_presented_algebra_radical():
    # presented algebras know their radical in any characteristic
    t = triangle_algebra(F5)
    assert t.carrier.radical.dim == 4
    # the trace criterion refuses p <= dim ...
    with pytest.raises(QuivkitError) as exc:
        qk.trace_form_radical(t.carrier)
    assert exc.value.code == "CHAR_TOO_SMALL"
    # ... and agrees with the arrow ideal when p > dim
    jet = truncated_power_series(F5, 3).carrier
    assert qk.trace_form_radical(jet) == jet.radical
