from fractions import Fraction
from math import sqrt

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dyoung.group import GroupFamily, enumerate_group, group_data
from dyoung.rep import (build_representation, character, characters_equal, direct_sum,
                        element_matrix, induce_classical, specht_yof, verify_coxeter_relations)
from dyoung.tableaux import FamilySpec, SkewShape, partitions

S3 = SkewShape((3,))


def spec(kind, lam, variant, sign=None, m=0):
    return FamilySpec(kind, SkewShape(lam), variant, sign, m)


def halves(rep):
    return [T.half for T in rep.basis]


def all_specs(kind, n):
    out = []
    for lam in partitions(n):
        signs = ("+", "-") if kind == "D" else (None,)
        for sign in signs:
            out += [spec(kind, lam, "m", sign, 1), spec(kind, lam, "vbar", sign), spec(kind, lam, "hbar", sign)]
        if kind == "D":
            out.append(spec(kind, lam, "box"))
    return out


SMALL = [s for k in "DB" for n in (2, 3) for s in all_specs(k, n)]


def test_row3_zero_family_blocks():
    rep = build_representation(spec("D", (3,), "zero", "+"))
    # basis: three hbar tableaux, then the box tableau
    assert halves(rep) == [(-3, -2, 1), (-3, -1, 2), (-2, -1, 3), (1, 2, 3)]
    s1 = rep.matrix(1)
    np.testing.assert_allclose(s1[:2, :2], [[-1 / 3, sqrt(8) / 3], [sqrt(8) / 3, 1 / 3]], atol=1e-12)
    assert rep.matrix(1)[3, 3] == 1


def test_row3_m1_blocks():
    rep = build_representation(spec("D", (3,), "m", "+", 1))
    s1, s2 = rep.matrix(1), rep.matrix(2)
    np.testing.assert_allclose(s1[:2, :2], [[-1 / 5, sqrt(24) / 5], [sqrt(24) / 5, 1 / 5]], atol=1e-12)
    np.testing.assert_allclose(s2[1:3, 1:3], [[-1 / 4, sqrt(15) / 4], [sqrt(15) / 4, 1 / 4]], atol=1e-12)


def test_stochastic_block_and_its_square():
    rep = build_representation(spec("D", (3,), "m", "+", 1), "stochastic")
    s1 = rep.matrix(1)
    # the pair (-3,-2,1) with f_1 = -5 and (-3,-1,2) with f_1 = 5
    assert [list(r) for r in s1[:2, :2]] == [[Fraction(-1, 5), Fraction(6, 5)], [Fraction(4, 5), Fraction(1, 5)]]
    block = np.array([[Fraction(1, 5), Fraction(4, 5)], [Fraction(6, 5), Fraction(-1, 5)]], dtype=object)
    assert (block.dot(block) == np.array([[1, 0], [0, 1]])).all()


def test_box_family_of_single_row_is_trivial():
    for n in (2, 3, 4, 5):
        rep = build_representation(spec("D", (n,), "box"))
        assert rep.dim == 1
        assert all(rep.matrix(i)[0, 0] == 1 for i in range(n))


def test_element_matrix_basics():
    rep = build_representation(spec("D", (3,), "m", "+", 1), "stochastic")
    assert (element_matrix(rep, []) == rep.identity()).all()
    with pytest.raises(IndexError):
        element_matrix(rep, [7])


@pytest.mark.parametrize("sp", SMALL, ids=lambda s: s.label())
def test_generators_are_involutions(sp):
    for norm in ("stochastic", "orthogonal"):
        rep = build_representation(sp, norm)
        for i in rep.labels:
            M = element_matrix(rep, [i, i])
            if rep.exact:
                assert (M == rep.identity()).all()
            else:
                np.testing.assert_allclose(M, np.eye(rep.dim), atol=1e-12)


def test_word_s2_s0_on_21_family():
    """``rho(s_2 s_0) T_1`` for the (2,1) family at m = 1."""
    rep = build_representation(spec("D", (2, 1), "m", "+", 1))
    index = {h: k for k, h in enumerate(halves(rep))}
    row = element_matrix(rep, [2, 0])[index[(1, 2, 3)]]
    coeff = {h: row[k] for h, k in index.items() if abs(row[k]) > 1e-12}
    # sign of the diagonal term follows the formula: (1/5) * (1/f_2) with f_2 = -2
    assert coeff[(1, 2, 3)] == pytest.approx(-1 / 10)
    assert coeff[(1, 3, 2)] == pytest.approx(sqrt(3) / 10)
    assert coeff[(-2, -1, 3)] == pytest.approx(sqrt(24) / 15)
    assert coeff[(-3, -1, 2)] == pytest.approx(sqrt(192) / 15)
    assert len(coeff) == 4


def test_verify_relations_examples():
    assert verify_coxeter_relations(build_representation(spec("D", (3,), "zero", "+"))).ok
    rep = build_representation(spec("D", (2, 1), "box"), "stochastic")
    rel = verify_coxeter_relations(rep)
    assert rel.ok and rel.worst_residual == 0
    rep = build_representation(spec("B", (2, 1), "vbar"), "stochastic")
    rel = verify_coxeter_relations(rep)
    assert rel.ok and rel.residuals[(0, 1)] == 0


def test_broken_matrix_is_reported():
    rep = build_representation(spec("D", (3,), "m", "+", 1), "stochastic")
    bad = rep.generators[1].copy()
    bad[0, 0] = Fraction(1, 2)
    from dyoung.rep import Representation
    broken = Representation(rep.group, rep.rank, rep.labels, rep.basis,
                            (rep.generators[0], bad, rep.generators[2]), "stochastic", True)
    rel = verify_coxeter_relations(broken)
    assert not rel.ok and rel.worst_residual > 0


@pytest.mark.parametrize("sp", SMALL, ids=lambda s: s.label())
def test_orthogonal_generators_are_symmetric_orthogonal(sp):
    rep = build_representation(sp, "orthogonal")
    for M in rep.generators:
        np.testing.assert_allclose(M, M.T, atol=1e-12)
        np.testing.assert_allclose(M @ M.T, np.eye(rep.dim), atol=1e-9)
        assert all(np.count_nonzero(row) <= 2 for row in M)


@pytest.mark.parametrize("sp", SMALL, ids=lambda s: s.label())
def test_normalizations_share_characters(sp):
    exact = character(build_representation(sp, "stochastic"))
    floats = character(build_representation(sp, "orthogonal"))
    assert characters_equal(exact, floats)
    also_float = character(build_representation(sp, "stochastic", "float"))
    assert characters_equal(exact, also_float)


def test_character_examples():
    r1 = build_representation(spec("D", (3,), "m", "+", 1), "stochastic")
    r0 = build_representation(spec("D", (3,), "zero", "+"), "stochastic")
    D3 = GroupFamily("D", 3)
    assert character(r1)(D3.identity()) == 4
    assert character(r0)(D3.generator(0)) == 2
    assert character(r1)(D3.generator(0)) == 2
    assert characters_equal(r0, r1)
    assert characters_equal(r1, r1)


def test_plus_and_minus_differ_for_even_rows():
    plus = build_representation(spec("D", (4,), "m", "+", 1), "stochastic")
    minus = build_representation(spec("D", (4,), "m", "-", 1), "stochastic")
    assert not characters_equal(plus, minus)


def test_characters_of_different_groups_refuse():
    a = build_representation(spec("D", (3,), "m", "+", 1), "stochastic")
    b = build_representation(spec("D", (2,), "m", "+", 1), "stochastic")
    with pytest.raises(ValueError):
        characters_equal(a, b)


@pytest.mark.parametrize("kind,n", [("D", 3), ("B", 3), ("D", 4)])
def test_characters_are_class_functions(kind, n):
    fam = GroupFamily(kind, n)
    for sp in all_specs(kind, n)[:6]:
        ch = character(build_representation(sp, "stochastic"))
        for w in enumerate_group(fam):
            for s in fam.generators():
                assert ch(s * w * s) == ch(w)


def test_direct_sum_gives_zero_family_matrices():
    box = build_representation(spec("D", (3,), "box"))
    hbar = build_representation(spec("D", (3,), "hbar", "+"))
    vbar = build_representation(spec("D", (3,), "vbar", "+"))
    total = direct_sum([hbar, vbar, box])
    zero = build_representation(spec("D", (3,), "zero", "+"))
    assert vbar.dim == 0
    for i in range(3):
        np.testing.assert_allclose(total.matrix(i), zero.matrix(i))
    assert direct_sum([box]).matrix(0).shape == (1, 1)


def test_direct_sum_dimension_for_square():
    parts = [build_representation(spec("D", (2, 2), v, s), "stochastic")
             for v, s in (("box", None), ("vbar", "+"), ("hbar", "+"))]
    assert all(p.dim for p in parts)
    assert direct_sum(parts).dim == sum(p.dim for p in parts) == 2 ** 3 * 2


def test_direct_sum_rejects_mixed_backends():
    a = build_representation(spec("D", (3,), "box"), "stochastic")
    b = build_representation(spec("D", (3,), "box"), "orthogonal")
    with pytest.raises(ValueError):
        direct_sum([a, b])


def test_backend_validation():
    with pytest.raises(ValueError):
        build_representation(spec("D", (3,), "box"), "orthogonal", "exact")
    with pytest.raises(ValueError):
        build_representation(spec("D", (3,), "box"), "seminormal")


def test_specht_examples():
    rep = specht_yof(SkewShape((2, 1)))
    assert rep.basis == ((1, 2, 3), (1, 3, 2))
    assert rep.matrix(1)[0, 0] == 1 and rep.matrix(1)[0, 1] == 0
    np.testing.assert_allclose(rep.matrix(2), [[-1 / 2, sqrt(3) / 2], [sqrt(3) / 2, 1 / 2]], atol=1e-12)
    row = specht_yof(SkewShape((4,)))
    assert row.dim == 1 and all(M[0, 0] == 1 for M in row.generators)


@pytest.mark.parametrize("outer,inner", [((3,), ()), ((2, 1), ()), ((2, 2), ()), ((3, 1, 1), ()),
                                         ((2, 2), (1,)), ((3, 2), (1,))])
def test_specht_relations(outer, inner):
    rep = specht_yof(SkewShape(outer, inner), "stochastic")
    assert verify_coxeter_relations(rep).ok


def test_induce_trivial_gives_permutation_matrices():
    D3 = GroupFamily("D", 3)
    ind = induce_classical(specht_yof(S3), D3, "S1")
    assert ind.dim == 4
    for M in ind.generators:
        assert set(np.unique(M)) <= {0.0, 1.0}
        assert (M.sum(axis=0) == 1).all() and (M.sum(axis=1) == 1).all()
    assert character(ind)(D3.identity()) == 4
    rep = build_representation(spec("D", (3,), "m", "+", 1))
    assert characters_equal(ind, rep)


def test_induce_rejects_wrong_inner():
    rep = build_representation(spec("D", (3,), "m", "+", 1))
    with pytest.raises(ValueError):
        induce_classical(rep, GroupFamily("D", 3))
    with pytest.raises(ValueError):
        induce_classical(specht_yof(S3), GroupFamily("D", 4))


@pytest.mark.parametrize("kind", ["D", "B"])
def test_induced_relations(kind):
    for lam in partitions(3):
        for sub in (("S1", "S0") if kind == "D" else ("S1",)):
            ind = induce_classical(specht_yof(SkewShape(lam), "stochastic"), GroupFamily(kind, 3), sub)
            assert verify_coxeter_relations(ind).ok


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.lists(st.integers(0, 2), max_size=8))
def test_word_matrix_is_product_of_generators(sp, word):
    rep = build_representation(sp, "stochastic")
    word = [i % rep.rank for i in word]
    M = rep.identity()
    for i in word:
        M = rep.matrix(i).dot(M)
    assert (element_matrix(rep, word) == M).all()


def test_character_uses_group_words():
    rep = build_representation(spec("D", (2, 1), "m", "-", 1), "stochastic")
    data = group_data(rep.group)
    ch = character(rep)
    for w in data.elements[::3]:
        assert ch(w) == np.trace(element_matrix(rep, data.word(w)))
