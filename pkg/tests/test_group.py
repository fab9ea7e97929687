import pytest
from hypothesis import given, settings, strategies as st

from dyoung.group import (GroupFamily, Reflection, SignedPermutation, enumerate_group, generator,
                          group_data, length, min_coset_reps, multiply, reflections,
                          subgroup_elements, subgroup_generators)

from conftest import bfs_lengths, brute_elements, sp

FAMILIES = [GroupFamily(k, n) for k in "BD" for n in range(1, 6) if not (k == "D" and n < 2)]


def windows(kind, n):
    return st.sampled_from(enumerate_group(GroupFamily(kind, n)))


def test_generator_windows():
    assert generator(GroupFamily("D", 3), 0).window == (-2, -1, 3)
    assert generator(GroupFamily("B", 3), 0).window == (-1, 2, 3)
    assert generator(GroupFamily("D", 3), 1).window == (2, 1, 3)


def test_generator_errors():
    with pytest.raises(IndexError):
        generator(GroupFamily("D", 3), 3)
    with pytest.raises(ValueError):
        GroupFamily("D", 1)
    with pytest.raises(ValueError):
        GroupFamily("A", 3)


def test_window_validation_and_parse():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1, 3))
    w = SignedPermutation.parse("-2,-1,3")
    assert str(w) == "-2,-1,3"
    assert w(-1) == 2


def test_multiply_examples(d3):
    s0, s1, s2 = d3.generators()
    e = d3.identity()
    assert multiply(e, s1) == s1
    assert s0 * s0 == e
    assert (s1 * s2 * s0).window == (-3, -2, 1)
    assert (s2 * s0).window == (-3, -1, 2)
    with pytest.raises(ValueError):
        multiply(e, SignedPermutation.identity(4))


@settings(max_examples=60, deadline=None)
@given(windows("B", 4), windows("B", 4), windows("B", 4))
def test_multiply_associative_and_inverse(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()


@pytest.mark.parametrize("kind,n,order", [("D", 3, 24), ("B", 3, 48), ("D", 4, 192), ("B", 2, 8)])
def test_enumerate_group_orders(kind, n, order):
    fam = GroupFamily(kind, n)
    els = enumerate_group(fam)
    assert len(els) == order == fam.order
    assert els == sorted(els)
    assert {w.window for w in els} == set(brute_elements(kind, n))


@pytest.mark.parametrize("fam", [f for f in FAMILIES if f.rank <= 4], ids=str)
def test_length_equals_bfs_distance(fam):
    dist = bfs_lengths(fam.kind, fam.rank)
    for w in enumerate_group(fam):
        assert length(w, fam) == dist[w.window]


def test_length_examples(d3):
    s0, s1, s2 = d3.generators()
    assert length(d3.identity(), d3) == 0
    assert length(s1 * s2 * s0, d3) == 3


@pytest.mark.parametrize("fam", FAMILIES, ids=str)
def test_coxeter_relations(fam):
    gens = fam.generators()
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            w = fam.identity()
            for _ in range(fam.coxeter_m(i, j)):
                w = w * a * b
            assert w.is_identity(), (i, j)


def test_coxeter_matrix_entries():
    assert GroupFamily("B", 3).coxeter_m(0, 1) == 4
    D = GroupFamily("D", 4)
    assert D.coxeter_m(0, 2) == 3 and D.coxeter_m(0, 1) == 2 and D.coxeter_m(1, 2) == 3
    assert D.coxeter_m(1, 3) == 2 and D.coxeter_m(2, 2) == 1


@pytest.mark.parametrize("fam", [f for f in FAMILIES if f.rank <= 4], ids=str)
def test_ell_ws_changes_by_one(fam):
    data = group_data(fam)
    for w, lw in zip(data.elements, data.lengths):
        for s in fam.generators():
            assert abs(length(w * s, fam) - lw) == 1
    for w in data.elements:
        assert len(data.word(w)) == length(w, fam)


def _conjugates(fam):
    els = enumerate_group(fam)
    return {w * s * w.inverse() for w in els for s in fam.generators()}


@pytest.mark.parametrize("fam", [f for f in FAMILIES if f.rank <= 4], ids=str)
def test_reflections_are_conjugates_of_generators(fam):
    refl = reflections(fam)
    assert len(refl) == len(set(refl))
    assert {t.element(fam.rank) for t in refl} == _conjugates(fam)


@pytest.mark.parametrize("kind,n,count", [("D", 2, 2), ("D", 3, 6), ("B", 2, 4)])
def test_reflection_counts(kind, n, count):
    assert len(reflections(GroupFamily(kind, n))) == count


def test_b2_reflection_types():
    refl = reflections(GroupFamily("B", 2))
    assert sum(t.is_sign for t in refl) == 2


def test_reflection_canonical_form_and_roots():
    assert Reflection.of(2, 1) == Reflection(1, 2)
    assert Reflection.of(1, 2) == Reflection.of(-2, -1) == Reflection(1, 2)
    assert Reflection.of(2, -1) == Reflection.of(1, -2) == Reflection(-1, 2)
    assert Reflection.of(3, -3) == Reflection(-3, 3)
    assert Reflection(1, 2).root(3) == (1, -1, 0)
    assert Reflection(-1, 2).root(3) == (-1, -1, 0)
    assert Reflection(-2, 2).root(3) == (0, 1, 0)
    for fam in FAMILIES[:6]:
        for t in reflections(fam):
            w = t.element(fam.rank)
            assert (w * w).is_identity()
            assert Reflection.from_element(w) == t
    with pytest.raises(ValueError):
        Reflection.of(1, 1)


def test_min_coset_reps_d3_s1(d3):
    s0, s1, s2 = d3.generators()
    reps = min_coset_reps(d3, "S1")
    assert reps == [d3.identity(), s0, s2 * s0, s1 * s2 * s0]


def test_min_coset_reps_d4_longest():
    D4 = GroupFamily("D", 4)
    reps = min_coset_reps(D4, "S1")
    assert len(reps) == 8
    assert reps[-1].window == (-4, -3, -2, -1)


def test_min_coset_reps_s0(d3):
    reps = min_coset_reps(d3, "S0")
    assert len(reps) == 4
    assert reps[1] == d3.generator(1)
    assert reps[1].window == (2, 1, 3)


def test_min_coset_reps_unsupported():
    with pytest.raises(ValueError):
        min_coset_reps(GroupFamily("B", 3), "S0")


@pytest.mark.parametrize("fam,sub", [(GroupFamily(k, n), s) for k in "BD" for n in range(2, 5)
                                     for s in ("S1", "S0") if not (k == "B" and s == "S0")],
                         ids=lambda v: str(v))
def test_cosets_partition_and_minimality(fam, sub):
    H = subgroup_elements(fam, subgroup_generators(fam, sub))
    reps = min_coset_reps(fam, sub)
    assert len(reps) == (2 ** (fam.rank - 1) if fam.kind == "D" else 2 ** fam.rank)
    seen = set()
    for r in reps:
        coset = {r * h for h in H}
        assert not seen & coset
        seen |= coset
        others = coset - {r}
        assert all(length(v, fam) > length(r, fam) for v in others)
    assert len(seen) == fam.order
    assert [length(r, fam) for r in reps] == sorted(length(r, fam) for r in reps)


def test_group_guard():
    with pytest.raises(ValueError):
        enumerate_group(GroupFamily("B", 11))
