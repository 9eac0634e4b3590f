import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouptensor import (
    SpecError,
    all_subgroups,
    build_named,
    center,
    centralizer,
    commutator,
    commutator_subgroup,
    conjugate,
    cyclic,
    derived_subgroup,
    dihedral,
    direct_product,
    group_from_spec,
    iterated_commutator,
    nilpotency_class,
    normal_subgroups,
    quotient,
    subgroup_generated,
    symmetric,
    upper_central_series,
)
from grouptensor.groups import (
    FiniteGroup,
    full_subgroup,
    relabeled,
    trivial_subgroup,
)

SMALL_SPECS = [
    "C1", "C2", "C3", "C4", "C6", "C8", "C12",
    "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "E2^3", "E3^2",
    "D8", "D10", "D12", "Q8", "Q16", "S3", "S4", "A4", "D16",
]


def test_build_named_families():
    assert build_named("cyclic", 1).order == 1
    assert build_named("dihedral", 8).order == 8
    assert build_named("symmetric", 3).order == 6
    assert build_named("alternating", 5).order == 60
    assert build_named("quaternion", 16).order == 16
    assert build_named("elementary", (3, 2)).order == 9


def test_build_named_rejects_bad_input():
    with pytest.raises(SpecError):
        build_named("frobnicate", 3)
    with pytest.raises(SpecError):
        build_named("dihedral", 9)
    with pytest.raises(SpecError):
        build_named("quaternion", 12)
    with pytest.raises(SpecError):
        build_named("symmetric", 6)
    with pytest.raises(SpecError):
        build_named("symmetric", 5, max_order=64)


def test_dihedral_relation_holds():
    d8 = dihedral(8)
    a, b = d8.generator_labels["a"], d8.generator_labels["b"]
    # b a = a^-1 b
    assert d8.mul[b][a] == d8.mul[d8.inv[a]][b]
    assert d8.element_order(a) == 4
    assert d8.element_order(b) == 2


def test_symmetric_3_center_is_trivial():
    s3 = symmetric(3)
    assert s3.order == 6
    assert center(s3).order == 1


def test_direct_products():
    c2 = cyclic(2)
    klein = direct_product(c2, c2)
    assert klein.order == 4 and klein.exponent() == 2
    c2xc4 = direct_product(c2, cyclic(4))
    assert c2xc4.order == 8 and c2xc4.is_abelian()
    s3xc2 = direct_product(symmetric(3), c2)
    assert s3xc2.order == 12
    assert center(s3xc2).order == 2
    with pytest.raises(SpecError):
        direct_product(symmetric(4), symmetric(4))


def test_conjugation():
    d8 = dihedral(8)
    a, b = d8.generator_labels["a"], d8.generator_labels["b"]
    assert conjugate(d8, b, a) == d8.power(a, 3)
    for g in d8.elements():
        assert conjugate(d8, 0, g) == g
    c6 = cyclic(6)
    for g in c6.elements():
        for n in c6.elements():
            assert conjugate(c6, g, n) == n


def test_commutators_in_d8():
    d8 = dihedral(8)
    a, b = d8.generator_labels["a"], d8.generator_labels["b"]
    assert commutator(d8, a, b) == d8.power(a, 2)
    assert iterated_commutator(d8, [a, b, b]) == 0
    assert iterated_commutator(d8, [a]) == a
    for x in d8.elements():
        assert commutator(d8, x, x) == 0
    with pytest.raises(ValueError):
        iterated_commutator(d8, [])


def test_subgroup_generated():
    d8 = dihedral(8)
    a, b = d8.generator_labels["a"], d8.generator_labels["b"]
    h = subgroup_generated(d8, [d8.power(a, 2), d8.mul[a][b]])
    assert h.elements == (0, 2, 5, 7)
    assert h.order == 4
    assert subgroup_generated(d8, []).elements == (0,)
    c4 = cyclic(4)
    assert subgroup_generated(c4, [2]).order == 2


def test_subgroup_generated_idempotent():
    s4 = symmetric(4)
    h = subgroup_generated(s4, [1, 5])
    again = subgroup_generated(s4, h.elements)
    assert again.elements == h.elements


def test_all_subgroups_counts():
    s3 = symmetric(3)
    subs = all_subgroups(s3)
    assert len(subs) == 6
    assert len(normal_subgroups(s3)) == 3
    assert len(all_subgroups(cyclic(6))) == 4
    with pytest.raises(SpecError):
        all_subgroups(build_named("alternating", 5), max_order=32)


def test_all_subgroups_structure():
    for spec in ["C12", "D8", "Q8", "S3", "A4"]:
        g = group_from_spec(spec)
        subs = all_subgroups(g)
        sizes = [h.order for h in subs]
        assert sizes[0] == 1 and sizes[-1] == g.order
        assert all(g.order % s == 0 for s in sizes)
        assert len({h.elements for h in subs}) == len(subs)


def test_centralizer_and_center():
    d8 = dihedral(8)
    assert center(d8).elements == (0, 2)
    c6 = cyclic(6)
    assert center(c6).order == 6
    s3 = symmetric(3)
    three_cycle = next(x for x in s3.elements() if s3.element_order(x) == 3)
    assert centralizer(s3, three_cycle).order == 3


def test_commutator_subgroup():
    d8 = dihedral(8)
    assert derived_subgroup(d8).elements == (0, 2)
    assert derived_subgroup(cyclic(8)).order == 1
    s3 = symmetric(3)
    a3 = derived_subgroup(s3)
    assert a3.order == 3
    assert all(s3.element_order(x) in (1, 3) for x in a3.elements)
    full = full_subgroup(s3)
    assert commutator_subgroup(s3, full, full).elements == a3.elements


def test_quotient():
    d8 = dihedral(8)
    q, proj = quotient(d8, subgroup_generated(d8, [2]))
    assert q.order == 4 and q.exponent() == 2
    # projection is a homomorphism
    for a in d8.elements():
        for b in d8.elements():
            assert proj[d8.mul[a][b]] == q.mul[proj[a]][proj[b]]
    same, proj2 = quotient(d8, trivial_subgroup(d8))
    assert same.mul == d8.mul
    assert proj2 == tuple(range(8))
    c4 = cyclic(4)
    q2, _ = quotient(c4, subgroup_generated(c4, [2]))
    assert q2.order == 2


def test_quotient_requires_normal():
    s3 = symmetric(3)
    reflection = next(x for x in s3.elements() if s3.element_order(x) == 2)
    h = subgroup_generated(s3, [reflection])
    with pytest.raises(ValueError):
        quotient(s3, h)


def test_upper_central_series_and_class():
    d8 = dihedral(8)
    series = upper_central_series(d8)
    assert [t.order for t in series] == [1, 2, 8]
    assert nilpotency_class(d8) == 2
    assert nilpotency_class(symmetric(3)) is None
    assert nilpotency_class(cyclic(5)) == 1
    assert nilpotency_class(cyclic(1)) == 0
    assert nilpotency_class(build_named("quaternion", 16)) == 3


def test_relabeled_preserves_structure():
    s3 = symmetric(3)
    twisted = relabeled(s3, [0, 3, 1, 4, 2, 5])
    assert twisted.order == 6
    assert sorted(twisted.element_order(x) for x in twisted.elements()) == sorted(
        s3.element_order(x) for x in s3.elements()
    )


def test_bad_tables_rejected():
    with pytest.raises(SpecError):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(SpecError):
        FiniteGroup([[1, 0], [0, 1]])


@st.composite
def small_group(draw):
    spec = draw(st.sampled_from(SMALL_SPECS))
    return group_from_spec(spec)


@settings(max_examples=25, deadline=None)
@given(small_group(), st.data())
def test_commutator_vanishes_iff_commuting(g, data):
    x = data.draw(st.integers(0, g.order - 1))
    y = data.draw(st.integers(0, g.order - 1))
    assert (commutator(g, x, y) == 0) == (g.mul[x][y] == g.mul[y][x])


@settings(max_examples=25, deadline=None)
@given(small_group(), st.data())
def test_group_axioms_spot(g, data):
    x = data.draw(st.integers(0, g.order - 1))
    assert g.mul[0][x] == x and g.mul[x][0] == x
    assert g.mul[x][g.inv[x]] == 0
    y = data.draw(st.integers(0, g.order - 1))
    z = data.draw(st.integers(0, g.order - 1))
    assert g.mul[x][g.mul[y][z]] == g.mul[g.mul[x][y]][z]


@settings(max_examples=15, deadline=None)
@given(small_group(), st.data())
def test_closure_gives_subgroup(g, data):
    gens = data.draw(st.lists(st.integers(0, g.order - 1), max_size=3))
    h = subgroup_generated(g, gens)
    assert 0 in h
    assert g.order % h.order == 0
    assert subgroup_generated(g, h.elements).elements == h.elements
