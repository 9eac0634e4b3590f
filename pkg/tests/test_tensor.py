import pytest

from grouptensor import (
    abelian_tensor_square_oracle,
    center,
    centralizer,
    derived_subgroup,
    j2_order,
    nilpotency_class,
    tensor_center,
    tensor_centralizer,
    tensor_class,
    tensor_square,
    tensor_upper_central,
)
from grouptensor.errors import LimitError

CORPUS_12 = [
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
    "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "D8", "D10", "D12", "Q8", "S3", "A4",
]


def test_tensor_square_c2(tensors):
    data = tensors("C2")
    assert data.order == 2
    assert data.trivial == ((True, True), (True, False))


def test_tensor_square_c1(tensors):
    data = tensors("C1")
    assert data.order == 1
    assert data.trivial == ((True,),)


@pytest.mark.parametrize("n", range(2, 9))
def test_tensor_square_cyclic_orders(n, tensors):
    assert tensors(f"C{n}").order == n


def test_tensor_square_matches_oracle_exactly(groups, tensors):
    for spec in ["C2", "C4", "C6", "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3"]:
        data = tensors(spec)
        oracle = abelian_tensor_square_oracle(groups(spec))
        assert data.order == oracle.order
        assert data.trivial == oracle.trivial


def test_limit_propagates_with_group_name(groups):
    with pytest.raises(LimitError) as err:
        tensor_square(groups("Q8"), max_cosets=5)
    assert "Q8" in str(err.value)


def test_tensor_centralizer_basics(groups, tensors):
    s3 = groups("S3")
    data = tensors("S3")
    assert tensor_centralizer(s3, data, 0).order == s3.order
    c2 = groups("C2")
    assert tensor_centralizer(c2, tensors("C2"), 1).elements == (0,)
    three_cycle = next(x for x in s3.elements() if s3.element_order(x) == 3)
    tc = tensor_centralizer(s3, data, three_cycle)
    assert set(tc.elements) <= set(centralizer(s3, three_cycle).elements)


def test_tensor_center(groups, tensors):
    assert tensor_center(groups("S3"), tensors("S3")).order == 1
    assert tensor_center(groups("C1"), tensors("C1")).order == 1
    assert tensor_center(groups("C2"), tensors("C2")).elements == (0,)


def test_tensor_center_within_center(groups, tensors):
    for spec in CORPUS_12:
        g = groups(spec)
        zt = tensor_center(g, tensors(spec))
        assert set(zt.elements) <= set(center(g).elements), spec


def test_triviality_symmetry_and_kappa(groups, tensors):
    for spec in CORPUS_12:
        g = groups(spec)
        t = tensors(spec).trivial
        for x in g.elements():
            assert t[0][x] and t[x][0]
            for y in g.elements():
                assert t[x][y] == t[y][x]
                if t[x][y]:
                    assert g.mul[x][y] == g.mul[y][x]


def test_j2_order(groups, tensors):
    assert j2_order(groups("C1"), tensors("C1")) == 1
    for n in range(2, 9):
        assert j2_order(groups(f"C{n}"), tensors(f"C{n}")) == n
    d8 = groups("D8")
    data = tensors("D8")
    assert derived_subgroup(d8).order == 2
    assert j2_order(d8, data) == data.order // 2


def test_j2_divisibility(groups, tensors):
    for spec in CORPUS_12:
        g = groups(spec)
        data = tensors(spec)
        assert data.order == j2_order(g, data) * derived_subgroup(g).order, spec


def test_tensor_upper_central_series(groups, tensors):
    s3 = groups("S3")
    d3 = tensors("S3")
    assert tensor_upper_central(s3, d3, 1).elements == tensor_center(s3, d3).elements
    for n in (1, 2, 3):
        assert tensor_upper_central(s3, d3, n).order == 1
    # ascending chain with pullback/direct agreement built in for n <= 3
    for spec in CORPUS_12:
        g = groups(spec)
        data = tensors(spec)
        prev = None
        for n in (1, 2, 3):
            term = tensor_upper_central(g, data, n)
            if prev is not None:
                assert set(prev.elements) <= set(term.elements), spec
            prev = term


def test_tensor_class_values(groups, tensors):
    assert tensor_class(groups("C1"), tensors("C1")) == 0
    assert tensor_class(groups("S3"), tensors("S3")) is None
    assert tensor_class(groups("C2"), tensors("C2")) == 2
    assert tensor_class(groups("D8"), tensors("D8")) == 3


def test_tensor_class_bounds_nilpotency(groups, tensors):
    for spec in CORPUS_12:
        g = groups(spec)
        c = tensor_class(g, tensors(spec))
        if c is not None:
            nc = nilpotency_class(g)
            assert nc is not None and nc <= c, spec
