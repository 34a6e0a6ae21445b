import itertools

import pytest
from hypothesis import given, strategies as st

from fatgraph_reembed.errors import InputError
from fatgraph_reembed.perm import (
    CycleType,
    Permutation,
    SetPartition,
    compose,
    cycle_type,
    format_cycles,
    num_cycles,
    parse_cycles,
    partition_of,
    partitions,
)

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation.from_images)


def same_size_pair():
    return st.integers(1, 8).flatmap(
        lambda n: st.tuples(st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1)))
    )


def test_compose_applies_right_factor_first():
    p = Permutation.from_cycles([(1, 2)], ground=3)
    q = Permutation.from_cycles([(2, 3)], ground=3)
    r = compose(p, q)
    assert r(2) == p(q(2)) == 3
    assert r == Permutation.from_cycles([(1, 2, 3)])
    assert compose(q, p) == Permutation.from_cycles([(1, 3, 2)])


def test_compose_rejects_mismatched_ground_sets():
    with pytest.raises(InputError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_fig1_bottom_row_cycles():
    pi = Permutation.from_images([1, 6, 7, 8, 3, 4, 5, 2])
    assert pi.cycles == ((1,), (2, 6, 4, 8), (3, 7, 5))
    assert format_cycles(pi) == "(1)(2 6 4 8)(3 7 5)"


def test_worked_example_pi():
    pi = parse_cycles("(1,5,4,10)(2,3,8,6,12,11,9)(7)")
    assert cycle_type(pi) == CycleType((7, 4, 1))
    assert num_cycles(pi) == 3


@pytest.mark.parametrize(
    "text, n, expected",
    [
        ("(1 2)(3 4)", None, "(1 2)(3 4)"),
        ("(1,2)(3,4)", None, "(1 2)(3 4)"),
        ("(2 1)", 3, "(1 2)(3)"),
        ("", 2, "(1)(2)"),
    ],
)
def test_parse_and_format(text, n, expected):
    assert format_cycles(parse_cycles(text, n=n)) == expected


@pytest.mark.parametrize("text", ["(1 2)(2 3)", "(1 2", "(0 1)", "(1 x)", "(1 5)"])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        parse_cycles(text, n=4)


def test_from_images_rejects_non_bijection():
    with pytest.raises(InputError):
        Permutation.from_images([1, 1, 2])


@given(perms)
def test_cycle_round_trip(p):
    assert parse_cycles(format_cycles(p), n=p.n) == p


@given(perms)
def test_inverse(p):
    assert compose(p, p.inverse()).is_identity
    assert compose(p.inverse(), p).is_identity


@given(same_size_pair())
def test_compose_pointwise(pair):
    a, b = map(Permutation.from_images, pair)
    c = compose(a, b)
    assert all(c(x) == a(b(x)) for x in range(1, a.n + 1))


@given(perms)
def test_cycle_type_sums_and_sign(p):
    lam = p.cycle_type
    assert lam.n == p.n
    assert lam.length == p.num_cycles
    # sign from inversion count
    imgs = p.images()
    inv = sum(1 for i, j in itertools.combinations(range(len(imgs)), 2) if imgs[i] > imgs[j])
    assert p.is_even() == (inv % 2 == 0)


@given(perms)
def test_partition_blocks_are_cycles(p):
    part = partition_of(p)
    assert len(part) == p.num_cycles
    assert part.ground == p.domain
    for c in p.cycles:
        assert frozenset(c) in part


def test_involution_checks():
    assert Permutation.from_cycles([(1, 2), (3, 4)]).is_involution(fixed_point_free=True)
    assert Permutation.from_cycles([(1, 2)], ground=3).is_involution()
    assert not Permutation.from_cycles([(1, 2)], ground=3).is_involution(fixed_point_free=True)
    assert not Permutation.from_cycles([(1, 2, 3)]).is_involution()


def test_restrict_and_induced():
    p = Permutation.from_cycles([(1, 2, 3, 4, 5)])
    assert p.induced({1, 3, 5}) == Permutation.from_cycles([(1, 3, 5)])
    q = Permutation.from_cycles([(1, 2), (3, 4, 5)])
    assert q.restrict({3, 4, 5}) == Permutation.from_cycles([(3, 4, 5)])
    with pytest.raises(InputError):
        q.restrict({1, 3})


def test_from_cycles_duplicate_label():
    with pytest.raises(InputError):
        Permutation.from_cycles([(1, 2), (2, 3)])


def test_cycle_type_parse_and_stats():
    lam = CycleType.parse("1,3")
    assert lam.parts == (3, 1)
    assert str(lam) == "3,1"
    assert lam.n == 4 and lam.length == 2
    assert lam.a(1) == 1 and lam.a(3) == 1 and lam.a(2) == 0
    assert lam.class_size() == 8
    assert lam.canonical().cycle_type == lam
    with pytest.raises(InputError):
        CycleType.parse("3,,1")
    with pytest.raises(InputError):
        CycleType.parse("0")


@pytest.mark.parametrize("n, count", [(1, 1), (4, 5), (6, 11), (8, 22), (10, 42)])
def test_partition_counts(n, count):
    parts = list(partitions(n))
    assert len(parts) == count
    assert len(set(parts)) == count
    assert all(lam.n == n for lam in parts)


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_sum_to_factorial(n):
    from math import factorial

    assert sum(lam.class_size() for lam in partitions(n)) == factorial(n)


def test_set_partition():
    sp = SetPartition([[3, 4], [1], [2]])
    assert sp.block_of(4) == frozenset({3, 4})
    assert len(sp) == 3
    with pytest.raises(InputError):
        SetPartition([[1, 2], [2, 3]])
