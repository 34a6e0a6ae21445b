from fractions import Fraction
from math import factorial

import pytest

from conftest import naive_pk

from fatgraph_reembed.counting import (
    PkTable,
    factorization_counts,
    kappa,
    p1_stanley,
    pk_max_closed,
    pk_max_oracle,
    pk_oracle,
    pk_recurrence,
    q_lambda,
    r_nu_closed_form,
    splits,
    zagier_bounds,
)
from fatgraph_reembed.errors import CapExceeded, ConventionError, InputError
from fatgraph_reembed.perm import CycleType, Permutation, partitions
from fatgraph_reembed.reembed import local_one_face_count, reversed_rotation_localization

# frozen from conftest.naive_pk (plain itertools enumeration)
GOLDEN = {
    (1,): {1: 1},
    (2,): {2: 1},
    (3,): {1: 1, 3: 1},
    (2, 1): {2: 2},
    (1, 1, 1): {1: 2},
    (4,): {2: 5, 4: 1},
    (3, 1): {1: 3, 3: 3},
    (2, 2): {1: 2, 3: 4},
    (2, 1, 1): {2: 6},
    (1, 1, 1, 1): {1: 6},
    (5,): {1: 8, 3: 15, 5: 1},
    (3, 1, 1): {1: 12, 3: 12},
    (2, 2, 1): {1: 8, 3: 16},
    (3, 3): {1: 36, 3: 75, 5: 9},
    (2, 2, 2): {2: 80, 4: 40},
    (4, 2): {1: 32, 3: 80, 5: 8},
    (7,): {1: 180, 3: 469, 5: 70, 7: 1},
    (3, 3, 1): {1: 216, 3: 450, 5: 54},
    (5, 1, 1): {1: 240, 3: 450, 5: 30},
}


@pytest.mark.parametrize("parts", sorted(GOLDEN))
def test_golden_tables(parts):
    expected = GOLDEN[parts]
    assert pk_oracle(parts).counts == expected
    assert pk_recurrence(parts).counts == expected
    assert pk_recurrence(parts, base="oracle").counts == expected
    assert p1_stanley(parts) == expected.get(1, 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_matches_naive(n):
    for lam in partitions(n):
        assert pk_oracle(lam).counts == dict(naive_pk(lam.parts))


@pytest.mark.parametrize("n", range(1, 8))
def test_three_routes_agree(n):
    for lam in partitions(n):
        table = pk_oracle(lam)
        table.check()
        assert pk_recurrence(lam) == table
        assert p1_stanley(lam) == table[1]
        assert pk_max_closed(lam) == pk_max_oracle(lam)
        assert table.k_max == n + 1 - lam.length


def test_table_check_catches_bad_counts():
    with pytest.raises(ConventionError):
        PkTable((3, 1), {1: 3, 3: 2}).check()
    with pytest.raises(ConventionError):
        PkTable((3, 1), {1: 4, 2: 2}).check()
    assert PkTable((3, 1), {1: 3, 3: 3}).to_tsv() == "1\t3\n3\t3\n"


def test_recurrence_beyond_oracle_range():
    lam = CycleType((2,) * 6)
    table = pk_recurrence(lam)
    table.check()
    assert table[1] == p1_stanley(lam)
    assert pk_recurrence((13,))[1] == 2 * factorial(12) // 14


def test_custom_base_callable():
    calls = []

    def base(mu):
        calls.append(mu)
        return pk_max_closed(mu)

    assert pk_recurrence((2, 2, 1, 1), base=base) == pk_oracle((2, 2, 1, 1))
    assert calls


def test_q_lambda():
    assert q_lambda((3, 1)) == 8
    assert q_lambda((2, 2)) == 3
    assert q_lambda("1,1,1,1") == 1


def test_splits():
    assert [str(x) for x in splits((3, 1), 3)] == ["1,1,1,1"]
    assert [str(x) for x in splits((5,), 3)] == ["3,1,1", "2,2,1"]
    assert splits((2, 2), 3) == []
    with pytest.raises(InputError):
        splits((5,), 2)


def test_kappa_counts_equal_parts_as_distinct():
    # three 1-parts, merge all three
    assert kappa((1, 1, 1, 1), (3, 1)) == 4
    # choose which 1 joins the 2: two ways
    assert kappa((2, 1, 1), (3, 1)) == 2
    assert kappa((2, 1, 1), (2, 2)) == 1
    assert kappa((3, 1), (3, 1)) == 0


def test_factorization_counts_on_arbitrary_labels():
    d = Permutation.from_cycles([(10, 30, 20), (40,)])
    assert factorization_counts(d) == {1: 3, 3: 3}


def test_pk_cap():
    with pytest.raises(CapExceeded):
        pk_oracle((13,))
    with pytest.raises(CapExceeded):
        pk_oracle((6, 5), cap=8)


def test_pk_cap_warns_above_soft_limit():
    with pytest.warns(RuntimeWarning):
        factorization_counts(CycleType((11,)).canonical(), cap=11)


@pytest.mark.parametrize("d, value", [(3, 1), (4, 2), (5, 8), (6, 36), (7, 180), (8, 1104), (9, 8064)])
def test_closed_form_for_reversed_rotation(d, value):
    assert r_nu_closed_form(d) == value
    if d <= 8:
        assert local_one_face_count(reversed_rotation_localization(d)) == value


def test_closed_form_rejects_small_degree():
    with pytest.raises(InputError):
        r_nu_closed_form(2)


def test_reversed_rotation_diagonal():
    p = reversed_rotation_localization(5)
    assert p.s == Permutation.from_cycles([(1, 2, 3, 4, 5)])
    assert p.pi == Permutation.from_cycles([(1, 5, 4, 3, 2)])
    # its diagonal is s^2
    assert p.diagonal == p.s * p.s


def test_zagier_bounds_examples():
    b = zagier_bounds((3,))
    assert b.lower == Fraction(4, 5)
    assert b.upper == Fraction(58, 53)
    assert 1 in b
    b = zagier_bounds((2, 2))
    assert (b.lower, b.upper) == (Fraction(2), Fraction(116, 45))
    with pytest.raises(InputError):
        zagier_bounds((2, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_zagier_bounds_hold(n):
    for lam in partitions(n):
        if lam.is_even():
            assert p1_stanley(lam) in zagier_bounds(lam)
        else:
            assert pk_recurrence(lam)[1] == 0


@pytest.mark.parametrize("n", [4, 5, 6])
def test_even_types_have_two_factorizations(n):
    for lam in partitions(n):
        if lam.is_even():
            assert pk_recurrence(lam)[1] >= 2
