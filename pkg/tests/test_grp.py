import numpy as np
import pytest

from u21 import grp
from u21.errors import EnumerationTooLarge, EvenCharacteristic, UnsupportedRank


def test_generators_are_unitary():
    for q0, rank in [(3, 3), (3, 2), (5, 3), (5, 2), (7, 2)]:
        spec = grp.unitary_group(q0, rank)
        for g in spec.generators:
            assert spec.is_unitary(g)
            assert spec.is_unitary(spec.inverse(g))


def test_orders_match_formula():
    for q0, rank in [(3, 3), (3, 2), (5, 2), (7, 2)]:
        spec = grp.unitary_group(q0, rank)
        assert grp.group_order(spec, "enumerate") == grp.order_formula(q0, rank)


def test_bad_parameters():
    with pytest.raises(EvenCharacteristic):
        grp.unitary_group(2, 3)
    with pytest.raises(UnsupportedRank):
        grp.unitary_group(3, 4)
    spec = grp.unitary_group(5, 3)
    with pytest.raises(EnumerationTooLarge):
        grp.group_order(spec, "enumerate")


def test_flag_table_size_and_sections():
    for q0, rank in [(3, 3), (3, 2), (5, 3)]:
        spec = grp.unitary_group(q0, rank)
        table = grp.flag_table(spec)
        expected = q0 ** 3 + 1 if rank == 3 else q0 + 1
        assert len(table) == expected
        for s in table.sections:
            assert spec.is_unitary(s)
    # the standard section is the identity
    spec = grp.unitary_group(3, 3)
    table = grp.flag_table(spec)
    assert np.array_equal(table.sections[table.standard_index],
                          np.eye(3, dtype=np.int64))


def test_borel_membership_counts():
    spec = grp.unitary_group(3, 2)
    table = grp.flag_table(spec)
    # exactly one section (the standard one) lies in B
    in_b = [grp.borel_membership(spec, s)[0] for s in table.sections]
    assert sum(in_b) == 1
    assert in_b[table.standard_index]


def test_coset_action_is_an_action():
    spec = grp.unitary_group(3, 3)
    table = grp.flag_table(spec)
    F = spec.field
    g, h = spec.generators[0], spec.generators[5]
    gh = F.matmul(g, h)
    for i in range(len(table)):
        j1, b_h = grp.coset_action(spec, table, h, i)
        j2, b_g = grp.coset_action(spec, table, g, j1)
        j3, b_gh = grp.coset_action(spec, table, gh, i)
        assert j3 == j2
        # cocycle: b(gh, i) = b(g, h.i) b(h, i)
        assert np.array_equal(b_gh, F.matmul(b_g, b_h))


def test_coset_action_b_upper_triangular():
    spec = grp.unitary_group(5, 3)
    table = grp.flag_table(spec)
    for g in spec.generators:
        for i in range(0, len(table), 7):
            _, b = grp.coset_action(spec, table, g, i)
            assert not np.tril(b, -1).any()
            assert grp.borel_membership(spec, b)[0]
