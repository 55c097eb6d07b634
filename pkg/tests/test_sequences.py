import pytest

from akdual.generator.enumerate import patterns_up_to
from akdual.pattern import normalize
from akdual.sequences import (NEG_INF, POS_INF, check_dagger_bound, check_inversion,
                              check_monotone, check_reflection, check_relation_tail,
                              counting_duality, d_dagger, d_map, ext_sequence, ext_sequence_dual,
                              format_vertex, sequence_table)


@pytest.fixture
def a3():
    return normalize(6, [(0, 3), (2, 4), (3, 6)])


def test_d_map__a3(a3):
    assert [d_map(a3, p) for p in a3.vertices] == [NEG_INF] * 3 + [0, 2, 2, 3]


def test_d_dagger__a3(a3):
    assert [d_dagger(a3, p) for p in a3.vertices] == [3, 4, 4, 6, POS_INF, POS_INF, POS_INF]


def test_ext_sequence__a3_reproduces_all_seven_sequences(a3):
    expected = [(0,), (1, 0), (2, 1), (3, 2, 0), (4, 3, 2, 0), (5, 4), (6, 5, 3, 2, 0)]
    assert [ext_sequence(a3, p).values for p in a3.vertices] == expected


def test_ext_sequence__lengths(a3):
    assert [ext_sequence(a3, p).length for p in a3.vertices] == [0, 1, 1, 2, 3, 1, 4]


def test_ext_sequence__no_relations():
    pattern = normalize(4, [])
    assert ext_sequence(pattern, 0).values == (0,)
    assert ext_sequence(pattern, 3).values == (3, 2)


def test_ext_sequence_dual__a3(a3):
    assert ext_sequence_dual(a3, 2).values == (2, 3, 4, 6)
    assert ext_sequence_dual(a3, 6).values == (6,)


def test_ext_sequence_dual__a1():
    assert ext_sequence_dual(normalize(3, [(0, 3)]), 0).values == (0, 1, 3)


def test_index_of__degree_positions(a3):
    seq = ext_sequence(a3, 6)
    assert seq.index_of(0) == 4
    assert seq.index_of(4) is None


def test_format_vertex__infinities():
    assert format_vertex(NEG_INF) == "-inf"
    assert format_vertex(POS_INF) == "+inf"
    assert format_vertex(3) == 3


def test_counting_duality__a3(a3):
    report = counting_duality(a3)
    assert report.passed
    assert report.notes == {'sum_plain': 12, 'sum_dagger': 12}


def test_check_inversion__a3_counts_same_flavour_reading(a3):
    report = check_inversion(a3)
    assert report.passed
    assert report.notes['plain_entries'] == 12
    assert report.notes['same_flavor_holds'] < report.notes['plain_entries'] + report.notes['dagger_entries']


def test_sequence_table__is_cached(a3):
    assert sequence_table(a3) is sequence_table(normalize(6, [(3, 6), (0, 3), (2, 4)]))


def test_combinatorial_checks__hold_for_all_patterns_up_to_9():
    for pattern in patterns_up_to(9):
        for check in (check_monotone, check_inversion, check_dagger_bound, counting_duality,
                      check_relation_tail, check_reflection):
            report = check(pattern)
            assert report.passed, (str(pattern), report.name, report.failures)

