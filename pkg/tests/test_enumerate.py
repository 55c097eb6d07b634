import pytest

from akdual.generator.enumerate import all_patterns, brute_force_patterns, patterns_up_to
from akdual.pattern import normalize

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_all_patterns__n3_inventory():
    found = {p.relations for p in all_patterns(3)}
    assert found == {(), ((0, 2),), ((0, 3),), ((1, 3),), ((0, 2), (1, 3))}


@pytest.mark.parametrize("n", range(6))
def test_all_patterns__matches_brute_force(n):
    assert sorted(p.relations for p in all_patterns(n)) == \
        sorted(p.relations for p in brute_force_patterns(n))


def test_all_patterns__counts():
    assert [len(list(all_patterns(n))) for n in range(9)] == CATALAN


def test_patterns_up_to__totals():
    assert len(list(patterns_up_to(0))) == 1
    assert len(list(patterns_up_to(5))) == 65
    assert len(list(patterns_up_to(8))) == 2056


def test_patterns_up_to__contains_a_series_examples():
    found = set(patterns_up_to(6))
    assert normalize(6, [(0, 3), (3, 6)]) in found
    assert normalize(6, [(0, 3), (2, 4), (3, 6)]) in found


def test_all_patterns__no_duplicates():
    patterns = list(all_patterns(7))
    assert len(set(patterns)) == len(patterns)
