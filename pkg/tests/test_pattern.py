import os

import pytest

from akdual.generator.enumerate import patterns_up_to
from akdual.pattern import (PatternError, RelationPattern, compose_paths, find_redundant,
                            load_pattern_file, normalize, parse_pattern_document, path_survives,
                            quadratic_complement, reflect)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture
def a1():
    return normalize(3, [(0, 3)])


@pytest.fixture
def a3():
    return normalize(6, [(3, 6), (0, 3), (2, 4)])


def test_normalize__sorts_relations(a3):
    assert a3.relations == ((0, 3), (2, 4), (3, 6))
    assert a3.S == (0, 2, 3)
    assert a3.T == (3, 4, 6)


def test_normalize__drops_containing_relation():
    pattern = normalize(4, [(0, 4), (1, 3)])
    assert pattern.relations == ((1, 3),)
    assert pattern.redundant == ((0, 4),)


def test_normalize__is_idempotent(a3):
    assert normalize(a3.n, a3.relations) == a3


def test_normalize__length_one_relation_is_rejected():
    with pytest.raises(PatternError, match=r"\(2,3\)"):
        normalize(3, [(2, 3)])


def test_normalize__out_of_range_relation_is_rejected():
    with pytest.raises(PatternError):
        normalize(3, [(1, 4)])


def test_normalize__duplicate_relation_is_rejected():
    with pytest.raises(PatternError, match="twice"):
        normalize(4, [(0, 2), (0, 2)])


def test_normalize__empty_and_single_vertex_patterns_are_valid():
    assert normalize(4, []).m == 0
    assert normalize(0, []).n == 0


def test_relation_pattern__rejects_crossing_monotonicity():
    with pytest.raises(PatternError):
        RelationPattern(5, ((1, 4), (2, 4)))


def test_find_redundant__reports_every_containing_interval():
    assert find_redundant(6, [(0, 6), (1, 5), (2, 4)]) == [(0, 6), (1, 5)]


def test_path_survives__a1(a1):
    assert not path_survives(a1, 0, 3)
    assert path_survives(a1, 0, 2)
    assert path_survives(a1, 1, 3)
    assert not path_survives(a1, 2, 1)


def test_path_survives__identity_paths(a3):
    assert all(path_survives(a3, i, i) for i in a3.vertices)


def test_path_survives__a3(a3):
    assert path_survives(a3, 1, 3)
    assert not path_survives(a3, 1, 4)
    assert not path_survives(a3, 0, 6)


def test_path_survives__vertex_out_of_range(a1):
    with pytest.raises(PatternError):
        path_survives(a1, 0, 4)


def test_path_survives__subpaths_survive_for_all_patterns_up_to_6():
    for pattern in patterns_up_to(6):
        for i in pattern.vertices:
            for k in range(i, pattern.n + 1):
                if path_survives(pattern, i, k):
                    assert all(path_survives(pattern, i, j) and path_survives(pattern, j, k)
                               for j in range(i, k + 1))


def test_compose_paths__zero_product(a1):
    assert compose_paths(a1, (0, 2), (2, 3)) is None
    assert compose_paths(a1, (0, 1), (1, 2)) == (0, 2)


def test_compose_paths__not_composable(a1):
    with pytest.raises(PatternError):
        compose_paths(a1, (0, 1), (2, 3))


def test_compose_paths__associative_for_all_patterns_up_to_8():
    for pattern in patterns_up_to(8):
        basis = [(i, j) for i in pattern.vertices for j in range(i, pattern.n + 1)
                 if path_survives(pattern, i, j)]
        for (i, j) in basis:
            for (j2, k) in basis:
                if j2 != j:
                    continue
                for (k2, l) in basis:
                    if k2 != k:
                        continue
                    left = compose_paths(pattern, (i, j), (j, k))
                    right = compose_paths(pattern, (j, k), (k, l))
                    lhs = None if left is None else compose_paths(pattern, left, (k, l))
                    rhs = None if right is None else compose_paths(pattern, (i, j), right)
                    assert lhs == rhs


def test_quadratic_complement__examples():
    assert quadratic_complement(normalize(4, [(0, 2), (2, 4)])).relations == ((1, 3),)
    assert quadratic_complement(normalize(4, [(0, 2), (1, 3), (2, 4)])).relations == ()
    assert quadratic_complement(normalize(3, [(1, 3)])).relations == ((0, 2),)


def test_quadratic_complement__rejects_long_relation(a1):
    with pytest.raises(PatternError):
        quadratic_complement(a1)


def test_reflect__a3(a3):
    assert reflect(a3).relations == ((0, 3), (2, 4), (3, 6))
    assert reflect(normalize(5, [(0, 2)])).relations == ((3, 5),)


def test_reflect__is_an_involution():
    for pattern in patterns_up_to(6):
        assert reflect(reflect(pattern)) == pattern


def test_parse_pattern_document__defaults_to_no_relations():
    assert parse_pattern_document("n: 3\n").relations == ()


def test_parse_pattern_document__rejects_non_mapping():
    with pytest.raises(PatternError):
        parse_pattern_document("- 1\n- 2\n")


def test_parse_pattern_document__rejects_bad_pair():
    with pytest.raises(PatternError, match="pair"):
        parse_pattern_document("n: 3\nrelations: [[0, 1, 2]]\n")


def test_load_pattern_file__a3():
    pattern = load_pattern_file(os.path.join(FIXTURES, "a3.yaml"))
    assert pattern == normalize(6, [(0, 3), (2, 4), (3, 6)])


def test_load_pattern_file__bad_length():
    with pytest.raises(PatternError, match="length"):
        load_pattern_file(os.path.join(FIXTURES, "bad_length.yaml"))


def test_load_pattern_file__binary_document(tmp_path):
    path = tmp_path / "pattern.yaml"
    path.write_bytes(b"n: 3\nrelations: [[0, \xff]]\n")
    with pytest.raises(PatternError, match="not a text document"):
        load_pattern_file(str(path))
