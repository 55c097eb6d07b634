import pytest

from akdual.core_diagram import (admissible_chains, check_chain_bijection, check_intersections,
                                 check_relation_polygons, intersection_degrees, intersection_pairs,
                                 marked_order, polygon, relation_polygon)
from akdual.dual import build_dual, eta
from akdual.generator.enumerate import patterns_up_to
from akdual.pattern import PatternError, normalize


@pytest.fixture
def a1():
    return normalize(3, [(0, 3)])


@pytest.fixture
def a2():
    return normalize(6, [(0, 3), (3, 6)])


@pytest.fixture
def a3():
    return normalize(6, [(0, 3), (2, 4), (3, 6)])


def test_marked_order__a3_plain_sides(a3):
    plain = {p: marked_order(a3, p).plain_side for p in range(1, 7)}
    assert plain[6] == ((6, 3), (6, 0), (6, 2), (6, 5))
    assert plain[4] == ((4, 2), (4, 0), (4, 3))
    assert plain[3] == ((3, 0), (3, 2))
    assert plain[1] == ((1, 0),)


def test_marked_order__a3_full_curve(a3):
    curve = marked_order(a3, 2)
    assert curve.root == (2, 2)
    assert curve.points == ((2, 2), (3, 2), (6, 2), (4, 2), (2, 1))


def test_marked_order__no_relations_interior_curve():
    curve = marked_order(normalize(4, []), 2)
    assert curve.points == ((2, 2), (3, 2), (2, 1))


def test_relation_polygon__a1_quadrangle(a1):
    poly = relation_polygon(a1, 1)
    assert poly.vertices == ((1, 0), (2, 1), (3, 2), (3, 0))
    assert poly.closed()
    assert poly.word() == ["[3,1]_0", "[0,2]_1", "[1,3]_2", "[2,0]_3"]


def test_relation_polygon__a3_triangle(a3):
    poly = relation_polygon(a3, 2)
    assert [e.curve for e in poly.edges] == [2, 3, 4]


def test_relation_polygon__a2_quadrangles(a2):
    assert [len(relation_polygon(a2, j).edges) for j in (1, 2)] == [4, 4]
    assert [e.curve for e in relation_polygon(a2, 2).edges] == [3, 4, 5, 6]


def test_relation_polygon__index_out_of_range(a1):
    with pytest.raises(PatternError):
        relation_polygon(a1, 2)
    with pytest.raises(PatternError):
        relation_polygon(a1, 0)


def test_polygon__a3_chain_triangle(a3):
    poly = polygon(a3, (0, 3, 6))
    assert poly.vertices == ((3, 0), (6, 3), (6, 0))
    assert poly.closed()


def test_intersection_degrees__a3(a3):
    degrees = intersection_degrees(a3)
    assert degrees[(6, 0)] == 4
    assert degrees[(4, 2)] == 2
    assert (5, 3) not in degrees


def test_admissible_chains__a1(a1):
    chains = admissible_chains(a1, build_dual(a1))
    assert [c.vertices for c in chains] == [(0, 1, 2, 3)]
    assert chains[0].value == "+eta(3,0)"
    assert chains[0].key() == (eta(1, 0), eta(2, 1), eta(3, 2))


def test_admissible_chains__no_relations():
    pattern = normalize(4, [])
    assert admissible_chains(pattern, build_dual(pattern)) == []


def test_admissible_chains__a3(a3):
    chains = admissible_chains(a3, build_dual(a3))
    assert (0, 3, 6) in [c.vertices for c in chains]
    assert len(chains) == 10
    assert [c.output_degree for c in chains if c.vertices == (0, 3, 6)] == [4]


def test_check_relation_polygons__a1_interior_counts(a1):
    report = check_relation_polygons(a1)
    assert report.passed
    assert report.notes['interior_points'] == {1: [0, 0, 0, 0]}


def test_polygon_inventory__a_series_examples(a1, a2, a3):
    assert [len(relation_polygon(a1, j).edges) for j in range(1, a1.m + 1)] == [4]
    assert [len(relation_polygon(a2, j).edges) for j in range(1, a2.m + 1)] == [4, 4]
    assert sorted(len(relation_polygon(a3, j).edges) for j in range(1, a3.m + 1)) == [3, 4, 4]


def test_intersection_pairs__agree_up_to_9():
    for pattern in patterns_up_to(9):
        from_plain, from_dagger = intersection_pairs(pattern)
        assert from_plain == from_dagger, str(pattern)


def test_diagram_checks__all_patterns_up_to_6():
    for pattern in patterns_up_to(6):
        dual = build_dual(pattern)
        for report in (check_intersections(pattern), check_relation_polygons(pattern),
                       check_chain_bijection(pattern, dual)):
            assert report.passed, (str(pattern), report.name, report.failures)
