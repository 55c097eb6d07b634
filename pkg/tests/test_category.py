from fractions import Fraction

import numpy as np
import pytest

from akdual.category import (CategoryError, GradedBasisCategory, Morphism, categories_isomorphic,
                             hom_table, mu_eval, restrict_directed, serialize)
from akdual.dual import add_units, build_dual, eta, obj
from akdual.gf2 import gf2_rank, gf2_solvable
from akdual.pattern import normalize


def chain_category(sign=1, extra_degree=0):
    """X -> Y -> Z with f, g of degree 1 and one mu^2(g, f) = sign * h."""
    morphisms = [
        Morphism("1X", "X", "X", 0, identity=True),
        Morphism("1Y", "Y", "Y", 0, identity=True),
        Morphism("1Z", "Z", "Z", 0, identity=True),
        Morphism("f", "X", "Y", 1),
        Morphism("g", "Y", "Z", 1),
        Morphism("h", "X", "Z", 2 + extra_degree),
    ]
    table = {("g", "f"): (sign, "h")} if extra_degree == 0 else {}
    add_units(morphisms, table)
    return GradedBasisCategory(["X", "Y", "Z"], morphisms, table)


@pytest.fixture
def a1_dual():
    return build_dual(normalize(3, [(0, 3)]))


def test_mu_eval__a1_triple_product(a1_dual):
    value = mu_eval(a1_dual, (eta(1, 0), eta(2, 1), eta(3, 2)))
    assert value.basis == eta(3, 0)
    assert value.coefficient == 1
    assert str(value) == "+eta(3,0)"


def test_mu_eval__zero_entry(a1_dual):
    assert mu_eval(a1_dual, (eta(2, 1), eta(3, 2))).is_zero()


def test_mu_eval__not_composable(a1_dual):
    with pytest.raises(CategoryError, match="composable"):
        mu_eval(a1_dual, (eta(3, 2), eta(1, 0)))


def test_mu_eval__unknown_label(a1_dual):
    with pytest.raises(CategoryError):
        mu_eval(a1_dual, ("eta(9,9)",))


def test_mu_eval__units(a1_dual):
    assert mu_eval(a1_dual, (eta(3, 2), eta(3, 3))).coefficient == 1
    assert mu_eval(a1_dual, (eta(2, 2), eta(3, 2))).coefficient == -1
    assert mu_eval(a1_dual, (eta(0, 0), eta(3, 0))).coefficient == 1


def test_category__zero_coefficients_are_dropped():
    cat = chain_category(sign=0)
    assert ("g", "f") not in cat.mu_table


def test_category__rejects_upward_morphism():
    morphisms = [Morphism("1X", "X", "X", 0, identity=True), Morphism("1Y", "Y", "Y", 0, identity=True),
                 Morphism("b", "Y", "X", 0)]
    with pytest.raises(CategoryError, match="directedness"):
        GradedBasisCategory(["X", "Y"], morphisms, {})


def test_category__rejects_degree_law_violation():
    morphisms = [Morphism("1X", "X", "X", 0, identity=True), Morphism("1Y", "Y", "Y", 0, identity=True),
                 Morphism("1Z", "Z", "Z", 0, identity=True), Morphism("f", "X", "Y", 1),
                 Morphism("g", "Y", "Z", 1), Morphism("h", "X", "Z", 1)]
    with pytest.raises(CategoryError, match="degree law"):
        GradedBasisCategory(["X", "Y", "Z"], morphisms, {("g", "f"): (1, "h")})


def test_category__rejects_identity_in_higher_mu():
    cat = chain_category()
    table = dict(cat.mu_table)
    table[("g", "1Y", "f")] = (1, "h")
    with pytest.raises(CategoryError, match="unitality"):
        GradedBasisCategory(cat.objects, cat.morphisms, table)


def test_category__rejects_missing_identity():
    with pytest.raises(CategoryError, match="identity"):
        GradedBasisCategory(["X"], [], {})


def test_restrict_directed__keeps_homs_between_kept_objects(a1_dual):
    sub = restrict_directed(a1_dual, [obj(3), obj(0)])
    assert [f.label for f in sub.non_identity()] == [eta(3, 0)]
    assert not sub.nonunital_entries()


def test_restrict_directed__reordering_drops_reversed_homs(a1_dual):
    sub = restrict_directed(a1_dual, [obj(0), obj(3)])
    assert sub.non_identity() == []


def test_restrict_directed__unknown_object(a1_dual):
    with pytest.raises(CategoryError):
        restrict_directed(a1_dual, [obj(7)])


def test_hom_table__a1(a1_dual):
    table = hom_table(a1_dual)
    assert table.shape == (4, 4, 3)
    assert table[0, 3, 2] == 1
    assert table[0, 1, 1] == 1
    assert table.sum() == 8


def test_categories_isomorphic__up_to_sign_rescaling():
    assert categories_isomorphic(chain_category(1), chain_category(-1))


def test_categories_isomorphic__different_products():
    assert not categories_isomorphic(chain_category(1), chain_category(extra_degree=0, sign=0))


def test_categories_isomorphic__different_degrees():
    assert not categories_isomorphic(chain_category(1), chain_category(extra_degree=1))


def test_categories_isomorphic__self(a1_dual):
    assert categories_isomorphic(a1_dual, a1_dual)


def test_serialize__a1_entry(a1_dual):
    data = serialize(a1_dual)
    assert data['objects'] == ["B(3)", "B(2)", "B(1)", "B(0)"]
    assert data['mu'][-1] == [3, [eta(1, 0), eta(2, 1), eta(3, 2)], 1, eta(3, 0)]
    assert [eta(3, 0), "B(3)", "B(0)", 2] in data['morphisms']


def test_gf2_rank__examples():
    assert gf2_rank(np.array([[1, 1], [1, 1]])) == 1
    assert gf2_rank(np.eye(3, dtype=np.uint8)) == 3
    assert gf2_rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2


def test_gf2_solvable__examples():
    a = np.array([[1, 1], [1, 1]])
    assert gf2_solvable(a, [1, 1])
    assert not gf2_solvable(a, [1, 0])
    assert gf2_solvable(np.zeros((2, 0)), [0, 0])
    assert not gf2_solvable(np.zeros((2, 0)), [0, 1])


def test_signed_term__fractional_coefficient_prints():
    cat = chain_category()
    table = dict(cat.mu_table)
    table[("g", "f")] = (Fraction(1, 2), "h")
    assert str(mu_eval(GradedBasisCategory(cat.objects, cat.morphisms, table), ("g", "f"))) == "1/2*h"
