"""Finite directed A-infinity categories given by a basis of morphisms and a signed mu table.

Argument order everywhere is mu^d(a_d, ..., a_1): a table key lists the last-applied morphism
first and a_1, the morphism applied first (the source-most one), last.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np

from akdual.gf2 import gf2_solvable


class CategoryError(ValueError):
    pass


@dataclass(frozen=True)
class Morphism:
    label: str
    src: str
    dst: str
    degree: int
    identity: bool = False


@dataclass(frozen=True)
class SignedTerm:
    coefficient: Fraction
    basis: str = None

    def is_zero(self):
        return self.coefficient == 0

    def __str__(self):
        if self.is_zero():
            return "0"
        c = self.coefficient
        prefix = "+" if c == 1 else "-" if c == -1 else "%s*" % c
        return prefix + self.basis


ZERO = SignedTerm(Fraction(0))


class GradedBasisCategory:
    """Objects in their total order, basis morphisms and mu values.

    Args:
        objects (list): object names, lowest first.
        morphisms (list): Morphism instances, one identity per object included.
        mu_table (dict): key tuple of labels (a_d, ..., a_1) -> (coefficient, output label).
        name (str): free-form description used in reports.
    """

    def __init__(self, objects, morphisms, mu_table, name=""):
        self.name = name
        self.objects = tuple(objects)
        self.position = {x: i for i, x in enumerate(self.objects)}
        if len(self.position) != len(self.objects):
            raise CategoryError("duplicate object names in %r" % (self.objects,))
        self.morphisms = tuple(morphisms)
        self.by_label = {}
        for f in self.morphisms:
            if f.label in self.by_label:
                raise CategoryError("duplicate morphism label %s" % f.label)
            self.by_label[f.label] = f
        self.mu_table = {}
        for key, (coefficient, out) in mu_table.items():
            coefficient = Fraction(coefficient)
            if coefficient != 0:
                self.mu_table[tuple(key)] = (coefficient, out)
        self._homs = {}
        for f in self.morphisms:
            self._homs.setdefault((f.src, f.dst), []).append(f)
        self._validate()

    def _validate(self):
        identities = {}
        for f in self.morphisms:
            if f.src not in self.position or f.dst not in self.position:
                raise CategoryError("morphism %s has an unknown endpoint" % f.label)
            if f.identity:
                if f.src != f.dst or f.degree != 0:
                    raise CategoryError("identity %s must be a degree 0 endomorphism" % f.label)
                if f.src in identities:
                    raise CategoryError("object %s has two identities" % f.src)
                identities[f.src] = f
            elif self.position[f.src] >= self.position[f.dst]:
                raise CategoryError("morphism %s: %s -> %s breaks directedness" %
                                    (f.label, f.src, f.dst))
        missing = [x for x in self.objects if x not in identities]
        if missing:
            raise CategoryError("objects without identity: %s" % ", ".join(missing))
        self._identities = identities

        for key, (coefficient, out) in self.mu_table.items():
            args = self._resolve(key)
            if out not in self.by_label:
                raise CategoryError("mu%s has unknown output %s" % (key, out))
            if len(key) != 2 and any(a.identity for a in args):
                raise CategoryError("mu^%d%s contains an identity (strict unitality)" % (len(key), key))
            result = self.by_label[out]
            if (result.src, result.dst) != (args[0].src, args[-1].dst):
                raise CategoryError("mu%s = %s has the wrong endpoints" % (key, out))
            if result.degree != sum(a.degree for a in args) + 2 - len(args):
                raise CategoryError("mu%s = %s breaks the degree law" % (key, out))

    def _resolve(self, key):
        """The morphisms of a key in application order a_1, ..., a_d; checks composability."""
        if len(key) == 0:
            raise CategoryError("mu needs at least one argument")
        try:
            args = [self.by_label[label] for label in reversed(key)]
        except KeyError as e:
            raise CategoryError("unknown morphism %s" % e)
        for first, second in zip(args, args[1:]):
            if first.dst != second.src:
                raise CategoryError("arguments %s, %s are not composable" % (second.label, first.label))
        return args

    def morphism(self, label):
        return self.by_label[label]

    def identity(self, obj):
        return self._identities[obj]

    def hom(self, src, dst):
        return list(self._homs.get((src, dst), []))

    def non_identity(self):
        return [f for f in self.morphisms if not f.identity]

    def entries(self):
        """mu entries sorted by arity, then by the morphism order of their keys."""
        order = {f.label: i for i, f in enumerate(self.morphisms)}
        return sorted(self.mu_table.items(), key=lambda e: (len(e[0]), [order[x] for x in e[0]]))

    def nonunital_entries(self):
        return [(key, value) for key, value in self.entries()
                if not any(self.by_label[x].identity for x in key)]


def mu_eval(cat, args):
    """mu^d(a_d, ..., a_1) on basis morphisms given by label, as a SignedTerm."""
    key = tuple(args)
    cat._resolve(key)
    if key not in cat.mu_table:
        return ZERO
    coefficient, out = cat.mu_table[key]
    return SignedTerm(coefficient, out)


def restrict_directed(cat, ordered_subset):
    """The directed subcategory on `ordered_subset`, objects ordered as listed."""
    subset = list(ordered_subset)
    unknown = [x for x in subset if x not in cat.position]
    if unknown:
        raise CategoryError("unknown objects: %s" % ", ".join(map(str, unknown)))
    if len(set(subset)) != len(subset):
        raise CategoryError("objects listed twice in %r" % (subset,))
    position = {x: i for i, x in enumerate(subset)}

    def keep(f):
        if f.src not in position or f.dst not in position:
            return False
        return f.identity or position[f.src] < position[f.dst]

    morphisms = [f for f in cat.morphisms if keep(f)]
    kept = {f.label for f in morphisms}
    table = {key: value for key, value in cat.mu_table.items()
             if all(x in kept for x in key) and value[1] in kept}
    return GradedBasisCategory(subset, morphisms, table, name="%s|%s" % (cat.name, ",".join(subset)))


def hom_table(cat):
    """numpy array H[x, y, d] = dim hom^d(X, Y), objects indexed by position."""
    size = len(cat.objects)
    top = max([f.degree for f in cat.morphisms] + [0])
    table = np.zeros((size, size, top + 1), dtype=int)
    for f in cat.morphisms:
        table[cat.position[f.src], cat.position[f.dst], f.degree] += 1
    return table


def _bucket_key(cat, f):
    return (cat.position[f.src], cat.position[f.dst], f.degree)


def _signs_solvable(a, b, mapping):
    """GF(2) system for per-morphism signs e_x with mapping(x) = e_x x an isomorphism.

    Each entry mu_a(x_d..x_1) = c_a y gives e_y + sum e_xi = [c_b / c_a == -1].
    """
    if len(a.mu_table) != len(b.mu_table):
        return False
    variables = {f.label: i for i, f in enumerate(a.non_identity())}
    rows, rhs = [], []
    for key, (c_a, out) in a.mu_table.items():
        image = tuple(mapping[x] for x in key)
        if image not in b.mu_table:
            return False
        c_b, out_b = b.mu_table[image]
        if out_b != mapping[out] or abs(c_b) != abs(c_a):
            return False
        row = np.zeros(len(variables), dtype=np.uint8)
        for x in key + (out,):
            if x in variables:
                row[variables[x]] ^= 1
        rows.append(row)
        rhs.append(1 if c_b != c_a else 0)
    if not rows:
        return True
    return gf2_solvable(np.array(rows).reshape(len(rows), len(variables)), rhs)


def categories_isomorphic(a, b):
    """True when an order-preserving object bijection and a degree-preserving basis bijection
    carry the mu table of `a` onto that of `b` up to per-basis sign rescaling.
    """
    if len(a.objects) != len(b.objects) or len(a.morphisms) != len(b.morphisms):
        return False
    object_map = dict(zip(a.objects, b.objects))
    mapping = {a.identity(x).label: b.identity(object_map[x]).label for x in a.objects}

    buckets_a, buckets_b = {}, {}
    for f in a.non_identity():
        buckets_a.setdefault(_bucket_key(a, f), []).append(f.label)
    for f in b.non_identity():
        buckets_b.setdefault(_bucket_key(b, f), []).append(f.label)
    if {k: len(v) for k, v in buckets_a.items()} != {k: len(v) for k, v in buckets_b.items()}:
        return False
    keys = sorted(buckets_a)

    def search(index):
        if index == len(keys):
            return _signs_solvable(a, b, mapping)
        source = buckets_a[keys[index]]
        for target in permutations(buckets_b[keys[index]]):
            mapping.update(zip(source, target))
            if search(index + 1):
                return True
        for label in source:
            mapping.pop(label, None)
        return False

    return search(0)


def _scalar(c):
    return int(c) if c.denominator == 1 else str(c)


def serialize(cat):
    return {
        'objects': list(cat.objects),
        'morphisms': [[f.label, f.src, f.dst, f.degree] for f in cat.morphisms],
        'mu': [[len(key), list(key), _scalar(c), out] for key, (c, out) in cat.entries()],
    }
