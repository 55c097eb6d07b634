"""Relation patterns (n, S, T) and the monomial path algebra R_{S,T} over the A_n quiver.

Vertices are 0..n, the arrow alpha_j runs from j-1 to j, and a relation (s, t) kills the path
from s to t. A path (i, j) with i <= j survives when no relation interval lies inside [i, j].
"""

from dataclasses import dataclass, field

import yaml


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class RelationPattern:
    n: int
    relations: tuple
    redundant: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'relations', tuple(tuple(r) for r in self.relations))
        object.__setattr__(self, 'redundant', tuple(tuple(r) for r in self.redundant))
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise PatternError("n must be an integer >= 0, got %r" % (self.n,))
        for s, t in self.relations:
            if not (0 <= s < t <= self.n):
                raise PatternError("relation (%d,%d) has endpoints outside [0,%d]" % (s, t, self.n))
            if t - s < 2:
                raise PatternError("relation (%d,%d) has length %d < 2" % (s, t, t - s))
        for (s0, t0), (s1, t1) in zip(self.relations, self.relations[1:]):
            if not (s0 < s1 and t0 < t1):
                raise PatternError("relations (%d,%d) and (%d,%d) are not strictly increasing" %
                                   (s0, t0, s1, t1))
        for a in self.relations:
            for b in self.relations:
                assert a == b or not _contains(a, b)

    @property
    def m(self):
        return len(self.relations)

    @property
    def S(self):
        return tuple(s for s, _ in self.relations)

    @property
    def T(self):
        return tuple(t for _, t in self.relations)

    @property
    def vertices(self):
        return range(self.n + 1)

    def is_quadratic(self):
        return all(t - s == 2 for s, t in self.relations)

    def as_dict(self):
        return {'n': self.n, 'relations': [list(r) for r in self.relations]}

    def __str__(self):
        return "n=%d %s" % (self.n, list(self.relations))


def _contains(outer, inner):
    """True when interval `outer` strictly contains interval `inner`."""
    return outer != inner and outer[0] <= inner[0] and inner[1] <= outer[1]


def _check_raw(n, raw_relations):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise PatternError("n must be an integer >= 0, got %r" % (n,))
    checked = []
    for rel in raw_relations:
        try:
            s, t = rel
        except (TypeError, ValueError):
            raise PatternError("relation %r is not an [s, t] pair" % (rel,))
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (s, t)):
            raise PatternError("relation %r must have integer endpoints" % (rel,))
        if not (0 <= s < t <= n):
            raise PatternError("relation (%s,%s) has endpoints outside [0,%d]" % (s, t, n))
        if t - s < 2:
            raise PatternError("relation (%d,%d) has length %d < 2" % (s, t, t - s))
        if (s, t) in checked:
            raise PatternError("relation (%d,%d) is listed twice" % (s, t))
        checked.append((s, t))
    return checked


def find_redundant(n, raw_relations):
    """Relations of `raw_relations` whose interval strictly contains another relation's."""
    rels = _check_raw(n, raw_relations)
    return sorted(a for a in rels if any(_contains(a, b) for b in rels))


def normalize(n, raw_relations):
    """Builds a RelationPattern from raw (s, t) pairs.

    Relations are sorted by s and any relation containing another one is discarded (the
    quotient algebra does not change); the discarded ones are kept on `redundant`.

    Raises:
        PatternError: on out-of-range endpoints, length < 2 or duplicated intervals.
    """
    rels = _check_raw(n, raw_relations)
    redundant = find_redundant(n, rels)
    kept = sorted(r for r in rels if r not in redundant)
    return RelationPattern(n, tuple(kept), tuple(redundant))


def check_vertex(pattern, *vertices):
    for v in vertices:
        if not (0 <= v <= pattern.n):
            raise PatternError("vertex %r outside [0,%d]" % (v, pattern.n))


def path_survives(pattern, i, j):
    check_vertex(pattern, i, j)
    if i > j:
        return False
    return not any(i <= s and t <= j for s, t in pattern.relations)


def compose_paths(pattern, first, second):
    """Product of basis paths: `first` = (i, j) followed by `second` = (j, k).

    Returns (i, k) when it survives, None when the product is zero.
    """
    (i, j), (j2, k) = first, second
    if j != j2:
        raise PatternError("paths %r and %r are not composable" % (first, second))
    if not (path_survives(pattern, i, j) and path_survives(pattern, j, k)):
        raise PatternError("paths %r and %r are not both basis elements" % (first, second))
    return (i, k) if path_survives(pattern, i, k) else None


def quadratic_complement(pattern):
    """The pattern with starts S^c = {0..n-2} minus S, every relation of length 2."""
    if not pattern.is_quadratic():
        long_rel = next(r for r in pattern.relations if r[1] - r[0] != 2)
        raise PatternError("relation (%d,%d) is not quadratic" % long_rel)
    starts = set(pattern.S)
    return RelationPattern(pattern.n, tuple((s, s + 2) for s in range(pattern.n - 1)
                                            if s not in starts))


def reflect(pattern):
    """The pattern of the reversed quiver, vertex v renamed n - v."""
    n = pattern.n
    return RelationPattern(n, tuple(sorted((n - t, n - s) for s, t in pattern.relations)))


def parse_pattern_document(text, source="<document>"):
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise PatternError("%s is not a valid YAML document: %s" % (source, e))
    if not isinstance(doc, dict) or 'n' not in doc:
        raise PatternError("%s must be a mapping with fields 'n' and 'relations'" % source)
    relations = doc.get('relations') or []
    if not isinstance(relations, list):
        raise PatternError("%s: 'relations' must be a list of [s, t] pairs" % source)
    return normalize(doc['n'], relations)


def load_pattern_file(path):
    with open(path, encoding="utf-8") as f:
        try:
            text = f.read()
        except UnicodeDecodeError as e:
            raise PatternError("%s is not a text document: %s" % (path, e))
    return parse_pattern_document(text, source=str(path))
