"""Combinatorial core of the twisted curves S_0, ..., S_n.

A point q(j,i) with j > i is the intersection of S_j and S_i; q(p,p) stands for the root q_p of
S_p. Curve p meets the curves below it at its plain sequence and the curves above it at its
dagger sequence; the point q(p, a_j^(p)) has degree j.
"""

from dataclasses import dataclass

from akdual.category import mu_eval
from akdual.checks import CheckReport
from akdual.dual import eta
from akdual.pattern import PatternError
from akdual.sequences import sequence_table


def point(a, b):
    """The intersection point of curves a and b (the root when a == b)."""
    return (max(a, b), min(a, b))


def point_label(pt):
    j, i = pt
    return "q(%d)" % j if j == i else "q(%d,%d)" % (j, i)


@dataclass(frozen=True)
class MarkedCurve:
    index: int
    points: tuple
    dagger_count: int

    @property
    def root(self):
        return self.points[0]

    @property
    def dagger_side(self):
        return self.points[1:1 + self.dagger_count]

    @property
    def plain_side(self):
        return self.points[1 + self.dagger_count:]

    def position(self, pt):
        return self.points.index(pt)


def _odd_up_even_down(values):
    """Indices 1, 3, 5, ... ascending then ..., 6, 4, 2 descending."""
    odd = [values[i] for i in range(1, len(values), 2)]
    even = [values[i] for i in range(2, len(values), 2)]
    return odd + even[::-1]


def _even_up_odd_down(values):
    even = [values[i] for i in range(2, len(values), 2)]
    odd = [values[i] for i in range(1, len(values), 2)]
    return even + odd[::-1]


def marked_order(pattern, p):
    """Root, then the dagger-side points (odd indices out, even indices back), then the
    plain-side points (even indices out, odd indices back).
    """
    table = sequence_table(pattern)
    dagger = [point(a, p) for a in _odd_up_even_down(table.dagger[p].values)]
    plain = [point(p, a) for a in _even_up_odd_down(table.plain[p].values)]
    return MarkedCurve(p, tuple([point(p, p)] + dagger + plain), len(dagger))


@dataclass(frozen=True)
class PolygonEdge:
    curve: int
    start: tuple
    end: tuple
    interior: int

    def label(self):
        """[i, l]_j notation: the other curves at the two ends of the edge on curve j."""
        other = lambda pt: pt[1] if pt[0] == self.curve else pt[0]
        return "[%d,%d]_%d" % (other(self.start), other(self.end), self.curve)


@dataclass(frozen=True)
class PolygonWord:
    chain: tuple
    edges: tuple

    @property
    def vertices(self):
        return tuple(e.end for e in self.edges)

    def closed(self):
        return all(a.end == b.start for a, b in zip(self.edges, self.edges[1:] + self.edges[:1]))

    def word(self):
        return [e.label() for e in self.edges]


def polygon(pattern, chain):
    """The polygon bounded by the curves of `chain` = (i_0 < ... < i_l): vertices
    q(i_1,i_0), ..., q(i_l,i_{l-1}), q(i_l,i_0), one edge on each curve.
    """
    curves = {c: marked_order(pattern, c) for c in chain}
    l = len(chain) - 1
    edges = []
    segments = [(chain[0], point(chain[l], chain[0]), point(chain[1], chain[0]))]
    for k in range(1, l):
        segments.append((chain[k], point(chain[k], chain[k - 1]), point(chain[k + 1], chain[k])))
    segments.append((chain[l], point(chain[l], chain[l - 1]), point(chain[l], chain[0])))
    for curve, start, end in segments:
        marked = curves[curve]
        if start not in marked.points or end not in marked.points:
            raise PatternError("%s or %s is not a marked point of S_%d" %
                               (point_label(start), point_label(end), curve))
        interior = abs(marked.position(start) - marked.position(end)) - 1
        edges.append(PolygonEdge(curve, start, end, interior))
    return PolygonWord(tuple(chain), tuple(edges))


def relation_polygon(pattern, j):
    """The (t_j - s_j + 1)-gon of the j-th relation (1-based), bounded by S_{s_j}, ..., S_{t_j}."""
    if not (1 <= j <= pattern.m):
        raise PatternError("relation index %d outside 1..%d" % (j, pattern.m))
    s, t = pattern.relations[j - 1]
    return polygon(pattern, tuple(range(s, t + 1)))


def intersection_degrees(pattern):
    """Degree of each intersection point q(p, a_j^(p)), read from the plain sides of the
    marked curves: the j-th plain point in sequence order has degree j.
    """
    degrees = {}
    for p in pattern.vertices:
        curve = marked_order(pattern, p)
        below = sorted((pt[1] for pt in curve.plain_side), reverse=True)
        for j, q in enumerate(below, start=1):
            degrees[(p, q)] = j
    return degrees


@dataclass(frozen=True)
class AdmissibleChain:
    vertices: tuple
    degrees: tuple
    output_degree: int
    value: str

    def key(self):
        """mu arguments (a_d, ..., a_1) of the chain in the dual."""
        v = self.vertices
        return tuple(eta(v[k + 1], v[k]) for k in range(len(v) - 1))


def admissible_chains(pattern, dual):
    """Chains i_0 < ... < i_l (l >= 2) with consecutive intersections, an intersection of the
    two ends and sum of degrees + 2 - l equal to the degree of q(i_l, i_0), tagged with the value
    the dual assigns to them.
    """
    degrees = intersection_degrees(pattern)
    above = {}
    for (p, q) in degrees:
        above.setdefault(q, []).append(p)
    found = []

    def extend(chain, steps):
        for nxt in sorted(above.get(chain[-1], [])):
            longer = chain + [nxt]
            longer_steps = steps + [degrees[(nxt, chain[-1])]]
            l = len(longer) - 1
            out = degrees.get((nxt, longer[0]))
            if l >= 2 and out is not None and out == sum(longer_steps) + 2 - l:
                found.append((tuple(longer), tuple(longer_steps), out))
            extend(longer, longer_steps)

    for start in pattern.vertices:
        extend([start], [])
    chains = []
    for vertices, steps, out in sorted(found):
        chain = AdmissibleChain(vertices, steps, out, "")
        value = mu_eval(dual, chain.key())
        chains.append(AdmissibleChain(vertices, steps, out, str(value)))
    return chains


def intersection_pairs(pattern):
    """Intersections seen from below (plain sides) and from above (dagger sides)."""
    table = sequence_table(pattern)
    from_plain = {(p, q) for p in pattern.vertices for q in table.plain[p].values[1:]}
    from_dagger = {(q, p) for p in pattern.vertices for q in table.dagger[p].values[1:]}
    return from_plain, from_dagger


def check_intersections(pattern):
    report = CheckReport("intersections")
    from_plain, from_dagger = intersection_pairs(pattern)
    report.checked += 1
    if from_plain != from_dagger:
        report.fail(only_plain=sorted(map(list, from_plain - from_dagger)),
                    only_dagger=sorted(map(list, from_dagger - from_plain)))
    curves = [marked_order(pattern, p) for p in pattern.vertices]
    for pt in sorted(from_plain | from_dagger):
        report.checked += 1
        j, i = pt
        on_plain = curves[j].plain_side.count(pt)
        on_dagger = curves[i].dagger_side.count(pt)
        if (on_plain, on_dagger) != (1, 1):
            report.fail(point=point_label(pt), plain_side=on_plain, dagger_side=on_dagger)
    return report


def check_relation_polygons(pattern):
    """Closure, endpoints on their curves and, on every inner curve, an edge that is exactly the
    core (from the first point after the root to the last point of the curve).
    """
    report = CheckReport("polygons")
    interior = {}
    for j in range(1, pattern.m + 1):
        report.checked += 1
        try:
            poly = relation_polygon(pattern, j)
        except PatternError as e:
            report.fail(relation=j, reason=str(e))
            continue
        if not poly.closed():
            report.fail(relation=j, reason="word is not closed", word=poly.word())
        for edge in poly.edges[1:-1]:
            curve = marked_order(pattern, edge.curve)
            if (edge.start, edge.end) != (curve.points[-1], curve.points[1]) and \
                    (edge.start, edge.end) != (curve.points[1], curve.points[-1]):
                report.fail(relation=j, reason="inner edge %s is not the core" % edge.label())
        interior[j] = [e.interior for e in poly.edges]
    report.notes['interior_points'] = interior
    return report


def check_chain_bijection(pattern, dual):
    """Admissible chains against the nonzero non-unital mu entries of the dual."""
    report = CheckReport("chains")
    chains = {c.key() for c in admissible_chains(pattern, dual)}
    entries = {key for key, _ in dual.nonunital_entries()}
    report.checked = len(chains | entries)
    for key in sorted(chains - entries):
        report.fail(chain=list(key), reason="no mu entry")
    for key in sorted(entries - chains):
        report.fail(chain=list(key), reason="no admissible chain")
    return report
