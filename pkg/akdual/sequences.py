"""The maps d, d-dagger and the vertex sequences a_i^(p) / a_i^(p)-dagger of a pattern.

d(p) = max{s_j : t_j <= p} (or -inf) and d-dagger(p) = min{t_j : s_j >= p} (or +inf). The plain
sequence of p starts p, p-1 and continues with a_i = d(a_{i-2}) while d(a_{i-2}) != d(a_{i-1});
the dagger sequence is the mirror image using d-dagger and p+1.
"""

from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache
import math

from akdual.checks import CheckReport
from akdual.pattern import check_vertex, reflect

NEG_INF = -math.inf
POS_INF = math.inf

PLAIN = "plain"
DAGGER = "dagger"


def format_vertex(v):
    if v == NEG_INF:
        return "-inf"
    if v == POS_INF:
        return "+inf"
    return int(v)


@dataclass(frozen=True)
class ExtIndexSequence:
    base: int
    values: tuple
    flavor: str = PLAIN

    @property
    def length(self):
        return len(self.values) - 1

    def index_of(self, q):
        """Position of q in the sequence (the degree of the matching morphism), or None."""
        try:
            return self.values.index(q)
        except ValueError:
            return None


def d_map(pattern, p):
    check_vertex(pattern, p)
    return max((s for s, t in pattern.relations if t <= p), default=NEG_INF)


def d_dagger(pattern, p):
    check_vertex(pattern, p)
    return min((t for s, t in pattern.relations if s >= p), default=POS_INF)


def _recurse(pattern, values, dmap):
    # -inf == -inf (and +inf == +inf) stops the recursion as well
    while True:
        nxt = dmap(pattern, values[-2])
        if nxt == dmap(pattern, values[-1]):
            return tuple(values)
        values.append(nxt)


def ext_sequence(pattern, p):
    check_vertex(pattern, p)
    if p == 0:
        return ExtIndexSequence(p, (p,), PLAIN)
    return ExtIndexSequence(p, _recurse(pattern, [p, p - 1], d_map), PLAIN)


def ext_sequence_dual(pattern, p):
    check_vertex(pattern, p)
    if p == pattern.n:
        return ExtIndexSequence(p, (p,), DAGGER)
    return ExtIndexSequence(p, _recurse(pattern, [p, p + 1], d_dagger), DAGGER)


SequenceTable = namedtuple("SequenceTable", ["plain", "dagger"])


@lru_cache(maxsize=4096)
def sequence_table(pattern):
    """Plain and dagger sequences of every vertex, indexed by vertex."""
    return SequenceTable(tuple(ext_sequence(pattern, p) for p in pattern.vertices),
                         tuple(ext_sequence_dual(pattern, p) for p in pattern.vertices))


def check_monotone(pattern):
    """Strict monotonicity and range of both flavours of sequence, and monotonicity of d, d-dagger."""
    report = CheckReport("monotone")
    table = sequence_table(pattern)
    n = pattern.n
    for seq in table.plain + table.dagger:
        report.checked += 1
        v = seq.values
        step = -1 if seq.flavor == PLAIN else 1
        ok = v[0] == seq.base and all(x in range(n + 1) for x in v)
        ok = ok and all((b - a) * step > 0 for a, b in zip(v, v[1:]))
        if seq.base + step in range(n + 1):
            ok = ok and len(v) > 1 and v[1] == seq.base + step
        if not ok:
            report.fail(flavor=seq.flavor, base=seq.base, values=[format_vertex(x) for x in v])
    for p in range(n):
        report.checked += 1
        if not (d_map(pattern, p) <= d_map(pattern, p + 1) and
                d_dagger(pattern, p) <= d_dagger(pattern, p + 1)):
            report.fail(vertex=p, reason="d or d-dagger decreases at p -> p+1")
    return report


def check_inversion(pattern):
    """Opposite-flavour round trips: reading index j of the dagger sequence of a_j^(p) gives p,
    and symmetrically for dagger entries. Indices j >= 1 are checked (j = 0 is trivial).

    The literal same-flavour reading is counted in notes; it is not part of the verdict.
    """
    report = CheckReport("inversion")
    table = sequence_table(pattern)
    counts = {'plain_entries': 0, 'dagger_entries': 0, 'same_flavor_holds': 0}
    for source, target, key in ((table.plain, table.dagger, 'plain_entries'),
                                (table.dagger, table.plain, 'dagger_entries')):
        for seq in source:
            for j in range(1, seq.length + 1):
                q = seq.values[j]
                counts[key] += 1
                report.checked += 1
                opposite = target[q].values
                if not (j < len(opposite) and opposite[j] == seq.base):
                    report.fail(flavor=seq.flavor, base=seq.base, index=j, via=q)
                same = source[q].values
                if j < len(same) and same[j] == seq.base:
                    counts['same_flavor_holds'] += 1
    report.notes.update(counts)
    return report


def check_dagger_bound(pattern):
    """d(d-dagger(p) - 1) <= p - 1 wherever d-dagger(p) is finite."""
    report = CheckReport("dagger_bound")
    for p in pattern.vertices:
        up = d_dagger(pattern, p)
        if up == POS_INF:
            continue
        report.checked += 1
        if not d_map(pattern, up - 1) <= p - 1:
            report.fail(vertex=p, d_dagger=up, d_of=format_vertex(d_map(pattern, up - 1)))
    return report


def counting_duality(pattern):
    table = sequence_table(pattern)
    report = CheckReport("counting_duality", checked=1)
    plain = sum(s.length for s in table.plain)
    dagger = sum(s.length for s in table.dagger)
    report.notes.update({'sum_plain': plain, 'sum_dagger': dagger})
    if plain != dagger:
        report.fail(sum_plain=plain, sum_dagger=dagger)
    return report


def check_relation_tail(pattern):
    """l_p >= 2 exactly at the relation targets, and then (a_2^(p), p) is a relation."""
    report = CheckReport("relation_tail")
    table = sequence_table(pattern)
    for seq in table.plain:
        report.checked += 1
        p = seq.base
        if (seq.length >= 2) != (p in pattern.T):
            report.fail(vertex=p, length=seq.length, in_T=p in pattern.T)
        elif seq.length >= 2 and (seq.values[2], p) not in pattern.relations:
            report.fail(vertex=p, length=seq.length, missing_relation=[seq.values[2], p])
    return report


def check_reflection(pattern):
    """Dagger sequences are the plain sequences of the reflected pattern, read through v -> n - v."""
    report = CheckReport("reflection")
    n = pattern.n
    mirrored = sequence_table(reflect(pattern)).plain
    for seq in sequence_table(pattern).dagger:
        report.checked += 1
        expected = tuple(n - v for v in mirrored[n - seq.base].values)
        if seq.values != expected:
            report.fail(base=seq.base, dagger=list(seq.values), mirrored=list(expected))
    return report
