from itertools import combinations

from akdual.pattern import PatternError, RelationPattern


def all_patterns(n):
    """Every valid pattern on [0, n]: relations picked left to right with s and t both
    strictly increasing and t - s >= 2.
    """
    def extend(last_s, last_t, acc):
        yield RelationPattern(n, tuple(acc))
        for s in range(last_s + 1, n - 1):
            for t in range(max(s + 2, last_t + 1), n + 1):
                yield from extend(s, t, acc + [(s, t)])

    yield from extend(-1, -1, [])


def patterns_up_to(n_max):
    for n in range(n_max + 1):
        yield from all_patterns(n)


def brute_force_patterns(n):
    """Every subset of length >= 2 intervals that passes the pattern invariants."""
    intervals = [(s, t) for s in range(n + 1) for t in range(s + 2, n + 1)]
    found = []
    for size in range(len(intervals) + 1):
        for subset in combinations(intervals, size):
            try:
                found.append(RelationPattern(n, tuple(sorted(subset))))
            except PatternError:
                continue
    return found


def bnk_pattern(n, k):
    """S_{n,k} = {0..n-k}, T_{n,k} = {k..n}."""
    if not (2 <= k <= n):
        raise PatternError("B_{n,k} needs 2 <= k <= n, got n=%d k=%d" % (n, k))
    return RelationPattern(n, tuple((s, s + k) for s in range(n - k + 1)))


def bnk_parameter(pattern):
    """k when `pattern` is the B_{n,k} pattern, else None."""
    for k in range(2, pattern.n + 1):
        if pattern == bnk_pattern(pattern.n, k):
            return k
    return None
