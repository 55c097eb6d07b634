"""Right modules over R_{S,T} as quiver representations.

dims[v] is the dimension at vertex v; actions[j] (j = 1..n) is the matrix of alpha_j, taking
the component at vertex j to the component at vertex j - 1 (M e_j alpha_j lies in M e_{j-1}).
"""

from dataclasses import dataclass

from akdual.ext.linalg import eye, zeros
from akdual.pattern import check_vertex, path_survives


class RepError(ValueError):
    pass


@dataclass
class QuiverRep:
    dims: tuple
    actions: dict

    @property
    def n(self):
        return len(self.dims) - 1

    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim() == 0

    def transport(self, src, dst):
        """Matrix of the path action from component src down to component dst (dst <= src)."""
        m = eye(self.dims[src])
        for j in range(src, dst, -1):
            m = self.actions[j] * m
        return m


def _shape_ok(rep):
    return all(rep.actions[j].shape == (rep.dims[j - 1], rep.dims[j]) for j in range(1, rep.n + 1))


def check_relations(pattern, rep):
    """Raises RepError unless every relation (s, t) acts as zero from component t to s."""
    if len(rep.dims) != pattern.n + 1 or not _shape_ok(rep):
        raise RepError("representation shapes do not fit n=%d" % pattern.n)
    for s, t in pattern.relations:
        composite = rep.transport(t, s)
        if any(x != 0 for x in composite):
            raise RepError("relation (%d,%d) does not act as zero" % (s, t))


def projective(pattern, i):
    """P(i) = e_i R: one dimension at each j <= i whose path (j, i) survives."""
    check_vertex(pattern, i)
    n = pattern.n
    dims = tuple(1 if j <= i and path_survives(pattern, j, i) else 0 for j in range(n + 1))
    actions = {}
    for j in range(1, n + 1):
        a = zeros(dims[j - 1], dims[j])
        if dims[j] and dims[j - 1]:
            a[0, 0] = 1
        actions[j] = a
    return QuiverRep(dims, actions)


def simple(pattern, j):
    check_vertex(pattern, j)
    n = pattern.n
    dims = tuple(1 if v == j else 0 for v in range(n + 1))
    return QuiverRep(dims, {k: zeros(dims[k - 1], dims[k]) for k in range(1, n + 1)})


def zero_rep(n):
    return QuiverRep((0,) * (n + 1), {k: zeros(0, 0) for k in range(1, n + 1)})
