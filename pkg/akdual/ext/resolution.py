"""Minimal projective resolutions of simple modules and the Ext dimensions they give.

The multiplicity of P(q) in the d-th term of the minimal resolution of S(p) is
dim Ext^d(S(p), S(q)); covers are taken over the top rep / rad(rep), so no differential has to
be examined.
"""

from dataclasses import dataclass

import numpy as np

from akdual.checks import CheckReport
from akdual.category import hom_table
from akdual.ext.linalg import (complement_basis, eye, hstack, is_integral, kernel_basis, rank,
                               solve_in_span, zeros)
from akdual.ext.rep import QuiverRep, check_relations, simple
from akdual.pattern import path_survives
from akdual.sequences import sequence_table


class ResolutionError(RuntimeError):
    pass


@dataclass
class ResolutionStep:
    multiplicities: tuple
    generators: list
    cover: QuiverRep


def _cover(pattern, summands):
    """Direct sum of P(v) over `summands`, with the basis index of each summand at each vertex."""
    n = pattern.n
    dims = [0] * (n + 1)
    index = []
    for v in summands:
        at = {}
        for w in range(v + 1):
            if path_survives(pattern, w, v):
                at[w] = dims[w]
                dims[w] += 1
        index.append(at)
    actions = {}
    for j in range(1, n + 1):
        a = zeros(dims[j - 1], dims[j])
        for at in index:
            if j in at and j - 1 in at:
                a[at[j - 1], at[j]] = 1
        actions[j] = a
    return QuiverRep(tuple(dims), actions), index


def syzygy(pattern, rep):
    """Projective cover of `rep` and the kernel of the covering map.

    Returns:
        (ResolutionStep, QuiverRep): the cover data and the first syzygy.
    """
    check_relations(pattern, rep)
    n = pattern.n
    generators = []
    for v in range(n + 1):
        radical = rep.actions[v + 1] if v < n else zeros(rep.dims[v], 0)
        for k in complement_basis(radical, rep.dims[v]):
            generators.append((v, eye(rep.dims[v])[:, k]))
    multiplicities = tuple(sum(1 for v, _ in generators if v == w) for w in range(n + 1))
    cover, index = _cover(pattern, [v for v, _ in generators])

    bases = []
    for w in range(n + 1):
        columns = [zeros(rep.dims[w], 1)] * cover.dims[w]
        for (v, g), at in zip(generators, index):
            if w in at:
                columns[at[w]] = rep.transport(v, w) * g
        phi = hstack(zeros(rep.dims[w], 0), *columns)
        if rank(phi) != rep.dims[w]:
            raise ResolutionError("cover is not surjective at vertex %d" % w)
        basis = kernel_basis(phi)
        radical = cover.actions[w + 1] if w < n else zeros(cover.dims[w], 0)
        if rank(hstack(radical, basis)) != rank(radical):
            raise ResolutionError("kernel leaves the radical at vertex %d" % w)
        bases.append(basis)

    actions = {}
    for j in range(1, n + 1):
        actions[j] = solve_in_span(bases[j - 1], cover.actions[j] * bases[j])
    kernel = QuiverRep(tuple(b.cols for b in bases), actions)
    if not all(is_integral(b) for b in bases) or not all(is_integral(a) for a in actions.values()):
        raise ResolutionError("non-integral entries in a syzygy")
    check_relations(pattern, kernel)
    return ResolutionStep(multiplicities, generators, cover), kernel


def default_d_max(pattern):
    return pattern.n + 2


def minimal_resolution(pattern, p, d_max=None):
    """Resolution steps of S(p) up to degree d_max and whether the last syzygy vanished."""
    if d_max is None:
        d_max = default_d_max(pattern)
    steps = []
    rep = simple(pattern, p)
    while not rep.is_zero() and len(steps) <= d_max:
        step, rep = syzygy(pattern, rep)
        steps.append(step)
    return steps, rep.is_zero()


def ext_dims(pattern, p, q, d_max=None):
    """dim Ext^d(S(p), S(q)) for d = 0..d_max, and the termination flag."""
    if d_max is None:
        d_max = default_d_max(pattern)
    steps, terminated = minimal_resolution(pattern, p, d_max)
    dims = [steps[d].multiplicities[q] if d < len(steps) else 0 for d in range(d_max + 1)]
    return dims, terminated


def resolution_length(pattern, p, d_max=None):
    steps, terminated = minimal_resolution(pattern, p, d_max)
    if not terminated:
        raise ResolutionError("resolution of S(%d) did not terminate" % p)
    return len(steps) - 1


def global_dimension(pattern):
    return max(resolution_length(pattern, p) for p in pattern.vertices)


def ext_table(pattern, d_max=None):
    """numpy array E[p, q, d] = dim Ext^d(S(p), S(q))."""
    if d_max is None:
        d_max = default_d_max(pattern)
    size = pattern.n + 1
    table = np.zeros((size, size, d_max + 1), dtype=int)
    for p in pattern.vertices:
        steps, _ = minimal_resolution(pattern, p, d_max)
        for d, step in enumerate(steps[:d_max + 1]):
            table[p, :, d] = step.multiplicities
    return table


def check_oracle_agreement(pattern, dual, d_max=None):
    """Ext dimensions against hom dimensions of the dual for every (p, q, d <= n + 1), and
    resolution length against l_p.
    """
    if d_max is None:
        d_max = default_d_max(pattern)
    n = pattern.n
    report = CheckReport("oracle")
    homs = hom_table(dual)
    plain = sequence_table(pattern).plain
    top = n + 1
    for p in pattern.vertices:
        steps, terminated = minimal_resolution(pattern, p, d_max)
        report.checked += 1
        if not terminated:
            report.fail(source=p, reason="resolution did not terminate by degree %d" % d_max)
        elif len(steps) - 1 != plain[p].length:
            report.fail(source=p, resolution_length=len(steps) - 1, sequence_length=plain[p].length)
        for q in pattern.vertices:
            for d in range(top + 1):
                report.checked += 1
                ext = steps[d].multiplicities[q] if d < len(steps) else 0
                hom = homs[n - p, n - q, d] if d < homs.shape[2] else 0
                if ext != hom:
                    report.fail(source=p, target=q, degree=d, ext=int(ext), hom=int(hom))
    return report
