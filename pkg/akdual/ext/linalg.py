"""Exact rational helpers on sympy matrices, tolerant of zero-sized shapes."""

import sympy as sp


def zeros(rows, cols):
    return sp.zeros(rows, cols)


def rank(matrix):
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return matrix.rank()


def hstack(*blocks):
    rows = blocks[0].rows
    cols = sum(b.cols for b in blocks)
    if cols == 0:
        return sp.zeros(rows, 0)
    return sp.Matrix.hstack(*[b for b in blocks if b.cols > 0])


def kernel_basis(matrix):
    """Columns spanning the nullspace, as a matrix of shape (cols, dim kernel)."""
    if matrix.cols == 0:
        return sp.zeros(0, 0)
    if matrix.rows == 0:
        return sp.eye(matrix.cols)
    basis = matrix.nullspace()
    if not basis:
        return sp.zeros(matrix.cols, 0)
    return sp.Matrix.hstack(*basis)


def complement_basis(span, dim):
    """Standard basis vectors completing the column space of `span` to the whole space."""
    chosen = []
    current = span
    for k in range(dim):
        candidate = hstack(current, sp.eye(dim)[:, k])
        if rank(candidate) > rank(current):
            chosen.append(k)
            current = candidate
    return chosen


def solve_in_span(basis, targets):
    """X with basis * X = targets, for `basis` of full column rank and targets in its span."""
    if basis.cols == 0 or targets.cols == 0:
        if targets.cols and any(x != 0 for x in targets):
            raise ValueError("targets are not in the span of an empty basis")
        return sp.zeros(basis.cols, targets.cols)
    solution, params = basis.gauss_jordan_solve(targets)
    if params.rows != 0:
        raise ValueError("basis is not of full column rank")
    return solution


def is_integral(matrix):
    return all(sp.sympify(x).is_integer for x in matrix)


def eye(dim):
    return sp.eye(dim)
