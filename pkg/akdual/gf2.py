import numpy as np


def gf2_rank(matrix):
    """Rank over GF(2) by XOR row reduction on a uint8 copy."""
    m = np.array(matrix, dtype=np.uint8) % 2
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(m[rank:, col])[0]
        if len(pivots) == 0:
            continue
        pivot = rank + pivots[0]
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        below = np.nonzero(m[:, col])[0]
        for r in below:
            if r != rank:
                m[r] ^= m[rank]
        rank += 1
    return rank


def gf2_solvable(a, b):
    """True when a x = b has a solution over GF(2)."""
    a = np.atleast_2d(np.array(a, dtype=np.uint8))
    b = np.array(b, dtype=np.uint8).reshape(-1, 1)
    if a.shape[0] == 0:
        return True
    if a.shape[1] == 0:
        return not b.any()
    return gf2_rank(a) == gf2_rank(np.hstack([a, b]))
