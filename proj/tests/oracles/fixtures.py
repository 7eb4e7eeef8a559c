"""Matrices shared by the oracle scripts and the C++ unit tests."""
import random

NAMED = {
    "trefoil": [[-1, 0], [-1, -1]],
    "figure-eight": [[1, 0], [-1, -1]],
    "5_1": [[-1, -1, 0, -1], [0, -1, 0, 0], [-1, -1, -1, -1], [0, -1, 0, -1]],
    "8_20": [[-1, -1, -1, -1], [0, 0, -1, -1], [0, -1, 0, -1], [0, 0, -1, 0]],
    "twist+2": [[2]],
    "twist-1": [[-1]],
    "trefoil+zero": [[-1, 0, 0], [-1, -1, 0], [0, 0, 0]],
    "hyperbolic-pair": [[0, 1], [0, 0]],
    "trefoil#trefoil": [[-1, 0, 0, 0], [-1, -1, 0, 0], [0, 0, -1, 0], [0, 0, -1, -1]],
    "T(3,4)": None,  # filled below
}


def torus(p, q):
    def lower(m):
        L = [[0] * (m - 1) for _ in range(m - 1)]
        for i in range(m - 1):
            L[i][i] = 1
            if i + 1 < m - 1:
                L[i][i + 1] = -1
        return L
    a, b = lower(p), lower(q)
    n, k = len(a), len(b)
    return [[-a[i // k][j // k] * b[i % k][j % k] for j in range(n * k)] for i in range(n * k)]


NAMED["T(3,4)"] = torus(3, 4)


def random_matrices(count=12, seed=20240611, lo=2, hi=5):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(lo, hi)
        out.append([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
    return out


def congruent(S, P):
    """P^T S P."""
    n = len(S)
    PT_S = [[sum(P[k][i] * S[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[sum(PT_S[i][k] * P[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


# (trefoil (+) 0 (+) hyperbolic pair) scrambled by a unimodular congruence: m0 = 1 and a
# destabilization are both needed to reach the 2x2 nondegenerate core.
_P5 = [[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0], [1, 0, -1, 1, 1], [1, 0, -1, 0, 1]]
NAMED["scrambled-degenerate"] = congruent(
    [[-1, 0, 0, 0, 0], [-1, -1, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 0, 0, 0]], _P5)
