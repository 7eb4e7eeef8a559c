"""Monodromy h = (S^T)^{-1} S: characteristic polynomial and Jordan block sizes per eigenvalue
from sympy's jordan_form, grouped by the irreducible factor over Q.

Writes tests/data/jordan_oracle.json.
"""
import json
import pathlib

import sympy as sp

from fixtures import NAMED

t = sp.symbols("t")

EXTRA = {
    # printed monodromy h of 10_99 / 12n106 are exercised in the C++ tests directly; here
    # block sums give repeated blocks
    "8_20+8_20": None,
    "trefoil+mirror": [[-1, 0, 0, 0], [-1, -1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]],
}


def block_sum(a, b):
    n, m = len(a), len(b)
    out = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        out[i][:n] = a[i]
    for i in range(m):
        out[n + i][n:] = b[i]
    return out


EXTRA["8_20+8_20"] = block_sum(NAMED["8_20"], NAMED["8_20"])


def coeffs(p):
    return [int(c) for c in reversed(sp.Poly(p, t).all_coeffs())]


def analyse(S):
    M = sp.Matrix(S)
    h = M.T.inv() * M
    cp = h.charpoly(t).as_expr()
    _, J = h.jordan_form()
    blocks = []  # (eigenvalue, size)
    i = 0
    n = J.shape[0]
    while i < n:
        lam = J[i, i]
        size = 1
        while i + size < n and J[i + size - 1, i + size] == 1:
            size += 1
        blocks.append((lam, size))
        i += size
    factors = []
    for f, mult in sp.factor_list(cp, t)[1]:
        # every root of f carries the same partition; read it off the first one
        lam0 = next(lam for lam, _ in blocks if sp.simplify(f.subs(t, lam)) == 0)
        per_root = [s for lam, s in blocks if sp.simplify(lam - lam0) == 0]
        factors.append({"factor": coeffs(f), "multiplicity": int(mult), "blocks": sorted(per_root)})
    return {"charpoly": coeffs(cp), "factors": factors}


def main():
    cases = {k: v for k, v in NAMED.items() if sp.Matrix(v).det() != 0}
    cases.update(EXTRA)
    rows = []
    for name, S in cases.items():
        r = analyse(S)
        r["name"] = name
        r["seifert"] = S
        rows.append(r)
        print(name, r["charpoly"], r["factors"])
    out = pathlib.Path(__file__).resolve().parents[1] / "data" / "jordan_oracle.json"
    out.write_text(json.dumps(rows, indent=1) + "\n")


if __name__ == "__main__":
    main()
