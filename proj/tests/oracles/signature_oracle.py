"""Tristram-Levine signature and nullity of (1 - z) S + (1 - conj z) S^T, z = exp(2 pi i a/b),
from mpmath's hermitian eigensolver at 80 digits.

Writes tests/data/signature_oracle.json.
"""
import json
import pathlib
from fractions import Fraction

import mpmath as mp

from fixtures import NAMED, random_matrices

mp.mp.dps = 80
ZERO = mp.mpf(10) ** -50
TURNS = ["1/2", "1/3", "1/6", "5/6", "1/5", "2/7", "3/97"]


def signature(S, turns):
    f = Fraction(turns)
    z = mp.expjpi(2 * mp.mpf(f.numerator) / f.denominator)
    n = len(S)
    M = mp.matrix(n, n)
    for i in range(n):
        for j in range(n):
            M[i, j] = (1 - z) * S[i][j] + (1 - mp.conj(z)) * S[j][i]
    if n == 0:
        return 0, 0
    ev = mp.eighe(M, eigvals_only=True)
    pos = sum(1 for e in ev if e > ZERO)
    neg = sum(1 for e in ev if e < -ZERO)
    return pos - neg, n - pos - neg


def main():
    cases = list(NAMED.items()) + [(f"random-{i}", S) for i, S in enumerate(random_matrices())]
    rows = []
    for name, S in cases:
        samples = []
        for tu in TURNS:
            s, nul = signature(S, tu)
            samples.append({"turns": tu, "sigma": s, "nullity": nul})
        rows.append({"name": name, "seifert": S, "samples": samples})
        print(name, [(x["turns"], x["sigma"], x["nullity"]) for x in samples])
    out = pathlib.Path(__file__).resolve().parents[1] / "data" / "signature_oracle.json"
    out.write_text(json.dumps(rows, indent=1) + "\n")


if __name__ == "__main__":
    main()
