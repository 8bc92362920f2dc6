"""Seeded random flip-pair corpus shared by the property and acceptance tests.

The generator draws a random symbol involution, fills the transition matrix
orbit by orbit under the induced pair symmetry (so the flip-pair axioms hold
by construction), restricts to the symbols on bi-infinite paths, and rejects
instances whose period-10 point count would make the brute-force oracle slow.
Everything is a pure function of the seed.
"""

from __future__ import annotations

import random

from flipshift import FlipPair, IntMatrix
from flipshift.matrices import mat_pow, trace
from flipshift.shifts import essential_symbols

DEFAULT_SEED = 20250808
TRACE10_CAP = 12000


def random_involution(rng: random.Random, labels: tuple[str, ...]) -> dict[str, str]:
    pool = list(labels)
    rng.shuffle(pool)
    tau: dict[str, str] = {}
    while pool:
        a = pool.pop()
        if pool and rng.random() < 0.6:
            b = pool.pop()
            tau[a] = b
            tau[b] = a
        else:
            tau[a] = a
    return tau


def random_flip_pair(rng: random.Random, max_size: int = 6,
                     density: float = 0.45) -> FlipPair:
    while True:
        size = rng.randint(1, max_size)
        labels = tuple(str(i + 1) for i in range(size))
        tau = random_involution(rng, labels)
        idx = {a: i for i, a in enumerate(labels)}
        rows = [[None] * size for _ in range(size)]
        for a in labels:
            for b in labels:
                i, j = idx[a], idx[b]
                if rows[i][j] is not None:
                    continue
                bit = 1 if rng.random() < density else 0
                rows[i][j] = bit
                rows[idx[tau[b]]][idx[tau[a]]] = bit
        a_mat = IntMatrix.square(labels, rows)
        ess = essential_symbols(a_mat)
        if not ess:
            continue
        # the pair symmetry swaps pasts and futures, so the essential part
        # is closed under the involution
        assert all(tau[s] in ess for s in ess)
        a_mat = a_mat.submatrix(ess)
        j_rows = [[1 if tau[a] == b else 0 for b in ess] for a in ess]
        j_mat = IntMatrix.square(ess, j_rows)
        pair = FlipPair(a_mat, j_mat)
        if trace(mat_pow(pair.A, 10)) > TRACE10_CAP:
            continue
        return pair


def corpus(seed: int = DEFAULT_SEED, count: int = 50, max_size: int = 6
           ) -> list[FlipPair]:
    rng = random.Random(seed)
    return [random_flip_pair(rng, max_size=max_size) for _ in range(count)]
