"""Independent brute-force oracles for the test suite.

Nothing here shares code with the package: coefficients come from exact
integer factorial arithmetic, expansions from first-quantized enumeration
over all d^M level assignments, and the one-body marginal from an explicit
embedding into the full tensor-product space.
"""

import math
from fractions import Fraction
from itertools import product

import numpy as np


def amplitude_squared(j, k) -> Fraction:
    """Exact squared cloning coefficient of |j+k>_a |k>_b for basis input j."""
    d, m, l = len(j), sum(j), sum(k)
    value = Fraction(math.factorial(m + d - 1) * math.factorial(l),
                     math.factorial(m + l + d - 1))
    for ji, ki in zip(j, k):
        value *= Fraction(math.factorial(ji + ki),
                          math.factorial(ji) * math.factorial(ki))
    return value


def compositions(total, modes):
    """Stars-and-bars enumeration of occupation tuples, order unspecified."""
    if modes == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, modes - 1):
            yield (first,) + rest


def identical_expansion(x, M) -> dict:
    """Occupation amplitudes of M identical qudits by first-quantized counting.

    Sums prod_m x[levels[m]] over all d^M level assignments and divides each
    occupation class by the square root of its multiplicity.
    """
    d = len(x)
    sums: dict = {}
    for assignment in product(range(d), repeat=M):
        occ = tuple(assignment.count(i) for i in range(d))
        term = 1.0 + 0.0j
        for level in assignment:
            term *= x[level]
        sums[occ] = sums.get(occ, 0.0) + term
    out = {}
    for occ, total in sums.items():
        multiplicity = math.factorial(M) // math.prod(math.factorial(n) for n in occ)
        out[occ] = total / math.sqrt(multiplicity)
    return out


def symmetric_embedding(vectors, d, L) -> np.ndarray:
    """Isometry from the L-boson occupation sector into (C^d)^(tensor L)."""
    emb = np.zeros((d**L, len(vectors)))
    for col, occ in enumerate(vectors):
        multiplicity = math.factorial(L) // math.prod(math.factorial(n) for n in occ)
        weight = 1.0 / math.sqrt(multiplicity)
        for assignment in product(range(d), repeat=L):
            if tuple(assignment.count(i) for i in range(d)) == tuple(occ):
                idx = 0
                for level in assignment:
                    idx = idx * d + level
                emb[idx, col] = weight
    return emb


def first_quantized_single_marginal(rho_sector, vectors, d, L) -> np.ndarray:
    """One-qudit marginal by embedding into the full tensor space and tracing."""
    emb = symmetric_embedding(vectors, d, L)
    rho_full = emb @ rho_sector @ emb.conj().T
    rho_full = rho_full.reshape(d, d ** (L - 1), d, d ** (L - 1))
    return np.einsum("ikjk->ij", rho_full)


def random_density(dim, rank, rng) -> np.ndarray:
    """Random rank-limited density matrix."""
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real
