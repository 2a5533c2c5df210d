import math
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from stimclone.fock import (
    MAX_FACTORIAL,
    OccupationVector,
    clone_amplitude,
    enumerate_sector,
    log_factorial,
)

from oracles import amplitude_squared, compositions


def test_occupation_vector_basics():
    vec = OccupationVector((2, 0, 1))
    assert vec.d == 3
    assert vec.total() == 3
    assert vec == (2, 0, 1)
    with pytest.raises(ValueError):
        OccupationVector((3,))
    with pytest.raises(ValueError):
        OccupationVector((1, -1))


def test_enumerate_empty_sector():
    basis = enumerate_sector(2, 0)
    assert [tuple(v) for v in basis] == [(0, 0)]


def test_enumerate_small_qubit_sector_order():
    basis = enumerate_sector(2, 2)
    assert [tuple(v) for v in basis] == [(2, 0), (1, 1), (0, 2)]


def test_enumerate_qutrit_sector_matches_stars_and_bars():
    # Independent enumeration: 6 = C(4, 2) compositions of 2 into 3 parts.
    expected = set(compositions(2, 3))
    basis = enumerate_sector(3, 2)
    assert len(basis) == 6
    assert {tuple(v) for v in basis} == expected


def test_enumerate_rejects_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_sector(1, 3)
    with pytest.raises(ValueError):
        enumerate_sector(2, -1)


def test_sector_sizes_match_binomial():
    for d in range(2, 6):
        for total in range(9):
            assert len(enumerate_sector(d, total)) == math.comb(total + d - 1, d - 1)


def test_canonical_order_is_reverse_lexicographic():
    for d, total in [(2, 4), (3, 3), (4, 2), (5, 3)]:
        vectors = [tuple(v) for v in enumerate_sector(d, total)]
        assert vectors == sorted(vectors, reverse=True)
        assert vectors[0] == (total,) + (0,) * (d - 1)
        assert vectors[-1] == (0,) * (d - 1) + (total,)


def test_sector_index_roundtrip():
    basis = enumerate_sector(3, 4)
    for i, vec in enumerate(basis):
        assert basis.index(vec) == i
        assert basis.index(tuple(vec)) == i
    with pytest.raises(ValueError):
        basis.index((4, 1, 0))


def test_log_factorial_trivial_values():
    assert log_factorial(0) == 0.0
    assert log_factorial(1) == 0.0


def test_log_factorial_of_ten():
    # Exact integer factorial oracle: 10! = 3628800.
    assert math.factorial(10) == 3628800
    assert log_factorial(10) == pytest.approx(math.log(3628800), rel=1e-12)


def test_log_factorial_domain():
    with pytest.raises(ValueError):
        log_factorial(-1)
    with pytest.raises(ValueError):
        log_factorial(MAX_FACTORIAL + 1)


def test_log_factorial_consecutive_differences():
    for n in range(1, MAX_FACTORIAL + 1):
        diff = log_factorial(n) - log_factorial(n - 1)
        assert abs(diff - math.log(n)) < 1e-12 * max(1.0, abs(math.log(n)))


def test_clone_amplitude_single_photon_values():
    # Exact-rational oracle gives 2/3 and 1/3 for the two emission channels.
    assert amplitude_squared((1, 0), (1, 0)) == Fraction(2, 3)
    assert amplitude_squared((1, 0), (0, 1)) == Fraction(1, 3)
    assert clone_amplitude((1, 0), (1, 0)) == pytest.approx(math.sqrt(2 / 3), abs=1e-14)
    assert clone_amplitude((1, 0), (0, 1)) == pytest.approx(math.sqrt(1 / 3), abs=1e-14)


def test_clone_amplitude_without_emission_is_one():
    for d in (2, 3, 4):
        for m in (0, 1, 3):
            j = (m,) + (0,) * (d - 1)
            assert clone_amplitude(j, (0,) * d) == 1.0


@pytest.mark.parametrize("d", [2, 3, 4])
def test_clone_amplitude_normalization(d):
    # Squared amplitudes over one emission sector sum to exactly 1 (rational
    # oracle) and to 1 within 1e-12 in floating point.
    for m in range(5):
        for j in enumerate_sector(d, m):
            for l in range(5):
                ks = enumerate_sector(d, l)
                exact = sum(amplitude_squared(j, k) for k in ks)
                assert exact == 1
                total = sum(clone_amplitude(j, k) ** 2 for k in ks)
                assert abs(total - 1.0) < 1e-12


def test_clone_amplitude_mode_permutation_symmetry():
    rng = np.random.default_rng(5)
    for _ in range(20):
        d = int(rng.integers(2, 5))
        j = tuple(int(v) for v in rng.integers(0, 3, size=d))
        k = tuple(int(v) for v in rng.integers(0, 3, size=d))
        for perm in permutations(range(d)):
            jp = tuple(j[p] for p in perm)
            kp = tuple(k[p] for p in perm)
            assert clone_amplitude(jp, kp) == pytest.approx(clone_amplitude(j, k), abs=1e-12)


def test_clone_amplitude_rejects_mismatched_lengths():
    with pytest.raises(ValueError):
        clone_amplitude((1, 0), (1, 0, 0))
