"""Partial traces, fidelities, closed-form references, and the shrinking factor.

Reductions stay in the occupation representation throughout: the one-qudit
marginal of an L-boson sector density is read off transition-operator
expectations, rho_1[r, s] = Tr(rho_L a_s^dag a_r) / L, which keeps every cost
polynomial in the sector size.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cloner import CloneOutput, CloneOutputDensity, PureQudit, SymmetricDensity, expand_identical
from .fock import OccupationVector


@dataclass(frozen=True)
class SingleQuditDensity:
    """d x d reduced density operator of one output copy."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {mat.shape}")
        object.__setattr__(self, "matrix", mat)

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_pure(cls, x: PureQudit) -> "SingleQuditDensity":
        return cls(np.outer(x.x, x.x.conj()))

    @classmethod
    def maximally_mixed(cls, d: int) -> "SingleQuditDensity":
        return cls(np.eye(d) / d)


def trace_out_b(out: CloneOutput | CloneOutputDensity) -> SymmetricDensity:
    """Density of the M+l output copies, after discarding the b register.

    For a pure joint output with amplitude matrix Psi this is Psi Psi^dag.
    """
    if isinstance(out, CloneOutput):
        rho = out.amplitudes @ out.amplitudes.conj().T
    else:
        a_dim, b_dim = len(out.a_basis), len(out.b_basis)
        rho = np.einsum("piqi->pq", out.matrix.reshape(a_dim, b_dim, a_dim, b_dim))
    rho = 0.5 * (rho + rho.conj().T)
    return SymmetricDensity(out.a_basis, rho)


def reduce_to_single(rho_L: SymmetricDensity) -> SingleQuditDensity:
    """One-qudit marginal of an L-boson symmetric density.

    rho_1[r, s] = Tr(rho_L a_s^dag a_r) / L.  The matrix element of
    a_s^dag a_r between occupation vectors n and n - e_r + e_s is
    sqrt(n_r (n_s + 1 - delta_rs)).
    """
    L = rho_L.total
    if L < 1:
        raise ValueError("single-qudit reduction needs at least one boson")
    d = rho_L.d
    basis = rho_L.basis
    rho1 = np.zeros((d, d), dtype=complex)
    for n_idx, n in enumerate(basis):
        for r in range(d):
            if n[r] == 0:
                continue
            rho1[r, r] += n[r] * rho_L.matrix[n_idx, n_idx]
            for s in range(d):
                if s == r:
                    continue
                shifted = list(n)
                shifted[r] -= 1
                shifted[s] += 1
                m_idx = basis.index(OccupationVector(shifted))
                rho1[r, s] += math.sqrt(n[r] * (n[s] + 1)) * rho_L.matrix[n_idx, m_idx]
    rho1 /= L
    rho1 = 0.5 * (rho1 + rho1.conj().T)
    return SingleQuditDensity(rho1)


def fidelity_single(rho1: SingleQuditDensity, x: PureQudit) -> float:
    """Overlap <x| rho_1 |x> of one output copy with the reference qudit."""
    if rho1.d != x.d:
        raise ValueError(f"dimension mismatch: density is {rho1.d}-level, qudit is {x.d}-level")
    return float(np.vdot(x.x, rho1.matrix @ x.x).real)


def fidelity_global(out: CloneOutput | CloneOutputDensity, x: PureQudit) -> float:
    """Overlap of the full L-copy output with L perfect copies of x."""
    if out.d != x.d:
        raise ValueError(f"dimension mismatch: output is {out.d}-level, qudit is {x.d}-level")
    rho_a = trace_out_b(out)
    target = expand_identical(x, out.L).amplitudes
    return float(np.vdot(target, rho_a.matrix @ target).real)


def closed_form_single(M: int, L: int, d: int) -> float:
    """Optimal single-copy fidelity (M(L+d) + L - M) / (L(M+d)), exact rational."""
    if d < 2:
        raise ValueError(f"qudit dimension must be >= 2, got {d}")
    if M < 1:
        raise ValueError(f"input copy number must be >= 1, got {M}")
    if L < M:
        raise ValueError(f"output copies L={L} fewer than input copies M={M}")
    return float(Fraction(M * (L + d) + L - M, L * (M + d)))


def closed_form_global(M: int, L: int, d: int) -> float:
    """Optimal L-copy fidelity L!(M+d-1)! / (M!(L+d-1)!), exact rational."""
    if d < 2:
        raise ValueError(f"qudit dimension must be >= 2, got {d}")
    if M < 1:
        raise ValueError(f"input copy number must be >= 1, got {M}")
    if L < M:
        raise ValueError(f"output copies L={L} fewer than input copies M={M}")
    num = math.factorial(L) * math.factorial(M + d - 1)
    den = math.factorial(M) * math.factorial(L + d - 1)
    return float(Fraction(num, den))


@dataclass(frozen=True)
class ShrinkingFit:
    """Least-squares fit of rho_out = eta * rho_in + (1 - eta) * I/d.

    `isotropic` is True when the residual clears the gate; otherwise `eta` is
    still the best-fit value and `residual` says how far from isotropic the
    pair is.
    """

    eta: float
    residual: float
    isotropic: bool


def shrinking_factor(
    rho_in_1: SingleQuditDensity,
    rho_out_1: SingleQuditDensity,
    residual_tol: float = 1e-9,
) -> ShrinkingFit:
    """Fit the isotropic-shrinking model between one-qudit input and output.

    Both traceless parts are compared entrywise: eta minimizes the Frobenius
    norm of (rho_out - I/d) - eta (rho_in - I/d).
    """
    if rho_in_1.d != rho_out_1.d:
        raise ValueError("input and output reduced densities have different dimensions")
    d = rho_in_1.d
    identity = np.eye(d) / d
    a = rho_in_1.matrix - identity
    b = rho_out_1.matrix - identity
    norm_a_sq = np.vdot(a, a).real
    if norm_a_sq < 1e-24:
        # Fully mixed input: the model fits with any eta; report eta = 0.
        residual = float(np.linalg.norm(b))
        return ShrinkingFit(eta=0.0, residual=residual, isotropic=residual < residual_tol)
    eta = float(np.vdot(a, b).real / norm_a_sq)
    residual = float(np.linalg.norm(b - eta * a))
    return ShrinkingFit(eta=eta, residual=residual, isotropic=residual < residual_tol)
