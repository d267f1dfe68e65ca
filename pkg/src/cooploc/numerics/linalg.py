"""Least squares, full SVD and hard rank truncation."""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from cooploc.errors import ConfigError, RankDeficiencyError


@dataclass(frozen=True, eq=False)
class SvdFactors:
    """Full SVD A = U·diag(S)·Vᵀ.

    Attributes:
        u: m×m orthogonal
        s: min(m, n) singular values, descending
        v: n×n orthogonal (V, not Vᵀ)
    """

    u: np.ndarray
    s: np.ndarray
    v: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        """Shape (m, n) of the factored matrix."""
        return self.u.shape[0], self.v.shape[0]

    def rank_tolerance(self) -> float:
        """max(m, n)·ε·σ₁, the numerical-rank threshold."""
        if self.s.size == 0:
            return 0.0
        return max(self.shape) * np.finfo(float).eps * float(self.s[0])

    def has_full_column_rank(self) -> bool:
        """True when every singular value exceeds the rank tolerance."""
        m, n = self.shape
        return m >= n and self.s.size == n and bool(np.all(self.s > self.rank_tolerance()))

    def reconstruct(self) -> np.ndarray:
        """Recompose U·diag(S)·Vᵀ."""
        m, n = self.shape
        sigma = np.zeros((m, n))
        sigma[: self.s.size, : self.s.size] = np.diag(self.s)
        return self.u @ sigma @ self.v.T


def _as_finite_matrix(a: np.ndarray, name: str) -> np.ndarray:
    """Coerce to a 2-D float array, rejecting NaN/inf."""
    matrix = np.asarray(a, dtype=float)
    if matrix.ndim != 2:
        raise ConfigError(f"{name} must be 2-D, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise ConfigError(f"{name} has non-finite entries")
    return matrix


def svd(a: np.ndarray) -> SvdFactors:
    """Full (not thin) singular value decomposition.

    Args:
        a: m×n finite matrix

    Returns:
        SvdFactors with square U and V
    """
    matrix = _as_finite_matrix(a, "Matrix")
    u, s, vh = scipy.linalg.svd(matrix, full_matrices=True, lapack_driver="gesdd")
    return SvdFactors(u=u, s=s, v=vh.T)


def least_squares(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """argmin_x ‖Ax − b‖₂ for a full-column-rank A.

    b may be a vector or a matrix of right-hand sides (one solve per column).

    Raises:
        ConfigError: If A has fewer rows than columns or shapes disagree
        RankDeficiencyError: If the smallest singular value of A is at or below
            max(m, n)·ε·σ₁
    """
    matrix = _as_finite_matrix(a, "Design matrix")
    rhs = np.asarray(b, dtype=float)
    m, n = matrix.shape
    if m < n:
        raise ConfigError(f"Least squares needs m ≥ n, got {m}×{n}")
    if rhs.shape[0] != m:
        raise ConfigError(f"Right-hand side has {rhs.shape[0]} rows, expected {m}")

    if n == 0:
        raise ConfigError("Least squares needs at least one unknown")

    singular_values = scipy.linalg.svdvals(matrix)
    tolerance = max(m, n) * np.finfo(float).eps * singular_values[0]
    if singular_values[-1] <= tolerance:
        raise RankDeficiencyError(
            f"Matrix is rank deficient (σ_min={singular_values[-1]:.3e})"
        )

    solution, _, _, _ = scipy.linalg.lstsq(matrix, rhs, lapack_driver="gelsd")
    return solution


def svt_truncate(w: np.ndarray, rank: int) -> np.ndarray:
    """Best rank-≤s Frobenius approximation: keep the s largest singular values.

    Args:
        w: n×τ matrix
        rank: Rank bound s, 1 ≤ s ≤ min(n, τ)

    Returns:
        Σ_{r≤s} σ_r·u_r·v_rᵀ

    Raises:
        ConfigError: If the rank bound is out of range
    """
    matrix = _as_finite_matrix(w, "Matrix")
    limit = min(matrix.shape)
    if not 1 <= rank <= limit:
        raise ConfigError(f"Rank bound must be within 1..{limit}, got {rank}")
    u, s, vh = scipy.linalg.svd(matrix, full_matrices=False)
    return (u[:, :rank] * s[:rank]) @ vh[:rank]
