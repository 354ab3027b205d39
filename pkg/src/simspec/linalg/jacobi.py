"""Cyclic Jacobi eigensolver for real symmetric matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..errors import NotSymmetric
from .exact import inertia_exact, is_symmetric, multiplicity_at

DEFAULT_PROBES = (-1, 0, 1)


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: tuple[float, ...]
    inertia: tuple[int, int, int]
    exact_multiplicities: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.eigenvalues)

    @property
    def nullity(self) -> int:
        return self.inertia[2]

    def signs_agree(self, guard: float = 1e-6) -> bool:
        """Numeric sign counts match the exact inertia (skipped if any |lambda| <= guard)."""
        ev = np.asarray(self.eigenvalues)
        if np.any(np.abs(ev) <= guard):
            return True
        return (int((ev > 0).sum()), int((ev < 0).sum()), 0) == self.inertia

    def to_dict(self) -> dict:
        p, n, z = self.inertia
        return {
            # roundoff below 1e-9 would make output library dependent
            "eigenvalues": [0.0 if abs(v) < 1e-9 else float(f"{v:.6g}") for v in self.eigenvalues],
            "inertia": {"p": p, "n": n, "z": z},
            "multiplicities": {str(k): v for k, v in sorted(self.exact_multiplicities.items())},
        }


def jacobi_eigenvalues(M, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues by cyclic Jacobi rotations, sorted descending."""
    A = np.array(M, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n) or not np.allclose(A, A.T, atol=0.0):
        raise NotSymmetric("Jacobi needs a symmetric matrix")
    if n == 0:
        return np.zeros(0)
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        if n == 1 or np.abs(A[off_mask]).max() < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                g = 100.0 * abs(apq)
                if abs(A[p, p]) + g == abs(A[p, p]) and abs(A[q, q]) + g == abs(A[q, q]):
                    # negligible next to both diagonal entries
                    A[p, q] = A[q, p] = 0.0
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                A[p, q] = A[q, p] = 0.0
    return np.sort(np.diag(A))[::-1]


def eig_symmetric(M, tol: float = 1e-12, probes=DEFAULT_PROBES) -> SpectralSummary:
    if not is_symmetric(np.asarray(M)):
        raise NotSymmetric("matrix is not symmetric")
    ev = jacobi_eigenvalues(M, tol)
    mult = {Fraction(lam): multiplicity_at(M, lam) for lam in probes}
    return SpectralSummary(tuple(float(v) for v in ev), inertia_exact(M), mult)
