#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
from typing import List, Tuple

import numpy as np

from src.logger import logger
from src.utils import config
from src.walks.errors import DegenerateModelError


def _off_diagonal_mass(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def _rotate(p: int, q: int, a: np.ndarray, v: np.ndarray):
    """Apply the rotation in the (p, q) plane that annihilates a[p, q]."""
    theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def _jacobi(a: np.ndarray, tolerance: float, max_sweeps: int):
    n = a.shape[0]
    v = np.eye(n)
    threshold = tolerance * max(1.0, float(np.linalg.norm(a)))
    masses: List[float] = [_off_diagonal_mass(a)]
    while masses[-1] > threshold and len(masses) <= max_sweeps:
        for p in range(n):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 1e-300:
                    _rotate(p, q, a, v)
        masses.append(_off_diagonal_mass(a))
    return v, masses


def _symmetric_copy(m) -> np.ndarray:
    a = np.array(m, dtype=float)
    n, k = a.shape
    if n != k:
        raise ValueError(f"matrix must be square, got {a.shape}")
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-12 * max(1.0, float(np.max(np.abs(a), initial=0.0))):
        raise ValueError("matrix must be symmetric")
    return (a + a.T) / 2


def sym_eig(m, tolerance: float = config.jacobi_tolerance,
            max_sweeps: int = config.jacobi_max_sweeps) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Returns (P, D) with P orthogonal, D the eigenvalues sorted descending, and
    M = P diag(D) P^T.
    """
    a = _symmetric_copy(m)
    v, masses = _jacobi(a, tolerance, max_sweeps)
    logger.debug(f"jacobi stopped after {len(masses) - 1} sweeps, off-diagonal mass {masses[-1]:.3e}")
    eigenvalues = np.diag(a).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    return v[:, order], eigenvalues[order]


def jacobi_sweep_masses(m, tolerance: float = config.jacobi_tolerance,
                        max_sweeps: int = config.jacobi_max_sweeps) -> List[float]:
    """Off-diagonal Frobenius mass before the first sweep and after each one."""
    _, masses = _jacobi(_symmetric_copy(m), tolerance, max_sweeps)
    return masses


def matrix_power(m, s: float) -> np.ndarray:
    """M^s = P diag(D^s) P^T for a symmetric positive definite M."""
    p, eigenvalues = sym_eig(m)
    if np.any(eigenvalues <= 0):
        raise DegenerateModelError(f"matrix is not positive definite: eigenvalues {eigenvalues.tolist()}")
    result = (p * eigenvalues ** s) @ p.T
    return (result + result.T) / 2
