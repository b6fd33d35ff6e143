#!/usr/bin/env python
# -*- encoding=utf8 -*-
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.walks.critical import CriticalData, bilinear_form, hessian, normalized_basis
from src.walks.model import WalkModel
from .jacobi import matrix_power


def interior_angles(gram: np.ndarray) -> np.ndarray:
    """
    Interior angle between walls i and j: pi minus the angle between the inward
    normals, so its cosine is -gram[i, j]. The diagonal is left at 0.
    """
    angles = np.pi - np.arccos(np.clip(gram, -1.0, 1.0))
    np.fill_diagonal(angles, 0.0)
    return angles


@dataclass(frozen=True)
class AngleGeometry:
    """
    Wall normals u_i of the cone T = delta^(-1/2) R_+^d, stored as rows of `u`.
    For a chamber given by its normals, `u` may live in a larger ambient space.
    """
    u: np.ndarray
    gram: np.ndarray
    hyperplane_angles: np.ndarray
    delta_sqrt: np.ndarray
    delta_inv_sqrt: np.ndarray

    @property
    def rank(self) -> int:
        return self.u.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.u.shape[1]

    @property
    def delta(self) -> np.ndarray:
        return self.gram

    @classmethod
    def from_normals(cls, normals: Sequence[Sequence[float]]) -> "AngleGeometry":
        u = np.array(normals, dtype=float)
        u = u / np.linalg.norm(u, axis=1)[:, None]
        gram = u @ u.T
        gram = (gram + gram.T) / 2
        np.fill_diagonal(gram, 1.0)
        return cls(
            u=u,
            gram=gram,
            hyperplane_angles=interior_angles(gram),
            delta_sqrt=matrix_power(gram, 0.5),
            delta_inv_sqrt=matrix_power(gram, -0.5),
        )

    @classmethod
    def from_angles(cls, angles: Sequence[Sequence[float]]) -> "AngleGeometry":
        """Geometry of a cone with prescribed interior wall angles (off-diagonal entries)."""
        angles = np.array(angles, dtype=float)
        delta = -np.cos(angles)
        np.fill_diagonal(delta, 1.0)
        return angle_geometry(delta)


def angle_geometry(delta) -> AngleGeometry:
    delta = np.array(delta, dtype=float)
    delta_sqrt = matrix_power(delta, 0.5)
    # u_i = delta^(1/2) e_i, the columns of the symmetric square root
    u = delta_sqrt.T.copy()
    return AngleGeometry(
        u=u,
        gram=u @ u.T,
        hyperplane_angles=interior_angles(delta),
        delta_sqrt=delta_sqrt,
        delta_inv_sqrt=matrix_power(delta, -0.5),
    )


def polytope_generators(geometry: AngleGeometry) -> np.ndarray:
    """Edge rays of T = delta^(-1/2) R_+^d, as columns."""
    return geometry.delta_inv_sqrt.copy()


@dataclass(frozen=True)
class IsometryReport:
    max_residual: float
    passed: bool
    tolerance: float


def isometry_check(model: WalkModel, critical: CriticalData, geometry: AngleGeometry,
                   tolerance: float = 1e-10) -> IsometryReport:
    """Compare [f_i, f_j] from the bilinear form at x0 with <u_i, u_j> from the wall normals."""
    basis = normalized_basis(hessian(model, critical.x0))
    d = model.d
    form = np.array([[bilinear_form(model, critical.x0, basis[:, i], basis[:, j]) for j in range(d)]
                     for i in range(d)])
    inner = geometry.u @ geometry.u.T
    residual = float(np.max(np.abs(form - inner)))
    return IsometryReport(max_residual=residual, passed=residual < tolerance, tolerance=tolerance)
