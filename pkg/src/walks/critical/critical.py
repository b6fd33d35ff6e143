#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from src.logger import logger
from src.utils import config
from src.walks.errors import CriticalPointError, DegenerateModelError
from src.walks.model import WalkModel, inventory, is_zero_drift

ExactMatrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class CriticalData:
    x0: np.ndarray
    rho: float
    hessian: np.ndarray
    delta: np.ndarray
    gradient_residual: float
    iterations: int
    # Hessian at x0 = (1, ..., 1) in rational arithmetic, only for zero-drift models
    exact_hessian: Optional[ExactMatrix] = None

    @property
    def d(self) -> int:
        return len(self.x0)


def _monomials(model: WalkModel, x: np.ndarray) -> np.ndarray:
    return model.weight_array * np.prod(x ** model.exponents, axis=1)


def gradient(model: WalkModel, x: Sequence[float]) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    mono = _monomials(model, x)
    return (model.exponents.T @ mono) / x


def hessian(model: WalkModel, x: Sequence[float]) -> np.ndarray:
    """Second partials sum_s w(s) s_i (s_j - delta_ij) x^s / (x_i x_j)."""
    x = np.asarray(x, dtype=float)
    mono = _monomials(model, x)
    exps = model.exponents.astype(float)
    second = (exps * mono[:, None]).T @ exps - np.diag(exps.T @ mono)
    return second / np.outer(x, x)


def exact_hessian(model: WalkModel) -> ExactMatrix:
    """Hessian at (1, ..., 1) in rational arithmetic."""
    rows = []
    for i in range(model.d):
        row = []
        for j in range(model.d):
            entry = Fraction(0)
            for step, weight in model.steps:
                entry += weight * step[i] * (step[j] - (1 if i == j else 0))
            row.append(entry)
        rows.append(tuple(row))
    return tuple(rows)


def _check_two_sided(model: WalkModel):
    for i in range(model.d):
        column = model.exponents[:, i]
        if not (np.any(column > 0) and np.any(column < 0)):
            raise CriticalPointError(
                f"coordinate {i + 1} needs both a positive and a negative step for an interior minimum")


def _log_objective(model: WalkModel, t: np.ndarray):
    mono = model.weight_array * np.exp(model.exponents @ t)
    exps = model.exponents.astype(float)
    value = float(np.sum(mono))
    grad = exps.T @ mono
    hess = (exps * mono[:, None]).T @ exps
    return value, grad, hess


def critical_point(model: WalkModel, start: Optional[Sequence[float]] = None,
                   max_iterations: int = config.newton_max_iterations,
                   tolerance: float = config.newton_tolerance) -> CriticalData:
    """
    Minimize the inventory over the positive orthant.

    Newton runs on t = log x, where the inventory is a convex sum of exponentials, so
    iterates remain positive. Steps are halved until the objective or the gradient
    norm decreases and every coordinate stays above the positivity floor.
    """
    _check_two_sided(model)

    if start is None and is_zero_drift(model):
        x0 = np.ones(model.d)
        return _finish(model, x0, 0, exact=exact_hessian(model))

    x = np.ones(model.d) if start is None else np.asarray(start, dtype=float)
    if np.any(x <= 0):
        raise CriticalPointError(f"start point {x.tolist()} is not in the positive orthant")
    t = np.log(x)
    floor = math.log(config.newton_positivity_floor)

    for iteration in range(1, max_iterations + 1):
        value, grad, hess = _log_objective(model, t)
        residual = float(np.max(np.abs(grad / np.exp(t))))
        if residual < tolerance:
            return _finish(model, np.exp(t), iteration - 1)
        try:
            direction = -np.linalg.solve(hess, grad)
        except np.linalg.LinAlgError as e:
            raise CriticalPointError(f"singular Hessian at iterate {np.exp(t).tolist()}: {e}")

        step = 1.0
        grad_norm = float(np.max(np.abs(grad)))
        for _ in range(60):
            candidate = t + step * direction
            if np.all(candidate > floor) and np.all(np.isfinite(candidate)):
                new_value, new_grad, _ = _log_objective(model, candidate)
                if new_value < value or float(np.max(np.abs(new_grad))) < grad_norm:
                    break
            step /= 2
        else:
            raise CriticalPointError(f"damping failed to stay in the orthant at iteration {iteration}")
        t = candidate
        if np.any(np.abs(t) > 700):
            raise CriticalPointError(f"iterate escaped the positive orthant: {t.tolist()}")
        logger.debug(f"newton iteration {iteration}: residual={residual:.3e} step={step}")

    raise CriticalPointError(f"Newton did not converge in {max_iterations} iterations")


def _finish(model: WalkModel, x0: np.ndarray, iterations: int, exact: Optional[ExactMatrix] = None) -> CriticalData:
    h = hessian(model, x0)
    residual = float(np.max(np.abs(gradient(model, x0))))
    data = CriticalData(
        x0=x0,
        rho=inventory(model, x0),
        hessian=h,
        delta=normalize_hessian(h),
        gradient_residual=residual,
        iterations=iterations,
        exact_hessian=exact,
    )
    logger.debug(f"critical point {x0.tolist()} found after {iterations} iterations, rho={data.rho}")
    return data


def normalize_hessian(h: np.ndarray) -> np.ndarray:
    diagonal = np.diag(h)
    if np.any(diagonal <= 0):
        raise DegenerateModelError(f"vanishing pure second partial: diagonal {diagonal.tolist()}")
    scale = np.sqrt(diagonal)
    delta = h / np.outer(scale, scale)
    delta = (delta + delta.T) / 2
    np.fill_diagonal(delta, 1.0)
    return delta


def covariance(model: WalkModel, x0: Sequence[float]) -> np.ndarray:
    return normalize_hessian(hessian(model, x0))


def exact_covariance_squares(h: ExactMatrix) -> Tuple[Tuple[Fraction, ...], ...]:
    """Signed squares sign(a_ij) * a_ij^2 of the covariance entries, exact."""
    d = len(h)
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            square = h[i][j] * h[i][j] / (h[i][i] * h[j][j])
            row.append(square if h[i][j] >= 0 else -square)
        rows.append(tuple(row))
    return tuple(rows)


def cramer_weights(model: WalkModel, x0: Sequence[float]) -> WalkModel:
    """Exponential reweighting w(s) x0^s / chi(x0), which removes the drift."""
    x0 = np.asarray(x0, dtype=float)
    if np.all(x0 == 1.0):
        return model
    mono = _monomials(model, x0)
    rho = float(np.sum(mono))
    return model.with_weights([Fraction(float(m / rho)) for m in mono])


def bilinear_form(model: WalkModel, x0: Sequence[float], h: Sequence[float], k: Sequence[float]) -> float:
    return float(np.asarray(h, dtype=float) @ hessian(model, x0) @ np.asarray(k, dtype=float))


def normalized_basis(hessian_matrix: np.ndarray) -> np.ndarray:
    """Columns f_i = e_i / sqrt([e_i, e_i])."""
    return np.diag(1.0 / np.sqrt(np.diag(hessian_matrix)))
