#!/usr/bin/env python
# -*- encoding=utf8 -*-
from dataclasses import dataclass

import numpy as np

from src.walks.model import WalkModel
from .critical import CriticalData, cramer_weights


@dataclass(frozen=True)
class RandomWalks:
    """
    The four walks attached to a model: W with the original weights, X its Cramer
    transform, Y the rescaling of X with unit-diagonal covariance, and Z the linear
    image of Y with identity covariance, confined to the cone delta^(-1/2) R_+^d.
    """
    w_drift: np.ndarray
    w_covariance: np.ndarray
    x_model: WalkModel
    x_drift: np.ndarray
    x_covariance: np.ndarray
    y_covariance: np.ndarray
    z_map: np.ndarray


def _moments(model: WalkModel):
    exps = model.exponents.astype(float)
    weights = model.weight_array / np.sum(model.weight_array)
    mean = exps.T @ weights
    second = (exps * weights[:, None]).T @ exps
    return mean, second - np.outer(mean, mean)


def random_walks(model: WalkModel, critical: CriticalData) -> RandomWalks:
    # late import: spectral depends on the critical package
    from src.walks.spectral import matrix_power

    w_drift, w_covariance = _moments(model)
    x_model = cramer_weights(model, critical.x0)
    x_drift, x_covariance = _moments(x_model)
    scale = 1.0 / np.sqrt(np.diag(x_covariance))
    y_covariance = x_covariance * np.outer(scale, scale)
    return RandomWalks(
        w_drift=w_drift,
        w_covariance=w_covariance,
        x_model=x_model,
        x_drift=x_drift,
        x_covariance=x_covariance,
        y_covariance=y_covariance,
        z_map=matrix_power(critical.delta, -0.5),
    )
