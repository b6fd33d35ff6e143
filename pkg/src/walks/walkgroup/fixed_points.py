#!/usr/bin/env python
# -*- encoding=utf8 -*-
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import fsolve
from tqdm import tqdm

from src.logger import logger
from src.utils import config
from src.utils.config import cfg
from src.walks.errors import PoleError
from src.walks.model import WalkModel
from .generators import _section_polynomials, jacobian_generator

START_SCALES = ((1.0, 1.0), (2.0, 2.0), (0.5, 2.0), (2.0, 0.5))
SIGNS = ((1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0))


@dataclass(frozen=True)
class InfiniteOrderWitness:
    i: int
    j: int
    point: Tuple[float, ...]
    moduli: Tuple[float, ...]

    @property
    def description(self) -> str:
        point = ", ".join(f"{c:.6g}" for c in self.point)
        moduli = ", ".join(f"{m:.6g}" for m in self.moduli)
        return (f"phi_{self.i + 1} phi_{self.j + 1} has a common fixed point ({point}) "
                f"with Jacobian eigenvalue moduli {moduli}")

    def to_dict(self) -> dict:
        return {"pair": [self.i + 1, self.j + 1], "point": list(self.point), "moduli": list(self.moduli),
                "description": self.description}


def _embedded(base: np.ndarray, axes: Tuple[int, int], y: Sequence[float]) -> np.ndarray:
    x = base.copy()
    x[axes[0]], x[axes[1]] = y
    return x


def _residual(model: WalkModel, axes: Tuple[int, int], x: np.ndarray) -> np.ndarray:
    """x_k^2 A_k - C_k for both active axes, relative to the size of the two terms."""
    values = np.zeros(2)
    for row, k in enumerate(axes):
        _, a_poly, c_poly = _section_polynomials(model, k)
        left = x[k] * x[k] * a_poly.value(x)
        right = c_poly.value(x)
        values[row] = (left - right) / max(abs(left) + abs(right), 1e-300)
    return values


def _solve(model: WalkModel, axes: Tuple[int, int], base: np.ndarray, start: Tuple[float, float],
           tolerance: float = 1e-12) -> Optional[np.ndarray]:
    """Real common fixed point of phi_i and phi_j near `start`, other coordinates frozen at `base`."""

    def equations(y):
        if min(abs(y[0]), abs(y[1])) < 1e-9:
            return np.full(2, 1.0)
        return _residual(model, axes, _embedded(base, axes, y))

    with np.errstate(all="ignore"):
        y, _, status, _ = fsolve(equations, np.asarray(start, dtype=float), full_output=True, xtol=1e-13)
    if status != 1 or not np.all(np.isfinite(y)) or min(abs(y[0]), abs(y[1])) < 1e-9:
        return None
    x = _embedded(base, axes, y)
    for k in axes:
        if abs(_section_polynomials(model, k)[1].value(x)) < 1e-12:
            return None
    if float(np.max(np.abs(_residual(model, axes, x)))) > tolerance * 1e3:
        return None
    return x


def _scan_cell(model: WalkModel, i: int, j: int, base: np.ndarray, starts: int,
               threshold: float) -> List[InfiniteOrderWitness]:
    witnesses = []
    solutions: List[np.ndarray] = []
    for scale_i, scale_j in START_SCALES[:starts]:
        for sign_i, sign_j in SIGNS:
            point = _solve(model, (i, j), base, (sign_i * scale_i, sign_j * scale_j))
            if point is None or any(np.max(np.abs(point - s)) < 1e-8 for s in solutions):
                continue
            solutions.append(point)
            try:
                product = jacobian_generator(model, i, point) @ jacobian_generator(model, j, point)
            except PoleError:
                continue
            moduli = np.abs(np.linalg.eigvals(product))
            if np.any(np.abs(moduli - 1.0) > threshold):
                witnesses.append(InfiniteOrderWitness(
                    i=i, j=j, point=tuple(float(c) for c in point),
                    moduli=tuple(float(m) for m in np.sort(moduli))))
    return witnesses


def fixed_point_scan(model: WalkModel, i: int, j: int, grid: Sequence[float] = config.fixed_point_grid,
                     threshold: float = config.modulus_threshold, starts: int = config.fixed_point_starts,
                     threads: Optional[int] = None) -> List[InfiniteOrderWitness]:
    """
    Look for common fixed points of phi_i and phi_j with the other coordinates frozen on
    `grid`; a Jacobian eigenvalue of phi_i phi_j off the unit circle there means that
    phi_i phi_j has infinite order.
    """
    if i == j:
        raise ValueError("fixed point scan needs two distinct axes")
    threads = cfg.threads if threads is None else threads
    frozen = [k for k in range(model.d) if k not in (i, j)]
    cells = []
    for values in itertools.product(grid, repeat=len(frozen)):
        base = np.ones(model.d)
        for k, value in zip(frozen, values):
            base[k] = value
        cells.append(base)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda base: _scan_cell(model, i, j, base, starts, threshold), cells))
    else:
        iterator = tqdm(cells, desc=f"fixed points {i + 1},{j + 1}", disable=not cfg.show_progress)
        results = [_scan_cell(model, i, j, base, starts, threshold) for base in iterator]

    witnesses = [w for cell in results for w in cell]
    witnesses.sort(key=lambda w: w.point)
    if witnesses:
        logger.info(f"fixed point scan on pair {i + 1},{j + 1}: {len(witnesses)} witnesses")
    return witnesses
