#!/usr/bin/env python
# -*- encoding=utf8 -*-
import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from src.logger import logger
from src.walks.errors import ModelError, NotSmallStepError, SectionError

Vector = Tuple[int, ...]
Terms = Tuple[Tuple[Vector, Fraction], ...]


@dataclass(frozen=True)
class WalkModel:
    """
    A weighted step set in Z^d. Weights are exact rationals normalized to sum to 1,
    so the inventory evaluates to 1 at (1, ..., 1).
    """
    d: int
    steps: Tuple[Tuple[Vector, Fraction], ...]
    small_step: bool

    @classmethod
    def create(cls, d: int, vectors: Sequence[Sequence[int]], weights: Optional[Sequence] = None) -> "WalkModel":
        if d < 1:
            raise ModelError(f"dimension must be at least 1, got {d}")
        if len(vectors) == 0:
            raise ModelError("a model needs at least one step")
        if weights is not None and len(weights) != len(vectors):
            raise ModelError(f"{len(weights)} weights given for {len(vectors)} steps")

        seen: Dict[Vector, int] = {}
        raw = []
        for index, vector in enumerate(vectors):
            step = tuple(int(c) for c in vector)
            if len(step) != d:
                raise ModelError(f"step {list(step)} has {len(step)} coordinates, expected {d}", step_index=index)
            if all(c == 0 for c in step):
                raise ModelError("zero step is not allowed", step_index=index)
            if step in seen:
                raise ModelError(f"duplicate step {list(step)}", step_index=index)
            seen[step] = index
            weight = Fraction(1) if weights is None else Fraction(weights[index])
            if weight <= 0:
                raise ModelError(f"weight {weight} of step {list(step)} is not positive", step_index=index)
            raw.append((step, weight))

        total = sum(w for _, w in raw)
        steps = tuple((s, w / total) for s, w in raw)
        small_step = all(abs(c) <= 1 for s, _ in steps for c in s)
        return cls(d=d, steps=steps, small_step=small_step)

    @property
    def vectors(self) -> Tuple[Vector, ...]:
        return tuple(s for s, _ in self.steps)

    @property
    def weights(self) -> Tuple[Fraction, ...]:
        return tuple(w for _, w in self.steps)

    @cached_property
    def exponents(self) -> np.ndarray:
        return np.array(self.vectors, dtype=np.int64).reshape(len(self.steps), self.d)

    @cached_property
    def weight_array(self) -> np.ndarray:
        return np.array([float(w) for w in self.weights])

    def with_weights(self, weights: Sequence) -> "WalkModel":
        return WalkModel.create(self.d, self.vectors, weights)

    def max_step_norm(self) -> int:
        return max(max(abs(c) for c in s) for s in self.vectors)


@dataclass(frozen=True)
class SectionTriple:
    """
    chi = x_i * A + B + C / x_i, with A, B, C Laurent polynomials in the other d - 1 variables.
    """
    axis: int
    A: Terms
    B: Terms
    C: Terms

    def reconstruct(self, x: Sequence[float]) -> float:
        x = np.asarray(x, dtype=float)
        rest = np.delete(x, self.axis)
        xi = x[self.axis]
        return xi * evaluate_terms(self.A, rest) + evaluate_terms(self.B, rest) + evaluate_terms(self.C, rest) / xi


def evaluate_terms(terms: Terms, point: Sequence[float]) -> float:
    if len(terms) == 0:
        return 0.0
    point = np.asarray(point, dtype=float)
    exps = np.array([e for e, _ in terms], dtype=np.int64).reshape(len(terms), len(point))
    coefs = np.array([float(c) for _, c in terms])
    return float(coefs @ np.prod(point ** exps, axis=1))


def evaluate_terms_exact(terms: Terms, point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for exps, coef in terms:
        value = Fraction(coef)
        for base, power in zip(point, exps):
            value *= Fraction(base) ** power
        total += value
    return total


def inventory(model: WalkModel, x: Sequence[float]) -> float:
    x = np.asarray(x, dtype=float)
    return float(model.weight_array @ np.prod(x ** model.exponents, axis=1))


def inventory_exact(model: WalkModel, x: Sequence[Fraction]) -> Fraction:
    return evaluate_terms_exact(model.steps, x)


def drift(model: WalkModel) -> Tuple[Fraction, ...]:
    return tuple(sum((w * s[i] for s, w in model.steps), Fraction(0)) for i in range(model.d))


def is_zero_drift(model: WalkModel) -> bool:
    return all(c == 0 for c in drift(model))


def sections(model: WalkModel, i: int) -> SectionTriple:
    """Collect the terms of the inventory by their exponent (+1, 0, -1) in x_i. Axes are 0-based."""
    if not model.small_step:
        raise NotSmallStepError("sections are only defined for small-step models")
    if not 0 <= i < model.d:
        raise ModelError(f"axis {i} out of range for dimension {model.d}")

    parts: Dict[int, list] = {1: [], 0: [], -1: []}
    for step, weight in model.steps:
        parts[step[i]].append((step[:i] + step[i + 1:], weight))
    if not parts[1]:
        raise SectionError(f"A_{i + 1} vanishes: no step with x_{i + 1}-coordinate +1")
    if not parts[-1]:
        raise SectionError(f"C_{i + 1} vanishes: no step with x_{i + 1}-coordinate -1")
    return SectionTriple(axis=i, A=tuple(parts[1]), B=tuple(parts[0]), C=tuple(parts[-1]))


def _reachable(moves: Iterable[Vector], root: Vector, box: int) -> set:
    moves = list(moves)
    visited = {root}
    queue = deque([root])
    while queue:
        point = queue.popleft()
        for move in moves:
            target = tuple(p + m for p, m in zip(point, move))
            if target in visited:
                continue
            if all(0 <= c <= box for c in target):
                visited.add(target)
                queue.append(target)
    return visited


def check_H1(model: WalkModel, box: int = 10, window: int = 3) -> bool:
    """
    Certify irreducibility on a finite window: every point of [0, window]^d must reach
    and be reachable from every other one with steps staying inside [0, box]^d.
    """
    if box < 2 * model.max_step_norm():
        raise ModelError(f"box {box} is smaller than twice the largest step norm")
    root = (0,) * model.d
    forward = _reachable(model.vectors, root, box)
    backward = _reachable([tuple(-c for c in s) for s in model.vectors], root, box)
    side = min(window, box)
    for point in itertools.product(range(side + 1), repeat=model.d):
        if point not in forward or point not in backward:
            logger.debug(f"(H1) window check failed at {point}")
            return False
    return True
