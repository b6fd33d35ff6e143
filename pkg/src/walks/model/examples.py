#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
from fractions import Fraction

from src.utils.path import get_model_file
from .model import WalkModel
from .schema import load_model

BUNDLED_MODELS = (
    "simple_walk_2d",
    "tandem_2d",
    "weighted_tandem_2d",
    "rational_cosine_3d",
    "third_cosine_3d",
    "orthogonal_walls_3d",
    "infinite_reflection_4d",
    "symmetric_group_4d",
)


def bundled_model(name: str) -> WalkModel:
    if name not in BUNDLED_MODELS:
        raise KeyError(f"unknown bundled model {name!r}, choose from {', '.join(BUNDLED_MODELS)}")
    return load_model(get_model_file(name))


def simple_walk(d: int) -> WalkModel:
    vectors = []
    for i in range(d):
        for sign in (1, -1):
            step = [0] * d
            step[i] = sign
            vectors.append(step)
    return WalkModel.create(d, vectors)


def tandem(d: int) -> WalkModel:
    """Steps -e_1, e_i - e_{i+1} and e_d; the walls form a chamber of type A_d."""
    vectors = []
    first = [0] * d
    first[0] = -1
    vectors.append(first)
    for i in range(d - 1):
        step = [0] * d
        step[i] = 1
        step[i + 1] = -1
        vectors.append(step)
    last = [0] * d
    last[-1] = 1
    vectors.append(last)
    return WalkModel.create(d, vectors)


def dihedral(n: int) -> WalkModel:
    """
    Quadrant model whose walls meet at angle pi/n, so that its reflection group is
    dihedral of order 2n. Weights are the binary expansions of the trigonometric values.
    """
    if n < 3:
        raise ValueError(f"dihedral model needs n >= 3, got {n}")
    axis = Fraction(math.sin(math.pi / n) ** 2 / 2)
    diagonal = Fraction(math.cos(math.pi / n) ** 2 / 2)
    vectors = [(1, 0), (-1, 0), (1, -1), (-1, 1)]
    weights = [axis, axis, diagonal, diagonal]
    return WalkModel.create(2, vectors, weights)
