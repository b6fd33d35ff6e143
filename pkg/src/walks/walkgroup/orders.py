#!/usr/bin/env python
# -*- encoding=utf8 -*-
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np

from src.logger import logger
from src.utils import config
from src.utils.helper import ToleranceSet
from src.walks.coxeter import PairOrder, VerdictStatus, rotation_order
from src.walks.errors import PoleError
from src.walks.model import WalkModel
from .generators import maps_equal, phi


def pair_order(delta, i: int, j: int, denom_cap: Optional[int] = None,
               exact_square: Optional[Fraction] = None) -> PairOrder:
    """Order of S_i S_j, a rotation by 2 arccos(a_ij) in the plane of f_i, f_j."""
    return rotation_order(float(np.asarray(delta)[i, j]), exact_square, denom_cap)


def relation_holds(model: WalkModel, i: int, j: int, m: int, points: np.ndarray) -> bool:
    """(phi_i phi_j)^m = Id, tested at the sample points."""
    return maps_equal(model, (i, j) * m, (), points)


@dataclass(frozen=True)
class PairRelation:
    i: int
    j: int
    order: PairOrder
    holds_in_g: Optional[bool]

    def to_dict(self) -> dict:
        return {
            "pair": [self.i + 1, self.j + 1],
            "order": self.order.describe(),
            "reason": self.order.reason,
            "relation_holds_in_G": self.holds_in_g,
        }


def pair_relations(model: WalkModel, delta, points: np.ndarray, denom_cap: Optional[int] = None,
                   exact_squares=None) -> List[PairRelation]:
    relations = []
    for i in range(model.d):
        for j in range(i + 1, model.d):
            square = exact_squares[i][j] if exact_squares is not None else None
            order = pair_order(delta, i, j, denom_cap, square)
            holds = None
            if order.status == VerdictStatus.FINITE:
                holds = relation_holds(model, i, j, order.m, points)
                logger.debug(f"(phi_{i + 1} phi_{j + 1})^{order.m} = Id in G: {holds}")
            relations.append(PairRelation(i, j, order, holds))
    return relations


@dataclass(frozen=True)
class GroupOrderEstimate:
    elements: int
    complete: bool
    max_length: int

    def to_dict(self) -> dict:
        return {"elements": self.elements, "complete": self.complete, "max_length": self.max_length}


def estimate_group_order(model: WalkModel, points: np.ndarray,
                         length_cap: int = config.word_length_cap,
                         element_cap: int = config.word_element_cap,
                         tolerance: float = config.word_equality_tolerance) -> GroupOrderEstimate:
    """
    Breadth-first enumeration of the elements of G by word length. Two words are the
    same element when their images of every sample point agree, compared in log scale.
    When the search stops before a cap the count is |G| up to the equality oracle.
    """
    points = np.asarray(points, dtype=float)
    found = ToleranceSet(points.size, tolerance)
    found.add(np.log(points))
    frontier: List[np.ndarray] = [points]
    length = 0
    while frontier and length < length_cap:
        length += 1
        next_frontier = []
        for images in frontier:
            for i in range(model.d):
                try:
                    moved = np.array([phi(model, i, p) for p in images])
                except PoleError:
                    continue
                if np.any(moved <= 0) or not found.add(np.log(moved)):
                    continue
                next_frontier.append(moved)
                if len(found) > element_cap:
                    return GroupOrderEstimate(len(found), False, length)
        frontier = next_frontier
    complete = not frontier
    logger.debug(f"word search found {len(found)} elements up to length {length}, complete={complete}")
    return GroupOrderEstimate(len(found), complete, length)


def coxeter_matrix_from_relations(d: int, relations: List[PairRelation]) -> List[List[Optional[int]]]:
    """Coxeter matrix of K_d: the order of S_i S_j, or 0 for infinite or undecided pairs."""
    matrix: List[List[Optional[int]]] = [[1] * d for _ in range(d)]
    for relation in relations:
        value = relation.order.m if relation.order.status == VerdictStatus.FINITE else 0
        matrix[relation.i][relation.j] = matrix[relation.j][relation.i] = value
    return matrix


