#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.logger import logger
from src.utils import config
from src.utils.config import cfg
from src.walks.spectral import AngleGeometry

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)

# cosines of the angles k*pi/m with m <= 6 and of the pi/5 family, with the angle as a fraction of pi
ADMISSIBLE_COSINES: Tuple[Tuple[float, Fraction], ...] = (
    (0.0, Fraction(1, 2)),
    (0.5, Fraction(1, 3)),
    (-0.5, Fraction(2, 3)),
    (SQRT2 / 2, Fraction(1, 4)),
    (-SQRT2 / 2, Fraction(3, 4)),
    (SQRT3 / 2, Fraction(1, 6)),
    (-SQRT3 / 2, Fraction(5, 6)),
    ((SQRT5 - 1) / 4, Fraction(2, 5)),
    (-(SQRT5 - 1) / 4, Fraction(3, 5)),
    ((SQRT5 + 1) / 4, Fraction(1, 5)),
    (-(SQRT5 + 1) / 4, Fraction(4, 5)),
)

NIVEN_COSINES = (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1), Fraction(-1))


class VerdictStatus:
    FINITE = "finite"
    INFINITE = "infinite"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class FiniteLabel:
    """Walls meet at angle numerator*pi/m; a chamber edge when numerator == 1."""
    m: int
    cosine: float
    numerator: int = 1

    @property
    def chamber(self) -> bool:
        return self.numerator == 1

    def describe(self) -> str:
        return str(self.m) if self.chamber else f"{self.numerator}pi/{self.m}"


@dataclass(frozen=True)
class InfiniteLabel:
    cosine: float
    reason: str = ""

    def describe(self) -> str:
        return "inf"


@dataclass(frozen=True)
class NonCrystallographic:
    """Walls whose angle is not a rational multiple of pi (up to the denominator cap)."""
    cosine: float

    def describe(self) -> str:
        return f"nc({self.cosine:.6g})"


Label = Union[FiniteLabel, InfiniteLabel, NonCrystallographic]


def label_for_order(m: int) -> Label:
    """Chamber label of a Coxeter matrix entry; m <= 0 or m = inf means infinite order."""
    if m is None or m <= 0 or m == math.inf:
        return InfiniteLabel(cosine=-1.0, reason="infinite Coxeter matrix entry")
    return FiniteLabel(m=int(m), cosine=-math.cos(math.pi / int(m)))


@dataclass(frozen=True)
class CoxeterDiagram:
    rank: int
    labels: Dict[Tuple[int, int], Label]
    components: Tuple[Tuple[int, ...], ...] = field(default=())
    denom_cap: int = 400

    @classmethod
    def create(cls, rank: int, labels: Dict[Tuple[int, int], Label], denom_cap: int = 400) -> "CoxeterDiagram":
        normalized = {}
        for (i, j), label in labels.items():
            normalized[(min(i, j), max(i, j))] = label
        for i in range(rank):
            for j in range(i + 1, rank):
                normalized.setdefault((i, j), FiniteLabel(m=2, cosine=0.0))
        diagram = cls(rank=rank, labels=normalized, denom_cap=denom_cap)
        object.__setattr__(diagram, "components", diagram._connected_components())
        return diagram

    @classmethod
    def from_coxeter_matrix(cls, matrix: Sequence[Sequence[int]]) -> "CoxeterDiagram":
        rank = len(matrix)
        labels = {(i, j): label_for_order(matrix[i][j]) for i in range(rank) for j in range(i + 1, rank)}
        return cls.create(rank, labels)

    def label(self, i: int, j: int) -> Label:
        return self.labels[(min(i, j), max(i, j))]

    def is_edge(self, i: int, j: int) -> bool:
        label = self.label(i, j)
        return not (isinstance(label, FiniteLabel) and label.m == 2 and label.chamber)

    def _connected_components(self) -> Tuple[Tuple[int, ...], ...]:
        seen = set()
        components = []
        for start in range(self.rank):
            if start in seen:
                continue
            stack = [start]
            seen.add(start)
            members = []
            while stack:
                vertex = stack.pop()
                members.append(vertex)
                for other in range(self.rank):
                    if other not in seen and other != vertex and self.is_edge(vertex, other):
                        seen.add(other)
                        stack.append(other)
            components.append(tuple(sorted(members)))
        return tuple(components)

    def covariance(self) -> np.ndarray:
        delta = np.eye(self.rank)
        for (i, j), label in self.labels.items():
            delta[i, j] = delta[j, i] = label.cosine
        return delta

    def coxeter_matrix(self) -> List[List[Optional[int]]]:
        """Integer entries for finite labels, None otherwise; 1 on the diagonal."""
        matrix: List[List[Optional[int]]] = [[1] * self.rank for _ in range(self.rank)]
        for (i, j), label in self.labels.items():
            value = label.m if isinstance(label, FiniteLabel) else None
            matrix[i][j] = matrix[j][i] = value
        return matrix

    def edges(self) -> List[Tuple[int, int, Label]]:
        return [(i, j, label) for (i, j), label in sorted(self.labels.items()) if self.is_edge(i, j)]

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "edges": [{"i": i + 1, "j": j + 1, "label": label.describe(), "cosine": label.cosine}
                      for i, j, label in self.edges()],
            "components": [[v + 1 for v in component] for component in self.components],
        }


def rational_angle(angle: float, denom_cap: int, tolerance: float = config.angle_tolerance) -> Optional[Fraction]:
    """p/m with m <= denom_cap and |angle/pi - p/m| <= tolerance, if any."""
    ratio = angle / math.pi
    candidate = Fraction(ratio).limit_denominator(denom_cap)
    if candidate <= 0 or candidate >= 1:
        return None
    if abs(float(candidate) - ratio) <= tolerance:
        return candidate
    return None


def admissible_angle(cosine: float, tolerance: float = config.angle_tolerance) -> Optional[Fraction]:
    for value, angle in ADMISSIBLE_COSINES:
        if abs(cosine - value) <= tolerance:
            return angle
    return None


def diagram_from_angles(geometry: AngleGeometry, denom_cap: Optional[int] = None) -> CoxeterDiagram:
    denom_cap = cfg.denom_cap if denom_cap is None else denom_cap
    labels: Dict[Tuple[int, int], Label] = {}
    for i in range(geometry.rank):
        for j in range(i + 1, geometry.rank):
            a = float(geometry.gram[i, j])
            angle = float(geometry.hyperplane_angles[i, j])
            # the interior angle has cosine -a
            fraction = admissible_angle(-a) or rational_angle(angle, denom_cap)
            if fraction is None:
                logger.debug(f"walls {i + 1},{j + 1}: no rational angle found (cap {denom_cap})")
                labels[(i, j)] = NonCrystallographic(cosine=a)
            else:
                labels[(i, j)] = FiniteLabel(m=fraction.denominator, cosine=a, numerator=fraction.numerator)
    return CoxeterDiagram.create(geometry.rank, labels, denom_cap=denom_cap)


@dataclass(frozen=True)
class InfiniteWitness:
    i: int
    j: int
    cosine: float
    description: str


def has_isolated_pair(delta: np.ndarray, tolerance: float = config.angle_tolerance) -> Optional[Tuple[int, int]]:
    """A pair {i, j} orthogonal to all other walls, i.e. a 2x2 diagonal block up to permutation."""
    d = delta.shape[0]
    for i in range(d):
        for j in range(i + 1, d):
            others = [k for k in range(d) if k not in (i, j)]
            if all(abs(delta[i, k]) <= tolerance and abs(delta[j, k]) <= tolerance for k in others):
                return i, j
    return None


def prop_app_test(delta, tolerance: float = config.angle_tolerance) -> Optional[InfiniteWitness]:
    """
    The reflection group is infinite when the covariance matrix has no isolated 2x2 block
    and some off-diagonal entry is not an admissible cosine.
    """
    delta = np.asarray(delta, dtype=float)
    block = has_isolated_pair(delta, tolerance)
    if block is not None:
        logger.debug(f"walls {block[0] + 1},{block[1] + 1} form an isolated pair, criterion does not apply")
        return None
    d = delta.shape[0]
    for i in range(d):
        for j in range(i + 1, d):
            a = float(delta[i, j])
            if admissible_angle(a, tolerance) is None:
                return InfiniteWitness(
                    i=i, j=j, cosine=a,
                    description=f"a_{i + 1},{j + 1} = {a:.12g} outside admissible cosine set")
    return None


@dataclass(frozen=True)
class PairOrder:
    status: str
    m: Optional[int] = None
    reason: str = ""

    def describe(self) -> str:
        if self.status == VerdictStatus.FINITE:
            return str(self.m)
        return self.status


def reconstruct_rational(value: float, max_denominator: int = 10000,
                         tolerance: float = 1e-12) -> Optional[Fraction]:
    candidate = Fraction(value).limit_denominator(max_denominator)
    if abs(float(candidate) - value) <= tolerance:
        return candidate
    return None


def rotation_order(a: float, signed_square: Optional[Fraction] = None,
                   denom_cap: Optional[int] = None) -> PairOrder:
    """
    Order of the rotation by 2*arccos(a), the product of the reflections in two walls
    with covariance entry a. `signed_square` is sign(a)*a^2 when it is known exactly.
    """
    denom_cap = cfg.denom_cap if denom_cap is None else denom_cap
    exact = signed_square is not None
    if exact:
        double_cosine = 2 * abs(signed_square) - 1
    else:
        double_cosine = reconstruct_rational(2 * a * a - 1)

    if double_cosine is not None and double_cosine not in NIVEN_COSINES:
        source = "exact" if exact else "reconstructed"
        return PairOrder(VerdictStatus.INFINITE,
                         reason=f"cos(2 arccos a) = {double_cosine} is rational ({source}) "
                                f"and not in {{0, +-1/2, +-1}}")

    fraction = rational_angle(math.acos(max(-1.0, min(1.0, a))), denom_cap)
    if fraction is not None:
        return PairOrder(VerdictStatus.FINITE, m=fraction.denominator,
                         reason=f"arccos(a)/pi = {fraction}")
    return PairOrder(VerdictStatus.INCONCLUSIVE, reason=f"no rational angle found (cap {denom_cap})")
