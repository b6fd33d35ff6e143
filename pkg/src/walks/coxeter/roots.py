#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import numpy as np

from src.logger import logger
from src.utils import config
from src.utils.config import cfg
from src.utils.helper import ToleranceSet
from .catalog import CatalogEntry, catalog_entry, standard_coxeter_matrix

ExactVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class ExceededCap:
    cap: int
    reached: int

    def describe(self) -> str:
        return f"exceeded cap {self.cap}"


@dataclass(frozen=True)
class RootSystem:
    roots: Tuple
    exact: bool

    @property
    def reflection_count(self) -> int:
        return len(self.roots) // 2

    def positive_roots(self) -> List:
        """One representative per +-pair: the root whose first nonzero coordinate is positive."""
        chosen = []
        for root in self.roots:
            for c in root:
                if (c != 0) if self.exact else (abs(c) > 1e-9):
                    if c > 0:
                        chosen.append(root)
                    break
        return chosen


@dataclass(frozen=True)
class GroupClosure:
    order: int
    elements: Tuple[np.ndarray, ...]


def _is_exact(vectors) -> bool:
    return all(isinstance(c, (Fraction, int)) and not isinstance(c, bool) for v in vectors for c in v)


def _dot(x, y):
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def reflect_exact(x: ExactVector, v: ExactVector) -> ExactVector:
    scale = 2 * _dot(x, v) / _dot(v, v)
    return tuple(a - scale * b for a, b in zip(x, v))


def reflection_matrix(v: Sequence[float]) -> np.ndarray:
    """Orthogonal reflection through the hyperplane v^perp."""
    v = np.asarray(v, dtype=float)
    v = v / np.linalg.norm(v)
    return np.eye(len(v)) - 2.0 * np.outer(v, v)


def generate_roots(simple_normals: Sequence[Sequence], cap: int = config.root_cap) -> Union[RootSystem, ExceededCap]:
    """
    Closure of {+-u_i} under the reflections s_v. Rational normals are handled in exact
    arithmetic; real normals are normalized and deduplicated at tolerance 1e-8.
    """
    if _is_exact(simple_normals):
        simple = [tuple(Fraction(c) for c in v) for v in simple_normals]
        seen = set()
        roots: List = []
        for v in simple:
            for root in (v, tuple(-c for c in v)):
                if root not in seen:
                    seen.add(root)
                    roots.append(root)
        queue = deque(roots)
        while queue:
            root = queue.popleft()
            for v in simple:
                image = reflect_exact(root, v)
                if image in seen:
                    continue
                seen.add(image)
                roots.append(image)
                queue.append(image)
                if len(roots) > cap:
                    logger.debug(f"root closure exceeded cap {cap}")
                    return ExceededCap(cap=cap, reached=len(roots))
        return RootSystem(roots=tuple(sorted(roots)), exact=True)

    simple = [np.asarray(v, dtype=float) / np.linalg.norm(v) for v in simple_normals]
    dim = len(simple[0])
    found = ToleranceSet(dim, config.dedup_tolerance)
    queue = deque()
    for v in simple:
        for root in (v, -v):
            if found.add(root):
                queue.append(root)
    while queue:
        root = queue.popleft()
        for v in simple:
            image = root - 2.0 * float(np.dot(root, v)) * v
            if not found.add(image):
                continue
            queue.append(image)
            if len(found) > cap:
                logger.debug(f"root closure exceeded cap {cap}")
                return ExceededCap(cap=cap, reached=len(found))
    ordered = sorted(found.items(), key=lambda r: tuple(np.round(r, 9)))
    return RootSystem(roots=tuple(ordered), exact=False)


def matrix_group_closure(generators: Sequence[np.ndarray], cap: int = None,
                         tolerance: float = config.dedup_tolerance) -> Union[GroupClosure, ExceededCap]:
    """Breadth-first closure of the generated matrix group, deduplicated at `tolerance`."""
    cap = cfg.closure_cap if cap is None else cap
    generators = [np.asarray(g, dtype=float) for g in generators]
    d = generators[0].shape[0]
    identity = np.eye(d)
    found = ToleranceSet(d * d, tolerance)
    found.add(identity)
    elements = [identity]
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for generator in generators:
            product = element @ generator
            if not found.add(product):
                continue
            elements.append(product)
            queue.append(product)
            if len(elements) > cap:
                logger.debug(f"matrix group closure exceeded cap {cap}")
                return ExceededCap(cap=cap, reached=len(elements))
    logger.debug(f"matrix group closure stabilized at {len(elements)} elements")
    return GroupClosure(order=len(elements), elements=tuple(elements))


def _unit(i: int, n: int, scale=1) -> List[Fraction]:
    vector = [Fraction(0)] * n
    vector[i] = Fraction(scale)
    return vector


def _difference(i: int, j: int, n: int) -> ExactVector:
    vector = _unit(i, n)
    vector[j] -= 1
    return tuple(vector)


def simple_system_from_matrix(matrix: Sequence[Sequence[int]]) -> List[np.ndarray]:
    """Real simple roots with Gram matrix -cos(pi/m_ij), from a Cholesky factor."""
    rank = len(matrix)
    gram = np.array([[1.0 if i == j else -math.cos(math.pi / matrix[i][j]) for j in range(rank)]
                     for i in range(rank)])
    lower = np.linalg.cholesky(gram)
    return [lower[i].copy() for i in range(rank)]


def simple_system(name: str) -> List:
    """
    Standard simple roots of a finite Coxeter type, in the order of its standard diagram.
    Crystallographic types come out rational; H3, H4 and I2(m) are real.
    """
    entry: CatalogEntry = catalog_entry(name)
    n = entry.rank
    if entry.name == "Z/2Z":
        return [(Fraction(1),)]
    if entry.family == "A":
        return [_difference(i, i + 1, n + 1) for i in range(n)]
    if entry.family == "B":
        return [tuple(_unit(0, n))] + [_difference(i + 1, i, n) for i in range(n - 1)]
    if entry.family == "D":
        return _d_series(n)
    if entry.family == "E":
        half = Fraction(1, 2)
        first = tuple([half] + [-half] * 6 + [half])
        fork = tuple([Fraction(1), Fraction(1)] + [Fraction(0)] * 6)
        # chain first, e2 - e1, e3 - e2, ...; the fork e1 + e2 attaches to e3 - e2
        chain = [_difference(i + 1, i, 8) for i in range(n - 2)]
        return [first] + chain + [fork]
    if entry.name == "F4":
        half = Fraction(1, 2)
        return [
            (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
            (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
            (half, -half, -half, -half),
        ]
    return simple_system_from_matrix(standard_coxeter_matrix(entry))


def _d_series(n: int) -> List[ExactVector]:
    # chain e_n - e_{n-1}, ..., e_3 - e_2, e_2 - e_1 followed by the fork e_1 + e_2
    chain = [_difference(i + 1, i, n) for i in range(n - 2, -1, -1)]
    fork = _unit(0, n)
    fork[1] = Fraction(1)
    return chain + [tuple(fork)]
