#!/usr/bin/env python
# -*- encoding=utf8 -*-
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np

from src.utils import config
from src.walks.critical import CriticalData
from src.walks.errors import PoleError
from src.walks.model import SectionTriple, WalkModel, sections

Word = Tuple[int, ...]


@dataclass(frozen=True)
class _Laurent:
    """Laurent polynomial in all d variables (the exponent of the section axis is 0)."""
    exponents: np.ndarray
    coefficients: np.ndarray

    def value(self, x: np.ndarray) -> float:
        return float(self.coefficients @ np.prod(x ** self.exponents, axis=1))

    def gradient(self, x: np.ndarray) -> np.ndarray:
        mono = self.coefficients * np.prod(x ** self.exponents, axis=1)
        return (self.exponents.T @ mono) / x


def _embed(terms, axis: int, d: int) -> _Laurent:
    exponents = np.array([e[:axis] + (0,) + e[axis:] for e, _ in terms], dtype=np.int64).reshape(len(terms), d)
    coefficients = np.array([float(c) for _, c in terms])
    return _Laurent(exponents, coefficients)


@lru_cache(maxsize=256)
def _section_polynomials(model: WalkModel, i: int) -> Tuple[SectionTriple, _Laurent, _Laurent]:
    triple = sections(model, i)
    return triple, _embed(triple.A, i, model.d), _embed(triple.C, i, model.d)


def phi(model: WalkModel, i: int, point: Sequence[float]) -> np.ndarray:
    """The involution replacing x_i by C_i / (x_i A_i), the other coordinates unchanged."""
    x = np.asarray(point, dtype=float)
    _, a_poly, c_poly = _section_polynomials(model, i)
    a = a_poly.value(x)
    if a == 0.0:
        raise PoleError(f"A_{i + 1} vanishes at {x.tolist()}")
    image = x.copy()
    image[i] = c_poly.value(x) / (x[i] * a)
    return image


def jacobian_generator(model: WalkModel, i: int, point: Sequence[float]) -> np.ndarray:
    """Jacobian of phi_i at `point`: identity rows except row i."""
    x = np.asarray(point, dtype=float)
    _, a_poly, c_poly = _section_polynomials(model, i)
    a = a_poly.value(x)
    if a == 0.0:
        raise PoleError(f"A_{i + 1} vanishes at {x.tolist()}")
    c = c_poly.value(x)
    grad_a = a_poly.gradient(x)
    grad_c = c_poly.gradient(x)
    row = (grad_c * a - c * grad_a) / (x[i] * a * a)
    # A_i and C_i do not depend on x_i
    row[i] = -c / (x[i] * x[i] * a)
    jacobian = np.eye(model.d)
    jacobian[i] = row
    return jacobian


def word_map(model: WalkModel, word: Word, point: Sequence[float]) -> np.ndarray:
    """g(point) for g = phi_{w[0]} o ... o phi_{w[-1]}."""
    x = np.asarray(point, dtype=float)
    for i in reversed(word):
        x = phi(model, i, x)
    return x


def word_jacobian(model: WalkModel, word: Word, point: Sequence[float]) -> np.ndarray:
    """Jacobian of the word by the chain rule along the intermediate points."""
    x = np.asarray(point, dtype=float)
    jacobian = np.eye(model.d)
    for i in reversed(word):
        jacobian = jacobian_generator(model, i, x) @ jacobian
        x = phi(model, i, x)
    return jacobian


def word_matrix(matrices: Sequence[np.ndarray], word: Word) -> np.ndarray:
    result = np.eye(matrices[0].shape[0])
    for i in word:
        result = result @ matrices[i]
    return result


def random_points(x0: Sequence[float], count: int, rng: np.random.Generator, spread: float = 0.5) -> np.ndarray:
    x0 = np.asarray(x0, dtype=float)
    return x0 * np.exp(rng.uniform(-spread, spread, size=(count, len(x0))))


def maps_equal(model: WalkModel, first: Word, second: Word, points: np.ndarray,
               tolerance: float = config.word_equality_tolerance) -> bool:
    """Two words are equal in G when they agree at every sample point."""
    for point in points:
        left = word_map(model, first, point)
        right = word_map(model, second, point)
        if np.max(np.abs(left - right) / np.maximum(1.0, np.abs(right))) > tolerance:
            return False
    return True


@dataclass(frozen=True)
class GeneratorSet:
    x0: np.ndarray
    matrices: Tuple[np.ndarray, ...]

    @property
    def d(self) -> int:
        return len(self.matrices)

    def matrix(self, i: int) -> np.ndarray:
        return self.matrices[i]


def build_generators(model: WalkModel, critical: CriticalData) -> GeneratorSet:
    matrices = tuple(jacobian_generator(model, i, critical.x0) for i in range(model.d))
    return GeneratorSet(x0=critical.x0, matrices=matrices)


@dataclass(frozen=True)
class ReflectionResiduals:
    involution: float
    diagonal: float
    spectrum: float


def reflection_residuals(matrix: np.ndarray, i: int) -> ReflectionResiduals:
    """How far S_i is from a reflection sending e_i to -e_i and fixing a hyperplane."""
    d = matrix.shape[0]
    involution = float(np.max(np.abs(matrix @ matrix - np.eye(d))))
    diagonal = abs(float(matrix[i, i]) + 1.0)
    eigenvalues = np.sort(np.real(np.linalg.eigvals(matrix)))
    expected = np.array([-1.0] + [1.0] * (d - 1))
    spectrum = float(np.max(np.abs(eigenvalues - expected)))
    return ReflectionResiduals(involution=involution, diagonal=diagonal, spectrum=spectrum)


def isometry_matrix(critical: CriticalData, delta_sqrt: np.ndarray) -> np.ndarray:
    """Phi sending f_i = e_i / sqrt(H_ii) to u_i = delta^(1/2) e_i."""
    return delta_sqrt @ np.diag(np.sqrt(np.diag(critical.hessian)))


def conjugation_residual(generators: GeneratorSet, critical: CriticalData, u: np.ndarray,
                         delta_sqrt: np.ndarray) -> float:
    """max_i |Phi S_i Phi^-1 - r_i|, with r_i the reflection through u_i^perp."""
    transport = isometry_matrix(critical, delta_sqrt)
    inverse = np.linalg.inv(transport)
    worst = 0.0
    for i, matrix in enumerate(generators.matrices):
        reflection = np.eye(len(u[i])) - 2.0 * np.outer(u[i], u[i])
        worst = max(worst, float(np.max(np.abs(transport @ matrix @ inverse - reflection))))
    return worst


def invariance_residual(jacobian: np.ndarray, hessian: np.ndarray, h: np.ndarray, k: np.ndarray) -> float:
    return abs(float((jacobian @ h) @ hessian @ (jacobian @ k) - h @ hessian @ k))


def random_word(rng: np.random.Generator, d: int, max_length: int) -> Word:
    length = int(rng.integers(1, max_length + 1))
    return tuple(int(i) for i in rng.integers(0, d, size=length))


def morphism_residual(model: WalkModel, generators: GeneratorSet, word: Word,
                      point: Optional[np.ndarray] = None) -> float:
    point = generators.x0 if point is None else point
    chained = word_jacobian(model, word, point)
    product = word_matrix(list(generators.matrices), word)
    return float(np.max(np.abs(chained - product)))