#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from src.logger import logger
from src.utils import config
from src.utils.config import cfg
from src.utils.helper import make_rng
from src.walks.coxeter import ExceededCap, classify, diagram_from_angles, generate_roots
from src.walks.spectral import AngleGeometry
from .polynomial import PolyP0, build_P0, check_harmonic, euler_check, hyperplane_residual

Number = Union[int, Fraction]


@dataclass(frozen=True)
class NodalResult:
    is_nodal: bool
    d: int
    coxeter_type: Tuple[str, ...] = ()
    k: Optional[int] = None
    lambda1: Optional[int] = None
    alpha: Optional[float] = None
    alpha_exact: Optional[Fraction] = None
    failure_reason: Optional[str] = None
    normals: Optional[Tuple[Tuple[Number, ...], ...]] = None
    p0: Optional[PolyP0] = None
    harmonic_residual: Optional[float] = None
    euler_residual: Optional[float] = None
    wall_residual: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "is_nodal": self.is_nodal,
            "d": self.d,
            "coxeter_type": list(self.coxeter_type),
            "k": self.k,
            "lambda1": self.lambda1,
            "alpha": self.alpha,
            "alpha_exact": str(self.alpha_exact) if self.alpha_exact is not None else None,
            "failure_reason": self.failure_reason,
            "p0": None if self.p0 is None else {
                "degree": self.p0.degree,
                "monomials": len(self.p0.terms),
                "exact": self.p0.exact,
                "harmonic_residual": self.harmonic_residual,
                "euler_residual": self.euler_residual,
                "wall_residual": self.wall_residual,
            },
        }


def exponent(lambda1: float, d: int) -> float:
    """alpha = 1 + sqrt(lambda1 + (d/2 - 1)^2)."""
    return 1.0 + math.sqrt(lambda1 + (d / 2.0 - 1.0) ** 2)


def exact_alpha(lambda1: Number, d: int) -> Optional[Fraction]:
    value = Fraction(lambda1) + Fraction(d - 2, 2) ** 2
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return 1 + Fraction(num, den)


def lambda1_from_k(k: int, d: int) -> int:
    return k * (d - 2 + k)


def wedge_lambda1(a: float) -> float:
    """First eigenvalue (pi / theta)^2 of a planar wedge of opening theta = arccos(-a)."""
    return (math.pi / math.acos(-a)) ** 2


def lambda1_tandem(d: int) -> int:
    return d * (d + 1) * (d + 4) * (d - 1) // 4


def classify_nodal(geometry: AngleGeometry, normals: Optional[Sequence[Sequence[Number]]] = None,
                   denom_cap: Optional[int] = None, with_polynomial: bool = False,
                   seed: Optional[int] = None) -> NodalResult:
    """
    Decide whether the spherical polytope cut out by the walls is a nodal domain, which
    happens exactly when the walls bound a chamber of a finite reflection group. Exact
    `normals` make the root closure and P0 rational.
    """
    d = geometry.ambient_dim
    diagram = diagram_from_angles(geometry, denom_cap)
    verdict = classify(diagram)
    if not verdict.is_finite:
        reason = verdict.witness or verdict.reason or verdict.status
        logger.info(f"not a nodal domain: {reason}")
        return NodalResult(is_nodal=False, d=d, failure_reason=reason)

    system = generate_roots(normals if normals is not None else geometry.u)
    if isinstance(system, ExceededCap):
        k = verdict.reflection_count
        roots = None
        logger.warning(f"root closure {system.describe()}, k taken from the catalog")
    else:
        k = system.reflection_count
        roots = system.positive_roots()
        if verdict.reflection_count is not None and verdict.reflection_count != k:
            logger.warning(f"root closure gives k={k}, catalog gives {verdict.reflection_count}")

    lambda1 = lambda1_from_k(k, d)
    result = dict(is_nodal=True, d=d, coxeter_type=verdict.types, k=k, lambda1=lambda1,
                  alpha=exponent(lambda1, d), alpha_exact=exact_alpha(lambda1, d))
    if normals is not None:
        result["normals"] = tuple(tuple(v) for v in normals)
    if with_polynomial and roots is not None and k <= config.expansion_cap:
        p0 = build_P0(roots)
        norm = p0.norm()
        rng = make_rng(cfg.seed if seed is None else seed)
        result.update(p0=p0, harmonic_residual=check_harmonic(p0) / norm, euler_residual=euler_check(p0) / norm,
                      wall_residual=hyperplane_residual(p0, roots, rng))
    logger.info(f"nodal domain of type {'+'.join(verdict.types)}: k={k}, lambda1={lambda1}")
    return NodalResult(**result)


def chamber_normals(family: str, d: int) -> Tuple[Tuple[int, ...], ...]:
    """Inward normals of x_1 > ... > x_d (family A) or 0 < x_1 < ... < x_d (family B)."""
    def unit(i: int) -> np.ndarray:
        vector = np.zeros(d, dtype=np.int64)
        vector[i] = 1
        return vector

    if family == "A":
        rows = [unit(i) - unit(i + 1) for i in range(d - 1)]
    elif family == "B":
        rows = [unit(0)] + [unit(i + 1) - unit(i) for i in range(d - 1)]
    else:
        raise ValueError(f"unsupported Weyl chamber family {family!r}, expected A or B")
    return tuple(tuple(int(c) for c in row) for row in rows)


def weyl_chamber(family: str, d: int, with_polynomial: bool = False) -> NodalResult:
    if d < 2:
        raise ValueError(f"Weyl chambers need d >= 2, got {d}")
    normals = chamber_normals(family, d)
    geometry = AngleGeometry.from_normals(normals)
    return classify_nodal(geometry, normals=[[Fraction(c) for c in v] for v in normals],
                          with_polynomial=with_polynomial)
