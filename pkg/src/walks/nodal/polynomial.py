#!/usr/bin/env python
# -*- encoding=utf8 -*-
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple, Union

import numpy as np

from src.logger import logger
from src.utils import config
from src.walks.errors import ExpansionCapError

Exponent = Tuple[int, ...]
Coefficient = Union[Fraction, float]


@dataclass(frozen=True)
class PolyP0:
    """Sparse polynomial in `dim` variables, exponent vector -> coefficient."""
    dim: int
    terms: Dict[Exponent, Coefficient]
    exact: bool

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def norm(self) -> float:
        return max((abs(float(c)) for c in self.terms.values()), default=0.0)

    def evaluate(self, x: Sequence[float]) -> float:
        x = np.asarray(x, dtype=float)
        return float(sum(float(c) * np.prod(x ** np.array(e)) for e, c in self.terms.items()))

    def items(self):
        return sorted(self.terms.items())


def _multiply_linear(terms: Dict[Exponent, Coefficient], form: Sequence[Coefficient],
                     zero: Coefficient) -> Dict[Exponent, Coefficient]:
    product: Dict[Exponent, Coefficient] = {}
    for exponent, coefficient in terms.items():
        for i, c in enumerate(form):
            if c == 0:
                continue
            shifted = exponent[:i] + (exponent[i] + 1,) + exponent[i + 1:]
            product[shifted] = product.get(shifted, zero) + coefficient * c
    return {e: c for e, c in product.items() if c != 0}


def build_P0(roots: Sequence[Sequence[Coefficient]], cap: int = config.expansion_cap) -> PolyP0:
    """Expanded product of the linear forms <e_H, x>, one root per reflecting hyperplane."""
    if len(roots) == 0:
        raise ValueError("at least one root is needed")
    if len(roots) > cap:
        raise ExpansionCapError(f"{len(roots)} linear factors exceed the expansion cap {cap}")
    exact = all(isinstance(c, (Fraction, int)) and not isinstance(c, bool) for r in roots for c in r)
    zero: Coefficient = Fraction(0) if exact else 0.0
    forms = [[Fraction(c) for c in r] if exact else [float(c) for c in r] for r in roots]
    dim = len(forms[0])
    terms: Dict[Exponent, Coefficient] = {(0,) * dim: Fraction(1) if exact else 1.0}
    for form in forms:
        terms = _multiply_linear(terms, form, zero)
    logger.debug(f"P0 expanded: degree {len(roots)}, {len(terms)} monomials, exact={exact}")
    return PolyP0(dim=dim, terms=terms, exact=exact)


def laplacian(p: PolyP0) -> PolyP0:
    zero: Coefficient = Fraction(0) if p.exact else 0.0
    result: Dict[Exponent, Coefficient] = {}
    for exponent, coefficient in p.terms.items():
        for i, power in enumerate(exponent):
            if power < 2:
                continue
            lowered = exponent[:i] + (power - 2,) + exponent[i + 1:]
            result[lowered] = result.get(lowered, zero) + coefficient * power * (power - 1)
    return PolyP0(dim=p.dim, terms=result, exact=p.exact)


def check_harmonic(p: PolyP0) -> float:
    """Largest coefficient of the Laplacian of p; 0 exactly for a rational harmonic polynomial."""
    return laplacian(p).norm()


def euler_check(p: PolyP0) -> float:
    """Largest coefficient of x . grad p - k p, which vanishes iff p is homogeneous of degree k."""
    k = p.degree
    return max((abs(float((sum(e) - k) * c)) for e, c in p.terms.items()), default=0.0)


def hyperplane_residual(p: PolyP0, roots: Sequence[Sequence[Coefficient]], rng: np.random.Generator,
                        samples: int = 5) -> float:
    """Largest |p| at random points of the hyperplanes e_H^perp, relative to |p| off them."""
    worst = 0.0
    scale = 0.0
    for root in roots:
        e = np.asarray([float(c) for c in root])
        for _ in range(samples):
            x = rng.normal(size=p.dim)
            scale = max(scale, abs(p.evaluate(x)))
            on_wall = x - (x @ e) / (e @ e) * e
            worst = max(worst, abs(p.evaluate(on_wall)))
    return worst / scale if scale > 0 else worst
