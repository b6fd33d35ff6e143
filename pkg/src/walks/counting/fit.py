#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import linregress

from src.logger import logger
from src.utils import config
from .counting import CountTable

MIN_NONZERO_TERMS = 20


@dataclass(frozen=True)
class AsymptoticFit:
    rho_hat: float
    alpha_hat: float
    alpha_regression: float
    regression_r: float
    window: Tuple[int, int]
    terms: int
    period: int
    richardson_depth: int
    alpha_tail: Tuple[float, ...]
    rho_tail: Tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "rho_hat": self.rho_hat,
            "alpha_hat": self.alpha_hat,
            "alpha_regression": self.alpha_regression,
            "regression_r": self.regression_r,
            "window": list(self.window),
            "terms": self.terms,
            "period": self.period,
            "richardson_depth": self.richardson_depth,
            "alpha_tail": list(self.alpha_tail),
            "rho_tail": list(self.rho_tail),
        }


def richardson(ns: Sequence[int], values: Sequence[float], depth: int) -> List[float]:
    """
    Repeated Richardson extrapolation of a sequence a(n) = a + c1/n + c2/n^2 + ...
    sampled at equally spaced n; each pass removes one power of 1/n.
    """
    ns = [float(n) for n in ns]
    current = list(values)
    for k in range(1, depth + 1):
        if len(current) <= 1:
            break
        step = (ns[k] - ns[0]) if len(ns) > k else 1.0
        current = [(ns[i + k] * current[i + 1] - ns[i] * current[i]) / step
                   for i in range(len(current) - 1)]
    return current


def estimate_asymptotics(table: CountTable, rho: Optional[float] = None,
                         window: float = config.fit_window,
                         depth: int = config.richardson_depth) -> AsymptoticFit:
    """
    Fit e(n) ~ c rho^n / n^alpha on the period subsequence. alpha comes from the local
    exponents -(log r(n+p) - log r(n)) / (log(n+p) - log n), r(n) = e(n) rho^-n, after
    Richardson extrapolation; rho_hat independently from (e(n+p)/e(n))^(1/p), extrapolated
    the same way. Without a predicted rho, rho_hat is used for r(n).
    """
    nonzero = [n for n in table.nonzero if n > 0]
    if len(nonzero) < MIN_NONZERO_TERMS:
        raise ValueError(f"{len(nonzero)} nonzero terms, at least {MIN_NONZERO_TERMS} are needed for a fit")
    # the nonzero terms form one residue class modulo the spacing, which can exceed the gcd
    # of the lengths when the endpoints differ
    period = table.spacing
    ns = nonzero
    logs = np.array([table.log_values[n] for n in ns])

    rho_local = [math.exp((logs[i + 1] - logs[i]) / (ns[i + 1] - ns[i])) for i in range(len(ns) - 1)]
    rho_extrapolated = richardson(ns[:-1], rho_local, depth)
    rho_hat = rho_extrapolated[-1]
    rho_used = rho_hat if rho is None else rho

    log_r = logs - np.array(ns, dtype=float) * math.log(rho_used)
    start = max(0, int(len(ns) * (1.0 - window)))
    if len(ns) - start < config.min_fit_terms:
        start = max(0, len(ns) - config.min_fit_terms)
    fit_ns = ns[start:]
    regression = linregress(np.log(fit_ns), log_r[start:])

    alpha_local = [-(log_r[i + 1] - log_r[i]) / (math.log(ns[i + 1]) - math.log(ns[i]))
                   for i in range(start, len(ns) - 1)]
    alpha_extrapolated = richardson(ns[start:-1], alpha_local, depth)
    alpha_hat = alpha_extrapolated[-1]

    logger.debug(f"fit on n in [{fit_ns[0]}, {fit_ns[-1]}] step {period}: alpha_hat={alpha_hat:.6g} "
                 f"(regression {-regression.slope:.6g}), rho_hat={rho_hat:.9g}")
    return AsymptoticFit(
        rho_hat=float(rho_hat),
        alpha_hat=float(alpha_hat),
        alpha_regression=float(-regression.slope),
        regression_r=float(regression.rvalue),
        window=(fit_ns[0], fit_ns[-1]),
        terms=len(fit_ns),
        period=period,
        richardson_depth=depth,
        alpha_tail=tuple(float(a) for a in alpha_extrapolated[-5:]),
        rho_tail=tuple(float(r) for r in rho_extrapolated[-5:]),
    )
