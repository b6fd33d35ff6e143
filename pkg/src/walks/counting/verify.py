#!/usr/bin/env python
# -*- encoding=utf8 -*-
from dataclasses import dataclass
from typing import Optional, Sequence

from src.logger import logger
from src.utils import config
from src.walks.critical import CriticalData, critical_point
from src.walks.model import WalkModel
from src.walks.nodal import NodalResult, classify_nodal
from src.walks.spectral import AngleGeometry, angle_geometry
from .counting import CountTable, count_excursions
from .fit import AsymptoticFit, estimate_asymptotics


@dataclass(frozen=True)
class VerificationReport:
    status: str
    passed: Optional[bool]
    nodal: NodalResult
    predicted_rho: float
    predicted_alpha: Optional[float]
    fit: AsymptoticFit
    alpha_error: Optional[float]
    rho_error: float
    alpha_tolerance: float
    rho_tolerance: float
    table: CountTable

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "passed": self.passed,
            "predicted_rho": self.predicted_rho,
            "predicted_alpha": self.predicted_alpha,
            "fit": self.fit.to_dict(),
            "alpha_error": self.alpha_error,
            "rho_error": self.rho_error,
            "alpha_tolerance": self.alpha_tolerance,
            "rho_tolerance": self.rho_tolerance,
            "tolerances_note": "empirical finite-n tolerances",
            "start": list(self.table.start),
            "end": list(self.table.end),
            "n_max": self.table.n_max,
            "period": self.table.period,
            "exact_counts": self.table.exact,
        }


def verify_prediction(model: WalkModel, start: Optional[Sequence[int]] = None, end: Optional[Sequence[int]] = None,
                      n_max: int = config.default_n_max, exact: bool = False,
                      critical: Optional[CriticalData] = None, geometry: Optional[AngleGeometry] = None,
                      alpha_tolerance: float = config.alpha_relative_tolerance,
                      rho_tolerance: float = config.rho_relative_tolerance) -> VerificationReport:
    """
    Predict rho = chi(x0) and alpha from the nodal data, count excursions and compare
    with the empirical fit. Non-nodal models only get the empirical exponent.
    """
    critical = critical_point(model) if critical is None else critical
    geometry = angle_geometry(critical.delta) if geometry is None else geometry
    nodal = classify_nodal(geometry)

    start = tuple(start) if start is not None else (0,) * model.d
    end = tuple(end) if end is not None else start
    table = count_excursions(model, start, end, n_max, weighted=True, exact=exact)
    fit = estimate_asymptotics(table, rho=critical.rho)

    rho_error = abs(fit.rho_hat - critical.rho) / critical.rho
    if not nodal.is_nodal:
        logger.info(f"non-nodal model, empirical alpha {fit.alpha_hat:.4g}")
        return VerificationReport(status="non-nodal: empirical alpha only", passed=None, nodal=nodal,
                                  predicted_rho=critical.rho, predicted_alpha=None, fit=fit, alpha_error=None,
                                  rho_error=rho_error, alpha_tolerance=alpha_tolerance,
                                  rho_tolerance=rho_tolerance, table=table)

    alpha_error = abs(fit.alpha_hat - nodal.alpha) / nodal.alpha
    passed = alpha_error <= alpha_tolerance and rho_error <= rho_tolerance
    status = "pass" if passed else "fail"
    logger.info(f"prediction alpha={nodal.alpha:.6g} rho={critical.rho:.9g}, fit alpha={fit.alpha_hat:.6g} "
                f"rho={fit.rho_hat:.9g}: {status}")
    return VerificationReport(status=status, passed=passed, nodal=nodal, predicted_rho=critical.rho,
                              predicted_alpha=nodal.alpha, fit=fit, alpha_error=alpha_error, rho_error=rho_error,
                              alpha_tolerance=alpha_tolerance, rho_tolerance=rho_tolerance, table=table)
