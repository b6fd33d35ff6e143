#!/usr/bin/env python
# -*- encoding=utf8 -*-
import traceback
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from src.logger import logger
from src.utils import config
from src.utils.config import cfg
from src.utils.helper import set_seed
from src.utils.response import ResponseStatus, WalkResponse
from src.walks.counting import verify_prediction
from src.walks.critical import critical_point, random_walks
from src.walks.model import WalkModel, drift, is_zero_drift, load_model
from src.walks.nodal import classify_nodal
from src.walks.spectral import angle_geometry, isometry_check, polytope_generators
from src.walks.walkgroup import g_vs_h_report


@dataclass
class AnalysisParams:
    model_path: str
    seed: int = field(default_factory=lambda: cfg.seed)
    threads: int = field(default_factory=lambda: cfg.threads)
    group_order: Optional[int] = None
    normal_order: int = 2
    word_bfs: bool = False
    fixed_point_scan: bool = True
    with_polynomial: bool = True
    verify: bool = False
    n_max: int = config.default_n_max


def model_section(model: WalkModel) -> dict:
    return {
        "dim": model.d,
        "steps": [list(s) for s in model.vectors],
        "weights": [str(w) for w in model.weights],
        "small_step": model.small_step,
        "drift": [str(c) for c in drift(model)],
        "zero_drift": is_zero_drift(model),
    }


class AnalysisService(object):
    """Runs the analysis pipeline section by section; a failing section is reported, the others still run."""

    def __init__(self, model: WalkModel):
        self.model = model

    @classmethod
    def from_file(cls, model_path: str) -> "AnalysisService":
        return cls(load_model(model_path))

    def analyze(self, params: AnalysisParams) -> WalkResponse:
        set_seed(params.seed)
        cfg.threads = max(1, int(params.threads))
        report = {
            "schema_version": config.report_schema_version,
            "tool_version": config.tool_version,
            "seed": params.seed,
            "model": model_section(self.model),
        }
        errors = {}

        critical = None
        geometry = None
        try:
            critical = critical_point(self.model)
            report["critical"] = {
                "x0": critical.x0,
                "rho": critical.rho,
                "hessian": critical.hessian,
                "gradient_residual": critical.gradient_residual,
                "iterations": critical.iterations,
                "exact_hessian": critical.exact_hessian is not None,
            }
            walks = random_walks(self.model, critical)
            report["walks"] = {
                "w_drift": walks.w_drift,
                "w_covariance": walks.w_covariance,
                "x_weights": [str(w) for w in walks.x_model.weights],
                "x_drift": walks.x_drift,
                "y_covariance": walks.y_covariance,
                "z_map": walks.z_map,
            }
        except Exception as e:
            logger.error(f"critical point section failed: {e}")
            errors["critical"] = f"{type(e).__name__}: {e}"

        if critical is not None:
            try:
                geometry = angle_geometry(critical.delta)
                isometry = isometry_check(self.model, critical, geometry)
                report["spectral"] = {
                    "delta": critical.delta,
                    "wall_normals": geometry.u,
                    "angles_over_pi": geometry.hyperplane_angles / np.pi,
                    "polytope_generators": polytope_generators(geometry),
                    "isometry_residual": isometry.max_residual,
                    "isometry_passed": isometry.passed,
                }
            except Exception as e:
                logger.error(f"spectral section failed: {e}")
                errors["spectral"] = f"{type(e).__name__}: {e}"

        if geometry is not None:
            try:
                comparison = g_vs_h_report(self.model, critical, geometry, group_order=params.group_order,
                                           normal_order=params.normal_order, word_bfs=params.word_bfs,
                                           scan=params.fixed_point_scan, seed=params.seed)
                report["groups"] = comparison.to_dict()
            except Exception as e:
                logger.error(f"group section failed: {e}")
                logger.debug(traceback.format_exc())
                errors["groups"] = f"{type(e).__name__}: {e}"

            try:
                nodal = classify_nodal(geometry, with_polynomial=params.with_polynomial, seed=params.seed)
                report["nodal"] = nodal.to_dict()
            except Exception as e:
                logger.error(f"nodal section failed: {e}")
                errors["nodal"] = f"{type(e).__name__}: {e}"

            if params.verify:
                try:
                    verification = verify_prediction(self.model, n_max=params.n_max, critical=critical,
                                                     geometry=geometry)
                    report["verification"] = verification.to_dict()
                except Exception as e:
                    logger.error(f"verification section failed: {e}")
                    errors["verification"] = f"{type(e).__name__}: {e}"

        report["errors"] = errors
        if errors:
            return WalkResponse(ResponseStatus.FAILED, f"failed sections: {', '.join(sorted(errors))}", report)
        return WalkResponse(ResponseStatus.SUCCESS, "Analysis completed successfully", report)
