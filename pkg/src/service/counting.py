#!/usr/bin/env python
# -*- encoding=utf8 -*-
import traceback
from dataclasses import dataclass, field
from typing import Sequence

from src.logger import logger
from src.utils import config
from src.utils.config import cfg
from src.utils.response import ResponseStatus, WalkResponse
from src.walks.counting import count_excursions, estimate_asymptotics, export_table
from src.walks.critical import critical_point
from src.walks.model import WalkModel, load_model


@dataclass
class CountParams:
    model_path: str
    start: Sequence[int]
    end: Sequence[int]
    n_max: int = config.default_n_max
    weighted: bool = True
    exact: bool = True
    fit: bool = False
    delimiter: str = ","
    threads: int = field(default_factory=lambda: cfg.threads)


class CountingService(object):
    def __init__(self, model: WalkModel):
        self.model = model

    @classmethod
    def from_file(cls, model_path: str) -> "CountingService":
        return cls(load_model(model_path))

    def count(self, params: CountParams) -> WalkResponse:
        try:
            table = count_excursions(self.model, params.start, params.end, params.n_max, weighted=params.weighted,
                                     exact=params.exact, threads=params.threads)
            data = {
                "schema_version": config.report_schema_version,
                "tool_version": config.tool_version,
                "table": table.to_dict(),
                "text": export_table(table, params.delimiter),
            }
            if params.fit:
                rho = None
                if params.weighted:
                    rho = critical_point(self.model).rho
                data["fit"] = estimate_asymptotics(table, rho=rho).to_dict()
            return WalkResponse(ResponseStatus.SUCCESS, "Counting completed successfully", data)
        except Exception as e:
            logger.error(f"counting failed: {e}")
            logger.debug(traceback.format_exc())
            return WalkResponse(ResponseStatus.FAILED, f"{type(e).__name__}: {e}")
