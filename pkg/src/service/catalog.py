#!/usr/bin/env python
# -*- encoding=utf8 -*-
from dataclasses import dataclass
from typing import Optional

from src.logger import logger
from src.utils.response import ResponseStatus, WalkResponse
from src.walks.errors import CatalogError
from src.walks.nodal import catalog_tuples, expand_catalog, export_catalog


@dataclass
class CatalogParams:
    dim: int
    delimiter: str = ","
    # instantiate the families up to this order instead of printing them symbolically
    max_order: Optional[int] = None


class CatalogService(object):
    def table(self, params: CatalogParams) -> WalkResponse:
        try:
            if params.max_order is None:
                rows = catalog_tuples(params.dim)
            else:
                rows = expand_catalog(params.dim, params.max_order)
        except CatalogError as e:
            logger.error(f"{e}")
            return WalkResponse(ResponseStatus.FAILED,
                                f"catalog limited to d <= 4; use analyze for general d ({e})")
        return WalkResponse(ResponseStatus.SUCCESS, "Catalog generated", {
            "rows": [row.to_dict() for row in rows],
            "text": export_catalog(rows, params.delimiter),
        })
