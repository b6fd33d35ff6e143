#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
from decimal import Decimal
from fractions import Fraction
from typing import Any, Optional

import numpy as np
import simplejson


def _float(value: float) -> Optional[Decimal]:
    if math.isnan(value) or math.isinf(value):
        return None
    # 17 significant digits round-trip every double
    return Decimal(format(value, ".17g"))


def to_serializable(value: Any) -> Any:
    """Plain JSON data with every float as a 17-digit Decimal; Fractions become strings."""
    if isinstance(value, dict):
        return {str(k): to_serializable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_serializable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_serializable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return _float(float(value))
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return {"re": _float(value.real), "im": _float(value.imag)}
    return value


class ReportWriter(object):
    """Serializes report documents to JSON text, compact or indented."""

    def __init__(self, pretty: bool = False):
        self.pretty = pretty

    def dumps(self, document: dict) -> str:
        data = to_serializable(document)
        if self.pretty:
            return simplejson.dumps(data, use_decimal=True, indent=2)
        return simplejson.dumps(data, use_decimal=True, separators=(",", ":"))

    def write(self, document: dict, path: Optional[str] = None):
        text = self.dumps(document)
        if path is None:
            print(text, flush=True)
            return
        with open(path, "w") as f:
            f.write(text + "\n")


def read_report(text: str) -> dict:
    return simplejson.loads(text, use_decimal=True)
