#!/usr/bin/env python
# -*- encoding=utf8 -*-
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.walks.errors import CatalogError
from src.walks.spectral import AngleGeometry

Order = Union[int, str]


@dataclass(frozen=True)
class CatalogRow:
    """
    One admissible tuple: the wall angle pi/m for every pair (1,2), (1,3), ..., (d-1,d).
    Rows of an infinite family carry parameter names in place of some m.
    """
    d: int
    orders: Tuple[Order, ...]
    coxeter_type: str
    reflections: Callable[..., int] = field(compare=False, repr=False)
    k_text: str = ""
    parameters: Tuple[str, ...] = ()
    lambda1_formula: str = ""

    @property
    def symbolic(self) -> bool:
        return bool(self.parameters)

    @property
    def k(self) -> int:
        if self.symbolic:
            raise CatalogError(f"row {self.coxeter_type} depends on {', '.join(self.parameters)}")
        return self.reflections()

    @property
    def lambda1(self) -> int:
        k = self.k
        return k * (self.d - 2 + k)

    def lambda1_text(self) -> str:
        if not self.symbolic:
            return str(self.lambda1)
        return self.lambda1_formula

    def angles_text(self) -> List[str]:
        return [f"pi/{m}" for m in self.orders]

    def instantiate(self, **values: int) -> "CatalogRow":
        missing = [p for p in self.parameters if p not in values]
        if missing:
            raise CatalogError(f"missing values for {', '.join(missing)}")
        for name, value in values.items():
            if int(value) < 2:
                raise CatalogError(f"{name} must be at least 2, got {value}")
        orders = tuple(int(values[m]) if isinstance(m, str) else m for m in self.orders)
        coxeter_type = self.coxeter_type
        for name in self.parameters:
            coxeter_type = coxeter_type.replace(f"({name})", f"({values[name]})")
        k = self.reflections(**{name: int(values[name]) for name in self.parameters})
        return CatalogRow(d=self.d, orders=orders, coxeter_type=coxeter_type, reflections=lambda: k,
                          k_text=str(k))

    def angle_matrix(self) -> np.ndarray:
        """Symmetric matrix of interior wall angles, as AngleGeometry.from_angles expects."""
        if self.symbolic:
            raise CatalogError(f"row {self.coxeter_type} must be instantiated first")
        angles = np.zeros((self.d, self.d))
        for (i, j), m in zip(itertools.combinations(range(self.d), 2), self.orders):
            angles[i, j] = angles[j, i] = math.pi / m
        return angles

    def geometry(self) -> AngleGeometry:
        return AngleGeometry.from_angles(self.angle_matrix())

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "angles": self.angles_text(),
            "type": self.coxeter_type,
            "k": self.k_text if self.symbolic else self.k,
            "lambda1": self.lambda1_text(),
        }


def _row(d: int, orders: Sequence[Order], coxeter_type: str, k: int) -> CatalogRow:
    return CatalogRow(d=d, orders=tuple(orders), coxeter_type=coxeter_type, reflections=lambda: k, k_text=str(k))


def _tables() -> Dict[int, List[CatalogRow]]:
    return {
        2: [
            CatalogRow(d=2, orders=("k",), coxeter_type="I2(k)", reflections=lambda k: k, k_text="k",
                       parameters=("k",), lambda1_formula="k^2"),
        ],
        3: [
            _row(3, (2, 2, 2), "Z/2Z x Z/2Z x Z/2Z", 3),
            CatalogRow(d=3, orders=(2, 2, "k"), coxeter_type="Z/2Z x I2(k)", reflections=lambda k: k + 1,
                       k_text="k+1", parameters=("k",), lambda1_formula="(k+1)(k+2)"),
            _row(3, (3, 2, 3), "A3", 6),
            _row(3, (3, 2, 4), "B3", 9),
            _row(3, (5, 2, 3), "H3", 15),
        ],
        4: [
            _row(4, (2, 2, 2, 2, 2, 2), "(Z/2Z)^4", 4),
            CatalogRow(d=4, orders=(2, 2, 2, 2, 2, "k"), coxeter_type="(Z/2Z)^2 x I2(k)",
                       reflections=lambda k: k + 2, k_text="k+2", parameters=("k",),
                       lambda1_formula="(k+2)(k+4)"),
            CatalogRow(d=4, orders=("k", 2, 2, 2, 2, "k2"), coxeter_type="I2(k) x I2(k2)",
                       reflections=lambda k, k2: k + k2, k_text="k+k2", parameters=("k", "k2"),
                       lambda1_formula="(k+k2)(k+k2+2)"),
            _row(4, (2, 2, 2, 2, 3, 3), "A3 x Z/2Z", 7),
            _row(4, (2, 2, 2, 2, 3, 4), "B3 x Z/2Z", 10),
            _row(4, (2, 2, 2, 2, 3, 5), "H3 x Z/2Z", 16),
            _row(4, (3, 2, 2, 3, 2, 3), "A4", 10),
            # 16 reflections give lambda1 = 16 * 18 = 288; some printed tables list 272 for B4
            _row(4, (3, 2, 2, 3, 2, 4), "B4", 16),
            _row(4, (3, 3, 3, 2, 2, 2), "D4", 12),
            _row(4, (3, 2, 2, 4, 2, 3), "F4", 24),
            _row(4, (5, 2, 2, 3, 2, 3), "H4", 60),
        ],
    }


def catalog_tuples(d: int) -> List[CatalogRow]:
    """Admissible wall-angle tuples in dimension d, one per isometry class."""
    tables = _tables()
    if d not in tables:
        raise CatalogError(f"admissible tuples are tabulated for d in (2, 3, 4), got {d}")
    return tables[d]


def expand_catalog(d: int, max_order: int = 6) -> List[CatalogRow]:
    """The catalog with every family instantiated for parameters 2..max_order."""
    rows = []
    for row in catalog_tuples(d):
        if not row.symbolic:
            rows.append(row)
            continue
        for values in itertools.product(range(2, max_order + 1), repeat=len(row.parameters)):
            rows.append(row.instantiate(**dict(zip(row.parameters, values))))
    return rows


def export_catalog(rows: Sequence[CatalogRow], delimiter: str = ",") -> str:
    lines = [delimiter.join(["d", "angles", "type", "k", "lambda1"])]
    for row in rows:
        item = row.to_dict()
        lines.append(delimiter.join([str(item["d"]), " ".join(item["angles"]), item["type"], str(item["k"]),
                                     item["lambda1"]]))
    return "\n".join(lines) + "\n"


def find_row(d: int, coxeter_type: str) -> Optional[CatalogRow]:
    for row in catalog_tuples(d):
        if row.coxeter_type == coxeter_type:
            return row
    return None
