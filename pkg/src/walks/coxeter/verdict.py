#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.logger import logger
from src.utils.config import cfg
from src.walks.spectral import AngleGeometry
from .catalog import CatalogEntry, match_component
from .diagram import (CoxeterDiagram, FiniteLabel, InfiniteLabel, NonCrystallographic, VerdictStatus,
                      diagram_from_angles, prop_app_test, rotation_order)
from .roots import GroupClosure, matrix_group_closure, reflection_matrix


@dataclass(frozen=True)
class Evidence:
    test: str
    outcome: str

    def to_dict(self) -> dict:
        return {"test": self.test, "outcome": self.outcome}


@dataclass
class GroupVerdict:
    status: str
    order: Optional[int] = None
    witness: Optional[str] = None
    reason: Optional[str] = None
    types: Tuple[str, ...] = ()
    reflection_count: Optional[int] = None
    evidence: List[Evidence] = field(default_factory=list)

    @property
    def is_finite(self) -> bool:
        return self.status == VerdictStatus.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.status == VerdictStatus.INFINITE

    def add(self, test: str, outcome: str):
        self.evidence.append(Evidence(test, outcome))

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "order": self.order,
            "witness": self.witness,
            "reason": self.reason,
            "types": list(self.types),
            "reflection_count": self.reflection_count,
            "evidence": [e.to_dict() for e in self.evidence],
        }


def finite_verdict(order: int, evidence: List[Evidence], types: Sequence[str] = (),
                   reflection_count: Optional[int] = None) -> GroupVerdict:
    return GroupVerdict(VerdictStatus.FINITE, order=order, types=tuple(types),
                        reflection_count=reflection_count, evidence=evidence)


def order_floor_holds(order: int, rank: int) -> bool:
    """A finite reflection group generated by `rank` independent reflections has order >= 2^rank."""
    return order >= 2 ** rank


def classify(diagram: CoxeterDiagram) -> GroupVerdict:
    evidence: List[Evidence] = []

    for (i, j), label in sorted(diagram.labels.items()):
        if isinstance(label, InfiniteLabel):
            evidence.append(Evidence("diagram", f"m_{i + 1},{j + 1} = infinity"))
            witness = f"m_{i + 1},{j + 1} = infinity"
            if label.reason:
                witness += f" ({label.reason})"
            return GroupVerdict(VerdictStatus.INFINITE, witness=witness, evidence=evidence)

    irrational = [(i, j) for (i, j), label in sorted(diagram.labels.items()) if isinstance(label, NonCrystallographic)]
    if irrational:
        witness = prop_app_test(diagram.covariance())
        if witness is not None:
            evidence.append(Evidence("admissible cosines", witness.description))
            return GroupVerdict(VerdictStatus.INFINITE, witness=witness.description, evidence=evidence)
        i, j = irrational[0]
        evidence.append(Evidence("admissible cosines", "criterion does not apply"))
        return GroupVerdict(VerdictStatus.INCONCLUSIVE,
                            reason=f"walls {i + 1},{j + 1}: no rational angle found (cap {diagram.denom_cap}); "
                                   f"heuristic",
                            evidence=evidence)

    for (i, j), label in sorted(diagram.labels.items()):
        if isinstance(label, FiniteLabel) and not label.chamber:
            evidence.append(Evidence("diagram", f"walls {i + 1},{j + 1} meet at {label.numerator}pi/{label.m}"))
            return GroupVerdict(VerdictStatus.INCONCLUSIVE,
                                reason=f"walls {i + 1},{j + 1} meet at {label.numerator}pi/{label.m}, "
                                       f"not a Coxeter chamber angle",
                                evidence=evidence)

    matrix = diagram.coxeter_matrix()
    entries: List[CatalogEntry] = []
    for component in diagram.components:
        entry = match_component(component, matrix)
        if entry is None:
            vertices = ",".join(str(v + 1) for v in component)
            witness = f"component {{{vertices}}} matches no finite Coxeter type"
            evidence.append(Evidence("catalog", witness))
            return GroupVerdict(VerdictStatus.INFINITE, witness=witness, evidence=evidence)
        entries.append(entry)
        evidence.append(Evidence("catalog", f"component {[v + 1 for v in component]} is {entry.name}"))

    order = math.prod(entry.order for entry in entries)
    k = sum(entry.reflection_count for entry in entries)
    floor = order_floor_holds(order, diagram.rank)
    evidence.append(Evidence("order floor", f"{order} >= 2^{diagram.rank}: {floor}"))
    types = tuple(entry.name for entry in entries)
    return finite_verdict(order, evidence, types, k)


def reflection_group_verdict(geometry: AngleGeometry, denom_cap: Optional[int] = None,
                             closure_cap: Optional[int] = None,
                             exact_squares: Optional[Sequence[Sequence[Fraction]]] = None):
    """
    Verdict on the group generated by the wall reflections: diagram and catalog first,
    then pairwise rotation orders, then a bounded matrix closure. Returns (diagram, verdict).
    """
    denom_cap = cfg.denom_cap if denom_cap is None else denom_cap
    closure_cap = cfg.closure_cap if closure_cap is None else closure_cap
    diagram = diagram_from_angles(geometry, denom_cap)
    verdict = classify(diagram)
    if verdict.status != VerdictStatus.INCONCLUSIVE:
        return diagram, verdict

    for i in range(geometry.rank):
        for j in range(i + 1, geometry.rank):
            square = exact_squares[i][j] if exact_squares is not None else None
            pair = rotation_order(float(geometry.gram[i, j]), square, denom_cap)
            if pair.status == VerdictStatus.INFINITE:
                verdict.add("pair order", f"r_{i + 1} r_{j + 1}: {pair.reason}")
                verdict.status = VerdictStatus.INFINITE
                verdict.witness = f"r_{i + 1} r_{j + 1} has infinite order: {pair.reason}"
                verdict.reason = None
                return diagram, verdict

    closure = matrix_group_closure([reflection_matrix(u) for u in geometry.u], closure_cap)
    if isinstance(closure, GroupClosure):
        verdict.add("closure", f"stabilized at {closure.order} elements")
        verdict.status = VerdictStatus.FINITE
        verdict.order = closure.order
        verdict.reason = None
    else:
        logger.warning(f"reflection group undecided: closure {closure.describe()}")
        verdict.add("closure", closure.describe())
    return diagram, verdict
