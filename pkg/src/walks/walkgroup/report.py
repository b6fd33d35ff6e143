#!/usr/bin/env python
# -*- encoding=utf8 -*-
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src.logger import logger
from src.utils import config
from src.utils.config import cfg
from src.utils.helper import make_rng
from src.walks.coxeter import (CoxeterDiagram, ExceededCap, GroupVerdict, VerdictStatus, classify,
                               matrix_group_closure, reflection_group_verdict)
from src.walks.critical import CriticalData, critical_point, exact_covariance_squares
from src.walks.model import WalkModel
from src.walks.spectral import AngleGeometry, angle_geometry
from .fixed_points import InfiniteOrderWitness, fixed_point_scan
from .generators import (GeneratorSet, build_generators, conjugation_residual, invariance_residual,
                         morphism_residual, random_points, random_word, reflection_residuals, word_jacobian)
from .orders import (GroupOrderEstimate, PairRelation, coxeter_matrix_from_relations, estimate_group_order,
                     pair_relations)


@dataclass(frozen=True)
class IdentityChecks:
    reflection: float
    conjugation: float
    morphism: float
    invariance: float

    def to_dict(self) -> dict:
        return {"reflection": self.reflection, "conjugation": self.conjugation,
                "morphism": self.morphism, "invariance": self.invariance}


def identity_checks(model: WalkModel, critical: CriticalData, geometry: AngleGeometry, generators: GeneratorSet,
                    rng: np.random.Generator, words: int = 50, max_length: int = 6, pairs: int = 20) -> IdentityChecks:
    """Worst residuals of the reflection, transport, morphism and invariance identities of J."""
    reflection = 0.0
    for i, matrix in enumerate(generators.matrices):
        residuals = reflection_residuals(matrix, i)
        reflection = max(reflection, residuals.involution, residuals.diagonal, residuals.spectrum)
    conjugation = conjugation_residual(generators, critical, geometry.u, geometry.delta_sqrt)

    morphism = 0.0
    invariance = 0.0
    for _ in range(words):
        word = random_word(rng, model.d, max_length)
        morphism = max(morphism, morphism_residual(model, generators, word))
        jacobian = word_jacobian(model, word, generators.x0)
        for _ in range(pairs):
            h, k = rng.normal(size=(2, model.d))
            invariance = max(invariance, invariance_residual(jacobian, critical.hessian, h, k))
    return IdentityChecks(reflection=reflection, conjugation=conjugation, morphism=morphism, invariance=invariance)


@dataclass
class GroupComparison:
    im_j_order: Optional[int]
    h_verdict: GroupVerdict
    diagram: CoxeterDiagram
    relations: List[PairRelation]
    k_verdict: GroupVerdict
    g_status: str
    g_lower: Optional[int]
    g_upper: Optional[int]
    isomorphic: Optional[bool]
    conclusion: str
    witnesses: List[InfiniteOrderWitness] = field(default_factory=list)
    estimate: Optional[GroupOrderEstimate] = None
    checks: Optional[IdentityChecks] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "im_j_order": self.im_j_order,
            "h": self.h_verdict.to_dict(),
            "diagram": self.diagram.to_dict(),
            "pair_relations": [r.to_dict() for r in self.relations],
            "k_d": self.k_verdict.to_dict(),
            "g": {"status": self.g_status, "lower": self.g_lower, "upper": self.g_upper},
            "isomorphic": self.isomorphic,
            "conclusion": self.conclusion,
            "fixed_point_witnesses": [w.to_dict() for w in self.witnesses],
            "word_search": self.estimate.to_dict() if self.estimate is not None else None,
            "identity_checks": self.checks.to_dict() if self.checks is not None else None,
            "notes": list(self.notes),
        }


def _k_verdict(d: int, relations: List[PairRelation]) -> GroupVerdict:
    pending = [r for r in relations if r.order.status == VerdictStatus.INCONCLUSIVE]
    if pending:
        r = pending[0]
        return GroupVerdict(VerdictStatus.INCONCLUSIVE,
                            reason=f"order of S_{r.i + 1} S_{r.j + 1} undecided: {r.order.reason}")
    diagram = CoxeterDiagram.from_coxeter_matrix(coxeter_matrix_from_relations(d, relations))
    return classify(diagram)


def bound_conclusion(k_order: int, h_order: Optional[int]) -> str:
    if h_order is None:
        return f"|K_d| = {k_order} >= |G|, |H| unknown"
    return f"|K_d| = {k_order} >= |G| >= |H| = {h_order}"


def g_vs_h_report(model: WalkModel, critical: Optional[CriticalData] = None,
                  geometry: Optional[AngleGeometry] = None, group_order: Optional[int] = None,
                  normal_order: int = 2, word_bfs: bool = False, scan: bool = True,
                  seed: Optional[int] = None, denom_cap: Optional[int] = None,
                  closure_cap: Optional[int] = None) -> GroupComparison:
    """
    Compare the combinatorial group G with the reflection group H.

    G maps onto Im J, which is conjugate to H, so |G| >= |H|. When every relation
    (phi_i phi_j)^m_ij of the Coxeter group K_d built from the orders of S_i S_j holds
    in G, G is a quotient of K_d and |K_d| >= |G|. `group_order` and `normal_order`
    are |G| and the order of a minimal nontrivial normal subgroup when the caller
    knows them; then |G| < 2^d N forces G and H to be isomorphic.
    """
    critical = critical_point(model) if critical is None else critical
    geometry = angle_geometry(critical.delta) if geometry is None else geometry
    denom_cap = cfg.denom_cap if denom_cap is None else denom_cap
    closure_cap = cfg.closure_cap if closure_cap is None else closure_cap
    rng = make_rng(cfg.seed if seed is None else seed)
    d = model.d
    notes: List[str] = []

    generators = build_generators(model, critical)
    closure = matrix_group_closure(generators.matrices, closure_cap)
    im_j_order = None if isinstance(closure, ExceededCap) else closure.order
    if im_j_order is None:
        notes.append(f"Im J closure {closure.describe()}")

    exact_squares = None
    if critical.exact_hessian is not None:
        exact_squares = exact_covariance_squares(critical.exact_hessian)
    diagram, h_verdict = reflection_group_verdict(geometry, denom_cap, closure_cap, exact_squares)
    logger.info(f"H verdict: {h_verdict.status} order={h_verdict.order}")

    points = random_points(critical.x0, config.word_equality_points, rng)
    relations = pair_relations(model, critical.delta, points, denom_cap, exact_squares)
    k_verdict = _k_verdict(d, relations)

    witnesses: List[InfiniteOrderWitness] = []
    if scan:
        for relation in relations:
            witnesses.extend(fixed_point_scan(model, relation.i, relation.j))

    estimate = estimate_group_order(model, points) if word_bfs else None

    checks = identity_checks(model, critical, geometry, generators, rng)

    infinite_reasons = []
    if h_verdict.is_infinite:
        infinite_reasons.append(f"H is infinite ({h_verdict.witness})")
    for relation in relations:
        if relation.order.status == VerdictStatus.INFINITE:
            infinite_reasons.append(f"S_{relation.i + 1} S_{relation.j + 1} has infinite order")
    if witnesses:
        infinite_reasons.append(witnesses[0].description)

    relations_hold = all(r.holds_in_g for r in relations)
    h_order = h_verdict.order if h_verdict.is_finite else None
    k_order = k_verdict.order if k_verdict.is_finite else None
    g_lower = h_order
    g_upper = k_order if (k_order is not None and relations_hold) else None

    if infinite_reasons:
        if h_verdict.is_finite:
            notes.append("H is finite while G is infinite")
        isomorphic = False if h_verdict.is_finite else None
        return GroupComparison(im_j_order, h_verdict, diagram, relations, k_verdict,
                               g_status=VerdictStatus.INFINITE, g_lower=None, g_upper=None, isomorphic=isomorphic,
                               conclusion="G is infinite: " + "; ".join(infinite_reasons),
                               witnesses=witnesses, estimate=estimate, checks=checks, notes=notes)

    isomorphic: Optional[bool] = None
    reasons = []
    if h_order is not None and g_upper is not None and g_upper == h_order:
        isomorphic = True
        reasons.append(f"every relation of K_d holds in G and |K_d| = |H| = {h_order}")
    if group_order is not None and h_order is not None:
        bound = 2 ** d * max(int(normal_order), 2)
        if group_order < h_order:
            notes.append(f"declared |G| = {group_order} is below |H| = {h_order}")
        elif group_order < bound:
            isomorphic = True
            reasons.append(f"|G| = {group_order} < 2^{d} N = {bound}")
        elif group_order == bound and isomorphic is not True and group_order != h_order:
            notes.append(f"|G| = 2^{d} N and G is not isomorphic to H, so H = (Z/2Z)^{d}")
        if group_order == h_order:
            isomorphic = True
            reasons.append(f"declared |G| = |H| = {h_order}")
    if estimate is not None and estimate.complete and h_order is not None:
        if estimate.elements == h_order:
            isomorphic = True
            reasons.append(f"word search closed at {estimate.elements} elements")
        else:
            notes.append(f"word search closed at {estimate.elements} elements, |H| = {h_order}")

    if isomorphic:
        g_status = VerdictStatus.FINITE
        g_lower = g_upper = h_order
        conclusion = f"G and H are isomorphic, of order {h_order}: " + "; ".join(reasons)
    elif g_upper is not None:
        g_status = VerdictStatus.FINITE
        conclusion = bound_conclusion(g_upper, h_order)
    else:
        g_status = VerdictStatus.INCONCLUSIVE
        lower = "?" if g_lower is None else g_lower
        upper = "?" if k_order is None else k_order
        if k_order is not None and not relations_hold:
            failing = [f"{r.i + 1},{r.j + 1}" for r in relations if r.holds_in_g is False]
            notes.append(f"relations of K_d fail in G for pairs {', '.join(failing)}")
            upper = "?"
        conclusion = f"|G| in [{lower}, {upper}]"
    logger.info(f"G vs H: {conclusion}")
    return GroupComparison(im_j_order, h_verdict, diagram, relations, k_verdict, g_status=g_status,
                           g_lower=g_lower, g_upper=g_upper, isomorphic=isomorphic, conclusion=conclusion,
                           witnesses=witnesses, estimate=estimate, checks=checks, notes=notes)
