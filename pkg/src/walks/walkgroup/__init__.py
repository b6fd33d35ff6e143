#!/usr/bin/env python
# -*- encoding=utf8 -*-

from .generators import (GeneratorSet, ReflectionResiduals, Word, build_generators, conjugation_residual,
                         invariance_residual, isometry_matrix, jacobian_generator, maps_equal, morphism_residual,
                         phi, random_points, random_word, reflection_residuals, word_jacobian, word_map, word_matrix)
from .orders import (GroupOrderEstimate, PairRelation, coxeter_matrix_from_relations, estimate_group_order,
                     pair_order, pair_relations, relation_holds)
from .fixed_points import InfiniteOrderWitness, fixed_point_scan
from .report import GroupComparison, IdentityChecks, bound_conclusion, g_vs_h_report, identity_checks
