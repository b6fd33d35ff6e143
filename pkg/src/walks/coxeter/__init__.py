#!/usr/bin/env python
# -*- encoding=utf8 -*-

from .diagram import (VerdictStatus, FiniteLabel, InfiniteLabel, NonCrystallographic, CoxeterDiagram,
                      InfiniteWitness, PairOrder, ADMISSIBLE_COSINES, diagram_from_angles, prop_app_test,
                      rational_angle, rotation_order, reconstruct_rational, label_for_order)
from .catalog import (CatalogEntry, catalog_entry, catalog_entries, dihedral_entry, standard_labels,
                      standard_coxeter_matrix, match_component, isomorphic)
from .roots import (ExceededCap, RootSystem, GroupClosure, generate_roots, matrix_group_closure,
                    reflection_matrix, simple_system, simple_system_from_matrix)
from .verdict import Evidence, GroupVerdict, classify, reflection_group_verdict, order_floor_holds
