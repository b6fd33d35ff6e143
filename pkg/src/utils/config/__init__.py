#!/usr/bin/env python
# -*- encoding=utf8 -*-

from . import config

tool_version = "0.1.0"
report_schema_version = "orthant-walk-report/1"

# critical point solver
newton_tolerance = 1e-12
newton_max_iterations = 200
newton_positivity_floor = 1e-9

# eigen solver
jacobi_tolerance = 1e-14
jacobi_max_sweeps = 100

# angle detection and group closures
angle_tolerance = 1e-9
dedup_tolerance = 1e-8
root_cap = 10000
word_equality_tolerance = 1e-9
word_equality_points = 5
word_length_cap = 12
word_element_cap = 5000

# fixed point scan
fixed_point_grid = (-2.0, -1.5, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0)
fixed_point_starts = 4
modulus_threshold = 1e-6

# nodal
expansion_cap = 24

# counting
default_n_max = 400
fit_window = 0.5
richardson_depth = 2
alpha_relative_tolerance = 0.05
rho_relative_tolerance = 1e-3
min_fit_terms = 10

cfg = config.GlobalCFG()
