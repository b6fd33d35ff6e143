#!/usr/bin/env python
# -*- encoding=utf8 -*-

from .jacobi import sym_eig, matrix_power, jacobi_sweep_masses
from .geometry import (AngleGeometry, IsometryReport, angle_geometry, interior_angles, isometry_check,
                       polytope_generators)
