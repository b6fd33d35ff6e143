#!/usr/bin/env python
# -*- encoding=utf8 -*-

from .polynomial import PolyP0, build_P0, check_harmonic, euler_check, hyperplane_residual, laplacian
from .nodal import (NodalResult, chamber_normals, classify_nodal, exact_alpha, exponent, lambda1_from_k,
                    lambda1_tandem, wedge_lambda1, weyl_chamber)
from .tables import CatalogRow, catalog_tuples, expand_catalog, export_catalog, find_row
