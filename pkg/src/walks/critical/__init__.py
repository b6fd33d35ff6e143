#!/usr/bin/env python
# -*- encoding=utf8 -*-

from .critical import (CriticalData, critical_point, gradient, hessian, exact_hessian, covariance,
                       normalize_hessian, exact_covariance_squares, cramer_weights, bilinear_form,
                       normalized_basis)
from .walks import RandomWalks, random_walks
