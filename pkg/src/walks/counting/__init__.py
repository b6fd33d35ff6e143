#!/usr/bin/env python
# -*- encoding=utf8 -*-

from .counting import (CountTable, box_bound, brute_force_count, count_excursions, estimate_memory, export_table,
                       integer_weights)
from .fit import AsymptoticFit, estimate_asymptotics, richardson
from .verify import VerificationReport, verify_prediction
