#!/usr/bin/env python
# -*- encoding=utf8 -*-

from .model import (WalkModel, SectionTriple, sections, check_H1, inventory, inventory_exact, drift,
                    is_zero_drift, evaluate_terms, evaluate_terms_exact)
from .schema import ModelFile, parse_model, serialize_model, load_model
from .examples import BUNDLED_MODELS, bundled_model, simple_walk, tandem, dihedral
