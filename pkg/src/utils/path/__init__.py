#!/usr/bin/env python
# -*- encoding=utf8 -*-

from .path import get_base_path, get_model_file
