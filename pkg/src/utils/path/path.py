#!/usr/bin/env python
# -*- encoding=utf8 -*-

import os


def get_base_path():
    current_path = os.path.abspath(__file__)
    src_path = os.path.join(os.path.dirname(current_path), '..', '..', '..')
    return os.path.abspath(src_path)


def get_model_file(name: str):
    """Path of a bundled model file under configs/models, with or without the .yaml suffix."""
    if not name.endswith(".yaml"):
        name = name + ".yaml"
    return os.path.join(get_base_path(), "configs", "models", name)
