#!/usr/bin/env python
# -*- encoding=utf8 -*-
import os

from ..helper import str2bool
from ...logger import logger


class GlobalCFG(object):
    _instance = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super(GlobalCFG, cls).__new__(cls)
        return cls._instance

    def __init__(self):
        if not hasattr(self, 'initialized'):
            self.memory_budget: int = int(os.environ.get("WALKS_MEMORY_BUDGET", str(4 * 1024 ** 3)))
            self.threads: int = max(1, int(os.environ.get("WALKS_THREADS", "1")))
            self.seed: int = int(os.environ.get("WALKS_SEED", "0"))
            self.denom_cap: int = int(os.environ.get("WALKS_DENOM_CAP", "400"))
            self.closure_cap: int = int(os.environ.get("WALKS_CLOSURE_CAP", "20000"))
            self.show_progress: bool = str2bool(os.environ.get("WALKS_SHOW_PROGRESS", "False"))
            logger.debug(f"Config loaded: memory_budget={self.memory_budget} threads={self.threads} "
                         f"seed={self.seed} denom_cap={self.denom_cap} closure_cap={self.closure_cap}")
            self.initialized = True
