#!/usr/bin/env python
# -*- encoding=utf8 -*-
from typing import Optional


class WalkError(Exception):
    pass


class ModelError(WalkError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None, step_index: Optional[int] = None):
        self.line = line
        self.step_index = step_index
        self.reason = message
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotSmallStepError(ModelError):
    pass


class SectionError(ModelError):
    pass


class CriticalPointError(WalkError, RuntimeError):
    pass


class DegenerateModelError(WalkError, ValueError):
    pass


class PoleError(WalkError, ZeroDivisionError):
    pass


class ExpansionCapError(WalkError, ValueError):
    pass


class MemoryBudgetError(WalkError, MemoryError):
    pass


class CatalogError(WalkError, ValueError):
    pass
