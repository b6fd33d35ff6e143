#!/usr/bin/env python
# -*- encoding=utf8 -*-
from fractions import Fraction
from typing import List, Optional, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from src.walks.errors import ModelError
from .model import WalkModel


class ModelFile(BaseModel):
    """On-disk form of a walk model."""
    dim: int = Field(..., ge=1)
    steps: List[List[int]] = Field(..., min_length=1)
    weights: Optional[List[Union[int, str]]] = None

    @field_validator("weights")
    @classmethod
    def validate_weights(cls, weights):
        if weights is None:
            return weights
        for weight in weights:
            try:
                Fraction(str(weight))
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"weight {weight!r} is not a rational number")
        return weights


def _item_lines(document: str, field: str) -> List[int]:
    """1-based line of every item of a top-level sequence field."""
    try:
        root = yaml.compose(document)
    except yaml.YAMLError:
        return []
    if not isinstance(root, yaml.MappingNode):
        return []
    for key, value in root.value:
        if isinstance(key, yaml.ScalarNode) and key.value == field and isinstance(value, yaml.SequenceNode):
            return [item.start_mark.line + 1 for item in value.value]
    return []


def _line_of(document: str, field: str, index: Optional[int]) -> Optional[int]:
    if index is None:
        return None
    lines = _item_lines(document, field)
    if 0 <= index < len(lines):
        return lines[index]
    return None


def parse_model(document: str) -> WalkModel:
    try:
        data = yaml.safe_load(document)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise ModelError(f"malformed model document: {getattr(e, 'problem', e)}",
                         line=mark.line + 1 if mark is not None else None)
    if not isinstance(data, dict):
        raise ModelError("model document must be a mapping with fields dim, steps and weights")

    try:
        model_file = ModelFile.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        loc = error.get("loc", ())
        field = loc[0] if loc else None
        index = loc[1] if len(loc) > 1 and isinstance(loc[1], int) else None
        where = ".".join(str(part) for part in loc)
        raise ModelError(f"{where}: {error.get('msg')}",
                         line=_line_of(document, field, index) if field in ("steps", "weights") else None,
                         step_index=index)

    weights = None
    if model_file.weights is not None:
        weights = [Fraction(str(w)) for w in model_file.weights]
    try:
        return WalkModel.create(model_file.dim, model_file.steps, weights)
    except ModelError as e:
        if e.line is None and e.step_index is not None:
            raise ModelError(e.reason, line=_line_of(document, "steps", e.step_index), step_index=e.step_index)
        raise


def serialize_model(model: WalkModel) -> str:
    document = {
        "dim": model.d,
        "steps": [list(s) for s in model.vectors],
        "weights": [str(w) for w in model.weights],
    }
    return yaml.safe_dump(document, sort_keys=False, default_flow_style=None)


def load_model(path: str) -> WalkModel:
    with open(path, "r") as f:
        document = f.read()
    return parse_model(document)
