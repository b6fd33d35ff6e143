#!/usr/bin/env python
# -*- encoding=utf8 -*-
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import psutil
from tqdm import tqdm

from src.logger import logger
from src.utils.config import cfg
from src.walks.errors import MemoryBudgetError
from src.walks.model import WalkModel

Point = Tuple[int, ...]
Count = Union[int, Fraction]


@dataclass(frozen=True)
class CountTable:
    start: Point
    end: Point
    n_max: int
    # exact e(n), or None in float mode
    values: Optional[Tuple[Count, ...]]
    # log e(n), -inf where e(n) = 0
    log_values: Tuple[float, ...]
    weighted: bool
    exact: bool
    box: Tuple[int, ...]

    @property
    def nonzero(self) -> List[int]:
        return [n for n, v in enumerate(self.log_values) if v != -math.inf]

    @property
    def period(self) -> int:
        """gcd of the lengths n with e(n) != 0; 0 when every term vanishes."""
        return reduce(math.gcd, self.nonzero, 0)

    @property
    def spacing(self) -> int:
        """gcd of the gaps between lengths with e(n) != 0; 0 with fewer than two such lengths."""
        nonzero = self.nonzero
        return reduce(math.gcd, (b - a for a, b in zip(nonzero, nonzero[1:])), 0)

    def value(self, n: int) -> Count:
        if self.values is None:
            raise ValueError("float count tables keep log values only")
        return self.values[n]

    def to_dict(self) -> dict:
        return {
            "start": list(self.start),
            "end": list(self.end),
            "n_max": self.n_max,
            "weighted": self.weighted,
            "exact": self.exact,
            "box": list(self.box),
            "period": self.period,
            "spacing": self.spacing,
            "values": [str(v) for v in self.values] if self.values is not None else None,
            "log_values": [v if v != -math.inf else None for v in self.log_values],
        }


def _log(value: Count) -> float:
    if value == 0:
        return -math.inf
    if isinstance(value, Fraction):
        return math.log(value.numerator) - math.log(value.denominator)
    return math.log(value)


def _check_point(name: str, point: Sequence[int], d: int) -> Point:
    point = tuple(int(c) for c in point)
    if len(point) != d:
        raise ValueError(f"{name} {list(point)} has {len(point)} coordinates, expected {d}")
    if any(c < 0 for c in point):
        raise ValueError(f"{name} {list(point)} is outside the orthant")
    return point


def integer_weights(model: WalkModel, weighted: bool) -> Tuple[Tuple[int, ...], int]:
    """Weights scaled to integers by their common denominator D, and D (1 when unweighted)."""
    if not weighted:
        return tuple(1 for _ in model.steps), 1
    denominator = reduce(lambda a, b: a * b // math.gcd(a, b), (w.denominator for w in model.weights), 1)
    return tuple(int(w * denominator) for w in model.weights), denominator


def box_bound(model: WalkModel, start: Point, end: Point, n_max: int) -> Tuple[int, ...]:
    """
    Largest coordinate a point can have and still lie on a walk of length <= n_max from
    start to end: it is within M n of start and within M (n_max - n) of end.
    """
    reach = model.max_step_norm() * n_max
    return tuple(max(p, q, (p + q + reach) // 2) for p, q in zip(start, end))


def estimate_memory(model: WalkModel, box: Sequence[int], n_max: int, exact: bool, weights: Sequence[int]) -> int:
    cells = math.prod(b + 1 for b in box)
    if not exact:
        return 2 * cells * 8
    # pointer plus a python int holding up to n_max * log2(sum W) bits
    bits = n_max * max(1.0, math.log2(max(1, sum(weights))))
    return 2 * cells * (8 + 28 + 4 * math.ceil(bits / 30))


def _check_budget(estimate: int):
    available = psutil.virtual_memory().available
    budget = min(cfg.memory_budget, available)
    logger.debug(f"count table memory estimate {estimate} bytes, budget {budget} bytes")
    if estimate > budget:
        raise MemoryBudgetError(f"count table needs about {estimate} bytes, budget is {budget} bytes "
                                f"(configured {cfg.memory_budget}, available {available})")


def _shift(step: Sequence[int], source_hi: Sequence[int], target_hi: Sequence[int],
           last: Tuple[int, int]) -> Optional[Tuple[Tuple[slice, ...], Tuple[slice, ...]]]:
    """Slices (source, target) with target = source + step, restricted to target[-1] in `last`."""
    sources, targets = [], []
    for axis, s in enumerate(step):
        lo = max(0, -s)
        hi = min(source_hi[axis] + 1, target_hi[axis] + 1 - s)
        if axis == len(step) - 1:
            lo = max(lo, last[0] - s)
            hi = min(hi, last[1] - s)
        if hi <= lo:
            return None
        sources.append(slice(lo, hi))
        targets.append(slice(lo + s, hi + s))
    return tuple(sources), tuple(targets)


def _advance_slab(current: np.ndarray, target: np.ndarray, steps, weights, source_hi, target_hi,
                  last: Tuple[int, int]):
    for step, weight in zip(steps, weights):
        shift = _shift(step, source_hi, target_hi, last)
        if shift is None:
            continue
        source, destination = shift
        target[destination] += weight * current[source]


def _advance(current: np.ndarray, steps, weights, source_hi, target_hi, threads: int, pool) -> np.ndarray:
    target = np.zeros_like(current)
    width = target_hi[-1] + 1
    if pool is None or width < 2 * threads:
        _advance_slab(current, target, steps, weights, source_hi, target_hi, (0, width))
        return target
    # slabs of the last coordinate are disjoint in the target, so each thread writes its own cells
    bounds = np.linspace(0, width, threads + 1).astype(int)
    slabs = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    list(pool.map(lambda slab: _advance_slab(current, target, steps, weights, source_hi, target_hi, slab), slabs))
    return target


def count_excursions(model: WalkModel, start: Sequence[int], end: Sequence[int], n_max: int,
                     weighted: bool = True, exact: bool = True, threads: Optional[int] = None) -> CountTable:
    """
    e(start, end; n) for n = 0..n_max over walks confined to the orthant, by forward
    dynamic programming on the occupancy of the box [0, R]^d. Exact mode counts in
    integers scaled by the common weight denominator; float mode keeps log-scaled layers.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    start = _check_point("start", start, model.d)
    end = _check_point("end", end, model.d)
    threads = cfg.threads if threads is None else threads
    int_weights, denominator = integer_weights(model, weighted)
    box = box_bound(model, start, end, n_max)
    _check_budget(estimate_memory(model, box, n_max, exact, int_weights))

    shape = tuple(b + 1 for b in box)
    if exact:
        current = np.zeros(shape, dtype=object)
        current[start] = 1
        weights: Sequence = int_weights
    else:
        current = np.zeros(shape, dtype=np.float64)
        current[start] = 1.0
        weights = [float(w) for w in model.weights] if weighted else [1.0] * len(model.steps)
    step_norm = model.max_step_norm()
    steps = model.vectors

    values: List[Count] = []
    log_values: List[float] = []
    log_offset = 0.0

    def record(layer: np.ndarray, n: int):
        if exact:
            raw = layer[end] if all(e < s for e, s in zip(end, shape)) else 0
            value: Count = Fraction(raw, denominator ** n) if weighted else int(raw)
            values.append(value)
            log_values.append(_log(value))
        else:
            raw = float(layer[end]) if all(e < s for e, s in zip(end, shape)) else 0.0
            log_values.append(math.log(raw) + log_offset if raw > 0 else -math.inf)

    record(current, 0)
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        iterator = tqdm(range(n_max), desc="counting", disable=not cfg.show_progress)
        for n in iterator:
            source_hi = tuple(min(b, p + step_norm * n) for b, p in zip(box, start))
            target_hi = tuple(min(b, p + step_norm * (n + 1)) for b, p in zip(box, start))
            current = _advance(current, steps, weights, source_hi, target_hi, threads, pool)
            if not exact:
                scale = float(current.max())
                if scale > 0:
                    current /= scale
                    log_offset += math.log(scale)
            record(current, n + 1)
            if (n + 1) % 100 == 0:
                logger.debug(f"counting layer {n + 1}/{n_max}, log e = {log_values[-1]:.6g}")
    finally:
        if pool is not None:
            pool.shutdown()

    logger.info(f"counted walks {list(start)} -> {list(end)} up to n={n_max} "
                f"({'exact' if exact else 'float'}, box {list(box)})")
    return CountTable(start=start, end=end, n_max=n_max, values=tuple(values) if exact else None,
                      log_values=tuple(log_values), weighted=weighted, exact=exact, box=box)


def brute_force_count(model: WalkModel, start: Sequence[int], end: Sequence[int], n: int,
                      weighted: bool = True) -> Count:
    """Sum over all step sequences of length n that stay in the orthant and end at `end`."""
    start = _check_point("start", start, model.d)
    end = _check_point("end", end, model.d)
    total: Count = Fraction(0) if weighted else 0
    for path in itertools.product(model.steps, repeat=n):
        position = list(start)
        weight: Count = Fraction(1) if weighted else 1
        inside = True
        for step, w in path:
            position = [p + s for p, s in zip(position, step)]
            if min(position) < 0:
                inside = False
                break
            if weighted:
                weight *= w
        if inside and tuple(position) == end:
            total += weight
    return total


def export_table(table: CountTable, delimiter: str = ",") -> str:
    if table.values is not None:
        header = delimiter.join(["n", "e(n)"])
        rows = [delimiter.join([str(n), str(v)]) for n, v in enumerate(table.values)]
    else:
        header = delimiter.join(["n", "log e(n)"])
        rows = [delimiter.join([str(n), "-inf" if v == -math.inf else format(v, ".17g")])
                for n, v in enumerate(table.log_values)]
    return "\n".join([header] + rows) + "\n"
