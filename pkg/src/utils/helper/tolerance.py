#!/usr/bin/env python
# -*- encoding=utf8 -*-
from typing import List

import numpy as np
from sortedcontainers import SortedList


class ToleranceSet(object):
    """
    Set of real arrays where two arrays are the same element when they agree
    entrywise within `tolerance`.

    Arrays are indexed by their projection onto a fixed generic direction, so a
    membership test only compares against the neighbours of that projection.
    """

    def __init__(self, size: int, tolerance: float = 1e-8):
        self.size = size
        self.tolerance = tolerance
        self._direction = np.sqrt(np.arange(1, size + 1, dtype=float))
        self._window = tolerance * float(np.sum(self._direction))
        self._index = SortedList()
        self._items: List[np.ndarray] = []

    def _key(self, item: np.ndarray) -> float:
        return float(np.dot(self._direction, item))

    def find(self, item) -> int:
        flat = np.asarray(item, dtype=float).reshape(-1)
        key = self._key(flat)
        for _, position in self._index.irange((key - self._window, -1), (key + self._window, len(self._items))):
            if np.max(np.abs(self._items[position] - flat)) <= self.tolerance:
                return position
        return -1

    def add(self, item) -> bool:
        """Insert `item`; returns False when an equal element is already present."""
        flat = np.asarray(item, dtype=float).reshape(-1)
        if flat.shape[0] != self.size:
            raise ValueError(f"expected {self.size} entries, got {flat.shape[0]}")
        if self.find(flat) >= 0:
            return False
        position = len(self._items)
        self._items.append(flat.copy())
        self._index.add((self._key(flat), position))
        return True

    def __contains__(self, item) -> bool:
        return self.find(item) >= 0

    def __len__(self) -> int:
        return len(self._items)

    def items(self) -> List[np.ndarray]:
        return list(self._items)
