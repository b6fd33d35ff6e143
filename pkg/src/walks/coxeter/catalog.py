#!/usr/bin/env python
# -*- encoding=utf8 -*-
import math
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.walks.errors import CatalogError

EdgeLabels = Dict[Tuple[int, int], int]

EXCEPTIONAL = {
    # name: (rank, reflection count, order)
    "E6": (6, 36, 51840),
    "E7": (7, 63, 2903040),
    "E8": (8, 120, 696729600),
    "F4": (4, 24, 1152),
    "H3": (3, 15, 120),
    "H4": (4, 60, 14400),
}

_NAME = re.compile(r"^(?:([ABDEFH])(\d+)|I2\((\d+)\)|Z/2Z)$")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    rank: int
    reflection_count: int
    order: int
    # dihedral parameter for I2(m)
    m: Optional[int] = None

    def to_dict(self) -> dict:
        return {"type": self.name, "rank": self.rank, "reflection_count": self.reflection_count, "order": self.order}


def dihedral_entry(m: int) -> CatalogEntry:
    if m < 2:
        raise CatalogError(f"dihedral type needs m >= 2, got {m}")
    if m == 3:
        return CatalogEntry("A2", "A", 2, 3, 6)
    if m == 4:
        return CatalogEntry("B2", "B", 2, 4, 8)
    return CatalogEntry(f"I2({m})", "I", 2, m, 2 * m, m=m)


def catalog_entry(name: str) -> CatalogEntry:
    match = _NAME.match(name)
    if match is None:
        raise CatalogError(f"unknown Coxeter type {name!r}")
    if name == "Z/2Z":
        return CatalogEntry("Z/2Z", "A", 1, 1, 2)
    if match.group(3) is not None:
        return dihedral_entry(int(match.group(3)))

    family, n = match.group(1), int(match.group(2))
    if name in EXCEPTIONAL:
        rank, k, order = EXCEPTIONAL[name]
        return CatalogEntry(name, family, rank, k, order)
    if family == "A" and n >= 1:
        if n == 1:
            return catalog_entry("Z/2Z")
        return CatalogEntry(name, "A", n, n * (n + 1) // 2, math.factorial(n + 1))
    if family == "B" and n >= 2:
        return CatalogEntry(name, "B", n, n * n, 2 ** n * math.factorial(n))
    if family == "D" and n >= 4:
        return CatalogEntry(name, "D", n, n * (n - 1), 2 ** (n - 1) * math.factorial(n))
    raise CatalogError(f"unknown Coxeter type {name!r}")


def standard_labels(entry: CatalogEntry) -> EdgeLabels:
    """Edges of the standard diagram with their labels; unlisted pairs commute (m = 2)."""
    n = entry.rank
    if entry.family == "I":
        return {(0, 1): entry.m}
    if entry.family == "A":
        return {(i, i + 1): 3 for i in range(n - 1)}
    if entry.family == "B":
        labels = {(i, i + 1): 3 for i in range(n - 1)}
        labels[(0, 1)] = 4
        return labels
    if entry.family == "D":
        labels = {(i, i + 1): 3 for i in range(n - 2)}
        labels[(n - 3, n - 1)] = 3
        return labels
    if entry.family == "E":
        labels = {(i, i + 1): 3 for i in range(n - 2)}
        labels[(2, n - 1)] = 3
        return labels
    if entry.name == "F4":
        return {(0, 1): 3, (1, 2): 4, (2, 3): 3}
    if entry.name == "H3":
        return {(0, 1): 5, (1, 2): 3}
    if entry.name == "H4":
        return {(0, 1): 5, (1, 2): 3, (2, 3): 3}
    raise CatalogError(f"no standard diagram for {entry.name}")


def standard_coxeter_matrix(entry: CatalogEntry) -> List[List[int]]:
    matrix = [[1 if i == j else 2 for j in range(entry.rank)] for i in range(entry.rank)]
    for (i, j), m in standard_labels(entry).items():
        matrix[i][j] = matrix[j][i] = m
    return matrix


def candidates(rank: int, labels: EdgeLabels) -> List[CatalogEntry]:
    if rank == 1:
        return [catalog_entry("Z/2Z")]
    if rank == 2:
        m = labels.get((0, 1), 2)
        return [dihedral_entry(m)] if m >= 3 else []
    names = [f"A{rank}", f"B{rank}"]
    if rank >= 4:
        names.append(f"D{rank}")
    if rank in (6, 7, 8):
        names.append(f"E{rank}")
    if rank == 4:
        names += ["F4", "H4"]
    if rank == 3:
        names.append("H3")
    return [catalog_entry(name) for name in names]


def _adjacency(rank: int, labels: EdgeLabels) -> List[Dict[int, int]]:
    adjacency: List[Dict[int, int]] = [dict() for _ in range(rank)]
    for (i, j), m in labels.items():
        if m != 2:
            adjacency[i][j] = m
            adjacency[j][i] = m
    return adjacency


def _signature(adjacency: List[Dict[int, int]]) -> List[Tuple[int, Tuple[int, ...]]]:
    return sorted((len(nbrs), tuple(sorted(nbrs.values()))) for nbrs in adjacency)


def isomorphic(rank: int, first: EdgeLabels, second: EdgeLabels) -> bool:
    """Labeled graph isomorphism by backtracking; diagrams here have rank at most a few dozen."""
    a = _adjacency(rank, first)
    b = _adjacency(rank, second)
    if _signature(a) != _signature(b):
        return False

    # breadth-first order keeps every new vertex adjacent to an assigned one
    start = min(range(rank), key=lambda v: (-len(a[v]), v))
    order = [start]
    for vertex in order:
        for other in sorted(a[vertex]):
            if other not in order:
                order.append(other)
    order += [v for v in range(rank) if v not in order]
    mapping: Dict[int, int] = {}
    used = set()

    def consistent(vertex: int, image: int) -> bool:
        if len(a[vertex]) != len(b[image]):
            return False
        for other, target in mapping.items():
            if a[vertex].get(other, 2) != b[image].get(target, 2):
                return False
        return True

    def extend(position: int) -> bool:
        if position == rank:
            return True
        vertex = order[position]
        for image in range(rank):
            if image in used or not consistent(vertex, image):
                continue
            mapping[vertex] = image
            used.add(image)
            if extend(position + 1):
                return True
            del mapping[vertex]
            used.discard(image)
        return False

    return extend(0)


def match_component(vertices: Sequence[int], matrix: Sequence[Sequence[int]]) -> Optional[CatalogEntry]:
    """Catalog entry of a connected component given by its integer Coxeter matrix."""
    rank = len(vertices)
    labels: EdgeLabels = {}
    for a in range(rank):
        for b in range(a + 1, rank):
            m = matrix[vertices[a]][vertices[b]]
            if m != 2:
                labels[(a, b)] = m
    for entry in candidates(rank, labels):
        if isomorphic(rank, labels, standard_labels(entry)):
            return entry
    return None


def catalog_entries(max_rank: int = 8, max_dihedral: int = 8) -> List[CatalogEntry]:
    """Irreducible finite Coxeter types up to `max_rank`, for table dumps."""
    entries = [catalog_entry("Z/2Z")]
    entries += [dihedral_entry(m) for m in range(3, max_dihedral + 1)]
    for rank in range(3, max_rank + 1):
        entries += candidates(rank, {})
    return entries
