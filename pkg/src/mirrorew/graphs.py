"""Graphs, stabilizer generators and groups, graph-state projectors,
two-colorings.

Sign tracking in stabilizer products uses exact integer powers of i, so
group elements never pick up floating-point phase error.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

from .linops import (
    HermitianOperator,
    PauliSum,
    pauli_label_mul,
    pauli_labels_commute,
    pauli_to_matrix,
)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __init__(self, n: int, edges):
        n = int(n)
        norm = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for n={n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    def neighbors(self, i: int) -> set:
        return {b if a == i else a for a, b in self.edges if i in (a, b)}

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": sorted(list(e) for e in self.edges)}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        return cls(obj["n"], obj["edges"])


@dataclass(frozen=True)
class Coloring:
    red: frozenset
    blue: frozenset

    def __init__(self, red, blue):
        red, blue = frozenset(red), frozenset(blue)
        if red & blue:
            raise ValueError(f"color classes overlap on {sorted(red & blue)}")
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", blue)


def generator(g: Graph, i: int) -> PauliSum:
    """Stabilizer generator of a graph state: X at vertex i, Z on neighbors."""
    if not (0 <= i < g.n):
        raise ValueError(f"vertex {i} out of range")
    letters = ["I"] * g.n
    letters[i] = "X"
    for j in g.neighbors(i):
        letters[j] = "Z"
    return PauliSum({"".join(letters): 1.0})


def ghz_generators(n: int) -> list[PauliSum]:
    """Stabilizer generators of the n-party GHZ state: the all-X string plus
    the n-1 nearest-neighbor ZZ strings.

    The ZZ strings run over pairs (i, i+1) for i = 0..n-2; together with the
    X string this gives exactly n independent generators whose projector
    product is the GHZ projector.
    """
    if n < 2:
        raise ValueError("GHZ needs at least 2 parties")
    gens = [PauliSum({"X" * n: 1.0})]
    for i in range(n - 1):
        letters = ["I"] * n
        letters[i] = "Z"
        letters[i + 1] = "Z"
        gens.append(PauliSum({"".join(letters): 1.0}))
    return gens


def ghz_state(n: int) -> np.ndarray:
    v = np.zeros(2**n, dtype=complex)
    v[0] = v[-1] = 1 / np.sqrt(2)
    return v


def _single_term(p: PauliSum) -> tuple[float, str]:
    if len(p.terms) != 1:
        raise ValueError("expected a single Pauli string")
    ((label, coeff),) = p.terms.items()
    return coeff, label


def stabilizer_elements(gens: list[PauliSum]) -> list[PauliSum]:
    """All 2^k products over subsets of the generators, each a signed string."""
    strings = [_single_term(g) for g in gens]
    for (_, a), (_, b) in itertools.combinations(strings, 2):
        if not pauli_labels_commute(a, b):
            raise ValueError(f"generators {a} and {b} do not commute")
    n = len(strings[0][1])
    elements = []
    for subset in itertools.product([0, 1], repeat=len(strings)):
        phase = 0
        label = "I" * n
        sign = 1.0
        for bit, (coeff, s) in zip(subset, strings):
            if not bit:
                continue
            k, label = pauli_label_mul(label, s)
            phase = (phase + k) % 4
            sign *= coeff
        if phase % 2:
            raise ValueError("stabilizer product produced an imaginary phase")
        sign *= -1.0 if phase == 2 else 1.0
        elements.append(PauliSum({label: sign}))
    return elements


def graph_projector(gens: list[PauliSum]) -> HermitianOperator:
    """(1/2^k) sum of all stabilizer elements; the rank-1 state projector."""
    elements = stabilizer_elements(gens)
    total = elements[0]
    for e in elements[1:]:
        total = total + e
    return pauli_to_matrix(total * (1.0 / len(elements)))


def two_coloring(g: Graph) -> Coloring | None:
    """Deterministic bipartition by BFS, lowest-index vertex of each
    component colored red; None when the graph has an odd cycle."""
    color = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(g.neighbors(v)):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    red = {v for v, c in color.items() if c == 0}
    blue = {v for v, c in color.items() if c == 1}
    return Coloring(red, blue)


def named_graph(kind: str, n: int = 0, rows: int = 0, cols: int = 0) -> Graph:
    """Standard graphs: 'ghz-star', 'linear-cluster', or 'grid' (rows x cols)."""
    if kind == "ghz-star":
        if n < 2:
            raise ValueError("star needs n >= 2")
        return Graph(n, [(0, i) for i in range(1, n)])
    if kind == "linear-cluster":
        if n < 2:
            raise ValueError("cluster needs n >= 2")
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "grid":
        if rows < 1 or cols < 1:
            raise ValueError("grid needs positive rows and cols")
        edges = []
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.append((v, v + 1))
                if r + 1 < rows:
                    edges.append((v, v + cols))
        return Graph(rows * cols, edges)
    raise ValueError(f"unknown graph kind {kind!r}")
