"""Coloring values and the verification engine for coloring properties.

Colors are dense integers 1..k.  A single ``check`` call reports all five
properties (proper / acyclic / complete / harmonious / balanced) with one
concrete counterexample per failed property, so a verified construction
never rests on the builder's own reasoning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from .digraph import Digraph


@dataclass(frozen=True)
class Coloring:
    """Total assignment of vertices to colors 1..k.

    Surjectivity onto 1..k is not enforced here: searches hold partial
    palettes.  Certificates check it where a claim needs it (a complete
    coloring is surjective by definition for k >= 2).
    """

    k: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"need k >= 1 colors, got {self.k}")
        for v, c in enumerate(self.assignment):
            if not (1 <= c <= self.k):
                raise ValueError(f"vertex {v} has color {c} out of range 1..{self.k}")

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Vertices of each chromatic class, indexed by color-1."""
        by: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            by[c - 1].append(v)
        return tuple(tuple(c) for c in by)

    def class_of(self, color: int) -> tuple[int, ...]:
        return self.classes[color - 1]

    def color(self, v: int) -> int:
        return self.assignment[v]


@dataclass(frozen=True)
class ClassPairMatrix:
    """k x k arc counts: entry (i, j) with i != j counts arcs from class i
    to class j; entry (i, i) counts arcs inside class i.  1-based colors."""

    k: int
    counts: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.counts[i - 1][j - 1]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def off_diagonal_range(self) -> tuple[int, int]:
        vals = [self.counts[i][j] for i in range(self.k) for j in range(self.k) if i != j]
        if not vals:
            return (0, 0)
        return (min(vals), max(vals))


@dataclass(frozen=True)
class CheckReport:
    proper: bool
    acyclic: bool
    complete: bool
    harmonious: bool
    balanced: bool
    witnesses: dict[str, Any]

    def summary(self) -> str:
        flags = []
        for name in ("proper", "acyclic", "complete", "harmonious", "balanced"):
            flags.append(("+" if getattr(self, name) else "-") + name)
        return " ".join(flags)


def class_pair_matrix(d: Digraph, c: Coloring) -> ClassPairMatrix:
    _require_total(d, c)
    counts = [[0] * c.k for _ in range(c.k)]
    col = c.assignment
    for (u, v) in d.arc_list:
        counts[col[u] - 1][col[v] - 1] += 1
    return ClassPairMatrix(c.k, tuple(tuple(row) for row in counts))


def _require_total(d: Digraph, c: Coloring) -> None:
    if len(c.assignment) != d.order:
        raise ValueError(
            f"coloring covers {len(c.assignment)} vertices, digraph has {d.order}"
        )


def _shortest_class_cycle(d: Digraph, members: tuple[int, ...]) -> list[int] | None:
    """Shortest directed cycle inside the induced class, if any."""
    inside = set(members)
    best: list[int] | None = None
    for s in members:
        # BFS over class arcs for the shortest s -> s closed walk
        parent = {s: None}
        frontier = [s]
        found = False
        while frontier and not found:
            nxt = []
            for x in frontier:
                for w in d.out_neighbors[x]:
                    if w == s:
                        cycle = []
                        y = x
                        while y is not None:
                            cycle.append(y)
                            y = parent[y]
                        cycle.reverse()  # [s, ..., x]; the closing arc is x -> s
                        if best is None or len(cycle) < len(best):
                            best = cycle
                        found = True
                        break
                    if w in inside and w not in parent:
                        parent[w] = x
                        nxt.append(w)
                if found:
                    break
            frontier = nxt
    return best


def check(d: Digraph, c: Coloring) -> CheckReport:
    """Verify all coloring properties at once.

    proper     -- no arc joins two vertices of the same class
    acyclic    -- every class induces a subdigraph with no directed cycle
    complete   -- every ordered pair of distinct colors has >= 1 arc
    harmonious -- every ordered pair of distinct colors has <= 1 arc
    balanced   -- all classes have equal size
    """
    _require_total(d, c)
    matrix = class_pair_matrix(d, c)
    witnesses: dict[str, Any] = {}
    col = c.assignment

    proper = all(matrix.counts[i][i] == 0 for i in range(c.k))
    if not proper:
        for (u, v) in d.arc_list:
            if col[u] == col[v]:
                witnesses["proper"] = {"arc": (u, v), "color": col[u]}
                break

    acyclic = True
    for color in range(1, c.k + 1):
        members = c.class_of(color)
        if matrix.entry(color, color) == 0:
            continue
        cyc = _shortest_class_cycle(d, members)
        if cyc is not None:
            acyclic = False
            witnesses["acyclic"] = {"color": color, "cycle": cyc}
            break

    complete = True
    harmonious = True
    for i in range(c.k):
        for j in range(c.k):
            if i == j:
                continue
            n_ij = matrix.counts[i][j]
            if n_ij == 0 and complete:
                complete = False
                witnesses["complete"] = {"missing_pair": (i + 1, j + 1)}
            if n_ij > 1 and harmonious:
                harmonious = False
                pair_arcs = [a for a in d.arc_list if col[a[0]] == i + 1 and col[a[1]] == j + 1]
                witnesses["harmonious"] = {"pair": (i + 1, j + 1), "arcs": pair_arcs[:2]}

    sizes = [len(cl) for cl in c.classes]
    balanced = len(set(sizes)) <= 1
    if not balanced:
        lo = min(range(c.k), key=lambda i: sizes[i])
        hi = max(range(c.k), key=lambda i: sizes[i])
        witnesses["balanced"] = {"classes": (lo + 1, hi + 1), "sizes": (sizes[lo], sizes[hi])}

    return CheckReport(proper, acyclic, complete, harmonious, balanced, witnesses)


def minimality_certificate(d: Digraph, c: Coloring) -> bool:
    """True iff ``c`` is a complete acyclic k-coloring and d has exactly
    k(k-1) arcs.

    Such a certificate pins the instance exactly: no complete coloring can
    use more than k colors on k(k-1) arcs, and with exactly one arc per
    ordered color pair the same coloring is also proper and harmonious, so
    the maximum acyclic-complete count and the minimum harmonious count
    both equal k.
    """
    report = check(d, c)
    return report.complete and report.acyclic and d.size == c.k * (c.k - 1)


def complete_color_bound(m: int) -> float:
    """Positive root of k(k-1) = m.

    A complete coloring of a digraph with m arcs uses at most this many
    colors; a harmonious coloring uses at least this many.
    """
    if m < 0:
        raise ValueError(f"negative arc count {m}")
    return (1.0 + math.sqrt(1.0 + 4.0 * m)) / 2.0


def complete_color_bound_floor(m: int) -> int:
    """Exact integer floor of complete_color_bound (no floating point)."""
    if m < 0:
        raise ValueError(f"negative arc count {m}")
    return (1 + math.isqrt(1 + 4 * m)) // 2


@dataclass(frozen=True)
class ColorScheme:
    """Composite colors (i, l): the l-th color of block i, flattened to
    dense integers 1..sum(block_sizes).

    Solvers want the flat integers; tables want the decoded pairs.
    """

    block_sizes: tuple[int, ...]

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        offs = [0]
        for s in self.block_sizes:
            offs.append(offs[-1] + s)
        return tuple(offs)

    @property
    def total(self) -> int:
        return self.offsets[-1]

    def flat(self, i: int, l: int) -> int:
        """1-based block i, 1-based position l within the block."""
        if not (1 <= i <= len(self.block_sizes)):
            raise ValueError(f"block {i} out of range")
        if not (1 <= l <= self.block_sizes[i - 1]):
            raise ValueError(f"position {l} out of range for block {i}")
        return self.offsets[i - 1] + l

    def pair(self, color: int) -> tuple[int, int]:
        if not (1 <= color <= self.total):
            raise ValueError(f"color {color} out of range")
        for i in range(len(self.block_sizes)):
            if color <= self.offsets[i + 1]:
                return (i + 1, color - self.offsets[i])
        raise AssertionError("unreachable")
