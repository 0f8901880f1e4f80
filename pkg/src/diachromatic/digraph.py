"""Immutable simple digraphs: generators, traversals, Eulerian circuits, structural edits.

Vertices are dense integers 0..order-1.  Arcs are ordered pairs (u, v) with
u != v; the arc set is a set, so there are no loops and no parallel arcs.
Every operation in this module is a pure function over immutable values, and
any derived iteration order is canonical (lexicographic by (tail, head)) so
downstream objects are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

Arc = tuple[int, int]

DEFAULT_SET_BUDGET = 20_000_000


class BudgetExceeded(RuntimeError):
    """A bounded exhaustive search ran out of its node budget.

    Raised instead of returning a possibly-wrong answer.
    """

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class Digraph:
    """A finite simple digraph on vertices 0..order-1.

    ``labels`` optionally attaches an opaque display string to vertices
    (provenance names from constructions); structural algorithms never
    read labels, and labels are excluded from equality.
    """

    order: int
    arcs: frozenset[Arc]
    labels: tuple[tuple[int, str], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"negative order {self.order}")
        for (u, v) in self.arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"arc ({u}, {v}) out of range for order {self.order}")
        if self.labels is not None:
            for (v, _) in self.labels:
                if not (0 <= v < self.order):
                    raise ValueError(f"label on out-of-range vertex {v}")

    @staticmethod
    def of(order: int, arcs: Iterable[Arc], labels: Mapping[int, str] | None = None) -> "Digraph":
        lab = tuple(sorted(labels.items())) if labels else None
        return Digraph(order, frozenset((int(u), int(v)) for (u, v) in arcs), lab)

    @property
    def size(self) -> int:
        return len(self.arcs)

    @cached_property
    def arc_list(self) -> tuple[Arc, ...]:
        """Arcs in the canonical (tail, head) order."""
        return tuple(sorted(self.arcs))

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for (u, v) in self.arc_list:
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for (u, v) in self.arc_list:
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def label_map(self) -> dict[int, str]:
        return dict(self.labels) if self.labels else {}

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors[v])

    def __repr__(self):
        return f"Digraph(order={self.order}, size={self.size})"


@dataclass(frozen=True)
class ArcTrail:
    """A walk that repeats no arc.  If closed, the last vertex equals the first."""

    vertices: tuple[int, ...]
    closed: bool

    def arcs(self) -> tuple[Arc, ...]:
        vs = self.vertices
        return tuple((vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def __len__(self) -> int:
        """Number of arcs in the trail."""
        return max(0, len(self.vertices) - 1)

    def validate_in(self, d: Digraph) -> None:
        """Raise unless every consecutive pair is a distinct arc of ``d``."""
        seen: set[Arc] = set()
        for a in self.arcs():
            if a not in d.arcs:
                raise ValueError(f"trail step {a} is not an arc")
            if a in seen:
                raise ValueError(f"trail repeats arc {a}")
            seen.add(a)
        if self.closed and self.vertices and self.vertices[0] != self.vertices[-1]:
            raise ValueError("closed trail does not return to its start")


# ---------------------------------------------------------------------------
# generators

GENERATOR_KINDS = ("directed-cycle", "directed-path", "complete-symmetric", "transitive-tournament")


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError(f"directed cycle needs n >= 2, got {n}")
    return Digraph.of(n, ((i, (i + 1) % n) for i in range(n)))


def directed_path(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"directed path needs n >= 1, got {n}")
    return Digraph.of(n, ((i, i + 1) for i in range(n - 1)))


def complete_symmetric(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"complete symmetric digraph needs n >= 1, got {n}")
    return Digraph.of(n, ((u, v) for u in range(n) for v in range(n) if u != v))


def transitive_tournament(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"transitive tournament needs n >= 1, got {n}")
    return Digraph.of(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def generate(kind: str, n: int) -> Digraph:
    """Build one of the canonical families by its kind name."""
    builders = {
        "directed-cycle": directed_cycle,
        "directed-path": directed_path,
        "complete-symmetric": complete_symmetric,
        "transitive-tournament": transitive_tournament,
    }
    if kind not in builders:
        raise ValueError(f"unknown kind {kind!r}; expected one of {GENERATOR_KINDS}")
    return builders[kind](n)


# ---------------------------------------------------------------------------
# traversals and tests


def is_acyclic(d: Digraph) -> bool:
    """True iff ``d`` contains no directed cycle (Kahn peeling)."""
    indeg = [d.in_degree(v) for v in range(d.order)]
    stack = [v for v in range(d.order) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in d.out_neighbors[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == d.order


def induced_subdigraph(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Subdigraph induced by ``vertices``, renumbered densely.

    Returns the subdigraph together with the back-map: position i of the
    returned tuple holds the original id of new vertex i.
    """
    back = tuple(sorted(set(vertices)))
    for v in back:
        if not (0 <= v < d.order):
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(back)}
    arcs = [(pos[u], pos[v]) for (u, v) in d.arc_list if u in pos and v in pos]
    labels = {pos[v]: s for v, s in d.label_map.items() if v in pos} or None
    return Digraph.of(len(back), arcs, labels), back


def _weakly_connected_on_support(d: Digraph) -> int | None:
    """Return a vertex unreachable from the support's first vertex, or None."""
    support = [v for v in range(d.order) if d.out_degree(v) or d.in_degree(v)]
    if not support:
        return None
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        v = stack.pop()
        for w in d.out_neighbors[v] + d.in_neighbors[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    for v in support:
        if v not in seen:
            return v
    return None


def eulerian_circuit(d: Digraph) -> ArcTrail:
    """Closed trail using every arc exactly once (Hierholzer).

    The next-arc rule is smallest-head-first and the start vertex is the
    smallest arc-bearing vertex, so the circuit is deterministic.
    """
    if d.size == 0:
        raise ValueError("digraph has no arcs")
    for v in range(d.order):
        if d.out_degree(v) != d.in_degree(v):
            raise ValueError(
                f"vertex {v} is unbalanced (out {d.out_degree(v)}, in {d.in_degree(v)})"
            )
    bad = _weakly_connected_on_support(d)
    if bad is not None:
        raise ValueError(f"arc-bearing vertices are disconnected (vertex {bad} unreachable)")

    start = min(v for v in range(d.order) if d.out_degree(v) > 0)
    ptr = [0] * d.order
    adj = d.out_neighbors
    stack = [start]
    path: list[int] = []
    while stack:
        v = stack[-1]
        if ptr[v] < len(adj[v]):
            stack.append(adj[v][ptr[v]])
            ptr[v] += 1
        else:
            path.append(stack.pop())
    path.reverse()
    trail = ArcTrail(tuple(path), closed=True)
    assert len(trail) == d.size
    return trail


def max_acyclic_set_size(d: Digraph, budget: int = DEFAULT_SET_BUDGET) -> int:
    """Largest |S| such that the subdigraph induced by S is acyclic.

    Branch and bound over include/exclude decisions with the trivial
    cardinality bound; exponential, intended for order <= ~20.  Raises
    BudgetExceeded rather than ever returning an unproven value.
    """
    n = d.order
    if is_acyclic(d):
        return n
    out = [set(a) for a in d.out_neighbors]
    chosen: list[int] = []
    in_set = [False] * n
    best = 0
    nodes = 0

    def creates_cycle(v: int) -> bool:
        # cycle through v inside chosen + {v}
        stack = [w for w in out[v] if in_set[w]]
        seen = set(stack)
        while stack:
            x = stack.pop()
            if x == v:
                return True
            for w in out[x]:
                if w == v:
                    return True
                if in_set[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def explore(v: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"max acyclic set search exceeded {budget} nodes", nodes)
        if v == n:
            best = max(best, len(chosen))
            return
        if len(chosen) + (n - v) <= best:
            return
        if not creates_cycle(v):
            in_set[v] = True
            chosen.append(v)
            explore(v + 1)
            chosen.pop()
            in_set[v] = False
        explore(v + 1)

    explore(0)
    return best


def subdivide_arc(d: Digraph, arc: Arc, t: int) -> tuple[Digraph, tuple[int, ...]]:
    """Replace ``arc`` = (u, v) by a directed path u -> x_0 -> ... -> x_{t-1} -> v.

    The t inserted vertices get the ids order..order+t-1 in path order and
    are returned alongside the new digraph.
    """
    u, v = arc
    if (u, v) not in d.arcs:
        raise ValueError(f"({u}, {v}) is not an arc")
    if t < 1:
        raise ValueError(f"need t >= 1 subdivisions, got {t}")
    inserted = tuple(range(d.order, d.order + t))
    arcs = set(d.arcs)
    arcs.remove((u, v))
    chain = (u,) + inserted + (v,)
    arcs.update(zip(chain, chain[1:]))
    return Digraph.of(d.order + t, arcs, d.label_map or None), inserted
