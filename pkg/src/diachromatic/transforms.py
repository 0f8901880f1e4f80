"""Zykov sums, lexicographic products, identifications/unfolds, and
factorizations of complete symmetric digraphs.

The vertex-splitting direction (unfold) and the vertex-merging direction
(amalgamation) are both certified by DetachmentMap values whose invariants
are validated at construction: the induced arc mapping must be a bijection
and every fiber must be an independent set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .digraph import (
    Arc,
    BudgetExceeded,
    Digraph,
    complete_symmetric,
    directed_cycle,
    eulerian_circuit,
)
from .coloring import Coloring, check, complete_color_bound_floor, minimality_certificate

DEFAULT_AMALGAMATION_BUDGET = 10_000_000
DEFAULT_FACTORIZATION_BUDGET = 50_000_000


# ---------------------------------------------------------------------------
# Zykov sum and lexicographic product

@dataclass(frozen=True)
class FamilyAssignment:
    """A base digraph with one component digraph per base vertex, plus the
    provenance of the product built from them: product vertex -> (base
    vertex, local vertex within its component)."""

    base: Digraph
    components: tuple[Digraph, ...]
    provenance: tuple[tuple[int, int], ...]

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        offs = [0]
        for h in self.components:
            offs.append(offs[-1] + h.order)
        return tuple(offs)

    def product_vertex(self, base_vertex: int, local: int) -> int:
        return self.offsets[base_vertex] + local

    def block(self, base_vertex: int) -> range:
        return range(self.offsets[base_vertex], self.offsets[base_vertex + 1])


def zykov_sum(base: Digraph, components: Sequence[Digraph]) -> tuple[Digraph, FamilyAssignment]:
    """Substitute components[u] for each base vertex u.

    Arcs: every component keeps its own arcs; every base arc u -> v becomes
    the full block of arcs from components[u] to components[v].  Product
    vertices are block-contiguous in base-vertex order, so colorings never
    depend on numbering conventions beyond the recorded provenance.
    """
    if len(components) != base.order:
        raise ValueError(
            f"need one component per base vertex: got {len(components)} for order {base.order}"
        )
    for u, h in enumerate(components):
        if h.order == 0:
            raise ValueError(f"component for base vertex {u} is empty")
    comps = tuple(components)
    offs = [0]
    for h in comps:
        offs.append(offs[-1] + h.order)
    arcs: list[Arc] = []
    for u, h in enumerate(comps):
        base_off = offs[u]
        for (a, b) in h.arc_list:
            arcs.append((base_off + a, base_off + b))
    for (u, v) in base.arc_list:
        for a in range(offs[u], offs[u + 1]):
            for b in range(offs[v], offs[v + 1]):
                arcs.append((a, b))
    provenance = tuple((u, a) for u, h in enumerate(comps) for a in range(h.order))
    product = Digraph.of(offs[-1], arcs)
    return product, FamilyAssignment(base, comps, provenance)


def lexicographic_power(d: Digraph, h: Digraph, i: int) -> tuple[Digraph, tuple[FamilyAssignment, ...]]:
    """Iterated product: one level substitutes h for every vertex; level j
    substitutes h into the level j-1 product.  Returns the final digraph and
    the per-level assignments (provenance chained through all levels)."""
    if i < 1:
        raise ValueError(f"need i >= 1, got {i}")
    current = d
    assignments = []
    for _ in range(i):
        current, assignment = zykov_sum(current, [h] * current.order)
        assignments.append(assignment)
    return current, tuple(assignments)


# ---------------------------------------------------------------------------
# identifications and unfolds

@dataclass(frozen=True)
class DetachmentMap:
    """Surjection from an unfolded digraph's vertices onto a base digraph's
    vertices, certified arc-exact at construction: the induced arc images
    are pairwise distinct arcs of the target and cover it, and every fiber
    is an independent set in the source."""

    source: Digraph
    target: Digraph
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source.order:
            raise ValueError("mapping must cover every source vertex")
        hit = set(self.mapping)
        if hit != set(range(self.target.order)):
            raise ValueError("mapping is not onto the target vertex set")
        images = set()
        for (u, v) in self.source.arcs:
            img = (self.mapping[u], self.mapping[v])
            if img[0] == img[1]:
                raise ValueError(f"fiber of {img[0]} is not independent: source arc ({u}, {v})")
            if img in images:
                raise ValueError(f"two source arcs map onto target arc {img}")
            if img not in self.target.arcs:
                raise ValueError(f"image arc {img} is missing from the target")
            images.add(img)
        if len(images) != self.target.size:
            raise ValueError(
                f"arc images cover {len(images)} of {self.target.size} target arcs"
            )

    def fiber(self, target_vertex: int) -> tuple[int, ...]:
        return tuple(v for v, t in enumerate(self.mapping) if t == target_vertex)


def identify(d: Digraph, u: int, v: int) -> tuple[Digraph, DetachmentMap]:
    """Merge two vertices, preserving the arc count exactly.

    Requires: no arc between u and v in either direction, disjoint
    out-neighborhoods and disjoint in-neighborhoods.  The merged vertex
    keeps min(u, v), ids above max(u, v) shift down by one, and the
    returned map sends every original vertex to its image.
    """
    if u == v or not (0 <= u < d.order and 0 <= v < d.order):
        raise ValueError(f"need two distinct vertices, got {u}, {v}")
    if d.has_arc(u, v) and d.has_arc(v, u):
        raise ValueError(f"vertices {u} and {v} are adjacent (2-cycle)")
    if d.has_arc(u, v) or d.has_arc(v, u):
        raise ValueError(f"an arc joins {u} and {v}; identifying would drop it")
    common_out = set(d.out_neighbors[u]) & set(d.out_neighbors[v])
    if common_out:
        raise ValueError(f"common out-neighbor {min(common_out)} of {u} and {v}")
    common_in = set(d.in_neighbors[u]) & set(d.in_neighbors[v])
    if common_in:
        raise ValueError(f"common in-neighbor {min(common_in)} of {u} and {v}")

    keep, drop = min(u, v), max(u, v)
    mapping = []
    for w in range(d.order):
        if w == drop:
            mapping.append(keep)
        elif w > drop:
            mapping.append(w - 1)
        else:
            mapping.append(w)
    arcs = {(mapping[a], mapping[b]) for (a, b) in d.arcs}
    merged = Digraph.of(d.order - 1, arcs)
    return merged, DetachmentMap(d, merged, tuple(mapping))


@dataclass(frozen=True)
class UnfoldResult:
    cycle: Digraph
    detachment: DetachmentMap
    coloring: Coloring


def unfold_complete_to_cycle(k: int) -> UnfoldResult:
    """Split the complete symmetric digraph on k vertices into the directed
    cycle of length k(k-1) along its Eulerian circuit.

    Cycle position p projects to the circuit's p-th vertex; coloring every
    position by its projection gives a balanced complete acyclic k-coloring
    with classes of size k-1, which certifies the cycle as k-minimal.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    kk = complete_symmetric(k)
    trail = eulerian_circuit(kk)
    seq = trail.vertices[:-1]
    cycle = directed_cycle(len(seq))
    detachment = DetachmentMap(cycle, kk, tuple(seq))
    coloring = Coloring(k, tuple(t + 1 for t in seq))
    report = check(cycle, coloring)
    assert report.complete and report.acyclic and report.balanced
    assert minimality_certificate(cycle, coloring)
    return UnfoldResult(cycle, detachment, coloring)


@dataclass(frozen=True)
class AmalgamationOutcome:
    """Result of searching for an identification onto a complete digraph.

    exhaustive=True means the answer is definitive: either a map was found
    or none exists.  exhaustive=False means the node budget ran out first.
    """

    detachment: DetachmentMap | None
    exhaustive: bool
    nodes: int

    @property
    def found(self) -> bool:
        return self.detachment is not None


def amalgamate_to_complete(d: Digraph, budget: int = DEFAULT_AMALGAMATION_BUDGET) -> AmalgamationOutcome:
    """Search for a sequence of arc-exact identifications from ``d`` onto the
    complete symmetric digraph on k vertices, where k(k-1) = size(d).

    A composed identification exists iff the vertex set can be partitioned
    into k independent classes with exactly one arc from each class to each
    other (then merging within classes step by step never violates the
    elementary preconditions), so the search runs over such partitions in
    canonical vertex order, which explores each partition once.  The found
    partition is replayed through ``identify`` as a defense-in-depth check.
    """
    m = d.size
    # k(k-1) = m has an integer root iff 1+4m is a perfect square
    k = complete_color_bound_floor(m)
    if k * (k - 1) != m:
        return AmalgamationOutcome(None, exhaustive=True, nodes=0)
    if k > d.order:
        return AmalgamationOutcome(None, exhaustive=True, nodes=0)

    n = d.order
    out = d.out_neighbors
    inn = d.in_neighbors
    color = [0] * n
    pair = [[0] * (k + 1) for _ in range(k + 1)]
    nodes = 0

    def assign(v: int, used: int) -> bool:
        nonlocal nodes
        if v == n:
            return used == k and all(
                pair[i][j] == 1 for i in range(1, k + 1) for j in range(1, k + 1) if i != j
            )
        if k - used > n - v:
            return False
        limit = min(k, used + 1)
        for c in range(1, limit + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("amalgamation search budget exhausted", nodes)
            ok = True
            incs = []
            for w in out[v]:
                dcol = color[w]
                if dcol:
                    if dcol == c or pair[c][dcol] >= 1:
                        ok = False
                        break
                    pair[c][dcol] += 1
                    incs.append((c, dcol))
            if ok:
                for w in inn[v]:
                    dcol = color[w]
                    if dcol:
                        if dcol == c or pair[dcol][c] >= 1:
                            ok = False
                            break
                        pair[dcol][c] += 1
                        incs.append((dcol, c))
            if ok:
                color[v] = c
                if assign(v + 1, max(used, c)):
                    return True
                color[v] = 0
            for (a, b) in incs:
                pair[a][b] -= 1
        return False

    try:
        found = assign(0, 0)
    except BudgetExceeded as e:
        return AmalgamationOutcome(None, exhaustive=False, nodes=e.nodes)
    if not found:
        return AmalgamationOutcome(None, exhaustive=True, nodes=nodes)

    mapping = tuple(c - 1 for c in color)
    target = complete_symmetric(k)
    detachment = DetachmentMap(d, target, mapping)
    _replay_identifications(d, mapping, k)
    return AmalgamationOutcome(detachment, exhaustive=True, nodes=nodes)


def _replay_identifications(d: Digraph, mapping: tuple[int, ...], k: int) -> None:
    """Merge each fiber pairwise through ``identify`` and assert the result
    is the complete digraph; every elementary step revalidates its own
    preconditions."""
    current = d
    where = list(range(d.order))  # original vertex -> current id
    for cls in range(k):
        fiber = [v for v in range(d.order) if mapping[v] == cls]
        rep = fiber[0]
        for other in fiber[1:]:
            current, dmap = identify(current, where[rep], where[other])
            where = [dmap.mapping[w] for w in where]
    assert current.size == k * (k - 1) and current.order == k
    assert current.arcs == complete_symmetric(k).arcs


# ---------------------------------------------------------------------------
# factorizations of complete symmetric digraphs

@dataclass(frozen=True)
class Factorization:
    """Arc-disjoint spanning factors partitioning the arcs of the complete
    symmetric digraph on m vertices.  Factor j's vertex l carries the
    relabel name (l, j), 1-based."""

    m: int
    factors: tuple[Digraph, ...]

    def relabel_name(self, factor: int, vertex: int) -> tuple[int, int]:
        """(l, j) for 1-based factor j and vertex position l = vertex + 1."""
        if not (1 <= factor <= len(self.factors)):
            raise ValueError(f"factor {factor} out of range")
        if not (0 <= vertex < self.m):
            raise ValueError(f"vertex {vertex} out of range")
        return (vertex + 1, factor)

    @property
    def q(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class FactorizationReport:
    ok: bool
    duplicate_arcs: tuple[Arc, ...]
    missing_arcs: tuple[Arc, ...]
    non_spanning_factors: tuple[int, ...]


def verify_factorization(f: Factorization) -> FactorizationReport:
    """Check the partition property directly: factors pairwise arc-disjoint,
    spanning, and jointly covering all m(m-1) arcs."""
    non_spanning = tuple(j for j, h in enumerate(f.factors) if h.order != f.m)
    seen: set[Arc] = set()
    duplicates: set[Arc] = set()
    for h in f.factors:
        for a in h.arcs:
            if a in seen:
                duplicates.add(a)
            seen.add(a)
    full = complete_symmetric(f.m).arcs
    missing = full - seen
    stray = seen - full
    ok = not duplicates and not missing and not stray and not non_spanning
    return FactorizationReport(
        ok,
        tuple(sorted(duplicates)),
        tuple(sorted(missing | stray)),
        non_spanning,
    )


def _checked(f: Factorization) -> Factorization:
    report = verify_factorization(f)
    if not report.ok:
        raise AssertionError(f"generated factorization failed verification: {report}")
    return f


def tournament_split(m: int) -> Factorization:
    """Partition of the complete symmetric digraph into the two transitive
    tournaments (increasing arcs and decreasing arcs): a factorization into
    exactly 2 factors, for any m >= 2."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    up = Digraph.of(m, ((u, v) for u in range(m) for v in range(u + 1, m)))
    down = Digraph.of(m, ((v, u) for u in range(m) for v in range(u + 1, m)))
    return _checked(Factorization(m, (up, down)))


def _walecki_cycles(n: int) -> list[list[int]]:
    """Undirected Hamiltonian cycles partitioning the edges of K_n, n odd.

    Hub vertex n-1 plus the classical zigzag paths on the even ring
    0..n-2: the j-th path starts at j and alternates j+1, j-1, j+2, ...
    """
    ring = n - 1
    half = ring // 2
    cycles = []
    for j in range(half):
        seq = [j]
        for s in range(1, ring):
            if s % 2 == 1:
                seq.append((j + (s + 1) // 2) % ring)
            else:
                seq.append((j - s // 2) % ring)
        cycles.append([n - 1] + seq)
    return cycles


def hamiltonian_cycle_factorization(
    n: int, budget: int = DEFAULT_FACTORIZATION_BUDGET
) -> Factorization:
    """Factorization of the complete symmetric digraph on n vertices into
    n-1 directed Hamiltonian cycles; n in {4, 6} is rejected (no such
    factorization exists there).

    Odd n uses the classical hub-and-zigzag decomposition of the undirected
    complete graph, every cycle taken in both orientations.  Even n >= 8 is
    found by backtracking over arc-disjoint directed Hamiltonian cycles
    under a node budget; the literature guarantees existence but gives no
    comparably simple closed form.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n in (4, 6):
        raise ValueError(f"no factorization into directed Hamiltonian cycles exists for n = {n}")
    if n % 2 == 1:
        factors = []
        for cyc in _walecki_cycles(n):
            fwd = [(cyc[i], cyc[(i + 1) % n]) for i in range(n)]
            factors.append(Digraph.of(n, fwd))
            factors.append(Digraph.of(n, [(b, a) for (a, b) in fwd]))
        return _checked(Factorization(n, tuple(factors)))
    return _checked(_even_cycle_factorization(n, budget))


def _even_cycle_factorization(n: int, budget: int) -> Factorization:
    avail = [[u != v for v in range(n)] for u in range(n)]
    cycles: list[list[Arc]] = []
    nodes = 0

    def one_cycle() -> bool:
        nonlocal nodes
        path = [0]
        used = [False] * n
        used[0] = True

        def extend() -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("cycle factorization search budget exhausted", nodes)
            u = path[-1]
            if len(path) == n:
                if not avail[u][0]:
                    return False
                arcs = [(path[i], path[(i + 1) % n]) for i in range(n)]
                for (a, b) in arcs:
                    avail[a][b] = False
                cycles.append(arcs)
                if len(cycles) == n - 1 or one_cycle():
                    return True
                cycles.pop()
                for (a, b) in arcs:
                    avail[a][b] = True
                return False
            for v in range(n):
                if not used[v] and avail[u][v]:
                    used[v] = True
                    path.append(v)
                    if extend():
                        return True
                    path.pop()
                    used[v] = False
            return False

        return extend()

    if not one_cycle():
        raise AssertionError(f"exhausted search without a decomposition for n = {n}")
    return Factorization(n, tuple(Digraph.of(n, arcs) for arcs in cycles))


def cyclic_sequencing(n: int) -> tuple[int, ...]:
    """Ordering of 0..n-1 (n even) whose partial sums mod n are pairwise
    distinct: 0, 1, n-2, 3, n-4, 5, ...  Odd n admits no such ordering of
    this form."""
    if n < 2 or n % 2 != 0:
        raise ValueError(f"cyclic sequencing requires even n >= 2, got {n}")
    seq = [0]
    for pos in range(2, n + 1):
        seq.append(pos - 1 if pos % 2 == 0 else n - pos + 1)
    sums = []
    total = 0
    for x in seq:
        total = (total + x) % n
        sums.append(total)
    assert len(set(sums)) == n, "partial sums must be pairwise distinct"
    return tuple(seq)


def hamiltonian_path_factorization(n: int) -> Factorization:
    """Factorization of the complete symmetric digraph on n vertices (n
    even) into n directed Hamiltonian paths: the partial-sum path of a
    cyclic-group sequencing plus its n translates."""
    if n < 2 or n % 2 != 0:
        raise ValueError(
            f"unsupported n = {n}: the cyclic group of odd order has no sequencing of this form"
        )
    seq = cyclic_sequencing(n)
    sums = []
    total = 0
    for x in seq:
        total = (total + x) % n
        sums.append(total)
    factors = []
    for g in range(n):
        path = [(s + g) % n for s in sums]
        arcs = list(zip(path, path[1:]))
        factors.append(Digraph.of(n, arcs))
    return _checked(Factorization(n, tuple(factors)))
