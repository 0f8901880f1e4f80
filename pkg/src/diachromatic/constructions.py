"""Executable constructions and bound formulas for the cycle-product
families, each one verified by the coloring checker before it is returned.

Families covered:
  * minimal instances from products of factorized complete digraphs over a
    certified minimal base (and the iterated cycle-power / path-power
    specializations);
  * extensions of the base cycle by arc subdivision, keeping the coloring
    complete and acyclic;
  * harmonious colorings of shortened cycles via closed-trail unfolds of a
    trimmed complete digraph, with a bounded exhaustive search fallback;
  * the two-function scans bounding complete and harmonious colorings of
    cycle products from above/below;
  * the ceiling recurrence T(i) = ceil(n/(n-1) T(i-1)) and the derived
    exact dichromatic values for cycle powers.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .digraph import (
    Digraph,
    directed_cycle,
    complete_symmetric,
    eulerian_circuit,
    max_acyclic_set_size,
    subdivide_arc,
    DEFAULT_SET_BUDGET,
)
from .coloring import (
    Coloring,
    ColorScheme,
    check,
    class_pair_matrix,
    minimality_certificate,
)
from .transforms import (
    Factorization,
    hamiltonian_cycle_factorization,
    hamiltonian_path_factorization,
    lexicographic_power,
    tournament_split,
    unfold_complete_to_cycle,
    zykov_sum,
)
from . import oracles

DEFAULT_HARMONIOUS_BUDGET = 200_000_000


@dataclass(frozen=True)
class MinimalInstance:
    """A digraph together with a complete acyclic k-coloring on exactly
    k(k-1) arcs.  The certificate is re-verified at construction.

    ``block_of`` records, for products, which base vertex each product
    vertex came from (display metadata for cluster rendering)."""

    digraph: Digraph
    coloring: Coloring
    k: int
    provenance: str
    block_of: tuple[int, ...] | None = dataclasses.field(default=None, compare=False)

    def __post_init__(self):
        if self.coloring.k != self.k:
            raise ValueError("stated k disagrees with the coloring")
        if self.block_of is not None and len(self.block_of) != self.digraph.order:
            raise ValueError("block_of must cover every vertex")
        if not minimality_certificate(self.digraph, self.coloring):
            raise ValueError(f"certificate failed for {self.provenance}")


def product_minimal(
    base: MinimalInstance, factorizations: Sequence[Factorization]
) -> MinimalInstance:
    """Substitute, for the j-th vertex of base class i, the j-th factor of
    the i-th factorization, and color factor vertex l of class i with the
    composite color (i, l).

    Every ordered pair of composite colors ends up with exactly one arc:
    same-block pairs because the factors partition their complete digraph,
    cross-block pairs because the base coloring has exactly one arc per
    ordered class pair.  The output therefore passes the minimality
    certificate with sum(m_i) colors.
    """
    if len(factorizations) != base.k:
        raise ValueError(
            f"need one factorization per class: got {len(factorizations)} for k={base.k}"
        )
    classes = base.coloring.classes
    for i, (members, fact) in enumerate(zip(classes, factorizations), 1):
        if fact.q != len(members):
            raise ValueError(
                f"class {i} has {len(members)} vertices but its factorization has {fact.q} factors"
            )
    if not minimality_certificate(base.digraph, base.coloring):
        raise ValueError("base instance lost its certificate")

    components: list[Digraph | None] = [None] * base.digraph.order
    class_pos: dict[int, tuple[int, int]] = {}
    for i, (members, fact) in enumerate(zip(classes, factorizations), 1):
        for j, u in enumerate(members, 1):
            components[u] = fact.factors[j - 1]
            class_pos[u] = (i, j)
    product, assignment = zykov_sum(base.digraph, components)  # type: ignore[arg-type]

    scheme = ColorScheme(tuple(f.m for f in factorizations))
    colors = []
    labels = {}
    for p, (u, local) in enumerate(assignment.provenance):
        i, j = class_pos[u]
        colors.append(scheme.flat(i, local + 1))
        labels[p] = f"v{local + 1}@{i}.{j}"
    coloring = Coloring(scheme.total, tuple(colors))
    product = dataclasses.replace(product, labels=tuple(sorted(labels.items())))

    lo, hi = class_pair_matrix(product, coloring).off_diagonal_range()
    if (lo, hi) != (1, 1):
        raise AssertionError(f"off-diagonal pair counts in [{lo}, {hi}], expected exactly 1")
    return MinimalInstance(
        product,
        coloring,
        scheme.total,
        provenance=f"product[{base.provenance}; m={tuple(f.m for f in factorizations)}]",
        block_of=tuple(u for (u, _) in assignment.provenance),
    )


def cycle_power_minimal(n: int, i: int = 1) -> MinimalInstance:
    """Iterated product of directed n-cycles over the unfolded complete
    digraph: an n^(i+1)-minimal instance with a balanced coloring.

    The base cycle of length n^2-n is the unfold of the complete digraph on
    n vertices; every class has n-1 vertices, matching the n-1 factors of
    the Hamiltonian-cycle factorization, and the class sizes are preserved
    by each product step, so the same factorization feeds every level.
    """
    if n < 3 or n in (4, 6):
        raise ValueError(f"need n >= 3 with n not in {{4, 6}}, got {n}")
    if i < 1:
        raise ValueError(f"need i >= 1, got {i}")
    unfold = unfold_complete_to_cycle(n)
    inst = MinimalInstance(unfold.cycle, unfold.coloring, n, provenance=f"unfold[{n}]")
    fact = hamiltonian_cycle_factorization(n)
    for _ in range(i):
        inst = product_minimal(inst, [fact] * inst.k)
    assert inst.k == n ** (i + 1)
    return inst


def path_power_minimal(n: int, i: int = 1) -> MinimalInstance:
    """Iterated product of directed n-paths over the unfolded complete
    digraph on n+1 vertices (n even): the path factorization has n factors
    and every class of the base cycle of length n(n+1) has n vertices.

    The color count multiplies by n per level: (n+1) n^i after i steps.
    """
    if i < 1:
        raise ValueError(f"need i >= 1, got {i}")
    fact = hamiltonian_path_factorization(n)  # validates n even >= 2
    unfold = unfold_complete_to_cycle(n + 1)
    inst = MinimalInstance(unfold.cycle, unfold.coloring, n + 1, provenance=f"unfold[{n + 1}]")
    for _ in range(i):
        inst = product_minimal(inst, [fact] * inst.k)
    assert inst.k == (n + 1) * n**i
    return inst


def k2_k3_k4_over_c6() -> MinimalInstance:
    """The showcase mixed product: factorizations of the complete digraphs
    on 2, 3 and 4 vertices (two factors each) over the three classes of the
    6-cycle.  Order 18, size 72, 9-minimal."""
    unfold = unfold_complete_to_cycle(3)
    base = MinimalInstance(unfold.cycle, unfold.coloring, 3, provenance="unfold[3]")
    facts = [
        tournament_split(2),
        hamiltonian_cycle_factorization(3),
        tournament_split(4),
    ]
    return product_minimal(base, facts)


# ---------------------------------------------------------------------------
# canonical cycle products with permutation colorings

def _cycle_vertex_order(h: Digraph) -> tuple[int, ...]:
    """Visit order of a directed Hamiltonian cycle, starting at vertex 0."""
    if h.size != h.order or any(h.out_degree(v) != 1 for v in range(h.order)):
        raise ValueError("factor is not a single directed cycle")
    seq = [0]
    while True:
        nxt = h.out_neighbors[seq[-1]][0]
        if nxt == 0:
            break
        seq.append(nxt)
    if len(seq) != h.order:
        raise ValueError("factor cycle does not span all vertices")
    return tuple(seq)


def _product_coloring_from_factors(
    base_cycle: Digraph,
    base_colors: Sequence[int],
    factor_of: Sequence[int],
    fact: Factorization,
    n: int,
) -> tuple[Digraph, Coloring]:
    """Canonical product base_cycle[C_n] colored so that block x's fiber
    realizes factor ``factor_of[x]`` of ``fact``: canonical fiber position w
    maps to that factor's w-th cycle vertex, giving composite color
    (base color of x, factor vertex + 1)."""
    product, (assignment,) = lexicographic_power(base_cycle, directed_cycle(n), 1)
    orders = {j: _cycle_vertex_order(h) for j, h in enumerate(fact.factors, 1)}
    colors = []
    for (x, w) in assignment.provenance:
        i = base_colors[x]
        l = orders[factor_of[x]][w] + 1
        colors.append((i - 1) * n + l)
    return product, Coloring(n * n, tuple(colors))


def _class_members(base_colors: Sequence[int], k: int) -> list[list[int]]:
    members: list[list[int]] = [[] for _ in range(k)]
    for x, c in enumerate(base_colors):
        members[c - 1].append(x)
    return members


def extended_dac_coloring(n: int, t: int) -> tuple[Digraph, Coloring]:
    """Complete acyclic coloring of the cycle product with a lengthened
    base: the cycle of length n^2-n+t (1 <= t <= n) composed with the
    directed n-cycle, colored with n^2 colors.

    The unique base arc joining classes 1 and 2 is subdivided t times; the
    inserted vertices alternate colors 2, 1, ... and alternate between the
    second and first factor for their fibers, which keeps the base coloring
    complete and acyclic and hence the product coloring too.  Together with
    the upper-bound scan this pins the acyclic-complete maximum at n^2.
    """
    if n < 3 or n in (4, 6):
        raise ValueError(f"need n >= 3 with n not in {{4, 6}}, got {n}")
    if not (1 <= t <= n):
        raise ValueError(f"need 1 <= t <= {n}, got {t}")
    unfold = unfold_complete_to_cycle(n)
    cycle = unfold.cycle
    base_colors = list(unfold.coloring.assignment)
    n0 = cycle.order

    # the one arc colored (1, 2) on the base cycle
    joins = [
        p for p in range(n0)
        if base_colors[p] == 1 and base_colors[(p + 1) % n0] == 2
    ]
    assert len(joins) == 1, "the unfold coloring realizes each ordered pair once"
    tail = joins[0]
    head = (tail + 1) % n0

    members = _class_members(base_colors, n)
    members[0] = members[0][members[0].index(tail):] + members[0][: members[0].index(tail)]
    members[1] = members[1][members[1].index(head):] + members[1][: members[1].index(head)]
    factor_of = [0] * n0
    for mem in members:
        for j, x in enumerate(mem, 1):
            factor_of[x] = j

    extended, inserted = subdivide_arc(cycle, (tail, head), t)
    for l, x in enumerate(inserted):
        base_colors.append(2 if l % 2 == 0 else 1)
        factor_of.append(2 if l % 2 == 0 else 1)

    base_coloring = Coloring(n, tuple(base_colors))
    base_report = check(extended, base_coloring)
    assert base_report.complete and base_report.acyclic

    fact = hamiltonian_cycle_factorization(n)
    product, coloring = _product_coloring_from_factors(
        extended, base_colors, factor_of, fact, n
    )
    report = check(product, coloring)
    if not (report.complete and report.acyclic):
        raise AssertionError(f"extended coloring failed verification: {report.summary()}")
    return product, coloring


@dataclass(frozen=True)
class HarmoniousOutcome:
    """Result of coloring a shortened cycle product harmoniously with n^2
    colors.  Never silent: a missing coloring is either a proven refutation
    (exhaustive=True via status 'refuted') or an explicit budget failure."""

    digraph: Digraph
    colors: int
    coloring: Coloring | None
    status: str  # constructed | found-by-search | refuted | budget-exhausted
    method: str
    nodes: int

    @property
    def resolved(self) -> bool:
        return self.status in ("constructed", "found-by-search", "refuted")


def trimmed_harmonious_coloring(
    n: int, t: int, budget: int = DEFAULT_HARMONIOUS_BUDGET
) -> HarmoniousOutcome:
    """Harmonious proper n^2-coloring of the cycle of length n^2-n-t
    (1 <= t < n) composed with the directed n-cycle, when one exists.

    For t >= 2 the base coloring comes from a closed trail of the complete
    digraph with a directed t-cycle removed (removal keeps every vertex
    in/out balanced, so a trail exists); block fibers take distinct factors
    and every ordered color pair is realized at most once.  For t = 1 no
    closed trail can miss exactly one arc (the missing arc set must be
    balanced), so a bounded exhaustive search decides the instance; a
    refutation is reported as such, with the search exhausted.
    """
    if n < 3 or n in (4, 6):
        raise ValueError(f"need n >= 3 with n not in {{4, 6}}, got {n}")
    if not (1 <= t < n):
        raise ValueError(f"need 1 <= t < {n}, got {t}")
    m = n * n - n - t
    k = n * n

    if t >= 2:
        removed = [(x, (x + 1) % t) for x in range(t)]
        trimmed = Digraph.of(n, complete_symmetric(n).arcs - set(removed))
        trail = eulerian_circuit(trimmed)
        seq = trail.vertices[:-1]
        assert len(seq) == m
        base = directed_cycle(m)
        base_colors = [x + 1 for x in seq]
        members = _class_members(base_colors, n)
        factor_of = [0] * m
        for mem in members:
            for j, x in enumerate(mem, 1):
                factor_of[x] = j
        fact = hamiltonian_cycle_factorization(n)
        product, coloring = _product_coloring_from_factors(
            base, base_colors, factor_of, fact, n
        )
        report = check(product, coloring)
        if not (report.proper and report.harmonious):
            raise AssertionError(f"trail coloring failed verification: {report.summary()}")
        assert len({c for c in coloring.assignment}) == k
        return HarmoniousOutcome(
            product, k, coloring, "constructed", f"closed trail minus a {t}-cycle", 0
        )

    # t == 1: decide by bounded exhaustive search on the product itself
    product, _ = lexicographic_power(directed_cycle(m), directed_cycle(n), 1)
    found, nodes, completed = oracles.coloring_search(product, k, "h", budget)
    if found is not None:
        coloring = Coloring(k, found)
        report = check(product, coloring)
        assert report.proper and report.harmonious
        # fewer colors would contradict the scan's lower bound of n^2
        assert len(set(found)) == k
        return HarmoniousOutcome(product, k, coloring, "found-by-search", "exhaustive search", nodes)
    if completed:
        return HarmoniousOutcome(product, k, None, "refuted", "exhaustive search", nodes)
    return HarmoniousOutcome(product, k, None, "budget-exhausted", "exhaustive search", nodes)


# ---------------------------------------------------------------------------
# two-function bound scans

@dataclass(frozen=True)
class BoundsProfile:
    """Evaluations of the class-size tradeoff functions for the product of
    the m-cycle with the n-cycle, over every class size x = 1..mn.

    f counts how many classes of size x fit in mn vertices (floor for the
    upper scan, ceiling for the lower scan); g(x) = x(n+1)+1 counts how
    many classes the closed neighborhood of a size-x class can reach.  Any
    complete coloring satisfies k <= max_x min(f, g); any harmonious
    coloring satisfies k >= min_x max(f, g).  Scanning every x in 1..mn
    brackets both extrema: beyond x = mn, min(f, g) falls to zero and
    max(f, g) >= g exceeds every scanned value.
    """

    m: int
    n: int
    f_floor: tuple[int, ...]
    f_ceil: tuple[int, ...]
    g: tuple[int, ...]
    dac_upper: int
    dac_witness_x: int
    h_lower: int
    h_witness_x: int

    def f_floor_at(self, x: int) -> int:
        return self.f_floor[x - 1]

    def f_ceil_at(self, x: int) -> int:
        return self.f_ceil[x - 1]

    def g_at(self, x: int) -> int:
        return self.g[x - 1]


def scan_bounds(m: int, n: int) -> BoundsProfile:
    if m < 3 or n < 3:
        raise ValueError(f"need m, n >= 3, got m={m}, n={n}")
    total = m * n
    f_floor, f_ceil, g = [], [], []
    dac_best, dac_x = -1, 0
    h_best, h_x = None, 0
    for x in range(1, total + 1):
        ff = total // x
        fc = -(-total // x)
        gg = x * (n + 1) + 1
        f_floor.append(ff)
        f_ceil.append(fc)
        g.append(gg)
        lo = min(ff, gg)
        if lo > dac_best:
            dac_best, dac_x = lo, x
        hi = max(fc, gg)
        if h_best is None or hi < h_best:
            h_best, h_x = hi, x
    return BoundsProfile(
        m, n, tuple(f_floor), tuple(f_ceil), tuple(g),
        dac_best, dac_x, h_best, h_x,
    )


def dac_upper_profile(m: int, n: int) -> BoundsProfile:
    """Profile whose ``dac_upper`` bounds every complete coloring of the
    (m, n) cycle product from above."""
    return scan_bounds(m, n)


def h_lower_profile(m: int, n: int) -> BoundsProfile:
    """Profile whose ``h_lower`` bounds every harmonious coloring of the
    (m, n) cycle product from below."""
    return scan_bounds(m, n)


# ---------------------------------------------------------------------------
# ceiling recurrence and dichromatic formulas

@dataclass(frozen=True)
class RecurrenceTable:
    """Exact values of T(0..i_max) for T(i) = ceil(n/(n-1) T(i-1)), T(0)=1,
    plus an empirical growth constant fitted at ``fit_index`` and the exact
    rational residuals T(i) - c (n/(n-1))^i."""

    n: int
    values: tuple[int, ...]
    fit_index: int
    c_estimate: Fraction
    c_delta: Fraction
    residuals: tuple[Fraction, ...]

    def c_float(self) -> float:
        return float(self.c_estimate)


def ceiling_ratio_table(n: int, i_max: int, fit_index: int | None = None) -> RecurrenceTable:
    """Compute the recurrence with exact integer arithmetic (ceilings of
    rationals, no floating point), estimate the growth constant at the
    largest computed index by default, and report exact residuals.

    The estimate converges from below as the fit index grows; ``c_delta``
    reports the change from the previous index so callers can judge
    convergence.  Residuals near the fit index are biased toward zero by
    construction, so window checks should fit far beyond the indices they
    inspect.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if i_max < 0:
        raise ValueError(f"need i_max >= 0, got {i_max}")
    if fit_index is None:
        fit_index = i_max
    top = max(i_max, fit_index, 1)
    values = [1]
    for _ in range(top):
        values.append(-(-n * values[-1] // (n - 1)))
    ratio = Fraction(n, n - 1)
    c = Fraction(values[fit_index]) / ratio**fit_index
    prev = Fraction(values[fit_index - 1]) / ratio ** (fit_index - 1) if fit_index >= 1 else c
    residuals = tuple(Fraction(values[i]) - c * ratio**i for i in range(i_max + 1))
    return RecurrenceTable(
        n, tuple(values[: i_max + 1]), fit_index, c, abs(c - prev), residuals
    )


def scaled_power_floor(c: Fraction, n: int, i: int) -> int:
    """floor(c * (n/(n-1))^i) with exact rational arithmetic."""
    return math.floor(c * Fraction(n, n - 1) ** i)


def dc_product_lower_bound(
    d: Digraph, dc_fiber: int, budget: int = DEFAULT_SET_BUDGET
) -> tuple[int, bool]:
    """Lower bound ceil(dc_fiber * order / r) on the acyclic chromatic
    number of d composed with any fiber whose own value is dc_fiber, where
    r is the largest acyclic vertex set of d.

    The bound is exact (flag True) when d is recognized as a directed
    cycle: a cycle is a circulant digraph whose first r+1 vertices induce
    an acyclic segment.  Otherwise the flag is False and the value is a
    bound only.
    """
    r = max_acyclic_set_size(d, budget)
    if r == 0:
        raise ValueError("digraph has no vertices")
    bound = -(-dc_fiber * d.order // r)
    return bound, _is_directed_cycle(d)


def _is_directed_cycle(d: Digraph) -> bool:
    if d.order < 2 or d.size != d.order:
        return False
    if any(d.out_degree(v) != 1 or d.in_degree(v) != 1 for v in range(d.order)):
        return False
    seen = 1
    v = d.out_neighbors[0][0]
    while v != 0:
        seen += 1
        v = d.out_neighbors[v][0]
    return seen == d.order


def dc_cycle_power(n: int, i: int) -> int:
    """Exact acyclic chromatic number of the i-th cycle power family member
    with base length n^2-n: ceil((n^2-n)/(n^2-n-1) * T_n(i)), evaluated
    with exact rational arithmetic."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if i < 1:
        raise ValueError(f"need i >= 1, got {i}")
    t_i = ceiling_ratio_table(n, i).values[i]
    m = n * n - n
    return -(-m * t_i // (m - 1))
