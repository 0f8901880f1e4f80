"""Exact exponential-time solvers for the chromatic parameters of small
digraphs: the ground-truth instruments behind every family-level claim.

parameter   defining coloring                direction
---------   ------------------------------   ---------
dc          acyclic                          minimize
h           proper and harmonious            minimize
dh          acyclic and harmonious           minimize
dac         acyclic and complete             maximize
psi         proper and complete              maximize

One backtracking core serves all five.  Vertices are branched in index
order; color-permutation symmetry is broken by allowing a vertex only one
brand-new color (so the first occurrence of each color always lands on the
least-index vertex that could take it).  Budgets are node counts, never
wall-clock, so runs are reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .digraph import Digraph
from .coloring import Coloring, check, complete_color_bound_floor

MIN_PARAMETERS = ("dc", "h", "dh")
MAX_PARAMETERS = ("dac", "psi")

_NEEDS = {
    # parameter -> (acyclic, proper, harmonious, complete)
    "dc": (True, False, False, False),
    "h": (False, True, True, False),
    "dh": (True, False, True, False),
    "dac": (True, False, False, True),
    "psi": (False, True, False, True),
}


@dataclass(frozen=True)
class OracleResult:
    parameter: str
    value: int | None
    witness: Coloring | None
    exhaustive: bool
    nodes: int
    elapsed: float
    note: str = ""

    def __post_init__(self):
        if self.witness is not None:
            assert self.value == self.witness.k


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = int(limit)
        self.used = 0


class _Interrupted(Exception):
    pass


def _search(d: Digraph, k: int, parameter: str, budget: _Budget) -> tuple[int, ...] | None:
    """Find an assignment with at most k colors satisfying the parameter's
    class constraints; for max parameters additionally require all k colors
    used and every ordered pair covered.  Returns None if none exists;
    raises _Interrupted on budget exhaustion."""
    need_acyclic, need_proper, need_harmonious, need_complete = _NEEDS[parameter]
    n = d.order
    out = d.out_neighbors
    inn = d.in_neighbors
    color = [0] * n
    pair = [[0] * (k + 1) for _ in range(k + 1)]
    state = {"uncovered": k * (k - 1), "free": d.size}

    def class_cycle_through(v: int, c: int) -> bool:
        # would adding v close a directed cycle inside class c?
        stack = [w for w in out[v] if color[w] == c]
        seen = set(stack)
        while stack:
            x = stack.pop()
            if x == v:
                return True
            for w in out[x]:
                if w == v:
                    return True
                if color[w] == c and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def assign(v: int, used: int) -> bool:
        if v == n:
            if need_complete:
                return used == k and state["uncovered"] == 0
            return True
        if need_complete:
            if k - used > n - v:
                return False
            if state["uncovered"] > state["free"]:
                return False
        limit = min(k, used + 1)
        for c in range(1, limit + 1):
            budget.used += 1
            if budget.used > budget.limit:
                raise _Interrupted
            ok = True
            incs: list[tuple[int, int]] = []
            decided = 0
            if need_proper:
                for w in out[v]:
                    if color[w] == c:
                        ok = False
                        break
                if ok:
                    for w in inn[v]:
                        if color[w] == c:
                            ok = False
                            break
            if ok and need_harmonious:
                for w in out[v]:
                    dc_ = color[w]
                    if dc_ and dc_ != c:
                        if pair[c][dc_] >= 1:
                            ok = False
                            break
                        pair[c][dc_] += 1
                        incs.append((c, dc_))
                if ok:
                    for w in inn[v]:
                        dc_ = color[w]
                        if dc_ and dc_ != c:
                            if pair[dc_][c] >= 1:
                                ok = False
                                break
                            pair[dc_][c] += 1
                            incs.append((dc_, c))
            if ok and need_complete:
                for w in out[v]:
                    dc_ = color[w]
                    if dc_:
                        decided += 1
                        if dc_ != c:
                            if pair[c][dc_] == 0:
                                state["uncovered"] -= 1
                            pair[c][dc_] += 1
                            incs.append((c, dc_))
                for w in inn[v]:
                    dc_ = color[w]
                    if dc_:
                        decided += 1
                        if dc_ != c:
                            if pair[dc_][c] == 0:
                                state["uncovered"] -= 1
                            pair[dc_][c] += 1
                            incs.append((dc_, c))
                state["free"] -= decided
            if ok and need_acyclic and class_cycle_through(v, c):
                ok = False
            if ok:
                color[v] = c
                if assign(v + 1, max(used, c)):
                    return True
                color[v] = 0
            # undo bookkeeping
            if need_complete:
                state["free"] += decided
            for (a, b) in incs:
                pair[a][b] -= 1
                if need_complete and a != b and pair[a][b] == 0:
                    state["uncovered"] += 1
        return False

    if assign(0, 0):
        return tuple(color)
    return None


def coloring_search(
    d: Digraph, k: int, parameter: str, budget: int
) -> tuple[tuple[int, ...] | None, int, bool]:
    """Decide a single fixed k: returns (assignment or None, nodes explored,
    completed).  completed=False means the budget ran out, so a None
    assignment proves nothing."""
    if parameter not in _NEEDS:
        raise ValueError(f"unknown parameter {parameter!r}")
    b = _Budget(budget)
    try:
        found = _search(d, k, parameter, b)
        return found, b.used, True
    except _Interrupted:
        return None, b.used, False


def _verify_witness(d: Digraph, parameter: str, witness: Coloring) -> None:
    """Re-verify a found witness through the checker; a solver bug must
    never surface as an accepted value."""
    report = check(d, witness)
    need_acyclic, need_proper, need_harmonious, need_complete = _NEEDS[parameter]
    assert not need_acyclic or report.acyclic, f"{parameter} witness not acyclic"
    assert not need_proper or report.proper, f"{parameter} witness not proper"
    assert not need_harmonious or report.harmonious, f"{parameter} witness not harmonious"
    assert not need_complete or report.complete, f"{parameter} witness not complete"


def exact_min(d: Digraph, parameter: str, budget: int) -> OracleResult:
    """Smallest k admitting the parameter's coloring, by trying k upward.

    Intended for order <= ~18 (dc) and <= ~16 (h, dh).  On budget
    exhaustion the partial result carries the best proven lower bound in
    its note and exhaustive=False.
    """
    if parameter not in MIN_PARAMETERS:
        raise ValueError(f"parameter {parameter!r} is not one of {MIN_PARAMETERS}")
    if d.order == 0:
        raise ValueError("empty digraph has no coloring")
    b = _Budget(budget)
    start = time.monotonic()
    for k in range(1, d.order + 1):
        try:
            found = _search(d, k, parameter, b)
        except _Interrupted:
            return OracleResult(
                parameter, None, None, False, b.used, time.monotonic() - start,
                note=f"budget exhausted while testing k={k}; every k < {k} is refuted",
            )
        if found is not None:
            assert max(found) == k, "a smaller palette would have been found earlier"
            witness = Coloring(k, found)
            _verify_witness(d, parameter, witness)
            return OracleResult(parameter, k, witness, True, b.used, time.monotonic() - start)
    raise AssertionError("one color per vertex always succeeds")


def exact_max(d: Digraph, parameter: str, budget: int) -> OracleResult:
    """Largest k admitting the parameter's coloring.

    k starts at min(order, floor of the arc-count color bound) and each k
    is tested independently downward: completeness is not monotone in k,
    so no interpolation is attempted.  Intended for order <= ~14.
    """
    if parameter not in MAX_PARAMETERS:
        raise ValueError(f"parameter {parameter!r} is not one of {MAX_PARAMETERS}")
    if d.order == 0:
        raise ValueError("empty digraph has no coloring")
    b = _Budget(budget)
    start = time.monotonic()
    k0 = min(d.order, max(1, complete_color_bound_floor(d.size)))
    for k in range(k0, 0, -1):
        try:
            found = _search(d, k, parameter, b)
        except _Interrupted:
            return OracleResult(
                parameter, None, None, False, b.used, time.monotonic() - start,
                note=f"budget exhausted while testing k={k}; no k in {k + 1}..{k0} admits one",
            )
        if found is not None:
            witness = Coloring(k, found)
            _verify_witness(d, parameter, witness)
            return OracleResult(parameter, k, witness, True, b.used, time.monotonic() - start)
    # possible for psi: a proper coloring need not cover both directions of
    # a pair, so some digraphs admit no complete proper coloring at all
    return OracleResult(
        parameter, None, None, True, b.used, time.monotonic() - start,
        note=f"no {parameter} coloring exists at any k <= {k0}",
    )
