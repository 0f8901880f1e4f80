"""Exact oracles against constructed values, including one refutation.

Every chromatic parameter here is recomputed from scratch by backtracking
search with the witness re-verified by the checker, so formula-level claims
get an independent ground truth at desk scale.

Run:  python demos/oracle_crosschecks.py
"""

import diachromatic as dx

BUDGET = 10**8


def product(m, n):
    d, _ = dx.lexicographic_power(dx.directed_cycle(m), dx.directed_cycle(n), 1)
    return d


print("=" * 72)
print("1. Acyclic chromatic number: formula vs oracle")
print("=" * 72)
d = product(6, 3)
formula = dx.dc_cycle_power(3, 1)
oracle = dx.exact_min(d, "dc", BUDGET)
print(f"hexagon composed with triangle ({d.order} vertices, {d.size} arcs):")
print(f"  closed form: {formula}")
print(f"  oracle:      {oracle.value}  ({oracle.nodes} nodes, exhaustive={oracle.exhaustive})")

print()
print("=" * 72)
print("2. Acyclic-complete maximum on unfolded cycles")
print("=" * 72)
for k in (3, 4, 5):
    u = dx.unfold_complete_to_cycle(k)
    r = dx.exact_max(u.cycle, "dac", BUDGET)
    print(f"cycle of length {u.cycle.order:2d}: maximum = {r.value} (expected {k})")

print()
print("=" * 72)
print("3. The parameter chain on a random digraph")
print("=" * 72)
import random

rng = random.Random(12)
arcs = [(u, v) for u in range(6) for v in range(6) if u != v and rng.random() < 0.5]
d = dx.Digraph.of(6, arcs)
dc = dx.exact_min(d, "dc", BUDGET).value
dac = dx.exact_max(d, "dac", BUDGET).value
h = dx.exact_min(d, "h", BUDGET).value
dh = dx.exact_min(d, "dh", BUDGET).value
bound = dx.complete_color_bound(d.size)
print(f"random digraph, order 6, size {d.size}:")
print(f"  dc={dc} <= dac={dac} <= (1+sqrt(1+4m))/2={bound:.3f} <= h={h},   dh={dh} <= h")

print()
print("=" * 72)
print("4. A refuted claimed value (shortened base, t = 1)")
print("=" * 72)
out = dx.trimmed_harmonious_coloring(3, 1, budget=10**9)
d = out.digraph
print(f"cycle of length 5 composed with the triangle: {d.order} vertices, {d.size} arcs.")
print(f"the scan gives a lower bound of {dx.h_lower_profile(5, 3).h_lower} colors, and the")
print(f"family claim would put the harmonious minimum exactly there (9).")
print(f"search outcome: {out.status} after {out.nodes} nodes -- no 9-coloring exists.")
oracle = dx.exact_min(d, "h", 10**9)
print(f"true harmonious minimum (exhaustive): {oracle.value}")
print()
print("for t = 2 the construction works and the claim holds:")
out2 = dx.trimmed_harmonious_coloring(3, 2)
report = dx.check(out2.digraph, out2.coloring)
print(f"  status {out2.status}: {report.summary()}")
