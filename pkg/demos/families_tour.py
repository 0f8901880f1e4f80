"""Tour of the digraph families: unfold a complete digraph into a long
cycle, factor complete digraphs into Hamiltonian cycles or paths, and stack
products whose colorings stay exactly one-arc-per-color-pair.

Run:  python demos/families_tour.py
"""

import diachromatic as dx

print("=" * 72)
print("1. Unfolding a complete digraph into a directed cycle")
print("=" * 72)

k = 4
u = dx.unfold_complete_to_cycle(k)
print(f"complete digraph on {k} vertices has {k}({k}-1) = {k * (k - 1)} arcs,")
print(f"so it unfolds into the directed cycle of length {u.cycle.order}.")
print(f"projection of each cycle position: {list(u.detachment.mapping)}")
sizes = [len(u.coloring.class_of(c)) for c in range(1, k + 1)]
report = dx.check(u.cycle, u.coloring)
print(f"induced coloring: class sizes {sizes}, properties: {report.summary()}")
print(f"certified {k}-minimal: {dx.minimality_certificate(u.cycle, u.coloring)}")

print()
print("=" * 72)
print("2. Factoring complete digraphs")
print("=" * 72)

f5 = dx.hamiltonian_cycle_factorization(5)
print(f"complete digraph on 5 vertices = {f5.q} arc-disjoint directed Hamiltonian cycles:")
for j, factor in enumerate(f5.factors, 1):
    print(f"  factor {j}: {factor.arc_list}")
print(f"partition verified: {dx.verify_factorization(f5).ok}")

f4 = dx.hamiltonian_path_factorization(4)
print(f"\ncomplete digraph on 4 vertices = {f4.q} directed Hamiltonian paths")
print(f"(translates of the partial-sum path of the sequencing {dx.cyclic_sequencing(4)}):")
for j, factor in enumerate(f4.factors, 1):
    print(f"  factor {j}: {factor.arc_list}")

print("\norders 4 and 6 admit no Hamiltonian-cycle factorization:")
try:
    dx.hamiltonian_cycle_factorization(4)
except ValueError as e:
    print(f"  n=4 -> {e}")

print()
print("=" * 72)
print("3. Products that keep exactly one arc per ordered color pair")
print("=" * 72)

inst = dx.k2_k3_k4_over_c6()
print("substituting factorized complete digraphs on 2, 3 and 4 vertices for")
print(f"the classes of the 6-cycle: order {inst.digraph.order}, size {inst.digraph.size},")
print(f"colors {inst.k}; size equals {inst.k}*{inst.k - 1} so the coloring is {inst.k}-minimal.")
matrix = dx.class_pair_matrix(inst.digraph, inst.coloring)
print(f"off-diagonal pair counts: min..max = {matrix.off_diagonal_range()}")

print()
for (n, i) in [(3, 1), (3, 2), (5, 1)]:
    inst = dx.cycle_power_minimal(n, i)
    print(
        f"cycle power n={n}, i={i}: order {inst.digraph.order:4d}, "
        f"size {inst.digraph.size:5d} = {inst.k}*{inst.k - 1}, colors {inst.k}"
    )
for n in (2, 4):
    inst = dx.path_power_minimal(n, 1)
    print(
        f"path power  n={n}, i=1: order {inst.digraph.order:4d}, "
        f"size {inst.digraph.size:5d} = {inst.k}*{inst.k - 1}, colors {inst.k}"
    )

print()
print("=" * 72)
print("4. DOT export (paste into Graphviz)")
print("=" * 72)
small = dx.unfold_complete_to_cycle(3)
from diachromatic.serialize import digraph_to_dot

print(digraph_to_dot(small.cycle, coloring=small.coloring, merge_symmetric=False))
