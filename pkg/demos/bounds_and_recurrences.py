"""The two-function bound scans and the ceiling recurrence.

For the product of an m-cycle with an n-cycle, class sizes trade off
against reachable classes: f(x) ~ mn/x classes fit, g(x) = x(n+1)+1
classes are reachable from a class of size x.  Scanning x gives an upper
bound for complete colorings and a lower bound for harmonious ones.

Run:  python demos/bounds_and_recurrences.py
"""

import diachromatic as dx

print("=" * 72)
print("1. Upper bound scan for complete colorings (lengthened bases)")
print("=" * 72)
n = 3
for t in range(1, n + 1):
    m = n * n - n + t
    p = dx.dac_upper_profile(m, n)
    print(
        f"m={m:2d}, n={n}: max over x of min(floor(mn/x), x(n+1)+1) = "
        f"{p.dac_upper} at x={p.dac_witness_x}"
    )
print("the cap stays at n^2 = 9 for every lengthening 1 <= t <= n")

print()
print("sample of the two curves at m=7, n=3:")
p = dx.dac_upper_profile(7, 3)
print("  x      :", *[f"{x:4d}" for x in range(1, 8)])
print("  floor f:", *[f"{p.f_floor_at(x):4d}" for x in range(1, 8)])
print("  g      :", *[f"{p.g_at(x):4d}" for x in range(1, 8)])

print()
print("=" * 72)
print("2. Lower bound scan for harmonious colorings (shortened bases)")
print("=" * 72)
for (m, n2) in [(5, 3), (4, 3), (19, 5), (16, 5)]:
    p = dx.h_lower_profile(m, n2)
    print(
        f"m={m:2d}, n={n2}: min over x of max(ceil(mn/x), x(n+1)+1) = "
        f"{p.h_lower} at x={p.h_witness_x}"
    )

print()
print("=" * 72)
print("3. The ceiling recurrence T(i) = ceil(n/(n-1) T(i-1)), T(0) = 1")
print("=" * 72)
for n in (2, 3, 4, 5):
    table = dx.ceiling_ratio_table(n, 12)
    print(f"n={n}: {table.values}")

print()
print("n=2 doubles exactly; n=3 follows a floor form with an irrational constant:")
t3 = dx.ceiling_ratio_table(3, 60)
print(f"  c estimated at index 60: {float(t3.c_estimate):.10f} (delta {float(t3.c_delta):.2e})")
check = all(
    dx.scaled_power_floor(t3.c_estimate, 3, i) == t3.values[i] for i in range(31)
)
print(f"  floor(c (3/2)^i) reproduces T(i) for i <= 30: {check}")

print()
print("for n >= 4 the residual T(i) - c (n/(n-1))^i sits in (-n+2, 0]:")
for n in (4, 6, 8):
    table = dx.ceiling_ratio_table(n, 20, fit_index=150)
    lo = min(table.residuals)
    hi = max(table.residuals)
    print(f"  n={n}: residuals span [{float(lo):+.4f}, {float(hi):+.4f}]")

print()
print("=" * 72)
print("4. Exact acyclic chromatic numbers of cycle powers")
print("=" * 72)
print("building block: a digraph composed with a fiber of known value needs")
print("at least ceil(value * order / r) colors, r = largest acyclic set.")
for (d, name, dch) in [
    (dx.directed_cycle(3), "triangle", 2),
    (dx.directed_cycle(6), "hexagon", 2),
    (dx.complete_symmetric(4), "complete on 4", 2),
]:
    bound, exact = dx.dc_product_lower_bound(d, dch)
    kind = "exact" if exact else "bound only"
    print(f"  base {name:14s}: {bound} ({kind})")

print()
print("closed form for the cycle-power family (base length n^2-n):")
for n in (3, 5):
    values = [dx.dc_cycle_power(n, i) for i in range(1, 7)]
    print(f"  n={n}: i=1..6 -> {values}")
