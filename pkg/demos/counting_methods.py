"""Tour of the five counting routes and where each one earns its keep.

Run:  python3 demos/counting_methods.py
"""

import time

from bitpairs import (
    MemoCache,
    s_circular,
    s_circular_oracle,
    z_auto,
    z_closed_m0,
    z_oracle,
    z_recur_firstone,
    z_recur_split,
    z_reduce_to_m0,
)

print("How many length-8 binary strings, arranged in a ring, have exactly")
print("two adjacent 00 pairs and two adjacent 11 pairs?")
print()
print(f"  formula:      {s_circular(8, 2, 2)}")
print(f"  brute force:  {s_circular_oracle(8, 2, 2)}")
print()

print("The linear count z(n,k,m) fixes a leading 0 and drops the wraparound")
print("adjacency.  Five independent routes compute it:")
print()
n, k, m = 12, 3, 2
routes = [
    ("oracle (enumerate 2^11 strings)", lambda: z_oracle(n, k, m)),
    ("leading-bit recurrence", lambda: z_recur_split(n, k, m)),
    ("first-1-position recurrence", lambda: z_recur_firstone(n, k, m)),
    ("reduction to the m=0 column", lambda: z_reduce_to_m0(n, k, m)),
    ("auto dispatch", lambda: z_auto(n, k, m)),
]
for name, fn in routes:
    print(f"  z({n},{k},{m}) = {fn():>4}   via {name}")
print()

print("The m = 0 column needs no recursion at all: z(n,k,0) is the single")
print("binomial C(floor((n+k-1)/2), k).")
for kk in range(6):
    print(f"  z(20,{kk},0) = {z_closed_m0(20, kk)}")
print()

print("Counts are exact Python integers, so nothing overflows at scale:")
t0 = time.perf_counter()
big = z_auto(500, 120, 80)
dt = time.perf_counter() - t0
print(f"  z(500,120,80) has {len(str(big))} digits ({dt * 1000:.1f} ms)")
print(f"  = {big}")
print()

print("Both recurrences accept a shared write-once memo cache; the split")
print("recurrence swaps the roles of k and m mid-recursion, so sharing one")
print("cache across methods reuses those entries:")
shared = MemoCache()
a = z_recur_split(60, 10, 8, shared)
b = z_recur_firstone(60, 10, 8, shared)
print(f"  z(60,10,8) = {a} (split) = {b} (first-one), cache holds {len(shared)} entries")
