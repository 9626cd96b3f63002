"""Rendering count tables and the A046854 triangle to diffable text.

Run:  python3 demos/tables_and_triangle.py
"""

from bitpairs import (
    parse_z_table,
    render_terquem_triangle,
    render_z_table,
    z_table,
)

print("Every (k, m) cell for one length, zeros kept so the zero pattern is")
print("visible.  Linear mode, n = 5 (cells sum to 2^4 = 16):")
print()
print(render_z_table(5, "linear", "csv"))

print("Circular mode ranges up to k = n because the all-zeros ring pairs at")
print("every slot.  n = 4 (cells sum to 2^4 = 16):")
print()
print(render_z_table(4, "circular", "csv"))

table = z_table(6, "circular")
print(f"z_table(6, circular): {len(table.cells)} cells, total {table.total()} = 2^6")
round_tripped = parse_z_table(render_z_table(6, "circular", "tsv"), "tsv")
print(f"tsv round-trip reproduces the table exactly: {round_tripped == table}")
print()

print("The triangle T(n,k) = C(floor((n+k)/2), k), first 8 rows:")
rows: dict[int, list[int]] = {}
for line in render_terquem_triangle(8, "csv").splitlines()[1:]:
    n, k, t = (int(x) for x in line.split(","))
    rows.setdefault(n, []).append(t)
for n, vals in rows.items():
    print(f"  n={n}: {' '.join(str(v) for v in vals)}")
print()

print("b-file form (1-based running index, read by rows) for OEIS diffing:")
print()
print(render_terquem_triangle(5, "bfile"))
print("Writing more rows and comparing against the published A046854 b-file")
print("is a one-liner:  bitpairs triangle --rows 100 --format bfile --out b046854.txt")
