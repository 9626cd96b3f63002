"""Tables of counts, the A046854 triangle, and verification reports.

Rendering conventions, chosen so output survives text round-trips and can be
diffed byte-for-byte:

* numbers are decimal with no separators (counts are arbitrary-precision);
* lines end with LF; every rendering ends with a trailing newline;
* zero cells are kept: the zero pattern (boundary and parity) is itself one
  of the claims the suite tests;
* b-files use the OEIS convention of a 1-based running index over the
  triangle read by rows, so the first line is "1 1".
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .counting import (
    DEFAULT_ORACLE_LIMIT,
    MemoCache,
    linear_pair_counts,
    s_circular,
    s_circular_oracle,
    terquem_T,
    wrap_parity_predicts_equal_ends,
    z_auto,
    z_closed_m0,
    z_oracle,
    z_recur_firstone,
    z_recur_split,
    z_reduce_to_m0,
)

Z_TABLE_FORMATS = ("csv", "tsv", "json")
TRIANGLE_FORMATS = ("csv", "bfile")
VERIFY_MODES = ("linear", "circular", "both")


@dataclass(frozen=True)
class ZTable:
    """Every profile count for one string length, zero cells included.

    Linear tables cover 0 <= k, m <= n-1 and sum to 2**(n-1); circular
    tables cover 0 <= k, m <= n (the constant strings pair at all n slots)
    and sum to 2**n.
    """

    n: int
    mode: str  # "linear" or "circular"
    cells: tuple[tuple[int, int, int], ...]  # (k, m, count) sorted by (k, m)

    def total(self) -> int:
        return sum(c for _, _, c in self.cells)


def z_table(n: int, mode: str = "linear") -> ZTable:
    """All counts for length n in one table, computed by the fast methods."""
    if mode not in ("linear", "circular"):
        raise ValueError(f"unsupported mode: {mode!r} (supported: linear, circular)")
    if mode == "linear":
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        hi = n - 1
        count = z_auto
    else:
        if n < 2:
            raise ValueError("circular adjacency undefined below length 2")
        hi = n
        count = s_circular
    cells = tuple(
        (k, m, count(n, k, m)) for k in range(hi + 1) for m in range(hi + 1)
    )
    return ZTable(n, mode, cells)


def render_z_table(n: int, mode: str = "linear", fmt: str = "csv") -> str:
    """Table of (n, k, m, count) records in csv, tsv or json."""
    if fmt not in Z_TABLE_FORMATS:
        raise ValueError(
            f"unsupported format: {fmt!r} (supported: {', '.join(Z_TABLE_FORMATS)})"
        )
    table = z_table(n, mode)
    if fmt == "json":
        records = [{"n": n, "k": k, "m": m, "count": c} for k, m, c in table.cells]
        return json.dumps(records, indent=1) + "\n"
    sep = "," if fmt == "csv" else "\t"
    lines = [sep.join(("n", "k", "m", "count"))]
    lines += [sep.join((str(n), str(k), str(m), str(c))) for k, m, c in table.cells]
    return "\n".join(lines) + "\n"


def parse_z_table(text: str, fmt: str = "csv") -> ZTable:
    """Rebuild a ZTable from rendered text (the round-trip inverse).

    The mode is recovered from the cell count: a linear table has n**2
    cells, a circular one (n+1)**2.
    """
    if fmt not in Z_TABLE_FORMATS:
        raise ValueError(
            f"unsupported format: {fmt!r} (supported: {', '.join(Z_TABLE_FORMATS)})"
        )
    if fmt == "json":
        records = [(r["n"], r["k"], r["m"], r["count"]) for r in json.loads(text)]
    else:
        sep = "," if fmt == "csv" else "\t"
        rows = [r for r in csv.reader(io.StringIO(text), delimiter=sep) if r]
        if not rows or rows[0] != ["n", "k", "m", "count"]:
            raise ValueError("malformed table: missing header")
        records = [(int(a), int(b), int(c), int(d)) for a, b, c, d in rows[1:]]
    if not records:
        raise ValueError("malformed table: no records")
    n = records[0][0]
    if any(r[0] != n for r in records):
        raise ValueError("malformed table: inconsistent n")
    cells = tuple((k, m, c) for _, k, m, c in records)
    if len(cells) == (n + 1) ** 2:
        mode = "circular"
    elif len(cells) == n * n:
        mode = "linear"
    else:
        raise ValueError("malformed table: unexpected cell count")
    return ZTable(n, mode, cells)


def render_terquem_triangle(rows: int, fmt: str = "csv") -> str:
    """The triangle T(n, k) = C(floor((n+k)/2), k), rows n = 0..rows-1.

    csv emits one (n, k, T) record per entry with a header; bfile emits
    "index value" lines over the triangle read by rows, 1-based, matching
    the published A046854 b-file line for line.
    """
    if rows < 1:
        raise ValueError(f"rows must be >= 1, got {rows}")
    if fmt not in TRIANGLE_FORMATS:
        raise ValueError(
            f"unsupported format: {fmt!r} (supported: {', '.join(TRIANGLE_FORMATS)})"
        )
    entries = [(n, k, terquem_T(n, k)) for n in range(rows) for k in range(n + 1)]
    if fmt == "csv":
        lines = ["n,k,T"] + [f"{n},{k},{t}" for n, k, t in entries]
    else:
        lines = [f"{i} {t}" for i, (_, _, t) in enumerate(entries, start=1)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


class Mismatch(NamedTuple):
    n: int
    k: int
    m: int
    method: str
    got: int
    expected: int


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of cross-checking the fast methods against the oracles."""

    max_n: int
    mode: str
    methods: tuple[str, ...]
    checks: int
    mismatches: tuple[Mismatch, ...]
    elapsed: float

    @property
    def success(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        status = "PASS" if self.success else "FAIL"
        head = (
            f"{status}: {len(self.mismatches)} mismatches in {self.checks} checks; "
            f"mode={self.mode} max_n={self.max_n} "
            f"methods={','.join(self.methods)} elapsed={self.elapsed:.2f}s"
        )
        lines = [head]
        lines += [
            f"  {w.method} at (n={w.n}, k={w.k}, m={w.m}): got {w.got}, expected {w.expected}"
            for w in self.mismatches
        ]
        return "\n".join(lines)


def verify_all(
    max_n: int, mode: str = "both", *, limit: Optional[int] = None
) -> VerifyReport:
    """Compare every counting route against the oracles up to max_n.

    Covers, per mode, the full (n, k, m) grid with 0 <= k, m <= n for the
    four fast linear methods, the closed form on the m = 0 column, and the
    circular formula; plus, always, the end-bit parity rule over every
    string and the z(n,0,m) = z(n-1,m,0) identity.  The report lists every
    mismatch sorted by (n, k, m, method); success means none.
    """
    if mode not in VERIFY_MODES:
        raise ValueError(f"unsupported mode: {mode!r} (supported: {', '.join(VERIFY_MODES)})")
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    lim = DEFAULT_ORACLE_LIMIT if limit is None else limit
    if max_n > lim:
        raise ValueError(f"oracle limit exceeded: max_n={max_n} > {lim}")

    start = time.perf_counter()
    mismatches: list[Mismatch] = []
    checks = 0

    def compare(n: int, k: int, m: int, method: str, got: int, expected: int) -> None:
        nonlocal checks
        checks += 1
        if got != expected:
            mismatches.append(Mismatch(n, k, m, method, got, expected))

    do_linear = mode in ("linear", "both")
    do_circular = mode in ("circular", "both")
    methods: list[str] = []
    if do_linear:
        methods += ["split", "first-one", "reduce", "auto", "closed"]
    if do_circular:
        methods += ["circular"]
    methods += ["end-parity", "column-collapse"]

    if do_linear:
        split_cache = MemoCache()
        firstone_cache = MemoCache()
        for n in range(1, max_n + 1):
            for k in range(n + 1):
                for m in range(n + 1):
                    want = z_oracle(n, k, m, limit=limit)
                    compare(n, k, m, "split", z_recur_split(n, k, m, split_cache), want)
                    compare(
                        n, k, m, "first-one",
                        z_recur_firstone(n, k, m, firstone_cache), want,
                    )
                    compare(n, k, m, "reduce", z_reduce_to_m0(n, k, m), want)
                    compare(n, k, m, "auto", z_auto(n, k, m), want)
                    if m == 0:
                        compare(n, k, 0, "closed", z_closed_m0(n, k), want)

    if do_circular:
        for n in range(2, max_n + 1):
            for k in range(n + 1):
                for m in range(n + 1):
                    compare(
                        n, k, m, "circular",
                        s_circular(n, k, m),
                        s_circular_oracle(n, k, m, limit=limit),
                    )

    # end-bit parity rule, checked against every string of every length
    for n in range(1, max_n + 1):
        width = f"0{n}b"
        reported: set[tuple[int, int]] = set()
        for v in range(1 << n):
            b = format(v, width)
            _, k, m = linear_pair_counts(b)
            checks += 1
            predicted = wrap_parity_predicts_equal_ends(n, k, m)
            if (b[0] == b[-1]) != predicted and (k, m) not in reported:
                reported.add((k, m))
                mismatches.append(
                    Mismatch(n, k, m, "end-parity", int(b[0] == b[-1]), int(predicted))
                )

    # the 0-pair-free column collapses to the previous length's m = 0 column
    for n in range(1, max_n + 1):
        for m in range(max(0, n - 1)):
            compare(n, 0, m, "column-collapse", z_auto(n, 0, m), z_auto(n - 1, m, 0))

    mismatches.sort(key=lambda w: (w.n, w.k, w.m, w.method))
    return VerifyReport(
        max_n=max_n,
        mode=mode,
        methods=tuple(methods),
        checks=checks,
        mismatches=tuple(mismatches),
        elapsed=time.perf_counter() - start,
    )
