"""Explicit enumeration of counted strings and the Terquem correspondence.

The functions here realize the sets whose sizes the counting module
computes, in lexicographic order, and implement the bijection between
1-pair-free strings and strictly increasing parity-alternating position
sequences (the sequences counted by the A046854 triangle).
"""

from __future__ import annotations

from typing import Optional, Sequence

from .counting import (
    DEFAULT_ORACLE_LIMIT,
    circular_pair_counts,
    linear_pair_counts,
)

_INVERT = str.maketrans("01", "10")


def invert_bits(b: str) -> str:
    """The bitwise complement; swaps the roles of k and m in any profile."""
    if not b:
        raise ValueError("empty input")
    if set(b) - {"0", "1"}:
        raise ValueError(f"not a binary string: {b!r}")
    return b.translate(_INVERT)


def _check_enum_n(n: int, limit: Optional[int]) -> None:
    lim = DEFAULT_ORACLE_LIMIT if limit is None else limit
    if n > lim:
        raise ValueError(f"oracle limit exceeded: n={n} > {lim}")


def enumerate_Z(
    n: int, k: int, m: int, *, limit: Optional[int] = None
) -> list[str]:
    """All length-n strings starting with 0 with linear profile (k, m).

    Lexicographic order; exhaustive scan of 2**(n-1) candidates, so the
    oracle limit applies.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_enum_n(n, limit)
    width = f"0{n}b"
    out = []
    for v in range(1 << (n - 1)):
        b = format(v, width)
        if linear_pair_counts(b)[1:] == (k, m):
            out.append(b)
    return out


def enumerate_circular(
    n: int, k: int, m: int, *, limit: Optional[int] = None
) -> list[str]:
    """All length-n strings (either leading bit) with circular profile (k, m).

    Lexicographic order; scans all 2**n candidates, so the oracle limit
    applies.
    """
    if n < 2:
        raise ValueError("circular adjacency undefined below length 2")
    _check_enum_n(n, limit)
    width = f"0{n}b"
    out = []
    for v in range(1 << n):
        b = format(v, width)
        if circular_pair_counts(b)[1:] == (k, m):
            out.append(b)
    return out


# ---------------------------------------------------------------------------
# The Terquem correspondence
# ---------------------------------------------------------------------------
#
# A length-n string starting with 0 and free of 1-pairs is determined by the
# set of adjacency slots holding its 0-pairs.  Slot i (1-indexed, bits i and
# i+1) holds a 0-pair exactly when bit i is 0, which pins slot parities: the
# i-th recorded slot must have the parity of i.  The slot sequences are thus
# exactly the strictly increasing sequences 1 <= t_1 < ... < t_k <= n-1 with
# t_i = i (mod 2), and both directions below run in linear time.


def to_terquem(b: str) -> tuple[int, ...]:
    """Slot positions of the 0-pairs of a 1-pair-free string starting with 0.

    Positions are 1-indexed: entry i means bits i and i+1 are both 0.  The
    result starts odd, alternates parity and stays within 1..n-1.
    """
    if not b:
        raise ValueError("empty input")
    if set(b) - {"0", "1"}:
        raise ValueError(f"not a binary string: {b!r}")
    if b[0] != "0":
        raise ValueError("not in Z(n,k,0): leading bit is 1")
    t = []
    for i, (x, y) in enumerate(zip(b, b[1:]), start=1):
        if x == y:
            if x == "1":
                raise ValueError("not in Z(n,k,0): contains a 1-pair")
            t.append(i)
    return tuple(t)


def _validate_terquem(t: Sequence[int], bound: int, start_parity: str) -> None:
    first = 1 if start_parity == "odd" else 0
    prev = 0
    for i, v in enumerate(t, start=1):
        if not 1 <= v <= bound:
            raise ValueError(f"invalid Terquem sequence: entry {v} outside 1..{bound}")
        if v <= prev:
            raise ValueError(
                "invalid Terquem sequence: entries must be strictly increasing"
            )
        if v % 2 != (first + i + 1) % 2:
            if i == 1:
                raise ValueError(
                    f"invalid Terquem sequence: first entry must be {start_parity}"
                )
            raise ValueError("invalid Terquem sequence: entries must alternate parity")
        prev = v


def from_terquem(t: Sequence[int], n: int) -> str:
    """The string in Z(n, len(t), 0) whose 0-pair slots are exactly t.

    Inverse of :func:`to_terquem`: the result starts with 0 and each later
    bit repeats its predecessor at a listed slot and flips otherwise.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _validate_terquem(t, n - 1, "odd")
    slots = set(t)
    bits = ["0"]
    for i in range(1, n):
        prev = bits[-1]
        bits.append(prev if i in slots else "1" if prev == "0" else "0")
    return "".join(bits)


def enumerate_terquem(
    universe_bound: int, k: int, start_parity: str = "odd"
) -> list[tuple[int, ...]]:
    """All length-k parity-alternating increasing sequences from {1..bound}.

    The odd-start variant begins with an odd entry and there are
    terquem_T(universe_bound, k) of them; the even-start variant begins even
    and there are terquem_T(universe_bound - 1, k).  Lexicographic order.
    """
    if universe_bound < 0:
        raise ValueError(f"universe_bound must be >= 0, got {universe_bound}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if start_parity not in ("odd", "even"):
        raise ValueError(f"start_parity must be 'odd' or 'even', got {start_parity!r}")
    first = 1 if start_parity == "odd" else 0
    out: list[tuple[int, ...]] = []

    def rec(i: int, lo: int, acc: tuple[int, ...]) -> None:
        if i > k:
            out.append(acc)
            return
        want = (first + i + 1) % 2  # parity required of entry i
        v = lo + 1
        if v % 2 != want:
            v += 1
        while v <= universe_bound:
            rec(i + 1, v, acc + (v,))
            v += 2

    rec(1, 0, ())
    return out
