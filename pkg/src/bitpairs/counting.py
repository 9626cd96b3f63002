"""Exact counts of adjacent equal-bit pairs in binary strings.

Conventions used throughout the package:

* A *0-pair* is a position i with bits i and i+1 both 0; a *1-pair* likewise
  for 1s.  Under linear adjacency only positions 0..n-2 are considered; under
  circular adjacency position n-1 is also adjacent to position 0.
* ``z(n, k, m)`` is the number of length-n binary strings that start with 0
  and contain exactly k 0-pairs and m 1-pairs under linear adjacency.
* ``s_circular(n, k, m)`` counts all length-n strings, either leading bit,
  with exactly k 0-pairs and m 1-pairs under circular adjacency.

z is computed by five independent routes that the test-suite cross-checks
against each other:

* :func:`z_oracle` -- exhaustive enumeration, the ground truth;
* :func:`z_recur_split` -- memoized recurrence on the leading bits;
* :func:`z_recur_firstone` -- memoized recurrence on the first-1 position;
* :func:`z_reduce_to_m0` -- reduction to the m = 0 column;
* :func:`z_closed_m0` -- closed form for that column.

All counts are exact Python ints, so no n within reach of the fast methods
overflows.  Every function is a pure function of its arguments; memo caches
are explicit write-once maps, so concurrent callers can either share a cache
or use one per thread with identical results.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Callable, NamedTuple, Optional

DEFAULT_ORACLE_LIMIT = 20  # one oracle pass enumerates at most 2**20 strings

_MISSING = object()


class PairProfile(NamedTuple):
    """Length of a string together with its 0-pair and 1-pair counts."""

    n: int
    k: int
    m: int


class MemoCache(dict):
    """Write-once map from (n, k, m) triples to exact counts.

    Both recurrences key their memo entries by the full triple, so a single
    cache may be shared between them (and between threads: entries are
    immutable ints and rewriting an identical value is a no-op).  Rewriting a
    key with a *different* value raises, which turns any cache-corruption bug
    into a loud failure instead of a wrong count.
    """

    def __setitem__(self, key: tuple[int, int, int], value: int) -> None:
        old = self.get(key, _MISSING)
        if old is not _MISSING and old != value:
            raise ValueError(f"memo cache overwrite at {key}: {old} -> {value}")
        dict.__setitem__(self, key, value)


def binomial(a: int, b: int) -> int:
    """C(a, b), defined as 0 whenever a < 0, b < 0 or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _require_bits(b: str) -> None:
    if not b:
        raise ValueError("empty input")
    if set(b) - {"0", "1"}:
        raise ValueError(f"not a binary string: {b!r}")


def linear_pair_counts(b: str) -> PairProfile:
    """Profile of b under linear adjacency (wraparound excluded).

    k counts indices i in 0..n-2 with b[i] = b[i+1] = 0, m likewise for 1s.
    """
    _require_bits(b)
    k = m = 0
    for x, y in zip(b, b[1:]):
        if x == y:
            if x == "0":
                k += 1
            else:
                m += 1
    return PairProfile(len(b), k, m)


def circular_pair_counts(b: str) -> PairProfile:
    """Profile of b with position n-1 adjacent to position 0.

    Every ordered slot (i, i+1 mod n) for i in 0..n-1 is examined, so for
    n = 2 both orderings count and "00" yields k = 2.  Length below 2 is
    rejected: a single bit has no second position to pair with.
    """
    _require_bits(b)
    n = len(b)
    if n < 2:
        raise ValueError("circular adjacency undefined below length 2")
    k = m = 0
    for i in range(n):
        x = b[i]
        if x == b[(i + 1) % n]:
            if x == "0":
                k += 1
            else:
                m += 1
    return PairProfile(n, k, m)


def sd_encode(b: str) -> str:
    """Word over {S, D} describing each adjacent slot of b.

    Letter i is "S" when bits i and i+1 agree and "D" when they differ, so
    the result has length n-1 and its S-count equals k + m of the linear
    profile.
    """
    _require_bits(b)
    return "".join("S" if x == y else "D" for x, y in zip(b, b[1:]))


def wrap_parity_predicts_equal_ends(n: int, k: int, m: int) -> bool:
    """Whether any string with linear profile (n, k, m) has equal end bits.

    The bits flip exactly at the n-1-k-m "D" slots, so the ends agree iff
    that flip count is even, i.e. iff n + k + m is odd.
    """
    return (n + k + m) % 2 == 1


def z_base_case(n: int, k: int, m: int) -> Optional[int]:
    """Boundary value of z(n, k, m), or None when a recurrence is needed.

    Zero for non-positive n or negative k/m, and whenever k + m >= n (a
    length-n string only has n-1 adjacent slots).  When every slot is a pair
    (k + m = n - 1) the string is constant, and starting with 0 forces the
    all-zeros string: 1 for (k, m) = (n-1, 0), else 0.
    """
    if n <= 0 or k < 0 or m < 0:
        return 0
    if k + m >= n:
        return 0
    if k + m == n - 1:
        return 1 if (k == n - 1 and m == 0) else 0
    return None


# ---------------------------------------------------------------------------
# Route 1: the exhaustive oracle
# ---------------------------------------------------------------------------


def _check_oracle_n(n: int, limit: Optional[int]) -> None:
    lim = DEFAULT_ORACLE_LIMIT if limit is None else limit
    if n > lim:
        raise ValueError(f"oracle limit exceeded: n={n} > {lim}")


@lru_cache(maxsize=None)
def _linear_profile_histogram(n: int) -> dict[tuple[int, int], int]:
    # One pass per n over all 2**(n-1) strings that start with 0.
    hist: Counter = Counter()
    width = f"0{n}b"
    for v in range(1 << (n - 1)):
        p = linear_pair_counts(format(v, width))
        hist[p.k, p.m] += 1
    return dict(hist)


@lru_cache(maxsize=None)
def _circular_profile_histogram(n: int) -> dict[tuple[int, int], int]:
    hist: Counter = Counter()
    width = f"0{n}b"
    for v in range(1 << n):
        p = circular_pair_counts(format(v, width))
        hist[p.k, p.m] += 1
    return dict(hist)


def z_oracle(n: int, k: int, m: int, *, limit: Optional[int] = None) -> int:
    """z(n, k, m) by enumerating every length-n string that starts with 0.

    Ground truth for the formula-based routes.  The enumeration histograms
    all profiles of a given n in a single pass, so repeated queries at the
    same n cost nothing extra.  Exponential in n: refused above the oracle
    limit (default 20).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_oracle_n(n, limit)
    return _linear_profile_histogram(n).get((k, m), 0)


def s_circular_oracle(n: int, k: int, m: int, *, limit: Optional[int] = None) -> int:
    """Circular-adjacency count by enumerating all 2**n length-n strings."""
    if n < 2:
        raise ValueError("circular adjacency undefined below length 2")
    _check_oracle_n(n, limit)
    return _circular_profile_histogram(n).get((k, m), 0)


# ---------------------------------------------------------------------------
# Routes 2 and 3: memoized recurrences
# ---------------------------------------------------------------------------


def z_recur_split(n: int, k: int, m: int, cache: Optional[MemoCache] = None) -> int:
    """z via the leading-bit case split.

    A counted string starts with 00, 010 or 011; chopping the fixed prefix
    gives z(n,k,m) = z(n-1,k-1,m) + z(n-2,k,m) + z(n-2,m-1,k), the last term
    with roles swapped because the remainder starts with 1.  Evaluated with
    an explicit stack, so deep n cannot hit the interpreter recursion limit.
    """
    if cache is None:
        cache = MemoCache()
    key = (n, k, m)
    if key in cache:
        return cache[key]
    stack = [key]
    while stack:
        top = stack[-1]
        if top in cache:
            stack.pop()
            continue
        n_, k_, m_ = top
        base = z_base_case(n_, k_, m_)
        if base is not None:
            cache[top] = base
            stack.pop()
            continue
        if n_ == 2:  # (2, 0, 0): the single string 01
            cache[top] = 1
            stack.pop()
            continue
        kids = ((n_ - 1, k_ - 1, m_), (n_ - 2, k_, m_), (n_ - 2, m_ - 1, k_))
        missing = [t for t in kids if t not in cache]
        if missing:
            stack += missing
            continue
        cache[top] = cache[kids[0]] + cache[kids[1]] + cache[kids[2]]
        stack.pop()
    return cache[key]


def z_recur_firstone(n: int, k: int, m: int, cache: Optional[MemoCache] = None) -> int:
    """z via the position of the first 1.

    For non-boundary input, z(n,k,m) is the sum over f = 1..k+1 of
    z(n-f, m, k+1-f): everything before the first 1 is a block of f leading
    0s contributing f-1 0-pairs, and what remains is a smaller instance with
    the pair roles swapped.

    Writing j = k+1-f, the terms are z(c+j, m, j) along the constant
    diagonal c = n-k-1, so the sums of different (n, k) on one diagonal are
    prefixes of each other.  The evaluation shares those running prefixes
    instead of re-adding up to k+1 cached terms per memo entry, which is
    what makes this route usable at n in the hundreds; the values are the
    plain term-by-term sums either way.
    """
    if cache is None:
        cache = MemoCache()
    key = (n, k, m)
    got = cache.get(key, _MISSING)
    if got is not _MISSING:
        return got
    prefix: dict[tuple[int, int, int], int] = {}  # (c, m, t) -> sum of terms j <= t
    frontier: dict[tuple[int, int], int] = {}  # (c, m) -> largest t summed so far
    stack = [key]
    while stack:
        top = stack[-1]
        if top in cache:
            stack.pop()
            continue
        n_, k_, m_ = top
        base = z_base_case(n_, k_, m_)
        if base is not None:
            cache[top] = base
            stack.pop()
            continue
        c = n_ - k_ - 1
        t = frontier.get((c, m_), -1)
        if t >= k_:
            cache[top] = prefix[c, m_, k_]
            stack.pop()
            continue
        acc = prefix[c, m_, t] if t >= 0 else 0
        blocked = False
        while t < k_:
            j = t + 1
            term_key = (c + j, m_, j)
            v = cache.get(term_key, _MISSING)
            if v is _MISSING:
                v = z_base_case(c + j, m_, j)
                if v is None:
                    stack.append(term_key)
                    blocked = True
                    break
                cache[term_key] = v
            acc += v
            t = j
            prefix[c, m_, t] = acc
        frontier[c, m_] = t
        if not blocked:
            cache[top] = acc
            stack.pop()
    return cache[key]


# ---------------------------------------------------------------------------
# Routes 4 and 5: reduction to the m = 0 column and its closed form
# ---------------------------------------------------------------------------


def terquem_T(n: int, k: int) -> int:
    """Entry of the triangle C(floor((n+k)/2), k), OEIS A046854.

    Counts the strictly increasing, parity-alternating sequences of length k
    from {1..n} that start odd (and, from {1..n+1}, those that start even).
    k beyond n yields 0 through the binomial convention.
    """
    if n < 0 or k < 0:
        raise ValueError("triangle index out of range")
    return binomial((n + k) // 2, k)


def z_closed_m0(n: int, k: int) -> int:
    """Closed form of the 1-pair-free column: z(n, k, 0) = C(floor((n+k-1)/2), k)."""
    if n < 1 or k < 0 or k > n - 1:
        return 0
    return binomial((n + k - 1) // 2, k)


def z_reduce_to_m0(n: int, k: int, m: int) -> int:
    """z by expanding 1-runs back into a 1-pair-free string.

    Deleting every run of two or more 1s from a counted string leaves a
    string with no 1-pairs; re-injecting the runs is a weighted choice of
    injection sites and run lengths.  Summing over the number of deleted
    runs f gives, per f, the term

        C(k+f, f) * C(m-1, f-1) * z(n-m-f, k+f, 0)

    for strings not ending in 11, plus, when n+k+m is even (the only parity
    at which a counted string can end in 11),

        C(k+f-1, f-1) * C(m-1, f-1) * z(n-m-f, k+f-1, 0).

    Every z(., ., 0) value comes from the closed form, so this route runs in
    O(m) big-int operations.
    """
    base = z_base_case(n, k, m)
    if base is not None:
        return base
    if m == 0:
        return z_closed_m0(n, k)
    total = 0
    for f in range(1, m + 1):
        total += binomial(k + f, f) * binomial(m - 1, f - 1) * z_closed_m0(n - m - f, k + f)
    if (n + k + m) % 2 == 0:
        for f in range(1, m + 1):
            total += (
                binomial(k + f - 1, f - 1)
                * binomial(m - 1, f - 1)
                * z_closed_m0(n - m - f, k + f - 1)
            )
    return total


def z_auto(n: int, k: int, m: int) -> int:
    """z by the fastest applicable route.

    Boundary values come straight from :func:`z_base_case`, the m = 0 column
    from the closed form, everything else from the run-injection reduction.
    The recurrences are deliberately not used here so they stay available as
    independent cross-checks.
    """
    base = z_base_case(n, k, m)
    if base is not None:
        return base
    if m == 0:
        return z_closed_m0(n, k)
    return z_reduce_to_m0(n, k, m)


# ---------------------------------------------------------------------------
# The circular case
# ---------------------------------------------------------------------------


def s_circular(
    n: int, k: int, m: int, *, z: Callable[[int, int, int], int] = z_auto
) -> int:
    """Number of length-n strings with circular profile (k, m).

    Zero whenever n + k + m is odd: closing the wraparound slot either adds
    a pair or does not, and both outcomes force n + k + m even via the
    end-bit parity rule.  Otherwise the count splits over the leading bit
    and over whether the wraparound slot closes a pair:

        z(n,k,m) + z(n,k-1,m) + z(n,m,k) + z(n,m-1,k)

    where the mirrored arguments account for strings starting with 1 via bit
    inversion.  ``z`` selects the linear-count route (default: z_auto).
    """
    if n < 2:
        raise ValueError("circular adjacency undefined below length 2")
    if (n + k + m) % 2 == 1:
        return 0
    return z(n, k, m) + z(n, k - 1, m) + z(n, m, k) + z(n, m - 1, k)
