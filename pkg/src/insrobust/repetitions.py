"""Maximal repetitions (runs) and maximal periodicities.

A run is a factor whose exponent (length over minimal period) is at least 2
and which cannot be extended by one symbol in either direction without
strictly increasing its minimal period.  ``find_maximal_repetitions`` computes
the exact run set in O(n log n) by divide and conquer with Z-array
longest-common-extension lookups; ``runs_bruteforce`` recomputes it from the
definition for cross-validation, and ``maximal_periodicities`` relaxes the
exponent-2 floor, which some insertion witnesses fall below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import Word, _border

BRUTE_FORCE_BOUND = 64


@dataclass(frozen=True, order=True, slots=True)
class Run:
    """A maximal periodic factor: ``start`` and ``length`` locate it, ``period``
    is the minimal period of the factor."""

    start: int
    length: int
    period: int

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.start, self.length, self.period)


def _z_array(s: str) -> list[int]:
    # z[i] = length of the longest common prefix of s and s[i:]; z[0] = len(s)
    n = len(s)
    z = [0] * n
    if n == 0:
        return z
    z[0] = n
    left = right = 0
    for i in range(1, n):
        k = 0
        if i < right:
            k = min(right - i, z[i - left])
        while i + k < n and s[k] == s[i + k]:
            k += 1
        z[i] = k
        if i + k > right:
            left, right = i, i + k
    return z


def _z_match(pattern: str, text: str) -> list[int]:
    # out[i] = length of the longest common prefix of text[i:] and pattern,
    # capped at len(pattern).  Same two-pointer scheme as _z_array, but the
    # window tracks matches of text against the pattern's prefixes.
    zp = _z_array(pattern)
    m, n = len(pattern), len(text)
    out = [0] * n
    left = right = 0
    for i in range(n):
        k = 0
        if i < right:
            k = min(right - i, zp[i - left])
        while i + k < n and k < m and text[i + k] == pattern[k]:
            k += 1
        out[i] = k
        if i + k > right:
            left, right = i, i + k
    return out


def find_maximal_repetitions(w: Word) -> set[Run]:
    """All runs of ``w``, each reported once with its minimal period.

    Divide and conquer: a run crossing the midpoint of an interval contains a
    full period block immediately left or right of the split, so per split it
    suffices to test every block length against four extension arrays.  The
    candidates this produces are genuinely periodic but may be truncated
    fragments of longer runs or carry a non-minimal period; a global
    maximality filter plus a per-interval minimum over periods reduces them
    to the exact run set.
    """
    s = w.chars
    n = len(s)
    candidates: set[tuple[int, int, int]] = set()

    def walk(a: int, b: int) -> None:
        size = b - a
        if size < 2:
            return
        mid = a + size // 2
        walk(a, mid)
        walk(mid, b)
        sub = s[a:b]
        left_len = mid - a
        right_len = b - mid
        right_part = sub[left_len:]
        rev_left = sub[:left_len][::-1]
        rev_sub = sub[::-1]
        z_right = _z_array(right_part)
        z_rev_left = _z_array(rev_left)
        fwd_from = _z_match(right_part, sub)
        bwd_from = _z_match(rev_left, rev_sub)
        # block s[mid-p .. mid-1] inside the left half
        for p in range(1, left_len + 1):
            fwd = fwd_from[left_len - p]
            bwd = z_rev_left[p] if p < left_len else 0
            if fwd + bwd >= p:
                candidates.add((mid - p - bwd, mid + fwd - 1, p))
        # block s[mid .. mid+p-1] inside the right half
        for p in range(1, right_len + 1):
            fwd = z_right[p] if p < right_len else 0
            bwd = bwd_from[right_len - p]
            if fwd + bwd >= p:
                candidates.add((mid - bwd, mid + p - 1 + fwd, p))

    walk(0, n)

    best: dict[tuple[int, int], int] = {}
    for i, j, p in candidates:
        if i > 0 and s[i - 1] == s[i - 1 + p]:
            continue  # extendable left: a fragment of a longer run
        if j < n - 1 and s[j + 1] == s[j + 1 - p]:
            continue
        key = (i, j)
        held = best.get(key)
        if held is None or p < held:
            best[key] = p
    return {Run(i, j - i + 1, p) for (i, j), p in best.items()}


def _minimal_period_table(s: str) -> list[list[int]]:
    # table[i][j - i] = minimal period of s[i..j] (inclusive); O(n^2) overall
    # via one failure function per suffix.
    table = []
    for i in range(len(s)):
        fail = _border(s[i:])
        table.append([(m + 1) - fail[m] for m in range(len(fail))])
    return table


def _maximal_periodicities_brute(s: str, min_exponent: Fraction) -> set[Run]:
    n = len(s)
    table = _minimal_period_table(s)
    # exponent threshold by cross-multiplication; keeps the hot loop integer-only
    num, den = min_exponent.numerator, min_exponent.denominator
    found = set()
    for i in range(n):
        row = table[i]
        for j in range(i + 1, n):
            p = row[j - i]
            if (j - i + 1) * den < num * p:
                continue
            if i > 0 and table[i - 1][j - i + 1] == p:
                continue  # left extension keeps the period: not maximal
            if j < n - 1 and row[j - i + 1] == p:
                continue
            found.add(Run(i, j - i + 1, p))
    return found


def runs_bruteforce(w: Word, max_length: int = BRUTE_FORCE_BOUND) -> set[Run]:
    """Definition-chasing oracle for ``find_maximal_repetitions``.

    Independent algorithm family: minimal periods of all factors come from
    per-suffix failure functions, and maximality is checked by comparing the
    minimal period of each one-symbol extension.
    """
    if len(w.chars) > max_length:
        raise ValueError(
            f"brute-force run search is limited to length {max_length}, got {len(w.chars)}"
        )
    return _maximal_periodicities_brute(w.chars, Fraction(2))


def maximal_periodicities(
    w: Word, min_exponent, max_length: int = BRUTE_FORCE_BOUND
) -> set[Run]:
    """All maximal periodic factors with exponent >= ``min_exponent``.

    Generalizes runs: witnesses of non-robustness can have exponent as low as
    2 - 1/p, below the runs floor, so searches over that regime need this.
    """
    floor = Fraction(min_exponent)
    if floor <= 1:
        raise ValueError("min_exponent must be greater than 1")
    if len(w.chars) > max_length:
        raise ValueError(
            f"periodicity scan is limited to length {max_length}, got {len(w.chars)}"
        )
    return _maximal_periodicities_brute(w.chars, floor)
