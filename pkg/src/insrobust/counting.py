"""Exact counts, closed-form bounds, and exhaustive small-n censuses.

The primitive-word count is the classic Möbius sum over divisors, evaluated
with arbitrary-precision integers throughout — the values overflow machine
words long before the lengths this module accepts.  The census enumerates
every word of a given length, classifies each one, and is the ground truth
the closed forms are tested against.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Mapping

from .classify import Verdict, _fast_verdict_chars, _oracle_verdict_chars, eligible_periods
from .words import Alphabet

DEFAULT_CENSUS_BUDGET = 1 << 24


class BudgetExceededError(RuntimeError):
    """The requested census is larger than the classification budget."""


class OracleMismatchError(RuntimeError):
    """The fast classifier and the insertion oracle disagreed during an audit."""


def _distinct_prime_factors(n: int) -> list[int]:
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return primes


def count_primitive(n: int, k: int) -> int:
    """The number of primitive words of length ``n`` over ``k`` symbols.

    Inclusion–exclusion over the distinct prime factors of n: subtracting the
    words that are powers of a shorter root leaves exactly the primitive ones.
    """
    if n < 1:
        raise ValueError("count_primitive requires a word length n >= 1")
    if k < 1:
        raise ValueError("count_primitive requires an alphabet size k >= 1")
    primes = _distinct_prime_factors(n)
    total = 0
    for mask in range(1 << len(primes)):
        d = 1
        bits = 0
        for i, prime in enumerate(primes):
            if mask >> i & 1:
                d *= prime
                bits += 1
        total += -(k ** (n // d)) if bits & 1 else k ** (n // d)
    return total


@dataclass(frozen=True, slots=True)
class CountReport:
    """Closed-form counts for length ``n`` over ``k`` symbols.

    ``non_ins_robust_upper`` bounds the fragile primitive words from above;
    ``ins_robust_lower`` = primitive − upper bounds the robust ones from
    below and may be negative, in which case the bound is vacuous but still
    reported verbatim.
    """

    n: int
    k: int
    total: int
    primitive: int
    non_primitive: int
    non_ins_robust_upper: int
    ins_robust_lower: int

    @property
    def vacuous(self) -> bool:
        return self.ins_robust_lower < 0


def count_report(n: int, k: int) -> CountReport:
    if n < 2 or k < 2:
        raise ValueError("count_report bounds are defined for n >= 2 and k >= 2")
    total = k**n
    primitive = count_primitive(n, k)
    z_next = k ** (n + 1) - count_primitive(n + 1, k)
    upper = (n + 1) * (z_next - k)
    return CountReport(
        n=n,
        k=k,
        total=total,
        primitive=primitive,
        non_primitive=total - primitive,
        non_ins_robust_upper=upper,
        ins_robust_lower=primitive - upper,
    )


@dataclass(frozen=True, slots=True)
class CensusReport:
    n: int
    k: int
    non_primitive: int
    ins_robust: int
    non_ins_robust: int
    words: Mapping[Verdict, tuple[str, ...]] | None = None

    @property
    def total(self) -> int:
        return self.non_primitive + self.ins_robust + self.non_ins_robust


def _lex_words(symbols: str, n: int, lo: int, hi: int) -> Iterator[str]:
    # words of length n with lexicographic ranks in [lo, hi), in rank order
    k = len(symbols)
    if lo == 0 and hi == k**n:
        for tup in itertools.product(symbols, repeat=n):
            yield "".join(tup)
        return
    digits = []
    rank = lo
    for _ in range(n):
        rank, d = divmod(rank, k)
        digits.append(d)
    digits.reverse()
    chars = [symbols[d] for d in digits]
    for _ in range(lo, hi):
        yield "".join(chars)
        i = n - 1
        while i >= 0:
            d = digits[i] + 1
            if d < k:
                digits[i] = d
                chars[i] = symbols[d]
                break
            digits[i] = 0
            chars[i] = symbols[0]
            i -= 1


def _census_span(args: tuple[str, int, int, int, bool, bool]):
    symbols, n, lo, hi, list_words, audit = args
    periods = eligible_periods(n)
    counts = dict.fromkeys(Verdict, 0)
    words: dict[Verdict, list[str]] | None
    words = {v: [] for v in Verdict} if list_words else None
    mismatches: list[tuple[str, str, str]] = []
    for s in _lex_words(symbols, n, lo, hi):
        verdict = _fast_verdict_chars(s, periods)
        if audit:
            check = _oracle_verdict_chars(s, symbols)
            if check is not verdict:
                mismatches.append((s, verdict.value, check.value))
        counts[verdict] += 1
        if words is not None:
            words[verdict].append(s)
    return counts, words, mismatches


def census(
    n: int,
    alphabet: Alphabet,
    *,
    list_words: bool = False,
    budget: int | None = DEFAULT_CENSUS_BUDGET,
    audit_oracle: bool = False,
    workers: int = 0,
) -> CensusReport:
    """Classify every length-``n`` word over ``alphabet`` and tally verdicts.

    ``audit_oracle`` re-checks each word against the insertion oracle and
    raises ``OracleMismatchError`` on any disagreement.  ``workers`` > 1
    shards the enumeration across processes; tallies and word lists are
    merged in rank order, so results are identical for any worker count.
    """
    if n < 1:
        raise ValueError("census requires a word length n >= 1")
    if len(alphabet) < 2:
        raise ValueError("census requires an alphabet with at least two symbols")
    k = len(alphabet)
    total = k**n
    if budget is not None and total > budget:
        raise BudgetExceededError(
            f"census of {total} words exceeds the budget of {budget};"
            " raise the budget to proceed"
        )
    symbols = alphabet.symbols
    if workers > 1:
        bounds = [total * i // workers for i in range(workers + 1)]
        spans = [
            (symbols, n, lo, hi, list_words, audit_oracle)
            for lo, hi in zip(bounds, bounds[1:])
            if lo < hi
        ]
        with ProcessPoolExecutor(max_workers=len(spans)) as pool:
            parts = list(pool.map(_census_span, spans))
    else:
        parts = [_census_span((symbols, n, 0, total, list_words, audit_oracle))]

    counts = dict.fromkeys(Verdict, 0)
    mismatches: list[tuple[str, str, str]] = []
    for part_counts, _, part_mismatches in parts:
        for verdict, tally in part_counts.items():
            counts[verdict] += tally
        mismatches.extend(part_mismatches)
    if mismatches:
        shown = "; ".join(
            f"{word!r} fast={fast} oracle={oracle}" for word, fast, oracle in mismatches[:5]
        )
        raise OracleMismatchError(
            f"fast classifier disagreed with the oracle on {len(mismatches)} word(s): {shown}"
        )
    words_map = None
    if list_words:
        words_map = {
            verdict: tuple(
                itertools.chain.from_iterable(part[1][verdict] for part in parts)
            )
            for verdict in Verdict
        }
    return CensusReport(
        n=n,
        k=k,
        non_primitive=counts[Verdict.NON_PRIMITIVE],
        ins_robust=counts[Verdict.INS_ROBUST],
        non_ins_robust=counts[Verdict.NON_INS_ROBUST],
        words=words_map,
    )
