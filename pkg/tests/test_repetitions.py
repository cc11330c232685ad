import random
from fractions import Fraction

import pytest
from conftest import BINARY, TERNARY, all_words
from hypothesis import given
from hypothesis import strategies as st

from insrobust import (
    Run,
    Word,
    find_maximal_repetitions,
    maximal_periodicities,
    runs_bruteforce,
)

mixed_words = st.one_of(
    st.text(alphabet="ab", min_size=2, max_size=64).map(lambda s: Word(s, BINARY)),
    st.text(alphabet="abc", min_size=2, max_size=64).map(lambda s: Word(s, TERNARY)),
)


def bw(chars: str) -> Word:
    return Word(chars, BINARY)


def tuples(runs) -> set[tuple[int, int, int]]:
    return {run.as_tuple() for run in runs}


class TestRunRecord:
    def test_exponent(self):
        assert Run(3, 5, 2).exponent == Fraction(5, 2)

    def test_ordering_and_tuple(self):
        assert Run(0, 2, 1).as_tuple() == (0, 2, 1)
        assert Run(0, 2, 1) < Run(1, 2, 1)


class TestFindMaximalRepetitions:
    def test_aabaab(self):
        assert tuples(find_maximal_repetitions(bw("aabaab"))) == {
            (0, 6, 3),
            (0, 2, 1),
            (3, 2, 1),
        }

    def test_unary(self):
        assert tuples(find_maximal_repetitions(bw("aaaa"))) == {(0, 4, 1)}

    def test_square(self):
        assert tuples(find_maximal_repetitions(bw("abab"))) == {(0, 4, 2)}

    def test_period2_run_in_reference_word(self):
        runs = tuples(find_maximal_repetitions(bw("abaababaabaab")))
        assert (3, 5, 2) in runs  # factor "ababa"
        assert (3, 4, 2) not in runs  # "abab" extends right without breaking period 2

    def test_short_words(self):
        assert find_maximal_repetitions(bw("ab")) == set()
        assert find_maximal_repetitions(bw("a")) == set()
        assert find_maximal_repetitions(Word("", BINARY)) == set()

    def test_exhaustive_binary_up_to_10(self):
        for w in all_words(BINARY, 2, 10):
            assert find_maximal_repetitions(w) == runs_bruteforce(w), w.chars

    def test_seeded_random_words(self):
        rng = random.Random(7)
        for i in range(300):
            alphabet = BINARY if i % 2 == 0 else TERNARY
            n = rng.randint(2, 64)
            w = Word("".join(rng.choices(alphabet.symbols, k=n)), alphabet)
            assert find_maximal_repetitions(w) == runs_bruteforce(w), w.chars

    @given(mixed_words)
    def test_matches_bruteforce(self, w):
        assert find_maximal_repetitions(w) == runs_bruteforce(w)

    @given(mixed_words)
    def test_reported_runs_are_genuine(self, w):
        s = w.chars
        n = len(s)
        seen_intervals = set()
        for run in find_maximal_repetitions(w):
            i, j = run.start, run.start + run.length - 1
            p = run.period
            assert run.exponent >= 2
            # claimed period holds across the factor
            assert all(s[t] == s[t + p] for t in range(i, j - p + 1))
            # minimal: no shorter period covers the factor
            assert not any(
                all(s[t] == s[t + q] for t in range(i, j - q + 1)) for q in range(1, p)
            )
            # maximal: one-symbol extensions break the period
            if i > 0:
                assert s[i - 1] != s[i - 1 + p]
            if j < n - 1:
                assert s[j + 1] != s[j + 1 - p]
            assert (i, j) not in seen_intervals  # no duplicate intervals
            seen_intervals.add((i, j))

    def test_run_count_below_length_on_random_word(self):
        rng = random.Random(11)
        s = "".join(rng.choices("ab", k=10_000))
        assert len(find_maximal_repetitions(bw(s))) < 10_000


class TestRunsBruteforce:
    def test_fixtures(self):
        assert tuples(runs_bruteforce(bw("abab"))) == {(0, 4, 2)}
        assert runs_bruteforce(bw("ab")) == set()
        reference = bw("abaababaabaab")
        assert runs_bruteforce(reference) == find_maximal_repetitions(reference)

    def test_length_bound(self):
        with pytest.raises(ValueError):
            runs_bruteforce(bw("a" * 65))
        assert runs_bruteforce(bw("a" * 80), max_length=80) == {Run(0, 80, 1)}


class TestMaximalPeriodicities:
    def test_below_exponent_two(self):
        found = tuples(maximal_periodicities(bw("aabaab"), Fraction(3, 2)))
        assert (1, 3, 2) in found  # factor "aba", exponent 3/2

    def test_reduces_to_runs_at_two(self):
        assert tuples(maximal_periodicities(bw("abab"), 2)) == {(0, 4, 2)}

    def test_no_findings(self):
        assert maximal_periodicities(bw("ab"), 1.1) == set()

    def test_threshold_validation(self):
        with pytest.raises(ValueError):
            maximal_periodicities(bw("abab"), 1)
        with pytest.raises(ValueError):
            maximal_periodicities(bw("abab"), Fraction(1, 2))

    def test_float_threshold_is_exact(self):
        assert maximal_periodicities(bw("aabaab"), 1.5) == maximal_periodicities(
            bw("aabaab"), Fraction(3, 2)
        )

    @given(mixed_words)
    def test_at_two_equals_runs(self, w):
        assert maximal_periodicities(w, 2) == runs_bruteforce(w)
