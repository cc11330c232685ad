import math
import statistics
from itertools import product
from typing import Iterator

from hypothesis import HealthCheck, settings

from insrobust import Alphabet, Word

settings.register_profile(
    "insrobust",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("insrobust")

BINARY = Alphabet("ab")
TERNARY = Alphabet("abc")


def all_words(alphabet: Alphabet, min_len: int, max_len: int) -> Iterator[Word]:
    """Every word over ``alphabet`` with length in [min_len, max_len], lex order."""
    for n in range(min_len, max_len + 1):
        for tup in product(alphabet.symbols, repeat=n):
            yield Word("".join(tup), alphabet)


def all_strings(symbols: str, min_len: int, max_len: int) -> Iterator[str]:
    for n in range(min_len, max_len + 1):
        for tup in product(symbols, repeat=n):
            yield "".join(tup)


def loglog_slope(points: list[tuple[int, float]]) -> float:
    """Least-squares slope of log(time) against log(size)."""
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(max(seconds, 1e-9)) for _, seconds in points]
    mean_x = statistics.fmean(xs)
    mean_y = statistics.fmean(ys)
    numerator = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    denominator = sum((x - mean_x) ** 2 for x in xs)
    return numerator / denominator
