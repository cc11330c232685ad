"""Finite words over finite alphabets, and the primitive-word basics.

A word is a string together with the alphabet it is read over.  Keeping the
alphabet attached matters here: insertion-robustness is a property of the pair
(word, alphabet), not of the string alone — a word can be robust over one
alphabet and fragile over a larger one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator


class Alphabet:
    """An ordered finite alphabet of single-character symbols.

    Order is significant: enumeration (``words_of_length``) and tie-breaking
    (e.g. which extension letter a search tries first) follow it.
    """

    __slots__ = ("_symbols", "_index")

    def __init__(self, symbols: str):
        if not symbols:
            raise ValueError("alphabet must contain at least one symbol")
        seen = {}
        for position, ch in enumerate(symbols):
            if len(ch) != 1:
                raise ValueError(f"alphabet symbols must be single characters, got {ch!r}")
            if ch in seen:
                raise ValueError(f"duplicate alphabet symbol {ch!r}")
            seen[ch] = position
        self._symbols = symbols
        self._index = seen

    @property
    def symbols(self) -> str:
        return self._symbols

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} is not in alphabet {self._symbols!r}") from None

    def word(self, chars: str) -> "Word":
        return Word(chars, self)

    def __len__(self) -> int:
        return len(self._symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self._symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self._symbols == other._symbols

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __repr__(self) -> str:
        return f"Alphabet({self._symbols!r})"


@dataclass(frozen=True, slots=True)
class Word:
    """An immutable word over a fixed alphabet."""

    chars: str
    alphabet: Alphabet

    def __post_init__(self) -> None:
        stray = set(self.chars).difference(self.alphabet._index)
        if stray:
            raise ValueError(
                f"word uses symbols {sorted(stray)!r} outside alphabet {self.alphabet.symbols!r}"
            )

    def __len__(self) -> int:
        return len(self.chars)

    def __getitem__(self, item):
        return self.chars[item]

    def __iter__(self) -> Iterator[str]:
        return iter(self.chars)

    def __str__(self) -> str:
        return self.chars

    def __repr__(self) -> str:
        return f"Word({self.chars!r}, {self.alphabet!r})"


def _require_nonempty(w: Word, what: str) -> None:
    if len(w.chars) == 0:
        raise ValueError(f"{what} is undefined for the empty word")


def _border(s: str) -> list[int]:
    # classic failure-function computation; table[i] = longest proper border of s[:i+1]
    table = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        while k > 0 and s[i] != s[k]:
            k = table[k - 1]
        if s[i] == s[k]:
            k += 1
        table[i] = k
    return table


def border_array(w: Word) -> list[int]:
    """Lengths of the longest proper border of each prefix of ``w``.

    Entry ``i`` is the length of the longest string that is both a proper
    prefix and a proper suffix of ``w[:i+1]``; empty word → empty array.
    """
    return _border(w.chars)


def _root_length(s: str) -> int:
    # Smallest r such that s is a power of s[:r].  The first occurrence of s
    # inside s+s after position 0 is at exactly that r; for primitive s it is
    # len(s).  This runs at C speed via str.find.
    return (s + s).find(s, 1)


def is_primitive(w: Word) -> bool:
    """True iff ``w`` is not a proper power of a shorter word."""
    _require_nonempty(w, "is_primitive")
    return _root_length(w.chars) == len(w.chars)


def primitive_root(w: Word) -> tuple[Word, int]:
    """The unique primitive ``t`` and exponent ``m >= 1`` with ``w == t**m``."""
    _require_nonempty(w, "primitive_root")
    r = _root_length(w.chars)
    return Word(w.chars[:r], w.alphabet), len(w.chars) // r


def rotate(w: Word, offset: int) -> Word:
    """Cyclic left shift: the word ``w[offset:] + w[:offset]``."""
    if not 0 <= offset <= len(w.chars):
        raise ValueError(f"rotation offset {offset} out of range for length {len(w.chars)}")
    return Word(w.chars[offset:] + w.chars[:offset], w.alphabet)


def reverse(w: Word) -> Word:
    return Word(w.chars[::-1], w.alphabet)


def insert(w: Word, position: int, symbol: str) -> Word:
    """The word obtained by inserting ``symbol`` before index ``position``.

    ``position`` ranges over ``0..len(w)`` inclusive; ``len(w)`` appends.
    """
    if not 0 <= position <= len(w.chars):
        raise ValueError(f"insertion position {position} out of range for length {len(w.chars)}")
    if symbol not in w.alphabet:
        raise ValueError(f"symbol {symbol!r} is not in alphabet {w.alphabet.symbols!r}")
    return Word(w.chars[:position] + symbol + w.chars[position:], w.alphabet)


def words_of_length(n: int, alphabet: Alphabet) -> Iterator[Word]:
    """All words of length ``n`` over ``alphabet``, in lexicographic order
    of the alphabet's own symbol order."""
    if n < 0:
        raise ValueError("word length must be non-negative")
    for tup in itertools.product(alphabet.symbols, repeat=n):
        yield Word("".join(tup), alphabet)
