"""Symbols, alphabets and finite words.

Words hold symbol references, not characters, so letters may have
multi-character names such as ``b'`` or ``alpha1``. Indices are 0-based.
"""

from __future__ import annotations

from itertools import count, pairwise
from typing import Iterable, Iterator, overload

from morphic_words.errors import AlienSymbol, DuplicateSymbol, EmptyAlphabet, InvalidSymbol, NotCompact

RESERVED_TOKENS = ("->", "#")


class Symbol(str):
    """A letter, identified by its name token.

    Two symbols are equal exactly when their names are equal.
    """

    __slots__ = ()

    def __new__(cls, name: str) -> Symbol:
        if isinstance(name, Symbol):
            return name
        if not isinstance(name, str) or not name:
            raise InvalidSymbol(str(name))
        if any(ch.isspace() for ch in name) or any(tok in name for tok in RESERVED_TOKENS):
            raise InvalidSymbol(name)
        return super().__new__(cls, name)

    @property
    def name(self) -> str:
        return str.__str__(self)

    def __repr__(self) -> str:
        return f"Symbol({self.name!r})"


class Alphabet:
    """An ordered, duplicate-free, non-empty set of symbols."""

    __slots__ = ("_symbols", "_index")

    def __init__(self, symbols: Iterable[Symbol | str]):
        syms = tuple(Symbol(s) for s in symbols)
        if not syms:
            raise EmptyAlphabet()
        index: dict[Symbol, int] = {}
        for i, s in enumerate(syms):
            if s in index:
                raise DuplicateSymbol(s)
            index[s] = i
        self._symbols = syms
        self._index = index

    @property
    def symbols(self) -> tuple[Symbol, ...]:
        return self._symbols

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._symbols)

    def __len__(self) -> int:
        return len(self._symbols)

    def __contains__(self, item: object) -> bool:
        return item in self._index

    def __getitem__(self, i: int) -> Symbol:
        return self._symbols[i]

    def index(self, symbol: Symbol | str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AlienSymbol(symbol) from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self._symbols == other._symbols

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __repr__(self) -> str:
        return f"Alphabet({' '.join(self._symbols)!r})"

    def __str__(self) -> str:
        return "{" + ", ".join(self._symbols) + "}"

    def union(self, other: Iterable[Symbol | str]) -> Alphabet:
        """This alphabet followed by the symbols of *other* it does not yet contain."""
        extra = []
        seen = set(self._symbols)
        for s in other:
            s = Symbol(s)
            if s not in seen:
                seen.add(s)
                extra.append(s)
        return Alphabet(self._symbols + tuple(extra))

    def issubset(self, other: Alphabet | Iterable[Symbol]) -> bool:
        return all(s in other for s in self._symbols)

    def fresh(self, stem: str, mark: str = "") -> Symbol:
        """A symbol not in this alphabet.

        Without *mark*: ``stem``, ``stem1``, ``stem2``, ...
        With *mark*: ``stem`` + mark, ``stem`` + mark*2, ...
        """
        if mark:
            candidates = (stem + mark * i for i in count(1))
        else:
            candidates = (stem if i == 0 else f"{stem}{i}" for i in count(0))
        for name in candidates:
            if name not in self._index:
                return Symbol(name)
        raise AssertionError("unreachable")


class Word:
    """A finite, possibly empty, immutable sequence of symbols."""

    __slots__ = ("_letters",)

    def __init__(self, letters: Iterable[Symbol | str] = ()):
        self._letters = tuple(Symbol(s) for s in letters)

    @classmethod
    def _wrap(cls, letters: tuple[Symbol, ...]) -> Word:
        # letters are already Symbols
        word = cls.__new__(cls)
        word._letters = letters
        return word

    @classmethod
    def of(cls, text: str) -> Word:
        """Parse ``"0 1 1 0"`` (space separated) or ``"0110"`` (one symbol per character)."""
        if any(ch.isspace() for ch in text):
            return cls(text.split())
        return cls(text)

    @property
    def letters(self) -> tuple[Symbol, ...]:
        return self._letters

    @property
    def length(self) -> int:
        return len(self._letters)

    def __len__(self) -> int:
        return len(self._letters)

    def __bool__(self) -> bool:
        return bool(self._letters)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._letters)

    def __contains__(self, item: object) -> bool:
        return item in self._letters

    @overload
    def __getitem__(self, i: int) -> Symbol: ...

    @overload
    def __getitem__(self, i: slice) -> Word: ...

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word._wrap(self._letters[i])
        return self._letters[i]

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return concat(self, other)

    def __mul__(self, times: int) -> Word:
        return Word._wrap(self._letters * times)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        return " ".join(self._letters)

    def compact(self) -> str:
        """Concatenate the names; only legal when every name is a single character."""
        for s in self._letters:
            if len(s) != 1:
                raise NotCompact(s)
        return "".join(self._letters)

    def symbols(self) -> frozenset[Symbol]:
        return frozenset(self._letters)

    def is_prefix_of(self, other: Word) -> bool:
        return is_prefix(self, other)

    def occurrences(self, target: Symbol | str) -> list[int]:
        return occurrences(self, target)


EMPTY = Word()


def concat(a: Word, b: Word) -> Word:
    """The letters of *a* followed by the letters of *b*."""
    return Word._wrap(a.letters + b.letters)


def is_prefix(p: Word, w: Word) -> bool:
    """True iff ``w = p·y`` for some word ``y``."""
    n = len(p)
    return n <= len(w) and w.letters[:n] == p.letters


def occurrences(w: Word, target: Symbol | str) -> list[int]:
    """Ascending 0-based indices at which *target* occurs in *w*."""
    return [i for i, s in enumerate(w.letters) if s == target]


def runs_between_zeros(w: Word, zero: Symbol | str, one: Symbol | str) -> list[int]:
    """Number of *one* letters strictly between each pair of consecutive *zero* letters.

    >>> runs_between_zeros(Word.of("0110100110010110"), "0", "1")
    [2, 1, 0, 2, 0, 1, 2]
    """
    for s in w.letters:
        if s != zero and s != one:
            raise AlienSymbol(s, "expected only the zero and one letters")
    zeros = occurrences(w, zero)
    return [right - left - 1 for left, right in pairwise(zeros)]
