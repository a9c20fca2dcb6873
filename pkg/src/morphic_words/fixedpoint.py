"""Prolongability and lazy generation of iterative fixed points.

If phi(a0) = a0 x, then phi^l(a0) = a0 x phi(x) phi^2(x) ... phi^(l-1)(x).
The stream below emits exactly these blocks: the letters of block j+1 are
the images of the letters of block j, expanded one letter at a time so a
request for n letters never materialises more than one image beyond n.
"""

from __future__ import annotations

from typing import Iterator

from morphic_words.errors import DomainMismatch, NotProlongable
from morphic_words.morphism import Coding, Morphism
from morphic_words.words import Alphabet, Symbol, Word


def mortal_letters(m: Morphism) -> frozenset[Symbol]:
    """Letters whose iterated image eventually becomes the empty word.

    Least fixed point of: a is mortal iff every letter of m(a) is mortal.
    Reached after at most |domain| rounds.
    """
    mortal: set[Symbol] = set()
    changed = True
    while changed:
        changed = False
        for a in m.domain:
            if a not in mortal and all(x in mortal for x in m[a]):
                mortal.add(a)
                changed = True
    return frozenset(mortal)


def is_prolongable(m: Morphism, a0: Symbol | str) -> bool:
    """True iff m(a0) = a0 x with x containing a non-mortal letter."""
    if not m.is_endomorphism or a0 not in m.domain:
        return False
    image = m[a0]
    if len(image) < 2 or image[0] != a0:
        return False
    mortal = mortal_letters(m)
    return any(x not in mortal for x in image.letters[1:])


def prolongation_tail(m: Morphism, a0: Symbol | str) -> Word:
    """The word x with m(a0) = a0 x."""
    if not is_prolongable(m, a0):
        raise NotProlongable(a0)
    return m[a0][1:]


class FixedPointStream:
    """Cursor over the iterative fixed point of *morphism* from *start*.

    Single-owner mutable state; distinct streams over the same morphism are
    independent.
    """

    def __init__(self, morphism: Morphism, start: Symbol | str):
        start = Symbol(start)
        tail = prolongation_tail(morphism, start)
        self.morphism = morphism
        self.start = start
        self._images = morphism.images
        self._letters: list[Symbol] = [start, *tail.letters]
        # index of the next letter whose image extends the stream
        self._cursor = 1

    def __len__(self) -> int:
        """Number of letters produced so far."""
        return len(self._letters)

    def extend_to(self, n: int) -> None:
        letters = self._letters
        images = self._images
        cursor = self._cursor
        while len(letters) < n:
            if cursor >= len(letters):
                raise NotProlongable(self.start, "the iterates stopped growing")
            letters.extend(images[letters[cursor]].letters)
            cursor += 1
        self._cursor = cursor

    def take(self, n: int) -> Word:
        """The first *n* letters."""
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        self.extend_to(n)
        return Word._wrap(tuple(self._letters[:n]))

    def __getitem__(self, i: int) -> Symbol:
        if i < 0:
            raise IndexError("fixed points are infinite; negative indices are undefined")
        self.extend_to(i + 1)
        return self._letters[i]

    def __iter__(self) -> Iterator[Symbol]:
        i = 0
        while True:
            if i >= len(self._letters):
                self.extend_to(max(2 * len(self._letters), i + 1))
            yield self._letters[i]
            i += 1

    def blocks(self) -> Iterator[Word]:
        """a0, x, phi(x), phi^2(x), ... as separate words."""
        yield Word._wrap((self.start,))
        block = self.morphism[self.start][1:]
        while True:
            yield block
            block = self.morphism.apply(block)


def fixed_point_prefix(m: Morphism, a0: Symbol | str, n: int) -> Word:
    """The first *n* letters of the iterative fixed point of *m* from *a0*."""
    return FixedPointStream(m, a0).take(n)


class MorphicPresentation:
    """An infinite sequence named as coding(fixed point of morphism from start).

    When the morphism is k-uniform the presented sequence is k-automatic.
    """

    def __init__(self, morphism: Morphism, start: Symbol | str, coding: Coding | None = None):
        start = Symbol(start)
        if not morphism.is_endomorphism:
            raise DomainMismatch("a presentation needs a morphism of a single alphabet")
        if not is_prolongable(morphism, start):
            raise NotProlongable(start)
        if coding is None:
            coding = Coding.identity(morphism.domain)
        missing = [s for s in morphism.domain if s not in coding.domain]
        if missing:
            raise DomainMismatch(f"coding has no image for {', '.join(missing)}")
        self.morphism = morphism
        self.start = start
        self.coding = coding

    @property
    def alphabet(self) -> Alphabet:
        return self.morphism.domain

    @property
    def output_alphabet(self) -> Alphabet:
        return self.coding.codomain

    @property
    def uniform_arity(self) -> int | None:
        return self.morphism.uniform_arity

    @property
    def is_automatic(self) -> bool:
        k = self.uniform_arity
        return k is not None and k >= 2

    def stream(self) -> FixedPointStream:
        return FixedPointStream(self.morphism, self.start)

    def underlying_prefix(self, n: int) -> Word:
        return fixed_point_prefix(self.morphism, self.start, n)

    def prefix(self, n: int) -> Word:
        return self.coding.apply(self.underlying_prefix(n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MorphicPresentation):
            return NotImplemented
        return (
            self.morphism == other.morphism
            and self.start == other.start
            and self.coding.mapping() == other.coding.mapping()
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"MorphicPresentation({self.morphism!s}, start={self.start.name!r}, coding={self.coding!s})"


def presented_prefix(p: MorphicPresentation, n: int) -> Word:
    """The first *n* letters of the presented sequence."""
    return p.prefix(n)
