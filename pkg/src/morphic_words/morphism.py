"""Morphisms of free monoids, codings, and incidence matrices.

A morphism is stored as its image table: the image of a word is the
concatenation of the images of its letters.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np
import pandas as pd

from morphic_words.errors import AlienSymbol, DomainMismatch, NotProlongable
from morphic_words.words import Alphabet, Symbol, Word


def _as_word(image: Word | str | Iterable[str]) -> Word:
    if isinstance(image, Word):
        return image
    if isinstance(image, str):
        return Word.of(image)
    return Word(image)


class Morphism:
    """A total map from the domain symbols to words over the codomain."""

    def __init__(
        self,
        domain: Alphabet | Iterable[str],
        codomain: Alphabet | Iterable[str],
        images: Mapping[str, Word | str | Iterable[str]],
    ):
        domain = domain if isinstance(domain, Alphabet) else Alphabet(domain)
        codomain = codomain if isinstance(codomain, Alphabet) else Alphabet(codomain)
        table: dict[Symbol, Word] = {}
        for key, image in images.items():
            sym = Symbol(key)
            if sym not in domain:
                raise AlienSymbol(sym, "rule for a letter outside the domain")
            word = _as_word(image)
            for letter in word:
                if letter not in codomain:
                    raise AlienSymbol(letter, f"in the image of {sym!r}")
            table[sym] = word
        missing = [s for s in domain if s not in table]
        if missing:
            raise DomainMismatch(f"no image for {', '.join(missing)}")
        self._domain = domain
        self._codomain = codomain
        # kept in domain order
        self._images = {s: table[s] for s in domain}

    @classmethod
    def from_rules(cls, rules: Mapping[str, str | Word | Iterable[str]]) -> Morphism:
        """Build an endomorphism from ``{"0": "01", "1": "10"}``.

        The domain is the rule order, extended by any letter that only
        appears on a right-hand side.
        """
        images = {Symbol(k): _as_word(v) for k, v in rules.items()}
        alphabet = Alphabet(images)
        alphabet = alphabet.union(s for w in images.values() for s in w)
        return cls(alphabet, alphabet, images)

    @classmethod
    def identity(cls, alphabet: Alphabet | Iterable[str]) -> Morphism:
        alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
        return cls(alphabet, alphabet, {s: Word._wrap((s,)) for s in alphabet})

    # ── Accessors ───────────────────────────────────────────────────────────

    @property
    def domain(self) -> Alphabet:
        return self._domain

    @property
    def codomain(self) -> Alphabet:
        return self._codomain

    @property
    def images(self) -> Mapping[Symbol, Word]:
        return MappingProxyType(self._images)

    def __getitem__(self, symbol: Symbol | str) -> Word:
        try:
            return self._images[symbol]
        except KeyError:
            raise AlienSymbol(symbol, "not in the domain") from None

    @property
    def is_endomorphism(self) -> bool:
        return self._codomain.issubset(self._domain)

    @property
    def uniform_arity(self) -> int | None:
        """k when every image has length k, else None."""
        lengths = {len(w) for w in self._images.values()}
        if len(lengths) == 1:
            (k,) = lengths
            return k
        return None

    @property
    def is_uniform(self) -> bool:
        return self.uniform_arity is not None

    # ── Algebra ─────────────────────────────────────────────────────────────

    def apply(self, word: Word) -> Word:
        """Image of *word*: the concatenation of its letters' images."""
        images = self._images
        out: list[Symbol] = []
        try:
            for s in word.letters:
                out.extend(images[s].letters)
        except KeyError as exc:
            raise AlienSymbol(exc.args[0], "not in the domain") from None
        return Word._wrap(tuple(out))

    def __call__(self, word: Word | Symbol | str) -> Word:
        if isinstance(word, Word):
            return self.apply(word)
        return self[word]

    def compose(self, inner: Morphism) -> Morphism:
        """``self ∘ inner``: first *inner*, then *self*."""
        if not inner.codomain.issubset(self._domain):
            raise DomainMismatch(
                f"cannot compose: {inner.codomain} is not contained in {self._domain}"
            )
        images = {s: self.apply(w) for s, w in inner.images.items()}
        if isinstance(self, Coding) and isinstance(inner, Coding):
            return Coding(inner.domain, self._codomain, images)
        return Morphism(inner.domain, self._codomain, images)

    def power(self, exponent: int) -> Morphism:
        """The *exponent*-fold composition; the identity for exponent 0."""
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        if not self.is_endomorphism:
            raise DomainMismatch("powers need the codomain inside the domain")
        images = {s: Word._wrap((s,)) for s in self._domain}
        for _ in range(exponent):
            images = {s: self.apply(w) for s, w in images.items()}
        return type(self)(self._domain, self._domain, images)

    def restrict(self, letters: Iterable[Symbol | str]) -> Morphism:
        """The same rules on the sub-alphabet *letters* (domain order kept).

        For an endomorphism whose restricted images stay inside the new
        domain, the codomain shrinks to the domain as well.
        """
        keep = set(letters)
        domain = Alphabet(s for s in self._domain if s in keep)
        images = {s: self._images[s] for s in domain}
        codomain = self._codomain
        if self.is_endomorphism and all(x in domain for w in images.values() for x in w):
            codomain = domain
        return type(self)(domain, codomain, images)

    def extend(self, images: Mapping[str, Word | str | Iterable[str]], *, first: bool = False) -> Morphism:
        """Add (or replace) rules; new letters join the domain and codomain.

        New letters go to the front of the alphabets when *first* is set.
        """
        table = {Symbol(k): _as_word(v) for k, v in images.items()}
        new = [s for s in table if s not in self._domain]
        domain = Alphabet([*new, *self._domain]) if first else self._domain.union(new)
        codomain = self._codomain.union(new).union(x for w in table.values() for x in w)
        if self.is_endomorphism and codomain.issubset(domain):
            codomain = domain
        return Morphism(domain, codomain, {**self._images, **table})

    def incidence_matrix(self) -> IncidenceMatrix:
        return IncidenceMatrix.of(self)

    # ── Dunder ──────────────────────────────────────────────────────────────

    def __eq__(self, other: object) -> bool:
        # equality is by rule table, in domain order
        if not isinstance(other, Morphism):
            return NotImplemented
        return self._domain == other._domain and self._images == other._images

    __hash__ = None

    def rules(self) -> list[str]:
        return [f"{s} -> {w}".rstrip() for s, w in self._images.items()]

    def __str__(self) -> str:
        return "; ".join(self.rules())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class Coding(Morphism):
    """A 1-uniform morphism: every letter maps to a single letter."""

    def __init__(self, domain, codomain, images):
        super().__init__(domain, codomain, images)
        for s, w in self._images.items():
            if len(w) != 1:
                raise DomainMismatch(f"coding image of {s!r} has length {len(w)}, expected 1")

    @classmethod
    def identity(cls, alphabet: Alphabet | Iterable[str]) -> Coding:
        alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
        return cls(alphabet, alphabet, {s: Word._wrap((s,)) for s in alphabet})

    @classmethod
    def from_pairs(cls, pairs: Mapping[str, str]) -> Coding:
        """``{"0": "2", "1": "1"}``; the codomain is the targets in first-seen order."""
        domain = Alphabet(pairs)
        codomain = Alphabet(dict.fromkeys(Symbol(t) for t in pairs.values()))
        return cls(domain, codomain, {Symbol(k): Word._wrap((Symbol(v),)) for k, v in pairs.items()})

    def letter(self, symbol: Symbol | str) -> Symbol:
        return self[symbol][0]

    @property
    def is_identity(self) -> bool:
        return all(w.letters == (s,) for s, w in self._images.items())

    def mapping(self) -> dict[Symbol, Symbol]:
        return {s: w[0] for s, w in self._images.items()}


class IncidenceMatrix:
    """Entry (a, b) counts the occurrences of a in the image of b.

    Entries are Python integers (object dtype) so powers never wrap around.
    """

    def __init__(self, alphabet: Alphabet, entries: np.ndarray):
        n = len(alphabet)
        if entries.shape != (n, n):
            raise DomainMismatch(f"expected a {n}x{n} matrix, got {entries.shape}")
        self.alphabet = alphabet
        self.entries = entries

    @classmethod
    def of(cls, m: Morphism) -> IncidenceMatrix:
        if not m.is_endomorphism:
            raise DomainMismatch("incidence matrices need the codomain inside the domain")
        alphabet = m.domain
        entries = np.zeros((len(alphabet), len(alphabet)), dtype=object)
        for col, b in enumerate(alphabet):
            for a in m[b]:
                entries[alphabet.index(a), col] += 1
        return cls(alphabet, entries)

    def __getitem__(self, key: tuple[str, str]) -> int:
        a, b = key
        return int(self.entries[self.alphabet.index(a), self.alphabet.index(b)])

    @property
    def dimension(self) -> int:
        return len(self.alphabet)

    def __matmul__(self, other: IncidenceMatrix) -> IncidenceMatrix:
        if self.alphabet != other.alphabet:
            raise DomainMismatch("incidence matrices over different alphabets")
        return IncidenceMatrix(self.alphabet, self.entries @ other.entries)

    def power(self, exponent: int) -> IncidenceMatrix:
        return IncidenceMatrix(self.alphabet, np.linalg.matrix_power(self.entries, exponent))

    def column_sums(self) -> dict[Symbol, int]:
        return {b: int(total) for b, total in zip(self.alphabet, self.entries.sum(axis=0))}

    def diagonal(self) -> dict[Symbol, int]:
        return {a: int(self.entries[i, i]) for i, a in enumerate(self.alphabet)}

    def to_frame(self) -> pd.DataFrame:
        names = [s.name for s in self.alphabet]
        return pd.DataFrame(self.entries.astype(object), index=names, columns=names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.entries, other.entries)

    __hash__ = None

    def __repr__(self) -> str:
        return f"IncidenceMatrix({self.alphabet!r}, {self.entries.tolist()!r})"


def occurring_letters(m: Morphism, a0: Symbol | str) -> frozenset[Symbol]:
    """Letters of the iterative fixed point of *m* from *a0*.

    The least set containing a0 and closed under taking the letters of images.
    """
    from morphic_words.fixedpoint import is_prolongable

    if not is_prolongable(m, a0):
        raise NotProlongable(a0)
    seen = {Symbol(a0)}
    frontier = [Symbol(a0)]
    while frontier:
        for x in m[frontier.pop()]:
            if x not in seen:
                seen.add(x)
                frontier.append(x)
    return frozenset(seen)
