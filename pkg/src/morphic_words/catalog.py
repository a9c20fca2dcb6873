"""Named presentations used as fixtures by the CLI and the test suite.

Each entry is built from a literal rule table:
  - thue-morse:      0 -> 01, 1 -> 10 (2-uniform)
  - fibonacci:       a -> ab, b -> a (non-uniform)
  - z-nonuniform:    2 -> 210, 1 -> 20, 0 -> 1 (runs of 1s between 0s in Thue-Morse)
  - z-automatic:     0 -> 01, 1 -> 20, 2 -> 23, 3 -> 02, coded 0 -> 2, 1 -> 1, 2 -> 0, 3 -> 1
  - thue-morse-junk: Thue-Morse plus a letter 2 -> 1101 that never occurs
"""

from __future__ import annotations

from dataclasses import dataclass

from morphic_words.errors import UnknownName
from morphic_words.fixedpoint import MorphicPresentation
from morphic_words.morphism import Coding, Morphism
from morphic_words.words import Word


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    presentation: MorphicPresentation
    notes: str


def get_thue_morse() -> CatalogEntry:
    """The 2-uniform Thue-Morse morphism, identity coding."""
    mu = Morphism.from_rules({"0": "01", "1": "10"})
    return CatalogEntry("thue-morse", MorphicPresentation(mu, "0"), "0 -> 01, 1 -> 10, start 0")


def get_fibonacci() -> CatalogEntry:
    tau = Morphism.from_rules({"a": "ab", "b": "a"})
    return CatalogEntry("fibonacci", MorphicPresentation(tau, "a"), "a -> ab, b -> a, start a")


def get_z_nonuniform() -> CatalogEntry:
    """Non-uniform presentation of the run-length sequence of Thue-Morse."""
    sigma = Morphism.from_rules({"2": "210", "1": "20", "0": "1"})
    return CatalogEntry(
        "z-nonuniform",
        MorphicPresentation(sigma, "2"),
        "2 -> 210, 1 -> 20, 0 -> 1, start 2",
    )


def get_z_automatic() -> CatalogEntry:
    """The same run-length sequence as a coded 2-uniform fixed point."""
    psi = Morphism.from_rules({"0": "01", "1": "20", "2": "23", "3": "02"})
    kappa = Coding.from_pairs({"0": "2", "1": "1", "2": "0", "3": "1"})
    return CatalogEntry(
        "z-automatic",
        MorphicPresentation(psi, "0", kappa),
        "0 -> 01, 1 -> 20, 2 -> 23, 3 -> 02, start 0; coding 0 -> 2, 1 -> 1, 2 -> 0, 3 -> 1",
    )


def get_thue_morse_junk() -> CatalogEntry:
    """Thue-Morse over {0, 1, 2}: same fixed point, but 2 never occurs in it."""
    junk = Morphism.from_rules({"0": "01", "1": "10", "2": "1101"})
    return CatalogEntry(
        "thue-morse-junk",
        MorphicPresentation(junk, "0"),
        "0 -> 01, 1 -> 10, 2 -> 1101, start 0 (alphabet is not minimal)",
    )


CATALOG = {
    "thue-morse": get_thue_morse,
    "fibonacci": get_fibonacci,
    "z-nonuniform": get_z_nonuniform,
    "z-automatic": get_z_automatic,
    "thue-morse-junk": get_thue_morse_junk,
}


def get(name: str) -> CatalogEntry:
    try:
        factory = CATALOG[name]
    except KeyError:
        raise UnknownName(name, CATALOG) from None
    return factory()


def fibonacci_recurrence_words(n: int) -> list[Word]:
    """u0 = a, u1 = ab, u(k+2) = u(k+1) u(k); returns [u0, ..., un]."""
    if n < 0:
        raise ValueError("n must be non-negative")
    words = [Word.of("a"), Word.of("ab")]
    while len(words) <= n:
        words.append(words[-1] + words[-2])
    return words[: n + 1]
