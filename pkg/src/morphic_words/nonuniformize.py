"""Non-uniform presentations of automatic sequences.

Given coding(fixed point of a k-uniform morphism), build a non-uniform
morphism gamma' and a coding whose composition presents the same sequence:

  1. trim the morphism to the letters that occur in its fixed point
  2. give the fixed point a first letter that never recurs (fresh alpha)
  3. find an expanding letter b and raise the morphism to that power
  4. square until gamma(b) = w1 b c w2 with w1, w2 non-empty
  5. replace the factor b c of gamma(b) by two fresh letters b' c' whose
     images cut gamma(bc) into two pieces of unequal length

At most three letters (alpha, b', c') are added. Ultimately periodic
sequences take a separate, direct route (`periodic_fixed_point`).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple

from morphic_words.errors import (
    ArityOne,
    BadDecomposition,
    BadPreperiod,
    EmptyPeriod,
    IndexOutOfRange,
    LikelyPeriodic,
    NotExpanding,
    NotFound,
    NotProlongable,
    NotUniform,
    TooShort,
)
from morphic_words.fixedpoint import MorphicPresentation, is_prolongable
from morphic_words.morphism import Coding, IncidenceMatrix, Morphism, occurring_letters
from morphic_words.words import Alphabet, Symbol, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineConfig:
    """Search bounds and the aperiodicity guard."""

    expanding_bound: int = 64
    squaring_bound: int = 8
    guard_length: int = 4096
    max_preperiod: int = 64
    max_period: int = 64
    assert_aperiodic: bool = False


@dataclass(frozen=True)
class PeriodicForm:
    """The ultimately periodic sequence u v v v ..."""

    preperiod: Word
    period: Word

    def __post_init__(self):
        if not self.period:
            raise EmptyPeriod()

    def prefix(self, n: int) -> Word:
        u, v = self.preperiod, self.period
        if n <= len(u):
            return u[:n]
        reps = -(-(n - len(u)) // len(v))
        return (u + v * reps)[:n]

    def __str__(self) -> str:
        return f"({self.preperiod}) ({self.period})^ω"


@dataclass(frozen=True)
class ConstructionTrace:
    """Provenance of a non-uniform presentation."""

    fresh_start: Symbol | None
    power_applied: int
    expanding_exponent: int
    squarings: int
    b: Symbol
    c: Symbol
    b_prime: Symbol
    c_prime: Symbol
    w1: Word
    w2: Word
    z: Word
    t: Word
    # gamma(bc) was cut after this many letters
    split_at: int = 1


@dataclass(frozen=True)
class NonUniformizationResult:
    gamma_prime: Morphism
    coding: Coding
    start: Symbol
    trace: ConstructionTrace
    gamma: Morphism = field(compare=False)
    input_letters: int = field(compare=False)

    def __post_init__(self):
        # validates prolongability and coding totality
        self.presentation

    @cached_property
    def presentation(self) -> MorphicPresentation:
        return MorphicPresentation(self.gamma_prime, self.start, self.coding)

    @property
    def alphabet_size(self) -> int:
        return len(self.gamma_prime.domain)

    def summary(self) -> dict:
        t = self.trace
        return {
            "fresh_start": t.fresh_start.name if t.fresh_start else None,
            "power_applied": t.power_applied,
            "b": t.b.name,
            "c": t.c.name,
            "b_prime": t.b_prime.name,
            "c_prime": t.c_prime.name,
            "len_z": len(t.z),
            "len_t": len(t.t),
            "alphabet_in": self.input_letters,
            "alphabet_out": self.alphabet_size,
        }


class InteriorOccurrence(NamedTuple):
    morphism: Morphism
    index: int
    squarings: int


# ── Pipeline steps ──────────────────────────────────────────────────────────

def _require_uniform(m: Morphism) -> int:
    k = m.uniform_arity
    if k is None:
        raise NotUniform(f"morphism is not uniform: {m}")
    if k == 1:
        raise ArityOne("1-uniform morphisms have no prolongable fixed point")
    return k


def first_letter_recurs(m: Morphism, a0: Symbol | str) -> bool:
    """Whether *a0* occurs in the fixed point of *m* beyond index 0.

    It does iff some occurring letter y has a0 in m(y) at a position other
    than the leading position of m(a0).
    """
    for y in occurring_letters(m, a0):
        positions = m[y].occurrences(a0)
        if y == a0:
            positions = [p for p in positions if p != 0]
        if positions:
            return True
    return False


def uniquify_first_letter(m: Morphism, a0: Symbol | str) -> tuple[Morphism, Coding, Symbol]:
    """Make the first letter of the fixed point occur only at index 0.

    Returns the (possibly extended) morphism, the coding back to the original
    letters, and the new start letter.
    """
    a0 = Symbol(a0)
    _require_uniform(m)
    if not is_prolongable(m, a0):
        raise NotProlongable(a0)
    if not first_letter_recurs(m, a0):
        return m, Coding.identity(m.domain), a0
    alpha = m.domain.fresh("alpha")
    hat = m.extend({alpha: Word._wrap((alpha,)) + m[a0][1:]}, first=True)
    coding = Coding.from_pairs({alpha: a0, **{s: s for s in m.domain}})
    logger.debug("first letter %s recurs; fresh start %s", a0, alpha)
    return hat, coding, alpha


def _expanding_candidates(m: Morphism, a0: Symbol, bound: int) -> Iterator[tuple[Symbol, int]]:
    """(b, e) with m^e(b) containing b twice, e ascending, then alphabet order."""
    occurring = occurring_letters(m, a0)
    letters = [s for s in m.domain if s in occurring]
    base = IncidenceMatrix.of(m)
    current = base
    for e in range(1, bound + 1):
        if e > 1:
            current = current @ base
        diagonal = current.diagonal()
        for b in letters:
            if diagonal[b] >= 2:
                yield b, e


def find_expanding_letter(m: Morphism, a0: Symbol | str, bound: int = 64) -> tuple[Symbol, int]:
    """The first occurring letter b and least exponent e with two b's in m^e(b)."""
    a0 = Symbol(a0)
    if not is_prolongable(m, a0):
        raise NotProlongable(a0)
    for b, e in _expanding_candidates(m, a0, bound):
        return b, e
    raise NotFound(bound, "expanding letter")


def expanding_letters(m: Morphism, a0: Symbol | str, bound: int = 64) -> dict[Symbol, int]:
    """Every occurring expanding letter with its least exponent up to *bound*."""
    a0 = Symbol(a0)
    if not is_prolongable(m, a0):
        raise NotProlongable(a0)
    total = len(occurring_letters(m, a0))
    found: dict[Symbol, int] = {}
    for b, e in _expanding_candidates(m, a0, bound):
        found.setdefault(b, e)
        if len(found) == total:
            break
    return found


def ensure_interior_occurrence(m: Morphism, b: Symbol | str, bound: int = 8) -> InteriorOccurrence:
    """Square *m* until m(b) has an occurrence of b at an index i with 1 <= i <= |m(b)| - 3."""
    b = Symbol(b)
    if len(m[b].occurrences(b)) < 2:
        raise NotExpanding(b)
    current = m
    for s in range(bound + 1):
        image = current[b]
        last = len(image) - 3
        for i in image.occurrences(b):
            if 1 <= i <= last:
                return InteriorOccurrence(current, i, s)
        if s < bound:
            current = current.compose(current)
    raise NotFound(bound, f"interior occurrence of {b!r}")


def locate_bc(m: Morphism, b: Symbol | str, i: int) -> tuple[Word, Symbol, Word]:
    """Split m(b) = w1 b c w2 around the occurrence of b at index *i*."""
    image = m[b]
    if not 1 <= i <= len(image) - 3:
        raise IndexOutOfRange(f"index {i} leaves w1 or w2 empty in an image of length {len(image)}")
    if image[i] != b:
        raise IndexOutOfRange(f"m({b})[{i}] is {image[i]!r}, not {b!r}")
    return image[:i], image[i + 1], image[i + 2:]


def split_unequal(w: Word) -> tuple[Word, Word]:
    """Cut *w* into its first letter and the (longer) rest."""
    if len(w) <= 2:
        raise TooShort(len(w))
    return w[:1], w[1:]


def build_nonuniform(m: Morphism, b: Symbol | str, w1: Word, c: Symbol | str, w2: Word) -> tuple[Morphism, Coding]:
    """Replace the factor b c of m(b) by fresh letters b' c'.

    Returns gamma' (with b' and c' appended to the alphabet) and the coding D
    sending b' to b, c' to c and fixing every other letter.
    """
    b, c = Symbol(b), Symbol(c)
    if not w1 or not w2:
        raise BadDecomposition("w1 and w2 must both be non-empty")
    bc = Word._wrap((b, c))
    if m[b] != w1 + bc + w2:
        raise BadDecomposition(f"m({b}) is not {w1} {b} {c} {w2}")
    b_prime = m.domain.fresh(b.name, mark="'")
    c_prime = m.domain.union([b_prime]).fresh(c.name, mark="'")
    z, t = split_unequal(m.apply(bc))
    gamma_prime = m.extend(
        {
            b: w1 + Word._wrap((b_prime, c_prime)) + w2,
            b_prime: z,
            c_prime: t,
        }
    )
    coding = Coding.from_pairs({**{s: s for s in m.domain}, b_prime: b, c_prime: c})
    return gamma_prime, coding


# ── Entry points ────────────────────────────────────────────────────────────

def nonuniformize(p: MorphicPresentation, config: PipelineConfig | None = None) -> NonUniformizationResult:
    """A non-uniform morphic presentation of the k-automatic sequence presented by *p*."""
    from morphic_words.verify import bounded_period_check

    config = config or PipelineConfig()
    occurring = occurring_letters(p.morphism, p.start)
    trimmed = p.morphism.restrict(occurring)
    # only the rules of occurring letters need to be uniform
    _require_uniform(trimmed)

    if not config.assert_aperiodic:
        form = bounded_period_check(p.prefix(config.guard_length), config.max_preperiod, config.max_period)
        if form is not None:
            raise LikelyPeriodic(form)

    logger.info("trimmed alphabet %s to %d occurring letters", p.morphism.domain, len(trimmed.domain))

    hat, unique_coding, start = uniquify_first_letter(trimmed, p.start)
    b, e = find_expanding_letter(hat, start, config.expanding_bound)
    logger.info("expanding letter %s at exponent %d", b, e)

    interior = ensure_interior_occurrence(hat.power(e), b, config.squaring_bound)
    gamma = interior.morphism
    w1, c, w2 = locate_bc(gamma, b, interior.index)
    gamma_prime, d = build_nonuniform(gamma, b, w1, c, w2)
    b_prime, c_prime = gamma_prime.domain[-2], gamma_prime.domain[-1]

    coding = p.coding.restrict(occurring).compose(unique_coding).compose(d)
    trace = ConstructionTrace(
        fresh_start=start if start != p.start else None,
        power_applied=e * 2**interior.squarings,
        expanding_exponent=e,
        squarings=interior.squarings,
        b=b,
        c=c,
        b_prime=b_prime,
        c_prime=c_prime,
        w1=w1,
        w2=w2,
        z=gamma_prime[b_prime],
        t=gamma_prime[c_prime],
    )
    logger.info(
        "gamma' over %d letters: b=%s c=%s |z|=%d |t|=%d",
        len(gamma_prime.domain), b, c, len(trace.z), len(trace.t),
    )
    return NonUniformizationResult(
        gamma_prime=gamma_prime,
        coding=coding,
        start=start,
        trace=trace,
        gamma=gamma,
        input_letters=len(occurring),
    )


def periodic_fixed_point(pf: PeriodicForm, ambient: Alphabet | None = None) -> MorphicPresentation:
    """u v v v ... as the fixed point of first(u) -> u, a -> v^j, with j|v| != |u|."""
    u, v = pf.preperiod, pf.period
    if len(u) == 1:
        u = u + v
    if not u:
        raise BadPreperiod("the preperiod needs a first letter that occurs nowhere else")
    first = u[0]
    if first in u[1:] or first in v:
        raise BadPreperiod(f"first letter {first!r} recurs in the preperiod or the period")
    j = 1
    while j * len(v) == len(u):
        j += 1
    domain = Alphabet([first]).union(u).union(v)
    if ambient is not None:
        domain = domain.union(ambient)
    images = {a: v * j for a in domain}
    images[first] = u
    morphism = Morphism(domain, domain, images)
    return MorphicPresentation(morphism, first, Coding.identity(domain))


def periodic_presentation(form: PeriodicForm, ambient: Alphabet | None = None) -> MorphicPresentation:
    """Present u v v v ... with a non-uniform morphism whatever its first letter.

    The first letter is renamed to a fresh alpha; the coding maps it back.
    """
    u, v = form.preperiod, form.period
    if not u:
        u = v
    letters = Alphabet([u[0]]).union(u).union(v)
    if ambient is not None:
        letters = letters.union(ambient)
    alpha = letters.fresh("alpha")
    renamed = PeriodicForm(Word._wrap((alpha,)) + u[1:], v)
    base = periodic_fixed_point(renamed, ambient)
    coding = Coding.from_pairs({s: (u[0] if s == alpha else s) for s in base.alphabet})
    return MorphicPresentation(base.morphism, alpha, coding)
