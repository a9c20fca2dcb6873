"""Executable checks for non-uniform presentations.

Reports are data: the CLI renders them, tests assert on them. Every
failing check carries a finite witness (an index, a set of letters, or a
pair of words).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

import numpy as np
import pandas as pd

from morphic_words.errors import InsufficientOccurrences
from morphic_words.fixedpoint import FixedPointStream, MorphicPresentation, fixed_point_prefix, is_prolongable
from morphic_words.morphism import Coding, Morphism, occurring_letters
from morphic_words.nonuniformize import NonUniformizationResult, PeriodicForm
from morphic_words.words import Symbol, Word

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    @classmethod
    def combine(cls, reports: Iterable[VerificationReport]) -> VerificationReport:
        return cls(tuple(c for r in reports for c in r.checks))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "check": [c.name for c in self.checks],
                "passed": [c.passed for c in self.checks],
                "witness": ["" if c.witness is None else _render_witness(c.witness) for c in self.checks],
            }
        )


def _render_witness(witness: Any) -> str:
    if isinstance(witness, tuple) and len(witness) == 2 and all(isinstance(w, Word) for w in witness):
        left, right = witness
        i = first_difference(left, right)
        return f"differ at {i}: {len(left)} vs {len(right)} letters"
    if isinstance(witness, (set, frozenset)):
        return "{" + ", ".join(sorted(witness)) + "}"
    return str(witness)


def first_difference(a: Word, b: Word) -> int | None:
    """Least index where *a* and *b* differ (or where the shorter one ends)."""
    for i, (x, y) in enumerate(zip(a.letters, b.letters)):
        if x != y:
            return i
    if len(a) != len(b):
        return min(len(a), len(b))
    return None


# ── Oracles ─────────────────────────────────────────────────────────────────

def verify_prefix_equal(p1: MorphicPresentation, p2: MorphicPresentation, n: int) -> VerificationReport:
    """Do the two presentations agree on their first *n* letters?"""
    i = first_difference(p1.prefix(n), p2.prefix(n))
    return VerificationReport((Check("prefix equality", i is None, i),))


def marker_prefix_ends(
    gamma_prime: Morphism,
    start: Symbol | str,
    marker: Symbol | str,
    kmax: int,
    budget: int = DEFAULT_BUDGET,
) -> list[int]:
    """Indices of the first *kmax* occurrences of *marker* in the fixed point.

    The prefix ending at the k-th index is P_k: it ends with the marker and
    contains it exactly k times.
    """
    ends: list[int] = []
    if kmax <= 0:
        return ends
    for i, letter in enumerate(FixedPointStream(gamma_prime, start)):
        if i >= budget:
            break
        if letter == marker:
            ends.append(i)
            if len(ends) == kmax:
                return ends
    raise InsufficientOccurrences(marker, kmax, len(ends), budget)


def verify_commutation(
    gamma: Morphism,
    gamma_prime: Morphism,
    coding: Coding,
    start: Symbol | str,
    kmax: int,
    marker: Symbol | str | None = None,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Check D(gamma'(P_k)) = gamma(D(P_k)) for k = 1..kmax.

    *marker* is c'; by default the last letter of gamma' that gamma lacks.
    Without any such letter P_k is simply the prefix of length k. Letters
    that D fixes are also checked one by one: D(gamma'(x)) = gamma(x).
    """
    checks: list[Check] = []
    for x in gamma_prime.domain:
        if x in gamma.domain and coding.letter(x) == x:
            lhs, rhs = coding.apply(gamma_prime[x]), gamma[x]
            checks.append(Check(f"letter {x}", lhs == rhs, None if lhs == rhs else (lhs, rhs)))

    if marker is None:
        fresh = [x for x in gamma_prime.domain if x not in gamma.domain]
        marker = fresh[-1] if fresh else None
    if marker is None:
        ends = list(range(kmax))
    else:
        ends = marker_prefix_ends(gamma_prime, start, marker, kmax, budget)

    stream = FixedPointStream(gamma_prime, start)
    for k, end in enumerate(ends, start=1):
        prefix = stream.take(end + 1)
        lhs = coding.apply(gamma_prime.apply(prefix))
        rhs = gamma.apply(coding.apply(prefix))
        checks.append(Check(f"commutation P_{k}", lhs == rhs, None if lhs == rhs else (lhs, rhs)))
    return VerificationReport(tuple(checks))


def verify_result_commutation(result: NonUniformizationResult, kmax: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    return verify_commutation(
        result.gamma,
        result.gamma_prime,
        _construction_coding(result),
        result.start,
        kmax,
        marker=result.trace.c_prime,
        budget=budget,
    )


def _construction_coding(result: NonUniformizationResult) -> Coding:
    """D alone: b' -> b, c' -> c, everything else fixed."""
    t = result.trace
    return Coding.from_pairs(
        {s: (t.b if s == t.b_prime else t.c if s == t.c_prime else s) for s in result.gamma_prime.domain}
    )


def verify_minimal_alphabet(m: Morphism, start: Symbol | str) -> VerificationReport:
    """Does every letter of the domain occur in the fixed point?"""
    occurring = occurring_letters(m, start)
    missing = frozenset(s for s in m.domain if s not in occurring)
    return VerificationReport((Check("minimal alphabet", not missing, missing or None),))


def pairing_violation(word: Word, b_prime: Symbol | str, c_prime: Symbol | str) -> int | None:
    """First index where a b' is not followed by c', or a c' not preceded by b'."""
    letters = word.letters
    last = len(letters) - 1
    for i, x in enumerate(letters):
        if x == b_prime and i < last and letters[i + 1] != c_prime:
            return i
        if x == c_prime and (i == 0 or letters[i - 1] != b_prime):
            return i
    return None


def verify_nonuniform_presentation(
    result: NonUniformizationResult | MorphicPresentation,
    original: MorphicPresentation,
    n: int,
) -> VerificationReport:
    """Every obligation of a non-uniform presentation of *original*.

    A bare presentation gets the checks that need no construction trace.
    """
    if isinstance(result, NonUniformizationResult):
        presentation, trace = result.presentation, result.trace
    else:
        presentation, trace = result, None
    m, start = presentation.morphism, presentation.start

    arity = m.uniform_arity
    checks = [Check("non-uniform", arity is None, arity)]
    prolongable = is_prolongable(m, start)
    checks.append(Check("prolongable", prolongable, None if prolongable else start))
    if prolongable:
        checks.extend(verify_minimal_alphabet(m, start).checks)
    checks.extend(verify_prefix_equal(presentation, original, n).checks)

    if trace is not None:
        i = pairing_violation(fixed_point_prefix(m, start, n), trace.b_prime, trace.c_prime)
        checks.append(Check("pairing", i is None, i))
        base = len(occurring_letters(original.morphism, original.start))
        added = len(m.domain) - base
        expected = 3 if trace.fresh_start is not None else 2
        checks.append(Check("cardinality", added == expected, None if added == expected else added))
    return VerificationReport(tuple(checks))


# ── Periodicity guard ───────────────────────────────────────────────────────

def bounded_period_check(w: Word, max_preperiod: int, max_period: int) -> PeriodicForm | None:
    """The least (|u|, |v|) with w = u v^m (prefix of v), or None.

    The tail after u must run past two full copies of v (|w| > |u| + 2|v|),
    so a bare square at the end of w is not reported.

    A returned form only says the given prefix is consistent with u v v v ...;
    it never certifies periodicity of an infinite sequence.
    """
    codes, _ = pd.factorize(np.array(w.letters, dtype=object))
    n = len(codes)
    for u in range(max_preperiod + 1):
        for p in range(1, max_period + 1):
            if u + 2 * p >= n:
                break
            if np.array_equal(codes[u + p:], codes[u:n - p]):
                return PeriodicForm(w[:u], w[u:u + p])
    return None
