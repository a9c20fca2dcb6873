"""Exception hierarchy.

Every error carries the process exit code the CLI reports for it:
  - 2: bad input (symbols, rule tables, spec files, violated preconditions)
  - 3: a bounded search gave up (expanding letter, squaring, periodicity guard)
"""

from __future__ import annotations


class MorphicError(Exception):
    """Base class for all errors raised by morphic-words."""

    exit_code = 2


class InvalidSymbol(MorphicError, ValueError):
    def __init__(self, name: str):
        super().__init__(f"invalid symbol name {name!r}")
        self.name = name


class DuplicateSymbol(MorphicError, ValueError):
    def __init__(self, symbol: str):
        super().__init__(f"duplicate symbol {symbol!r} in alphabet")
        self.symbol = symbol


class EmptyAlphabet(MorphicError, ValueError):
    def __init__(self):
        super().__init__("an alphabet needs at least one symbol")


class AlienSymbol(MorphicError, ValueError):
    def __init__(self, symbol: str, where: str = ""):
        suffix = f" ({where})" if where else ""
        super().__init__(f"symbol {symbol!r} does not belong to the alphabet{suffix}")
        self.symbol = symbol


class DomainMismatch(MorphicError, ValueError):
    pass


class NotProlongable(MorphicError):
    def __init__(self, start: str, reason: str = ""):
        suffix = f": {reason}" if reason else ""
        super().__init__(f"morphism is not prolongable from {start!r}{suffix}")
        self.start = start


class NotUniform(MorphicError):
    pass


class ArityOne(MorphicError):
    pass


class NotExpanding(MorphicError):
    def __init__(self, symbol: str):
        super().__init__(f"image of {symbol!r} does not contain two occurrences of {symbol!r}")
        self.symbol = symbol


class NotFound(MorphicError):
    exit_code = 3

    def __init__(self, bound: int, what: str):
        super().__init__(f"no {what} found within bound {bound}")
        self.bound = bound
        self.what = what


class LikelyPeriodic(MorphicError):
    exit_code = 3

    def __init__(self, form):
        super().__init__(
            f"presented prefix is consistent with the ultimately periodic form {form}; "
            "use the periodic branch, or assert aperiodicity explicitly"
        )
        self.form = form


class TooShort(MorphicError, ValueError):
    def __init__(self, length: int):
        super().__init__(f"a word of length {length} cannot be cut into two non-empty words of unequal length")
        self.length = length


class IndexOutOfRange(MorphicError, IndexError):
    pass


class BadDecomposition(MorphicError, ValueError):
    pass


class BadPreperiod(MorphicError, ValueError):
    pass


class EmptyPeriod(MorphicError, ValueError):
    def __init__(self):
        super().__init__("the period of an ultimately periodic form must be non-empty")


class InsufficientOccurrences(MorphicError):
    def __init__(self, marker: str, wanted: int, found: int, budget: int):
        super().__init__(
            f"only {found} of {wanted} occurrences of {marker!r} within the first {budget} letters"
        )
        self.marker = marker
        self.wanted = wanted
        self.found = found
        self.budget = budget


class UnknownName(MorphicError, LookupError):
    def __init__(self, name: str, known):
        super().__init__(f"unknown catalog entry {name!r} (known: {', '.join(known)})")
        self.name = name


class NotCompact(MorphicError, ValueError):
    def __init__(self, symbol: str):
        super().__init__(f"compact rendering needs single-character names, got {symbol!r}")
        self.symbol = symbol


# ── Spec files ──────────────────────────────────────────────────────────────

class SpecError(MorphicError):
    """An error located in a spec file."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class ParseError(SpecError):
    pass


class UnknownSymbol(SpecError):
    def __init__(self, symbol: str, line: int | None = None):
        super().__init__(f"undeclared symbol {symbol!r}", line)
        self.symbol = symbol


class MissingRule(SpecError):
    def __init__(self, symbol: str):
        super().__init__(f"no rule for symbol {symbol!r}")
        self.symbol = symbol
