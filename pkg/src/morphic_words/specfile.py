"""Line-oriented spec files for morphic presentations.

    # Thue-Morse
    alphabet 0 1
    start 0
    rule 0 -> 0 1
    rule 1 -> 1 0

Optional ``code <sym> -> <sym>`` lines give the coding; letters without
one map to themselves. '#' starts a comment.
"""

from __future__ import annotations

from morphic_words.errors import InvalidSymbol, MissingRule, NotProlongable, ParseError, UnknownSymbol
from morphic_words.fixedpoint import MorphicPresentation
from morphic_words.morphism import Coding, Morphism
from morphic_words.nonuniformize import NonUniformizationResult
from morphic_words.words import Alphabet, Symbol, Word

KEYWORDS = ("alphabet", "start", "rule", "code")


def _symbol(token: str, line: int) -> Symbol:
    try:
        return Symbol(token)
    except InvalidSymbol:
        raise ParseError(f"invalid symbol {token!r}", line) from None


def _arrow(tokens: list[str], line: int) -> tuple[str, list[str]]:
    """Split ``X -> Y ...`` into X and the right-hand tokens."""
    if len(tokens) < 2 or tokens[1] != "->":
        raise ParseError(f"expected '{tokens[0] if tokens else '?'} -> ...'", line)
    return tokens[0], tokens[2:]


def parse_spec(text: str) -> MorphicPresentation:
    alphabet: Alphabet | None = None
    start: tuple[str, int] | None = None
    rules: dict[Symbol, tuple[list[str], int]] = {}
    codes: dict[Symbol, tuple[str, int]] = {}
    pending_lhs: list[tuple[str, int, str]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]
        if keyword == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate alphabet section", number)
            if not args:
                raise ParseError("empty alphabet", number)
            syms = [_symbol(t, number) for t in args]
            if len(set(syms)) != len(syms):
                raise ParseError("duplicate symbol in alphabet", number)
            alphabet = Alphabet(syms)
        elif keyword == "start":
            if start is not None:
                raise ParseError("duplicate start section", number)
            if len(args) != 1:
                raise ParseError("start takes exactly one symbol", number)
            start = (args[0], number)
        elif keyword == "rule":
            lhs, rhs = _arrow(args, number)
            sym = _symbol(lhs, number)
            if sym in rules:
                raise ParseError(f"duplicate rule for {sym.name!r}", number)
            rules[sym] = (rhs, number)
            pending_lhs.append((lhs, number, "rule"))
        elif keyword == "code":
            lhs, rhs = _arrow(args, number)
            if len(rhs) != 1:
                raise ParseError("a coding maps a symbol to exactly one symbol", number)
            sym = _symbol(lhs, number)
            if sym in codes:
                raise ParseError(f"duplicate code line for {sym.name!r}", number)
            codes[sym] = (rhs[0], number)
            pending_lhs.append((lhs, number, "code"))
        else:
            raise ParseError(f"unknown keyword {keyword!r} (expected one of {', '.join(KEYWORDS)})", number)

    if alphabet is None:
        raise ParseError("missing alphabet section")
    if start is None:
        raise ParseError("missing start section")

    for token, number, _ in pending_lhs:
        if token not in alphabet:
            raise UnknownSymbol(token, number)
    start_sym = _symbol(*start)
    if start_sym not in alphabet:
        raise UnknownSymbol(start_sym, start[1])

    images: dict[Symbol, Word] = {}
    for sym, (rhs, number) in rules.items():
        letters = [_symbol(t, number) for t in rhs]
        for letter in letters:
            if letter not in alphabet:
                raise UnknownSymbol(letter, number)
        images[sym] = Word(letters)
    for sym in alphabet:
        if sym not in images:
            raise MissingRule(sym)

    morphism = Morphism(alphabet, alphabet, {s: images[s] for s in alphabet})
    if codes:
        targets = {sym: _symbol(t, number) for sym, (t, number) in codes.items()}
        coding = Coding.from_pairs({s: targets.get(s, s) for s in alphabet})
    else:
        coding = Coding.identity(alphabet)
    try:
        return MorphicPresentation(morphism, start_sym, coding)
    except NotProlongable as exc:
        raise NotProlongable(start_sym, f"line {start[1]}") from exc


def read_spec(path) -> MorphicPresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def _rule_line(keyword: str, symbol: Symbol, image: Word) -> str:
    return f"{keyword} {symbol} -> {image}".rstrip()


def emit_spec(item: MorphicPresentation | NonUniformizationResult) -> str:
    """Serialize a presentation (or a pipeline result) as spec-file text."""
    lines: list[str] = []
    if isinstance(item, NonUniformizationResult):
        t = item.trace
        lines.append("# non-uniform presentation")
        if t.fresh_start is not None:
            lines.append(f"# fresh start: {t.fresh_start}")
        lines.append(f"# power applied: {t.power_applied}")
        lines.append(f"# b = {t.b}, c = {t.c}, b' = {t.b_prime}, c' = {t.c_prime}")
        lines.append(f"# |z| = {len(t.z)}, |t| = {len(t.t)}")
        p = item.presentation
    else:
        p = item

    m = p.morphism
    lines.append("alphabet " + " ".join(s.name for s in m.domain))
    lines.append(f"start {p.start}")
    lines.extend(_rule_line("rule", s, w) for s, w in m.images.items())
    # the coding may cover letters the spec never declares
    codes = {s: p.coding.letter(s) for s in m.domain}
    if any(s != t for s, t in codes.items()):
        lines.extend(f"code {s} -> {t}" for s, t in codes.items())
    return "\n".join(lines) + "\n"


def write_spec(item: MorphicPresentation | NonUniformizationResult, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_spec(item))
