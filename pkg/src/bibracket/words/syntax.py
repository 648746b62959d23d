"""Text syntax for bi-words and their linear combinations.

    word    := "[" s_1,...,s_l [ "|" r_1,...,r_l ] "]"     e.g. [3,2 | 1,0]
    term    := [ rational "*" ] word  |  rational
    lincomb := [sign] term ( sign term )*  |  "0"

The lower list may be omitted when it is all zeros; a bare rational is a
multiple of the empty word (the constant 1). `format_lincomb` and
`parse_lincomb` are exact inverses on formatted text.
"""

from fractions import Fraction

import pyparsing as pp

from ..arith import format_rational
from ..exceptions import InvalidIndexError, WordSyntaxError
from .letters import BiWord, LinComb, Word

_integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
_int_list = pp.Group(_integer + pp.ZeroOrMore(pp.Suppress(",") + _integer))
_word = pp.Group(
    pp.Suppress("[")
    + pp.Optional(_int_list("s") + pp.Optional(pp.Suppress("|") + _int_list("r")))
    + pp.Suppress("]")
)("word")


def _to_fraction(text: str, loc: int, tokens) -> Fraction:
    _, _, denominator = tokens[0].partition("/")
    if denominator and not int(denominator):
        raise pp.ParseFatalException(text, loc, "zero denominator")
    return Fraction(tokens[0])


_rational = pp.Combine(pp.Word(pp.nums) + pp.Optional("/" + pp.Word(pp.nums)))(
    "coeff"
).set_parse_action(_to_fraction)
_term = pp.Group((pp.Optional(_rational + pp.Suppress("*")) + _word) | _rational)
_sign = pp.one_of("+ -")
_lincomb = pp.Optional(_sign, default="+") + _term + pp.ZeroOrMore(_sign + _term)
_lincomb_expr = _lincomb + pp.StringEnd()
_word_expr = _word + pp.StringEnd()
_indices_expr = (
    pp.Optional(pp.Suppress("[")) + _int_list("s") + pp.Optional(pp.Suppress("]")) + pp.StringEnd()
)


def _build_word(group) -> BiWord:
    s = list(group["s"]) if "s" in group else []
    r = list(group["r"]) if "r" in group else None
    try:
        return BiWord.from_indices(s, r)
    except InvalidIndexError as e:
        raise WordSyntaxError(str(group), reason=str(e)) from e


def parse_word(text: str) -> BiWord:
    """Parse `[s_1,...,s_l | r_1,...,r_l]` into a `BiWord`."""
    try:
        parsed = _word_expr.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise WordSyntaxError(text, e.column, e.msg) from e
    try:
        return _build_word(parsed["word"])
    except WordSyntaxError as e:
        raise WordSyntaxError(text, reason=str(e)) from e


def parse_lincomb(text: str) -> LinComb:
    """Parse a `+- c/d * word` sum into a `LinComb` of bi-words."""
    if text.strip() == "0":
        return LinComb()
    try:
        tokens = _lincomb_expr.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise WordSyntaxError(text, e.column, e.msg) from e
    terms: dict[BiWord, Fraction] = {}
    for sign, term in zip(tokens[0::2], tokens[1::2]):
        coeff = term["coeff"] if "coeff" in term else Fraction(1)
        word = _build_word(term["word"]) if "word" in term else BiWord()
        if sign == "-":
            coeff = -coeff
        terms[word] = terms.get(word, Fraction(0)) + coeff
    return LinComb(terms)


def parse_indices(text: str) -> tuple[int, ...]:
    """Parse "2,1,1" or "[2,1,1]" into an index tuple."""
    try:
        parsed = _indices_expr.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise WordSyntaxError(text, e.column, e.msg) from e
    values = tuple(parsed["s"])
    if any(v < 1 for v in values):
        raise WordSyntaxError(text, reason="indices must be positive")
    return values


def format_word(word: Word) -> str:
    """Canonical text for a bi-word, z-word or xy-word."""
    if isinstance(word, str):
        return word
    if isinstance(word, BiWord):
        s = ",".join(str(a.s) for a in word)
        if word.is_bracket():
            return f"[{s}]"
        r = ",".join(str(a.r) for a in word)
        return f"[{s} | {r}]"
    return "[" + ",".join(str(j) for j in word) + "]"


def format_lincomb(combo: LinComb) -> str:
    """Canonical text of a combination, terms in (weight, length, index) order."""
    items = combo.sorted_items()
    if not items:
        return "0"
    pieces = []
    for i, (word, coeff) in enumerate(items):
        mag = abs(coeff)
        if not word:
            body = format_rational(mag)
        elif mag == 1:
            body = format_word(word)
        else:
            body = f"{format_rational(mag)} * {format_word(word)}"
        if i == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(pieces)
