"""Quasi-shuffle products over the z-, bi- and xy-alphabets.

One recursive engine handles every product; a `Diamond` supplies the letter
product that decides which quasi-shuffle it is:

    aw * bv = a(w * bv) + b(aw * v) + (a <> b)(w * v)
"""

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..arith import binomial, lambda_coefficient
from ..exceptions import NotInZAlphabetError
from .letters import BiLetter, BiWord, LinComb, Word, linear_sum, make_word

logger = logging.getLogger(__name__)

LetterTerms = tuple[tuple[object, Fraction], ...]


@dataclass(frozen=True)
class Diamond:
    """A commutative, associative product of two letters.

    `product(a, b)` returns (letter, coefficient) pairs; None means a <> b = 0.
    """

    name: str
    product: Callable[[object, object], LetterTerms] | None = None

    def __call__(self, a, b) -> LetterTerms:
        if self.product is None:
            return ()
        return self.product(a, b)

    def __repr__(self) -> str:
        return f"Diamond({self.name})"


@lru_cache(maxsize=None)
def _bi_letter_product(s1: int, r1: int, s2: int, r2: int) -> LetterTerms:
    r = r1 + r2
    prefactor = binomial(r, r1)
    acc: dict[BiLetter, Fraction] = {BiLetter(s1 + s2, r): Fraction(1)}
    for j in range(1, s1 + 1):
        letter = BiLetter(j, r)
        acc[letter] = acc.get(letter, Fraction(0)) + lambda_coefficient(j, s1, s2)
    for j in range(1, s2 + 1):
        letter = BiLetter(j, r)
        acc[letter] = acc.get(letter, Fraction(0)) + lambda_coefficient(j, s2, s1)
    return tuple((letter, prefactor * c) for letter, c in sorted(acc.items()) if c)


def _bi_product(a: BiLetter, b: BiLetter) -> LetterTerms:
    return _bi_letter_product(a.s, a.r, b.s, b.r)


def _z_product(a: int, b: int) -> LetterTerms:
    return ((a + b, Fraction(1)),)


# The product on bi-letters whose quasi-shuffle is the bi-bracket stuffle
BI_STUFFLE = Diamond("bi-stuffle", _bi_product)
# z_a <> z_b = z_(a+b): the stuffle (harmonic product) of z-words
Z_STUFFLE = Diamond("stuffle", _z_product)
# <> = 0: the plain shuffle of letters
SHUFFLE = Diamond("shuffle")

DIAMONDS: dict[str, Diamond] = {d.name: d for d in (BI_STUFFLE, Z_STUFFLE, SHUFFLE)}


def diamond_bi(a: BiLetter, b: BiLetter) -> LinComb:
    """z_{s1,r1} <> z_{s2,r2} as a combination of one-letter bi-words."""
    return LinComb((BiWord((letter,)), c) for letter, c in _bi_product(a, b))


def diamond_extend(x: LinComb, y: LinComb, diamond: Diamond) -> LinComb:
    """Bilinear extension of a diamond to combinations of one-letter words."""
    acc = []
    for u, cu in x.items():
        for v, cv in y.items():
            terms = diamond(u[0], v[0])
            acc.append(LinComb((make_word(u, (c,)), coeff) for c, coeff in terms).scale(cu * cv))
    return linear_sum(acc)


def _prefix(head: Word, combo: LinComb) -> LinComb:
    return LinComb((head + w, c) for w, c in combo.items())


@lru_cache(maxsize=500_000)
def _quasi_shuffle(u: Word, v: Word, diamond: Diamond) -> LinComb:
    if not u:
        return LinComb.of(v)
    if not v:
        return LinComb.of(u)
    parts = [
        _prefix(u[:1], quasi_shuffle(u[1:], v, diamond)),
        _prefix(v[:1], quasi_shuffle(u, v[1:], diamond)),
    ]
    tail = None
    for letter, coeff in diamond(u[0], v[0]):
        if tail is None:
            tail = quasi_shuffle(u[1:], v[1:], diamond)
        parts.append(_prefix(make_word(u, (letter,)), tail).scale(coeff))
    return linear_sum(parts)


def quasi_shuffle(u: Word, v: Word, diamond: Diamond) -> LinComb:
    """The quasi-shuffle product of two words of the same alphabet."""
    # commutative, so one cache entry per unordered pair
    if v < u:
        u, v = v, u
    return _quasi_shuffle(u, v, diamond)


def quasi_shuffle_lincomb(x: LinComb, y: LinComb, diamond: Diamond) -> LinComb:
    """Bilinear extension of `quasi_shuffle`."""
    return linear_sum(
        quasi_shuffle(u, v, diamond).scale(cu * cv) for u, cu in x.items() for v, cv in y.items()
    )


def xy_shuffle(u: str, v: str) -> LinComb:
    """All interleavings of two xy-words, counted with multiplicity."""
    return quasi_shuffle(u, v, SHUFFLE)


def stuffle(u: Sequence[int], v: Sequence[int]) -> LinComb:
    """The stuffle product of z-words."""
    return quasi_shuffle(tuple(u), tuple(v), Z_STUFFLE)


# --- xy <-> z ---------------------------------------------------------------------


def z_to_xy(word: Sequence[int], reverse: bool = False) -> str:
    """z_j -> x^(j-1) y, or y x^(j-1) in the reversed convention."""
    if reverse:
        return "".join("y" + "x" * (j - 1) for j in word)
    return "".join("x" * (j - 1) + "y" for j in word)


def xy_to_z(word: str, reverse: bool = False) -> tuple[int, ...]:
    """Decompose an xy-word into z-letters; inverse of `z_to_xy`."""
    if not word:
        return ()
    if set(word) - {"x", "y"}:
        raise NotInZAlphabetError(f"{word!r} is not a word over x, y")
    if reverse:
        if word[0] != "y":
            raise NotInZAlphabetError(f"{word!r} does not start with y")
        return tuple(1 + len(block) for block in word[1:].split("y"))
    if word[-1] != "y":
        raise NotInZAlphabetError(f"{word!r} does not end with y")
    return tuple(1 + len(block) for block in word[:-1].split("y"))


def xy_lincomb_to_z(combo: LinComb, reverse: bool = False) -> LinComb:
    return combo.map_words(lambda w: xy_to_z(w, reverse))


def z_lincomb_to_xy(combo: LinComb, reverse: bool = False) -> LinComb:
    return combo.map_words(lambda w: z_to_xy(w, reverse))


def _as_z_word(word, reverse: bool) -> tuple[int, ...]:
    if isinstance(word, str):
        return xy_to_z(word, reverse)
    return tuple(word)


def ds(u, v, reverse: bool = False) -> LinComb:
    """Shuffle minus stuffle of two words, in the z-letter basis.

    Words may be given as xy-strings or as z-words; the shuffle is taken on the
    xy-encoding in the chosen convention.
    """
    zu, zv = _as_z_word(u, reverse), _as_z_word(v, reverse)
    sh = xy_lincomb_to_z(xy_shuffle(z_to_xy(zu, reverse), z_to_xy(zv, reverse)), reverse)
    return sh - stuffle(zu, zv)


def deconcat_coproduct(word: Word) -> list[tuple[Word, Word]]:
    """All splittings w = uv, from the empty prefix to the empty suffix."""
    return [(word[:i], word[i:]) for i in range(len(word) + 1)]


def iterated_coproduct(word: Word) -> list[tuple[Word, Word, Word]]:
    """All splittings w = abc, enumerated through (id x Delta) Delta."""
    return [
        (prefix, middle, suffix)
        for prefix, rest in deconcat_coproduct(word)
        for middle, suffix in deconcat_coproduct(rest)
    ]


def group_product(letters: Iterable, diamond: Diamond) -> LetterTerms:
    """Fold a run of letters with the diamond, as (letter, coefficient) pairs."""
    letters = list(letters)
    acc: dict[object, Fraction] = {letters[0]: Fraction(1)}
    for b in letters[1:]:
        nxt: dict[object, Fraction] = {}
        for a, ca in acc.items():
            for c, cc in diamond(a, b):
                nxt[c] = nxt.get(c, Fraction(0)) + ca * cc
        acc = {k: c for k, c in nxt.items() if c}
        if not acc:
            break
    return tuple(acc.items())


def clear_product_caches() -> None:
    _quasi_shuffle.cache_clear()
    logger.debug("Quasi-shuffle cache cleared")
