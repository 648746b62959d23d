"""Letters, words and finite linear combinations of words.

Three alphabets share one set of word operations:

- z-words: tuples of positive ints, the letter j standing for z_j;
- bi-words: `BiWord`, a tuple of `BiLetter` z_{s,r};
- xy-words: plain strings over "x" and "y".

Every operation on words only slices and concatenates, so the same engine
serves all three.
"""

from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..exceptions import InvalidIndexError

Word = Any  # tuple[int, ...] | BiWord | str


@dataclass(frozen=True, order=True)
class BiLetter:
    """The letter z_{s,r}: upper index s >= 1, lower index r >= 0."""

    s: int
    r: int = 0

    def __post_init__(self):
        if self.s < 1 or self.r < 0:
            raise InvalidIndexError(f"bi-letter needs s >= 1 and r >= 0, got ({self.s}, {self.r})")

    @property
    def weight(self) -> int:
        return self.s + self.r

    def __repr__(self) -> str:
        return f"z({self.s},{self.r})"


class BiWord(tuple):
    """A finite sequence of bi-letters; the empty word stands for the constant 1."""

    def __new__(cls, letters: Iterable[BiLetter] = ()):
        return super().__new__(cls, letters)

    @classmethod
    def from_indices(cls, s: Sequence[int], r: Sequence[int] | None = None) -> "BiWord":
        """Build mb{s_1..s_l}{r_1..r_l}; r defaults to all zeros."""
        if r is None:
            r = [0] * len(s)
        if len(s) != len(r):
            raise InvalidIndexError(f"index lists differ in length: {list(s)} vs {list(r)}")
        return cls(BiLetter(a, b) for a, b in zip(s, r))

    def __add__(self, other) -> "BiWord":
        return BiWord(tuple.__add__(self, other))

    def __radd__(self, other) -> "BiWord":
        return BiWord(tuple.__add__(tuple(other), self))

    def __getitem__(self, key):
        item = tuple.__getitem__(self, key)
        return BiWord(item) if isinstance(key, slice) else item

    @property
    def s(self) -> tuple[int, ...]:
        return tuple(a.s for a in self)

    @property
    def r(self) -> tuple[int, ...]:
        return tuple(a.r for a in self)

    @property
    def weight(self) -> int:
        return sum(a.s + a.r for a in self)

    @property
    def upper_weight(self) -> int:
        return sum(a.s for a in self)

    @property
    def lower_weight(self) -> int:
        return sum(a.r for a in self)

    @property
    def depth(self) -> int:
        return len(self)

    def is_bracket(self) -> bool:
        """True when all lower indices vanish."""
        return all(a.r == 0 for a in self)

    def __repr__(self) -> str:
        return f"BiWord({self.s}, {self.r})"


def embed_z_word(word: Sequence[int]) -> BiWord:
    """z_{s_1}...z_{s_l} -> z_{s_1,0}...z_{s_l,0}."""
    return BiWord(BiLetter(s, 0) for s in word)


def word_weight(word: Word) -> int:
    """Weight of a word in any of the three alphabets."""
    if isinstance(word, BiWord):
        return word.weight
    if isinstance(word, str):
        return len(word)
    return sum(word)


def make_word(template: Word, letters: Sequence) -> Word:
    """A word of the same alphabet as `template` made of `letters`."""
    if isinstance(template, str):
        return "".join(letters)
    if isinstance(template, BiWord):
        return BiWord(letters)
    return tuple(letters)


class LinComb:
    """A finite rational linear combination of words.

    Zero coefficients are never stored, so equality is term-wise. Instances are
    treated as immutable; every operation returns a new combination.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | Iterable[tuple[Word, Any]] | None = None):
        acc: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for word, c in items:
            if c:
                acc[word] = acc.get(word, Fraction(0)) + Fraction(c)
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def of(cls, word: Word, coefficient=1) -> "LinComb":
        return cls({word: coefficient})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    # --- container protocol -------------------------------------------------------

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # --- vector space -------------------------------------------------------------

    def __add__(self, other: "LinComb") -> "LinComb":
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return LinComb(terms)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + other.scale(-1)

    def __neg__(self) -> "LinComb":
        return self.scale(-1)

    def scale(self, factor) -> "LinComb":
        factor = Fraction(factor)
        if not factor:
            return LinComb()
        return LinComb({w: factor * c for w, c in self._terms.items()})

    def __mul__(self, factor) -> "LinComb":
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    # --- maps ---------------------------------------------------------------------

    def apply(self, func: Callable[[Word], "LinComb"]) -> "LinComb":
        """Linear extension of a map from words to combinations."""
        return linear_sum(func(w).scale(c) for w, c in self._terms.items())

    def map_words(self, func: Callable[[Word], Word]) -> "LinComb":
        """Relabel every word (the result re-collects equal images)."""
        return LinComb((func(w), c) for w, c in self._terms.items())

    def filtration_degrees(self) -> tuple[int, int, int]:
        """(max weight, max lower weight, max length) over the support; bi-words only."""
        if not self._terms:
            return (0, 0, 0)
        return (
            max(w.weight for w in self._terms),
            max(w.lower_weight for w in self._terms),
            max(len(w) for w in self._terms),
        )

    def sorted_items(self) -> list[tuple[Word, Fraction]]:
        """Terms in canonical order: weight, length, then letters."""
        return sorted(self._terms.items(), key=lambda t: word_sort_key(t[0]))

    def __repr__(self) -> str:
        from .syntax import format_lincomb

        try:
            return f"LinComb({format_lincomb(self)})"
        except TypeError:
            return f"LinComb({self._terms!r})"


BiLinComb = LinComb


def linear_sum(combos: Iterable[LinComb]) -> LinComb:
    """Sum many combinations without intermediate copies."""
    acc: dict[Word, Fraction] = {}
    for combo in combos:
        for w, c in combo.items():
            acc[w] = acc.get(w, Fraction(0)) + c
    return LinComb(acc)


def word_sort_key(word: Word) -> tuple:
    """Lexicographic on (weight, length, index sequence)."""
    if isinstance(word, BiWord):
        return (word.weight, len(word), tuple((a.s, a.r) for a in word))
    if isinstance(word, str):
        return (len(word), len(word), word)
    return (sum(word), len(word), tuple(word))


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n into positive parts, in lexicographic order; n = 0 gives ()."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to n."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def z_words(weight: int, min_first: int = 1, min_rest: int = 1) -> list[tuple[int, ...]]:
    """z-words of the given weight with first index >= min_first and others >= min_rest."""
    out = []
    for comp in compositions(weight):
        if comp and comp[0] >= min_first and all(c >= min_rest for c in comp[1:]):
            out.append(comp)
    return sorted(out, key=word_sort_key)


def bi_words(weight: int, max_depth: int | None = None) -> list[BiWord]:
    """All bi-words of exactly the given weight (weight 0 gives the empty word)."""
    out: list[BiWord] = []
    for comp in compositions(weight):
        if max_depth is not None and len(comp) > max_depth:
            continue
        # split each part c into s + r with s >= 1
        choices = [[BiLetter(s, c - s) for s in range(1, c + 1)] for c in comp]
        out.extend(_product_words(choices))
    return sorted(out, key=word_sort_key)


def _product_words(choices: list[list[BiLetter]]) -> Iterator[BiWord]:
    if not choices:
        yield BiWord()
        return
    for letter in choices[0]:
        for rest in _product_words(choices[1:]):
            yield BiWord((letter,)) + rest


def reverse_word(word: Word) -> Word:
    return word[::-1]
