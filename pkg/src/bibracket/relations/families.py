"""Generator families whose spans are measured by the dimension tables."""

import logging
from abc import ABC, abstractmethod

from ..double_shuffle import shuffle_bracket, stuffle_bracket
from ..exceptions import InvalidIndexError
from ..words import BiWord, LinComb, bi_words, format_word, z_words

logger = logging.getLogger(__name__)

Generator = tuple[str, LinComb]


class GeneratorFamily(ABC):
    """Base class for families of bi-bracket combinations graded by weight."""

    # Short name used on the command line
    name: str = ""
    description: str = ""

    @abstractmethod
    def words(self, weight: int) -> list:
        """Index words of exactly this weight, in (weight, length, indices) order."""
        pass

    @abstractmethod
    def expand(self, word) -> LinComb:
        """The generator attached to `word`, as a combination of bi-brackets."""
        pass

    def label(self, word) -> str:
        return format_word(word)

    def generators(self, weight: int) -> list[Generator]:
        """Labelled generators of exactly this weight; weight 0 is the constant 1."""
        if weight < 0:
            raise InvalidIndexError(f"weight must be nonnegative, got {weight}")
        if weight == 0:
            return [("1", LinComb.of(BiWord()))]
        return [(self.label(w), self.expand(w)) for w in self.words(weight)]


class ShuffleBracketFamily(GeneratorFamily):
    name = "sh"
    description = "shuffle brackets [s_1, ..., s_l]^sh with s_1 > 1"

    def words(self, weight: int) -> list[tuple[int, ...]]:
        return z_words(weight, min_first=2)

    def expand(self, word) -> LinComb:
        return shuffle_bracket(word)

    def label(self, word) -> str:
        return f"{format_word(word)}^sh"


class StuffleBracketFamily(GeneratorFamily):
    name = "ast"
    description = "stuffle brackets [s_1, ..., s_l]^* with s_1 > 1"

    def words(self, weight: int) -> list[tuple[int, ...]]:
        return z_words(weight, min_first=2)

    def expand(self, word) -> LinComb:
        return stuffle_bracket(word)

    def label(self, word) -> str:
        return f"{format_word(word)}^*"


class BracketFamily(GeneratorFamily):
    name = "plain"
    description = "brackets [s_1, ..., s_l] with s_1 > 1"

    def words(self, weight: int) -> list[tuple[int, ...]]:
        return z_words(weight, min_first=2)

    def expand(self, word) -> LinComb:
        return LinComb.of(BiWord.from_indices(word))


class BiBracketFamily(GeneratorFamily):
    """All bi-brackets of a weight whose lower weight r_1 + ... + r_l is bounded."""

    name = "bi"

    def __init__(self, max_lower_weight: int = 1):
        if max_lower_weight < 0:
            raise InvalidIndexError(f"lower weight bound must be >= 0, got {max_lower_weight}")
        self.max_lower_weight = max_lower_weight
        self.description = f"bi-brackets with lower weight <= {max_lower_weight}"

    def words(self, weight: int) -> list[BiWord]:
        return [w for w in bi_words(weight) if w.lower_weight <= self.max_lower_weight]

    def expand(self, word) -> LinComb:
        return LinComb.of(word)


class FamilyRegistry:
    """Registry of generator families by name."""

    def __init__(self):
        self._families: dict[str, GeneratorFamily] = {}

    def register(self, family: GeneratorFamily) -> None:
        """Register a family; a later family with the same name replaces the earlier one."""
        if family.name in self._families:
            logger.debug(f"Replacing generator family {family.name!r}")
        self._families[family.name] = family

    def get_family(self, name: str) -> GeneratorFamily:
        family = self._families.get(name)
        if family is None:
            raise InvalidIndexError(
                f"unknown generator family {name!r}; choose from {', '.join(self.names)}"
            )
        return family

    @property
    def names(self) -> list[str]:
        return list(self._families)


# Global registry instance with the built-in families registered
_default_registry: FamilyRegistry | None = None


def get_registry() -> FamilyRegistry:
    """Get the default family registry."""
    global _default_registry
    if _default_registry is None:
        _default_registry = FamilyRegistry()
        _default_registry.register(ShuffleBracketFamily())
        _default_registry.register(StuffleBracketFamily())
        _default_registry.register(BracketFamily())
        _default_registry.register(BiBracketFamily())
    return _default_registry


def get_family(name: str) -> GeneratorFamily:
    """Look up a family in the default registry."""
    return get_registry().get_family(name)


def family_names() -> list[str]:
    return get_registry().names


def bracket_generators(max_weight: int, max_depth: int | None = None) -> list[Generator]:
    """The constant and all brackets [s_1, ..., s_l] of weight <= max_weight."""
    out: list[Generator] = [("1", LinComb.of(BiWord()))]
    for k in range(1, max_weight + 1):
        for w in z_words(k):
            if max_depth is None or len(w) <= max_depth:
                out.append((format_word(w), LinComb.of(BiWord.from_indices(w))))
    return out
