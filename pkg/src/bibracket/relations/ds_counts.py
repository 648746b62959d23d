"""Dimensions of spans of double shuffle differences ds(u, v) = u sh v - u * v."""

import logging
from enum import Enum

from ..exceptions import InvalidIndexError
from ..words import ds, word_sort_key, z_words
from .matrix import StreamingEchelon

logger = logging.getLogger(__name__)


class DsVariant(str, Enum):
    """Which words u, v enter the pairs ds(u, v)."""

    EXTENDED = "eds"  # u admissible, v admissible or z_1
    FINITE = "fds"  # u, v admissible
    RESTRICTED = "rds"  # u, v free of z_1


def _admissible(weight: int, reverse: bool) -> list[tuple[int, ...]]:
    words = z_words(weight)
    # the convergent end of a word is its first letter, or its last one when reversed
    if reverse:
        return [w for w in words if w[-1] > 1]
    return [w for w in words if w[0] > 1]


def _words(weight: int, variant: DsVariant, reverse: bool) -> tuple[list, list]:
    """Candidates for u and for v of one weight."""
    if variant is DsVariant.RESTRICTED:
        words = z_words(weight, min_first=2, min_rest=2)
        return words, words
    words = _admissible(weight, reverse)
    if variant is DsVariant.EXTENDED and weight == 1:
        return words, words + [(1,)]
    return words, words


def ds_pairs(k: int, variant: DsVariant | str, reverse: bool = False) -> list[tuple]:
    """Pairs (u, v) of nonempty words with |u| + |v| = k, each unordered pair once."""
    variant = DsVariant(variant)
    pairs = set()
    for a in range(1, k):
        us, _ = _words(a, variant, reverse)
        _, vs = _words(k - a, variant, reverse)
        for u in us:
            for v in vs:
                # ds is symmetric, so only the sorted pair is kept
                pairs.add(tuple(sorted((u, v), key=word_sort_key)))
    return sorted(pairs, key=lambda p: (word_sort_key(p[0]), word_sort_key(p[1])))


def ds_counts(k: int, variant: DsVariant | str, reverse: bool = False) -> int:
    """dim of the span of ds(u, v) over the admissible pairs of total weight k."""
    if k < 1:
        raise InvalidIndexError(f"weight must be positive, got {k}")
    variant = DsVariant(variant)
    pairs = ds_pairs(k, variant, reverse)
    echelon = StreamingEchelon(word_sort_key)
    for u, v in pairs:
        echelon.insert(dict(ds(u, v, reverse).items()))
    logger.info(f"{variant.value}_{k}: {len(pairs)} pairs, rank {echelon.rank}")
    return echelon.rank
