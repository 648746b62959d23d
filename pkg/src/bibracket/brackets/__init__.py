"""Numeric evaluation of bi-brackets, the partition relation and d_q."""

from .derivative import dq_lincomb, dq_word, z_limit_index
from .evaluator import (
    Evaluator,
    TriIndex,
    clear_evaluators,
    eval_bibracket,
    eval_bibracket_oracle,
    eval_lincomb,
    eval_tribracket,
    get_evaluator,
)
from .partition import length_two_partition, partition_map, partition_map_lincomb

__all__ = [
    "Evaluator",
    "TriIndex",
    "clear_evaluators",
    "dq_lincomb",
    "dq_word",
    "eval_bibracket",
    "eval_bibracket_oracle",
    "eval_lincomb",
    "eval_tribracket",
    "get_evaluator",
    "length_two_partition",
    "partition_map",
    "partition_map_lincomb",
    "z_limit_index",
]
