"""Mine Hindi-English parallel sentences from comparable news collections."""

from .metrics import (
    BACKEND,
    damerau_levenshtein_distance,
    gestalt_similarity,
    hamming_distance,
    levenshtein_distance,
    simple_ratio,
    token_sort_ratio,
    value_words_distance,
)
from .segmentation import Language, SegmenterRules, SentenceSpan, sentence_texts, split_sentences

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Language",
    "SegmenterRules",
    "SentenceSpan",
    "damerau_levenshtein_distance",
    "gestalt_similarity",
    "hamming_distance",
    "levenshtein_distance",
    "sentence_texts",
    "simple_ratio",
    "split_sentences",
    "token_sort_ratio",
    "value_words_distance",
]
