"""String similarity and edit-distance metrics.

Distances are integers; similarities are integer percentages in [0, 100],
rounded half-up so they compare exactly against integer thresholds. All
comparisons are per Unicode scalar value, never per byte.

The DP kernels come from the compiled ``_ckernels`` extension when it is
importable, otherwise from ``_pykernels``. Set ``NEWSBITEXT_PURE_PYTHON=1``
to force the fallback.
"""

from __future__ import annotations

import os
import unicodedata

if os.environ.get("NEWSBITEXT_PURE_PYTHON"):
    from . import _pykernels as _kernels
else:
    try:
        from . import _ckernels as _kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _kernels

BACKEND = "cython" if _kernels.__name__.endswith("_ckernels") else "python"

__all__ = [
    "BACKEND",
    "damerau_levenshtein_distance",
    "gestalt_similarity",
    "hamming_distance",
    "levenshtein_distance",
    "normalized_similarity",
    "percent",
    "simple_ratio",
    "token_sort_ratio",
    "tokenize",
    "value_words_distance",
]


def percent(numerator: int, denominator: int) -> int:
    """Return ``100 * numerator / denominator`` rounded half-up, exactly."""
    if denominator <= 0:
        raise ValueError("denominator must be positive")
    return (200 * numerator + denominator) // (2 * denominator)


def hamming_distance(a: str, b: str) -> int:
    """Position-wise mismatch count; the shorter string is padded and every
    padded position counts as a mismatch."""
    return _kernels.hamming(a, b)


def levenshtein_distance(a: str, b: str) -> int:
    return _kernels.levenshtein(a, b)


def damerau_levenshtein_distance(a: str, b: str) -> int:
    """Restricted Damerau-Levenshtein distance (optimal string alignment).

    Adjacent transpositions cost 1, but a transposed pair is never edited
    again, so ``("ca", "abc")`` is 3 rather than the unrestricted 2.
    """
    return _kernels.osa(a, b)


def gestalt_similarity(a: str, b: str) -> int:
    """Ratcliff-Obershelp similarity ``100 * 2M / (|a| + |b|)``.

    ``M`` counts characters matched by anchoring on the longest common
    substring (earliest in ``a``, then earliest in ``b``) and recursing into
    the fragments on either side. No junk heuristic is applied.
    """
    total = len(a) + len(b)
    if total == 0:
        return 100
    return percent(2 * _kernels.gestalt_matches(a, b), total)


def normalized_similarity(distance: int, a: str, b: str) -> int:
    """Map a distance onto ``100 * (1 - distance / max(|a|, |b|))``."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 100
    return percent(longest - distance, longest)


def simple_ratio(a: str, b: str) -> int:
    return normalized_similarity(levenshtein_distance(a, b), a, b)


def _is_word_char(ch: str) -> bool:
    cat = unicodedata.category(ch)
    # marks keep Devanagari matras and virama attached to their word
    return cat[0] in "LM" or cat == "Nd"


def tokenize(text: str) -> list[str]:
    """Split on every scalar that is not a letter, combining mark or digit."""
    tokens = []
    current: list[str] = []
    for ch in text:
        if _is_word_char(ch):
            current.append(ch)
        elif current:
            tokens.append("".join(current))
            current = []
    if current:
        tokens.append("".join(current))
    return tokens


def _sorted_tokens(text: str) -> str:
    return " ".join(sorted(tok.lower() for tok in tokenize(text)))


def token_sort_ratio(a: str, b: str) -> int:
    """simple_ratio of the lowercased, lexicographically sorted token lists."""
    return simple_ratio(_sorted_tokens(a), _sorted_tokens(b))


def value_words_distance(a: str, b: str) -> int:
    """Sum over the words of ``a`` of the smallest Levenshtein distance to
    any word of ``b``. Directional: swap the arguments for ``b -> a``."""
    targets = tokenize(b)
    if not targets:
        return sum(len(w) for w in tokenize(a))
    return sum(min(levenshtein_distance(w, v) for v in targets) for w in tokenize(a))
