"""Lexicon-based sentiment analysis: tokenizer, four count analyses, LOESS smoothing."""

import json as _json

from ._lexisent import (
    InsufficientData,
    LexisentError,
    check_results,
    is_stop_word,
    loess,
    paragraphs,
    tokenize,
    tokenize_text,
    tricube,
)
from ._lexisent import analyze as _analyze

__all__ = [
    "InsufficientData",
    "LexisentError",
    "analyze",
    "check_results",
    "is_stop_word",
    "loess",
    "paragraphs",
    "tokenize",
    "tokenize_text",
    "tricube",
]


def analyze(input, nrc, bing, **options):
    """Run the pipeline on one document and return the results as a dict.

    Keyword options: custom_stopwords, min_count, span, degree, grid_points,
    paragraph_mode, stopwords, out_dir.
    """
    return _json.loads(_analyze(input, nrc, bing, **options))
