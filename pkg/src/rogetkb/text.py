"""Shared string normalization.

Every string comparison in the package (index keys, synset lemma matching,
head-name matching) goes through :func:`normalize` so that the same text
always lands on the same key.
"""

from __future__ import annotations

__all__ = ["normalize", "strip_gloss"]


def normalize(text: str) -> str:
    """Lowercase, trim, and collapse internal whitespace to single spaces.

    Hyphens and apostrophes are preserved: ``rake-off`` and ``rake off`` are
    distinct strings on purpose.
    """
    return " ".join(text.split()).lower()


def strip_gloss(name: str) -> str:
    """Drop the colon-separated gloss from a head name.

    ``Decrement: thing deducted`` becomes ``Decrement``. Names without a
    colon pass through unchanged. The result is not normalized.
    """
    return name.split(":", 1)[0].rstrip()
