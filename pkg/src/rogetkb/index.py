"""Complete lexical index: every normalized word or phrase to all of its
entry-level addresses. Phrases are indexed whole, never tokenized."""

from __future__ import annotations

from dataclasses import dataclass

from .model import Address, ThesaurusKB
from .text import normalize

__all__ = ["LexicalIndex", "build_index"]


@dataclass(frozen=True)
class LexicalIndex:
    """Address lists are sorted in taxonomy order: (class, section, head,
    POS in canonical order, paragraph, group, entry)."""

    entries: dict[str, tuple[Address, ...]]
    total_occurrences: int

    @property
    def unique_count(self) -> int:
        return len(self.entries)

    def lookup(self, query: str) -> tuple[Address, ...]:
        """All addresses whose entry text normalizes to the query; a miss is
        an empty tuple, never an error."""
        return self.entries.get(normalize(query), ())

    def unique_strings(self) -> frozenset[str]:
        return frozenset(self.entries)


def build_index(kb: ThesaurusKB) -> LexicalIndex:
    table: dict[str, list[Address]] = {}
    total = 0
    for address, entry in kb.walk_entries():
        total += 1
        table.setdefault(entry.text, []).append(address)
    entries = {
        text: tuple(sorted(addresses, key=Address.sort_key))
        for text, addresses in table.items()
    }
    return LexicalIndex(entries=entries, total_occurrences=total)
