"""Immutable document model for a Roget-structured thesaurus.

The taxonomy is a fixed-depth tree: root (0), class (1), section (2),
head (3), part-of-speech group (4), paragraph (5), semicolon group (6),
entry (7). Semicolon groups are the unit of word sense; entries are the
strings inside them.

Everything here is a frozen dataclass holding tuples, so a built knowledge
base is hashable-by-content and safe to share. Canonical serialization
(and therefore the content checksum) also lives here so that the model does
not depend on the parser.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Union

__all__ = [
    "PartOfSpeech",
    "CrossReference",
    "Entry",
    "SemicolonGroup",
    "Paragraph",
    "Head",
    "Section",
    "RogetClass",
    "ThesaurusKB",
    "Address",
    "AddressError",
    "Node",
    "CountRecord",
    "CountReport",
    "SG_LEVEL",
    "ENTRY_LEVEL",
    "MAX_GROUP_DISTANCE",
]

# Tree depth constants: root=0, class=1, section=2, head=3, POS group=4,
# paragraph=5, semicolon group=6, entry=7.
SG_LEVEL = 6
ENTRY_LEVEL = 7
MAX_GROUP_DISTANCE = 2 * SG_LEVEL


class PartOfSpeech(enum.Enum):
    """Part-of-speech tag of a paragraph, in canonical display order."""

    NOUN = "N"
    ADJECTIVE = "ADJ"
    VERB = "VB"
    ADVERB = "ADV"
    INTERJECTION = "INT"

    @property
    def display(self) -> str:
        """Abbreviation used when rendering paragraphs (``N.``, ``Adj.`` ...)."""
        return _POS_DISPLAY[self]

    @classmethod
    def parse(cls, token: str) -> "PartOfSpeech":
        try:
            return cls(token.upper())
        except ValueError:
            raise ValueError(f"unknown part of speech {token!r}") from None


_POS_DISPLAY = {
    PartOfSpeech.NOUN: "N.",
    PartOfSpeech.ADJECTIVE: "Adj.",
    PartOfSpeech.VERB: "Vb.",
    PartOfSpeech.ADVERB: "Adv.",
    PartOfSpeech.INTERJECTION: "Int.",
}

POS_ORDER = tuple(PartOfSpeech)


@dataclass(frozen=True)
class CrossReference:
    """Pointer to another head: ``@307 shortfall`` refers to head 307 under
    the keyword ``shortfall``."""

    head_num: int
    keyword: str

    def render(self) -> str:
        return f"@{self.head_num} {self.keyword}"


@dataclass(frozen=True)
class Entry:
    """One string in a semicolon group, with any cross-references attached
    to it. ``text`` is stored normalized."""

    text: str
    cross_refs: tuple[CrossReference, ...] = ()

    def render(self) -> str:
        parts = [self.text]
        parts.extend(ref.render() for ref in self.cross_refs)
        return " ".join(parts)


@dataclass(frozen=True)
class SemicolonGroup:
    """A run of closely related entries; the unit of word sense."""

    entries: tuple[Entry, ...]

    def render(self) -> str:
        return ", ".join(entry.render() for entry in self.entries)


@dataclass(frozen=True)
class Paragraph:
    """All semicolon groups of one part of speech sharing a keyword."""

    pos: PartOfSpeech
    groups: tuple[SemicolonGroup, ...]

    @property
    def keyword(self) -> str:
        """First entry of the first group names the paragraph."""
        return self.groups[0].entries[0].text


@dataclass(frozen=True)
class Head:
    """A numbered topic. Paragraphs are kept in source order; the address
    scheme groups them by part of speech."""

    number: int
    name: str
    paragraphs: tuple[Paragraph, ...]

    def pos_paragraphs(self, pos: PartOfSpeech) -> tuple[Paragraph, ...]:
        return tuple(p for p in self.paragraphs if p.pos is pos)

    def paragraph_positions(self) -> Iterator[tuple[PartOfSpeech, int, Paragraph]]:
        """Yield each paragraph with its index within its POS group."""
        counters: dict[PartOfSpeech, int] = {}
        for para in self.paragraphs:
            idx = counters.get(para.pos, 0)
            counters[para.pos] = idx + 1
            yield para.pos, idx, para


@dataclass(frozen=True)
class Section:
    number: int
    name: str
    heads: tuple[Head, ...]


@dataclass(frozen=True)
class RogetClass:
    number: int
    name: str
    sections: tuple[Section, ...]


Node = Union["RogetClass", "Section", "Head", "Paragraph", "SemicolonGroup", "Entry"]


class AddressError(ValueError):
    """An address component is malformed or does not exist in the tree."""


_LEVEL_BY_DEPTH = {1: "class", 2: "section", 3: "head", 5: "paragraph", 6: "group", 7: "entry"}


@dataclass(frozen=True)
class Address:
    """Progressive path into the tree.

    A prefix of components may be given, in order: class, section, head,
    (pos, para_idx) together, sg_idx, entry_idx. Rendered as
    ``class.section.head:POS:para:sg:entry`` truncated at the last set
    component, e.g. ``1.3.42:N:0:0:0`` for an entry or ``1.3`` for a
    section.
    """

    class_num: int
    section_num: Optional[int] = None
    head_num: Optional[int] = None
    pos: Optional[PartOfSpeech] = None
    para_idx: Optional[int] = None
    sg_idx: Optional[int] = None
    entry_idx: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.pos is None) != (self.para_idx is None):
            raise AddressError("paragraph address needs both a part of speech and an index")
        chain = [
            ("class", self.class_num),
            ("section", self.section_num),
            ("head", self.head_num),
            ("paragraph", self.para_idx),
            ("group", self.sg_idx),
            ("entry", self.entry_idx),
        ]
        seen_gap = False
        for name, value in chain:
            if value is None:
                seen_gap = True
                continue
            if seen_gap:
                raise AddressError(f"{name} component set without its parent levels")
            minimum = 1 if name in ("class", "section", "head") else 0
            if not isinstance(value, int) or value < minimum:
                raise AddressError(f"bad {name} component {value!r}")

    @property
    def level(self) -> int:
        """Tree depth of the node this address names (class=1 ... entry=7)."""
        if self.entry_idx is not None:
            return 7
        if self.sg_idx is not None:
            return 6
        if self.para_idx is not None:
            return 5
        if self.head_num is not None:
            return 3
        if self.section_num is not None:
            return 2
        return 1

    def sort_key(self) -> tuple:
        """Deterministic ordering key, usable across addresses of any depth.
        Within a head, paragraphs order by canonical POS order then index."""
        def num(value: Optional[int]) -> int:
            return -1 if value is None else value

        pos_rank = -1 if self.pos is None else POS_ORDER.index(self.pos)
        return (
            self.class_num, num(self.section_num), num(self.head_num),
            pos_rank, num(self.para_idx), num(self.sg_idx), num(self.entry_idx),
        )

    def group_prefix(self) -> "Address":
        """This address truncated to semicolon-group depth."""
        if self.sg_idx is None:
            raise AddressError(f"{self} does not reach semicolon-group depth")
        return Address(
            self.class_num, self.section_num, self.head_num,
            self.pos, self.para_idx, self.sg_idx,
        )

    def __str__(self) -> str:
        dotted = [str(self.class_num)]
        if self.section_num is not None:
            dotted.append(str(self.section_num))
        if self.head_num is not None:
            dotted.append(str(self.head_num))
        out = ".".join(dotted)
        if self.pos is not None:
            out += f":{self.pos.value}:{self.para_idx}"
            if self.sg_idx is not None:
                out += f":{self.sg_idx}"
                if self.entry_idx is not None:
                    out += f":{self.entry_idx}"
        return out

    @classmethod
    def parse(cls, text: str) -> "Address":
        """Inverse of ``str``: accepts any valid prefix depth."""
        text = text.strip()
        if not text:
            raise AddressError("empty address")
        fields = text.split(":")
        dotted = fields[0].split(".")
        if len(dotted) > 3:
            raise AddressError(f"too many dotted components in {text!r}")
        try:
            nums = [int(part) for part in dotted]
        except ValueError:
            raise AddressError(f"non-numeric path component in {text!r}") from None
        class_num = nums[0]
        section_num = nums[1] if len(nums) > 1 else None
        head_num = nums[2] if len(nums) > 2 else None
        pos = para = sg = ent = None
        rest = fields[1:]
        if rest:
            if head_num is None:
                raise AddressError(f"paragraph components without a head in {text!r}")
            if len(rest) < 2 or len(rest) > 4:
                raise AddressError(f"expected POS:para[:group[:entry]] in {text!r}")
            try:
                pos = PartOfSpeech.parse(rest[0])
            except ValueError as exc:
                raise AddressError(str(exc)) from None
            try:
                para = int(rest[1])
                sg = int(rest[2]) if len(rest) > 2 else None
                ent = int(rest[3]) if len(rest) > 3 else None
            except ValueError:
                raise AddressError(f"non-numeric index in {text!r}") from None
        return cls(class_num, section_num, head_num, pos, para, sg, ent)


@dataclass(frozen=True)
class CountRecord:
    """Node totals for one class, or for the whole KB when class_num is None.
    ``entries`` counts every occurrence, repetitions included."""

    class_num: Optional[int]
    sections: int
    heads: int
    paragraphs: int
    groups: int
    entries: int


@dataclass(frozen=True)
class CountReport:
    per_class: tuple[CountRecord, ...]
    total: CountRecord


@dataclass(frozen=True)
class ThesaurusKB:
    """A fully built knowledge base. Classes are in ascending number order."""

    classes: tuple[RogetClass, ...]

    def canonical_source(self) -> str:
        """Deterministic textual form: one semicolon group per line, entries
        comma-separated, cross-references inline. Parsing this text yields an
        equal knowledge base."""
        lines: list[str] = []
        for cls in self.classes:
            lines.append(f"#CLASS {cls.number} {cls.name}")
            for sec in cls.sections:
                lines.append(f"#SECTION {sec.number} {sec.name}")
                for head in sec.heads:
                    lines.append(f"#HEAD {head.number} {head.name}")
                    for para in head.paragraphs:
                        lines.append(f"#PARA {para.pos.value}")
                        for group in para.groups:
                            lines.append(f"{group.render()};")
        return "\n".join(lines) + "\n"

    @cached_property
    def source_checksum(self) -> str:
        """sha256 of :meth:`canonical_source`; stable across formatting-only
        differences in the original input."""
        return hashlib.sha256(self.canonical_source().encode("utf-8")).hexdigest()

    # -- navigation ---------------------------------------------------------

    def class_by_number(self, number: int) -> Optional[RogetClass]:
        for cls in self.classes:
            if cls.number == number:
                return cls
        return None

    def head_by_number(self, number: int) -> Optional[Head]:
        located = self.head_address(number)
        if located is None:
            return None
        node = self.resolve(located)
        assert isinstance(node, Head)
        return node

    def head_address(self, number: int) -> Optional[Address]:
        for cls, sec, head in self.walk_heads():
            if head.number == number:
                return Address(cls.number, sec.number, head.number)
        return None

    def resolve(self, address: Address) -> Node:
        """Return the node an address names, or raise :class:`AddressError`
        naming the first missing level."""
        cls = self.class_by_number(address.class_num)
        if cls is None:
            raise AddressError(f"class {address.class_num} not found")
        if address.section_num is None:
            return cls
        sec = next((s for s in cls.sections if s.number == address.section_num), None)
        if sec is None:
            raise AddressError(f"section {address.section_num} not found in class {cls.number}")
        if address.head_num is None:
            return sec
        head = next((h for h in sec.heads if h.number == address.head_num), None)
        if head is None:
            raise AddressError(
                f"head {address.head_num} not found in section {cls.number}.{sec.number}"
            )
        if address.pos is None:
            return head
        bucket = head.pos_paragraphs(address.pos)
        if address.para_idx >= len(bucket):
            raise AddressError(
                f"paragraph {address.pos.value}:{address.para_idx} not found in head {head.number}"
            )
        para = bucket[address.para_idx]
        if address.sg_idx is None:
            return para
        if address.sg_idx >= len(para.groups):
            raise AddressError(f"group {address.sg_idx} not found in {head.number}:{address.pos.value}:{address.para_idx}")
        group = para.groups[address.sg_idx]
        if address.entry_idx is None:
            return group
        if address.entry_idx >= len(group.entries):
            raise AddressError(f"entry {address.entry_idx} not found in group {address.group_prefix()}")
        return group.entries[address.entry_idx]

    # -- iteration ----------------------------------------------------------

    def walk_heads(self) -> Iterator[tuple[RogetClass, Section, Head]]:
        for cls in self.classes:
            for sec in cls.sections:
                for head in sec.heads:
                    yield cls, sec, head

    def walk_paragraphs(self) -> Iterator[tuple[Address, Paragraph]]:
        for cls, sec, head in self.walk_heads():
            for pos, idx, para in head.paragraph_positions():
                yield Address(cls.number, sec.number, head.number, pos, idx), para

    def walk_groups(self) -> Iterator[tuple[Address, SemicolonGroup]]:
        for para_addr, para in self.walk_paragraphs():
            for sg_idx, group in enumerate(para.groups):
                yield Address(
                    para_addr.class_num, para_addr.section_num, para_addr.head_num,
                    para_addr.pos, para_addr.para_idx, sg_idx,
                ), group

    def walk_entries(self) -> Iterator[tuple[Address, Entry]]:
        for sg_addr, group in self.walk_groups():
            for entry_idx, entry in enumerate(group.entries):
                yield Address(
                    sg_addr.class_num, sg_addr.section_num, sg_addr.head_num,
                    sg_addr.pos, sg_addr.para_idx, sg_addr.sg_idx, entry_idx,
                ), entry

    def count_nodes(self) -> CountReport:
        rows = []
        for cls in self.classes:
            sections = len(cls.sections)
            heads = paragraphs = groups = entries = 0
            for sec in cls.sections:
                heads += len(sec.heads)
                for head in sec.heads:
                    paragraphs += len(head.paragraphs)
                    for para in head.paragraphs:
                        groups += len(para.groups)
                        for group in para.groups:
                            entries += len(group.entries)
            rows.append(CountRecord(cls.number, sections, heads, paragraphs, groups, entries))
        total = CountRecord(
            None,
            sum(r.sections for r in rows),
            sum(r.heads for r in rows),
            sum(r.paragraphs for r in rows),
            sum(r.groups for r in rows),
            sum(r.entries for r in rows),
        )
        return CountReport(per_class=tuple(rows), total=total)
