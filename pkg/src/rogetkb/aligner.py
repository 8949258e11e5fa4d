"""Cross-resource alignment: overlap statistics against a synset resource
and automatic relation labelling of paragraphs via mini-net matching.

Labelling matches each semicolon group of a paragraph against the one-hop
mini-net of the paragraph's keyword: a group earns every relation whose
reached synsets share at least one normalized string with the group's
members (cross-reference keywords count by default). The highest-precedence
relation wins; a group with no match is left unlabelled. The keyword itself
is the source of every candidate relation, so it is not matchable inside
its own group; if that group ends up with no other evidence it falls back
to a synonym label against the seed synsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .index import LexicalIndex
from .lexnet import (
    DEFAULT_RELATIONS,
    LABEL_PRECEDENCE,
    MiniNet,
    RelationType,
    Synset,
    SynsetResource,
    build_mini_net,
)
from .model import (
    Address,
    AddressError,
    Paragraph,
    PartOfSpeech,
    SemicolonGroup,
    ThesaurusKB,
)
from .text import normalize, strip_gloss as _strip_head_gloss

__all__ = [
    "CoverageRow",
    "ClassCoverage",
    "HeadCoverage",
    "Evidence",
    "LabelledGroup",
    "LabelledParagraph",
    "LabelConfig",
    "common_strings",
    "class_coverage",
    "head_coverage",
    "pos_distribution",
    "label_paragraph",
    "mini_net_overlap_count",
    "paragraph_strings",
]


# -- coverage statistics ------------------------------------------------------


@dataclass(frozen=True)
class CoverageRow:
    """Counts and common-string percentages for one class (class_num None
    for the totals row). ``strings`` counts entry occurrences, repetitions
    included; percentages are fractions in [0, 1]."""

    class_num: Optional[int]
    sections: int
    heads: int
    paragraphs: int
    groups: int
    strings: int
    pct_common_heads: float
    pct_common_keywords: float
    pct_common_strings: float


@dataclass(frozen=True)
class ClassCoverage:
    rows: tuple[CoverageRow, ...]
    total: CoverageRow


@dataclass(frozen=True)
class HeadCoverage:
    head_num: int
    head_name: str
    head_name_in_lex: bool
    paragraphs: int
    groups: int
    strings: int
    pct_common_strings: float
    pct_common_keywords: float


def common_strings(idx: LexicalIndex, res: SynsetResource) -> frozenset[str]:
    """Normalized strings present in both resources."""
    return idx.unique_strings() & res.all_lemmas()


def _head_name_key(name: str, use_stripped: bool) -> str:
    return normalize(_strip_head_gloss(name) if use_stripped else name)


def class_coverage(
    kb: ThesaurusKB,
    common: frozenset[str],
    *,
    strip_gloss: bool = False,
) -> ClassCoverage:
    """One row per class plus an occurrence-weighted totals row.

    pct_common_strings = common entry occurrences / entry occurrences;
    pct_common_keywords = paragraphs whose keyword is common / paragraphs;
    pct_common_heads = heads whose name (optionally gloss-stripped at the
    first ":") is common / heads.
    """
    rows = []
    sums = {"heads_in": 0, "kw_in": 0, "str_in": 0}

    def pct(part: int, whole: int) -> float:
        return part / whole if whole else 0.0

    for cls in kb.classes:
        sections = len(cls.sections)
        heads = paragraphs = groups = strings = 0
        heads_in = kw_in = str_in = 0
        for sec in cls.sections:
            heads += len(sec.heads)
            for head in sec.heads:
                if _head_name_key(head.name, strip_gloss) in common:
                    heads_in += 1
                paragraphs += len(head.paragraphs)
                for para in head.paragraphs:
                    if para.keyword in common:
                        kw_in += 1
                    groups += len(para.groups)
                    for group in para.groups:
                        strings += len(group.entries)
                        str_in += sum(1 for e in group.entries if e.text in common)
        rows.append(CoverageRow(
            class_num=cls.number, sections=sections, heads=heads,
            paragraphs=paragraphs, groups=groups, strings=strings,
            pct_common_heads=pct(heads_in, heads),
            pct_common_keywords=pct(kw_in, paragraphs),
            pct_common_strings=pct(str_in, strings),
        ))
        sums["heads_in"] += heads_in
        sums["kw_in"] += kw_in
        sums["str_in"] += str_in

    total = CoverageRow(
        class_num=None,
        sections=sum(r.sections for r in rows),
        heads=sum(r.heads for r in rows),
        paragraphs=sum(r.paragraphs for r in rows),
        groups=sum(r.groups for r in rows),
        strings=sum(r.strings for r in rows),
        pct_common_heads=pct(sums["heads_in"], sum(r.heads for r in rows)),
        pct_common_keywords=pct(sums["kw_in"], sum(r.paragraphs for r in rows)),
        pct_common_strings=pct(sums["str_in"], sum(r.strings for r in rows)),
    )
    return ClassCoverage(rows=tuple(rows), total=total)


def head_coverage(
    kb: ThesaurusKB,
    res: SynsetResource,
    common: frozenset[str],
    *,
    strip_gloss: bool = False,
) -> tuple[HeadCoverage, ...]:
    """One row per head, sorted descending by pct_common_strings, ties by
    ascending head number. head_name_in_lex tests the name against the
    resource's lemmas (not the intersection)."""
    lemmas = res.all_lemmas()
    out = []
    for _, _, head in kb.walk_heads():
        paragraphs = len(head.paragraphs)
        groups = strings = str_in = kw_in = 0
        for para in head.paragraphs:
            if para.keyword in common:
                kw_in += 1
            groups += len(para.groups)
            for group in para.groups:
                strings += len(group.entries)
                str_in += sum(1 for e in group.entries if e.text in common)
        out.append(HeadCoverage(
            head_num=head.number,
            head_name=head.name,
            head_name_in_lex=_head_name_key(head.name, strip_gloss) in lemmas,
            paragraphs=paragraphs,
            groups=groups,
            strings=strings,
            pct_common_strings=str_in / strings if strings else 0.0,
            pct_common_keywords=kw_in / paragraphs if paragraphs else 0.0,
        ))
    return tuple(sorted(out, key=lambda r: (-r.pct_common_strings, r.head_num)))


def pos_distribution(kb: ThesaurusKB) -> dict[PartOfSpeech, float]:
    """Fraction of entry occurrences per part of speech; all five tags are
    present, zeros included. Sums to 1 for a non-empty KB."""
    counts = {pos: 0 for pos in PartOfSpeech}
    total = 0
    for _, para in kb.walk_paragraphs():
        n = sum(len(group.entries) for group in para.groups)
        counts[para.pos] += n
        total += n
    if total == 0:
        return {pos: 0.0 for pos in PartOfSpeech}
    return {pos: count / total for pos, count in counts.items()}


# -- relation labelling -------------------------------------------------------


@dataclass(frozen=True)
class Evidence:
    """One match: ``string`` occurs both in the semicolon group and in the
    synset reached via ``relation``."""

    string: str
    synset_id: str
    relation: RelationType


@dataclass(frozen=True)
class LabelledGroup:
    group: SemicolonGroup
    label: Optional[RelationType]  # None = no label
    evidence: tuple[Evidence, ...]


@dataclass(frozen=True)
class LabelledParagraph:
    """The paragraph's groups in source order, each with its label."""

    source: Address
    keyword: str
    labelled: tuple[LabelledGroup, ...]


@dataclass(frozen=True)
class LabelConfig:
    """relations None means the per-POS default set; precedence decides
    which matching relation becomes the label; match_cross_refs lets
    cross-reference keywords participate as group members."""

    relations: Optional[frozenset[RelationType]] = None
    precedence: tuple[RelationType, ...] = LABEL_PRECEDENCE
    match_cross_refs: bool = True


def group_strings(group: SemicolonGroup, *, include_cross_refs: bool = True) -> frozenset[str]:
    out = {entry.text for entry in group.entries}
    if include_cross_refs:
        out.update(ref.keyword for entry in group.entries for ref in entry.cross_refs)
    return frozenset(out)


def paragraph_strings(para: Paragraph, *, include_cross_refs: bool = True) -> frozenset[str]:
    """Every member string of the paragraph, cross-reference keywords
    included by default."""
    out: frozenset[str] = frozenset()
    for group in para.groups:
        out |= group_strings(group, include_cross_refs=include_cross_refs)
    return out


def _evidence_sort_key(cfg: LabelConfig):
    def key(ev: Evidence) -> tuple:
        return (ev.string, ev.synset_id, cfg.precedence.index(ev.relation))
    return key


def label_paragraph(
    kb: ThesaurusKB,
    res: SynsetResource,
    target: Address,
    cfg: LabelConfig = LabelConfig(),
) -> LabelledParagraph:
    """Label every semicolon group of the paragraph at ``target`` against
    the keyword's mini-net (all senses unioned)."""
    para = kb.resolve(target)
    if not isinstance(para, Paragraph):
        raise AddressError(f"{target} does not name a paragraph")
    relations = cfg.relations if cfg.relations is not None else DEFAULT_RELATIONS[para.pos]
    keyword = para.keyword
    net = build_mini_net(res, keyword, para.pos, relations)

    # every (relation, synset) pair one hop from any sense; seeds carry the
    # synonym relation themselves
    channels: list[tuple[RelationType, Synset]] = []
    for sense in net.senses:
        if RelationType.SYNONYM in relations:
            channels.append((RelationType.SYNONYM, sense.seed))
        for relation, reached in sense.reached:
            channels.extend((relation, synset) for synset in reached)

    labelled = []
    for sg_idx, group in enumerate(para.groups):
        members = group_strings(group, include_cross_refs=cfg.match_cross_refs)
        if sg_idx == 0:
            # the keyword is the relation source, not a matchable member of
            # its own group
            members = members - {keyword}
        found = {
            Evidence(string, synset.id, relation)
            for relation, synset in channels
            for string in members & synset.lemma_set
        }
        if sg_idx == 0 and not found and RelationType.SYNONYM in relations:
            # a keyword group with nothing else to say is synonymous with
            # its own seed synsets
            found = {
                Evidence(keyword, sense.seed.id, RelationType.SYNONYM)
                for sense in net.senses
            }
        evidence = tuple(sorted(found, key=_evidence_sort_key(cfg)))
        label = None
        if evidence:
            present = {ev.relation for ev in evidence}
            label = next(rel for rel in cfg.precedence if rel in present)
        labelled.append(LabelledGroup(group=group, label=label, evidence=evidence))

    return LabelledParagraph(source=target, keyword=keyword, labelled=tuple(labelled))


def mini_net_overlap_count(strings: frozenset[str], net: MiniNet) -> int:
    """How many of the given strings occur anywhere in the mini-net."""
    return len(strings & net.strings())
