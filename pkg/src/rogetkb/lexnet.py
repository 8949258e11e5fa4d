"""WordNet-style synset resource: interchange format loader and mini-nets.

Interchange format, one record per line:

    SYN <id> <pos> <lemma;lemma;...> [| gloss]
    REL <type> <srcId> <dstId>
    // comment

Hyponym edges are stored as their hypernym inverses, never twice. A
mini-net is the one-hop neighbourhood of a lemma: its seed synsets plus
every synset one link away per requested relation, where "coordinate"
means each direct hypernym together with all of that hypernym's direct
hyponyms (seed and hypernym included).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .model import PartOfSpeech
from .text import normalize

__all__ = [
    "RelationType",
    "LABEL_PRECEDENCE",
    "DEFAULT_RELATIONS",
    "Synset",
    "SynsetResource",
    "SenseNeighbourhood",
    "MiniNet",
    "LexiconError",
    "load_resource",
    "build_mini_net",
]


class RelationType(enum.Enum):
    """Typed synset-to-synset links. Declaration order is the labelling
    precedence (synonym strongest)."""

    SYNONYM = "synonym"
    ANTONYM = "antonym"
    HYPERNYM = "hypernym"
    HYPONYM = "hyponym"
    MERONYM = "meronym"
    HOLONYM = "holonym"
    COORDINATE = "coordinate"
    ENTAILMENT = "entailment"
    CAUSE = "cause"
    SIMILAR = "similar"
    ATTRIBUTE = "attribute"
    DERIVATION = "derivation"
    PERTAINYM = "pertainym"
    ALSO_SEE = "also-see"
    PARTICIPLE = "participle"

    @classmethod
    def parse(cls, token: str) -> "RelationType":
        try:
            return cls(token.lower())
        except ValueError:
            raise ValueError(f"unknown relation type {token!r}") from None


LABEL_PRECEDENCE: tuple[RelationType, ...] = tuple(RelationType)

# Relations followed by default when building a mini-net, per part of speech.
DEFAULT_RELATIONS: dict[PartOfSpeech, frozenset[RelationType]] = {
    PartOfSpeech.NOUN: frozenset({
        RelationType.SYNONYM, RelationType.HYPERNYM, RelationType.HYPONYM,
        RelationType.COORDINATE, RelationType.MERONYM, RelationType.HOLONYM,
        RelationType.ANTONYM,
    }),
    PartOfSpeech.VERB: frozenset({
        RelationType.SYNONYM, RelationType.HYPERNYM, RelationType.HYPONYM,
        RelationType.ENTAILMENT, RelationType.CAUSE, RelationType.ANTONYM,
    }),
    PartOfSpeech.ADJECTIVE: frozenset({
        RelationType.SYNONYM, RelationType.SIMILAR, RelationType.ANTONYM,
        RelationType.ATTRIBUTE,
    }),
    PartOfSpeech.ADVERB: frozenset({RelationType.SYNONYM, RelationType.ANTONYM}),
    PartOfSpeech.INTERJECTION: frozenset({RelationType.SYNONYM, RelationType.ANTONYM}),
}


class LexiconError(ValueError):
    """Malformed interchange document. Renders as ``<line>:error: <message>``."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"{line}:error: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class Synset:
    """One sense: a set of synonymous lemmas. Lemmas are normalized and kept
    in file order for deterministic rendering."""

    id: str
    pos: PartOfSpeech
    lemmas: tuple[str, ...]
    gloss: Optional[str] = None

    @cached_property
    def lemma_set(self) -> frozenset[str]:
        return frozenset(self.lemmas)


@dataclass(frozen=True)
class SynsetResource:
    """The loaded graph; immutable. Synset and edge order follow the file."""

    synsets: dict[str, Synset]
    edges: tuple[tuple[str, RelationType, str], ...]

    @cached_property
    def lemma_index(self) -> dict[str, tuple[str, ...]]:
        index: dict[str, list[str]] = {}
        for synset in self.synsets.values():
            for lemma in synset.lemmas:
                ids = index.setdefault(lemma, [])
                if synset.id not in ids:
                    ids.append(synset.id)
        return {lemma: tuple(ids) for lemma, ids in index.items()}

    @cached_property
    def _outgoing(self) -> dict[tuple[str, RelationType], tuple[str, ...]]:
        table: dict[tuple[str, RelationType], list[str]] = {}
        for src, rel, dst in self.edges:
            table.setdefault((src, rel), []).append(dst)
        return {key: tuple(dsts) for key, dsts in table.items()}

    @cached_property
    def _incoming_hypernym(self) -> dict[str, tuple[str, ...]]:
        """Direct hyponyms of each synset, derived from hypernym edges."""
        table: dict[str, list[str]] = {}
        for src, rel, dst in self.edges:
            if rel is RelationType.HYPERNYM:
                table.setdefault(dst, []).append(src)
        return {key: tuple(srcs) for key, srcs in table.items()}

    def neighbours(self, synset_id: str, relation: RelationType) -> tuple[Synset, ...]:
        """Synsets one ``relation`` edge away, in file order. Hyponyms are
        read off the inverted hypernym edges."""
        if relation is RelationType.HYPONYM:
            ids = self._incoming_hypernym.get(synset_id, ())
        else:
            ids = self._outgoing.get((synset_id, relation), ())
        return tuple(self.synsets[i] for i in ids)

    def synsets_for(self, lemma: str, pos: Optional[PartOfSpeech] = None) -> tuple[Synset, ...]:
        found = (self.synsets[i] for i in self.lemma_index.get(normalize(lemma), ()))
        return tuple(s for s in found if pos is None or s.pos is pos)

    def all_lemmas(self) -> frozenset[str]:
        out: set[str] = set()
        for synset in self.synsets.values():
            out.update(synset.lemmas)
        return frozenset(out)


def load_resource(text: str) -> SynsetResource:
    """Parse an interchange document. Raises :class:`LexiconError` on the
    first malformed record."""
    synsets: dict[str, Synset] = {}
    raw_edges: list[tuple[int, str, RelationType, str]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        kind, _, rest = line.partition(" ")
        if kind == "SYN":
            body, _, gloss = rest.partition("|")
            parts = body.split(None, 2)
            if len(parts) < 3:
                raise LexiconError(line_no, f"malformed SYN record {line!r}")
            syn_id, pos_tok, lemma_field = parts
            if syn_id in synsets:
                raise LexiconError(line_no, f"duplicate synset id {syn_id}")
            try:
                pos = PartOfSpeech.parse(pos_tok)
            except ValueError as exc:
                raise LexiconError(line_no, str(exc)) from None
            lemmas = tuple(dict.fromkeys(
                normalize(l) for l in lemma_field.split(";") if normalize(l)
            ))
            if not lemmas:
                raise LexiconError(line_no, f"synset {syn_id} has no lemmas")
            gloss = gloss.strip()
            synsets[syn_id] = Synset(syn_id, pos, lemmas, gloss or None)
        elif kind == "REL":
            parts = rest.split()
            if len(parts) != 3:
                raise LexiconError(line_no, f"malformed REL record {line!r}")
            rel_tok, src, dst = parts
            try:
                rel = RelationType.parse(rel_tok)
            except ValueError as exc:
                raise LexiconError(line_no, str(exc)) from None
            if rel is RelationType.HYPONYM:
                # canonical storage: the inverse hypernym edge
                rel, src, dst = RelationType.HYPERNYM, dst, src
            raw_edges.append((line_no, src, rel, dst))
        else:
            raise LexiconError(line_no, f"unknown record kind {kind!r}")

    edges = []
    for line_no, src, rel, dst in raw_edges:
        for endpoint in (src, dst):
            if endpoint not in synsets:
                raise LexiconError(line_no, f"unknown synset {endpoint}")
        edges.append((src, rel, dst))
    return SynsetResource(synsets=synsets, edges=tuple(edges))


@dataclass(frozen=True)
class SenseNeighbourhood:
    """One seed synset of the mini-net lemma plus everything one hop away.
    ``reached`` holds only relations that reached at least one synset, in
    precedence order."""

    seed: Synset
    reached: tuple[tuple[RelationType, tuple[Synset, ...]], ...]

    def via(self, relation: RelationType) -> tuple[Synset, ...]:
        for rel, group in self.reached:
            if rel is relation:
                return group
        return ()


@dataclass(frozen=True)
class MiniNet:
    lemma: str
    pos: PartOfSpeech
    senses: tuple[SenseNeighbourhood, ...]

    def strings(self) -> frozenset[str]:
        """Every lemma of every synset in the net, seeds included."""
        out: set[str] = set()
        for sense in self.senses:
            out.update(sense.seed.lemmas)
            for _, group in sense.reached:
                for synset in group:
                    out.update(synset.lemmas)
        return frozenset(out)


def _coordinates(res: SynsetResource, seed: Synset) -> tuple[Synset, ...]:
    """Each direct hypernym plus all of that hypernym's direct hyponyms;
    the seed itself and the hypernym are both members. Explicit coordinate
    edges, if any, are appended."""
    out: list[Synset] = []
    seen: set[str] = set()

    def push(synset: Synset) -> None:
        if synset.id not in seen:
            seen.add(synset.id)
            out.append(synset)

    for hypernym in res.neighbours(seed.id, RelationType.HYPERNYM):
        push(hypernym)
        for sibling in res.neighbours(hypernym.id, RelationType.HYPONYM):
            push(sibling)
    for explicit in res.neighbours(seed.id, RelationType.COORDINATE):
        push(explicit)
    return tuple(out)


def build_mini_net(
    res: SynsetResource,
    lemma: str,
    pos: PartOfSpeech,
    relations: Optional[Iterable[RelationType]] = None,
) -> MiniNet:
    """One-hop neighbourhood of ``lemma`` at ``pos``. An unknown lemma gives
    a net with zero senses, not an error."""
    lemma = normalize(lemma)
    wanted = frozenset(relations) if relations is not None else DEFAULT_RELATIONS[pos]
    senses = []
    for seed in res.synsets_for(lemma, pos):
        reached = []
        for relation in LABEL_PRECEDENCE:
            if relation not in wanted:
                continue
            if relation is RelationType.COORDINATE:
                group = _coordinates(res, seed)
            else:
                group = res.neighbours(seed.id, relation)
            if group:
                reached.append((relation, group))
        senses.append(SenseNeighbourhood(seed=seed, reached=tuple(reached)))
    return MiniNet(lemma=lemma, pos=pos, senses=tuple(senses))
