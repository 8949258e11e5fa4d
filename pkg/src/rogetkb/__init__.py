"""rogetkb: a Roget-structured thesaurus as an electronic lexical knowledge
base. Parser, complete index, edge-counting semantic distance, and
synset-driven relation labelling."""

from .aligner import (
    ClassCoverage,
    CoverageRow,
    Evidence,
    HeadCoverage,
    LabelConfig,
    LabelledGroup,
    LabelledParagraph,
    class_coverage,
    common_strings,
    head_coverage,
    label_paragraph,
    mini_net_overlap_count,
    paragraph_strings,
    pos_distribution,
)
from .bundle import BuildMeta, BundleError, KBBundle, load_bundle, structured_document, write_bundle
from .index import LexicalIndex, build_index
from .lexnet import (
    DEFAULT_RELATIONS,
    LABEL_PRECEDENCE,
    LexiconError,
    MiniNet,
    RelationType,
    SenseNeighbourhood,
    Synset,
    SynsetResource,
    build_mini_net,
    load_resource,
)
from .metrics import PathResult, RankedPair, rank_pairs, sg_distance, similarity, word_distance
from .model import (
    Address,
    AddressError,
    CountRecord,
    CountReport,
    CrossReference,
    Entry,
    Head,
    Paragraph,
    PartOfSpeech,
    RogetClass,
    Section,
    SemicolonGroup,
    ThesaurusKB,
)
from .parser import ParseDiagnostic, ParseResult, parse_cross_ref, parse_source, serialize_kb
from .text import normalize, strip_gloss

__version__ = "0.1.0"
