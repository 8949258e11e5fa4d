"""Bundle persistence: one JSON file carrying the canonical source text,
the optional lexicon text, and integrity checksums.

Nothing opaque is stored: the knowledge base and index are rebuilt from the
embedded canonical text on load, and the recorded checksum is verified
against the rebuilt value. Output is byte-deterministic (no timestamps).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .aligner import class_coverage, common_strings, pos_distribution
from .index import LexicalIndex, build_index
from .lexnet import SynsetResource, load_resource
from .model import ThesaurusKB
from .parser import ParseDiagnostic, parse_source

__all__ = ["BuildMeta", "KBBundle", "BundleError", "write_bundle", "load_bundle", "structured_document"]

_FORMAT = "rogetkb-bundle"
_VERSION = 1


class BundleError(ValueError):
    """Unreadable, malformed, or corrupted bundle file."""


@dataclass(frozen=True)
class BuildMeta:
    source_checksum: str
    lex_checksum: Optional[str]
    errors: int
    warnings: int


@dataclass(frozen=True)
class KBBundle:
    kb: ThesaurusKB
    index: LexicalIndex
    resource: Optional[SynsetResource]
    meta: BuildMeta


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def write_bundle(
    path: Union[str, Path],
    kb: ThesaurusKB,
    diagnostics: tuple[ParseDiagnostic, ...] = (),
    lex_text: Optional[str] = None,
) -> BuildMeta:
    source = kb.canonical_source() if kb.classes else ""
    meta = BuildMeta(
        source_checksum=kb.source_checksum,
        lex_checksum=_sha256(lex_text) if lex_text is not None else None,
        errors=sum(1 for d in diagnostics if d.severity == "error"),
        warnings=sum(1 for d in diagnostics if d.severity == "warning"),
    )
    document = {
        "format": _FORMAT,
        "version": _VERSION,
        "meta": {
            "sourceChecksum": meta.source_checksum,
            "lexChecksum": meta.lex_checksum,
            "diagnostics": {"errors": meta.errors, "warnings": meta.warnings},
        },
        "source": source,
        "lexicon": lex_text,
    }
    Path(path).write_text(
        json.dumps(document, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    return meta


def load_bundle(path: Union[str, Path]) -> KBBundle:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise BundleError(f"cannot read bundle {path}: {exc}") from exc
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise BundleError(f"bundle {path} is not valid JSON: {exc}") from exc
    if not isinstance(document, dict) or document.get("format") != _FORMAT:
        raise BundleError(f"{path} is not a knowledge-base bundle")
    if document.get("version") != _VERSION:
        raise BundleError(f"unsupported bundle version {document.get('version')!r}")

    result = parse_source(document.get("source", ""))
    if result.kb is None:
        raise BundleError(f"bundle {path} contains an unparseable source document")
    kb = result.kb

    meta_doc = document.get("meta", {})
    recorded = meta_doc.get("sourceChecksum")
    if recorded != kb.source_checksum:
        raise BundleError(f"bundle {path} failed its source checksum")

    lex_text = document.get("lexicon")
    resource = None
    lex_checksum = None
    if lex_text is not None:
        lex_checksum = _sha256(lex_text)
        if meta_doc.get("lexChecksum") != lex_checksum:
            raise BundleError(f"bundle {path} failed its lexicon checksum")
        resource = load_resource(lex_text)

    diag = meta_doc.get("diagnostics", {})
    meta = BuildMeta(
        source_checksum=kb.source_checksum,
        lex_checksum=lex_checksum,
        errors=int(diag.get("errors", 0)),
        warnings=int(diag.get("warnings", 0)),
    )
    return KBBundle(kb=kb, index=build_index(kb), resource=resource, meta=meta)


def structured_document(bundle: KBBundle, *, strip_gloss: bool = False) -> str:
    """Machine-readable export: full taxonomy, index statistics, and (when a
    resource is present) coverage rows. Key order is fixed."""
    kb = bundle.kb
    counts = kb.count_nodes().total

    taxonomy = [
        {
            "number": cls.number,
            "name": cls.name,
            "sections": [
                {
                    "number": sec.number,
                    "name": sec.name,
                    "heads": [
                        {
                            "number": head.number,
                            "name": head.name,
                            "paragraphs": [
                                {
                                    "pos": para.pos.value,
                                    "keyword": para.keyword,
                                    "semicolonGroups": [
                                        {
                                            "entries": [
                                                {
                                                    "text": entry.text,
                                                    "crossRefs": [
                                                        {"head": ref.head_num, "keyword": ref.keyword}
                                                        for ref in entry.cross_refs
                                                    ],
                                                }
                                                for entry in group.entries
                                            ]
                                        }
                                        for group in para.groups
                                    ],
                                }
                                for para in head.paragraphs
                            ],
                        }
                        for head in sec.heads
                    ],
                }
                for sec in cls.sections
            ],
        }
        for cls in kb.classes
    ]

    coverage = None
    if bundle.resource is not None:
        common = common_strings(bundle.index, bundle.resource)
        report = class_coverage(kb, common, strip_gloss=strip_gloss)

        def row(r) -> dict:
            return {
                "classNum": r.class_num,
                "sections": r.sections,
                "heads": r.heads,
                "paragraphs": r.paragraphs,
                "semicolonGroups": r.groups,
                "strings": r.strings,
                "pctCommonHeads": r.pct_common_heads,
                "pctCommonKeywords": r.pct_common_keywords,
                "pctCommonStrings": r.pct_common_strings,
            }

        coverage = {
            "keywordDenominator": "paragraphs",
            "commonStrings": len(common),
            "classes": [row(r) for r in report.rows],
            "total": row(report.total),
        }

    document = {
        "format": "rogetkb-structured",
        "version": _VERSION,
        "sourceChecksum": kb.source_checksum,
        "counts": {
            "classes": len(kb.classes),
            "sections": counts.sections,
            "heads": counts.heads,
            "paragraphs": counts.paragraphs,
            "semicolonGroups": counts.groups,
            "entries": counts.entries,
        },
        "index": {
            "uniqueStrings": bundle.index.unique_count,
            "totalOccurrences": bundle.index.total_occurrences,
        },
        "posDistribution": {
            pos.value: share for pos, share in pos_distribution(kb).items()
        },
        "taxonomy": taxonomy,
        "coverage": coverage,
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
