"""Command-line front end.

Exit codes: 0 success, 1 parse or validation errors, 2 I/O problems,
3 query target missing, 4 capability missing (bundle built without a
synset resource). Every command's output is deterministic for identical
inputs. All I/O is UTF-8.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional

import click

from .aligner import (
    LabelConfig,
    LabelledParagraph,
    class_coverage,
    common_strings,
    head_coverage,
    label_paragraph,
    pos_distribution,
)
from .bundle import BundleError, KBBundle, load_bundle, structured_document, write_bundle
from .lexnet import LABEL_PRECEDENCE, LexiconError, RelationType, load_resource
from .metrics import word_distance
from .model import Address, AddressError, PartOfSpeech
from .parser import parse_source, serialize_kb

EXIT_PARSE = 1
EXIT_IO = 2
EXIT_MISSING = 3
EXIT_CAPABILITY = 4

_KB_OPTION = click.option(
    "--kb", "kb_path", required=True, type=click.Path(), help="knowledge-base bundle file"
)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_IO)


def _load(kb_path: str) -> KBBundle:
    try:
        return load_bundle(kb_path)
    except BundleError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO)


@click.group()
def main() -> None:
    """Roget-structured thesaurus knowledge base."""


@main.command()
@click.argument("source", type=click.Path())
@click.option("--lex", "lex_path", type=click.Path(), default=None,
              help="synset resource to embed in the bundle")
@click.option("--out", "out_path", type=click.Path(), required=True,
              help="bundle file to write")
def build(source: str, lex_path: Optional[str], out_path: str) -> None:
    """Parse SOURCE, index it, and write a bundle.

    Diagnostics go to standard error; the bundle is written only when no
    error-severity diagnostic was produced.
    """
    result = parse_source(_read_text(source))
    for diag in result.diagnostics:
        click.echo(str(diag), err=True)
    if result.kb is None:
        sys.exit(EXIT_PARSE)
    lex_text = None
    if lex_path is not None:
        lex_text = _read_text(lex_path)
        try:
            load_resource(lex_text)
        except LexiconError as exc:
            click.echo(str(exc), err=True)
            sys.exit(EXIT_PARSE)
    try:
        write_bundle(out_path, result.kb, result.diagnostics, lex_text)
    except OSError as exc:
        click.echo(f"error: cannot write {out_path}: {exc}", err=True)
        sys.exit(EXIT_IO)
    counts = result.kb.count_nodes().total
    click.echo(
        f"wrote {out_path}: {len(result.kb.classes)} classes, "
        f"{counts.heads} heads, {counts.entries} entries"
    )


@main.command()
@click.argument("word")
@_KB_OPTION
def lookup(word: str, kb_path: str) -> None:
    """Print every address of WORD: address, head name, paragraph keyword.

    A miss prints nothing and still exits 0.
    """
    bundle = _load(kb_path)
    for addr in bundle.index.lookup(word):
        head = bundle.kb.resolve(Address(addr.class_num, addr.section_num, addr.head_num))
        para = bundle.kb.resolve(
            Address(addr.class_num, addr.section_num, addr.head_num, addr.pos, addr.para_idx)
        )
        click.echo(f"{addr}\t{head.name}\t{para.keyword}")


@main.command()
@click.argument("word_a")
@click.argument("word_b")
@_KB_OPTION
def sim(word_a: str, word_b: str, kb_path: str) -> None:
    """Edge-counting distance and similarity between two words."""
    bundle = _load(kb_path)
    missing = [w for w in (word_a, word_b) if not bundle.index.lookup(w)]
    if missing:
        for word in missing:
            click.echo(f"error: word not indexed: {word}", err=True)
        sys.exit(EXIT_MISSING)
    result = word_distance(bundle.kb, bundle.index, word_a, word_b)
    click.echo(
        f"distance={result.distance} similarity={result.similarity:.4f} "
        f"lca={result.lca_level} a={result.witness_a} b={result.witness_b}"
    )


@main.command()
@click.argument("mode", type=click.Choice(["class", "head", "pos"]))
@_KB_OPTION
@click.option("--top", type=int, default=None, help="truncate head mode to the first K rows")
@click.option("--strip-gloss", "strip", is_flag=True,
              help="match head names with the ':' gloss removed")
def stats(mode: str, kb_path: str, top: Optional[int], strip: bool) -> None:
    """Tab-separated corpus tables: per-class, per-head, or POS shares.

    Coverage percentage columns appear when the bundle carries a synset
    resource; otherwise the tables are counts-only.
    """
    bundle = _load(kb_path)
    if mode == "pos":
        click.echo("pos\tfraction")
        shares = pos_distribution(bundle.kb)
        for pos in PartOfSpeech:
            click.echo(f"{pos.value}\t{shares[pos]:.4f}")
    elif mode == "class":
        if bundle.resource is None:
            click.echo("classNum\tsections\theads\tparagraphs\tsemicolonGroups\tstrings")
            report = bundle.kb.count_nodes()
            for rec in report.per_class:
                click.echo(f"{rec.class_num}\t{rec.sections}\t{rec.heads}\t"
                           f"{rec.paragraphs}\t{rec.groups}\t{rec.entries}")
            t = report.total
            click.echo(f"total\t{t.sections}\t{t.heads}\t{t.paragraphs}\t{t.groups}\t{t.entries}")
        else:
            common = common_strings(bundle.index, bundle.resource)
            report = class_coverage(bundle.kb, common, strip_gloss=strip)
            click.echo("classNum\tsections\theads\tparagraphs\tsemicolonGroups\tstrings\t"
                       "pctCommonHeads\tpctCommonKeywords\tpctCommonStrings")
            for row in report.rows + (report.total,):
                label_cell = "total" if row.class_num is None else str(row.class_num)
                click.echo(
                    f"{label_cell}\t{row.sections}\t{row.heads}\t{row.paragraphs}\t"
                    f"{row.groups}\t{row.strings}\t{row.pct_common_heads:.2f}\t"
                    f"{row.pct_common_keywords:.2f}\t{row.pct_common_strings:.2f}"
                )
    else:
        if bundle.resource is None:
            click.echo("headNum\theadName\tparagraphs\tsemicolonGroups\tstrings")
            rows = []
            for _, _, head in bundle.kb.walk_heads():
                groups = sum(len(p.groups) for p in head.paragraphs)
                strings = sum(len(g.entries) for p in head.paragraphs for g in p.groups)
                rows.append((head.number, head.name, len(head.paragraphs), groups, strings))
            for row in rows[:top]:
                click.echo("\t".join(str(cell) for cell in row))
        else:
            common = common_strings(bundle.index, bundle.resource)
            click.echo("headNum\theadName\theadNameInLex\tparagraphs\tsemicolonGroups\t"
                       "strings\tpctCommonStrings\tpctCommonKeywords")
            for row in head_coverage(bundle.kb, bundle.resource, common, strip_gloss=strip)[:top]:
                in_lex = "yes" if row.head_name_in_lex else "no"
                click.echo(
                    f"{row.head_num}\t{row.head_name}\t{in_lex}\t{row.paragraphs}\t"
                    f"{row.groups}\t{row.strings}\t{row.pct_common_strings:.2f}\t"
                    f"{row.pct_common_keywords:.2f}"
                )


def _label_name(label: Optional[RelationType]) -> str:
    return "No label" if label is None else label.value.capitalize()


def render_labelled(result: LabelledParagraph, pos: PartOfSpeech, show_evidence: bool) -> list[str]:
    """Keyword header, then one line per label in precedence order listing
    that label's groups in source order. The keyword entry itself is shown
    only in the header; a group left empty by that removal is covered by
    the header alone."""
    lines = [f"{pos.display} {result.keyword}"]
    for label in list(LABEL_PRECEDENCE) + [None]:
        rendered = []
        for sg_idx, item in enumerate(result.labelled):
            if item.label is not label:
                continue
            entries = item.group.entries[1:] if sg_idx == 0 else item.group.entries
            text = ", ".join(entry.render() for entry in entries)
            if text:
                rendered.append(text)
        if rendered:
            lines.append(f"{_label_name(label)}: " + "; ".join(rendered))
    if show_evidence:
        for sg_idx, item in enumerate(result.labelled):
            if item.evidence:
                triples = " ".join(
                    f"{ev.string}->{ev.synset_id}({ev.relation.value})" for ev in item.evidence
                )
                lines.append(f"evidence: sg={sg_idx} {triples}")
    return lines


@main.command()
@click.argument("head_num", type=int)
@click.argument("pos", type=click.Choice([p.value for p in PartOfSpeech], case_sensitive=False))
@click.argument("para_idx", type=int, default=0, required=False)
@_KB_OPTION
@click.option("--evidence", "show_evidence", is_flag=True,
              help="print the matched string/synset pairs per labelled group")
@click.option("--no-xref-match", "no_xref", is_flag=True,
              help="do not let cross-reference keywords participate in matching")
def label(head_num: int, pos: str, para_idx: int, kb_path: str,
          show_evidence: bool, no_xref: bool) -> None:
    """Label the semicolon groups of one paragraph against the keyword's
    mini-net and print the paragraph regrouped by relation."""
    bundle = _load(kb_path)
    if bundle.resource is None:
        click.echo("error: bundle has no synset resource (rebuild with --lex)", err=True)
        sys.exit(EXIT_CAPABILITY)
    head_addr = bundle.kb.head_address(head_num)
    if head_addr is None:
        click.echo(f"error: head {head_num} not found", err=True)
        sys.exit(EXIT_MISSING)
    pos_tag = PartOfSpeech.parse(pos)
    target = Address(
        head_addr.class_num, head_addr.section_num, head_num, pos_tag, para_idx
    )
    try:
        result = label_paragraph(
            bundle.kb, bundle.resource, target,
            LabelConfig(match_cross_refs=not no_xref),
        )
    except AddressError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_MISSING)
    for line in render_labelled(result, pos_tag, show_evidence):
        click.echo(line)


@main.command()
@click.argument("fmt", metavar="FORMAT", type=click.Choice(["canonical", "structured"]))
@_KB_OPTION
@click.option("--out", "out_path", type=click.Path(), required=True, help="file to write")
@click.option("--strip-gloss", "strip", is_flag=True,
              help="match head names with the ':' gloss removed in coverage rows")
def export(fmt: str, kb_path: str, out_path: str, strip: bool) -> None:
    """Write the bundle back out: FORMAT is ``canonical`` (the source
    grammar, re-parseable) or ``structured`` (JSON with taxonomy, index
    statistics, and coverage)."""
    bundle = _load(kb_path)
    if fmt == "canonical":
        text = serialize_kb(bundle.kb)
    else:
        text = structured_document(bundle, strip_gloss=strip)
    try:
        Path(out_path).write_text(text, encoding="utf-8")
    except OSError as exc:
        click.echo(f"error: cannot write {out_path}: {exc}", err=True)
        sys.exit(EXIT_IO)


if __name__ == "__main__":
    main()
