"""Loaders for the sample data shipped with the package."""

from __future__ import annotations

from importlib import resources

from .lexnet import SynsetResource, load_resource
from .model import ThesaurusKB
from .parser import parse_source

__all__ = ["FIXTURES", "fixture_text", "head42_kb", "two_class_kb", "decrement_resource"]

FIXTURES = ("head42.roget", "two_class.roget", "decrement.lex")


def fixture_text(name: str) -> str:
    return resources.files("rogetkb").joinpath("data", name).read_text(encoding="utf-8")


def _parse_fixture(name: str) -> ThesaurusKB:
    result = parse_source(fixture_text(name))
    if result.kb is None:
        raise RuntimeError(f"shipped fixture {name} failed to parse: {result.errors}")
    return result.kb


def head42_kb() -> ThesaurusKB:
    """One class, one section, head 42 with its noun paragraph."""
    return _parse_fixture("head42.roget")


def two_class_kb() -> ThesaurusKB:
    """Two classes, five heads; contains the maximum-distance group pair."""
    return _parse_fixture("two_class.roget")


def decrement_resource() -> SynsetResource:
    """Synset graph around the two noun senses of "decrement"."""
    return load_resource(fixture_text("decrement.lex"))
