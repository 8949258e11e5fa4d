from __future__ import annotations

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from corpusgen import generate
from rogetkb.index import build_index
from rogetkb.model import Address
from rogetkb.parser import parse_source


class TestLookup:
    def test_query_is_normalized(self, idx42):
        assert idx42.lookup("  DECREMENT ") == idx42.lookup("decrement") != ()

    def test_miss_is_empty_tuple(self, idx42):
        assert idx42.lookup("zeppelin") == ()
        assert idx42.lookup("") == ()

    def test_phrases_are_whole_strings(self):
        source = "#CLASS 1 C\n#SECTION 1 S\n#HEAD 1 H\n#PARA N\nempty space, void;\n"
        idx = build_index(parse_source(source).kb)
        assert idx.lookup("Empty  Space") != ()
        # the phrase is indexed, not its words
        assert idx.lookup("empty") == ()
        assert idx.lookup("space") == ()

    def test_void_addresses_in_taxonomy_order(self, idx2):
        got = [str(a) for a in idx2.lookup("void")]
        assert got == ["1.1.2:N:0:1:1", "2.1.183:N:0:0:2", "2.1.183:N:0:1:1"]


class TestShape:
    def test_head42_sizes(self, idx42):
        assert idx42.total_occurrences == 27
        assert idx42.unique_count == 27  # no duplicate strings in that head

    def test_two_class_sizes(self, idx2):
        assert idx2.total_occurrences == 39
        assert idx2.unique_count == 37  # "void" occurs three times

    def test_unique_strings_matches_count(self, idx2):
        assert len(idx2.unique_strings()) == idx2.unique_count


class TestAgainstKB:
    def test_complete(self, kb2, idx2):
        """Every entry occurrence is findable at its own address."""
        for addr, entry in kb2.walk_entries():
            assert addr in idx2.lookup(entry.text)

    def test_sound(self, kb2, idx2):
        """Every posting resolves to an entry bearing the indexed string."""
        for text, addresses in idx2.entries.items():
            for addr in addresses:
                assert kb2.resolve(addr).text == text

    def test_postings_sorted(self, idx2):
        for addresses in idx2.entries.values():
            keys = [a.sort_key() for a in addresses]
            assert keys == sorted(keys)


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(seed=st.integers(0, 2**32 - 1))
def test_generated_occurrence_counts(seed):
    corpus = generate(seed, n_classes=2)
    kb = parse_source(corpus.text).kb
    idx = build_index(kb)
    assert idx.total_occurrences == corpus.entries
    got = {text: len(addrs) for text, addrs in idx.entries.items()}
    assert got == dict(corpus.occurrences)


def test_large_corpus_completeness():
    corpus = generate(
        1234,
        n_classes=6,
        heads_per_section=(2, 5),
        groups_per_para=(2, 6),
        entries_per_group=(2, 8),
    )
    assert corpus.entries >= 1000
    kb = parse_source(corpus.text).kb
    idx = build_index(kb)
    assert idx.total_occurrences == corpus.entries
    for addr, entry in kb.walk_entries():
        assert addr in idx.lookup(entry.text)
    for text, addrs in idx.entries.items():
        assert len(addrs) == corpus.occurrences[text]
        for addr in addrs:
            assert kb.resolve(addr).text == text
