from __future__ import annotations

import pytest

from rogetkb.lexnet import (
    DEFAULT_RELATIONS,
    LABEL_PRECEDENCE,
    LexiconError,
    RelationType,
    build_mini_net,
    load_resource,
)
from rogetkb.model import PartOfSpeech


class TestRelationType:
    def test_fifteen_types_in_precedence_order(self):
        assert len(LABEL_PRECEDENCE) == 15
        assert LABEL_PRECEDENCE[0] is RelationType.SYNONYM
        assert LABEL_PRECEDENCE[1] is RelationType.ANTONYM
        assert LABEL_PRECEDENCE[2] is RelationType.HYPERNYM
        assert LABEL_PRECEDENCE[3] is RelationType.HYPONYM
        assert LABEL_PRECEDENCE[-1] is RelationType.PARTICIPLE

    def test_parse(self):
        assert RelationType.parse("also-see") is RelationType.ALSO_SEE
        assert RelationType.parse("HYPERNYM") is RelationType.HYPERNYM
        with pytest.raises(ValueError):
            RelationType.parse("friend-of")

    def test_defaults_per_pos(self):
        assert DEFAULT_RELATIONS[PartOfSpeech.NOUN] == frozenset({
            RelationType.SYNONYM, RelationType.HYPERNYM, RelationType.HYPONYM,
            RelationType.COORDINATE, RelationType.MERONYM, RelationType.HOLONYM,
            RelationType.ANTONYM,
        })
        assert DEFAULT_RELATIONS[PartOfSpeech.VERB] == frozenset({
            RelationType.SYNONYM, RelationType.HYPERNYM, RelationType.HYPONYM,
            RelationType.ENTAILMENT, RelationType.CAUSE, RelationType.ANTONYM,
        })
        assert DEFAULT_RELATIONS[PartOfSpeech.ADJECTIVE] == frozenset({
            RelationType.SYNONYM, RelationType.SIMILAR, RelationType.ANTONYM,
            RelationType.ATTRIBUTE,
        })
        for pos in (PartOfSpeech.ADVERB, PartOfSpeech.INTERJECTION):
            assert DEFAULT_RELATIONS[pos] == frozenset({
                RelationType.SYNONYM, RelationType.ANTONYM,
            })


class TestLoadResource:
    def test_fixture_loads(self, res_dec):
        assert len(res_dec.synsets) == 30
        assert len(res_dec.edges) == 27
        assert all(rel is RelationType.HYPERNYM for _, rel, _ in res_dec.edges)

    def test_gloss(self, res_dec):
        assert res_dec.synsets["decrement.n.1"].gloss == (
            "the amount by which something decreases"
        )
        assert res_dec.synsets["amount.n.1"].gloss is None

    def test_lemmas_normalized_and_deduped(self):
        res = load_resource("SYN x.n.1 N  Alpha ; beta;alpha \n")
        assert res.synsets["x.n.1"].lemmas == ("alpha", "beta")

    def test_hyponym_written_both_ways_is_one_edge_form(self):
        direct = load_resource(
            "SYN a.n.1 N a\nSYN b.n.1 N b\nREL hypernym b.n.1 a.n.1\n"
        )
        inverted = load_resource(
            "SYN a.n.1 N a\nSYN b.n.1 N b\nREL hyponym a.n.1 b.n.1\n"
        )
        assert direct.edges == inverted.edges == (
            ("b.n.1", RelationType.HYPERNYM, "a.n.1"),
        )

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("SYN x.n.1 N\n", "malformed SYN"),
            ("SYN x.n.1 N a\nSYN x.n.1 N b\n", "duplicate synset id x.n.1"),
            ("SYN x.n.1 N  ; ;\n", "has no lemmas"),
            ("SYN x.n.1 Q a\n", "unknown part of speech"),
            ("REL hypernym a.n.1\n", "malformed REL"),
            ("SYN a.n.1 N a\nSYN b.n.1 N b\nREL knows a.n.1 b.n.1\n", "unknown relation type"),
            ("BOGUS x\n", "unknown record kind"),
            ("SYN a.n.1 N a\nREL hypernym a.n.1 ghost.n.1\n", "unknown synset ghost.n.1"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(LexiconError) as exc_info:
            load_resource(text)
        assert fragment in exc_info.value.message

    def test_error_carries_line_and_renders_with_it(self):
        with pytest.raises(LexiconError) as exc_info:
            load_resource("// comment\nBOGUS x\n")
        assert exc_info.value.line == 2
        assert str(exc_info.value).startswith("2:error: ")


class TestQueries:
    def test_neighbours_hypernym(self, res_dec):
        (hyper,) = res_dec.neighbours("decrement.n.1", RelationType.HYPERNYM)
        assert hyper.id == "amount.n.1"

    def test_neighbours_hyponym_reads_inverse(self, res_dec):
        ids = [s.id for s in res_dec.neighbours("decrement.n.1", RelationType.HYPONYM)]
        assert ids == ["drop.n.1", "shrinkage.n.1"]

    def test_isolated_synset_has_no_neighbours(self, res_dec):
        for rel in RelationType:
            assert res_dec.neighbours("leak.n.1", rel) == ()

    def test_synsets_for(self, res_dec):
        ids = [s.id for s in res_dec.synsets_for("decrease", PartOfSpeech.NOUN)]
        assert ids == ["decrement.n.1", "decrement.n.2"]
        assert res_dec.synsets_for("decrease", PartOfSpeech.VERB) == ()
        assert res_dec.synsets_for(" DECREASE ") != ()

    def test_all_lemmas(self, res_dec):
        lemmas = res_dec.all_lemmas()
        assert {"decrement", "natural process", "leak", "growth"} <= lemmas


class TestMiniNet:
    def test_two_senses_in_file_order(self, res_dec):
        net = build_mini_net(res_dec, "Decrement", PartOfSpeech.NOUN)
        assert net.lemma == "decrement"
        assert [s.seed.id for s in net.senses] == ["decrement.n.1", "decrement.n.2"]

    def test_sense_one_neighbourhood(self, res_dec):
        net = build_mini_net(res_dec, "decrement", PartOfSpeech.NOUN)
        sense = net.senses[0]
        assert [rel for rel, _ in sense.reached] == [
            RelationType.HYPERNYM, RelationType.HYPONYM, RelationType.COORDINATE,
        ]
        assert [s.id for s in sense.via(RelationType.HYPERNYM)] == ["amount.n.1"]
        assert [s.id for s in sense.via(RelationType.HYPONYM)] == [
            "drop.n.1", "shrinkage.n.1",
        ]
        assert sense.via(RelationType.ANTONYM) == ()

    def test_coordinates_are_hypernym_plus_its_hyponyms(self, res_dec):
        net = build_mini_net(res_dec, "decrement", PartOfSpeech.NOUN)
        assert [s.id for s in net.senses[0].via(RelationType.COORDINATE)] == [
            "amount.n.1", "quantity.n.1", "increase.n.1", "decrement.n.1",
            "insufficiency.n.1", "number.n.1",
        ]
        coord2 = [s.id for s in net.senses[1].via(RelationType.COORDINATE)]
        assert coord2[0] == "process.n.1"
        assert "decrement.n.2" in coord2
        assert len(coord2) == 15

    def test_sense_two_hyponyms(self, res_dec):
        net = build_mini_net(res_dec, "decrement", PartOfSpeech.NOUN)
        assert [s.id for s in net.senses[1].via(RelationType.HYPONYM)] == [
            "wastage.n.1", "decay.n.1", "slippage.n.1", "diminution.n.1",
            "desensitization.n.1", "narrowing.n.1",
        ]

    def test_strings_cover_all_member_lemmas(self, res_dec):
        strings = build_mini_net(res_dec, "decrement", PartOfSpeech.NOUN).strings()
        assert len(strings) == 41
        assert {"decrement", "fall", "natural process", "growth"} <= strings
        assert "leak" not in strings

    def test_restricted_relations(self, res_dec):
        net = build_mini_net(
            res_dec, "decrement", PartOfSpeech.NOUN,
            relations=[RelationType.HYPERNYM],
        )
        for sense in net.senses:
            assert [rel for rel, _ in sense.reached] == [RelationType.HYPERNYM]

    def test_unknown_lemma_gives_empty_net(self, res_dec):
        net = build_mini_net(res_dec, "unheard-of", PartOfSpeech.NOUN)
        assert net.senses == ()
        assert net.strings() == frozenset()

    def test_pos_filters_seeds(self, res_dec):
        net = build_mini_net(res_dec, "decrement", PartOfSpeech.VERB)
        assert net.senses == ()
