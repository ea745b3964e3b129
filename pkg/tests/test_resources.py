import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mteval import StemTable, SynonymLexicon, are_synonyms, load_stems, load_synonyms
from mteval.errors import InputError

words = st.text(alphabet="abcdxyz", min_size=1, max_size=4)


def test_load_stems_round_trip(tmp_path):
    path = tmp_path / "stems.tsv"
    path.write_text("بنایا\tبنا\nworks\twork\n", encoding="utf-8")
    stems = load_stems(str(path))
    assert stems.stem_of("بنایا") == "بنا"
    assert stems.stem_of("works") == "work"


def test_stem_identity_fallback(tmp_path):
    path = tmp_path / "stems.tsv"
    path.write_text("works\twork\n", encoding="utf-8")
    stems = load_stems(str(path))
    assert stems.stem_of("manager") == "manager"


def test_empty_stem_table_is_identity(tmp_path):
    path = tmp_path / "stems.tsv"
    path.write_text("", encoding="utf-8")
    stems = load_stems(str(path))
    for token in ("a", "بنایا", ""):
        assert stems.stem_of(token) == token
    assert not stems


def test_load_stems_malformed_line(tmp_path):
    path = tmp_path / "stems.tsv"
    path.write_text("ok\tok\nbroken line\n", encoding="utf-8")
    with pytest.raises(InputError, match=r"stems\.tsv:2"):
        load_stems(str(path))


def test_load_stems_empty_value_rejected(tmp_path):
    path = tmp_path / "stems.tsv"
    path.write_text("word\t\n", encoding="utf-8")
    with pytest.raises(InputError, match="empty"):
        load_stems(str(path))


def test_load_stems_missing_file():
    with pytest.raises(InputError, match="no_such_file"):
        load_stems("no_such_file.tsv")


def test_load_stems_duplicate_last_wins(tmp_path, caplog):
    path = tmp_path / "stems.tsv"
    path.write_text("w\ta\nw\tb\n", encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        stems = load_stems(str(path))
    assert stems.stem_of("w") == "b"
    assert any("duplicate" in rec.message for rec in caplog.records)


def test_load_stems_warns_on_non_idempotent_chain(tmp_path, caplog):
    path = tmp_path / "stems.tsv"
    path.write_text("a\tb\nb\tc\n", encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        load_stems(str(path))
    assert any("idempotent" in rec.message for rec in caplog.records)


def test_load_stems_comments_and_blanks(tmp_path):
    path = tmp_path / "stems.tsv"
    path.write_text("# comment\n\nworks\twork\n", encoding="utf-8")
    assert load_stems(str(path)).stem_of("works") == "work"


def test_synonyms_round_trip(tmp_path):
    path = tmp_path / "syn.tsv"
    path.write_text("بھارت\tانڈیا\n", encoding="utf-8")
    lex = load_synonyms(str(path))
    assert are_synonyms("بھارت", "انڈیا", lex)
    assert are_synonyms("انڈیا", "بھارت", lex)


def test_synonyms_reject_self_pairs(tmp_path):
    path = tmp_path / "syn.tsv"
    path.write_text("x\ty\n", encoding="utf-8")
    lex = load_synonyms(str(path))
    assert not are_synonyms("x", "x", lex)


def test_empty_lexicon_never_matches():
    lex = SynonymLexicon()
    assert not are_synonyms("a", "b", lex)
    assert not lex


def test_single_member_synset_rejected(tmp_path):
    path = tmp_path / "syn.tsv"
    path.write_text("alone\n", encoding="utf-8")
    with pytest.raises(InputError, match="two"):
        load_synonyms(str(path))


def test_word_in_multiple_synsets(tmp_path):
    path = tmp_path / "syn.tsv"
    path.write_text("a\tb\nb\tc\n", encoding="utf-8")
    lex = load_synonyms(str(path))
    assert are_synonyms("a", "b", lex)
    assert are_synonyms("b", "c", lex)
    assert not are_synonyms("a", "c", lex)


@given(
    st.lists(st.sets(words, min_size=2, max_size=4), max_size=5),
    words,
    words,
)
def test_are_synonyms_symmetric(synset_sets, a, b):
    lex = SynonymLexicon.from_synsets([frozenset(s) for s in synset_sets])
    assert are_synonyms(a, b, lex) == are_synonyms(b, a, lex)


@given(st.dictionaries(words, words.filter(bool), max_size=8), words)
def test_stem_of_total(entries, token):
    table = StemTable(entries)
    assert isinstance(table.stem_of(token), str)
