import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import FIXTURES, F, T, bipartites, doc
from bipcomplete.document import (
    DigraphDocument,
    DocumentError,
    document_for,
    export_dot,
    format_document,
    parse_document,
)
from bipcomplete.oracle import completion_at

HEAD = "V1: u1 u2\nV2: v1 v2 v3\nARCS:\n"
GOOD_ARCS = "u1 -> v1\nu1 -> v2\nv3 -> u1\nv1 -> u2\nu2 -> v2\nu2 -> v3\n"


def test_F_fixture():
    assert doc("F.txt").to_bipartite() == F()


def test_missing_pair_is_named():
    text = HEAD + GOOD_ARCS.replace("v3 -> u1\n", "")
    with pytest.raises(DocumentError, match=r"\(u1, v3\)"):
        parse_document(text)


def test_both_orientations_rejected():
    with pytest.raises(DocumentError, match="both ways") as e:
        parse_document(HEAD + GOOD_ARCS + "v1 -> u1\n")
    assert e.value.line == 10


@pytest.mark.parametrize(
    "text,needle",
    [
        ("V1: a a\nV2: b\nARCS:\na -> b\n", "duplicate vertex"),
        ("V1: a\nV2: a\nARCS:\na -> a\n", "duplicate vertex"),
        ("V1: a\nV2: b\nARCS:\na -> c\n", "unknown vertex"),
        ("V1: a\nV2: b\nARCS:\na -> b -> a\n", "tail -> head"),
        ("V1: a\nV2: b\nARCS:\na -> b\nARCS:\n", "duplicate ARCS"),
        ("V1: a\nV2: b\na -> b\n", "outside a section"),
        ("V1: a\nARCS:\n", "V2"),
        ("V1: a\nV2: b\n", "missing ARCS"),
        ("V1: a!\nV2: b\nARCS:\na -> b\n", "bad vertex name"),
        ("V1: a c\nV2: b\nARCS:\na -> b\nc -> b\na -> c\n", "one partite set"),
        ("V1: a c\nV2: b\nARCS:\na -> b\nc -> b\nINTRA:\n", "not oriented"),
        ("V1: a c\nV2: b\nARCS:\na -> b\nc -> b\nINTRA:\na -> b\n", "crosses"),
        ("V1: a c\nV2: b\nARCS:\na -> b\nc -> b\nINTRA:\na -> c\nc -> a\n", "both ways"),
    ],
)
def test_rejections(text, needle):
    with pytest.raises(DocumentError, match=needle):
        parse_document(text)


def test_error_position():
    with pytest.raises(DocumentError) as e:
        parse_document("V1: a\nV2: b\nARCS:\n  a -> zz\n")
    assert (e.value.line, e.value.column) == (4, 3)
    with pytest.raises(DocumentError) as e:
        parse_document("V1: a b$\nV2: c\nARCS:\n")
    assert (e.value.line, e.value.column) == (1, 7)


def test_bytes_and_loose_arc_forms():
    d = parse_document(b"# c\nV1: a   # trailing\nV2: b c\nARCS:\na->b\nc a\n")
    assert d.arcs == (("a", "b"), ("c", "a"))
    with pytest.raises(DocumentError, match="UTF-8"):
        parse_document(b"\xff\xfe")


def test_completion_document():
    assert doc("T_figure1.txt").to_completion() == T()
    with pytest.raises(DocumentError):
        doc("F.txt").to_completion()


@settings(max_examples=80, deadline=None)
@given(bipartites(4, 4), st.integers(0, 1 << 12))
def test_round_trip(d, seed):
    plain = document_for(d)
    assert parse_document(format_document(plain, ["hdr"])) == plain
    n_pairs = len(d.intra_pairs())
    t = completion_at(d, seed % (1 << n_pairs))
    full = document_for(t)
    again = parse_document(format_document(full))
    assert again == full
    assert again.to_completion() == t


def dot_counts(text):
    lines = text.splitlines()
    nodes = sum(1 for s in lines if s.strip().endswith(";") and "->" not in s and "=" not in s)
    solid = sum(1 for s in lines if "->" in s and "dashed" not in s)
    dashed = sum(1 for s in lines if "->" in s and "dashed" in s)
    return nodes, solid, dashed


def test_dot_export():
    assert dot_counts(export_dot(doc("F.txt"))) == (6, 8, 0)
    assert dot_counts(export_dot(doc("T_figure1.txt"))) == (6, 8, 7)
    assert dot_counts(export_dot(doc("single_arc.txt"))) == (2, 1, 0)
    text = export_dot(DigraphDocument(('say"hi',), ("b",), (('say"hi', "b"),)))
    assert r'"say\"hi" -> "b";' in text


def test_fixture_files_all_parse():
    for path in FIXTURES.glob("*.txt"):
        parse_document(path.read_bytes())
