import pytest

from sgreflect.errors import SgtParseError
from sgreflect.sgt import format_sgt, parse_sgt

from conftest import S2, T, Z2


def test_single_block():
    doc = parse_sgt("2\n0 1\n1 0\n")
    assert len(doc.blocks) == 1
    assert doc.blocks[0].semigroup == Z2
    assert doc.blocks[0].name is None


def test_named_blocks_and_blank_separators():
    text = "# name: Z2\n2\n0 1\n1 0\n\n# name: S2\n2\n0 0\n0 1\n"
    doc = parse_sgt(text)
    assert [b.name for b in doc.blocks] == ["Z2", "S2"]
    assert doc.blocks[1].semigroup == S2


def test_provenance_header():
    doc = parse_sgt("# provenance: test run 1\n\n1\n0\n")
    assert doc.provenance == "test run 1"
    assert doc.blocks[0].semigroup == T


def test_plain_comments_ignored():
    doc = parse_sgt("# a remark\n1\n# another\n0\n")
    assert doc.blocks[0].semigroup == T


def test_order_zero_block():
    doc = parse_sgt("0\n")
    assert doc.blocks[0].semigroup.order == 0


def test_format_roundtrip():
    blocks = [("Z2", Z2), (None, S2), (None, T)]
    text = format_sgt(blocks, provenance="demo")
    doc = parse_sgt(text)
    assert doc.provenance == "demo"
    assert [b.name for b in doc.blocks] == ["Z2", None, None]
    assert [b.semigroup for b in doc.blocks] == [Z2, S2, T]
    assert format_sgt([(b.name, b.semigroup) for b in doc.blocks], "demo") == text


def test_rejects_garbage_order():
    with pytest.raises(SgtParseError):
        parse_sgt("banana\n")


def test_rejects_short_row():
    with pytest.raises(SgtParseError):
        parse_sgt("2\n0 1\n1\n")


def test_rejects_missing_rows():
    with pytest.raises(SgtParseError):
        parse_sgt("2\n0 1\n")


def test_rejects_out_of_range_entry():
    with pytest.raises(SgtParseError):
        parse_sgt("2\n0 5\n1 0\n")


def test_rejects_non_associative_table():
    with pytest.raises(SgtParseError):
        parse_sgt("2\n1 0\n0 0\n")


def test_rejects_empty_document():
    with pytest.raises(SgtParseError):
        parse_sgt("\n\n")
