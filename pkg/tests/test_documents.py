import json

import pytest

from no3queens import (
    DocumentError,
    Line,
    Placement,
    line_document,
    line_from_document,
    load_placement_file,
    parse_placement,
    parse_placement_document,
    placement_document,
    placement_to_text,
)


def test_round_trip():
    p = Placement(5, [(3, 1), (1, 2), (4, 4)])
    text = placement_to_text(p, label="sample")
    parsed, metadata = parse_placement_document(text)
    assert parsed == p
    assert metadata == {"label": "sample"}


def test_queens_serialized_sorted():
    p = Placement(4, [(4, 1), (1, 4), (2, 2)])
    doc = placement_document(p)
    assert doc == {"n": 4, "queens": [[1, 4], [2, 2], [4, 1]]}


def test_syntax_error():
    with pytest.raises(DocumentError) as info:
        parse_placement('{"n": 4,')
    assert info.value.kind == "syntax"
    assert "line" in str(info.value)


def test_schema_errors():
    cases = [
        '[1, 2]',
        '{"queens": []}',
        '{"n": "four"}',
        '{"n": 0}',
        '{"n": true}',
        '{"n": 4, "queens": 7}',
        '{"n": 4, "queens": [[1]]}',
        '{"n": 4, "queens": [[1, 2, 3]]}',
        '{"n": 4, "queens": [[1, "two"]]}',
        '{"n": 4, "queens": [[1, true]]}',
        '{"n": 4, "queens": [[1, 2]], "label": 9}',
    ]
    for text in cases:
        with pytest.raises(DocumentError) as info:
            parse_placement(text)
        assert info.value.kind == "schema", text


def test_range_error_names_offender():
    with pytest.raises(DocumentError) as info:
        parse_placement('{"n": 3, "queens": [[1, 1], [4, 2]]}')
    assert info.value.kind == "range"
    assert "queens[1]" in str(info.value)
    assert "[4, 2]" in str(info.value)


def test_duplicate_error():
    with pytest.raises(DocumentError) as info:
        parse_placement('{"n": 3, "queens": [[1, 1], [2, 2], [1, 1]]}')
    assert info.value.kind == "duplicate"
    assert "queens[2]" in str(info.value)


def test_unknown_keys_ignored():
    p = parse_placement('{"n": 2, "queens": [[1, 1]], "note": "kept?", "x": 1}')
    assert p == Placement(2, [(1, 1)])


def test_empty_queens_default():
    p, metadata = parse_placement_document('{"n": 3}')
    assert p == Placement(3)
    assert metadata == {}


def test_metadata_source_and_none():
    _, metadata = parse_placement_document(
        '{"n": 2, "queens": [], "source": "search", "label": null}')
    assert metadata == {"source": "search"}


def test_load_placement_file(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(placement_to_text(Placement(3, [(2, 2)])), encoding="utf-8")
    p, _ = load_placement_file(str(path))
    assert p == Placement(3, [(2, 2)])


def test_document_text_is_json():
    text = placement_to_text(Placement(2, [(1, 2)]), source="unit")
    doc = json.loads(text)
    assert doc["source"] == "unit"


def test_line_documents():
    line = Line("D", -2)
    assert line_document(line) == {"slope": "D", "offset": -2}
    assert line_from_document({"slope": "D", "offset": -2}) == line
