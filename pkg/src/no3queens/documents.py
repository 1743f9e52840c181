"""Placement files and document fragments (JSON).

A placement document is a JSON object:

    {"n": 5, "queens": [[1, 2], [3, 4]], "label": "...", "source": "..."}

``label`` and ``source`` are optional free-text metadata and unknown keys
are ignored.  Parse failures raise DocumentError with a ``kind`` of
"syntax", "schema", "range", or "duplicate" and a message naming the
offending field.
"""

from __future__ import annotations

import json

from .geometry import Line, Placement, in_board


class DocumentError(ValueError):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def parse_placement_document(text: str) -> tuple[Placement, dict]:
    """Parse placement JSON into (Placement, metadata)."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            "syntax",
            f"not valid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}",
        ) from exc
    if not isinstance(raw, dict):
        raise DocumentError("schema", "top level must be a JSON object")
    if "n" not in raw:
        raise DocumentError("schema", "missing field 'n'")
    n = raw["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError("schema", f"field 'n' must be an integer >= 1, got {n!r}")
    queens_raw = raw.get("queens", [])
    if not isinstance(queens_raw, list):
        raise DocumentError("schema", "field 'queens' must be a list of [x, y] pairs")

    squares = []
    seen = set()
    for idx, entry in enumerate(queens_raw):
        if (not isinstance(entry, (list, tuple)) or len(entry) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)):
            raise DocumentError(
                "schema", f"queens[{idx}] must be a pair of integers, got {entry!r}")
        square = (entry[0], entry[1])
        if not in_board(square, n):
            raise DocumentError(
                "range", f"queens[{idx}] = {list(square)} is off the {n}x{n} board")
        if square in seen:
            raise DocumentError(
                "duplicate", f"queens[{idx}] = {list(square)} appears more than once")
        seen.add(square)
        squares.append(square)

    metadata = {}
    for key in ("label", "source"):
        if key in raw and raw[key] is not None:
            if not isinstance(raw[key], str):
                raise DocumentError("schema", f"field '{key}' must be a string")
            metadata[key] = raw[key]
    return Placement(n, frozenset(squares)), metadata


def parse_placement(text: str) -> Placement:
    placement, _ = parse_placement_document(text)
    return placement


def load_placement_file(path: str) -> tuple[Placement, dict]:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_placement_document(handle.read())


def placement_document(placement: Placement, **metadata) -> dict:
    doc = {
        "n": placement.n,
        "queens": [list(sq) for sq in placement.sorted_squares()],
    }
    for key, value in metadata.items():
        if value is not None:
            doc[key] = value
    return doc


def placement_to_text(placement: Placement, **metadata) -> str:
    return json.dumps(placement_document(placement, **metadata), indent=2)


def line_document(line: Line) -> dict:
    return {"slope": line.slope, "offset": line.offset}


def line_from_document(doc: dict) -> Line:
    return Line(doc["slope"], doc["offset"])
