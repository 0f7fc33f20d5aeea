"""Bit-exact serialization of set systems.

Primary format is the "hcsp-1" JSON document:

    {
      "format_version": "hcsp-1",
      "s": 6,
      "name": "optional",
      "sets": [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]
    }

Emission is canonical: keys in the order format_version, s, name, sets;
sets sorted by their sorted element sequence; two-space indentation; one
trailing newline. A plaintext fallback is accepted on input: first line the
ground size, each further non-blank line one block as space-separated
elements.

Unlike the programmatic constructors, parsing rejects duplicate blocks
instead of collapsing them: a file is an authored artifact and a duplicate
is presumed a mistake.
"""

from __future__ import annotations

import json

from .set_system import SetSystem, elements_of, make

FORMAT_VERSION = "hcsp-1"


class ParseError(ValueError):
    """Malformed or invalid system document."""


def _check_sets(s: int, sets) -> list[tuple[int, ...]]:
    if not isinstance(sets, list):
        raise ParseError("'sets' must be a list of element lists")
    seen: dict[frozenset, int] = {}
    out = []
    for idx, blk in enumerate(sets):
        if not isinstance(blk, list) or any(not isinstance(e, int) or isinstance(e, bool) for e in blk):
            raise ParseError(f"set #{idx} is not a list of integers")
        for e in blk:
            if not 1 <= e <= s:
                raise ParseError(f"set #{idx}: element {e} out of range 1..{s}")
        key = frozenset(blk)
        if len(key) < len(blk):
            raise ParseError(f"set #{idx} repeats an element")
        if key in seen:
            raise ParseError(f"set #{idx} duplicates set #{seen[key]}")
        seen[key] = idx
        out.append(tuple(sorted(blk)))
    return out


def _parse_json(text: str) -> tuple[SetSystem, str | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    s = doc.get("s")
    if not isinstance(s, int) or isinstance(s, bool) or s < 1:
        raise ParseError("'s' must be a positive integer")
    if "sets" not in doc:
        raise ParseError("missing 'sets'")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    return make(s, _check_sets(s, doc["sets"])), name


def _parse_plain(text: str) -> tuple[SetSystem, str | None]:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty input")
    try:
        s = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the ground size, got {lines[0]!r}") from None
    if s < 1:
        raise ParseError("'s' must be a positive integer")
    sets = []
    for ln in lines[1:]:
        try:
            sets.append([int(tok) for tok in ln.split()])
        except ValueError:
            raise ParseError(f"bad block line {ln!r}") from None
    return make(s, _check_sets(s, sets)), None


def parse_document(data: bytes | str) -> tuple[SetSystem, str | None]:
    """Parse either format, returning the system and the optional name."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not valid UTF-8: {e}") from None
    else:
        text = data
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_plain(text)


def parse_system(data: bytes | str) -> SetSystem:
    return parse_document(data)[0]


def emit_system(sys: SetSystem, name: str | None = None) -> str:
    """Canonical JSON emission; parse_system(emit_system(x)) == x."""
    doc: dict = {"format_version": FORMAT_VERSION, "s": sys.s}
    if name is not None:
        doc["name"] = name
    doc["sets"] = sorted(list(elements_of(b)) for b in sys.blocks)
    return json.dumps(doc, indent=2) + "\n"
