"""JSON serialization of bitrades.

Format: an object with "rows", "cols", "syms" (lists of label names)
and "star", "delta" (lists of [row, col, sym] name triples).
"""

from __future__ import annotations

import json

from .core import COL, ROW, SYM, BitradeError, Label, Triple, build_bitrade


class ParseError(BitradeError):
    pass


def _labels(doc, key, role):
    names = doc.get(key)
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise ParseError(f'"{key}" must be a list of strings')
    if len(set(names)) != len(names):
        raise ParseError(f'duplicate name in "{key}"')
    return {name: Label(role, i, name) for i, name in enumerate(names)}


def _triples(doc, key, rows, cols, syms):
    raw = doc.get(key)
    if not isinstance(raw, list):
        raise ParseError(f'"{key}" must be a list of [row, col, sym] triples')
    out = []
    for entry in raw:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise ParseError(f'bad entry in "{key}": {entry!r}')
        r, c, s = entry
        for name, table, role in ((r, rows, "rows"), (c, cols, "cols"), (s, syms, "syms")):
            if name not in table:
                raise ParseError(f'unknown {role} label {name!r} in "{key}"')
        out.append(Triple(rows[r], cols[c], syms[s]))
    return out


def loads(text):
    """Parse and validate a bitrade from a JSON string.

    Raises ParseError on malformed input and AxiomViolation / EmptyInput
    on well-formed input that is not a bitrade.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    rows = _labels(doc, "rows", ROW)
    cols = _labels(doc, "cols", COL)
    syms = _labels(doc, "syms", SYM)
    star = _triples(doc, "star", rows, cols, syms)
    delta = _triples(doc, "delta", rows, cols, syms)
    return build_bitrade(star, delta)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(T, indent=2):
    doc = {
        "rows": [lab.name for lab in T.rows],
        "cols": [lab.name for lab in T.cols],
        "syms": [lab.name for lab in T.syms],
        "star": [list(t.names()) for t in T.star],
        "delta": [list(t.names()) for t in T.delta],
    }
    return json.dumps(doc, indent=indent) + "\n"


def dump(T, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(T))
