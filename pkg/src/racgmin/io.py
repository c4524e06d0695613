"""Presentation files.

A presentation file is a JSON object::

    {
      "name": "pentagon",
      "generators": ["1", "2", "3", "4", "5"],
      "commuting_pairs": [["1", "2"], ["1", "5"], ...]
    }

``name`` is optional. A pair listed in ``commuting_pairs`` has order 2; any
other pair of distinct generators has infinite order.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Optional, Union

from .core import CoxeterPresentation, PresentationError


class PresentationFileError(PresentationError):
    def __init__(self, message, source=None, line=None, column=None):
        self.source = source
        self.line = line
        self.column = column
        where = source or "<input>"
        if line is not None:
            where += f":{line}:{column}"
        super().__init__(f"{where}: {message}")


def parse_presentation(text: str, source: Optional[str] = None) -> tuple[CoxeterPresentation, Optional[str]]:
    """Parse file contents; returns the presentation and its optional name."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationFileError(exc.msg, source, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise PresentationFileError("top level must be an object", source)
    unknown = sorted(set(doc) - {"name", "generators", "commuting_pairs"})
    if unknown:
        raise PresentationFileError(f"unknown key(s): {', '.join(unknown)}", source)
    gens = doc.get("generators")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise PresentationFileError('"generators" must be a list of strings', source)
    pairs = doc.get("commuting_pairs", [])
    if not isinstance(pairs, list) or not all(
        isinstance(q, list) and all(isinstance(g, str) for g in q) for q in pairs
    ):
        raise PresentationFileError('"commuting_pairs" must be a list of name pairs', source)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise PresentationFileError('"name" must be a string', source)
    try:
        p = CoxeterPresentation.from_pairs(gens, pairs)
    except PresentationError as exc:
        raise PresentationFileError(str(exc), source) from None
    return p, name


def load_presentation(path: Union[str, Path]) -> tuple[CoxeterPresentation, Optional[str]]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise PresentationFileError(exc.strerror or str(exc), str(path)) from None
    return parse_presentation(text, str(path))


def dump_presentation(p: CoxeterPresentation, name: Optional[str] = None) -> str:
    """Canonical text: fixed key order, pairs sorted by generator order."""
    doc = {}
    if name is not None:
        doc["name"] = name
    doc["generators"] = list(p.generators)
    doc["commuting_pairs"] = [[p.generators[i], p.generators[j]] for i, j in p.edges]
    lines = ["{"]
    items = list(doc.items())
    for k, (key, val) in enumerate(items):
        comma = "," if k < len(items) - 1 else ""
        if key == "commuting_pairs" and val:
            lines.append(f'  "{key}": [')
            for q, pair in enumerate(val):
                lines.append("    " + json.dumps(pair) + ("," if q < len(val) - 1 else ""))
            lines.append("  ]" + comma)
        else:
            lines.append(f'  "{key}": {json.dumps(val)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def digest(p: CoxeterPresentation) -> str:
    return hashlib.sha256(dump_presentation(p).encode()).hexdigest()[:16]
