"""Text format for bundle specs.

One record per line; blank lines and lines starting with ``#`` are skipped::

    record    := [label ":"] type "," parabolic "," weights
    type      := family-letter rank             e.g. A2, g2 (case-insensitive)
    parabolic := "I" "=" ( "{" [index {"," index}] "}" | "∅" )
    weights   := "weights" ["="] "[" weight {"," weight} "]"
    weight    := "[" int {"," int} "]" ["x" multiplicity]
    label     := letter {letter | digit | "_" | "-" | "."}

Indices are 1-based. Both ``-`` and the Unicode minus are accepted.
The canonical form written by :func:`serialize` is, for example::

    A2, I={1}, weights [[0,1]x2,[0,3]]
"""

from __future__ import annotations

import re
from typing import Iterator

from .errors import InvalidInputError, SpecParseError
from .flagbundle import HomogeneousBundle, ParabolicSpec
from .rootsys import SimpleType, Weight, positive_roots
from .weights import WeightMultiset

_LABEL_RE = re.compile(r"^\s*([A-Za-z_][\w.\-]*)\s*:")
_INT_LIST = r"-?\d+(?:\s*,\s*-?\d+)*"
_WEIGHT_RE = re.compile(r"\[\s*(" + _INT_LIST + r")\s*\]\s*(?:[xX]\s*(\d+))?\s*")
_PARA_RE = re.compile(r"^I\s*=\s*(?:∅|\{\s*(" + _INT_LIST + r")?\s*\})$")
_WEIGHTS_RE = re.compile(r"^weights\s*=?\s*\[(.*)\]$", re.S)


def _split_top(text: str) -> list[str]:
    """Split on commas that are not nested inside brackets or braces."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "[{":
            depth += 1
        elif ch in "]}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _parse_weights(body: str, rank: int, line) -> WeightMultiset:
    entries = []
    for item in _split_top(body):
        m = _WEIGHT_RE.fullmatch(item)
        if not m:
            raise SpecParseError(f"malformed weight {item!r}", line, "weights")
        coords = tuple(int(x) for x in m.group(1).split(","))
        if len(coords) != rank:
            raise SpecParseError(
                f"weight {item!r} has {len(coords)} coordinates, expected {rank}", line, "weights"
            )
        mult = int(m.group(2)) if m.group(2) else 1
        if mult < 1:
            raise SpecParseError("multiplicity must be at least 1", line, "weights")
        entries.append((Weight(coords), mult))
    return WeightMultiset(tuple(entries))


def parse_record(text: str, line: int | None = None) -> HomogeneousBundle:
    """Parse a single record; errors carry the line number and field name."""
    text = text.replace("−", "-").strip()
    label = None
    m = _LABEL_RE.match(text)
    if m:
        label = m.group(1)
        text = text[m.end():].strip()
    fields = _split_top(text)
    if len(fields) != 3:
        raise SpecParseError(
            f"expected 3 comma-separated fields (type, I=..., weights [...]), got {len(fields)}",
            line,
            "record",
        )
    ftype, fpara, fweights = fields
    try:
        rs = positive_roots(SimpleType.parse(ftype))
    except InvalidInputError as exc:
        raise SpecParseError(str(exc), line, "type") from None

    pm = _PARA_RE.match(fpara)
    if not pm:
        raise SpecParseError(f"malformed parabolic {fpara!r}, expected e.g. I={{1,3}}", line, "parabolic")
    idx = [int(x) for x in pm.group(1).split(",")] if pm.group(1) else []
    if len(set(idx)) != len(idx):
        raise SpecParseError("repeated parabolic index", line, "parabolic")
    try:
        para = ParabolicSpec(rs, frozenset(idx))
    except InvalidInputError as exc:
        raise SpecParseError(str(exc), line, "parabolic") from None

    wm = _WEIGHTS_RE.match(fweights)
    if not wm:
        raise SpecParseError(f"malformed weights {fweights!r}, expected weights [[..],..]", line, "weights")
    ms = _parse_weights(wm.group(1), rs.rank, line)
    return HomogeneousBundle(para, ms, label)


def parse_text(text: str) -> Iterator[HomogeneousBundle]:
    """Parse a multi-record document, yielding bundles in order."""
    for n, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield parse_record(stripped, n)


def parse_file(path) -> list[HomogeneousBundle]:
    with open(path, encoding="utf-8") as fh:
        return list(parse_text(fh.read()))


def format_weights(ms: WeightMultiset) -> str:
    return "[" + ",".join(f"{w}x{m}" if m > 1 else str(w) for w, m in ms.entries) + "]"


def format_parabolic(I) -> str:
    return "{" + ",".join(str(j) for j in sorted(I)) + "}"


def serialize(E: HomogeneousBundle) -> str:
    """Canonical single-line form; ``parse_record(serialize(E)) == E``."""
    body = (
        f"{E.root_system.simple_type}, I={format_parabolic(E.parabolic.I)}, "
        f"weights {format_weights(E.weights)}"
    )
    return f"{E.label}: {body}" if E.label else body


def canonicalize(text: str) -> str:
    return serialize(parse_record(text))
