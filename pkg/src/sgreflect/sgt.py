"""The .sgt multi-table file format.

A document holds one or more semigroup blocks.  Each block is an optional
"# name: <string>" comment, a line with the order n, then n lines of n
whitespace-separated entries.  Blank lines separate blocks; any other
"#"-prefixed line is a plain comment.  A "# provenance: <string>" line is
file-level metadata (corpus caches use it for invalidation).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .core import FiniteSemigroup, validate_table
from .errors import SgreflectError, SgtParseError


@dataclass
class SgtBlock:
    name: Optional[str]
    semigroup: FiniteSemigroup


@dataclass
class SgtDocument:
    blocks: list[SgtBlock]
    provenance: Optional[str] = None


def parse_sgt(text: str) -> SgtDocument:
    lines = text.splitlines()
    blocks: list[SgtBlock] = []
    provenance: Optional[str] = None
    pending_name: Optional[str] = None
    i = 0
    total = len(lines)

    def fail(lineno: int, message: str) -> SgtParseError:
        return SgtParseError(f"line {lineno + 1}: {message}")

    while i < total:
        line = lines[i].strip()
        if not line:
            i += 1
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("provenance:") and provenance is None:
                provenance = body[len("provenance:"):].strip()
            elif body.startswith("name:"):
                pending_name = body[len("name:"):].strip()
            i += 1
            continue
        try:
            order = int(line)
        except ValueError:
            raise fail(i, f"expected an order, got {line!r}")
        if order < 0:
            raise fail(i, "order must be non-negative")
        i += 1
        rows = []
        while len(rows) < order:
            if i >= total:
                raise fail(i - 1, f"expected {order} rows, got {len(rows)}")
            row_line = lines[i].strip()
            if not row_line or row_line.startswith("#"):
                i += 1
                continue
            try:
                row = [int(tok) for tok in row_line.split()]
            except ValueError:
                raise fail(i, f"bad table row {row_line!r}")
            if len(row) != order:
                raise fail(i, f"expected {order} entries, got {len(row)}")
            rows.append(row)
            i += 1
        try:
            semigroup = validate_table(order, rows)
        except SgreflectError as exc:
            raise SgtParseError(f"block {len(blocks) + 1}: {exc}") from exc
        blocks.append(SgtBlock(pending_name, semigroup))
        pending_name = None
    if not blocks and provenance is None:
        raise SgtParseError("no semigroup blocks found")
    return SgtDocument(blocks, provenance)


def format_sgt(
    blocks: Iterable[tuple[Optional[str], FiniteSemigroup]],
    provenance: Optional[str] = None,
) -> str:
    out = []
    if provenance is not None:
        out.append(f"# provenance: {provenance}")
        out.append("")
    for name, semigroup in blocks:
        if name:
            out.append(f"# name: {name}")
        out.append(str(semigroup.order))
        for row in semigroup.table:
            out.append(" ".join(str(v) for v in row))
        out.append("")
    return "\n".join(out[:-1]) + "\n"


def document_pairs(doc: SgtDocument) -> list[tuple[Optional[str], FiniteSemigroup]]:
    return [(b.name, b.semigroup) for b in doc.blocks]


def load_sgt(path: Path | str) -> SgtDocument:
    return parse_sgt(Path(path).read_text())


def save_sgt(
    path: Path | str,
    blocks: Iterable[tuple[Optional[str], FiniteSemigroup]],
    provenance: Optional[str] = None,
) -> None:
    Path(path).write_text(format_sgt(blocks, provenance))
