"""Reader and writer for the RLE pattern interchange format.

Grammar accepted by :func:`parse_rle`:

* optional ``#``-prefixed comment lines,
* a header ``x = <w>, y = <h>[, rule = <r>]`` (whitespace-tolerant),
* a body of items ``<count?>b`` (dead run), ``<count?>o`` (alive run) and
  ``<count?>$`` (row advance), terminated by ``!``.

An omitted count means 1, newlines inside the body are ignored and text
after ``!`` is discarded.  A missing rule defaults to B3/S23; any other rule
is rejected.  Cells are emitted left to right, top to bottom from (0, 0).

The body may paint cells beyond the declared width: real-world files (and
one Gallery entry) understate ``x``, so that is reported via
``RleDocument.width_overrun`` rather than rejected.  Painting more rows
than the declared height is an error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import LifeError, Pattern

RULE_B3S23 = "B3/S23"

_HEADER_RE = re.compile(
    r"^\s*x\s*=\s*(\d+)\s*,\s*y\s*=\s*(\d+)\s*(?:,\s*rule\s*=\s*([^\s,]+)\s*)?$",
    re.IGNORECASE,
)


class RleParseError(LifeError):
    """The text is not a well-formed B3/S23 RLE document."""


@dataclass(frozen=True)
class RleDocument:
    comments: tuple[str, ...]
    width: int
    height: int
    rule: str
    pattern: Pattern
    width_overrun: bool = False


def parse_rle(text: str) -> RleDocument:
    lines = text.splitlines()
    comments: list[str] = []
    header = None
    body_start = 0
    for i, line in enumerate(lines):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comments.append(line.rstrip("\r\n"))
            continue
        header = _HEADER_RE.match(line)
        if header is None:
            raise RleParseError(f"missing or malformed header line: {line!r}")
        body_start = i + 1
        break
    if header is None:
        raise RleParseError("missing header")
    width, height = int(header.group(1)), int(header.group(2))
    rule = header.group(3) or RULE_B3S23
    if rule.upper() != RULE_B3S23:
        raise RleParseError(f"unsupported rule {rule!r}; only B3/S23 is accepted")

    body = "\n".join(lines[body_start:])
    cells: list[tuple[int, int]] = []
    x = y = 0
    count = 0
    have_count = False
    terminated = False
    for ch in body:
        if ch.isdigit():
            count = count * 10 + int(ch)
            have_count = True
            continue
        if ch in "\r\n \t":
            if have_count:
                raise RleParseError("run count split across whitespace")
            continue
        run = count if have_count else 1
        if have_count and run == 0:
            raise RleParseError("run count of 0")
        count = 0
        have_count = False
        if ch == "b":
            x += run
        elif ch == "o":
            for i in range(run):
                cells.append((x + i, y))
            x += run
        elif ch == "$":
            y += run
            x = 0
        elif ch == "!":
            terminated = True
            break
        else:
            raise RleParseError(f"unexpected character {ch!r} in body")
    if not terminated:
        raise RleParseError("body is missing the '!' terminator")

    width_overrun = False
    if cells:
        rows_used = max(cy for _, cy in cells) + 1
        cols_used = max(cx for cx, _ in cells) + 1
        if rows_used > height:
            raise RleParseError(
                f"body paints {rows_used} rows but header declares y = {height}"
            )
        if cols_used > width:
            width_overrun = True
    return RleDocument(
        comments=tuple(comments),
        width=width,
        height=height,
        rule=RULE_B3S23,
        pattern=Pattern(frozenset(cells)),
        width_overrun=width_overrun,
    )


def write_rle(p: Pattern, wrap: int = 70) -> str:
    """Canonical RLE text for a pattern.

    The pattern is translated so its bounding box starts at (0, 0), runs are
    maximal, counts are only written when greater than 1, trailing dead
    cells in a row are omitted, consecutive empty rows collapse into one
    ``$`` count, and body lines are wrapped at ``wrap`` characters.
    """
    box = p.bounding_box()
    if box is None:
        return f"x = 0, y = 0, rule = {RULE_B3S23}\n!\n"
    x0, y0, x1, y1 = box
    width, height = x1 - x0 + 1, y1 - y0 + 1

    rows: dict[int, list[int]] = {}
    for x, y in p.cells:
        rows.setdefault(y - y0, []).append(x - x0)

    tokens: list[str] = []

    def emit(run: int, symbol: str) -> None:
        if run == 1:
            tokens.append(symbol)
        elif run > 1:
            tokens.append(f"{run}{symbol}")

    pending_newlines = 0
    for ry in range(height):
        xs = rows.get(ry)
        if not xs:
            pending_newlines += 1
            continue
        emit(pending_newlines, "$")
        pending_newlines = 0
        xs.sort()
        cursor = 0
        i = 0
        while i < len(xs):
            j = i
            while j + 1 < len(xs) and xs[j + 1] == xs[j] + 1:
                j += 1
            emit(xs[i] - cursor, "b")
            emit(j - i + 1, "o")
            cursor = xs[j] + 1
            i = j + 1
        pending_newlines = 1
    tokens.append("!")

    lines = []
    current = ""
    for token in tokens:
        if current and len(current) + len(token) > wrap:
            lines.append(current)
            current = ""
        current += token
    if current:
        lines.append(current)
    body = "\n".join(lines)
    return f"x = {width}, y = {height}, rule = {RULE_B3S23}\n{body}\n"
