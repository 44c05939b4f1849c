"""Text formats for tournaments, packings, and truth assignments.

Tournament files:
    tournament <n>
    b <t> <h>        one line per backward arc, head < tail, 0-based
    # comment        ignored anywhere

Packing files hold one member per line, either
    triangle <a> <b> <c>
or
    cycle <v1> <v2> ... <vp>

Assignment files hold one line per variable, ``v<i>=0`` or ``v<i>=1``
with 1-based variable numbers.
"""

from __future__ import annotations

from typing import Sequence

from .core import Cycle, LinearTournament, PackingMember, Triangle, from_backward_arcs


class FormatError(ValueError):
    """Malformed input text; the message carries the line number."""


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def format_tournament(T: LinearTournament) -> str:
    lines = [f"tournament {T.n}"]
    lines.extend(f"b {t} {h}" for t, h in sorted(T.backward))
    return "\n".join(lines) + "\n"


def parse_tournament(text: str) -> LinearTournament:
    n = None
    backward = []
    for lineno, line in _content_lines(text):
        fields = line.split()
        if n is None:
            if fields[0] != "tournament" or len(fields) != 2:
                raise FormatError(f"line {lineno}: expected 'tournament <n>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count {fields[1]!r}")
        elif fields[0] == "b":
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'b <t> <h>'")
            try:
                t, h = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError(f"line {lineno}: bad arc endpoints {line!r}")
            backward.append((t, h))
        else:
            raise FormatError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise FormatError("empty input: missing 'tournament <n>' header")
    try:
        return from_backward_arcs(n, backward)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_packing(packing: Sequence[PackingMember]) -> str:
    lines = []
    for member in packing:
        if isinstance(member, Triangle):
            lines.append(f"triangle {member.a} {member.b} {member.c}")
        else:
            lines.append("cycle " + " ".join(str(v) for v in member.vertices))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_packing(text: str) -> list[PackingMember]:
    out: list[PackingMember] = []
    for lineno, line in _content_lines(text):
        fields = line.split()
        kind, rest = fields[0], fields[1:]
        try:
            values = [int(f) for f in rest]
        except ValueError:
            raise FormatError(f"line {lineno}: bad vertex in {line!r}")
        try:
            if kind == "triangle":
                if len(values) != 3:
                    raise ValueError("triangle takes exactly 3 vertices")
                out.append(Triangle.of(*values))
            elif kind == "cycle":
                out.append(Cycle.of(values))
            else:
                raise ValueError(f"unrecognized member kind {kind!r}")
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    return out


def format_assignment(values: Sequence[bool]) -> str:
    return "\n".join(
        f"v{i}={1 if v else 0}" for i, v in enumerate(values, start=1)
    ) + "\n"


def parse_assignment(text: str) -> dict[int, bool]:
    """Map from 1-based variable number to truth value."""
    out: dict[int, bool] = {}
    for lineno, line in _content_lines(text):
        name, _, value = line.partition("=")
        if not name.startswith("v") or not name[1:].isdigit():
            raise FormatError(f"line {lineno}: expected 'v<i>=0|1', got {line!r}")
        var = int(name[1:])
        if value not in ("0", "1"):
            raise FormatError(f"line {lineno}: value must be 0 or 1 in {line!r}")
        if var in out:
            raise FormatError(f"line {lineno}: duplicate assignment for v{var}")
        out[var] = value == "1"
    return out
