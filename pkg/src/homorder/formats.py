"""Line-oriented text format for structures.

::

    type 2
    vertices 3
    rel 0: 0 1 ; 1 2

``#`` starts a comment; blank lines are ignored; repeated ``rel`` lines for
one kind are merged and duplicate tuples dropped.
"""

from __future__ import annotations

import os
from pathlib import Path

from .model import Structure, StructureError, validate


class FormatError(ValueError):
    pass


def loads(text: str) -> Structure:
    sig = None
    n = None
    rels: dict[int, list[tuple[int, ...]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        try:
            if sig is None:
                if head != "type":
                    raise FormatError("expected 'type <arities>' first")
                sig = tuple(int(x) for x in rest.split())
            elif n is None:
                if head != "vertices":
                    raise FormatError("expected 'vertices <n>' second")
                n = int(rest)
            elif head == "rel":
                kind_text, colon, body = rest.partition(":")
                if not colon:
                    raise FormatError("expected 'rel <kind>: tuples'")
                kind = int(kind_text)
                if not 0 <= kind < len(sig):
                    raise FormatError(f"kind {kind} not in signature {sig}")
                for chunk in body.split(";"):
                    if chunk.strip():
                        rels.setdefault(kind, []).append(tuple(int(x) for x in chunk.split()))
            else:
                raise FormatError(f"unknown directive {head!r}")
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if sig is None or n is None:
        raise FormatError("missing 'type' or 'vertices' line")
    try:
        return validate(sig, n, [rels.get(i, ()) for i in range(len(sig))])
    except StructureError as exc:
        raise FormatError(str(exc)) from None


def dumps(A: Structure) -> str:
    lines = [f"type {' '.join(map(str, A.sig))}", f"vertices {A.n}"]
    for kind, rel in enumerate(A.relations):
        if rel:
            lines.append(f"rel {kind}: " + " ; ".join(" ".join(map(str, t)) for t in rel))
    return "\n".join(lines) + "\n"


def dumps_inline(A: Structure) -> str:
    """Single-line rendering used inside key/value reports."""
    return " | ".join(dumps(A).splitlines())


def load(path: str | os.PathLike) -> Structure:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(A: Structure, path: str | os.PathLike) -> None:
    Path(path).write_text(dumps(A), encoding="utf-8")
