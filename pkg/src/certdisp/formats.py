"""Plain-text instance and dispersal files.

Instance::

    c optional comment lines (kept, emitted first)
    p <n> <m> <k>
    e <u> <v>        m lines
    r <u> <v>        k lines

Dispersal::

    d <v> <count>
    e <u> <w>        count lines, repeated for every vertex with a non-empty set

Serialisation sorts everything canonically, so serialising a parsed
canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from .dispersal import Dispersal
from .errors import CertDispError, GraphError
from .graph import Edge, Graph, RequestSet, canon


class ParseError(CertDispError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Instance:
    graph: Graph
    requests: RequestSet
    comments: tuple[str, ...] = field(default=(), compare=False)


def _ints(parts: list[str], count: int, lineno: int) -> list[int]:
    if len(parts) != count + 1:
        raise ParseError(lineno, f"expected {count} integers after '{parts[0]}'")
    try:
        return [int(x) for x in parts[1:]]
    except ValueError:
        raise ParseError(lineno, "non-integer field") from None


def parse_instance(text: str) -> Instance:
    header = None
    edges: list[Edge] = []
    requests: list[Edge] = []
    seen_e: set[Edge] = set()
    seen_r: set[Edge] = set()
    comments: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            comments.append(line[1:].strip())
            continue
        if tag == "p":
            if header is not None:
                raise ParseError(lineno, "second header line")
            header = _ints(parts, 3, lineno)
            if min(header) < 0:
                raise ParseError(lineno, "negative count in header")
            continue
        if header is None:
            raise ParseError(lineno, f"'{tag}' record before the 'p' header")
        n = header[0]
        if tag in ("e", "r"):
            u, v = _ints(parts, 2, lineno)
            if u == v:
                kind = "self-loop" if tag == "e" else "self-request"
                raise ParseError(lineno, f"{kind} at vertex {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(lineno, f"vertex {x} out of range [0, {n})")
            pair = canon(u, v)
            seen, bucket, what = (seen_e, edges, "edge") if tag == "e" else (seen_r, requests, "request")
            if pair in seen:
                raise ParseError(lineno, f"duplicate {what} {pair}")
            seen.add(pair)
            bucket.append(pair)
        else:
            raise ParseError(lineno, f"unknown record type '{tag}'")
    if header is None:
        raise ParseError(0, "missing 'p' header")
    n, m, k = header
    if len(edges) != m:
        raise ParseError(0, f"header promises {m} edges, found {len(edges)}")
    if len(requests) != k:
        raise ParseError(0, f"header promises {k} requests, found {len(requests)}")
    try:
        g = Graph.from_edges(n, edges)
        r = RequestSet.from_pairs(requests, n, strict=True)
    except GraphError as exc:
        raise ParseError(0, str(exc)) from None
    return Instance(g, r, tuple(comments))


def serialize_instance(inst: Instance) -> str:
    g, r = inst.graph, inst.requests
    lines = [f"c {c}".rstrip() for c in inst.comments]
    lines.append(f"p {g.n} {g.m} {len(r)}")
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    lines.extend(f"r {u} {v}" for u, v in r)
    return "\n".join(lines) + "\n"


def parse_dispersal(text: str, n: int) -> Dispersal:
    local: dict[int, set[Edge]] = {}
    current = None
    remaining = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "d":
            if remaining:
                raise ParseError(lineno, f"vertex {current} is missing {remaining} edge lines")
            v, count = _ints(parts, 2, lineno)
            if not 0 <= v < n:
                raise ParseError(lineno, f"vertex {v} out of range [0, {n})")
            if v in local:
                raise ParseError(lineno, f"vertex {v} listed twice")
            if count < 0:
                raise ParseError(lineno, "negative edge count")
            local[v] = set()
            current, remaining = v, count
        elif parts[0] == "e":
            if current is None or remaining == 0:
                raise ParseError(lineno, "edge line outside a 'd' block")
            a, b = _ints(parts, 2, lineno)
            if a == b:
                raise ParseError(lineno, f"self-loop at vertex {a}")
            for x in (a, b):
                if not 0 <= x < n:
                    raise ParseError(lineno, f"vertex {x} out of range [0, {n})")
            e = canon(a, b)
            if e in local[current]:
                raise ParseError(lineno, f"duplicate edge {e} in D_{current}")
            local[current].add(e)
            remaining -= 1
        else:
            raise ParseError(lineno, f"unknown record type '{parts[0]}'")
    if remaining:
        raise ParseError(0, f"vertex {current} is missing {remaining} edge lines")
    return Dispersal(n, {v: frozenset(es) for v, es in local.items()})


def serialize_dispersal(d: Dispersal) -> str:
    lines = []
    for v, es in d.local.items():
        lines.append(f"d {v} {len(es)}")
        lines.extend(f"e {a} {b}" for a, b in sorted(es))
    return "".join(line + "\n" for line in lines)


def write_atomic(path: Union[str, Path], text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
