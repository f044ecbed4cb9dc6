"""Plain-text ``hrep`` / ``vrep`` files.

::

    hrep            vrep
    m d             nv nr
    h_1 .. h_d b    v x_1 .. x_d
    ...             r y_1 .. y_d
    end             pairs              (optional section)
                    o_1 .. o_d | y_1 .. y_d
                    end

Whitespace separated; ``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateVertexError, ParseError, PolyLRSError
from .model import HRep, VRRep, canonicalize_ray
from .numerics import RATIONAL, TolerancePolicy, format_scalar, parse_scalar


@dataclass
class _Token:
    text: str
    line: int
    column: int


def _lines(text: str) -> list[list[_Token]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = []
        pos = 0
        for part in body.split():
            col = body.index(part, pos)
            pos = col + len(part)
            tokens.append(_Token(part, lineno, col + 1))
        if tokens:
            out.append(tokens)
    return out


def _number(tok: _Token, policy: TolerancePolicy):
    try:
        return parse_scalar(tok.text, policy)
    except ValueError as exc:
        raise ParseError(str(exc), tok.line, tok.column) from None


def _count(tok: _Token, what: str) -> int:
    if not tok.text.isdigit():
        raise ParseError(f"expected a nonnegative integer for {what}, got {tok.text!r}", tok.line, tok.column)
    return int(tok.text)


def _header(lines: list[list[_Token]], keyword: str) -> tuple[int, int]:
    if not lines:
        raise ParseError("empty input", 1, 1)
    first = lines[0]
    if len(first) != 1 or first[0].text != keyword:
        raise ParseError(f"expected keyword {keyword!r}", first[0].line, first[0].column)
    if len(lines) < 2 or len(lines[1]) != 2:
        tok = lines[1][0] if len(lines) > 1 else first[0]
        raise ParseError("expected a line with two counts", tok.line, tok.column)
    a, b = lines[1]
    return _count(a, "the first count"), _count(b, "the second count")


def _body(lines: list[list[_Token]]) -> list[list[_Token]]:
    body = lines[2:]
    ends = [i for i, toks in enumerate(body) if toks[0].text == "end"]
    if not ends:
        tok = lines[-1][-1]
        raise ParseError("missing 'end'", tok.line, tok.column)
    end = ends[0]
    if len(body[end]) != 1:
        tok = body[end][1]
        raise ParseError("unexpected text after 'end'", tok.line, tok.column)
    if end + 1 < len(body):
        tok = body[end + 1][0]
        raise ParseError("unexpected content after 'end'", tok.line, tok.column)
    return body[:end]


def parse_hrep(text: str, policy: TolerancePolicy = RATIONAL) -> HRep:
    lines = _lines(text)
    m, d = _header(lines, "hrep")
    if m < 1 or d < 1:
        tok = lines[1][0]
        raise ParseError("need m >= 1 and d >= 1", tok.line, tok.column)
    body = _body(lines)
    if len(body) != m:
        tok = body[-1][0] if body else lines[1][0]
        raise ParseError(f"expected {m} inequality lines, found {len(body)}", tok.line, tok.column)
    H, b = [], []
    for toks in body:
        if len(toks) != d + 1:
            raise ParseError(f"expected {d + 1} numbers", toks[0].line, toks[0].column)
        values = [_number(t, policy) for t in toks]
        H.append(tuple(values[:d]))
        b.append(values[d])
    return HRep(tuple(H), tuple(b))


def parse_vrep(text: str, policy: TolerancePolicy = RATIONAL) -> VRRep:
    lines = _lines(text)
    nv, nr = _header(lines, "vrep")
    body = _body(lines)
    vertices, rays, pairs = [], [], []
    seen: dict[tuple, int] = {}
    d = None
    in_pairs = False

    def coords(toks: list[_Token]) -> tuple:
        nonlocal d
        if d is None:
            d = len(toks)
            if d == 0:
                raise ParseError("a point needs at least one coordinate", lines[1][0].line, 1)
        if len(toks) != d:
            tok = toks[0] if toks else None
            raise ParseError(f"expected {d} coordinates", tok.line if tok else None, tok.column if tok else None)
        return tuple(_number(t, policy) for t in toks)

    for toks in body:
        head = toks[0]
        if head.text == "pairs" and len(toks) == 1:
            in_pairs = True
            continue
        if in_pairs:
            bars = [i for i, t in enumerate(toks) if t.text == "|"]
            if len(bars) != 1:
                raise ParseError("pair lines need exactly one '|'", head.line, head.column)
            k = bars[0]
            origin = coords(toks[:k])
            direction = coords(toks[k + 1 :])
            pairs.append((origin, direction))
        elif head.text == "v":
            x = coords(toks[1:])
            if x in seen:
                raise DuplicateVertexError(f"line {head.line}: vertex repeats line {seen[x]}")
            seen[x] = head.line
            vertices.append(x)
        elif head.text == "r":
            rays.append(coords(toks[1:]))
        else:
            raise ParseError(f"expected 'v', 'r' or 'pairs', got {head.text!r}", head.line, head.column)
    if len(vertices) != nv or len(rays) != nr:
        tok = lines[1][0]
        raise ParseError(
            f"header announces {nv} vertices and {nr} rays, found {len(vertices)} and {len(rays)}",
            tok.line,
            tok.column,
        )
    if d is None:
        raise ParseError("cannot infer the dimension from an empty representation", lines[1][0].line, 1)
    try:
        return VRRep(tuple(vertices), tuple(rays), tuple(pairs), d)
    except PolyLRSError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _row(values) -> str:
    return " ".join(format_scalar(x) for x in values)


def serialize_hrep(P: HRep) -> str:
    lines = ["hrep", f"{P.m} {P.d}"]
    lines += [_row(tuple(h) + (bi,)) for h, bi in P.rows()]
    lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_vrep(R: VRRep) -> str:
    """Ray directions (also inside pairs) are written in canonical form."""
    lines = ["vrep", f"{len(R.vertices)} {len(R.rays)}"]
    lines += ["v " + _row(v) for v in R.vertices]
    lines += ["r " + _row(canonicalize_ray(r)) for r in R.rays]
    if R.pairs:
        lines.append("pairs")
        lines += [f"{_row(o)} | {_row(canonicalize_ray(r))}" for o, r in R.pairs]
    lines.append("end")
    return "\n".join(lines) + "\n"
