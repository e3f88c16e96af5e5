"""Signified grids: the Cartesian product of two paths plus a set of negative edges.

Grid file format (JSON)::

    {"rows": R, "cols": C, "negative_edges": [[r1, c1, r2, c2], ...]}

``rows`` and ``cols`` are positive integers.  Each negative edge joins two
in-bounds vertices at Manhattan distance 1, written with ``(r1, c1)``
lexicographically smaller than ``(r2, c2)``.  Duplicate edges and unknown
top-level keys are rejected.  Edges that are not listed are positive.
:func:`serialize_grid` writes the edges sorted, so output is canonical.
"""

from __future__ import annotations

import hashlib
import json
import struct
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Tuple, Union

from .signed_paley import MINUS, PLUS, Sign


class GridError(ValueError):
    """Invalid grid, grid edge or grid document."""


class GridVertex(NamedTuple):
    row: int
    col: int


Edge = Tuple[GridVertex, GridVertex]


def _normalize(u, v) -> Edge:
    u, v = GridVertex(*u), GridVertex(*v)
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class SignedGrid:
    rows: int
    cols: int
    negative_edges: frozenset = frozenset()

    @property
    def num_vertices(self) -> int:
        return self.rows * self.cols

    @property
    def num_edges(self) -> int:
        return self.rows * (self.cols - 1) + self.cols * (self.rows - 1)

    def vertices(self) -> Iterator[GridVertex]:
        for r, c in product(range(self.rows), range(self.cols)):
            yield GridVertex(r, c)

    def edges(self) -> Iterator[Edge]:
        """Every grid edge once, normalised, in row-major order of the first endpoint."""
        for r, c in product(range(self.rows), range(self.cols)):
            if c + 1 < self.cols:
                yield GridVertex(r, c), GridVertex(r, c + 1)
            if r + 1 < self.rows:
                yield GridVertex(r, c), GridVertex(r + 1, c)

    def in_bounds(self, v) -> bool:
        return 0 <= v[0] < self.rows and 0 <= v[1] < self.cols

    def is_edge(self, u, v) -> bool:
        return (
            self.in_bounds(u)
            and self.in_bounds(v)
            and abs(u[0] - v[0]) + abs(u[1] - v[1]) == 1
        )

    def sign(self, u, v) -> Sign:
        if not self.is_edge(u, v):
            raise GridError(f"{tuple(u)}-{tuple(v)} is not a grid edge")
        return MINUS if _normalize(u, v) in self.negative_edges else PLUS

    def horizontal_signs(self, r: int) -> list:
        """Signs of the edges ``(r, c)-(r, c+1)`` for ``c = 0..cols-2``."""
        neg = self.negative_edges
        return [
            MINUS if (GridVertex(r, c), GridVertex(r, c + 1)) in neg else PLUS
            for c in range(self.cols - 1)
        ]

    def vertical_signs(self, r: int) -> list:
        """Signs of the edges ``(r-1, c)-(r, c)`` for every column."""
        neg = self.negative_edges
        return [
            MINUS if (GridVertex(r - 1, c), GridVertex(r, c)) in neg else PLUS
            for c in range(self.cols)
        ]


def make_grid(rows: int, cols: int, negative_edges: Iterable = ()) -> SignedGrid:
    """Validate and normalise a signified grid.

    ``negative_edges`` holds pairs of ``(row, col)`` coordinates in either
    order.  Raises :class:`GridError` for non-positive dimensions, edges that
    are not unit grid edges, and duplicates.
    """
    for name, val in (("rows", rows), ("cols", cols)):
        if isinstance(val, bool) or not isinstance(val, int) or val < 1:
            raise GridError(f"{name} must be a positive integer, got {val!r}")
    probe = SignedGrid(rows, cols)
    seen = set()
    for i, (u, v) in enumerate(negative_edges):
        if not probe.is_edge(u, v):
            raise GridError(f"negative edge #{i} {tuple(u)}-{tuple(v)} is not a grid edge of a {rows}x{cols} grid")
        e = _normalize(u, v)
        if e in seen:
            raise GridError(f"negative edge #{i} {tuple(u)}-{tuple(v)} is a duplicate")
        seen.add(e)
    return SignedGrid(rows, cols, frozenset(seen))


def edge_sign(g: SignedGrid, u, v) -> Sign:
    return g.sign(u, v)


def _edge_key(e: Edge) -> bytes:
    (r1, c1), (r2, c2) = e
    return struct.pack("<4Q", r1, c1, r2, c2)


def edge_uniform(seed: int, e: Edge) -> int:
    """64-bit pseudo-random value for edge ``e`` under ``seed``.

    BLAKE2b keyed by the seed over the normalised edge coordinates; the value
    depends only on (seed, edge), never on iteration order or platform.
    """
    key = struct.pack("<Q", seed & 0xFFFFFFFFFFFFFFFF)
    digest = hashlib.blake2b(_edge_key(e), digest_size=8, key=key).digest()
    return int.from_bytes(digest, "little")


def random_signature(rows: int, cols: int, neg_probability: Union[Fraction, float, int, str], seed: int) -> SignedGrid:
    """Sample a signature: each edge is negative independently with ``neg_probability``.

    Edge ``e`` is negative iff ``edge_uniform(seed, e) < p * 2**64``, compared
    exactly as rationals, so ``p = 0`` gives no negative edge and ``p = 1``
    makes every edge negative.
    """
    p = Fraction(neg_probability)
    if not 0 <= p <= 1:
        raise GridError(f"probability must lie in [0, 1], got {neg_probability!r}")
    threshold = p * 2**64
    base = make_grid(rows, cols)
    neg = [e for e in base.edges() if edge_uniform(seed, e) < threshold]
    return SignedGrid(rows, cols, frozenset(neg))


def all_signatures(rows: int, cols: int) -> Iterator[SignedGrid]:
    """Every signature of the rows x cols grid; bit ``i`` of the counter negates edge ``i``."""
    edges = list(make_grid(rows, cols).edges())
    for bits in range(1 << len(edges)):
        yield SignedGrid(rows, cols, frozenset(e for i, e in enumerate(edges) if bits >> i & 1))


def grid_to_dict(g: SignedGrid) -> dict:
    return {
        "rows": g.rows,
        "cols": g.cols,
        "negative_edges": [[u.row, u.col, v.row, v.col] for u, v in sorted(g.negative_edges)],
    }


def serialize_grid(g: SignedGrid) -> str:
    return json.dumps(grid_to_dict(g)) + "\n"


def _int_field(obj, key, where):
    val = obj.get(key)
    if isinstance(val, bool) or not isinstance(val, int):
        raise GridError(f"{where}{key}: expected an integer, got {val!r}")
    return val


def grid_from_dict(doc) -> SignedGrid:
    if not isinstance(doc, dict):
        raise GridError("grid document: top level must be an object")
    unknown = sorted(set(doc) - {"rows", "cols", "negative_edges"})
    if unknown:
        raise GridError(f"grid document: unknown field(s) {', '.join(unknown)}")
    for key in ("rows", "cols", "negative_edges"):
        if key not in doc:
            raise GridError(f"grid document: missing field {key!r}")
    rows = _int_field(doc, "rows", "")
    cols = _int_field(doc, "cols", "")
    if rows < 1 or cols < 1:
        raise GridError(f"grid document: rows and cols must be positive, got {rows}x{cols}")
    raw = doc["negative_edges"]
    if not isinstance(raw, list):
        raise GridError("negative_edges: expected a list")
    probe = SignedGrid(rows, cols)
    seen = set()
    for i, item in enumerate(raw):
        where = f"negative_edges[{i}]"
        if (
            not isinstance(item, list)
            or len(item) != 4
            or any(isinstance(x, bool) or not isinstance(x, int) for x in item)
        ):
            raise GridError(f"{where}: expected a list of 4 integers [r1, c1, r2, c2], got {item!r}")
        u, v = GridVertex(item[0], item[1]), GridVertex(item[2], item[3])
        if not probe.is_edge(u, v):
            raise GridError(f"{where}: {item} is not a grid edge of a {rows}x{cols} grid")
        if not u < v:
            raise GridError(f"{where}: endpoints must be listed lexicographically smaller first")
        if (u, v) in seen:
            raise GridError(f"{where}: duplicate edge {item}")
        seen.add((u, v))
    return SignedGrid(rows, cols, frozenset(seen))


def parse_grid(text: str) -> SignedGrid:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GridError(f"malformed grid document at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return grid_from_dict(doc)
