"""Brute-force search for signified homomorphisms of small grids.

This deliberately shares nothing with :mod:`sp9grid.colorist` beyond the grid
model: it is a plain depth-first search, used to cross-check the
constructive colouring on desk-sized instances.

Target file format (JSON)::

    {"order": N, "edges": [[u, v, "+"], [u, v, "-"], ...]}

Vertices are ``0..N-1``; pairs that are not listed are non-edges.  Named
built-in targets are ``paley:Q`` for the signed Paley graphs.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Optional

from .colorist import InvariantError, color_grid, coloring_from_mapping, verify_homomorphism
from .signed_grid import GridVertex, SignedGrid, all_signatures, make_grid
from .signed_paley import MINUS, PLUS, Sign, SignedPaleyGraph, build_sp

DEFAULT_MAX_VERTICES = 25
MAX_SWEEP_EDGES = 16


class OracleError(ValueError):
    """Instance outside the oracle's guards, or a bad target description."""


class SignedTargetGraph:
    """A signed graph with possibly missing pairs; missing pairs accept no edge."""

    def __init__(self, order: int, signs: Dict[tuple, Sign], labels=None):
        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise OracleError(f"target order must be a positive integer, got {order!r}")
        table = {}
        for (u, v), s in signs.items():
            if u == v:
                raise OracleError(f"target has a loop at {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise OracleError(f"target edge ({u}, {v}) out of range 0..{order - 1}")
            key = (min(u, v), max(u, v))
            if key in table and table[key] is not s:
                raise OracleError(f"target pair {key} given both signs")
            table[key] = s
        self.order = order
        self.labels = tuple(labels) if labels is not None else tuple(str(v) for v in range(order))
        self._table = table
        # adjacency lists by sign, ascending, for the search
        self._nbrs = {PLUS: [[] for _ in range(order)], MINUS: [[] for _ in range(order)]}
        for (u, v), s in sorted(table.items()):
            self._nbrs[s][u].append(v)
            self._nbrs[s][v].append(u)

    @classmethod
    def from_paley(cls, g: SignedPaleyGraph) -> SignedTargetGraph:
        return cls(g.q, {(u, v): g.edge_sign(u, v) for u, v in g.pairs()}, g.labels)

    def edge_sign(self, u: int, v: int) -> Optional[Sign]:
        if u == v:
            return None
        return self._table.get((min(u, v), max(u, v)))

    def to_dict(self) -> dict:
        return {"order": self.order, "edges": [[u, v, s.value] for (u, v), s in sorted(self._table.items())]}


def parse_target(text: str) -> SignedTargetGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OracleError(f"malformed target document at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or set(doc) - {"order", "edges"} or "order" not in doc:
        raise OracleError('target document must be an object with "order" and optional "edges"')
    signs = {}
    for i, item in enumerate(doc.get("edges", [])):
        if not (isinstance(item, list) and len(item) == 3 and all(type(x) is int for x in item[:2])):
            raise OracleError(f"edges[{i}]: expected [u, v, sign], got {item!r}")
        try:
            s = Sign.parse(item[2])
        except ValueError as exc:
            raise OracleError(f"edges[{i}]: {exc}") from None
        key = (item[0], item[1])
        if key in signs or key[::-1] in signs:
            raise OracleError(f"edges[{i}]: duplicate pair {key}")
        signs[key] = s
    return SignedTargetGraph(doc["order"], signs)


def load_target(spec: str) -> SignedTargetGraph:
    """Resolve ``paley:Q`` or read a target file."""
    if spec.startswith("paley:"):
        try:
            q = int(spec.split(":", 1)[1])
        except ValueError:
            raise OracleError(f"bad built-in target {spec!r}") from None
        try:
            return SignedTargetGraph.from_paley(build_sp(q))
        except ValueError as exc:
            raise OracleError(str(exc)) from None
    if not os.path.exists(spec):
        raise OracleError(f"unknown target {spec!r}: not a built-in name and no such file")
    with open(spec) as fh:
        return parse_target(fh.read())


def as_target(t) -> SignedTargetGraph:
    if isinstance(t, SignedPaleyGraph):
        return SignedTargetGraph.from_paley(t)
    return t


def find_homomorphism(g: SignedGrid, t, max_vertices: int = DEFAULT_MAX_VERTICES) -> Optional[Dict[GridVertex, int]]:
    """Depth-first search for a sign-preserving map from ``g`` into ``t``.

    Vertices are assigned in row-major order and candidates tried in
    ascending order; each assignment is checked against the already-placed
    left and upper neighbours.  Returns None when no homomorphism exists.
    """
    t = as_target(t)
    if g.num_vertices > max_vertices:
        raise OracleError(
            f"{g.rows}x{g.cols} grid has {g.num_vertices} vertices, above the oracle cap of {max_vertices}; "
            "use color_grid for SP_9 targets"
        )
    order = list(g.vertices())
    # (earlier neighbour, sign) constraints for each vertex
    back = []
    for v in order:
        cons = []
        if v.col > 0:
            u = GridVertex(v.row, v.col - 1)
            cons.append((u, g.sign(u, v)))
        if v.row > 0:
            u = GridVertex(v.row - 1, v.col)
            cons.append((u, g.sign(u, v)))
        back.append(cons)
    assignment: Dict[GridVertex, int] = {}

    def candidates(i):
        cons = back[i]
        if not cons:
            return range(t.order)
        u, s = cons[0]
        return [c for c in t._nbrs[s][assignment[u]]
                if all(t.edge_sign(assignment[w], c) is sw for w, sw in cons[1:])]

    def dfs(i):
        if i == len(order):
            return True
        v = order[i]
        for c in candidates(i):
            assignment[v] = c
            if dfs(i + 1):
                return True
        assignment.pop(v, None)
        return False

    return dict(assignment) if dfs(0) else None


@dataclass
class SweepReport:
    rows: int
    cols: int
    total: int = 0
    colorist_failures: list = field(default_factory=list)
    oracle_failures: list = field(default_factory=list)
    cross_checked: bool = False

    @property
    def failures(self) -> int:
        return len(set(self.colorist_failures) | set(self.oracle_failures))

    @property
    def succeeded(self) -> int:
        return self.total - self.failures

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        return f"{self.succeeded}/{self.total} succeed"


def _check_signature(args):
    index, g, target, cross_check = args
    colorist_ok = True
    try:
        colorist_ok = verify_homomorphism(g, color_grid(g)).ok
    except InvariantError:
        colorist_ok = False
    oracle_ok = True
    if cross_check:
        mapping = find_homomorphism(g, target, max_vertices=g.num_vertices)
        oracle_ok = mapping is not None and verify_homomorphism(g, coloring_from_mapping(g, mapping), target).ok
    return index, colorist_ok, oracle_ok


def exhaustive_signature_sweep(rows: int, cols: int, cross_check: bool = False, target=None,
                               workers: int = 1) -> SweepReport:
    """Colour and verify every signature of a rows x cols grid.

    With ``cross_check`` the oracle must also find a homomorphism into
    ``target`` (SP_9 by default).  ``workers > 1`` spreads signatures over
    processes; the report is identical either way.
    """
    edges = make_grid(rows, cols).num_edges
    if edges > MAX_SWEEP_EDGES:
        raise OracleError(f"{rows}x{cols} grid has {edges} edges; sweeping 2^{edges} signatures is above the cap of 2^{MAX_SWEEP_EDGES}")
    target = as_target(target if target is not None else build_sp(9))
    report = SweepReport(rows, cols, cross_checked=cross_check)
    jobs = ((i, g, target, cross_check) for i, g in enumerate(all_signatures(rows, cols)))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = sorted(pool.map(_check_signature, jobs, chunksize=256))
    else:
        results = map(_check_signature, jobs)
    for index, colorist_ok, oracle_ok in results:
        report.total += 1
        if not colorist_ok:
            report.colorist_failures.append(index)
        if not oracle_ok:
            report.oracle_failures.append(index)
    return report
