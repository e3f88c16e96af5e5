"""Signed Paley graphs SP_q.

SP_q is the complete graph on the field of order ``q`` where the edge
``{u, v}`` is positive when ``v - u`` is a square and negative otherwise.
Vertices are the integers ``0..q-1``; for ``q = 9`` they are the canonical
encodings of :mod:`sp9grid.field_gf9`, for prime ``q`` they are residues.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from . import field_gf9 as gf
from .bits import mask_of, members

Vertex = Union[int, gf.Gf9Element, str]


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __neg__(self) -> Sign:
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> Sign:
        if text in ("+", "plus", "Plus", "PLUS"):
            return cls.PLUS
        if text in ("-", "−", "minus", "Minus", "MINUS"):
            return cls.MINUS
        raise ValueError(f"not a sign: {text!r}")


PLUS = Sign.PLUS
MINUS = Sign.MINUS


class SignedPaleyGraph:
    """A complete signed graph on ``q`` vertices, stored as positive-neighbour masks.

    Instances are immutable.  :meth:`flipped` returns a copy with one pair's
    sign reversed, which is how the lemma checks are mutation-tested.
    """

    __slots__ = ("q", "labels", "_plus", "_minus", "_full")

    def __init__(self, q: int, plus_masks: Sequence[int], labels: Optional[Sequence[str]] = None):
        if len(plus_masks) != q:
            raise ValueError(f"expected {q} neighbour masks, got {len(plus_masks)}")
        full = (1 << q) - 1
        for u in range(q):
            if plus_masks[u] >> u & 1:
                raise ValueError(f"vertex {u} has a loop")
            if plus_masks[u] & ~full:
                raise ValueError(f"mask of vertex {u} names vertices outside 0..{q - 1}")
            for v in members(plus_masks[u]):
                if not plus_masks[v] >> u & 1:
                    raise ValueError(f"sign table is not symmetric at ({u}, {v})")
        self.q = q
        self.labels = tuple(labels) if labels is not None else tuple(str(v) for v in range(q))
        self._plus = tuple(plus_masks)
        self._minus = tuple(full & ~m & ~(1 << v) for v, m in enumerate(plus_masks))
        self._full = full

    @property
    def order(self) -> int:
        return self.q

    @property
    def full_mask(self) -> int:
        return self._full

    def vertex(self, v: Vertex) -> int:
        """Normalise a vertex given as an int, a GF(9) element or its name."""
        if isinstance(v, bool):
            raise TypeError("booleans are not vertices")
        if isinstance(v, int):
            if not 0 <= v < self.q:
                raise ValueError(f"vertex {v} out of range 0..{self.q - 1}")
            return v
        if self.q != 9:
            raise TypeError(f"only integer vertices are valid for q={self.q}")
        return gf.encode(gf.coerce(v))

    def label(self, v: int) -> str:
        return self.labels[v]

    def sign(self, u: Vertex, v: Vertex) -> Sign:
        u, v = self.vertex(u), self.vertex(v)
        if u == v:
            raise ValueError("sign of a loop is undefined")
        return PLUS if self._plus[u] >> v & 1 else MINUS

    def edge_sign(self, u: int, v: int) -> Optional[Sign]:
        """Sign of ``{u, v}``, or None when ``u == v`` (no loops in the target)."""
        if u == v:
            return None
        return PLUS if self._plus[u] >> v & 1 else MINUS

    def neighbor_mask(self, v: int, s: Sign) -> int:
        return self._plus[v] if s is PLUS else self._minus[v]

    def set_neighbor_mask(self, mask: int, s: Sign) -> int:
        table = self._plus if s is PLUS else self._minus
        out = 0
        for v in members(mask):
            out |= table[v]
        return out

    def pairs(self):
        """All unordered vertex pairs ``(u, v)`` with ``u < v``."""
        return combinations(range(self.q), 2)

    def flipped(self, u: int, v: int) -> SignedPaleyGraph:
        if u == v:
            raise ValueError("cannot flip a loop")
        plus = list(self._plus)
        plus[u] ^= 1 << v
        plus[v] ^= 1 << u
        return SignedPaleyGraph(self.q, plus, self.labels)

    def __eq__(self, other):
        if not isinstance(other, SignedPaleyGraph):
            return NotImplemented
        return self.q == other.q and self._plus == other._plus

    def __hash__(self):
        return hash((self.q, self._plus))

    def __repr__(self):
        return f"SignedPaleyGraph(q={self.q})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _build_sp9() -> SignedPaleyGraph:
    plus = []
    for u in gf.ELEMENTS:
        m = 0
        for v in gf.ELEMENTS:
            if u != v and gf.is_square(gf.sub(v, u)):
                m |= 1 << gf.encode(v)
        plus.append(m)
    return SignedPaleyGraph(9, plus, gf.NAMES)


def _build_prime(q: int) -> SignedPaleyGraph:
    # Euler's criterion: d is a nonzero square iff d^((q-1)/2) == 1 mod q
    residues = {d for d in range(1, q) if pow(d, (q - 1) // 2, q) == 1}
    plus = [mask_of(v for v in range(q) if v != u and (v - u) % q in residues) for u in range(q)]
    return SignedPaleyGraph(q, plus)


@lru_cache(maxsize=None)
def build_sp(q: int) -> SignedPaleyGraph:
    """Build SP_q for ``q = 9`` or a prime ``q = 1 (mod 4)``.

    Other values are rejected: for ``q = 3 (mod 4)`` the sign relation would be
    asymmetric, and other prime powers are not supported.
    """
    if q == 9:
        return _build_sp9()
    if isinstance(q, int) and _is_prime(q) and q % 4 == 1:
        return _build_prime(q)
    raise ValueError(
        f"q={q} unsupported: need q = 9 or a prime with q = 1 (mod 4); "
        "otherwise the sign relation would be asymmetric or the field is unsupported"
    )


def sp9() -> SignedPaleyGraph:
    return build_sp(9)


def sign_of(g: SignedPaleyGraph, u: Vertex, v: Vertex) -> Sign:
    return g.sign(u, v)


def neighbors(g: SignedPaleyGraph, v: Vertex, s: Sign) -> frozenset:
    return frozenset(members(g.neighbor_mask(g.vertex(v), s)))


def set_neighborhood(g: SignedPaleyGraph, vertices: Iterable[Vertex], s: Sign) -> frozenset:
    m = mask_of(g.vertex(v) for v in vertices)
    if not m:
        raise ValueError("set neighbourhood of an empty set")
    return frozenset(members(g.set_neighbor_mask(m, s)))


def is_triangle_free_mask(g: SignedPaleyGraph, mask: int) -> bool:
    for a, b, c in combinations(list(members(mask)), 3):
        s = g.edge_sign(a, b)
        if g.edge_sign(a, c) is s and g.edge_sign(b, c) is s:
            return False
    return True


def is_triangle_free(g: SignedPaleyGraph, vertices: Iterable[Vertex]) -> bool:
    """True iff no three of ``vertices`` span a triangle with all edges of one sign."""
    vs = [g.vertex(v) for v in vertices]
    if len(set(vs)) != len(vs):
        raise ValueError("vertices must be pairwise distinct")
    return is_triangle_free_mask(g, mask_of(vs))


def triangle_free_triples(g: SignedPaleyGraph) -> list:
    """All 3-subsets of V(g) that are triangle free, in lexicographic order."""
    return [frozenset(t) for t in combinations(range(g.q), 3) if is_triangle_free_mask(g, mask_of(t))]


def monochromatic_triangles(g: SignedPaleyGraph, s: Sign) -> list:
    out = []
    for t in combinations(range(g.q), 3):
        a, b, c = t
        if g.edge_sign(a, b) is s and g.edge_sign(a, c) is s and g.edge_sign(b, c) is s:
            out.append(frozenset(t))
    return out


def to_dot(g: SignedPaleyGraph, positive_only: bool = False, name: Optional[str] = None) -> str:
    """Render as DOT text: positive edges solid, negative edges dashed.

    With ``positive_only`` the result is the (unsigned) Paley graph P_q.
    """
    if name is None:
        name = f"P{g.q}" if positive_only else f"SP{g.q}"
    lines = [f"graph {name} {{"]
    for v in range(g.q):
        lines.append(f'  {v} [label="{g.labels[v]}"];')
    for u, v in g.pairs():
        s = g.edge_sign(u, v)
        if s is PLUS:
            lines.append(f"  {u} -- {v};")
        elif not positive_only:
            lines.append(f"  {u} -- {v} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
