"""Exhaustive verification of the structural facts about SP_9 the colorist relies on.

Each ``check_*`` function walks its whole case space and returns a
:class:`LemmaReport`.  All checks take the target graph as an argument so
that they can be run against mutated copies of SP_9.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from itertools import combinations, permutations, product
from typing import Callable, List, Optional, Sequence

from . import field_gf9 as gf
from .bits import mask_of, members
from .signed_paley import MINUS, PLUS, SignedPaleyGraph, is_triangle_free_mask, sp9

log = logging.getLogger(__name__)

SIGNS = (PLUS, MINUS)

# N+(S) for S = {0, 1, t}: the one vertex it misses, for each listed t.
LEMMA5_CASES = {
    "x": "2x+2",
    "x+1": "2x+2",
    "x+2": "x+2",
    "2x": "x+2",
    "2x+1": "x+2",
    "2x+2": "2x+2",
}

# Multiplying by a non-square reverses every sign.
LEMMA1_MULTIPLIER = gf.parse("x+1")


@dataclass
class LemmaReport:
    lemma: str
    cases_checked: int
    first_counterexample: Optional[str] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.first_counterexample is None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = self.passed
        return d

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.lemma}: {self.cases_checked} cases"
        if self.detail:
            line += f" ({self.detail})"
        if not self.passed:
            line += f"; counterexample: {self.first_counterexample}"
        return line


class _Tracker:
    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.failure = None

    def case(self, ok: bool, witness: Callable[[], str]):
        self.cases += 1
        if not ok:
            msg = witness()
            log.debug("%s failure: %s", self.name, msg)
            if self.failure is None:
                self.failure = msg

    def report(self, detail="") -> LemmaReport:
        return LemmaReport(self.name, self.cases, self.failure, detail)


def _require_sp9_shape(g):
    if g.q != 9:
        raise ValueError(f"structure checks are defined for q = 9 only, got q = {g.q}")


def _name(g, v):
    return g.label(v)


def _setname(g, vs):
    return "{" + ", ".join(g.label(v) for v in sorted(vs)) + "}"


def _field_map(fn: Callable[[gf.Gf9Element], gf.Gf9Element]) -> List[int]:
    return [gf.encode(fn(e)) for e in gf.ELEMENTS]


def _sign_map_check(t: _Tracker, g: SignedPaleyGraph, f: Sequence[int], reverse: bool, tag: str):
    if sorted(f) != list(range(g.q)):
        # a non-bijection fails every pair outright
        for u, v in g.pairs():
            t.case(False, lambda: f"{tag} is not a bijection")
        return
    for u, v in g.pairs():
        s = g.edge_sign(u, v)
        want = -s if reverse else s
        got = g.edge_sign(f[u], f[v])
        t.case(
            got is want,
            lambda: f"{tag}: pair ({_name(g, u)}, {_name(g, v)}) sign {s} maps to "
            f"({_name(g, f[u])}, {_name(g, f[v])}) sign {got}, expected {want}",
        )


def check_lemma1(g: Optional[SignedPaleyGraph] = None, witness: Optional[Sequence[int]] = None) -> LemmaReport:
    """Reversing all signs gives an isomorphic graph: checked on an explicit witness map.

    The default witness is ``v -> (x+1) * v``; ``witness`` may override it with
    a list sending vertex ``i`` to ``witness[i]``.
    """
    g = g or sp9()
    _require_sp9_shape(g)
    if witness is None:
        witness = _field_map(lambda e: gf.mul(LEMMA1_MULTIPLIER, e))
        tag = f"v -> ({LEMMA1_MULTIPLIER})v"
    else:
        witness = list(witness)
        tag = "candidate map"
    t = _Tracker("lemma1")
    _sign_map_check(t, g, witness, reverse=True, tag=tag)
    return t.report(f"witness {tag}")


def find_sign_reversing_maps(g: Optional[SignedPaleyGraph] = None, limit: Optional[int] = None) -> List[tuple]:
    """Scan all ``q!`` vertex permutations for ones that reverse every sign."""
    g = g or sp9()
    pairs = list(g.pairs())
    signs = [g.edge_sign(u, v) for u, v in pairs]
    found = []
    for perm in permutations(range(g.q)):
        for (u, v), s in zip(pairs, signs):
            if g.edge_sign(perm[u], perm[v]) is s:
                break
        else:
            found.append(perm)
            if limit is not None and len(found) >= limit:
                break
    return found


def check_lemma1_exhaustive(g: Optional[SignedPaleyGraph] = None) -> LemmaReport:
    """Slow variant of lemma 1: searches every permutation of the nine vertices."""
    g = g or sp9()
    _require_sp9_shape(g)
    found = find_sign_reversing_maps(g)
    cases = 1
    for k in range(2, g.q + 1):
        cases *= k
    witness = None if found else "no permutation reverses every sign"
    return LemmaReport("lemma1-exhaustive", cases, witness, f"{len(found)} sign-reversing permutations")


def check_lemma2(g: Optional[SignedPaleyGraph] = None) -> LemmaReport:
    """Every map ``v -> a*v + b`` with ``a`` a nonzero square preserves all signs."""
    g = g or sp9()
    _require_sp9_shape(g)
    t = _Tracker("lemma2")
    units = [a for a in gf.ELEMENTS if a != gf.ZERO and gf.is_square(a)]
    for a, b in product(units, gf.ELEMENTS):
        f = _field_map(lambda e: gf.add(gf.mul(a, e), b))
        _sign_map_check(t, g, f, reverse=False, tag=f"v -> ({a})v + ({b})")
    return t.report(f"{len(units)} nonzero squares x 9 translations")


def check_lemma3(g: Optional[SignedPaleyGraph] = None) -> LemmaReport:
    """Every vertex has four neighbours of each sign."""
    g = g or sp9()
    _require_sp9_shape(g)
    t = _Tracker("lemma3")
    for v in range(g.q):
        p = g.neighbor_mask(v, PLUS).bit_count()
        m = g.neighbor_mask(v, MINUS).bit_count()
        t.case(p == 4 and m == 4, lambda: f"vertex {_name(g, v)} has |N+|={p}, |N-|={m}")
    return t.report()


def _lemma4_structure(g) -> Optional[str]:
    # inside N+(0) = {1, 2, x, 2x}: positive matching {1,2},{x,2x}; negative 4-cycle (1, 2x, 2, x)
    enc = lambda s: gf.encode(gf.parse(s))
    n0 = frozenset(members(g.neighbor_mask(0, PLUS)))
    want = frozenset(enc(s) for s in ("1", "2", "x", "2x"))
    if n0 != want:
        return f"N+(0) = {_setname(g, n0)}, expected {{1, 2, x, 2x}}"
    plus_edges = {frozenset(p) for p in combinations(sorted(n0), 2) if g.edge_sign(*p) is PLUS}
    matching = {frozenset((enc("1"), enc("2"))), frozenset((enc("x"), enc("2x")))}
    if plus_edges != matching:
        return "positive edges inside N+(0) are not the matching {1,2}, {x,2x}"
    cycle = [enc(s) for s in ("1", "2x", "2", "x")]
    cycle_edges = {frozenset((cycle[i], cycle[(i + 1) % 4])) for i in range(4)}
    minus_edges = {frozenset(p) for p in combinations(sorted(n0), 2) if g.edge_sign(*p) is MINUS}
    if minus_edges != cycle_edges:
        return "negative edges inside N+(0) are not the 4-cycle (1, 2x, 2, x)"
    return None


def check_lemma4(g: Optional[SignedPaleyGraph] = None) -> LemmaReport:
    """Every signed neighbourhood N+(v), N-(v) is triangle free."""
    g = g or sp9()
    _require_sp9_shape(g)
    t = _Tracker("lemma4")
    for v, s in product(range(g.q), SIGNS):
        m = g.neighbor_mask(v, s)
        t.case(
            is_triangle_free_mask(g, m),
            lambda: f"N{s}({_name(g, v)}) = {_setname(g, members(m))} contains a single-sign triangle",
        )
    problem = _lemma4_structure(g)
    if problem is not None and t.failure is None:
        t.failure = problem
    return t.report("N+(0) structure: positive matching + negative 4-cycle")


def triangle_free_masks(g: SignedPaleyGraph) -> List[int]:
    return [m for m in (mask_of(c) for c in combinations(range(g.q), 3)) if is_triangle_free_mask(g, m)]


def check_lemma5(g: Optional[SignedPaleyGraph] = None) -> LemmaReport:
    """A triangle-free triple reaches 8 vertices with each sign; also the six worked cases."""
    g = g or sp9()
    _require_sp9_shape(g)
    t = _Tracker("lemma5")
    tri_free = triangle_free_masks(g)
    for m, s in product(tri_free, SIGNS):
        size = g.set_neighbor_mask(m, s).bit_count()
        t.case(size == 8, lambda: f"|N{s}({_setname(g, members(m))})| = {size}")
    enc = lambda s: gf.encode(gf.parse(s))
    if is_triangle_free_mask(g, mask_of((0, 1, 2))) and t.failure is None:
        t.failure = "{0, 1, 2} is triangle free"
    for third, missing in LEMMA5_CASES.items():
        m = mask_of((0, 1, enc(third)))
        got = g.full_mask & ~g.set_neighbor_mask(m, PLUS)
        if got != 1 << enc(missing) and t.failure is None:
            t.failure = f"N+({{0, 1, {third}}}) misses {_setname(g, members(got))}, expected {{{missing}}}"
    return t.report(f"{len(tri_free)} triangle-free triples x 2 signs")


def check_lemma6(g: Optional[SignedPaleyGraph] = None) -> LemmaReport:
    """For every sign pair, triangle-free ``S1`` and colour ``b``, enough triangle-free choices remain.

    Checked as: ``N^s1(S1) ∩ N^s2(b)`` has at least 3 members and all of its
    3-subsets are triangle free.
    """
    g = g or sp9()
    _require_sp9_shape(g)
    t = _Tracker("lemma6")
    tri_free = triangle_free_masks(g)
    for s1, s2 in product(SIGNS, SIGNS):
        for m in tri_free:
            reach = g.set_neighbor_mask(m, s1)
            for b in range(g.q):
                inter = reach & g.neighbor_mask(b, s2)
                ok = inter.bit_count() >= 3 and all(
                    is_triangle_free_mask(g, mask_of(c)) for c in combinations(members(inter), 3)
                )
                t.case(
                    ok,
                    lambda: f"signs ({s1}, {s2}), S1 = {_setname(g, members(m))}, b = {_name(g, b)}: "
                    f"intersection {_setname(g, members(inter))}",
                )
    return t.report("4 sign pairs x triangle-free triples x 9 colours")


def check_all(g: Optional[SignedPaleyGraph] = None, slow_lemma1: bool = False) -> List[LemmaReport]:
    g = g or sp9()
    reports = [check_lemma1(g)]
    if slow_lemma1:
        reports.append(check_lemma1_exhaustive(g))
    reports += [check_lemma2(g), check_lemma3(g), check_lemma4(g), check_lemma5(g), check_lemma6(g)]
    return reports


def all_passed(reports: Sequence[LemmaReport]) -> bool:
    return all(r.passed for r in reports)
