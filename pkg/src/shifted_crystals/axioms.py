"""Mechanical verification of the local axioms on a crystal graph.

Every axiom, its dual, and the structural lemmas are checked at every
vertex and every valid index pair; each "if and only if" is evaluated in
both directions, and a violation records which side failed together with
a radius-3 neighborhood for replay.  Vertices whose relevant strings match
neither legal shape are skipped by the stats-dependent checks (B1 reports
them), so the checker stays total on arbitrary imported graphs.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass

from .errors import MissingArrow
from .graph import CrystalGraph, StringStats

AXIOM_IDS = (
    "B1",
    "B2",
    "B3",
    "K",
    "A1",
    "A2",
    "A3",
    "A4",
    "A5",
    "A6",
    "A7",
    "A8",
    "A1D",
    "A2D",
    "A3D",
    "A4D",
    "A5D",
    "A6D",
    "A7D",
    "A8D",
    "XL",
    "SA",
)
LEMMA_IDS = ("L_CAS", "L_CF1", "L_TD")
ALL_AXIOMS = AXIOM_IDS + LEMMA_IDS


@dataclass(frozen=True)
class DeltaPair:
    d_eps_i: int
    d_eps_i1: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.d_eps_i, self.d_eps_i1)


@dataclass(frozen=True)
class Violation:
    axiom: str
    vertices: tuple[int, ...]
    index: int
    message: str
    context: str = ""

    def __str__(self) -> str:
        ids = ",".join(map(str, self.vertices))
        return f"[{self.axiom}] i={self.index} at vertices {ids}: {self.message}"


def _context(g: CrystalGraph, ids: tuple[int, ...], radius: int = 3) -> str:
    seen = set(ids)
    frontier = set(ids)
    for _ in range(radius):
        nxt = set()
        for v in frontier:
            for e in g.out_edges.get(v, ()):
                nxt.add(e.dst)
            for e in g.in_edges.get(v, ()):
                nxt.add(e.src)
        frontier = nxt - seen
        seen |= nxt
    lines = []
    for v in sorted(seen):
        vert = g.by_id[v]
        word = "" if vert.word is None else f" {vert.word}"
        lines.append(f"  {v}{word} wt={vert.weight}")
    for e in g.edges:
        if e.src in seen and e.dst in seen:
            lines.append(f"  {e.src} -{e.label}-> {e.dst}")
    if len(lines) > 60:
        lines = lines[:60] + ["  ..."]
    return "\n".join(lines)


class _View:
    """Stats-aware accessors over one graph; None propagates through chains."""

    def __init__(self, g: CrystalGraph):
        self.g = g
        self.n = g.n

    def f(self, v, i):
        return None if v is None else self.g.f(v, i, False)

    def fp(self, v, i):
        return None if v is None else self.g.f(v, i, True)

    def e(self, v, i):
        return None if v is None else self.g.e(v, i, False)

    def ep(self, v, i):
        return None if v is None else self.g.e(v, i, True)

    def stats(self, v: int, i: int) -> StringStats | None:
        shape = self.g.string_of(v, i)
        return None if shape is None else shape.stats_of(v)

    def collapsed(self, v: int, i: int) -> bool | None:
        shape = self.g.string_of(v, i)
        return None if shape is None else shape.kind == "collapsed"

    def delta_at(self, w: int, i: int, x: int, y: int) -> DeltaPair | None:
        """(eps_i(w)-eps_i(y), eps_{i+1}(w)-eps_{i+1}(x)) for an i-side
        target x and an (i+1)-side target y."""
        parts = (self.stats(w, i), self.stats(y, i), self.stats(w, i + 1), self.stats(x, i + 1))
        if any(p is None for p in parts):
            return None
        return DeltaPair(parts[0].eps - parts[1].eps, parts[2].eps - parts[3].eps)

    def delta_dual_at(self, w: int, i: int, x: int, y: int) -> DeltaPair | None:
        """(phi_{i+1}(w)-phi_{i+1}(y), phi_i(w)-phi_i(x)) for an
        e_{i+1}-side source x and an e_i-side source y."""
        parts = (self.stats(w, i + 1), self.stats(y, i + 1), self.stats(w, i), self.stats(x, i))
        if any(p is None for p in parts):
            return None
        return DeltaPair(parts[0].phi - parts[1].phi, parts[2].phi - parts[3].phi)


def delta(g: CrystalGraph, w: int, i: int, x_primed: bool = False, y_primed: bool = False) -> DeltaPair:
    """Delta across the downward arrows toward the i-side target x and the
    (i+1)-side target y; primed flags select f' arrows (as in the
    half-solid-square configuration)."""
    view = _View(g)
    x = g.f(w, i, x_primed)
    y = g.f(w, i + 1, y_primed)
    if x is None or y is None:
        raise MissingArrow(f"vertex {w} lacks an f_{i} or f_{i + 1} arrow")
    d = view.delta_at(w, i, x, y)
    if d is None:
        raise MissingArrow(f"strings at vertex {w} are not classifiable")
    return d


def delta_dual(g: CrystalGraph, w: int, i: int, x_primed: bool = False, y_primed: bool = False) -> DeltaPair:
    """Dual delta across the upward arrows from the e_{i+1}-side source x
    and the e_i-side source y."""
    view = _View(g)
    x = g.e(w, i + 1, x_primed)
    y = g.e(w, i, y_primed)
    if x is None or y is None:
        raise MissingArrow(f"vertex {w} lacks an e_{i} or e_{i + 1} arrow")
    d = view.delta_dual_at(w, i, x, y)
    if d is None:
        raise MissingArrow(f"strings at vertex {w} are not classifiable")
    return d


def _alpha(i: int, n: int) -> tuple[int, ...]:
    root = [0] * n
    root[i - 1] = 1
    root[i] = -1
    return tuple(root)


def _check_B1(view: _View) -> list[Violation]:
    g = view.g
    out = []
    for v, i, primed, side in g.label_degree_violations():
        out.append(
            Violation("B1", (v,), i, f"several {side} edges labeled {i}{_p(primed)}", _context(g, (v,)))
        )
    for i in range(1, view.n):
        seen: set[int] = set()
        for vert in g.vertices:
            if vert.id in seen:
                continue
            comp = g.i_component(vert.id, i)
            seen |= comp
            shape = g.string_of(vert.id, i)
            if shape is None:
                ids = tuple(sorted(comp))
                out.append(
                    Violation("B1", ids, i, "component matches neither string shape", _context(g, ids[:2]))
                )
                continue
            collapsed = shape.kind == "collapsed"
            chain = shape.chains[0]
            for v in comp:
                wt = g.weight(v)
                top_c = collapsed and v == chain[0]
                bot_c = collapsed and v == chain[-1]
                if (wt[i] == 0) != top_c:
                    out.append(
                        Violation(
                            "B1",
                            (v,),
                            i,
                            f"wt_{i + 1}=0 iff top of collapsed string fails (wt={wt})",
                            _context(g, (v,)),
                        )
                    )
                if (wt[i - 1] == 0) != bot_c:
                    out.append(
                        Violation(
                            "B1",
                            (v,),
                            i,
                            f"wt_{i}=0 iff bottom of collapsed string fails (wt={wt})",
                            _context(g, (v,)),
                        )
                    )
    return out


def _p(primed: bool) -> str:
    return "'" if primed else ""


def _check_B2(view: _View) -> list[Violation]:
    g = view.g
    out = []
    for vert in g.vertices:
        w = vert.id
        downs = g.out_edges[w]
        for a in downs:
            for b in downs:
                if b.index - a.index <= 1:
                    continue
                z1 = g.f(a.dst, b.index, b.primed)
                z2 = g.f(b.dst, a.index, a.primed)
                if z1 is None or z1 != z2:
                    out.append(
                        Violation(
                            "B2",
                            (w, a.dst, b.dst),
                            a.index,
                            f"downward {a.label} and {b.label} edges do not close a square",
                            _context(g, (w,)),
                        )
                    )
        ups = g.in_edges[w]
        for a in ups:
            for b in ups:
                if b.index - a.index <= 1:
                    continue
                z1 = g.e(a.src, b.index, b.primed)
                z2 = g.e(b.src, a.index, a.primed)
                if z1 is None or z1 != z2:
                    out.append(
                        Violation(
                            "B2",
                            (w, a.src, b.src),
                            a.index,
                            f"upward {a.label} and {b.label} edges do not close a square",
                            _context(g, (w,)),
                        )
                    )
    return out


def _check_B3(view: _View) -> list[Violation]:
    g = view.g
    out = []
    for e in g.edges:
        for i in (e.index - 1, e.index + 1):
            if not 1 <= i <= view.n - 1:
                continue
            sz = view.stats(e.src, i)
            sw = view.stats(e.dst, i)
            if sz is None or sw is None:
                continue
            change = (sw.eps - sz.eps, sw.phi - sz.phi)
            if change not in ((0, 1), (-1, 0)):
                out.append(
                    Violation(
                        "B3",
                        (e.src, e.dst),
                        i,
                        f"(eps_{i}, phi_{i}) changed by {change} along a {e.label} edge",
                        _context(g, (e.src, e.dst)),
                    )
                )
    return out


def _check_K(view: _View) -> list[Violation]:
    g = view.g
    out = []
    for e in g.edges:
        want = tuple(a - b for a, b in zip(g.weight(e.src), _alpha(e.index, view.n)))
        if g.weight(e.dst) != want:
            out.append(
                Violation(
                    "K",
                    (e.src, e.dst),
                    e.index,
                    f"weight {g.weight(e.dst)} != {g.weight(e.src)} - alpha_{e.index}",
                    _context(g, (e.src, e.dst)),
                )
            )
        su, sv = view.stats(e.src, e.index), view.stats(e.dst, e.index)
        if su is not None and sv is not None:
            if (sv.eps, sv.phi) != (su.eps + 1, su.phi - 1):
                out.append(
                    Violation(
                        "K",
                        (e.src, e.dst),
                        e.index,
                        f"(eps, phi) step along {e.label} edge is "
                        f"({sv.eps - su.eps}, {sv.phi - su.phi}), want (1, -1)",
                        _context(g, (e.src, e.dst)),
                    )
                )
    for vert in g.vertices:
        wt = vert.weight
        for i in range(1, view.n):
            s = view.stats(vert.id, i)
            if s is None:
                continue
            if s.phi - s.eps != wt[i - 1] - wt[i]:
                out.append(
                    Violation(
                        "K",
                        (vert.id,),
                        i,
                        f"phi_{i} - eps_{i} = {s.phi - s.eps} != wt_{i} - wt_{i + 1} = {wt[i - 1] - wt[i]}",
                        _context(g, (vert.id,)),
                    )
                )
    return out


def _iff(axiom: str, view: _View, w: int, i: int, structural: bool, numeric, out: list) -> None:
    """Record a violation when the two sides of an iff disagree.

    ``numeric`` is None when the needed statistics are unavailable (broken
    strings elsewhere); such vertices are skipped, B1 reports the cause.
    """
    if numeric is None:
        return
    if structural != numeric:
        side = "structural holds, numeric fails" if structural else "numeric holds, structural fails"
        out.append(
            Violation(axiom, (w,), i, side, _context(view.g, (w,)))
        )


def _check_A1(view: _View, w: int, i: int, out: list) -> None:
    x, y = view.fp(w, i), view.fp(w, i + 1)
    if x is None or y is None:
        return
    lhs = view.fp(y, i)
    rhs = view.fp(x, i + 1)
    if lhs is None or lhs != rhs:
        out.append(Violation("A1", (w, x, y), i, "primed square does not close", _context(view.g, (w,))))


def _check_A2(view: _View, w: int, i: int, out: list) -> None:
    x, y = view.fp(w, i), view.fp(w, i + 1)
    if x is None or y is None:
        return
    bottom = view.f(y, i)
    structural = bottom is not None and bottom == view.f(x, i + 1) and view.fp(y, i) != bottom
    d = view.delta_at(w, i, x, y)
    s1 = view.stats(w, i + 1)
    numeric = None
    if d is not None and s1 is not None:
        numeric = d.as_tuple() == (0, 0) and s1.phi == 1 and s1.phi_hat == 0
    _iff("A2", view, w, i, structural, numeric, out)


def _check_A3(view: _View, w: int, i: int, out: list) -> None:
    x, y = view.fp(w, i), view.f(w, i + 1)
    if x is None or y is None:
        return
    if view.fp(w, i + 1) == y and view.f(w, i) == x:
        return
    lhs = view.fp(y, i)
    rhs = view.f(x, i + 1)
    if lhs is None or lhs != rhs:
        out.append(
            Violation("A3", (w, x, y), i, "{f_i', f_{i+1}} square does not close", _context(view.g, (w,)))
        )


def _check_A4(view: _View, w: int, i: int, out: list) -> None:
    x, y = view.f(w, i), view.fp(w, i + 1)
    if x is None or y is None:
        return
    lhs = view.f(y, i)
    structural = lhs is not None and lhs == view.fp(x, i + 1)
    s = view.stats(w, i)
    numeric = None if s is None else s.eps_hat > 0
    _iff("A4", view, w, i, structural, numeric, out)


def _solid_pair(view: _View, w: int, i: int):
    """Hypothesis shared by A5-A8: f_i, f_{i+1} defined, f_i' undefined."""
    x, y = view.f(w, i), view.f(w, i + 1)
    if x is None or y is None or view.fp(w, i) is not None:
        return None
    return x, y


def _check_A5(view: _View, w: int, i: int, out: list) -> None:
    pair = _solid_pair(view, w, i)
    if pair is None:
        return
    x, y = pair
    lhs = view.fp(y, i)
    structural = lhs is not None and lhs == view.fp(x, i + 1)
    d = view.delta_at(w, i, x, y)
    numeric = None if d is None else d.as_tuple() == (1, 1)
    _iff("A5", view, w, i, structural, numeric, out)


def _check_A6(view: _View, w: int, i: int, out: list) -> None:
    pair = _solid_pair(view, w, i)
    if pair is None:
        return
    x, y = pair
    lhs = view.f(y, i)
    structural = lhs is not None and lhs == view.f(x, i + 1)
    d = view.delta_at(w, i, x, y)
    numeric = None if d is None else d.as_tuple() in ((1, 0), (0, 1))
    _iff("A6", view, w, i, structural, numeric, out)


def _check_A7(view: _View, w: int, i: int, out: list) -> None:
    pair = _solid_pair(view, w, i)
    if pair is None:
        return
    x, y = pair
    lhs = view.f(view.fp(view.f(y, i), i), i + 1)
    rhs = view.fp(view.f(view.f(x, i + 1), i + 1), i)
    no_square = view.f(y, i) != view.f(x, i + 1)
    structural = lhs is not None and lhs == rhs and no_square
    d = view.delta_at(w, i, x, y)
    sy = view.stats(y, i)
    sw = view.stats(w, i)
    numeric = None
    if d is not None and sy is not None and sw is not None:
        numeric = d.as_tuple() == (0, 0) and sw.eps_hat - sy.eps_hat == -1
    _iff("A7", view, w, i, structural, numeric, out)


def _check_A8(view: _View, w: int, i: int, out: list) -> None:
    pair = _solid_pair(view, w, i)
    if pair is None:
        return
    x, y = pair
    lhs = view.f(view.f(view.f(y, i), i), i + 1)
    rhs = view.f(view.f(view.f(x, i + 1), i + 1), i)
    no_square = view.f(y, i) != view.f(x, i + 1)
    structural = lhs is not None and lhs == rhs and no_square
    d = view.delta_at(w, i, x, y)
    sy = view.stats(y, i)
    numeric = None
    if d is not None and sy is not None:
        numeric = d.as_tuple() == (0, 0) and sy.phi_hat >= 2
    _iff("A8", view, w, i, structural, numeric, out)


def _check_A1D(view: _View, w: int, i: int, out: list) -> None:
    x, y = view.ep(w, i + 1), view.ep(w, i)
    if x is None or y is None:
        return
    lhs = view.ep(y, i + 1)
    rhs = view.ep(x, i)
    if lhs is None or lhs != rhs:
        out.append(Violation("A1D", (w, x, y), i, "dual primed square does not close", _context(view.g, (w,))))


def _check_A2D(view: _View, w: int, i: int, out: list) -> None:
    x, y = view.ep(w, i + 1), view.ep(w, i)
    if x is None or y is None:
        return
    top = view.e(y, i + 1)
    structural = top is not None and top == view.e(x, i) and view.ep(y, i + 1) != top
    d = view.delta_dual_at(w, i, x, y)
    s = view.stats(w, i)
    numeric = None
    if d is not None and s is not None:
        numeric = d.as_tuple() == (0, 0) and s.eps == 1 and s.eps_hat == 0
    _iff("A2D", view, w, i, structural, numeric, out)


def _check_A3D(view: _View, w: int, i: int, out: list) -> None:
    x, y = view.ep(w, i + 1), view.e(w, i)
    if x is None or y is None:
        return
    if view.ep(w, i) == y and view.e(w, i + 1) == x:
        return
    lhs = view.ep(y, i + 1)
    rhs = view.e(x, i)
    if lhs is None or lhs != rhs:
        out.append(
            Violation("A3D", (w, x, y), i, "dual {e_{i+1}', e_i} square does not close", _context(view.g, (w,)))
        )


def _check_A4D(view: _View, w: int, i: int, out: list) -> None:
    x, y = view.e(w, i + 1), view.ep(w, i)
    if x is None or y is None:
        return
    lhs = view.e(y, i + 1)
    structural = lhs is not None and lhs == view.ep(x, i)
    s = view.stats(w, i + 1)
    numeric = None if s is None else s.phi_hat > 0
    _iff("A4D", view, w, i, structural, numeric, out)


def _dual_solid_pair(view: _View, w: int, i: int):
    x, y = view.e(w, i + 1), view.e(w, i)
    if x is None or y is None or view.ep(w, i + 1) is not None:
        return None
    return x, y


def _check_A5D(view: _View, w: int, i: int, out: list) -> None:
    pair = _dual_solid_pair(view, w, i)
    if pair is None:
        return
    x, y = pair
    lhs = view.ep(y, i + 1)
    structural = lhs is not None and lhs == view.ep(x, i)
    d = view.delta_dual_at(w, i, x, y)
    numeric = None if d is None else d.as_tuple() == (1, 1)
    _iff("A5D", view, w, i, structural, numeric, out)


def _check_A6D(view: _View, w: int, i: int, out: list) -> None:
    pair = _dual_solid_pair(view, w, i)
    if pair is None:
        return
    x, y = pair
    lhs = view.e(y, i + 1)
    structural = lhs is not None and lhs == view.e(x, i)
    d = view.delta_dual_at(w, i, x, y)
    numeric = None if d is None else d.as_tuple() in ((1, 0), (0, 1))
    _iff("A6D", view, w, i, structural, numeric, out)


def _check_A7D(view: _View, w: int, i: int, out: list) -> None:
    pair = _dual_solid_pair(view, w, i)
    if pair is None:
        return
    x, y = pair
    lhs = view.e(view.ep(view.e(y, i + 1), i + 1), i)
    rhs = view.ep(view.e(view.e(x, i), i), i + 1)
    no_square = view.e(y, i + 1) != view.e(x, i)
    structural = lhs is not None and lhs == rhs and no_square
    d = view.delta_dual_at(w, i, x, y)
    sy = view.stats(y, i + 1)
    sw = view.stats(w, i + 1)
    numeric = None
    if d is not None and sy is not None and sw is not None:
        numeric = d.as_tuple() == (0, 0) and sw.phi_hat - sy.phi_hat == -1
    _iff("A7D", view, w, i, structural, numeric, out)


def _check_A8D(view: _View, w: int, i: int, out: list) -> None:
    pair = _dual_solid_pair(view, w, i)
    if pair is None:
        return
    x, y = pair
    lhs = view.e(view.e(view.e(y, i + 1), i + 1), i)
    rhs = view.e(view.e(view.e(x, i), i), i + 1)
    no_square = view.e(y, i + 1) != view.e(x, i)
    structural = lhs is not None and lhs == rhs and no_square
    d = view.delta_dual_at(w, i, x, y)
    sy = view.stats(y, i + 1)
    numeric = None
    if d is not None and sy is not None:
        numeric = d.as_tuple() == (0, 0) and sy.eps_hat >= 2
    _iff("A8D", view, w, i, structural, numeric, out)


def _check_XL(view: _View, w: int, i: int, out: list) -> None:
    s_i = view.stats(w, i)
    s_i1 = view.stats(w, i + 1)
    if s_i is None or s_i1 is None:
        return
    if s_i.eps_hat == 0 and s_i.phi_prime == 0 and s_i1.phi_hat == 0 and s_i1.eps_prime == 0:
        g = view.g
        incident = [
            e
            for e in g.out_edges[w] + g.in_edges[w]
            if e.index in (i, i + 1)
        ]
        if incident:
            out.append(
                Violation(
                    "XL",
                    (w,),
                    i,
                    f"excluded lengths hold yet {len(incident)} {i}/{i + 1}-edges touch the vertex",
                    _context(view.g, (w,)),
                )
            )


def _check_SA(view: _View, w: int, i: int, out: list) -> None:
    pair = _solid_pair(view, w, i)
    if pair is None:
        return
    x, y = pair
    d = view.delta_at(w, i, x, y)
    if d is None or d.as_tuple() != (0, 0):
        return
    sw, sy = view.stats(w, i), view.stats(y, i)
    if sw is None or sy is None:
        return
    a7 = sw.eps_hat - sy.eps_hat == -1
    a8 = sy.phi_hat >= 2
    if not (a7 or a8):
        out.append(
            Violation("SA", (w,), i, "neither octagon side-condition applies at Delta=(0,0)", _context(view.g, (w,)))
        )


def _check_L_CAS(view: _View, out: list) -> None:
    g = view.g
    for e in g.edges:
        i = e.index
        if i <= view.n - 2:
            sw, sz = view.stats(e.src, i + 1), view.stats(e.dst, i + 1)
            cw, cz = view.collapsed(e.src, i + 1), view.collapsed(e.dst, i + 1)
            if None not in (sw, sz, cw, cz):
                if sz.phi == sw.phi + 1 and cw != cz:
                    out.append(
                        Violation(
                            "L_CAS",
                            (e.src, e.dst),
                            i + 1,
                            "collapsedness not preserved along an edge incrementing phi",
                            _context(g, (e.src, e.dst)),
                        )
                    )
                if sz.phi == sw.phi and cz:
                    out.append(
                        Violation(
                            "L_CAS",
                            (e.src, e.dst),
                            i + 1,
                            "target string collapsed although phi was copied",
                            _context(g, (e.src, e.dst)),
                        )
                    )
        if i >= 2:
            j = i - 1
            sw, sz = view.stats(e.src, j), view.stats(e.dst, j)
            cw, cz = view.collapsed(e.src, j), view.collapsed(e.dst, j)
            if None in (sw, sz, cw, cz):
                continue
            if cw != (cz and sz.phi == sw.phi):
                out.append(
                    Violation(
                        "L_CAS",
                        (e.src, e.dst),
                        j,
                        "collapsedness/phi not copied along an adjacent-string edge",
                        _context(g, (e.src, e.dst)),
                    )
                )


def _check_L_CF1(view: _View, out: list) -> None:
    g = view.g
    for e in g.edges:
        if not e.primed or e.index > view.n - 2:
            continue
        i = e.index
        sw, sz = view.stats(e.src, i + 1), view.stats(e.dst, i + 1)
        if sw is None or sz is None:
            continue
        if sw.phi == sz.phi and sz.phi_hat != 0:
            out.append(
                Violation(
                    "L_CF1",
                    (e.src, e.dst),
                    i,
                    f"phi_{i + 1} copied along {i}' edge but phi_hat_{i + 1}(target) = {sz.phi_hat}",
                    _context(g, (e.src, e.dst)),
                )
            )


def _check_L_TD(view: _View, out: list) -> None:
    g = view.g
    for vert in g.vertices:
        z = vert.id
        for i in range(1, view.n - 1):
            t, x = view.fp(z, i), view.f(z, i)
            if t is None or x is None or t == x or view.f(z, i + 1) is None:
                continue
            if view.f(t, i) is None or view.f(t, i + 1) is None:
                out.append(
                    Violation("L_TD", (z, t), i, "f_i or f_{i+1} undefined at the primed target", _context(g, (z, t)))
                )
                continue
            dz = view.delta_at(z, i, x, view.f(z, i + 1))
            dt = view.delta_at(t, i, view.f(t, i), view.f(t, i + 1))
            if dz is None or dt is None:
                continue
            if dz != dt:
                out.append(
                    Violation(
                        "L_TD",
                        (z, t),
                        i,
                        f"Delta changes along the primed edge: {dz.as_tuple()} vs {dt.as_tuple()}",
                        _context(g, (z, t)),
                    )
                )


_PAIRWISE = {
    "A1": _check_A1,
    "A2": _check_A2,
    "A3": _check_A3,
    "A4": _check_A4,
    "A5": _check_A5,
    "A6": _check_A6,
    "A7": _check_A7,
    "A8": _check_A8,
    "A1D": _check_A1D,
    "A2D": _check_A2D,
    "A3D": _check_A3D,
    "A4D": _check_A4D,
    "A5D": _check_A5D,
    "A6D": _check_A6D,
    "A7D": _check_A7D,
    "A8D": _check_A8D,
    "XL": _check_XL,
    "SA": _check_SA,
}


def check(g: CrystalGraph, axiom: str) -> list[Violation]:
    """All counterexamples to one axiom; empty list = certified."""
    if axiom not in ALL_AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}; choose from {ALL_AXIOMS}")
    view = _View(g)
    out: list[Violation] = []
    if axiom == "B1":
        return _check_B1(view)
    if axiom == "B2":
        return _check_B2(view)
    if axiom == "B3":
        return _check_B3(view)
    if axiom == "K":
        return _check_K(view)
    if axiom == "L_CAS":
        _check_L_CAS(view, out)
        return out
    if axiom == "L_CF1":
        _check_L_CF1(view, out)
        return out
    if axiom == "L_TD":
        _check_L_TD(view, out)
        return out
    fn = _PAIRWISE[axiom]
    for vert in g.vertices:
        for i in range(1, view.n - 1):
            fn(view, vert.id, i, out)
    return out


@dataclass
class CheckReport:
    axioms: tuple[str, ...]
    violations: dict[str, list[Violation]]
    delta_histogram: Counter
    runtime_seconds: float
    vertex_count: int = 0
    edge_count: int = 0

    @property
    def total_violations(self) -> int:
        return sum(len(v) for v in self.violations.values())

    @property
    def passed(self) -> bool:
        return self.total_violations == 0

    def render(self) -> str:
        lines = [f"checked {self.vertex_count} vertices, {self.edge_count} edges"]
        for axiom in self.axioms:
            count = len(self.violations[axiom])
            status = "pass" if count == 0 else f"FAIL ({count})"
            lines.append(f"  {axiom:6s} {status}")
        hist = " ".join(
            f"{k}:{self.delta_histogram[k]}" for k in sorted(self.delta_histogram)
        )
        lines.append(f"Delta histogram: {hist or '(none)'}")
        lines.append(f"total violations: {self.total_violations}")
        lines.append(f"runtime: {self.runtime_seconds:.3f}s")
        return "\n".join(lines)


def check_all(g: CrystalGraph, axioms: tuple[str, ...] = ALL_AXIOMS) -> CheckReport:
    """Run every requested axiom and aggregate counts, runtime, and the
    Delta histogram over all vertices carrying both f_i and f_{i+1}."""
    start = time.perf_counter()
    violations = {}
    for axiom in axioms:
        violations[axiom] = check(g, axiom)
    view = _View(g)
    hist: Counter = Counter()
    for vert in g.vertices:
        for i in range(1, g.n - 1):
            x, y = view.f(vert.id, i), view.f(vert.id, i + 1)
            if x is None or y is None:
                continue
            d = view.delta_at(vert.id, i, x, y)
            if d is not None:
                hist[d.as_tuple()] += 1
    return CheckReport(
        axioms=tuple(axioms),
        violations=violations,
        delta_histogram=hist,
        runtime_seconds=time.perf_counter() - start,
        vertex_count=len(g),
        edge_count=len(g.edges),
    )


def first_violation(g: CrystalGraph, axioms: tuple[str, ...] = ("K", "B1", "B3") + ALL_AXIOMS) -> Violation | None:
    """Cheapest-first scan used by the mutation harness."""
    seen = set()
    for axiom in axioms:
        if axiom in seen:
            continue
        seen.add(axiom)
        found = check(g, axiom)
        if found:
            return found[0]
    return None
