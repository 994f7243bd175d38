"""Dictionary between admissible curves on the punctured disk and complexes.

A curve over the linear type-A graph on n vertices lives in a disk with n+1
punctures labelled 1..n+1; the gap between punctures p and p+1 is gap p and
corresponds to vertex p. A curve is described by its itinerary:

    "2 O3 W+5 U2 E1"

reads: start hanging from puncture 2, travel right passing over puncture 3,
continue to puncture 5 and wrap around it clockwise (W+ = wrap turning back
to the left... mnemonically "wrap right end"), travel left passing under 2,
and end at puncture 1.  Tokens:

    <p>    bare integer, only first: start at puncture p
    O<p>   pass over puncture p
    U<p>   pass under puncture p
    W+<p>  wrap around puncture p arriving from its left
    W-<p>  wrap around puncture p arriving from its right
    E<p>   end at puncture p (must be last)

Consecutive event punctures differ by +-1 (each step crosses exactly one
gap); the travel direction flips exactly at wraps. The complex of the curve
has one generator per gap traversal; each event contributes a differential
entry determined by the event type and the travel direction, with the
internal gradings forced by homogeneity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .complexes import Complex, GenLabel
from .coxeter import CoxeterGraph

__all__ = [
    "CurveError",
    "parse_curve",
    "curve_to_complex",
    "crossings_with_standard_arc",
]


class CurveError(ValueError):
    """Malformed or inadmissible curve description."""


@dataclass(frozen=True)
class _Event:
    kind: str      # "start" | "over" | "under" | "wrap+" | "wrap-" | "end"
    puncture: int


_TOKEN = re.compile(r"^(O|U|E|W\+|W-)?(\d+)$")


def parse_curve(text: str) -> list[_Event]:
    """Tokenize and validate an itinerary string."""
    words = text.split()
    if not words:
        raise CurveError("empty curve description")
    events: list[_Event] = []
    kinds = {"O": "over", "U": "under", "E": "end", "W+": "wrap+", "W-": "wrap-"}
    for pos, w in enumerate(words):
        # An optional leading S on the start token is tolerated ("S2" == "2").
        word = w[1:] if pos == 0 and w[:1] == "S" else w
        m = _TOKEN.match(word)
        if not m:
            raise CurveError(f"bad curve token {w!r}")
        tag, num = m.group(1), int(m.group(2))
        if pos == 0:
            if tag is not None:
                raise CurveError("curve must open with a bare start puncture")
            events.append(_Event("start", num))
        elif tag is None:
            raise CurveError(f"unexpected bare puncture {w!r} after the start")
        else:
            events.append(_Event(kinds[tag], num))
    if events[-1].kind != "end":
        raise CurveError("curve must finish with an E token")
    for e in events[1:-1]:
        if e.kind in ("start", "end"):
            raise CurveError(f"{e.kind} token in the middle of the curve")
    return events


def _validate_events(g: CoxeterGraph, events: list[_Event]) -> None:
    if not g.is_linear_a:
        raise CurveError("curves are defined over linear type A graphs only")
    n = g.rank
    for e in events:
        if not 1 <= e.puncture <= n + 1:
            raise CurveError(f"puncture {e.puncture} outside 1..{n + 1}")
    for prev, cur in zip(events, events[1:]):
        d = cur.puncture - prev.puncture
        if d == 0:
            if prev.kind.startswith("wrap") and cur.kind.startswith("wrap") \
                    and prev.kind != cur.kind:
                raise CurveError(
                    "opposite wraps at the same puncture cancel; remove both")
            raise CurveError(
                f"consecutive events at the same puncture {cur.puncture}")
        if abs(d) != 1:
            raise CurveError(
                f"events at punctures {prev.puncture} and {cur.puncture} "
                "skip a gap; itineraries record every gap crossing")
    # Direction bookkeeping: +1 travels right, -1 left; flips exactly at wraps.
    direction = events[1].puncture - events[0].puncture
    for prev, cur in zip(events[1:], events[2:]):
        step = cur.puncture - prev.puncture
        if prev.kind.startswith("wrap"):
            if step != -direction:
                raise CurveError(
                    f"direction must flip at the wrap on puncture {prev.puncture}")
            direction = -direction
        elif step != direction:
            raise CurveError(
                f"direction may only flip at wraps, not at puncture {prev.puncture}")
    # Reject unreduced spirals: a wrap whose two flanking segments both cross
    # the puncture line (approach side and departure side both disagree with
    # the wrap's own sides) can be isotoped smaller, and the one-generator-
    # per-traversal translation does not represent the drawn curve.
    segdir = [b.puncture - a.puncture for a, b in zip(events, events[1:])]
    for i in range(1, len(events) - 1):
        ev = events[i]
        if not ev.kind.startswith("wrap"):
            continue
        before = _event_side(events[i - 1], segdir[i - 1], leaving=True)
        enter = _event_side(ev, segdir[i - 1], leaving=False)
        exit_ = _event_side(ev, segdir[i], leaving=True)
        after = _event_side(events[i + 1], segdir[i], leaving=False)
        if before is not None and before != enter \
                and after is not None and exit_ != after:
            raise CurveError(
                f"the wrap at puncture {ev.puncture} is crossed on both "
                "sides; the drawing is not reduced")


def curve_to_complex(g: CoxeterGraph, text: str) -> Complex:
    """Build the complex of an admissible curve, one generator per gap
    traversal.

    Gradings: the first traversal sits at the zero label of its gap vertex;
    every later generator is forced from the previous one by the event type,
    the travel direction, and homogeneity of the connecting entry.
    """
    events = parse_curve(text)
    _validate_events(g, events)

    gens: list[GenLabel] = []
    diff: dict[tuple[int, int], tuple[tuple, Fraction]] = {}

    def od_of(path) -> int:
        if path[0] == "x":
            return 1
        return 0 if g.edge_oriented(path[1], path[2]) else 1

    # Each segment between consecutive events is one traversal of the gap
    # between the two punctures; its vertex is min(p, p') (gap p <-> vertex p).
    first_gap = min(events[0].puncture, events[1].puncture)
    gens.append(GenLabel(first_gap, 0, 0, 0))
    direction = events[1].puncture - events[0].puncture

    for i in range(1, len(events) - 1):
        ev = events[i]
        gap_next = min(ev.puncture, events[i + 1].puncture)
        cur = len(gens) - 1
        lab = gens[cur]
        if ev.kind in ("over", "under"):
            going_right = direction > 0
            if (ev.kind == "over") == going_right:
                # arrow out of the current generator, weight drops
                nxt = GenLabel(gap_next, lab.k + 1, lab.l - 1, 0)
                path = ("a", lab.v, gap_next)
                entry = ((cur + 1, cur), path)
            else:
                nxt = GenLabel(gap_next, lab.k - 1, lab.l + 1, 0)
                path = ("a", gap_next, lab.v)
                entry = ((cur, cur + 1), path)
        elif ev.kind == "wrap+":
            nxt = GenLabel(gap_next, lab.k + 1, lab.l - 2, 0)
            path = ("x", lab.v)
            entry = ((cur + 1, cur), path)
            direction = -direction
        else:  # wrap-
            nxt = GenLabel(gap_next, lab.k - 1, lab.l + 2, 0)
            path = ("x", lab.v)
            entry = ((cur, cur + 1), path)
            direction = -direction
        # Fix the dual grading from homogeneity along the connecting entry.
        od = od_of(path)
        tgt, src = entry[0]
        if src == cur:
            nxt = nxt._replace(m=lab.m - od)
        else:
            nxt = nxt._replace(m=lab.m + od)
        gens.append(nxt)
        diff[entry[0]] = (path, Fraction(1))
    return Complex(g, gens, diff)


def _wrap_sides(direction: int, kind: str) -> tuple[str, str]:
    """(entering side, exiting side) of a wrap, seen from the wrapped
    puncture: travelling right into a W+ passes above, comes back below;
    all other cases follow by the two mirror symmetries."""
    if kind == "wrap+":
        return ("above", "below") if direction > 0 else ("below", "above")
    return ("below", "above") if direction > 0 else ("above", "below")


def crossings_with_standard_arc(g: CoxeterGraph, text: str, arc: int):
    """Count intersections of the curve with the standard arc of gap ``arc``.

    Returns a dict with the transverse crossing count, the number of curve
    endpoints on the arc's punctures, and the total 2*transverse + endpoints
    (which matches the total morphism dimension against the gap's
    projective).
    """
    events = parse_curve(text)
    _validate_events(g, events)
    if arc not in g.generator_vertices():
        raise CurveError(f"no gap {arc} on this graph")

    # Sides of each event, as seen by the arc between punctures arc, arc+1.
    # A traversal of gap `arc` contributes a transverse crossing when the
    # sides at its two ends are defined (pass or wrap, not start/end) and
    # differ.
    direction = events[1].puncture - events[0].puncture
    sides: list[tuple[str | None, str | None]] = []  # per event: side when
    # arriving, side when leaving (None for start/end or undefined)
    dirs: list[int] = []
    d = direction
    for i, ev in enumerate(events):
        if i >= 2 and events[i - 1].kind.startswith("wrap"):
            d = -d
        dirs.append(d)
    # dirs[i] = direction of the segment BEFORE event i (arbitrary for start)
    transverse = 0
    wrap_far = 0
    for i in range(1, len(events) - 1):
        ev = events[i]
        if ev.kind.startswith("wrap"):
            # The wrap's little loop around puncture p pokes into the gap on
            # the far side of the wrap; that costs one crossing with that
            # gap's arc... the far gap of a wrap at p arrived from gap
            # min(p, prev) is the other gap at p.
            prev_gap = min(ev.puncture, events[i - 1].puncture)
            far_gap = ev.puncture if prev_gap == ev.puncture - 1 else ev.puncture - 1
            if far_gap == arc and 1 <= far_gap <= g.rank:
                wrap_far += 1
    # Transverse crossings on the arc's own gap: each traversal of gap `arc`
    # whose endpoint events both have definite sides that differ.
    for i in range(len(events) - 1):
        a, b = events[i], events[i + 1]
        gap = min(a.puncture, b.puncture)
        if gap != arc:
            continue
        seg_dir = b.puncture - a.puncture
        side_a = _event_side(a, seg_dir, leaving=True)
        side_b = _event_side(b, seg_dir, leaving=False)
        if side_a is not None and side_b is not None and side_a != side_b:
            transverse += 1
    endpoints = sum(1 for ev in (events[0], events[-1])
                    if ev.puncture in (arc, arc + 1))
    total_transverse = transverse + wrap_far
    return {
        "transverse": total_transverse,
        "endpoints": endpoints,
        "total": 2 * total_transverse + endpoints,
    }


def _event_side(ev: _Event, seg_dir: int, leaving: bool) -> str | None:
    """Which side of the puncture line the curve is on at this event, for a
    segment travelling seg_dir; None when the event pins the curve to the
    line (start/end)."""
    if ev.kind in ("start", "end"):
        return None
    if ev.kind == "over":
        return "above"
    if ev.kind == "under":
        return "below"
    # Wraps: the side depends on whether the segment in question enters the
    # wrap or leaves it, and on the direction of that segment.  A leaving
    # segment heads seg_dir, so the wrap was entered heading -seg_dir.
    enter_dir = -seg_dir if leaving else seg_dir
    enter, exit_ = _wrap_sides(enter_dir, ev.kind)
    return exit_ if leaving else enter
