"""Deterministic planar layout of curves on the banded-disk surface model.

The closed genus-g surface minus a disk is a base disk with 2g bands
attached along its boundary circle.  Band A_j carries the j-th standard
alpha curve, band B_j the j-th standard beta curve.  A curve transverse
to the standard systems is a cyclic word of band passes; this module
realizes such words as concrete plane arcs so that intersection counts
become pure functions of the words.

Layout rules.  Everything in this module follows from four conventions:

1. Feet order.  Counterclockwise around the base disk the band feet of
   pair j appear as A_j^-, B_j^-, A_j^+, B_j^+, pairs in index order.
   Each band joins its minus foot to its plus foot over the short arc
   between them (A_j covers the B_j^- foot, B_j covers the A_j^+ foot),
   so the two bands of a pair cross exactly once and bands of distinct
   pairs are disjoint in the plane.

2. Strand order.  Strands through one band are ordered by the key
   (slot, curve index, position in word).  Their endpoints appear
   counterclockwise in ascending key order on the minus foot and in
   descending key order on the plus foot, which is the matching realized
   by disjoint parallel strands of a flat band.

3. Chords.  Inside the disk a curve runs along the straight chord from
   the exit point of one pass to the entry point of the next.  Endpoints
   are placed at distinct points of a strictly convex arc, so no three
   are collinear, two chords meet at most once, and two chords cross
   exactly when their endpoint pairs interleave in the circular order.

4. Signs.  With the counterclockwise orientation of the disk, interleaved
   directed chords u1->v1 and u2->v2 cross with sign +1 when the circular
   order is (u1, u2, v1, v2) and -1 when it is (u1, v2, v1, u2).

Curves on the surface meet only inside the disk; strands inside a band
are parallel.  The apparent crossing of the two bands of a pair is not a
surface intersection, but it is exactly where the induced link diagram
picks up its crossings once the standard curves are erased.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class Chord:
    """Directed disk arc of one curve, from pass `index` to the next pass."""

    curve: int
    index: int
    start: int
    end: int


@dataclass(frozen=True)
class Layout:
    """Concrete endpoint positions and chords for a family of words.

    `points` is the total number of strand endpoints on the boundary
    circle; positions are 0..points-1 in counterclockwise order.  `feet`
    lists, per foot in boundary order, the foot label and its endpoint
    positions, for renderers.  `entry` and `exit` map (curve, pass index)
    to the positions where the pass enters and leaves the disk.
    """

    genus: int
    points: int
    chords: tuple[Chord, ...]
    feet: tuple[tuple[str, tuple[int, ...]], ...]
    entry: dict[tuple[int, int], int]
    exit: dict[tuple[int, int], int]

    def curve_chords(self, curve: int) -> list[Chord]:
        return [c for c in self.chords if c.curve == curve]


def _foot_sequence(genus: int):
    for j in range(1, genus + 1):
        yield ("A", j, -1)
        yield ("B", j, -1)
        yield ("A", j, +1)
        yield ("B", j, +1)


def build_layout(genus: int, words: Sequence[Sequence]) -> Layout:
    """Lay out `words` (sequences of handle passes) on the genus-g model.

    Passes only need attributes `handle` ("A" or "B"), `pair`, `sign`
    and `slot`.  The layout is a pure function of the words: ties in
    `slot` are broken by (curve index, position in word), so any family
    of words has a well defined trace.
    """
    strands: dict[tuple[str, int], list[tuple[tuple[int, int, int], int, int]]] = {}
    for ci, word in enumerate(words):
        for t, p in enumerate(word):
            if p.pair < 1 or p.pair > genus:
                raise ValueError(
                    "pass %s%d out of range for genus %d" % (p.handle, p.pair, genus)
                )
            strands.setdefault((p.handle, p.pair), []).append(((p.slot, ci, t), ci, t))
    for band in strands.values():
        band.sort()

    minus_pt: dict[tuple[int, int], int] = {}
    plus_pt: dict[tuple[int, int], int] = {}
    feet: list[tuple[str, tuple[int, ...]]] = []
    pos = 0
    for handle, j, end in _foot_sequence(genus):
        band = strands.get((handle, j), [])
        ordered = band if end < 0 else list(reversed(band))
        placed = []
        for _key, ci, t in ordered:
            target = minus_pt if end < 0 else plus_pt
            target[(ci, t)] = pos
            placed.append(pos)
            pos += 1
        feet.append(("%s%d%s" % (handle, j, "-" if end < 0 else "+"), tuple(placed)))

    entry: dict[tuple[int, int], int] = {}
    exit_: dict[tuple[int, int], int] = {}
    chords: list[Chord] = []
    for ci, word in enumerate(words):
        n = len(word)
        for t, p in enumerate(word):
            if p.sign > 0:
                entry[(ci, t)] = minus_pt[(ci, t)]
                exit_[(ci, t)] = plus_pt[(ci, t)]
            else:
                entry[(ci, t)] = plus_pt[(ci, t)]
                exit_[(ci, t)] = minus_pt[(ci, t)]
        for t in range(n):
            chords.append(Chord(ci, t, exit_[(ci, t)], entry[(ci, (t + 1) % n)]))

    return Layout(genus, pos, tuple(chords), tuple(feet), entry, exit_)


def _interleaved(n: int, a: int, b: int, c: int, d: int) -> bool:
    """Do chords {a,b} and {c,d} interleave on a circle of n points?"""
    b1 = (b - a) % n
    c1 = (c - a) % n
    d1 = (d - a) % n
    return (0 < c1 < b1) != (0 < d1 < b1)


def _crossing_sign(n: int, u1: int, v1: int, u2: int, v2: int) -> int:
    # Pre: interleaved.  Circular order (u1, u2, v1, v2) means +1.
    if (u2 - u1) % n < (v1 - u1) % n:
        return +1
    return -1


def chord_pairs(layout: Layout, ci: int, cj: int):
    """Yield (chord_i, chord_j, sign) for every crossing between two curves."""
    n = layout.points
    for x in layout.curve_chords(ci):
        for y in layout.curve_chords(cj):
            if _interleaved(n, x.start, x.end, y.start, y.end):
                yield x, y, _crossing_sign(n, x.start, x.end, y.start, y.end)


def crossing_count(layout: Layout, ci: int, cj: int) -> int:
    return sum(1 for _ in chord_pairs(layout, ci, cj))


def crossing_sum(layout: Layout, ci: int, cj: int) -> int:
    return sum(s for _, _, s in chord_pairs(layout, ci, cj))


def self_crossing_count(layout: Layout, ci: int) -> int:
    """Transverse self-intersections of one traced curve (0 when embedded)."""
    n = layout.points
    chords = layout.curve_chords(ci)
    total = 0
    for i in range(len(chords)):
        for k in range(i + 1, len(chords)):
            x, y = chords[i], chords[k]
            if _interleaved(n, x.start, x.end, y.start, y.end):
                total += 1
    return total


# ---------------------------------------------------------------------------
# Exact coordinates.  Band legality checks need actual plane geometry, not
# just circular order.  Endpoint positions are mapped to points (k, k^2) of a
# strictly convex arc; hull order equals position order, so chord crossings
# agree with the interleaving predicate, and every test below is exact
# integer or Fraction arithmetic.

Point = tuple[Fraction, Fraction]


def point_xy(pos: int) -> Point:
    return (Fraction(pos), Fraction(pos * pos))


def chord_midpoint(layout: Layout, chord: Chord) -> Point:
    ax, ay = point_xy(chord.start)
    bx, by = point_xy(chord.end)
    return ((ax + bx) / 2, (ay + by) / 2)


def _orient(p: Point, q: Point, r: Point) -> int:
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    # Pre: p, q, r collinear.  Is r on the closed segment pq?
    return (
        min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
        and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    )


def segments_meet(p1: Point, q1: Point, p2: Point, q2: Point) -> bool:
    """Closed-segment intersection test, exact."""
    o1 = _orient(p1, q1, p2)
    o2 = _orient(p1, q1, q2)
    o3 = _orient(p2, q2, p1)
    o4 = _orient(p2, q2, q1)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(p1, q1, p2):
        return True
    if o2 == 0 and _on_segment(p1, q1, q2):
        return True
    if o3 == 0 and _on_segment(p2, q2, p1):
        return True
    if o4 == 0 and _on_segment(p2, q2, q1):
        return True
    return False


def off_chord_line(point: Point, chord: Chord) -> bool:
    """True when `point` is strictly off the line spanned by the chord."""
    return _orient(point_xy(chord.start), point_xy(chord.end), point) != 0


def segment_meets_chord(a: Point, b: Point, chord: Chord) -> bool:
    return segments_meet(a, b, point_xy(chord.start), point_xy(chord.end))
