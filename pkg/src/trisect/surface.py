"""Curves and cut systems on a genus-g surface with standard handle pairs.

A curve is a cyclic word of handle passes on the banded-disk model (see
`trace`).  An A_j-pass runs through the j-th alpha handle, along the j-th
standard alpha curve; each strand of a curve through the B_j band crosses
the standard alpha_j curve exactly once, and symmetrically.  Intersection
numbers, parallelism, validation and handle slides are all computed from
the deterministic planar trace, so every operation is a pure function of
the words and their slot data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace as _dc_replace
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import trace
from .errors import MalformedCurveError, SlideRejectedError

_TOKEN_RE = re.compile(r"^([AB])([0-9]+)([+-])(?:@([0-9]+))?$")


@dataclass(frozen=True)
class HandlePass:
    """One traversal of a band: handle kind, pair index, direction, slot.

    `sign` +1 runs from the minus foot to the plus foot (the direction of
    the standard curve carried by the band); -1 is the reverse.  `slot`
    orders parallel strands inside the band; ties are broken by curve and
    word position, so equal slots are legal but carry no extra meaning.
    """

    handle: str
    pair: int
    sign: int
    slot: int = 0

    def __post_init__(self):
        if self.handle not in ("A", "B"):
            raise MalformedCurveError("handle must be 'A' or 'B', got %r" % (self.handle,))
        if self.pair < 1:
            raise MalformedCurveError("pair index must be positive, got %d" % self.pair)
        if self.sign not in (1, -1):
            raise MalformedCurveError("sign must be +1 or -1, got %r" % (self.sign,))
        if self.slot < 0:
            raise MalformedCurveError("slot must be non-negative, got %d" % self.slot)

    def inverse(self) -> "HandlePass":
        return _dc_replace(self, sign=-self.sign)

    def token(self, show_slot: bool = True) -> str:
        base = "%s%d%s" % (self.handle, self.pair, "+" if self.sign > 0 else "-")
        if show_slot and self.slot:
            return "%s@%d" % (base, self.slot)
        return base

    @classmethod
    def from_token(cls, text: str) -> "HandlePass":
        m = _TOKEN_RE.match(text)
        if not m:
            raise MalformedCurveError("bad pass token %r" % (text,))
        handle, pair, sign, slot = m.groups()
        return cls(handle, int(pair), +1 if sign == "+" else -1, int(slot or 0))


def _stripped(passes: Iterable[HandlePass]) -> tuple[tuple[str, int, int], ...]:
    return tuple((p.handle, p.pair, p.sign) for p in passes)


def _cyclic_reduce(word: tuple) -> tuple:
    """Cyclically cancel adjacent inverse passes of triples (handle, pair, sign)."""
    items = list(word)
    changed = True
    while changed and items:
        changed = False
        i = 0
        while i < len(items) - 1:
            (h1, p1, s1), (h2, p2, s2) = items[i], items[i + 1]
            if h1 == h2 and p1 == p2 and s1 == -s2:
                del items[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
        if len(items) >= 2:
            (h1, p1, s1), (h2, p2, s2) = items[-1], items[0]
            if h1 == h2 and p1 == p2 and s1 == -s2:
                items = items[1:-1]
                changed = True
    return tuple(items)


@dataclass(frozen=True)
class Curve:
    """Non-empty cyclic word of handle passes."""

    passes: tuple[HandlePass, ...]

    def __post_init__(self):
        if not self.passes:
            raise MalformedCurveError("a curve needs at least one pass")

    @classmethod
    def from_tokens(cls, text: str) -> "Curve":
        return cls(tuple(HandlePass.from_token(t) for t in text.split()))

    def tokens(self, show_slots: bool = True) -> str:
        return " ".join(p.token(show_slots) for p in self.passes)

    def __len__(self) -> int:
        return len(self.passes)

    def __iter__(self) -> Iterator[HandlePass]:
        return iter(self.passes)

    def reversed_(self) -> "Curve":
        """The same curve with the opposite orientation."""
        return Curve(tuple(p.inverse() for p in reversed(self.passes)))

    def support(self) -> set[int]:
        return {p.pair for p in self.passes}

    def max_pair(self) -> int:
        return max(p.pair for p in self.passes)

    def reduced_word(self) -> tuple[tuple[str, int, int], ...]:
        return _cyclic_reduce(_stripped(self.passes))

    def normal_form(self) -> tuple[tuple[str, int, int], ...]:
        """Canonical representative of the word up to rotation, slot
        relabeling and orientation reversal.  Equal normal forms mean
        isotopic curves (parallel as unoriented curves)."""
        word = self.reduced_word()
        if not word:
            return ()
        flipped = tuple((h, p, -s) for (h, p, s) in reversed(word))
        best = None
        for w in (word, flipped):
            for r in range(len(w)):
                cand = w[r:] + w[:r]
                if best is None or cand < best:
                    best = cand
        return best

    def is_reduced(self) -> bool:
        return _stripped(self.passes) == _cyclic_reduce(_stripped(self.passes))


def homology_vector(curve: Curve, genus: int) -> tuple[int, ...]:
    """Class of the curve in the standard basis, as (a_1, b_1, ..., a_g, b_g)."""
    vec = [0] * (2 * genus)
    for p in curve:
        if p.pair > genus:
            raise MalformedCurveError(
                "pass %s exceeds genus %d" % (p.token(), genus)
            )
        idx = 2 * (p.pair - 1) + (0 if p.handle == "A" else 1)
        vec[idx] += p.sign
    return tuple(vec)


def symplectic_pairing(v: Sequence[int], w: Sequence[int]) -> int:
    """Intersection pairing of homology classes: sum of a_j b'_j - b_j a'_j.

    Kept separate from `algebraic_intersection` on purpose: the two are
    computed along independent routes (homology coefficients here, the
    signed planar trace there) and tests hold them equal.
    """
    if len(v) != len(w) or len(v) % 2:
        raise ValueError("vectors must share an even length")
    total = 0
    for j in range(0, len(v), 2):
        total += v[j] * w[j + 1] - v[j + 1] * w[j]
    return total


def _pair_layout(c1: Curve, c2: Curve) -> trace.Layout:
    genus = max(c1.max_pair(), c2.max_pair())
    return trace.build_layout(genus, [c1.passes, c2.passes])


def algebraic_intersection(c1: Curve, c2: Curve) -> int:
    """Signed count of crossings of the traced representatives."""
    return trace.crossing_sum(_pair_layout(c1, c2), 0, 1)


def geometric_intersection(c1: Curve, c2: Curve) -> int:
    """Unsigned count of crossings of the traced representatives.

    This counts the given representatives, it does not minimize over
    isotopy.  Slot data matters: parallel copies at distinct slots give 0.
    """
    return trace.crossing_count(_pair_layout(c1, c2), 0, 1)


def self_intersection_count(curve: Curve) -> int:
    layout = trace.build_layout(curve.max_pair(), [curve.passes])
    return trace.self_crossing_count(layout, 0)


def is_embedded(curve: Curve) -> bool:
    return self_intersection_count(curve) == 0


def is_parallel(c1: Curve, c2: Curve) -> bool:
    """Isotopic as unoriented curves: equal reduced normal forms."""
    return c1.normal_form() == c2.normal_form()


def is_dual(c1: Curve, c2: Curve) -> bool:
    """Exactly one transverse crossing between the representatives."""
    return geometric_intersection(c1, c2) == 1


def parallel_copy(curve: Curve, reverse: bool = False) -> tuple[Curve, Curve]:
    """Relay a curve together with a push-off copy at adjacent slots.

    Returns (original, copy) re-slotted so that inside every band each
    copy strand sits immediately beside the strand it shadows, on the
    left of the original's direction.  The side must follow the strand:
    left means one rank above for a positive pass and one below for a
    negative pass, because the plus foot lists strands in reversed
    circular order.  Laid out this way the two traces are disjoint for
    every word, not only for words visiting each band once.  With
    `reverse` the copy carries the opposite orientation.
    """
    n = len(curve.passes)
    rank: dict[int, int] = {}
    per_band: dict[tuple[str, int], list[tuple[tuple[int, int], int]]] = {}
    for t, p in enumerate(curve):
        per_band.setdefault((p.handle, p.pair), []).append(((p.slot, t), t))
    for strands in per_band.values():
        strands.sort()
        for r, (_key, t) in enumerate(strands):
            rank[t] = 2 * r
    if reverse:
        copy_passes = tuple(p.inverse() for p in reversed(curve.passes))
        copy_sources = tuple(reversed(range(n)))
    else:
        copy_passes = curve.passes
        copy_sources = tuple(range(n))
    keyed = [
        [(p, (rank[t], 0)) for t, p in enumerate(curve)],
        [
            (p, (rank[src] + curve.passes[src].sign, 0))
            for p, src in zip(copy_passes, copy_sources)
        ],
    ]
    laid = _renumber_slots(curve.max_pair(), keyed)
    return laid[0], laid[1]


@dataclass(frozen=True)
class HandleModel:
    """The fixed banded-disk model: genus plus the foot conventions."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")

    def foot_order(self) -> tuple[str, ...]:
        out = []
        for j in range(1, self.genus + 1):
            out += ["A%d-" % j, "B%d-" % j, "A%d+" % j, "B%d+" % j]
        return tuple(out)

    def alpha_core(self, j: int, slot: int = 0) -> Curve:
        return Curve((HandlePass("A", j, +1, slot),))

    def beta_core(self, j: int, slot: int = 0) -> Curve:
        return Curve((HandlePass("B", j, +1, slot),))

    def core_system(self, handle: str, slot: int = 0) -> "CutSystem":
        make = self.alpha_core if handle == "A" else self.beta_core
        return CutSystem(self.genus, tuple(make(j, slot) for j in range(1, self.genus + 1)))


@dataclass(frozen=True)
class CutSystem:
    """Ordered list of exactly g curves on the genus-g model.

    The constructor checks only structure (count and pair range); the
    geometric invariants, pairwise disjointness and homological
    independence, are the business of `validate_cut_system`.
    """

    genus: int
    curves: tuple[Curve, ...]

    def __post_init__(self):
        if len(self.curves) != self.genus:
            raise MalformedCurveError(
                "cut system on genus %d needs exactly %d curves, got %d"
                % (self.genus, self.genus, len(self.curves))
            )
        for c in self.curves:
            if c.max_pair() > self.genus:
                raise MalformedCurveError(
                    "curve %s uses a pair beyond genus %d" % (c.tokens(), self.genus)
                )

    @classmethod
    def from_tokens(cls, genus: int, *words: str) -> "CutSystem":
        return cls(genus, tuple(Curve.from_tokens(w) for w in words))

    def __iter__(self) -> Iterator[Curve]:
        return iter(self.curves)

    def __len__(self) -> int:
        return len(self.curves)

    def replace(self, index: int, curve: Curve) -> "CutSystem":
        curves = list(self.curves)
        curves[index] = curve
        return CutSystem(self.genus, tuple(curves))

    def key(self) -> tuple:
        """Identity of the cut-complex vertex: curves up to parallelism
        and reordering."""
        return tuple(sorted(c.normal_form() for c in self.curves))

    def vectors(self) -> list[tuple[int, ...]]:
        return [homology_vector(c, self.genus) for c in self.curves]


def systems_equivalent(cs1: CutSystem, cs2: CutSystem) -> bool:
    return cs1.genus == cs2.genus and cs1.key() == cs2.key()


def _rational_rank(rows: list[tuple[int, ...]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows if any(row)]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


@dataclass(frozen=True)
class Failure:
    kind: str
    detail: str
    curves: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {"kind": self.kind, "detail": self.detail, "curves": list(self.curves)}


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[Failure, ...]
    warnings: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failures": [f.as_dict() for f in self.failures],
            "warnings": list(self.warnings),
        }


def validate_cut_system(cs: CutSystem) -> ValidationReport:
    """Check the cut-system invariants and report every violation found.

    Failures: non-embedded or null-homotopic curves, intersecting pairs,
    homology rank below g.  Warnings flag reducible u-turns (a strand
    entering and immediately leaving one band, a bigon against that
    band's co-core) and shared slots; neither blocks validity because the
    trace resolves both deterministically.
    """
    failures: list[Failure] = []
    warnings: list[str] = []

    for i, c in enumerate(cs):
        if not c.normal_form():
            failures.append(Failure("null_homotopic", "curve %d reduces to nothing" % i, (i,)))
            continue
        k = self_intersection_count(c)
        if k:
            failures.append(
                Failure("not_embedded", "curve %d has %d self-crossings" % (i, k), (i,))
            )
        if not c.is_reduced():
            warnings.append(
                "curve %d has a reducible u-turn (bigon against a band co-core)" % i
            )

    for i in range(len(cs.curves)):
        for k in range(i + 1, len(cs.curves)):
            n = geometric_intersection(cs.curves[i], cs.curves[k])
            if n:
                failures.append(
                    Failure(
                        "intersecting_pair",
                        "curves %d and %d cross %d times" % (i, k, n),
                        (i, k),
                    )
                )

    seen: dict[tuple[str, int, int], tuple[int, int]] = {}
    for i, c in enumerate(cs):
        for t, p in enumerate(c):
            spot = (p.handle, p.pair, p.slot)
            if spot in seen and seen[spot][0] != i:
                warnings.append(
                    "slot %d of band %s%d shared by curves %d and %d"
                    % (p.slot, p.handle, p.pair, seen[spot][0], i)
                )
            seen.setdefault(spot, (i, t))

    if cs.genus and _rational_rank(cs.vectors()) < cs.genus:
        failures.append(
            Failure(
                "dependent",
                "homology rank %d below genus %d"
                % (_rational_rank(cs.vectors()), cs.genus),
            )
        )

    return ValidationReport(not failures, tuple(failures), tuple(warnings))


@dataclass(frozen=True)
class TrisectionDiagram:
    """Three cut systems on one surface, with a sign convention flag.

    `convention` is "standard" for the orientation making the framing of
    a curve with class (1, 1) equal to -1, and "reversed" for the
    opposite choice; the flag only affects induced-link signs.
    """

    genus: int
    alpha: CutSystem
    beta: CutSystem
    gamma: CutSystem
    convention: str = "standard"

    def __post_init__(self):
        for name, cs in self.systems():
            if cs.genus != self.genus:
                raise MalformedCurveError(
                    "%s system has genus %d, diagram has %d" % (name, cs.genus, self.genus)
                )
        if self.convention not in ("standard", "reversed"):
            raise ValueError("convention must be 'standard' or 'reversed'")

    @property
    def model(self) -> HandleModel:
        return HandleModel(self.genus)

    def systems(self) -> list[tuple[str, CutSystem]]:
        return [("alpha", self.alpha), ("beta", self.beta), ("gamma", self.gamma)]

    @property
    def alpha_beta_standard(self) -> bool:
        """True when alpha is the A-core system and beta the B-core system,
        up to reordering, orientation and parallel isotopy."""
        if self.genus == 0:
            return True
        model = self.model
        want_a = sorted(model.alpha_core(j).normal_form() for j in range(1, self.genus + 1))
        want_b = sorted(model.beta_core(j).normal_form() for j in range(1, self.genus + 1))
        have_a = sorted(c.normal_form() for c in self.alpha)
        have_b = sorted(c.normal_form() for c in self.beta)
        return have_a == want_a and have_b == want_b


# ---------------------------------------------------------------------------
# Handle slides.


@dataclass(frozen=True)
class Band:
    """Explicit slide band: a disk arc joining two curve arcs.

    `slider_arc` indexes a disk arc of the curve being slid (arc i runs
    from pass i to the next pass), `over_arc` one of the curve slid over.
    The band is realized as the straight segment between the midpoints of
    the two arcs and is only accepted when that segment avoids every
    curve of the system.  `reverse` splices the slid-over curve with the
    opposite orientation (subtracting instead of adding its class).
    """

    slider_arc: int
    over_arc: int
    reverse: bool = False


def _band_certified(layout: trace.Layout, slide_index: int, over_index: int, band: Band) -> bool:
    slider_chords = layout.curve_chords(slide_index)
    over_chords = layout.curve_chords(over_index)
    if not (0 <= band.slider_arc < len(slider_chords)):
        return False
    if not (0 <= band.over_arc < len(over_chords)):
        return False
    t_chord = slider_chords[band.slider_arc]
    u_chord = over_chords[band.over_arc]
    a = trace.chord_midpoint(layout, t_chord)
    b = trace.chord_midpoint(layout, u_chord)
    if not trace.off_chord_line(b, t_chord) or not trace.off_chord_line(a, u_chord):
        return False
    for chord in layout.chords:
        if chord == t_chord or chord == u_chord:
            continue
        if trace.segment_meets_chord(a, b, chord):
            return False
    return True


def adjacent_band(cs: CutSystem, slide_index: int, over_index: int) -> Band | None:
    """First certifiable band between two curves, or None.

    Exists exactly when some arc of one curve faces some arc of the other
    across an empty stretch of the disk (the two arcs cobound a rectangle
    containing no other curve arcs along the straight connection).
    """
    layout = trace.build_layout(cs.genus, [c.passes for c in cs])
    n_t = len(cs.curves[slide_index].passes)
    n_u = len(cs.curves[over_index].passes)
    for t in range(n_t):
        for u in range(n_u):
            band = Band(t, u)
            if _band_certified(layout, slide_index, over_index, band):
                return band
    return None


def _renumber_slots(genus: int, words: list[list[tuple[HandlePass, tuple]]]) -> list[Curve]:
    """Assign fresh integer slots preserving the given per-band sort keys."""
    per_band: dict[tuple[str, int], list[tuple[tuple, int, int]]] = {}
    for ci, word in enumerate(words):
        for t, (p, key) in enumerate(word):
            per_band.setdefault((p.handle, p.pair), []).append((key, ci, t))
    final: dict[tuple[int, int], int] = {}
    for band in per_band.values():
        band.sort()
        for slot, (_key, ci, t) in enumerate(band):
            final[(ci, t)] = slot
    out = []
    for ci, word in enumerate(words):
        out.append(
            Curve(tuple(_dc_replace(p, slot=final[(ci, t)]) for t, (p, _key) in enumerate(word)))
        )
    return out


def handle_slide(
    cs: CutSystem, slide_index: int, over_index: int, band: Band
) -> CutSystem:
    """Slide one curve of the system over another along an explicit band.

    The slid curve is replaced by its band sum with a push-off of the
    other curve; its class becomes old +/- other.  The band must be
    certified (its straight realization meets no curve of the system) and
    the resulting system must trace as cleanly as the input did, else
    SlideRejectedError.  Slots of the whole result are renumbered, which
    is an isotopy and changes no intersection data.
    """
    if slide_index == over_index:
        raise SlideRejectedError("cannot slide a curve over itself")
    slider = cs.curves[slide_index]
    over = cs.curves[over_index]
    layout = trace.build_layout(cs.genus, [c.passes for c in cs])
    if trace.crossing_count(layout, slide_index, over_index):
        raise SlideRejectedError("curves %d and %d intersect" % (slide_index, over_index))
    if not _band_certified(layout, slide_index, over_index, band):
        raise SlideRejectedError(
            "band (%d, %d) is not an embedded arc clear of the system"
            % (band.slider_arc, band.over_arc)
        )

    rotated = over.passes[band.over_arc + 1 :] + over.passes[: band.over_arc + 1]
    if band.reverse:
        copy = tuple(p.inverse() for p in reversed(rotated))
        copy_sources = tuple(reversed(range(len(rotated))))
    else:
        copy = rotated
        copy_sources = tuple(range(len(rotated)))
    cut = band.slider_arc + 1
    spliced = slider.passes[:cut] + copy + slider.passes[cut:]

    # Sources: which original strand each new pass shadows, for slot layout.
    rot_map = [
        (band.over_arc + 1 + i) % len(over.passes) for i in range(len(over.passes))
    ]
    spliced_sources: list[tuple] = []
    for t in range(len(spliced)):
        if t < cut:
            spliced_sources.append(("own", slide_index, t))
        elif t < cut + len(copy):
            spliced_sources.append(("copy", over_index, rot_map[copy_sources[t - cut]]))
        else:
            spliced_sources.append(("own", slide_index, t - len(copy)))

    word = _cyclic_reduce(_stripped(spliced))
    if not word:
        raise SlideRejectedError("slide produces a null-homotopic curve")

    # Re-derive which spliced passes survive the cyclic reduction, keeping
    # their source tags.  Reduction only cancels adjacent inverse pairs, so
    # replay it on indexed passes.
    indexed = list(range(len(spliced)))

    def _reduce_indices(idx: list[int]) -> list[int]:
        items = list(idx)
        changed = True
        while changed and items:
            changed = False
            i = 0
            while i < len(items) - 1:
                p, q = spliced[items[i]], spliced[items[i + 1]]
                if p.handle == q.handle and p.pair == q.pair and p.sign == -q.sign:
                    del items[i : i + 2]
                    changed = True
                    i = max(i - 1, 0)
                else:
                    i += 1
            if len(items) >= 2:
                p, q = spliced[items[-1]], spliced[items[0]]
                if p.handle == q.handle and p.pair == q.pair and p.sign == -q.sign:
                    items = items[1:-1]
                    changed = True
        return items

    kept = _reduce_indices(indexed)
    new_passes = [spliced[i] for i in kept]
    new_sources = [spliced_sources[i] for i in kept]

    # Existing strands keep their relative order via even ranks; each copied
    # strand sits immediately beside its source, on the side chosen below.
    base_rank: dict[tuple[int, int], int] = {}
    per_band: dict[tuple[str, int], list[tuple[tuple[int, int, int], int, int]]] = {}
    for ci, c in enumerate(cs):
        for t, p in enumerate(c):
            per_band.setdefault((p.handle, p.pair), []).append(((p.slot, ci, t), ci, t))
    for band_strands in per_band.values():
        band_strands.sort()
        for r, (_key, ci, t) in enumerate(band_strands):
            base_rank[(ci, t)] = 2 * r

    errors = []
    for side in (+1, -1):
        keyed_words: list[list[tuple[HandlePass, tuple]]] = []
        for ci, c in enumerate(cs):
            if ci == slide_index:
                keyed = []
                for p, src in zip(new_passes, new_sources):
                    tag, owner, t = src
                    rank = base_rank[(owner, t)]
                    keyed.append((p, (rank + (side if tag == "copy" else 0), 1, ci)))
                keyed_words.append(keyed)
            else:
                keyed_words.append(
                    [(p, (base_rank[(ci, t)], 0, ci)) for t, p in enumerate(c)]
                )
        candidate_curves = _renumber_slots(cs.genus, keyed_words)
        candidate = CutSystem(cs.genus, tuple(candidate_curves))
        new_layout = trace.build_layout(cs.genus, [c.passes for c in candidate])
        if trace.self_crossing_count(new_layout, slide_index):
            errors.append("slid curve self-crosses (side %+d)" % side)
            continue
        dirty = [
            k
            for k in range(len(candidate.curves))
            if k != slide_index and trace.crossing_count(new_layout, slide_index, k)
        ]
        pre_dirty = [
            k
            for k in range(len(cs.curves))
            if k != slide_index and trace.crossing_count(layout, slide_index, k)
        ]
        if [k for k in dirty if k not in pre_dirty]:
            errors.append("slid curve crosses curves %s (side %+d)" % (dirty, side))
            continue
        return candidate
    raise SlideRejectedError("; ".join(errors) or "no clean layout for the slid curve")
