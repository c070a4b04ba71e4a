"""Search for the pan assignment that minimizes a chord's total dissonance.

Four panorama modes:

* ``FIXED1`` — everything in the center (diotic reference rendering);
* ``FIXED2`` — voices split over the two edges, both edges occupied;
* ``FIXED3`` — edges plus center, all three points occupied;
* ``FREE``   — any combination of the three points.

Chords whose all-center total is at or below the per-voice-count threshold
are left in the center regardless of mode; everything else is searched
exhaustively.  Ties are broken deterministically: prefer higher-pitched
voices in the center, then canonicalize edge polarity (the group holding
the lowest edge voice goes left), then take the first assignment in
left < center < right order per voice.  The search is exact arithmetic
throughout, so ties are real ties, never float accidents.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional

from .enumeration import ChordId, rank
from .model import (
    CENTER,
    DEFAULT_TABLE,
    LEFT,
    RIGHT,
    Chord,
    DissonanceReport,
    IntervalDissonanceTable,
    PanAssignment,
    PanPosition,
    total_dissonance,
)

# Free/three-point spaces grow as 3^n; past this voice count the scan is refused.
MAX_SEARCH_VOICES = 12

_POSITION_ORDER = {LEFT: 0, CENTER: 1, RIGHT: 2}


class PanMode(enum.Enum):
    """How many panorama points the optimizer may use, or FREE for any."""

    FIXED1 = "1"
    FIXED2 = "2"
    FIXED3 = "3"
    FREE = "free"

    @classmethod
    def parse(cls, text: str) -> "PanMode":
        text = str(text).strip().lower()
        for mode in cls:
            if text == mode.value:
                return mode
        raise ValueError(f"unknown panorama mode {text!r}, expected 1, 2, 3 or free")


class SortMode(enum.Enum):
    """Edge ordering convention for the final assignment."""

    INCREASE_SORT = "increase"


DEFAULT_THRESHOLDS: Dict[int, int] = {n: 0 for n in range(2, 7)}


def _default_thresholds() -> Dict[int, int]:
    return dict(DEFAULT_THRESHOLDS)


@dataclass(frozen=True)
class OptimizerConfig:
    """Knobs for the pan search.

    ``thresholds`` maps voice count to the dissonance level below which a
    chord is simply left in the center; missing counts default to 0, i.e.
    only fully consonant chords stay diotic.
    """

    mode: PanMode = PanMode.FIXED3
    thresholds: Dict[int, int] = field(default_factory=_default_thresholds)
    sort_mode: SortMode = SortMode.INCREASE_SORT
    base_note: int = 60
    swap_channels: bool = False

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.thresholds.values()):
            raise ValueError("thresholds must be non-negative")
        if not 0 <= self.base_note <= 127:
            raise ValueError(f"base_note {self.base_note} outside MIDI range")

    def threshold_for(self, n: int):
        return self.thresholds.get(n, 0)


class EmptyAssignmentSpaceError(ValueError):
    """The requested mode admits no assignment for this voice count."""


def assignment_space(n: int, mode: PanMode) -> List[PanAssignment]:
    """Every pan assignment the mode allows for an n-voice chord.

    FIXED2 requires both edges occupied, FIXED3 all three points; the
    all-one-side combinations are filtered out accordingly.
    """
    if n < 1:
        raise ValueError(f"need at least one voice, got {n}")
    if mode is PanMode.FIXED1:
        return [PanAssignment.all_center(n)]
    if mode is PanMode.FIXED2:
        if n < 2:
            raise EmptyAssignmentSpaceError("two-point panning needs at least 2 voices")
        return [PanAssignment(combo)
                for combo in itertools.product((LEFT, RIGHT), repeat=n)
                if len(set(combo)) == 2]
    if mode is PanMode.FIXED3:
        if n < 3:
            raise EmptyAssignmentSpaceError("three-point panning needs at least 3 voices")
        if n > MAX_SEARCH_VOICES:
            raise ValueError(f"three-point search limited to {MAX_SEARCH_VOICES} voices")
        return [PanAssignment(combo)
                for combo in itertools.product((LEFT, CENTER, RIGHT), repeat=n)
                if len(set(combo)) == 3]
    if n > MAX_SEARCH_VOICES:
        raise ValueError(f"free search limited to {MAX_SEARCH_VOICES} voices")
    return [PanAssignment(combo)
            for combo in itertools.product((LEFT, CENTER, RIGHT), repeat=n)]


def normalize_polarity(assignment: PanAssignment, chord: Chord,
                       sort_mode: SortMode = SortMode.INCREASE_SORT) -> PanAssignment:
    """Mirror the edges, if needed, into the canonical orientation.

    Under increase sort the edge group holding the lowest edge voice sits on
    the left; with a single occupied edge that group goes left too.  Totals
    are unaffected (the model is channel-symmetric), and the operation is
    idempotent.  Equal lowest pitches fall back to comparing the full
    (pitch, voice index) sequences of both edge groups.
    """
    if len(assignment) != len(chord):
        raise ValueError(
            f"assignment covers {len(assignment)} voices but chord has {len(chord)}")
    left_key = sorted((v.pitch, i) for i, v in enumerate(chord.voices)
                      if assignment.positions[i] is LEFT)
    right_key = sorted((v.pitch, i) for i, v in enumerate(chord.voices)
                       if assignment.positions[i] is RIGHT)
    if not right_key:
        return assignment
    if not left_key or right_key < left_key:
        return assignment.mirrored()
    return assignment


def _center_pitch_key(chord: Chord, assignment: PanAssignment) -> tuple:
    """Center pitches, highest first; larger keys win ties for the minimum."""
    return tuple(sorted((v.pitch for v, p in zip(chord.voices, assignment.positions)
                         if p is CENTER), reverse=True))


def _position_code(assignment: PanAssignment) -> tuple:
    return tuple(_POSITION_ORDER[p] for p in assignment.positions)


def optimize(chord: Chord, config: OptimizerConfig,
             table: IntervalDissonanceTable = DEFAULT_TABLE) -> DissonanceReport:
    """The minimum-dissonance pan assignment for the chord under the config.

    If the all-center total is within the threshold for this voice count the
    chord stays diotic and the mode's assignment space is never consulted.
    Otherwise every assignment the mode allows is scored and the minimum is
    returned under the documented tie-breaks.  ``swap_channels`` mirrors the
    final assignment only; the total is unchanged.
    """
    mode = config.mode
    center_report = total_dissonance(chord, PanAssignment.all_center(len(chord)),
                                     table, mode=mode.value)
    if mode is PanMode.FIXED1 or center_report.total <= config.threshold_for(len(chord)):
        return center_report

    space = assignment_space(len(chord), mode)
    voices = chord.voices
    n = len(voices)

    # Pair contributions depend only on which of four position categories the
    # pair lands in; precompute them on a common integer scale so the scan
    # compares exact values with plain int arithmetic.
    pair_fractions = []
    for i in range(n):
        for j in range(i + 1, n):
            raw = table.dissonance(abs(voices[i].pitch - voices[j].pitch))
            same = raw * Fraction(min(voices[i].velocity, voices[j].velocity),
                                  max(voices[i].velocity, voices[j].velocity))
            i_center = raw * Fraction(min(voices[i].velocity, 2 * voices[j].velocity),
                                      max(voices[i].velocity, 2 * voices[j].velocity))
            j_center = raw * Fraction(min(2 * voices[i].velocity, voices[j].velocity),
                                      max(2 * voices[i].velocity, voices[j].velocity))
            pair_fractions.append((i, j, same, i_center, j_center))
    scale = lcm(*(f.denominator for _, _, s, ic, jc in pair_fractions
                  for f in (s, ic, jc))) if pair_fractions else 1
    scaled_pairs = [(i, j,
                     int(same * scale), int(i_center * scale), int(j_center * scale))
                    for i, j, same, i_center, j_center in pair_fractions]

    best_total: Optional[int] = None
    best_center: Optional[tuple] = None
    finalists: List[PanAssignment] = []
    for assignment in space:
        positions = assignment.positions
        total = 0
        for i, j, same, i_center, j_center in scaled_pairs:
            pi, pj = positions[i], positions[j]
            if pi is pj:
                total += same
            elif pi is CENTER:
                total += i_center
            elif pj is CENTER:
                total += j_center
            # opposite edges contribute nothing
        if best_total is not None and total > best_total:
            continue
        center_key = _center_pitch_key(chord, assignment)
        if best_total is None or total < best_total or center_key > best_center:
            best_total, best_center = total, center_key
            finalists = [assignment]
        elif center_key == best_center:
            finalists.append(assignment)

    chosen = min((normalize_polarity(a, chord, config.sort_mode) for a in finalists),
                 key=_position_code)
    if config.swap_channels:
        chosen = chosen.mirrored()
    return total_dissonance(chord, chosen, table, mode=mode.value)


def accord_chain(n: int, limit: int,
                 table: IntervalDissonanceTable = DEFAULT_TABLE) -> List[ChordId]:
    """The most consonant in-octave n-voice chords, best first.

    Chords are ranked by their optimal dichotic total at equal loudness
    (three-point layout, or two-point for two voices where a center point
    cannot be occupied alongside both edges), ties by ordinal.  ``limit``
    caps the result; there are C(11, n-1) chords within the octave.
    """
    if n < 2:
        raise ValueError(f"need at least 2 voices, got {n}")
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    mode = PanMode.FIXED2 if n == 2 else PanMode.FIXED3
    config = OptimizerConfig(mode=mode)
    scored = []
    for inner in itertools.combinations(range(1, 12), n - 1):
        offsets = (0,) + inner
        chord_id = rank(offsets)
        report = optimize(Chord.from_offsets(offsets), config, table)
        scored.append((report.total, chord_id.a, chord_id))
    scored.sort(key=lambda item: (item[0], item[1]))
    return [chord_id for _, _, chord_id in scored[:limit]]
