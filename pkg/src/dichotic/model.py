"""Core dissonance arithmetic for dichotically panned chords.

A chord is a set of simultaneously sounding voices.  Each voice is panned
to one of three panorama points: hard left, hard right, or center (the
center splits a voice's loudness equally between both channels).  Dissonance
arises only between pairs of voices that share a channel:

* voices on opposite edges never interact (their dissonance is zero);
* voices at the same point interact at full strength, scaled by the
  loudness ratio of the quieter voice to the louder one;
* a center voice meets an edge voice at half amplitude, so that pair
  contributes half of the full value at equal loudness.

Interval dissonance values come from a 13-entry lookup table (semitones
0..12); intervals wider than an octave reuse the reduced interval's value
plus a flat per-octave increment.

Everything here is a pure function over immutable values; all arithmetic is
exact (integers and fractions), so comparisons between candidate pannings
never suffer float rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

MAX_VOICES = 16

DEFAULT_INTERVAL_VALUES = (0, 22, 16, 10, 6, 4, 18, 2, 8, 12, 14, 20, 0)


class PanPosition(enum.Enum):
    """One of the three panorama points a voice can occupy."""

    LEFT = "left"
    CENTER = "center"
    RIGHT = "right"

    @property
    def mirrored(self) -> "PanPosition":
        """The position after swapping the left and right channels."""
        if self is PanPosition.LEFT:
            return PanPosition.RIGHT
        if self is PanPosition.RIGHT:
            return PanPosition.LEFT
        return self

    def __repr__(self) -> str:  # noqa: D105
        return f"PanPosition.{self.name}"


LEFT = PanPosition.LEFT
CENTER = PanPosition.CENTER
RIGHT = PanPosition.RIGHT


@dataclass(frozen=True)
class IntervalDissonanceTable:
    """Dissonance units per interval in semitones.

    ``values[k]`` is the dissonance of a k-semitone interval for k in 0..12.
    Unison and octave are fixed at zero.  Intervals beyond the octave map
    back onto 1..12 and gain ``octave_increment`` units per extra octave,
    so e.g. a minor ninth (13) costs the minor second plus one increment,
    and a double octave (24) costs the octave value plus one increment.
    """

    values: tuple = DEFAULT_INTERVAL_VALUES
    octave_increment: int = 2

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != 13:
            raise ValueError(f"need 13 interval values (0..12 semitones), got {len(values)}")
        if values[0] != 0 or values[12] != 0:
            raise ValueError("unison and octave dissonance must be 0")
        if any(v < 0 for v in values):
            raise ValueError("interval dissonance values must be non-negative")
        if self.octave_increment < 0:
            raise ValueError("octave_increment must be non-negative")

    def dissonance(self, interval: int) -> int:
        """Dissonance units for an interval of ``interval`` semitones (>= 0)."""
        if interval < 0:
            raise ValueError(f"interval must be non-negative, got {interval}")
        if interval <= 12:
            return self.values[interval]
        extra_octaves, reduced = divmod(interval - 1, 12)
        return self.values[reduced + 1] + self.octave_increment * extra_octaves


DEFAULT_TABLE = IntervalDissonanceTable()


@dataclass(frozen=True)
class Voice:
    """A single pitched voice: MIDI note number plus velocity as loudness."""

    pitch: int
    velocity: int = 100

    def __post_init__(self) -> None:
        if not 0 <= self.pitch <= 127:
            raise ValueError(f"pitch {self.pitch} outside MIDI range 0..127")
        if not 1 <= self.velocity <= 127:
            raise ValueError(f"velocity {self.velocity} outside range 1..127")


@dataclass(frozen=True)
class Chord:
    """An ascending-pitch tuple of voices sounding together.

    Voices are sorted by pitch on construction (stable, so equal pitches
    keep their given order).  Duplicate pitches stay distinct voices; a
    unison pair simply contributes zero dissonance.
    """

    voices: tuple = ()

    def __post_init__(self) -> None:
        voices = tuple(sorted(self.voices, key=lambda v: v.pitch))
        object.__setattr__(self, "voices", voices)
        if not 1 <= len(voices) <= MAX_VOICES:
            raise ValueError(f"chord needs 1..{MAX_VOICES} voices, got {len(voices)}")

    def __len__(self) -> int:
        return len(self.voices)

    def __iter__(self):
        return iter(self.voices)

    @property
    def pitches(self) -> tuple:
        return tuple(v.pitch for v in self.voices)

    @property
    def velocities(self) -> tuple:
        return tuple(v.velocity for v in self.voices)

    @classmethod
    def from_pitches(cls, pitches: Iterable[int], velocities: Optional[Sequence[int]] = None,
                     velocity: int = 100) -> "Chord":
        """Build a chord from pitch numbers, with one shared or per-voice velocity."""
        pitches = list(pitches)
        if velocities is None:
            velocities = [velocity] * len(pitches)
        if len(velocities) != len(pitches):
            raise ValueError("velocities must match pitches one to one")
        return cls(tuple(Voice(p, v) for p, v in zip(pitches, velocities)))

    @classmethod
    def from_offsets(cls, offsets: Iterable[int], base_note: int = 60,
                     velocity: int = 100) -> "Chord":
        """Build a chord from semitone offsets above a base MIDI note."""
        return cls.from_pitches((base_note + o for o in offsets), velocity=velocity)


@dataclass(frozen=True)
class PanAssignment:
    """A panorama point for each chord voice, index-aligned with the chord."""

    positions: tuple = ()

    def __post_init__(self) -> None:
        positions = tuple(self.positions)
        object.__setattr__(self, "positions", positions)
        if not positions:
            raise ValueError("assignment needs at least one position")
        for p in positions:
            if not isinstance(p, PanPosition):
                raise TypeError(f"expected PanPosition, got {p!r}")

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    @property
    def ppn(self) -> int:
        """Number of distinct panorama points occupied (1..3)."""
        return len(set(self.positions))

    def mirrored(self) -> "PanAssignment":
        """Swap left and right for every voice; center stays put."""
        return PanAssignment(tuple(p.mirrored for p in self.positions))

    @classmethod
    def all_center(cls, n: int) -> "PanAssignment":
        return cls((CENTER,) * n)


@dataclass(frozen=True)
class PairContribution:
    """One unordered voice pair's share of the chord's total dissonance."""

    i: int
    j: int
    interval: int
    raw: int
    factor: Fraction
    contribution: Fraction


@dataclass(frozen=True)
class DissonanceReport:
    """Total chord dissonance plus the pair-by-pair breakdown behind it."""

    total: Fraction
    pairs: tuple
    assignment: PanAssignment
    chord: Chord
    mode: Optional[str] = None

    @property
    def ppn(self) -> int:
        return self.assignment.ppn


def _loudness_ratio(a: int, b: int) -> Fraction:
    """Ratio of the weaker to the stronger of two loudness values."""
    return Fraction(min(a, b), max(a, b))


def _pair_factor(a: Voice, b: Voice, pos_a: PanPosition, pos_b: PanPosition) -> Fraction:
    """Loudness scaling for a voice pair under the given panning.

    Opposite edges never interact (factor 0).  Same-point pairs scale by the
    weak-to-strong loudness ratio.  A center voice is present in each channel
    at half its velocity, so against an edge voice the ratio is taken between
    the halved center loudness and the full edge loudness, kept exact by
    doubling the edge side instead of halving the center one.
    """
    if {pos_a, pos_b} == {LEFT, RIGHT}:
        return Fraction(0)
    if pos_a is pos_b:
        return _loudness_ratio(a.velocity, b.velocity)
    if pos_a is CENTER:
        return _loudness_ratio(a.velocity, 2 * b.velocity)
    return _loudness_ratio(2 * a.velocity, b.velocity)


def pair_dissonance(a: Voice, b: Voice, pos_a: PanPosition, pos_b: PanPosition,
                    table: IntervalDissonanceTable = DEFAULT_TABLE) -> Fraction:
    """Dissonance of one voice pair given where each voice is panned.

    The raw interval value is scaled by the pair's loudness factor: zero for
    a dichotic pair, the weak-to-strong ratio at a shared point, and the
    half-amplitude center rule against an edge (half the raw value when the
    voices are equally loud).
    """
    raw = table.dissonance(abs(a.pitch - b.pitch))
    return raw * _pair_factor(a, b, pos_a, pos_b)


def total_dissonance(chord: Chord, assignment: PanAssignment,
                     table: IntervalDissonanceTable = DEFAULT_TABLE,
                     mode: Optional[str] = None) -> DissonanceReport:
    """Sum pair dissonances over every unordered voice pair of the chord."""
    if len(assignment) != len(chord):
        raise ValueError(
            f"assignment covers {len(assignment)} voices but chord has {len(chord)}")
    voices = chord.voices
    positions = assignment.positions
    pairs = []
    total = Fraction(0)
    for i in range(len(voices)):
        for j in range(i + 1, len(voices)):
            interval = abs(voices[i].pitch - voices[j].pitch)
            raw = table.dissonance(interval)
            factor = _pair_factor(voices[i], voices[j], positions[i], positions[j])
            contribution = raw * factor
            total += contribution
            pairs.append(PairContribution(i, j, interval, raw, factor, contribution))
    return DissonanceReport(total=total, pairs=tuple(pairs), assignment=assignment,
                            chord=chord, mode=mode)
