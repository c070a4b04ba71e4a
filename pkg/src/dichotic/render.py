"""Canonical text and JSON renderings of dissonance reports.

The sign notation writes each voice as its semitone offset above the chord's
lowest pitch, with ``-`` for left, ``+`` for right and a bare number for
center, listing the left group first, then center, then right, each in
ascending order: ``"4-,0,7+"``.

JSON reports are schema-versioned and locale-independent; exact rational
values are emitted as plain numbers (integers where integral).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .model import CENTER, LEFT, RIGHT, Chord, DissonanceReport, PanAssignment

SCHEMA_VERSION = 1

_SUFFIX = {LEFT: "-", CENTER: "", RIGHT: "+"}


def number(value: Union[int, Fraction]) -> Union[int, float]:
    """A Fraction as a JSON-friendly number: int when integral, else float."""
    if isinstance(value, int):
        return value
    if value.denominator == 1:
        return int(value)
    return float(value)


def assignment_notation(chord: Chord, assignment: PanAssignment) -> str:
    """Sign notation for an assignment, offsets anchored at the lowest pitch."""
    if len(assignment) != len(chord):
        raise ValueError("assignment and chord sizes differ")
    anchor = min(chord.pitches)
    groups = {LEFT: [], CENTER: [], RIGHT: []}
    for voice, position in zip(chord.voices, assignment.positions):
        groups[position].append(voice.pitch - anchor)
    parts = []
    for position in (LEFT, CENTER, RIGHT):
        parts.extend(f"{offset}{_SUFFIX[position]}" for offset in sorted(groups[position]))
    return ",".join(parts)


def report_to_dict(report: DissonanceReport) -> dict:
    """The canonical JSON form of a report (shared by CLI and HTTP service)."""
    return {
        "schema": SCHEMA_VERSION,
        "mode": report.mode,
        "ppn": report.ppn,
        "total": number(report.total),
        "assignment": assignment_notation(report.chord, report.assignment),
        "positions": [p.value for p in report.assignment.positions],
        "pitches": list(report.chord.pitches),
        "velocities": list(report.chord.velocities),
        "pairs": [
            {
                "i": pair.i,
                "j": pair.j,
                "interval": pair.interval,
                "raw": pair.raw,
                "factor": number(pair.factor),
                "contribution": number(pair.contribution),
            }
            for pair in report.pairs
        ],
    }
