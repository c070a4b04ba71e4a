"""Bundled reference data for the 55 three-voice chords within one octave.

Each chord appears in three variants (one per panorama point count), with
the published total dissonance, the voice layout in sign notation (``-``
left, ``+`` right, bare center), and the author's subjective listening
ratings.  The ratings (pleasantness, dissonance drop, synergy, left/right
difference, chord-type label) are human judgments carried verbatim as
reference metadata; only the layouts and totals are reproducible by the
model, and the regression suite checks them against it.

Pleasantness was never measured for the two-point variants and the
dissonance-drop and difference columns only apply to multi-point variants;
those cells are ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .enumeration import ChordId


@dataclass(frozen=True)
class ReferenceRow:
    """One table row: a chord under one panorama point count."""

    chord_id: ChordId
    offsets: Tuple[int, ...]
    composition: str
    ppn: int
    tdiss: int
    pleasantness: Optional[int]
    ddiss: Optional[int]
    synergy: Optional[int]
    difference: Optional[int]
    label: str


# (ordinal, offsets, label,
#  ppn-1 (tdiss, pleasantness),
#  ppn-3 (composition, tdiss, pleasantness, ddiss, synergy, difference),
#  ppn-2 (composition, tdiss, ddiss, synergy))
_RAW = (
    (1, (0, 1, 2), "", (60, 0), ("0-,2,1+", 19, 1, -1, -1, 1), ("1-,0+,2+", 16, -3, -3)),
    (2, (0, 1, 3), "", (48, 0), ("0-,3,1+", 13, 1, -2, -1, 1), ("1-,0+,3+", 10, -4, -3)),
    (3, (0, 2, 3), "", (48, 0), ("2-,0,3+", 13, 1, -3, -1, 2), ("0-,3-,2+", 10, -4, -3)),
    (4, (0, 1, 4), "", (38, 1), ("0-,4,1+", 8, 2, -3, -1, 1), ("1-,0+,4+", 6, -5, -3)),
    (5, (0, 2, 4), "секундовый", (38, 2), ("0-,4,2+", 11, 3, -2, -1, 2), ("2-,0+,4+", 6, -5, -3)),
    (6, (0, 3, 4), "", (38, 1), ("3-,0,4+", 8, 2, -2, -1, 1), ("0-,4-,3+", 6, -4, -3)),
    (7, (0, 1, 5), "", (32, 1), ("0-,5,1+", 5, 2, -2, -1, 2), ("1-,0+,5+", 4, -5, -3)),
    (8, (0, 2, 5), "", (30, 2), ("0-,5,2+", 7, 4, -2, -1, 2), ("2-,0+,5+", 4, -5, -3)),
    (9, (0, 3, 5), "", (30, 2), ("3-,0,5+", 7, 4, -2, -1, 2), ("0-,5-,3+", 4, -4, -3)),
    (10, (0, 4, 5), "", (32, 1), ("4-,0,5+", 5, 2, -3, -1, 2), ("0-,5-,4+", 4, -4, -2)),
    (11, (0, 1, 6), "", (44, 0), ("0-,6,1+", 11, 1, -2, -1, 1), ("0-,1+,6+", 4, -4, -3)),
    (12, (0, 2, 6), "", (40, 2), ("0-,2,6+", 11, 3, -3, -1, 3), ("0-,2+,6+", 6, -4, -2)),
    (13, (0, 3, 6), "уменьшенный", (38, 1), ("0-,3,6+", 10, 2, -3, -1, 3), ("0-,3-,6+", 10, -3, -2)),
    (14, (0, 4, 6), "", (40, 1), ("0-,4,6+", 11, 2, -2, -1, 3), ("0-,4-,6+", 6, -3, -2)),
    (15, (0, 5, 6), "", (44, 0), ("5-,0,6+", 11, 1, -2, -1, 1), ("0-,5-,6+", 4, -3, -2)),
    (16, (0, 1, 7), "", (42, 0), ("0-,7,1+", 10, 1, -2, -1, 1), ("1-,0+,7+", 2, -3, -2)),
    (17, (0, 2, 7), "suspended задержанный", (22, 3), ("0-,7,2+", 3, 4, -2, -1, 2), ("2-,0+,7+", 2, -4, -3)),
    (18, (0, 3, 7), "минор", (18, 4), ("0-,7,3+", 4, 5, -2, -1, 3), ("3-,0+,7+", 2, -4, -3)),
    (19, (0, 4, 7), "мажор", (18, 5), ("4-,0,7+", 4, 5, -1, -1, 3), ("0-,7-,4+", 2, -2, -2)),
    (20, (0, 5, 7), "suspended задержанный", (22, 3), ("5-,0,7+", 3, 5, -2, -1, 2), ("0-,7-,5+", 2, -3, -2)),
    (21, (0, 6, 7), "", (42, 1), ("6-,0,7+", 10, 2, -2, -1, 1), ("0-,7-,6+", 2, -3, -2)),
    (22, (0, 1, 8), "", (32, 1), ("0-,8,1+", 5, 2, -2, -1, 1), ("0-,1+,8+", 2, -4, -3)),
    (23, (0, 2, 8), "", (42, 2), ("2-,0,8+", 12, 3, -2, -1, 2), ("2-,0+,8+", 8, -3, -2)),
    (24, (0, 3, 8), "мажор", (22, 5), ("0-,8,3+", 6, 5, -1, -1, 3), ("0-,3+,8+", 4, -3, -3)),
    (25, (0, 4, 8), "увеличенный", (20, 2), ("0-,4,8+", 6, 3, -2, -1, 3), ("0-,4-,8+", 6, -3, -2)),
    (26, (0, 5, 8), "минор", (22, 4), ("5-,0,8+", 6, 5, -2, -1, 3), ("0-,5-,8+", 4, -3, -2)),
    (27, (0, 6, 8), "", (42, 2), ("0-,8,6+", 12, 3, -2, -1, 2), ("0-,8-,6+", 8, -3, -2)),
    (28, (0, 7, 8), "", (32, 1), ("7-,0,8+", 5, 2, -2, -1, 1), ("0-,7-,8+", 2, -3, -2)),
    (29, (0, 1, 9), "", (42, 1), ("0-,9,1+", 10, 2, -2, -1, 1), ("0-,1+,9+", 8, -4, -2)),
    (30, (0, 2, 9), "", (30, 2), ("0-,9,2+", 7, 4, -2, -1, 2), ("0-,2+,9+", 2, -3, -2)),
    (31, (0, 3, 9), "", (40, 1), ("3-,0,9+", 11, 2, -2, -1, 2), ("0-,3-,9+", 10, -3, -2)),
    (32, (0, 4, 9), "минор", (22, 4), ("0-,4,9+", 5, 5, -2, -1, 3), ("0-,4+,9+", 4, -3, -2)),
    (33, (0, 5, 9), "мажор", (22, 5), ("0-,5,9+", 5, 5, -1, -1, 3), ("0-,5-,9+", 4, -2, -2)),
    (34, (0, 6, 9), "квартовый", (40, 2), ("0-,9,6+", 11, 3, -2, -1, 3), ("0-,6+,9+", 10, -3, -2)),
    (35, (0, 7, 9), "", (30, 3), ("7-,0,9+", 7, 4, -2, -1, 3), ("0-,7-,9+", 2, -3, -2)),
    (36, (0, 8, 9), "", (42, 1), ("8-,0,9+", 10, 2, -2, -1, 3), ("0-,8-,9+", 8, -3, -2)),
    (37, (0, 1, 10), "", (48, 1), ("0-,10,1+", 13, 2, -1, -1, 1), ("0-,1+,10+", 12, -3, -2)),
    (38, (0, 2, 10), "", (38, 2), ("0-,10,2+", 11, 3, -2, -1, 2), ("0-,2+,10+", 8, -4, -2)),
    (39, (0, 3, 10), "", (26, 3), ("0-,3,10+", 6, 4, -2, -1, 2), ("0-,3+,10+", 2, -4, -2)),
    (40, (0, 4, 10), "", (38, 3), ("4-,0,10+", 10, 4, -2, -1, 2), ("0-,4-,10+", 6, -2, -1)),
    (41, (0, 5, 10), "", (22, 3), ("0-,5,10+", 4, 5, -2, -1, 1), ("0-,5-,10+", 4, -2, -1)),
    (42, (0, 6, 10), "", (38, 1), ("0-,10,6+", 10, 2, -2, -1, 2), ("0-,6+,10+", 6, -3, -2)),
    (43, (0, 7, 10), "", (26, 3), ("0-,7,10+", 6, 3, -2, -1, 3), ("0-,7-,10+", 2, -3, -2)),
    (44, (0, 8, 10), "", (38, 3), ("8-,0,10+", 11, 3, -2, -1, 2), ("0-,8-,10+", 8, -2, -1)),
    (45, (0, 9, 10), "", (48, 1), ("9-,0,10+", 13, 2, -2, -1, 1), ("0-,9-,10+", 12, -2, -1)),
    (46, (0, 1, 11), "", (56, 0), ("0-,11,1+", 17, 1, -1, -1, 1), ("0-,1+,11+", 14, -3, -3)),
    (47, (0, 2, 11), "", (48, 1), ("0-,2,11+", 14, 2, -2, -1, 2), ("0-,2+,11+", 12, -3, -2)),
    (48, (0, 3, 11), "", (38, 1), ("0-,3,11+", 9, 2, -1, -1, 2), ("0-,3+,11+", 8, -2, -2)),
    (49, (0, 4, 11), "", (28, 2), ("0-,4,11+", 4, 3, -2, -1, 2), ("0-,4+,11+", 2, -3, -2)),
    (50, (0, 5, 11), "", (42, 1), ("0-,5,11+", 11, 2, -2, -1, 2), ("0-,5-,11+", 4, -3, -2)),
    (51, (0, 6, 11), "", (42, 1), ("0-,6,11+", 11, 2, -1, -1, 1), ("0-,6+,11+", 4, -2, -2)),
    (52, (0, 7, 11), "", (28, 2), ("0-,7,11+", 4, 3, -2, -1, 2), ("0-,7-,11+", 2, -3, -2)),
    (53, (0, 8, 11), "", (38, 1), ("0-,8,11+", 9, 2, -2, -1, 2), ("0-,8-,11+", 8, -2, -2)),
    (54, (0, 9, 11), "", (48, 1), ("0-,9,11+", 14, 2, -1, -1, 2), ("0-,9-,11+", 12, -2, -2)),
    (55, (0, 10, 11), "", (56, 0), ("10-,0,11+", 17, 1, -2, -1, 1), ("0-,10-,11+", 14, -3, -2)),
)


def _build_rows() -> Tuple[ReferenceRow, ...]:
    rows = []
    for ordinal, offsets, label, one, three, two in _RAW:
        cid = ChordId(3, ordinal)
        t1, pl1 = one
        comp3, t3, pl3, dd3, syn3, diff3 = three
        comp2, t2, dd2, syn2 = two
        rows.append(ReferenceRow(cid, offsets, ",".join(str(o) for o in offsets),
                                 1, t1, pl1, 0, 0, 0, label))
        rows.append(ReferenceRow(cid, offsets, comp3, 3, t3, pl3, dd3, syn3, diff3, label))
        rows.append(ReferenceRow(cid, offsets, comp2, 2, t2, None, dd2, syn2, None, label))
    return tuple(rows)


REFERENCE_ROWS: Tuple[ReferenceRow, ...] = _build_rows()

REFERENCE_CHORDS: Tuple[ChordId, ...] = tuple(ChordId(3, a) for a in range(1, 56))


def rows_for(chord_id: ChordId):
    """All reference rows for one chord, ordered by panorama point count."""
    return sorted((r for r in REFERENCE_ROWS if r.chord_id == chord_id),
                  key=lambda r: r.ppn)


def label_for(chord_id: ChordId) -> Optional[str]:
    """The chord-type label if the chord is in the reference table."""
    for row in REFERENCE_ROWS:
        if row.chord_id == chord_id:
            return row.label
    return None
