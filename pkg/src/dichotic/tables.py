"""Computation and verification of the three-voice chord table.

For every in-octave three-voice chord the table lists the optimal layout and
total dissonance under one, two and three panorama points.  The check
compares those computed values against the bundled reference rows: exact
totals everywhere, the full layout for the three-point rows, and the edge
partition (polarity aside, which carries no dissonance information) for the
two-point rows.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .enumeration import ChordId, unrank
from .model import CENTER, LEFT, RIGHT, Chord, PanPosition
from .optimizer import OptimizerConfig, PanMode, optimize
from .reference import REFERENCE_ROWS
from .render import assignment_notation, number

TABLE_VOICES = 3

_SIGN_TO_POSITION = {"-": LEFT, "+": RIGHT, "": CENTER}


def parse_composition(composition: str) -> List[Tuple[int, PanPosition]]:
    """Sign notation back into (offset, position) pairs."""
    out = []
    for part in composition.split(","):
        part = part.strip()
        sign = part[-1] if part[-1] in "-+" else ""
        out.append((int(part.rstrip("-+")), _SIGN_TO_POSITION[sign]))
    return out


def edge_partition(pairs: List[Tuple[int, PanPosition]]) -> frozenset:
    """The two edge groups as an unordered pair of offset sets."""
    return frozenset((
        frozenset(o for o, p in pairs if p is LEFT),
        frozenset(o for o, p in pairs if p is RIGHT),
    ))


def computed_table(voices: int = TABLE_VOICES) -> List[dict]:
    """Computed layout and total per panorama mode for every in-octave chord."""
    if voices != TABLE_VOICES:
        raise ValueError(f"only {TABLE_VOICES}-voice tables are supported, got {voices}")
    rows = []
    for a in range(1, 56):
        chord_id = ChordId(voices, a)
        offsets = unrank(chord_id)
        chord = Chord.from_offsets(offsets)
        modes = {}
        for mode in (PanMode.FIXED1, PanMode.FIXED2, PanMode.FIXED3):
            report = optimize(chord, OptimizerConfig(mode=mode))
            modes[mode.value] = {
                "tdiss": number(report.total),
                "assignment": assignment_notation(chord, report.assignment),
            }
        rows.append({
            "id": str(chord_id),
            "composition": list(offsets),
            "modes": modes,
        })
    return rows


def check_reference() -> Tuple[int, int, List[str]]:
    """Compare computed values with the bundled reference rows.

    Returns (matching rows, total rows, mismatch descriptions).
    """
    computed: Dict[str, dict] = {row["id"]: row for row in computed_table()}
    matches = 0
    problems = []
    for row in REFERENCE_ROWS:
        mine = computed[str(row.chord_id)]["modes"][str(row.ppn)]
        label = f"{row.chord_id} ppn{row.ppn}"
        if mine["tdiss"] != row.tdiss:
            problems.append(f"{label}: total {mine['tdiss']} != {row.tdiss}")
            continue
        if row.ppn in (1, 3):
            if mine["assignment"] != row.composition:
                problems.append(
                    f"{label}: layout {mine['assignment']!r} != {row.composition!r}")
                continue
        else:
            want = edge_partition(parse_composition(row.composition))
            got = edge_partition(parse_composition(mine["assignment"]))
            if want != got:
                problems.append(
                    f"{label}: partition {mine['assignment']!r} != {row.composition!r}")
                continue
        matches += 1
    return matches, len(REFERENCE_ROWS), problems
