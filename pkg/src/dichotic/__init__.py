"""Dissonance-minimizing stereo panning of chords for headphone listening."""

from .enumeration import ChordId, first_chord, rank, successor, unrank
from .model import (
    CENTER,
    DEFAULT_TABLE,
    LEFT,
    RIGHT,
    Chord,
    DissonanceReport,
    IntervalDissonanceTable,
    PairContribution,
    PanAssignment,
    PanPosition,
    Voice,
    pair_dissonance,
    total_dissonance,
)
from .midi import (
    ChordSegment,
    EventTimeline,
    NoteSpan,
    RepanLayout,
    SmfParseError,
    parse_smf,
    repan,
    segment_chords,
    write_smf,
)
from .optimizer import (
    EmptyAssignmentSpaceError,
    OptimizerConfig,
    PanMode,
    SortMode,
    accord_chain,
    assignment_space,
    normalize_polarity,
    optimize,
)
from .render import assignment_notation, report_to_dict

__version__ = "0.1.0"

__all__ = [
    "CENTER",
    "Chord",
    "ChordId",
    "ChordSegment",
    "DEFAULT_TABLE",
    "DissonanceReport",
    "EmptyAssignmentSpaceError",
    "EventTimeline",
    "IntervalDissonanceTable",
    "LEFT",
    "NoteSpan",
    "OptimizerConfig",
    "PairContribution",
    "PanAssignment",
    "PanMode",
    "PanPosition",
    "RIGHT",
    "RepanLayout",
    "SmfParseError",
    "SortMode",
    "Voice",
    "accord_chain",
    "assignment_notation",
    "assignment_space",
    "first_chord",
    "normalize_polarity",
    "optimize",
    "pair_dissonance",
    "parse_smf",
    "rank",
    "repan",
    "report_to_dict",
    "segment_chords",
    "successor",
    "total_dissonance",
    "unrank",
    "write_smf",
]
