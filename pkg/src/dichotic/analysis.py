"""Analysis requests: one validation and execution path for CLI and HTTP.

A request names a chord either by identifier (``"3v18"``) or by explicit
MIDI notes with optional per-note velocities, plus the optimizer knobs.
Both front ends funnel through :func:`analyze_payload`, so a given logical
request produces the same JSON report everywhere.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .enumeration import ChordId, unrank
from .model import Chord, IntervalDissonanceTable, DEFAULT_TABLE
from .optimizer import OptimizerConfig, PanMode, optimize
from .render import report_to_dict


class RequestError(ValueError):
    """A malformed analysis request (bad fields, ranges or combinations)."""


_KNOWN_KEYS = {"chord_id", "notes", "velocities", "mode", "thresholds",
               "base_note", "swap_channels", "table"}


def _require_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise RequestError(f"{what} must be an integer, got {value!r}")
    return value


def build_table(payload: Optional[dict]) -> IntervalDissonanceTable:
    """An interval table from its JSON form, or the default when absent."""
    if payload is None:
        return DEFAULT_TABLE
    if not isinstance(payload, dict):
        raise RequestError("table override must be an object")
    unknown = set(payload) - {"values", "octave_increment"}
    if unknown:
        raise RequestError(f"unknown table fields: {sorted(unknown)}")
    values = payload.get("values", DEFAULT_TABLE.values)
    increment = payload.get("octave_increment", DEFAULT_TABLE.octave_increment)
    try:
        return IntervalDissonanceTable(tuple(values), _require_int(increment, "octave_increment"))
    except (TypeError, ValueError) as exc:
        raise RequestError(f"bad interval table: {exc}") from exc


def build_config(payload: dict) -> OptimizerConfig:
    mode = PanMode.FIXED3
    if "mode" in payload:
        try:
            mode = PanMode.parse(payload["mode"])
        except ValueError as exc:
            raise RequestError(str(exc)) from exc
    thresholds = dict(OptimizerConfig().thresholds)
    raw_thresholds = payload.get("thresholds") or {}
    if not isinstance(raw_thresholds, dict):
        raise RequestError("thresholds must be an object of voice count to value")
    for key, value in raw_thresholds.items():
        thresholds[int(key)] = _require_int(value, "threshold")
    base_note = _require_int(payload.get("base_note", 60), "base_note")
    swap = payload.get("swap_channels", False)
    if not isinstance(swap, bool):
        raise RequestError("swap_channels must be a boolean")
    try:
        return OptimizerConfig(mode=mode, thresholds=thresholds,
                               base_note=base_note, swap_channels=swap)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc


def build_chord(payload: dict, config: OptimizerConfig) -> Tuple[Chord, Optional[ChordId]]:
    chord_id = payload.get("chord_id")
    notes = payload.get("notes")
    if (chord_id is None) == (notes is None):
        raise RequestError("give exactly one of chord_id or notes")
    if chord_id is not None:
        if payload.get("velocities") is not None:
            raise RequestError("velocities only combine with explicit notes")
        try:
            cid = chord_id if isinstance(chord_id, ChordId) else ChordId.parse(str(chord_id))
            offsets = unrank(cid)
            return Chord.from_offsets(offsets, base_note=config.base_note), cid
        except ValueError as exc:
            raise RequestError(f"bad chord id: {exc}") from exc
    if not isinstance(notes, (list, tuple)) or not notes:
        raise RequestError("notes must be a non-empty list of MIDI note numbers")
    pitches = [_require_int(n, "note") for n in notes]
    velocities = payload.get("velocities")
    if velocities is not None:
        if not isinstance(velocities, (list, tuple)):
            raise RequestError("velocities must be a list")
        velocities = [_require_int(v, "velocity") for v in velocities]
    try:
        return Chord.from_pitches(pitches, velocities), None
    except ValueError as exc:
        raise RequestError(str(exc)) from exc


def analyze_payload(payload: dict) -> dict:
    """Run one analysis request and return the canonical report dict."""
    if not isinstance(payload, dict):
        raise RequestError("request body must be a JSON object")
    unknown = set(payload) - _KNOWN_KEYS
    if unknown:
        raise RequestError(f"unknown request fields: {sorted(unknown)}")
    config = build_config(payload)
    table = build_table(payload.get("table"))
    chord, chord_id = build_chord(payload, config)
    try:
        report = optimize(chord, config, table)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    result = report_to_dict(report)
    result["chord_id"] = str(chord_id) if chord_id is not None else None
    return result
