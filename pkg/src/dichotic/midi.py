"""Standard MIDI File parsing, writing, chord segmentation and repanning.

Files of format 0 and 1 are read into an absolute-tick event timeline
(running status honored, unknown meta events kept opaquely) and written back
as format 1.  Parse errors carry the byte offset of the offending data.

Repanning groups note onsets into chord segments, asks the optimizer for a
panorama layout per segment, and reroutes each note to one of three output
channels hard-panned left/center/right via controller 10.  A note that is
still sounding when a new chord starts keeps its channel (a sounding MIDI
note cannot move without retriggering), but it still participates in the new
segment's dissonance score.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple, Union

from .model import CENTER, DEFAULT_TABLE, LEFT, RIGHT, Chord, DissonanceReport, \
    IntervalDissonanceTable, Voice
from .optimizer import OptimizerConfig, PanMode, optimize

PAN_CONTROLLER = 10
PAN_VALUES = {LEFT: 0, CENTER: 64, RIGHT: 127}


class SmfParseError(ValueError):
    """Malformed MIDI data; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


# ---------------------------------------------------------------------------
# events

@dataclass(frozen=True)
class NoteOn:
    tick: int
    channel: int
    note: int
    velocity: int  # 1..127; velocity-0 note-ons are normalized to NoteOff


@dataclass(frozen=True)
class NoteOff:
    tick: int
    channel: int
    note: int
    velocity: int = 0


@dataclass(frozen=True)
class PolyAftertouch:
    tick: int
    channel: int
    note: int
    value: int


@dataclass(frozen=True)
class ControlChange:
    tick: int
    channel: int
    controller: int
    value: int


@dataclass(frozen=True)
class ProgramChange:
    tick: int
    channel: int
    program: int


@dataclass(frozen=True)
class ChannelAftertouch:
    tick: int
    channel: int
    value: int


@dataclass(frozen=True)
class PitchBend:
    tick: int
    channel: int
    value: int  # 0..16383, center 8192


@dataclass(frozen=True)
class TempoChange:
    tick: int
    microseconds_per_quarter: int


@dataclass(frozen=True)
class EndOfTrack:
    tick: int


@dataclass(frozen=True)
class MetaEvent:
    """Any meta event we do not interpret, kept byte-for-byte."""

    tick: int
    meta_type: int
    data: bytes


@dataclass(frozen=True)
class SysExEvent:
    tick: int
    status: int  # 0xF0 or 0xF7
    data: bytes


Event = Union[NoteOn, NoteOff, PolyAftertouch, ControlChange, ProgramChange,
              ChannelAftertouch, PitchBend, TempoChange, EndOfTrack, MetaEvent,
              SysExEvent]

_CHANNEL_WIDE = (ControlChange, ProgramChange, ChannelAftertouch, PitchBend,
                 PolyAftertouch)
_CONDUCTOR = (TempoChange, MetaEvent, SysExEvent)


@dataclass
class EventTimeline:
    """Absolute-tick events per track, plus the tick resolution."""

    ticks_per_quarter: int = 480
    tracks: List[List[Event]] = field(default_factory=list)


# ---------------------------------------------------------------------------
# parsing

class _Reader:
    """Byte cursor over SMF data that reports offsets on truncation."""

    def __init__(self, data: bytes, pos: int = 0, end: Optional[int] = None):
        self.data = data
        self.pos = pos
        self.end = len(data) if end is None else end

    def remaining(self) -> int:
        return self.end - self.pos

    def u8(self, what: str = "byte") -> int:
        if self.pos >= self.end:
            raise SmfParseError(f"truncated data, expected {what}", self.pos)
        value = self.data[self.pos]
        self.pos += 1
        return value

    def data_byte(self, what: str) -> int:
        offset = self.pos
        value = self.u8(what)
        if value & 0x80:
            raise SmfParseError(f"expected {what}, got status byte 0x{value:02x}", offset)
        return value

    def raw(self, n: int, what: str) -> bytes:
        if self.remaining() < n:
            raise SmfParseError(f"truncated data, expected {n} bytes of {what}", self.pos)
        chunk = self.data[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def u16(self, what: str) -> int:
        return struct.unpack(">H", self.raw(2, what))[0]

    def u32(self, what: str) -> int:
        return struct.unpack(">I", self.raw(4, what))[0]

    def vlq(self, what: str) -> int:
        value = 0
        for _ in range(4):
            byte = self.u8(what)
            value = (value << 7) | (byte & 0x7F)
            if not byte & 0x80:
                return value
        raise SmfParseError(f"variable-length {what} longer than 4 bytes", self.pos)


def parse_smf(data: bytes) -> EventTimeline:
    """Decode a format-0 or format-1 Standard MIDI File.

    The timeline is lossless for every event kind we model; unrecognized
    meta events are preserved opaquely.  A note-on left open at the end of
    its track is an error, as are truncated chunks, SMPTE time division and
    format 2.
    """
    reader = _Reader(data)
    if reader.raw(4, "header magic") != b"MThd":
        raise SmfParseError("not a Standard MIDI File (missing MThd)", 0)
    header_len = reader.u32("header length")
    if header_len < 6:
        raise SmfParseError(f"header chunk too short ({header_len} bytes)", reader.pos - 4)
    fmt = reader.u16("format")
    ntracks = reader.u16("track count")
    division = reader.u16("time division")
    reader.raw(header_len - 6, "header padding")
    if fmt == 2:
        raise SmfParseError("format 2 files are not supported", 8)
    if fmt not in (0, 1):
        raise SmfParseError(f"unknown SMF format {fmt}", 8)
    if division & 0x8000:
        raise SmfParseError("SMPTE time division is not supported", 12)
    if division == 0:
        raise SmfParseError("time division of 0 ticks per quarter", 12)

    tracks = []
    while len(tracks) < ntracks:
        chunk_start = reader.pos
        chunk_type = reader.raw(4, "chunk type")
        chunk_len = reader.u32("chunk length")
        if reader.remaining() < chunk_len:
            raise SmfParseError(
                f"truncated track chunk: {chunk_len} bytes declared, "
                f"{reader.remaining()} available", chunk_start)
        if chunk_type != b"MTrk":
            reader.pos += chunk_len  # SMF 1.0: readers skip alien chunk types
            continue
        track_reader = _Reader(data, reader.pos, reader.pos + chunk_len)
        tracks.append(_parse_track(track_reader))
        reader.pos += chunk_len
    return EventTimeline(ticks_per_quarter=division, tracks=tracks)


def _parse_track(reader: _Reader) -> List[Event]:
    events: List[Event] = []
    tick = 0
    running_status: Optional[int] = None
    open_notes: Dict[Tuple[int, int], List[int]] = {}  # (channel, note) -> on offsets
    saw_end = False
    while reader.remaining() > 0 and not saw_end:
        tick += reader.vlq("delta time")
        status_offset = reader.pos
        status = reader.u8("status byte")
        if not status & 0x80:
            if running_status is None:
                raise SmfParseError("data byte with no running status", status_offset)
            status = running_status
            reader.pos = status_offset  # the byte belongs to the event data
        if status == 0xFF:
            running_status = None
            meta_type = reader.u8("meta type")
            length = reader.vlq("meta length")
            payload = reader.raw(length, "meta data")
            if meta_type == 0x2F:
                events.append(EndOfTrack(tick))
                saw_end = True
            elif meta_type == 0x51:
                if length != 3:
                    raise SmfParseError(f"tempo event with length {length}", status_offset)
                events.append(TempoChange(tick, int.from_bytes(payload, "big")))
            else:
                events.append(MetaEvent(tick, meta_type, payload))
        elif status in (0xF0, 0xF7):
            running_status = None
            length = reader.vlq("sysex length")
            events.append(SysExEvent(tick, status, reader.raw(length, "sysex data")))
        elif status >= 0xF8 or (0xF1 <= status <= 0xF6):
            raise SmfParseError(f"unexpected system byte 0x{status:02x} in track",
                                status_offset)
        else:
            running_status = status
            kind = status >> 4
            channel = status & 0x0F
            if kind == 0x9:
                note = reader.data_byte("note number")
                velocity = reader.data_byte("velocity")
                if velocity == 0:
                    events.append(NoteOff(tick, channel, note, 0))
                    _close_note(open_notes, channel, note)
                else:
                    events.append(NoteOn(tick, channel, note, velocity))
                    open_notes.setdefault((channel, note), []).append(status_offset)
            elif kind == 0x8:
                note = reader.data_byte("note number")
                velocity = reader.data_byte("release velocity")
                events.append(NoteOff(tick, channel, note, velocity))
                _close_note(open_notes, channel, note)
            elif kind == 0xA:
                note = reader.data_byte("note number")
                events.append(PolyAftertouch(tick, channel, note,
                                             reader.data_byte("pressure")))
            elif kind == 0xB:
                controller = reader.data_byte("controller number")
                events.append(ControlChange(tick, channel, controller,
                                            reader.data_byte("controller value")))
            elif kind == 0xC:
                events.append(ProgramChange(tick, channel,
                                            reader.data_byte("program number")))
            elif kind == 0xD:
                events.append(ChannelAftertouch(tick, channel,
                                                reader.data_byte("pressure")))
            else:  # kind == 0xE
                lsb = reader.data_byte("pitch bend LSB")
                msb = reader.data_byte("pitch bend MSB")
                events.append(PitchBend(tick, channel, (msb << 7) | lsb))
    for (channel, note), offsets in open_notes.items():
        if offsets:
            raise SmfParseError(
                f"note {note} on channel {channel} has no note-off", offsets[0])
    if not saw_end:
        events.append(EndOfTrack(tick))
    return events


def _close_note(open_notes: Dict[Tuple[int, int], List[int]], channel: int,
                note: int) -> None:
    stack = open_notes.get((channel, note))
    if stack:
        stack.pop(0)


# ---------------------------------------------------------------------------
# writing

def _check_range(value: int, lo: int, hi: int, what: str) -> int:
    if not lo <= value <= hi:
        raise ValueError(f"{what} {value} outside {lo}..{hi}")
    return value


def _encode_vlq(value: int) -> bytes:
    if value < 0:
        raise ValueError(f"cannot encode negative delta {value}")
    out = [value & 0x7F]
    value >>= 7
    while value:
        out.append(0x80 | (value & 0x7F))
        value >>= 7
    return bytes(reversed(out))


def _encode_event(event: Event) -> bytes:
    if isinstance(event, NoteOn):
        return bytes((0x90 | _check_range(event.channel, 0, 15, "channel"),
                      _check_range(event.note, 0, 127, "note"),
                      _check_range(event.velocity, 1, 127, "note-on velocity")))
    if isinstance(event, NoteOff):
        return bytes((0x80 | _check_range(event.channel, 0, 15, "channel"),
                      _check_range(event.note, 0, 127, "note"),
                      _check_range(event.velocity, 0, 127, "release velocity")))
    if isinstance(event, PolyAftertouch):
        return bytes((0xA0 | _check_range(event.channel, 0, 15, "channel"),
                      _check_range(event.note, 0, 127, "note"),
                      _check_range(event.value, 0, 127, "pressure")))
    if isinstance(event, ControlChange):
        return bytes((0xB0 | _check_range(event.channel, 0, 15, "channel"),
                      _check_range(event.controller, 0, 127, "controller"),
                      _check_range(event.value, 0, 127, "controller value")))
    if isinstance(event, ProgramChange):
        return bytes((0xC0 | _check_range(event.channel, 0, 15, "channel"),
                      _check_range(event.program, 0, 127, "program")))
    if isinstance(event, ChannelAftertouch):
        return bytes((0xD0 | _check_range(event.channel, 0, 15, "channel"),
                      _check_range(event.value, 0, 127, "pressure")))
    if isinstance(event, PitchBend):
        value = _check_range(event.value, 0, 16383, "pitch bend")
        return bytes((0xE0 | _check_range(event.channel, 0, 15, "channel"),
                      value & 0x7F, value >> 7))
    if isinstance(event, TempoChange):
        tempo = _check_range(event.microseconds_per_quarter, 1, 0xFFFFFF, "tempo")
        return bytes((0xFF, 0x51, 0x03)) + tempo.to_bytes(3, "big")
    if isinstance(event, MetaEvent):
        _check_range(event.meta_type, 0, 127, "meta type")
        return bytes((0xFF, event.meta_type)) + _encode_vlq(len(event.data)) + event.data
    if isinstance(event, SysExEvent):
        if event.status not in (0xF0, 0xF7):
            raise ValueError(f"sysex status must be 0xF0 or 0xF7, got {event.status:#x}")
        return bytes((event.status,)) + _encode_vlq(len(event.data)) + event.data
    if isinstance(event, EndOfTrack):
        return bytes((0xFF, 0x2F, 0x00))
    raise TypeError(f"cannot encode {event!r}")


def write_smf(timeline: EventTimeline) -> bytes:
    """Encode a timeline as a format-1 Standard MIDI File.

    Parsing the result yields an event-equal timeline; encoding details
    (running status, delta packing) are not preserved.  Tracks missing a
    final end-of-track marker get one at their last event's tick.
    """
    _check_range(timeline.ticks_per_quarter, 1, 0x7FFF, "ticks per quarter")
    tracks = timeline.tracks if timeline.tracks else [[]]
    body = bytearray()
    body += b"MThd" + struct.pack(">IHHH", 6, 1, len(tracks), timeline.ticks_per_quarter)
    for index, events in enumerate(tracks):
        chunk = bytearray()
        tick = 0
        for position, event in enumerate(events):
            if isinstance(event, EndOfTrack) and position != len(events) - 1:
                raise ValueError(f"end-of-track mid-way through track {index}")
            if event.tick < tick:
                raise ValueError(
                    f"track {index} events out of order at tick {event.tick}")
            chunk += _encode_vlq(event.tick - tick)
            chunk += _encode_event(event)
            tick = event.tick
        if not events or not isinstance(events[-1], EndOfTrack):
            chunk += _encode_vlq(0) + _encode_event(EndOfTrack(tick))
        body += b"MTrk" + struct.pack(">I", len(chunk)) + chunk
    return bytes(body)


# ---------------------------------------------------------------------------
# chord segmentation

@dataclass(frozen=True)
class NoteSpan:
    """One note's full life: matched note-on/note-off pair."""

    pitch: int
    velocity: int
    channel: int
    track: int
    on_tick: int
    off_tick: int
    off_velocity: int = 0


@dataclass(frozen=True)
class ChordSegment:
    """Notes grouped around one onset, plus anything still sounding there.

    ``spans`` is index-aligned with ``chord.voices``; ``is_new`` marks the
    spans whose onset belongs to this segment (each input note is new in
    exactly one segment).
    """

    onset_tick: int
    chord: Chord
    spans: Tuple[NoteSpan, ...]
    is_new: Tuple[bool, ...]


def collect_note_spans(timeline: EventTimeline) -> List[NoteSpan]:
    """Matched note pairs across all tracks, ordered by onset."""
    spans = []
    for track_index, events in enumerate(timeline.tracks):
        open_notes: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        for event in events:
            if isinstance(event, NoteOn):
                key = (event.channel, event.note)
                open_notes.setdefault(key, []).append((event.tick, event.velocity))
            elif isinstance(event, NoteOff):
                stack = open_notes.get((event.channel, event.note))
                if stack:
                    on_tick, velocity = stack.pop(0)
                    spans.append(NoteSpan(event.note, velocity, event.channel,
                                          track_index, on_tick, event.tick,
                                          event.velocity))
    spans.sort(key=lambda s: (s.on_tick, s.track, s.channel, s.pitch))
    return spans


def segment_chords(timeline: EventTimeline, window_ticks: int) -> List[ChordSegment]:
    """Cluster note onsets into chord segments.

    A note opens a new segment unless its onset falls within ``window_ticks``
    of the open segment's onset.  Notes from earlier segments that are still
    sounding at a segment's onset join that segment's chord (they shape its
    dissonance) but are not new members of it.
    """
    if window_ticks < 0:
        raise ValueError(f"window_ticks must be non-negative, got {window_ticks}")
    spans = collect_note_spans(timeline)
    groups: List[List[NoteSpan]] = []
    for span in spans:
        if groups and span.on_tick - groups[-1][0].on_tick <= window_ticks:
            groups[-1].append(span)
        else:
            groups.append([span])
    segments = []
    for index, group in enumerate(groups):
        onset = group[0].on_tick
        held = [span for earlier in groups[:index] for span in earlier
                if span.off_tick > onset]
        members = sorted(held + group,
                         key=lambda s: (s.pitch, s.on_tick, s.track, s.channel))
        chord = Chord(tuple(Voice(s.pitch, s.velocity) for s in members))
        segments.append(ChordSegment(
            onset_tick=onset,
            chord=chord,
            spans=tuple(members),
            is_new=tuple(s.on_tick >= onset for s in members)))
    return segments


# ---------------------------------------------------------------------------
# repanning

@dataclass(frozen=True)
class RepanLayout:
    """Output channels for the three panorama points."""

    channel_left: int = 0
    channel_center: int = 1
    channel_right: int = 2

    def __post_init__(self) -> None:
        channels = (self.channel_left, self.channel_center, self.channel_right)
        if len(set(channels)) != 3:
            raise ValueError(f"layout channels must be distinct, got {channels}")
        for channel in channels:
            _check_range(channel, 0, 15, "layout channel")

    def channel_for(self, position) -> int:
        if position is LEFT:
            return self.channel_left
        if position is RIGHT:
            return self.channel_right
        return self.channel_center

    @property
    def channels(self) -> Tuple[int, int, int]:
        return (self.channel_left, self.channel_center, self.channel_right)


def _effective_mode(mode: PanMode, n: int) -> PanMode:
    """Degrade a fixed multi-point mode when the chord is too small for it."""
    if mode is PanMode.FIXED3 and n < 3:
        return PanMode.FIXED2 if n == 2 else PanMode.FIXED1
    if mode is PanMode.FIXED2 and n < 2:
        return PanMode.FIXED1
    return mode


# Same-tick ordering: controls and programs precede notes; note-offs closing
# earlier notes precede new note-ons; a zero-length note's on/off pair stays
# adjacent between the two so re-parsing never sees a dangling or mispaired
# note.
_PRIORITY_CONTROL = 0
_PRIORITY_PROGRAM = 1
_PRIORITY_OTHER = 2
_PRIORITY_NOTE_OFF = 3
_PRIORITY_ZERO_PAIR = 4
_PRIORITY_NOTE_ON = 6

_SHARED_PRIORITY = {
    ControlChange: _PRIORITY_CONTROL,
    ProgramChange: _PRIORITY_PROGRAM,
    ChannelAftertouch: _PRIORITY_OTHER,
    PolyAftertouch: _PRIORITY_OTHER,
    PitchBend: _PRIORITY_OTHER,
}


def _finish_track(items: List[Tuple[int, Event]]) -> List[Event]:
    """Order (priority, event) pairs by tick then priority and close the track."""
    indexed = [(event.tick, priority, index, event)
               for index, (priority, event) in enumerate(items)]
    indexed.sort(key=lambda item: item[:3])
    ordered = [event for _, _, _, event in indexed]
    last_tick = ordered[-1].tick if ordered else 0
    ordered.append(EndOfTrack(last_tick))
    return ordered


def repan_segments(timeline: EventTimeline, config: OptimizerConfig,
                   layout: RepanLayout = RepanLayout(),
                   table: IntervalDissonanceTable = DEFAULT_TABLE,
                   window_ticks: Optional[int] = None,
                   ) -> Tuple[EventTimeline, List[Tuple[ChordSegment, DissonanceReport]]]:
    """Repan a timeline and keep each report paired with its segment.

    The output has a conductor track (tempo and other meta data merged from
    the input) plus one track per panorama point, each hard-panned via
    controller 10 at tick 0.  Program changes and other channel-wide input
    messages are replicated to all three output channels so every routed
    note keeps its timbre; incoming pan controllers are dropped.  The note
    multiset (pitch, onset, duration, velocity) is untouched, with one wire
    format caveat: when two same-pitch notes from different input channels
    overlap on one output channel, MIDI cannot express which note-off ends
    which note, so durations may pair up differently on re-parse.
    """
    if window_ticks is None:
        window_ticks = timeline.ticks_per_quarter // 8
    segments = segment_chords(timeline, window_ticks)

    routed: List[Tuple[NoteSpan, int]] = []
    results = []
    for segment in segments:
        mode = _effective_mode(config.mode, len(segment.chord))
        segment_config = replace(config, mode=mode)
        report = optimize(segment.chord, segment_config, table)
        for span, new, position in zip(segment.spans, segment.is_new,
                                       report.assignment.positions):
            if new:
                routed.append((span, layout.channel_for(position)))
        results.append((segment, report))

    conductor: List[Tuple[int, Event]] = []
    shared: List[Event] = []
    for events in timeline.tracks:
        for event in events:
            if isinstance(event, _CONDUCTOR):
                conductor.append((_PRIORITY_CONTROL, event))
            elif isinstance(event, _CHANNEL_WIDE):
                if isinstance(event, ControlChange) and event.controller == PAN_CONTROLLER:
                    continue
                shared.append(event)

    voice_tracks: List[List[Tuple[int, Event]]] = []
    for position in (LEFT, CENTER, RIGHT):
        channel = layout.channel_for(position)
        items: List[Tuple[int, Event]] = [
            (_PRIORITY_CONTROL, ControlChange(0, channel, PAN_CONTROLLER,
                                              PAN_VALUES[position]))]
        items.extend((_SHARED_PRIORITY[type(event)], replace(event, channel=channel))
                     for event in shared)
        voice_tracks.append(items)

    by_channel = {layout.channel_for(p): voice_tracks[i]
                  for i, p in enumerate((LEFT, CENTER, RIGHT))}
    for span, channel in routed:
        zero_length = span.on_tick == span.off_tick
        on_priority = _PRIORITY_ZERO_PAIR if zero_length else _PRIORITY_NOTE_ON
        off_priority = _PRIORITY_ZERO_PAIR + 1 if zero_length else _PRIORITY_NOTE_OFF
        by_channel[channel].append(
            (on_priority, NoteOn(span.on_tick, channel, span.pitch, span.velocity)))
        by_channel[channel].append(
            (off_priority, NoteOff(span.off_tick, channel, span.pitch,
                                   span.off_velocity)))

    out = EventTimeline(
        ticks_per_quarter=timeline.ticks_per_quarter,
        tracks=[_finish_track(conductor)] + [_finish_track(t) for t in voice_tracks])
    return out, results


def repan(timeline: EventTimeline, config: OptimizerConfig,
          layout: RepanLayout = RepanLayout(),
          table: IntervalDissonanceTable = DEFAULT_TABLE,
          window_ticks: Optional[int] = None,
          ) -> Tuple[EventTimeline, List[DissonanceReport]]:
    """Repan a timeline; returns the new timeline and one report per segment."""
    out, results = repan_segments(timeline, config, layout, table, window_ticks)
    return out, [report for _, report in results]
