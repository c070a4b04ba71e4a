"""Shared test utilities: hand-rolled SMF bytes and random timeline data."""

from __future__ import annotations

import random
import struct
from typing import List

from dichotic.midi import (
    ChannelAftertouch,
    ControlChange,
    EndOfTrack,
    EventTimeline,
    MetaEvent,
    NoteOff,
    NoteOn,
    PitchBend,
    ProgramChange,
    SysExEvent,
    TempoChange,
)


def smf_bytes(*tracks: bytes, fmt: int = 0, division: int = 480) -> bytes:
    """Assemble raw SMF bytes from already-encoded track payloads."""
    out = b"MThd" + struct.pack(">IHHH", 6, fmt, len(tracks), division)
    for track in tracks:
        out += b"MTrk" + struct.pack(">I", len(track)) + track
    return out


def chord_file_bytes(pitches, velocity: int = 100, duration: int = 960,
                     division: int = 480) -> bytes:
    """A format-0 file holding one block chord, built byte by byte."""
    track = bytearray()
    for pitch in pitches:
        track += bytes([0x00, 0x90, pitch, velocity])
    first = True
    for pitch in pitches:
        delta = duration if first else 0
        first = False
        track += encode_vlq(delta) + bytes([0x80, pitch, 64])
    track += bytes([0x00, 0xFF, 0x2F, 0x00])
    return smf_bytes(bytes(track), division=division)


def encode_vlq(value: int) -> bytes:
    out = [value & 0x7F]
    value >>= 7
    while value:
        out.append(0x80 | (value & 0x7F))
        value >>= 7
    return bytes(reversed(out))


def random_timeline(rng: random.Random, max_tracks: int = 3,
                    notes_per_track: int = 12, channels: int = 16,
                    max_open: int = 4) -> EventTimeline:
    """A random but well-formed timeline: paired notes, assorted other events.

    ``max_open`` caps simultaneously sounding notes per track, which keeps
    repanned chord sizes within the optimizer's search limits.
    """
    division = rng.choice((96, 120, 480, 960))
    tracks: List[list] = []
    for track_index in range(rng.randint(1, max_tracks)):
        events = []
        tick = 0
        open_notes = {}
        for _ in range(rng.randint(1, notes_per_track)):
            tick += rng.randint(0, division)
            roll = rng.random()
            if (roll < 0.55 and len(open_notes) < max_open) or not open_notes:
                channel = rng.randrange(channels)
                note = rng.randrange(128)
                if (channel, note) in open_notes:
                    continue
                events.append(NoteOn(tick, channel, note, rng.randint(1, 127)))
                open_notes[(channel, note)] = tick
            elif roll < 0.8:
                channel, note = rng.choice(list(open_notes))
                del open_notes[(channel, note)]
                events.append(NoteOff(tick, channel, note, rng.randint(0, 127)))
            elif roll < 0.86:
                events.append(ControlChange(tick, rng.randrange(16),
                                            rng.randrange(120), rng.randrange(128)))
            elif roll < 0.9:
                events.append(ProgramChange(tick, rng.randrange(16), rng.randrange(128)))
            elif roll < 0.93:
                events.append(PitchBend(tick, rng.randrange(16), rng.randrange(16384)))
            elif roll < 0.95:
                events.append(ChannelAftertouch(tick, rng.randrange(16),
                                                rng.randrange(128)))
            elif roll < 0.97:
                events.append(TempoChange(tick, rng.randint(200_000, 1_200_000)))
            elif roll < 0.99:
                events.append(MetaEvent(tick, 0x01, bytes(rng.randrange(256)
                                                          for _ in range(rng.randint(0, 8)))))
            else:
                events.append(SysExEvent(tick, 0xF0, bytes(rng.randrange(128)
                                                           for _ in range(rng.randint(0, 6)))))
        for channel, note in sorted(open_notes):
            tick += rng.randint(0, division)
            events.append(NoteOff(tick, channel, note, 0))
        events.append(EndOfTrack(tick))
        tracks.append(events)
    return EventTimeline(ticks_per_quarter=division, tracks=tracks)


def melody_timeline(pitches, duration: int = 240, division: int = 480,
                    velocity: int = 100) -> EventTimeline:
    """Sequential non-overlapping notes on channel 0."""
    events = []
    tick = 0
    for pitch in pitches:
        events.append(NoteOn(tick, 0, pitch, velocity))
        events.append(NoteOff(tick + duration, 0, pitch, 0))
        tick += duration
    events.append(EndOfTrack(tick))
    return EventTimeline(ticks_per_quarter=division, tracks=[events])
