"""Canonical enumeration of N-voice chords and the "NvA" identifier.

A chord shape is written as strictly increasing semitone offsets anchored at
zero, e.g. ``(0, 4, 7)``.  Shapes with the same voice count are enumerated
starting from the tightest cluster ``(0, 1, ..., n-1)``; each step nudges the
voice just under the top up one semitone, and when that would run into the
top voice the next voice down moves instead, pulling the ones above it back
down next to itself.  When no inner voice can move the top voice itself
steps up and the inner voices reset to the tightest packing.  The resulting
order sorts by top voice first, then by the inner voices as an ordinary
ascending combination sequence.

``"3v19"`` means the 19th three-voice shape in that order (the major triad).
Ranking is computed combinatorially, so the scheme is unbounded upward;
``successor`` walks the same order one step at a time and doubles as an
independent cross-check in the tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Tuple

_ID_RE = re.compile(r"^(\d+)v(\d+)$")


@dataclass(frozen=True, order=True)
class ChordId:
    """Identifier ``NvA``: ordinal ``a`` within the n-voice enumeration."""

    n: int
    a: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"chord id needs at least 2 voices, got {self.n}")
        if self.a < 1:
            raise ValueError(f"chord ordinal starts at 1, got {self.a}")

    def __str__(self) -> str:
        return f"{self.n}v{self.a}"

    @classmethod
    def parse(cls, text: str) -> "ChordId":
        m = _ID_RE.match(text.strip())
        if not m:
            raise ValueError(f"malformed chord id {text!r}, expected like '3v19'")
        return cls(int(m.group(1)), int(m.group(2)))


def check_offsets(offsets) -> Tuple[int, ...]:
    """Validate a chord shape: strictly increasing offsets anchored at 0."""
    offsets = tuple(int(o) for o in offsets)
    if len(offsets) < 2:
        raise ValueError("a chord shape needs at least 2 voices")
    if offsets[0] != 0:
        raise ValueError(f"chord shape must start at offset 0, got {offsets}")
    if any(b <= a for a, b in zip(offsets, offsets[1:])):
        raise ValueError(f"offsets must be strictly increasing, got {offsets}")
    return offsets


def first_chord(n: int) -> Tuple[int, ...]:
    """The tightest n-voice shape: every voice one semitone apart."""
    if n < 2:
        raise ValueError(f"need at least 2 voices, got {n}")
    return tuple(range(n))


def successor(offsets) -> Tuple[int, ...]:
    """The next shape in enumeration order.

    Scanning inner voices from the top down, the first one that can move up a
    semitone (leaving room for the voices above it, packed one semitone
    apart, below the top voice) does so and pulls those upper inner voices
    down next to itself.  If no inner voice can move, the top voice moves up
    and all inner voices reset to the tightest cluster.
    """
    p = list(check_offsets(offsets))
    n = len(p)
    top = p[-1]
    for k in range(n - 2, 0, -1):
        # voices k+1..n-2 need the slots right above the moved voice
        if p[k] + 1 + (n - 2 - k) < top:
            p[k] += 1
            for j in range(k + 1, n - 1):
                p[j] = p[k] + (j - k)
            return tuple(p)
    return (0,) + tuple(range(1, n - 1)) + (top + 1,)


def rank(offsets) -> ChordId:
    """The identifier of a chord shape (inverse of :func:`unrank`).

    Counts the shapes that precede the given one: all shapes with a lower
    top voice (a hockey-stick binomial sum), plus the lexicographic rank of
    the inner voices among the combinations that fit under this top.
    """
    p = check_offsets(offsets)
    n = len(p)
    top = p[-1]
    inner = p[1:-1]
    below = top - 1  # inner voices draw from 1..top-1
    a = 1 + comb(top - 1, n - 1)
    prev = 0
    for i, value in enumerate(inner):
        after = len(inner) - i - 1
        for v in range(prev + 1, value):
            a += comb(below - v, after)
        prev = value
    return ChordId(n, a)


def unrank(chord_id: ChordId) -> Tuple[int, ...]:
    """The chord shape carrying the given identifier.

    Undoes :func:`rank`: the top voice is the largest whose cumulative
    shape count stays below the ordinal, then the remainder unranks the
    inner voices as a lexicographic combination.
    """
    n = chord_id.n
    remaining = chord_id.a - 1
    # smallest top voice whose cumulative shape count exceeds the ordinal,
    # found by galloping then bisecting (ordinals are unbounded)
    lo = n - 1
    hi = lo + 1
    while comb(hi, n - 1) <= remaining:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if comb(mid, n - 1) <= remaining:
            lo = mid + 1
        else:
            hi = mid
    top = lo
    remaining -= comb(top - 1, n - 1)
    below = top - 1
    inner = []
    prev = 0
    for i in range(n - 2):
        after = n - 3 - i
        v = prev + 1
        while comb(below - v, after) <= remaining:
            remaining -= comb(below - v, after)
            v += 1
        inner.append(v)
        prev = v
    return (0,) + tuple(inner) + (top,)
