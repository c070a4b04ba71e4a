import itertools
import random
from fractions import Fraction

import pytest

from dichotic.enumeration import ChordId, unrank
from dichotic.model import CENTER, DEFAULT_TABLE, LEFT, RIGHT, Chord, \
    PanAssignment, Voice
from dichotic.optimizer import EmptyAssignmentSpaceError, OptimizerConfig, \
    PanMode, accord_chain, assignment_space, normalize_polarity, optimize
from dichotic.reference import REFERENCE_ROWS


def config(mode, **kwargs):
    return OptimizerConfig(mode=PanMode.parse(mode), **kwargs)


# --- an independent scoring path, used to cross-check the optimizer's scan ---

def naive_pair(a: Voice, b: Voice, pa, pb) -> Fraction:
    if {pa, pb} == {LEFT, RIGHT}:
        return Fraction(0)
    raw = DEFAULT_TABLE.dissonance(abs(a.pitch - b.pitch))
    amp_a = Fraction(a.velocity, 2) if pa is CENTER else Fraction(a.velocity)
    amp_b = Fraction(b.velocity, 2) if pb is CENTER else Fraction(b.velocity)
    if pa is pb:
        amp_a, amp_b = Fraction(a.velocity), Fraction(b.velocity)
    return raw * min(amp_a, amp_b) / max(amp_a, amp_b)


def naive_total(chord: Chord, positions) -> Fraction:
    voices = chord.voices
    return sum((naive_pair(voices[i], voices[j], positions[i], positions[j])
                for i in range(len(voices)) for j in range(i + 1, len(voices))),
               Fraction(0))


def brute_force_best(chord: Chord):
    """Minimum over all 3^n assignments with the documented tie-breaks."""
    n = len(chord)
    candidates = []
    for combo in itertools.product((LEFT, CENTER, RIGHT), repeat=n):
        candidates.append((naive_total(chord, combo), combo))
    best_total = min(total for total, _ in candidates)
    tied = [combo for total, combo in candidates if total == best_total]
    best_center = max(
        tuple(sorted((v.pitch for v, p in zip(chord.voices, combo) if p is CENTER),
                     reverse=True))
        for combo in tied)
    tied = [combo for combo in tied
            if tuple(sorted((v.pitch for v, p in zip(chord.voices, combo)
                             if p is CENTER), reverse=True)) == best_center]
    order = {LEFT: 0, CENTER: 1, RIGHT: 2}
    normalized = [normalize_polarity(PanAssignment(combo), chord) for combo in tied]
    chosen = min(normalized, key=lambda a: tuple(order[p] for p in a.positions))
    return best_total, chosen


class TestAssignmentSpace:
    def test_counts_for_three_voices(self):
        assert len(assignment_space(3, PanMode.FIXED3)) == 6
        assert len(assignment_space(3, PanMode.FIXED2)) == 6
        assert len(assignment_space(2, PanMode.FIXED1)) == 1
        assert len(assignment_space(3, PanMode.FREE)) == 27

    def test_counts_for_four_voices(self):
        # inclusion-exclusion: surjections onto 2 and 3 points
        assert len(assignment_space(4, PanMode.FIXED2)) == 2 ** 4 - 2
        assert len(assignment_space(4, PanMode.FIXED3)) == 3 ** 4 - 3 * 2 ** 4 + 3

    def test_empty_spaces(self):
        with pytest.raises(EmptyAssignmentSpaceError):
            assignment_space(2, PanMode.FIXED3)
        with pytest.raises(EmptyAssignmentSpaceError):
            assignment_space(1, PanMode.FIXED2)

    def test_voice_cap_for_exponential_modes(self):
        with pytest.raises(ValueError):
            assignment_space(13, PanMode.FREE)
        with pytest.raises(ValueError):
            assignment_space(13, PanMode.FIXED3)
        assert len(assignment_space(4, PanMode.FIXED2)) == 14


class TestOptimize:
    def test_cluster_prefers_high_center(self):
        # centers 0 and 2 tie at 19; the higher voice takes the center
        report = optimize(Chord.from_offsets((0, 1, 2)), config("3"))
        assert report.total == 19
        assert report.assignment.positions == (LEFT, RIGHT, CENTER)

    def test_second_tie_row(self):
        report = optimize(Chord.from_offsets((0, 2, 4)), config("3"))
        assert report.total == 11
        assert report.assignment.positions == (LEFT, RIGHT, CENTER)

    def test_major_triad(self):
        report = optimize(Chord.from_offsets((0, 4, 7)), config("3"))
        assert report.total == 4
        assert report.assignment.positions == (CENTER, LEFT, RIGHT)

    def test_two_point_partition(self):
        report = optimize(Chord.from_offsets((0, 2, 3)), config("2"))
        assert report.total == 10
        # partition {0,3} vs {2}; lowest-pitch group sits left
        assert report.assignment.positions == (LEFT, RIGHT, LEFT)

    def test_threshold_keeps_consonant_chords_diotic(self):
        report = optimize(Chord.from_offsets((0, 4, 7)),
                          config("3", thresholds={3: 20}))
        assert report.total == 18
        assert report.ppn == 1

    def test_threshold_boundary_is_inclusive(self):
        report = optimize(Chord.from_offsets((0, 4, 7)),
                          config("3", thresholds={3: 18}))
        assert report.ppn == 1
        report = optimize(Chord.from_offsets((0, 4, 7)),
                          config("3", thresholds={3: 17}))
        assert report.ppn == 3

    def test_single_voice_stays_centered_in_any_mode(self):
        for mode in ("1", "2", "3", "free"):
            report = optimize(Chord.from_pitches([72]), config(mode))
            assert report.total == 0 and report.ppn == 1

    def test_octave_pair_stays_diotic(self):
        report = optimize(Chord.from_pitches([60, 72]), config("2"))
        assert report.total == 0 and report.ppn == 1

    def test_two_voices_in_three_point_mode_fail(self):
        with pytest.raises(EmptyAssignmentSpaceError):
            optimize(Chord.from_pitches([60, 61]), config("3"))

    def test_swap_mirrors_assignment_only(self):
        chord = Chord.from_offsets((0, 4, 7))
        plain = optimize(chord, config("3"))
        swapped = optimize(chord, config("3", swap_channels=True))
        assert swapped.total == plain.total
        assert swapped.assignment == plain.assignment.mirrored()

    def test_free_mode_never_worse_than_fixed(self):
        rng = random.Random(99)
        for _ in range(60):
            n = rng.randint(3, 6)
            chord = Chord.from_pitches([rng.randint(20, 100) for _ in range(n)],
                                       [rng.randint(1, 127) for _ in range(n)])
            free = optimize(chord, config("free")).total
            fixed3 = optimize(chord, config("3")).total
            fixed1 = optimize(chord, config("1")).total
            fixed2 = optimize(chord, config("2")).total
            assert free <= fixed3 <= fixed1
            assert free <= fixed2

    def test_matches_brute_force_on_random_chords(self):
        rng = random.Random(7)
        for _ in range(120):
            n = rng.randint(1, 5)
            chord = Chord.from_pitches([rng.randint(0, 127) for _ in range(n)],
                                       [rng.randint(1, 127) for _ in range(n)])
            report = optimize(chord, config("free"))
            best_total, best_assignment = brute_force_best(chord)
            assert report.total == best_total
            assert report.assignment == best_assignment

    def test_deterministic(self):
        chord = Chord.from_pitches([60, 63, 66, 69], [90, 80, 70, 60])
        reports = [optimize(chord, config("free")) for _ in range(3)]
        assert reports[0] == reports[1] == reports[2]

    def test_mode_recorded(self):
        assert optimize(Chord.from_offsets((0, 4, 7)), config("3")).mode == "3"


class TestNormalizePolarity:
    def test_lower_edge_goes_left(self):
        chord = Chord.from_offsets((0, 2, 5))
        fixed = normalize_polarity(PanAssignment((RIGHT, LEFT, CENTER)), chord)
        assert fixed.positions == (LEFT, RIGHT, CENTER)

    def test_edges_above_center(self):
        chord = Chord.from_offsets((0, 5, 7))
        fixed = normalize_polarity(PanAssignment((CENTER, RIGHT, LEFT)), chord)
        assert fixed.positions == (CENTER, LEFT, RIGHT)

    def test_idempotent(self):
        chord = Chord.from_offsets((0, 2, 5))
        once = normalize_polarity(PanAssignment((LEFT, RIGHT, CENTER)), chord)
        assert normalize_polarity(once, chord) == once

    def test_group_with_lowest_pitch_goes_left(self):
        chord = Chord.from_pitches([60, 62, 64, 66])
        fixed = normalize_polarity(PanAssignment((RIGHT, LEFT, RIGHT, LEFT)), chord)
        assert fixed.positions == (LEFT, RIGHT, LEFT, RIGHT)

    def test_single_edge_group_goes_left(self):
        chord = Chord.from_pitches([60, 64])
        fixed = normalize_polarity(PanAssignment((RIGHT, CENTER)), chord)
        assert fixed.positions == (LEFT, CENTER)

    def test_total_unchanged(self):
        chord = Chord.from_pitches([60, 61, 67], [100, 40, 80])
        assignment = PanAssignment((RIGHT, CENTER, LEFT))
        assert naive_total(chord, assignment.positions) == \
            naive_total(chord, normalize_polarity(assignment, chord).positions)


class TestAccordChain:
    def test_leaders_have_minimal_total(self):
        chain = accord_chain(3, 2)
        assert [str(c) for c in chain] == ["3v17", "3v20"]

    def test_full_chain_is_permutation(self):
        chain = accord_chain(3, 55)
        assert sorted(c.a for c in chain) == list(range(1, 56))

    def test_prefix_stability(self):
        assert accord_chain(3, 5) == accord_chain(3, 55)[:5]

    def test_limit_beyond_population(self):
        assert len(accord_chain(3, 1000)) == 55

    def test_two_voice_chain(self):
        chain = accord_chain(2, 11)
        # every dyad splits dichotically to zero; ties fall back to ordinal
        assert [c.a for c in chain] == list(range(1, 12))

    def test_totals_are_sorted(self):
        chain = accord_chain(3, 55)
        totals = [optimize(Chord.from_offsets(unrank(c)), config("3")).total
                  for c in chain]
        assert totals == sorted(totals)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            accord_chain(1, 5)
        with pytest.raises(ValueError):
            accord_chain(3, 0)


class TestTableConformance:
    """The bundled reference rows against freshly computed values."""

    def test_all_three_point_rows(self):
        pos_of = {"-": LEFT, "+": RIGHT, "": CENTER}
        for row in REFERENCE_ROWS:
            if row.ppn != 3:
                continue
            chord = Chord.from_offsets(row.offsets)
            report = optimize(chord, config("3"))
            assert report.total == row.tdiss, row
            want = {}
            for part in row.composition.split(","):
                sign = part[-1] if part[-1] in "-+" else ""
                want[int(part.rstrip("-+"))] = pos_of[sign]
            got = dict(zip(row.offsets, report.assignment.positions))
            assert got == want, row

    def test_all_one_point_rows(self):
        for row in REFERENCE_ROWS:
            if row.ppn == 1:
                report = optimize(Chord.from_offsets(row.offsets), config("1"))
                assert report.total == row.tdiss, row

    def test_all_two_point_rows(self):
        for row in REFERENCE_ROWS:
            if row.ppn != 2:
                continue
            report = optimize(Chord.from_offsets(row.offsets), config("2"))
            assert report.total == row.tdiss, row
            sides = {"-": set(), "+": set()}
            for part in row.composition.split(","):
                sides[part[-1]].add(int(part.rstrip("-+")))
            want = frozenset((frozenset(sides["-"]), frozenset(sides["+"])))
            got = frozenset((
                frozenset(o for o, p in zip(row.offsets, report.assignment.positions)
                          if p is LEFT),
                frozenset(o for o, p in zip(row.offsets, report.assignment.positions)
                          if p is RIGHT)))
            assert got == want, row
