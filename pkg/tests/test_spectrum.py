import random

import pytest

from permrev.dfa import Dfa, is_permutation_automaton
from permrev.minimize import asc
from permrev.reversal import reverse_dfa
from permrev.spectrum import (
    DEFAULT_SEED,
    asc_pair,
    magic_one_probe,
    random_pfa,
    spectrum_point,
    spectrum_table,
    trivial_rows,
)
from permrev.witness import build_witness


def test_asc_pair_rejects_non_permutation_input():
    non_pfa = Dfa(2, 2, ((0, 0), (0, 1)), 0, frozenset({1}))
    assert not is_permutation_automaton(non_pfa)
    with pytest.raises(ValueError):
        asc_pair(non_pfa)


def test_spectrum_points():
    assert spectrum_point(3, 4) == (3, 4)
    assert spectrum_point(2, 2) == (2, 2)
    assert spectrum_point(2, 5) == (2, 5)


def test_trivial_rows_match_case_table():
    rows = trivial_rows()
    assert [(r.m, r.asc_forward, r.asc_reverse, r.verdict) for r in rows] == [
        (0, 0, 0, "pass"),
        (1, 1, 1, "pass"),
    ]


def test_reversal_involution_on_asc():
    rng = random.Random(99)
    for _ in range(20):
        pfa = random_pfa(rng, rng.randint(1, 5))
        assert asc(reverse_dfa(reverse_dfa(pfa))) == asc(pfa)


# ---------------------------------------------------------------------
# random generation
# ---------------------------------------------------------------------

def test_random_pfa_is_seeded_and_permutation():
    a = random_pfa(random.Random(4), 6)
    b = random_pfa(random.Random(4), 6)
    assert a == b
    assert is_permutation_automaton(a)


def test_random_pfa_validates_size():
    with pytest.raises(ValueError):
        random_pfa(random.Random(0), 0)


# ---------------------------------------------------------------------
# magic-value probe
# ---------------------------------------------------------------------

def test_probe_finds_nothing_on_small_sample():
    report = magic_one_probe(4, 1000, seed=1)
    assert report.drawn == 1000
    assert report.checked <= 1000
    assert report.counterexamples == ()
    assert report.passed


def test_probe_is_vacuous_on_one_state():
    report = magic_one_probe(1, 10, seed=3)
    assert report.checked == 0
    assert report.passed


def test_probe_can_count_checked_samples():
    report = magic_one_probe(4, 25, seed=2, count_checked_only=True)
    assert report.checked == 25
    assert report.drawn >= 25


def test_probe_validates_arguments():
    with pytest.raises(ValueError):
        magic_one_probe(9, 10)
    with pytest.raises(ValueError):
        magic_one_probe(3, -1)
    with pytest.raises(ValueError):
        magic_one_probe(1, 10, count_checked_only=True)


def test_known_witness_confirms_probe_expectation():
    # a fixed permutation automaton with asc 2 reverses to asc 2, not 1
    assert asc_pair(build_witness(2, 2)) == (2, 2)


# ---------------------------------------------------------------------
# table assembly
# ---------------------------------------------------------------------

def test_small_grid_passes():
    report = spectrum_table(3, 3)
    assert report.passed
    assert [(r.m, r.alpha) for r in report.rows] == [
        (0, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3),
    ]
    assert all(r.verdict == "pass" for r in report.rows)
    assert report.notes


def test_full_grid_passes():
    report = spectrum_table(5, 5)
    assert report.passed
    grid_rows = [r for r in report.rows if r.m >= 2]
    assert len(grid_rows) == 16
    assert all(r.verdict == "pass" for r in grid_rows)
    assert all((r.asc_forward, r.asc_reverse) == (r.m, r.alpha) for r in grid_rows)


def test_capacity_rows_are_skipped_not_failed():
    report = spectrum_table(4, 4, state_cap=20)
    skipped = {(r.m, r.alpha) for r in report.skipped}
    assert (4, 4) in skipped  # comb(7, 4) = 35 > 20
    assert report.passed
    assert all(r.verdict in ("pass", "skipped") for r in report.rows)


def test_probe_report_travels_with_table():
    probe = magic_one_probe(3, 20, seed=DEFAULT_SEED)
    report = spectrum_table(2, 2, probe=probe)
    assert report.magic_probe is probe
    assert report.passed
