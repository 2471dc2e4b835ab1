"""Desk-scale verification of the reversal spectrum.

The grid rows check that the (m, alpha) witness really has asc pair
(m, alpha); the trivial rows pin the m = 0 and m = 1 cases on their
one-state automata; and the magic-value probe samples random permutation
automata looking for a reversal with asc 1 (none is expected: 1 is the one
unattainable value once asc >= 2).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .dfa import Dfa, is_permutation_automaton
from .errors import CapacityError
from .minimize import asc
from .reversal import DEFAULT_MAX_STATES, reverse_dfa
from .witness import DEFAULT_STATE_CAP, build_witness

DEFAULT_SEED = 1009
MAX_PROBE_STATES = 8

_NOTES = (
    "rows m=0 and m=1 are pinned by their one-state automata; that no other "
    "reverse value occurs for m<=1, and that reverse asc 1 never occurs for "
    "m>=2, is supported here by the sampled magic-value probe rather than a "
    "proof",
)


def asc_pair(pfa: Dfa, max_states: int = DEFAULT_MAX_STATES) -> tuple[int, int]:
    """(asc of the language, asc of its reversal) for a permutation automaton."""
    if not is_permutation_automaton(pfa):
        raise ValueError("asc_pair requires a permutation automaton")
    return asc(pfa), asc(reverse_dfa(pfa, max_states=max_states))


def spectrum_point(
    m: int, alpha: int, state_cap: int = DEFAULT_STATE_CAP
) -> tuple[int, int]:
    """asc pair of the (m, alpha) witness; the expected value is (m, alpha)."""
    return asc_pair(build_witness(m, alpha, state_cap=state_cap))


@dataclass(frozen=True)
class SpectrumRow:
    m: int
    alpha: int
    asc_forward: int | None
    asc_reverse: int | None
    verdict: str  # "pass", "fail", or "skipped"


def _one_state_pfa(final: bool) -> Dfa:
    finals = frozenset({0}) if final else frozenset()
    return Dfa(1, 1, ((0,),), 0, finals)


def trivial_rows() -> tuple[SpectrumRow, SpectrumRow]:
    """The m = 0 and m = 1 rows.

    The empty language (one-state, no finals) must give (0, 0) and the
    all-words unary language (one-state, all-final) must give (1, 1).
    """
    rows = []
    for expected, dfa in ((0, _one_state_pfa(False)), (1, _one_state_pfa(True))):
        forward, reverse = asc_pair(dfa)
        verdict = "pass" if (forward, reverse) == (expected, expected) else "fail"
        rows.append(SpectrumRow(expected, expected, forward, reverse, verdict))
    return tuple(rows)


def random_pfa(rng: random.Random, num_states: int, alphabet_size: int = 2) -> Dfa:
    """Uniform random permutation per letter, uniform start, fair-coin finals."""
    if num_states < 1:
        raise ValueError(f"num_states must be >= 1 (got {num_states})")
    columns = []
    for _ in range(alphabet_size):
        column = list(range(num_states))
        rng.shuffle(column)
        columns.append(column)
    delta = tuple(
        tuple(column[q] for column in columns) for q in range(num_states)
    )
    start = rng.randrange(num_states)
    finals = frozenset(q for q in range(num_states) if rng.random() < 0.5)
    return Dfa(num_states, alphabet_size, delta, start, finals)


@dataclass(frozen=True)
class MagicProbeReport:
    """Result of the empirical search for a reversal with asc 1.

    ``drawn`` counts all sampled automata, ``checked`` the ones with
    asc >= 2 whose reversal was actually tested. A counterexample is a
    finding (recorded with its asc pair), never an exception.
    """

    n_max: int
    samples: int
    seed: int
    drawn: int
    checked: int
    counterexamples: tuple[tuple[Dfa, int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def magic_one_probe(
    n_max: int,
    samples: int,
    seed: int = DEFAULT_SEED,
    count_checked_only: bool = False,
) -> MagicProbeReport:
    """Sample random binary permutation automata and test their reversals.

    By default ``samples`` counts draws, and only draws with asc >= 2 are
    checked (a run can be vacuous, e.g. on one state). With
    ``count_checked_only`` the sampler rejects until ``samples`` automata
    with asc >= 2 have been checked.
    """
    if not 1 <= n_max <= MAX_PROBE_STATES:
        raise ValueError(f"n_max must be between 1 and {MAX_PROBE_STATES}")
    if samples < 0:
        raise ValueError(f"samples must be >= 0 (got {samples})")
    if count_checked_only and n_max < 2:
        raise ValueError("no automaton on one state has asc >= 2")
    rng = random.Random(seed)
    drawn = 0
    checked = 0
    hits: list[tuple[Dfa, int, int]] = []
    while (checked if count_checked_only else drawn) < samples:
        dfa = random_pfa(rng, rng.randint(1, n_max))
        drawn += 1
        forward = asc(dfa)
        if forward < 2:
            continue
        checked += 1
        reverse = asc(reverse_dfa(dfa))
        if reverse == 1:
            hits.append((dfa, forward, reverse))
    return MagicProbeReport(
        n_max=n_max,
        samples=samples,
        seed=seed,
        drawn=drawn,
        checked=checked,
        counterexamples=tuple(hits),
    )


@dataclass(frozen=True)
class SpectrumReport:
    """Grid plus trivial rows, in (m, alpha) order, with an overall verdict."""

    m_max: int
    alpha_max: int
    rows: tuple[SpectrumRow, ...]
    magic_probe: MagicProbeReport | None = None
    notes: tuple[str, ...] = _NOTES

    @property
    def passed(self) -> bool:
        if any(row.verdict == "fail" for row in self.rows):
            return False
        return self.magic_probe is None or self.magic_probe.passed

    @property
    def skipped(self) -> tuple[SpectrumRow, ...]:
        return tuple(row for row in self.rows if row.verdict == "skipped")


def spectrum_table(
    m_max: int,
    alpha_max: int,
    state_cap: int = DEFAULT_STATE_CAP,
    probe: MagicProbeReport | None = None,
) -> SpectrumReport:
    """Trivial rows plus the witness grid 2..m_max x 2..alpha_max.

    Rows whose witness would blow the state cap are recorded as skipped,
    not failed; the overall verdict ignores them.
    """
    rows = list(trivial_rows())
    for m in range(2, m_max + 1):
        for alpha in range(2, alpha_max + 1):
            try:
                forward, reverse = spectrum_point(m, alpha, state_cap=state_cap)
            except CapacityError:
                rows.append(SpectrumRow(m, alpha, None, None, "skipped"))
                continue
            verdict = "pass" if (forward, reverse) == (m, alpha) else "fail"
            rows.append(SpectrumRow(m, alpha, forward, reverse, verdict))
    return SpectrumReport(
        m_max=m_max, alpha_max=alpha_max, rows=tuple(rows), magic_probe=probe
    )
