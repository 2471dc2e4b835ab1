"""The k-subset witness automaton and machine verification of its reversal.

For parameters m >= 2 and alpha >= 2 put n = m + alpha - 1. The witness is
a binary permutation automaton whose states are the alpha-subsets of [n]:
letter ``a`` acts as the full n-cycle, letter ``b`` as the transposition of
the first two points, the start state is {1..alpha}, and the final states
form the star around {1..alpha-1} (all alpha-subsets containing it).
``verify_witness`` recomputes, rather than assumes, every property this
construction is supposed to have: state and final counts on both sides,
the star structure of the reverse reachable part, minimality forward and
backward, and the accepting-state complexities.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .dfa import Dfa
from .errors import CapacityError
from .minimize import asc, minimize
from .perms import (
    KSubset,
    act_on_subset,
    colex_rank,
    colex_unrank,
    cycle_perm,
    ksubsets,
    perm_inverse,
    transposition_perm,
)
from .reversal import mask_states, reverse_dfa, reverse_step, reverse_subsets

DEFAULT_STATE_CAP = 10_000


@dataclass(frozen=True)
class WitnessParams:
    """The pair (m, alpha) with the derived ground-set size n = m + alpha - 1."""

    m: int
    alpha: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"m must be >= 2 (got {self.m})")
        if self.alpha < 2:
            raise ValueError(f"alpha must be >= 2 (got {self.alpha})")

    @property
    def n(self) -> int:
        return self.m + self.alpha - 1

    @property
    def q_init(self) -> KSubset:
        """The start state: the first alpha points."""
        return tuple(range(self.alpha))

    @property
    def center0(self) -> KSubset:
        """Center of the final-state star: the first alpha - 1 points."""
        return tuple(range(self.alpha - 1))


def subset_label(subset: KSubset) -> str:
    """Render a subset 1-based; compact digits while every point fits one."""
    points = [i + 1 for i in subset]
    if points and points[-1] > 9:
        return ".".join(str(p) for p in points)
    return "".join(str(p) for p in points)


def star_label(center: KSubset) -> str:
    return f"S({subset_label(center)})"


@dataclass(frozen=True)
class Star:
    """All alpha-subsets of [n] containing a fixed center of size alpha - 1."""

    center: KSubset
    members: tuple[KSubset, ...]


def star_members(params: WitnessParams, center: KSubset) -> Star:
    """The star around ``center``; it always has exactly m members."""
    center = tuple(sorted(center))
    if len(center) != params.alpha - 1:
        raise ValueError(
            f"center must have {params.alpha - 1} points (got {len(center)})"
        )
    for i in center:
        if not 0 <= i < params.n:
            raise ValueError(f"point {i} is out of range for n={params.n}")
    members = tuple(
        sorted(
            tuple(sorted(center + (u,)))
            for u in range(params.n)
            if u not in center
        )
    )
    return Star(center, members)


def build_witness(m: int, alpha: int, state_cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """The binary permutation automaton on the alpha-subsets of [n].

    States are numbered in colexicographic order and labeled 1-based, so the
    start state {1..alpha} is state 0 with label like "1234".
    """
    params = WitnessParams(m, alpha)
    n = params.n
    total = math.comb(n, alpha)
    if total > state_cap:
        raise CapacityError(
            f"witness for (m={m}, alpha={alpha}) needs {total} states "
            f"(cap {state_cap})",
            count=total,
        )
    a = cycle_perm(n)
    b = transposition_perm(n)
    subsets = list(ksubsets(n, alpha))
    delta = tuple(
        (colex_rank(act_on_subset(a, x)), colex_rank(act_on_subset(b, x)))
        for x in subsets
    )
    start = colex_rank(params.q_init)
    finals = frozenset(
        colex_rank(x) for x in star_members(params, params.center0).members
    )
    labels = tuple(subset_label(x) for x in subsets)
    return Dfa(total, 2, delta, start, finals, labels)


@dataclass(frozen=True)
class StarClassification:
    """Outcome of matching every reverse state against a star.

    ``centers[i]`` is the center of reverse state ``i`` or None when that
    state is not a star (which would falsify the construction).
    """

    centers: tuple[KSubset | None, ...]
    non_star_states: tuple[int, ...]
    covers_all_centers: bool
    letter_law_holds: bool

    @property
    def all_stars(self) -> bool:
        return not self.non_star_states

    @property
    def ok(self) -> bool:
        return self.all_stars and self.covers_all_centers and self.letter_law_holds


def classify_reverse_states(
    fwd: Dfa, params: WitnessParams, rev: Dfa
) -> StarClassification:
    """Match every reachable reverse state to its star center.

    The subset behind each state of ``rev`` is recovered by re-running the
    reverse construction, which doubles as a check that ``rev`` really is
    the reverse of ``fwd``. Besides the per-state star test, this checks the
    bijection with all (alpha-1)-subset centers and the single-letter law:
    reading letter c maps the star around T to the star around the preimage
    of T under c.
    """
    n, alpha = params.n, params.alpha
    if fwd.alphabet_size != 2 or fwd.num_states != math.comb(n, alpha):
        raise ValueError("fwd is not the witness for these parameters")
    subsets = reverse_subsets(fwd)
    if len(subsets) != rev.num_states or rev.start != 0:
        raise ValueError("rev is not the reverse construction of fwd")
    index = {s: i for i, s in enumerate(subsets)}
    for i, s in enumerate(subsets):
        for c in range(fwd.alphabet_size):
            if rev.delta[i][c] != index[reverse_step(fwd, s, c)]:
                raise ValueError("rev is not the reverse construction of fwd")
    if rev.finals != frozenset(
        i for i, s in enumerate(subsets) if (s >> fwd.start) & 1
    ):
        raise ValueError("rev is not the reverse construction of fwd")

    centers: list[KSubset | None] = []
    non_star: list[int] = []
    for i, s in enumerate(subsets):
        members = [colex_unrank(q, n, alpha) for q in mask_states(s)]
        center: KSubset | None = None
        if members:
            common = set(members[0])
            for x in members[1:]:
                common &= set(x)
            candidate = tuple(sorted(common))
            if len(candidate) == alpha - 1:
                star = star_members(params, candidate)
                if set(star.members) == set(members):
                    center = candidate
        centers.append(center)
        if center is None:
            non_star.append(i)

    covers = False
    letter_law = False
    if not non_star:
        found = [c for c in centers if c is not None]
        covers = len(set(found)) == len(found) and set(found) == set(
            ksubsets(n, alpha - 1)
        )
        inverses = (perm_inverse(cycle_perm(n)), perm_inverse(transposition_perm(n)))
        letter_law = True
        for i, center in enumerate(centers):
            assert center is not None
            for c in (0, 1):
                if centers[rev.delta[i][c]] != act_on_subset(inverses[c], center):
                    letter_law = False
    return StarClassification(tuple(centers), tuple(non_star), covers, letter_law)


def apply_star_labels(rev: Dfa, classification: StarClassification) -> Dfa:
    """Relabel reverse states with the star shorthand where one matches."""
    labels = tuple(
        star_label(center) if center is not None else rev.label(i)
        for i, center in enumerate(classification.centers)
    )
    return Dfa(rev.num_states, rev.alphabet_size, rev.delta, rev.start,
               rev.finals, labels)


@dataclass(frozen=True)
class WitnessReport:
    """Verification record for one (m, alpha) witness.

    ``first_failure`` names the first check that came out false, or is None
    when everything holds; ``accepting_stars`` lists the accepting reverse
    states as stars, sorted by center.
    """

    params: WitnessParams
    forward_states: int
    forward_finals: int
    forward_minimal: bool
    reverse_states: int
    reverse_finals: int
    reverse_minimal: bool
    stars_match: bool
    accepting_centers_match: bool
    asc_forward: int
    asc_reverse: int
    accepting_stars: tuple[Star, ...]
    first_failure: str | None

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def verify_witness(
    m: int, alpha: int, state_cap: int = DEFAULT_STATE_CAP
) -> WitnessReport:
    """Build the (m, alpha) witness, reverse it, and check every claim.

    Capacity overruns propagate as CapacityError; any falsified check
    produces a failing report naming the first broken clause.
    """
    params = WitnessParams(m, alpha)
    n = params.n
    fwd = build_witness(m, alpha, state_cap=state_cap)
    rev = reverse_dfa(fwd)
    classification = classify_reverse_states(fwd, params, rev)

    forward_minimal = minimize(fwd).num_states == fwd.num_states
    reverse_minimal = minimize(rev).num_states == rev.num_states
    asc_forward = asc(fwd)
    asc_reverse = asc(rev)

    accepting_centers: list[KSubset] = []
    accepting_ok = classification.all_stars
    for i in sorted(rev.finals):
        center = classification.centers[i]
        if center is None:
            accepting_ok = False
        else:
            accepting_centers.append(center)
    accepting_centers.sort()
    expected_centers = sorted(itertools.combinations(params.q_init, alpha - 1))
    accepting_ok = accepting_ok and accepting_centers == expected_centers
    accepting_stars = tuple(
        star_members(params, center) for center in accepting_centers
    )

    checks = (
        ("forward_states", fwd.num_states == math.comb(n, alpha)),
        ("forward_finals", len(fwd.finals) == m),
        ("forward_minimal", forward_minimal),
        ("reverse_states", rev.num_states == math.comb(n, alpha - 1)),
        ("stars_match", classification.ok),
        ("reverse_finals", len(rev.finals) == alpha),
        ("accepting_centers", accepting_ok),
        ("reverse_minimal", reverse_minimal),
        ("asc_forward", asc_forward == m),
        ("asc_reverse", asc_reverse == alpha),
    )
    first_failure = next((name for name, ok in checks if not ok), None)

    return WitnessReport(
        params=params,
        forward_states=fwd.num_states,
        forward_finals=len(fwd.finals),
        forward_minimal=forward_minimal,
        reverse_states=rev.num_states,
        reverse_finals=len(rev.finals),
        reverse_minimal=reverse_minimal,
        stars_match=classification.ok,
        accepting_centers_match=accepting_ok,
        asc_forward=asc_forward,
        asc_reverse=asc_reverse,
        accepting_stars=accepting_stars,
        first_failure=first_failure,
    )
