"""Reverse subset construction, explored lazily from the final-state set.

Subset-states are plain ints used as bit vectors over the forward states:
bit ``q`` is set iff forward state ``q`` belongs to the subset. The full
power-set automaton is never materialized; only the part reachable from the
forward finals is interned, in BFS discovery order with letter-index
tie-break, so state numbering is reproducible.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .dfa import Dfa, Word
from .errors import CapacityError

SubsetState = int

DEFAULT_MAX_STATES = 1_000_000


def subset_mask(states: Iterable[int]) -> SubsetState:
    mask = 0
    for q in states:
        mask |= 1 << q
    return mask


def mask_states(mask: SubsetState) -> list[int]:
    """The members of a subset-state, ascending."""
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return out


def finals_mask(dfa: Dfa) -> SubsetState:
    return subset_mask(dfa.finals)


def _check_mask(dfa: Dfa, mask: SubsetState) -> None:
    if mask < 0 or mask >> dfa.num_states:
        raise ValueError("subset-state does not fit the forward automaton")


def reverse_step(fwd: Dfa, mask: SubsetState, letter: int) -> SubsetState:
    """Preimage of the subset under one letter of the forward automaton.

    When ``fwd`` is a permutation automaton this is a bijection on subsets
    and preserves cardinality.
    """
    _check_mask(fwd, mask)
    if not 0 <= letter < fwd.alphabet_size:
        raise ValueError(f"letter {letter} is out of range")
    out = 0
    for q in range(fwd.num_states):
        if (mask >> fwd.delta[q][letter]) & 1:
            out |= 1 << q
    return out


def reverse_word(fwd: Dfa, mask: SubsetState, word: Word) -> SubsetState:
    """Fold reverse_step over the word, left to right.

    Equals the direct formula: the set of forward states that land inside
    the given subset when run on the reversed word.
    """
    _check_mask(fwd, mask)
    for c in word:
        mask = reverse_step(fwd, mask, c)
    return mask


def _explore(fwd: Dfa, max_states: int) -> tuple[list[SubsetState], list[list[int]]]:
    init = finals_mask(fwd)
    index = {init: 0}
    subsets = [init]
    rows: list[list[int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for c in range(fwd.alphabet_size):
            t = reverse_step(fwd, subsets[i], c)
            j = index.get(t)
            if j is None:
                if len(subsets) >= max_states:
                    raise CapacityError(
                        f"reverse construction exceeded {max_states} states",
                        count=len(subsets),
                    )
                j = len(subsets)
                index[t] = j
                subsets.append(t)
                queue.append(j)
            row.append(j)
        rows.append(row)
    return subsets, rows


def reverse_subsets(fwd: Dfa, max_states: int = DEFAULT_MAX_STATES) -> list[SubsetState]:
    """The reachable subset-states, in intern (BFS) order."""
    if max_states < 1:
        raise ValueError(f"max_states must be >= 1 (got {max_states})")
    return _explore(fwd, max_states)[0]


def reverse_dfa(fwd: Dfa, max_states: int = DEFAULT_MAX_STATES) -> Dfa:
    """Reachable part of the automaton accepting the reversed language.

    Exploration starts from the forward final set and follows letter
    preimages; a subset-state is final iff it contains the forward start
    state. State labels join the forward labels of the members with commas.
    """
    if max_states < 1:
        raise ValueError(f"max_states must be >= 1 (got {max_states})")
    subsets, rows = _explore(fwd, max_states)
    finals = frozenset(i for i, s in enumerate(subsets) if (s >> fwd.start) & 1)
    labels = tuple(
        ",".join(fwd.label(q) for q in mask_states(s)) for s in subsets
    )
    return Dfa(
        num_states=len(subsets),
        alphabet_size=fwd.alphabet_size,
        delta=tuple(tuple(row) for row in rows),
        start=0,
        finals=finals,
        labels=labels,
    )
