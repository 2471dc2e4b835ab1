"""Complete deterministic finite automata over dense integer states.

States are indices ``0..num_states-1`` and letters are indices
``0..alphabet_size-1``; semantic identities (subsets, star centers, ...)
live only in the optional state labels. Words apply left to right:
``q . (uv) = (q . u) . v``. Every value here is immutable after
construction, so instances are safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

Word = Sequence[int]


@dataclass(frozen=True)
class Dfa:
    """A complete DFA given by its transition table.

    ``delta[q][c]`` is the successor of state ``q`` on letter ``c``; the
    table is total by construction. ``labels``, when present, names every
    state.
    """

    num_states: int
    alphabet_size: int
    delta: tuple[tuple[int, ...], ...]
    start: int
    finals: frozenset[int]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        if self.num_states < 1:
            raise ValueError(f"num_states must be >= 1 (got {self.num_states})")
        if self.alphabet_size < 1:
            raise ValueError(f"alphabet_size must be >= 1 (got {self.alphabet_size})")
        if len(self.delta) != self.num_states:
            raise ValueError(
                f"delta has {len(self.delta)} rows for {self.num_states} states"
            )
        for q, row in enumerate(self.delta):
            if len(row) != self.alphabet_size:
                raise ValueError(
                    f"state {q}: row has {len(row)} entries for an alphabet "
                    f"of {self.alphabet_size}"
                )
            for c, target in enumerate(row):
                if not 0 <= target < self.num_states:
                    raise ValueError(f"delta({q},{c}) = {target} is out of range")
        if not 0 <= self.start < self.num_states:
            raise ValueError(f"start state {self.start} is out of range")
        for q in self.finals:
            if not 0 <= q < self.num_states:
                raise ValueError(f"final state {q} is out of range")
        if self.labels is not None and len(self.labels) != self.num_states:
            raise ValueError("labels must name every state")

    def label(self, q: int) -> str:
        return self.labels[q] if self.labels is not None else str(q)


def _check_state(dfa: Dfa, q: int) -> None:
    if not 0 <= q < dfa.num_states:
        raise ValueError(f"state {q} is out of range")


def apply_word(dfa: Dfa, q: int, word: Word) -> int:
    """Run ``word`` from state ``q``, one letter at a time, left to right."""
    _check_state(dfa, q)
    for c in word:
        if not 0 <= c < dfa.alphabet_size:
            raise ValueError(f"letter {c} is out of range")
        q = dfa.delta[q][c]
    return q


def accepts(dfa: Dfa, word: Word) -> bool:
    """True iff running ``word`` from the start state ends in a final state."""
    return apply_word(dfa, dfa.start, word) in dfa.finals


def is_permutation_automaton(dfa: Dfa) -> bool:
    """True iff every letter permutes the state set."""
    for c in range(dfa.alphabet_size):
        images = {row[c] for row in dfa.delta}
        if len(images) != dfa.num_states:
            return False
    return True


def reachable_states(dfa: Dfa) -> list[int]:
    """States reachable from the start, in BFS discovery order.

    Ties break by letter index, so the order is reproducible; the canonical
    renumbering in minimization reuses it.
    """
    seen = [False] * dfa.num_states
    seen[dfa.start] = True
    order = [dfa.start]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for c in range(dfa.alphabet_size):
            t = dfa.delta[q][c]
            if not seen[t]:
                seen[t] = True
                order.append(t)
                queue.append(t)
    return order
