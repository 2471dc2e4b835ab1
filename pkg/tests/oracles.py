"""Independent reference implementations used to cross-check the library.

Everything here deliberately avoids the code paths it is meant to check:
the marking minimizer never calls the partition-refinement one, and the
word-formula reversal recomputes every subset from scratch by running
reversed words forward instead of folding letter preimages.
"""

from __future__ import annotations

import random
from itertools import product

from permrev.dfa import Dfa, apply_word


def random_dfa(rng: random.Random, max_states: int, alphabet_size: int = 2) -> Dfa:
    n = rng.randint(1, max_states)
    delta = tuple(
        tuple(rng.randrange(n) for _ in range(alphabet_size)) for _ in range(n)
    )
    start = rng.randrange(n)
    finals = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(n, alphabet_size, delta, start, finals)


def _reachable(dfa: Dfa) -> list[int]:
    seen = {dfa.start}
    stack = [dfa.start]
    while stack:
        q = stack.pop()
        for c in range(dfa.alphabet_size):
            t = dfa.delta[q][c]
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return sorted(seen)


def nerode_classes_by_marking(dfa: Dfa) -> list[set[int]]:
    """Equivalence classes of the reachable states via pairwise marking."""
    reach = _reachable(dfa)
    marked: set[tuple[int, int]] = set()
    pairs = [(p, q) for i, p in enumerate(reach) for q in reach[i + 1 :]]
    for p, q in pairs:
        if (p in dfa.finals) != (q in dfa.finals):
            marked.add((p, q))
    changed = True
    while changed:
        changed = False
        for p, q in pairs:
            if (p, q) in marked:
                continue
            for c in range(dfa.alphabet_size):
                a, b = dfa.delta[p][c], dfa.delta[q][c]
                if a > b:
                    a, b = b, a
                if a != b and (a, b) in marked:
                    marked.add((p, q))
                    changed = True
                    break
    classes: list[set[int]] = []
    assigned: dict[int, set[int]] = {}
    for p in reach:
        for cls in classes:
            rep = min(cls)
            a, b = (rep, p) if rep < p else (p, rep)
            if (a, b) not in marked:
                cls.add(p)
                assigned[p] = cls
                break
        else:
            cls = {p}
            classes.append(cls)
            assigned[p] = cls
    return classes


def minimize_counts_by_marking(dfa: Dfa) -> tuple[int, int]:
    """(state count, final count) of the minimal DFA via table filling."""
    classes = nerode_classes_by_marking(dfa)
    final_classes = sum(1 for cls in classes if min(cls) in dfa.finals)
    return len(classes), final_classes


def all_pairs_distinguishable(dfa: Dfa) -> bool:
    return all(len(cls) == 1 for cls in nerode_classes_by_marking(dfa))


def reverse_by_word_formula(fwd: Dfa) -> Dfa:
    """DFA for the reversed language built from the word-level formula.

    The state reached on word w is the set of forward states that land in
    the forward finals when run on reversed(w), recomputed from scratch for
    every edge rather than folded one preimage at a time.
    """
    n = fwd.num_states

    def state_for(word: tuple[int, ...]) -> frozenset[int]:
        reversed_word = tuple(reversed(word))
        return frozenset(
            q for q in range(n) if apply_word(fwd, q, reversed_word) in fwd.finals
        )

    start = state_for(())
    index: dict[frozenset[int], int] = {start: 0}
    words: list[tuple[int, ...]] = [()]
    rows: list[list[int]] = []
    i = 0
    while i < len(words):
        row = []
        for c in range(fwd.alphabet_size):
            word = words[i] + (c,)
            target = state_for(word)
            j = index.get(target)
            if j is None:
                j = len(words)
                index[target] = j
                words.append(word)
            row.append(j)
        rows.append(row)
        i += 1
    finals = frozenset(j for subset, j in index.items() if fwd.start in subset)
    return Dfa(len(words), fwd.alphabet_size, tuple(tuple(r) for r in rows), 0, finals)


def brute_reachable_subsets(fwd: Dfa) -> set[frozenset[int]]:
    """All subset-states reachable from the finals, by definition-level preimages."""
    start = frozenset(fwd.finals)
    seen = {start}
    stack = [start]
    while stack:
        subset = stack.pop()
        for c in range(fwd.alphabet_size):
            pre = frozenset(
                q for q in range(fwd.num_states) if fwd.delta[q][c] in subset
            )
            if pre not in seen:
                seen.add(pre)
                stack.append(pre)
    return seen


def enumerate_binary_dfas(max_states: int):
    """Every complete binary DFA with at most ``max_states`` states."""
    for n in range(1, max_states + 1):
        state_range = range(n)
        for flat in product(state_range, repeat=2 * n):
            delta = tuple((flat[2 * q], flat[2 * q + 1]) for q in state_range)
            for start in state_range:
                for bits in range(1 << n):
                    finals = frozenset(q for q in state_range if (bits >> q) & 1)
                    yield Dfa(n, 2, delta, start, finals)


def perm_order_by_powers(p: tuple[int, ...]) -> int:
    """Order of a permutation by direct power iteration."""
    ident = tuple(range(len(p)))
    power = p
    d = 1
    while power != ident:
        power = tuple(p[i] for i in power)
        d += 1
    return d
