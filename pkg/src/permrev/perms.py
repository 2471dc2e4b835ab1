"""Permutations of [n], their action on k-subsets, orbits, word synthesis.

A permutation is a tuple of images: ``p[i]`` is where point ``i`` goes.
Points are 0-based internally; user-facing labels add one so that printed
subsets read like the 1-based set notation ("1234" for {1,2,3,4}).
K-subsets are sorted tuples of points, keyed where needed by their
colexicographic rank (the combinatorial number system).
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterator, Sequence

from .errors import CapacityError, NotInGroupError

Perm = tuple[int, ...]
KSubset = tuple[int, ...]

# Group BFS refuses to grow past this many elements (8! covers n <= 8).
MAX_GROUP_ELEMENTS = 40_320


def identity_perm(n: int) -> Perm:
    if n < 1:
        raise ValueError(f"n must be >= 1 (got {n})")
    return tuple(range(n))


def cycle_perm(n: int) -> Perm:
    """The full cycle: point i goes to i+1, the last point wraps to the first."""
    if n < 1:
        raise ValueError(f"n must be >= 1 (got {n})")
    return tuple((i + 1) % n for i in range(n))


def transposition_perm(n: int) -> Perm:
    """The transposition swapping the first two points."""
    if n < 2:
        raise ValueError(f"n must be >= 2 (got {n})")
    return (1, 0) + tuple(range(2, n))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """"p then q": the result maps i to q(p(i)).

    Folding a word's letters through this operator left to right gives the
    permutation the word induces, matching how words act on states.
    """
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return tuple(q[i] for i in p)


def perm_inverse(p: Perm) -> Perm:
    inverse = [0] * len(p)
    for i, image in enumerate(p):
        inverse[image] = i
    return tuple(inverse)


def perm_order(p: Perm) -> int:
    """Least d >= 1 with p^d = identity (the lcm of the cycle lengths)."""
    seen = [False] * len(p)
    order = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        order = math.lcm(order, length)
    return order


def perm_from_word(generators: Sequence[Perm], word: Sequence[int]) -> Perm:
    """Compose the generators named by ``word``, left to right."""
    if not generators:
        raise ValueError("generators must be nonempty")
    acc = identity_perm(len(generators[0]))
    for c in word:
        if not 0 <= c < len(generators):
            raise ValueError(f"letter {c} does not name a generator")
        acc = perm_compose(acc, generators[c])
    return acc


def act_on_subset(p: Perm, subset: KSubset) -> KSubset:
    """Image of a subset under p, re-sorted."""
    for i in subset:
        if not 0 <= i < len(p):
            raise ValueError(f"point {i} is out of range for n={len(p)}")
    return tuple(sorted(p[i] for i in subset))


def colex_rank(subset: KSubset) -> int:
    """Colexicographic rank of a sorted k-subset of {0..n-1}."""
    return sum(math.comb(c, j + 1) for j, c in enumerate(subset))


def colex_unrank(rank: int, n: int, k: int) -> KSubset:
    """The k-subset of {0..n-1} with the given colexicographic rank."""
    if not 0 <= rank < math.comb(n, k):
        raise ValueError(f"rank {rank} out of range for {k}-subsets of [{n}]")
    out = [0] * k
    r = rank
    c = n
    for j in range(k, 0, -1):
        c -= 1
        while math.comb(c, j) > r:
            c -= 1
        out[j - 1] = c
        r -= math.comb(c, j)
    return tuple(out)


def ksubsets(n: int, k: int) -> Iterator[KSubset]:
    """All k-subsets of {0..n-1} in colexicographic order."""
    if k == 0:
        yield ()
        return
    for last in range(k - 1, n):
        for rest in ksubsets(last, k - 1):
            yield rest + (last,)


def _check_generators(generators: Sequence[Perm]) -> int:
    if not generators:
        raise ValueError("generators must be nonempty")
    n = len(generators[0])
    for g in generators[1:]:
        if len(g) != n:
            raise ValueError("generators must act on the same points")
    return n


def orbit(generators: Sequence[Perm], seed: KSubset) -> list[KSubset]:
    """BFS closure of ``seed`` under the generators, in discovery order.

    Subsets are deduplicated by colexicographic rank; neighbors expand in
    generator order, so the discovery order is deterministic.
    """
    n = _check_generators(generators)
    seed = tuple(sorted(seed))
    for i in seed:
        if not 0 <= i < n:
            raise ValueError(f"point {i} is out of range for n={n}")
    seen = {colex_rank(seed)}
    order = [seed]
    queue = deque(order)
    while queue:
        x = queue.popleft()
        for g in generators:
            y = act_on_subset(g, x)
            r = colex_rank(y)
            if r not in seen:
                seen.add(r)
                order.append(y)
                queue.append(y)
    return order


def synthesize_word(
    generators: Sequence[Perm],
    target: Perm,
    max_group_size: int = MAX_GROUP_ELEMENTS,
) -> tuple[int, ...]:
    """A shortest word over the generators whose composition equals ``target``.

    BFS over the generated group with generator-index tie-break. Raises
    NotInGroupError once the closure is exhausted without hitting the target,
    and CapacityError if the closure grows past ``max_group_size``.
    """
    n = _check_generators(generators)
    if len(target) != n:
        raise ValueError(f"size mismatch: target on {len(target)} points, n={n}")
    ident = identity_perm(n)
    parent: dict[Perm, tuple[Perm, int] | None] = {ident: None}
    queue = deque([ident])
    while queue:
        cur = queue.popleft()
        if cur == target:
            word: list[int] = []
            node = cur
            while parent[node] is not None:
                node, letter = parent[node]
                word.append(letter)
            return tuple(reversed(word))
        for idx, g in enumerate(generators):
            nxt = perm_compose(cur, g)
            if nxt not in parent:
                if len(parent) >= max_group_size:
                    raise CapacityError(
                        f"group closure exceeded {max_group_size} elements",
                        count=len(parent),
                    )
                parent[nxt] = (cur, idx)
                queue.append(nxt)
    raise NotInGroupError("target is not generated by the given permutations")
