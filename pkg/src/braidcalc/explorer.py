"""Best-first search for move sequences that lower a braid's complexity.

States are braid words up to rotation and free reduction; moves are
destabilizations, exchange moves, conjugations by single generators,
and a bounded number of stabilizations.  The objective is the proxy
pair (strand count, cyclically reduced length), ordered
lexicographically: strand count first, mirroring the index-first
complexity ordering the move theory is organized around.  The search
returns a replayable tower to the best state found, never worse than
the start, and is deterministic for a fixed input and configuration.

Every stored state is freely and cyclically reduced, and the clean-up
conjugations that bring a raw move result into that form are recorded
in the tower alongside the move itself.  Keeping states reduced is
what exposes destabilization sites: a marked letter buried under
conjugation debris surfaces once the seam cancellations are applied.
The site finders scan the whole word, so no rotation normalization is
needed; the state key identifies rotations regardless.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .moves import (
    Conjugate,
    Destabilize,
    Exchange,
    Move,
    Stabilize,
    Tower,
    apply_destabilize,
    apply_exchange,
    extend,
    find_destabilizations,
    find_exchanges,
    stabilize,
)
from .words import BraidWord, conjugate, cyclic_reduce, free_reduce

__all__ = [
    "SearchConfig",
    "SearchOutcome",
    "canonical_key",
    "proxy_complexity",
    "search_reduce",
]


@dataclass(frozen=True)
class SearchConfig:
    """Caps that keep the search space finite.

    ``max_index`` bounds the strand count outright;
    ``max_extra_stabilizations`` bounds it relative to the input.
    ``conjugation_generators`` caps how many generator indices are
    tried as conjugators at each state.
    """

    max_index: int = 16
    max_extra_stabilizations: int = 2
    max_word_length: int = 64
    node_budget: int = 50_000
    conjugation_generators: int = 16

    def __post_init__(self):
        if self.max_index < 1 or self.max_word_length < 1:
            raise ValueError(f"caps must be positive: {self}")
        if self.node_budget < 1 or self.conjugation_generators < 1:
            raise ValueError(f"caps must be positive: {self}")
        if self.max_extra_stabilizations < 0:
            raise ValueError(f"negative stabilization cap: {self}")


@dataclass(frozen=True)
class SearchOutcome:
    """Best tower found, its endpoint, and how the search stopped.

    ``exhausted`` is true when the node budget ran out with frontier
    states still unexplored; ``nodes`` counts states expanded.
    """

    best: Tower
    reached: BraidWord
    proxy_complexity: tuple[int, int]
    exhausted: bool
    nodes: int


def proxy_complexity(w: BraidWord) -> tuple[int, int]:
    """The search objective: (strand count, cyclically reduced length)."""
    return (w.index, len(cyclic_reduce(w).letters))


def canonical_key(w: BraidWord) -> tuple[int, tuple[int, ...]]:
    """A state key shared by rotations of the freely reduced cyclic word."""
    letters = cyclic_reduce(w).letters
    if not letters:
        return (w.index, ())
    # byte encoding keeps the rotation scan in C; +128 preserves order
    enc = bytes(g + 128 for g in letters)
    least = min(enc[k:] + enc[:k] for k in range(len(enc)))
    return (w.index, tuple(x - 128 for x in least))


def _normalize(word: BraidWord) -> tuple[BraidWord, tuple[Move, ...]]:
    # reduce a raw move result freely and around the seam, recording the
    # clean-up as replayable moves
    moves: list[Move] = []
    reduced = free_reduce(word)
    if reduced.letters != word.letters:
        moves.append(Conjugate(BraidWord(word.index, ())))
        word = reduced
    while word.letters and word.letters[0] == -word.letters[-1]:
        g = BraidWord(word.index, (-word.letters[0],))
        moves.append(Conjugate(g))
        word = conjugate(word, g)
    return word, tuple(moves)


def _children(
    word: BraidWord, index_cap: int, cfg: SearchConfig
) -> list[tuple[Move, BraidWord]]:
    out: list[tuple[Move, BraidWord]] = []
    for site in find_destabilizations(word):
        out.append(
            (Destabilize(site.sign), apply_destabilize(word, site))
        )
    for site in find_exchanges(word):
        out.append(
            (Exchange(site.cut1, site.cut2), apply_exchange(word, site))
        )
    breadth = min(word.index - 1, cfg.conjugation_generators)
    for i in range(1, breadth + 1):
        for s in (1, -1):
            g = BraidWord(word.index, (s * i,))
            out.append((Conjugate(g), conjugate(word, g)))
    if word.index < index_cap:
        for s in (1, -1):
            out.append((Stabilize(s), stabilize(word, s)))
    return out


def search_reduce(
    w: BraidWord, cfg: SearchConfig | None = None
) -> SearchOutcome:
    """Search for a tower from ``w`` to minimal proxy complexity.

    Expansion is best-first on (proxy complexity, state key), which
    fixes the outcome independently of scheduling.  The returned tower
    replays, preserves the closure fingerprint by construction, and
    ends at a state no worse than the input.
    """

    if cfg is None:
        cfg = SearchConfig()
    if cfg.max_index < w.index:
        raise ValueError(
            f"max_index {cfg.max_index} below input index {w.index}"
        )
    index_cap = min(cfg.max_index, w.index + cfg.max_extra_stabilizations)
    floor = (1, 0)

    root, root_cleanup = _normalize(w)
    # parent-linked store: (state word, parent position, edge moves)
    nodes: list[tuple[BraidWord, int, tuple[Move, ...]]] = [
        (root, -1, root_cleanup)
    ]
    root_key = canonical_key(root)
    seen = {root_key}
    heap = [(proxy_complexity(root), root_key, 0, 0)]
    best_rank = (proxy_complexity(root), root_key)
    best_at = 0
    expanded = 0
    seq = 0

    while heap and expanded < cfg.node_budget:
        rank, key, _, at = heapq.heappop(heap)
        expanded += 1
        if (rank, key) < best_rank:
            best_rank = (rank, key)
            best_at = at
        if best_rank[0] == floor:
            break
        word = nodes[at][0]
        for move, raw in _children(word, index_cap, cfg):
            if len(raw.letters) > cfg.max_word_length:
                continue
            child_key = canonical_key(raw)
            if child_key in seen:
                continue
            seen.add(child_key)
            child, cleanup = _normalize(raw)
            nodes.append((child, at, (move, *cleanup)))
            seq += 1
            heapq.heappush(
                heap,
                (proxy_complexity(child), child_key, seq, len(nodes) - 1),
            )

    path: list[Move] = []
    at = best_at
    while at != -1:
        _, parent, edge = nodes[at]
        path.extend(reversed(edge))
        at = parent
    tower = Tower(w)
    for move in reversed(path):
        tower = extend(tower, move)
    return SearchOutcome(
        best=tower,
        reached=tower.final,
        proxy_complexity=best_rank[0],
        exhausted=bool(heap) and best_rank[0] != floor,
        nodes=expanded,
    )
