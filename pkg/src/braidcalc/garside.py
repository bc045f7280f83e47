"""Garside left normal form and a conjugacy oracle for braid words.

Every braid element has a unique expression ``D^p F1 F2 ... Fm`` where
``D`` is the half twist, each factor ``Fi`` is a permutation braid (a
positive word in which any two strands cross at most once), the pair
``(Fi, Fi+1)`` is left weighted, no factor is trivial and no factor is
the full half twist.  Permutation braids are stored as their endpoint
permutations and all factor arithmetic happens on permutations, so no
precomputed tables are needed and any strand count works.

Conjugacy is decided through super summit sets: cycling raises the
infimum to its conjugacy maximum, decycling lowers the supremum to its
minimum, and the set of all conjugates with those extremal values is
closed under conjugation by permutation braids.  Two elements are
conjugate exactly when their super summit sets coincide.  The search
explores that set with a node cap and reports an inconclusive verdict
if the cap is exceeded.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .words import (
    BraidWord,
    concat,
    exponent_sum,
    free_reduce,
    inverse,
    permutation,
)

__all__ = [
    "NormalForm",
    "normal_form",
    "normal_form_word",
    "factor_word",
    "words_equal",
    "is_trivial",
    "Verdict",
    "ConjugacyReport",
    "conjugacy_test",
    "DEFAULT_NODE_CAP",
]

DEFAULT_NODE_CAP = 10_000

Perm = tuple[int, ...]


def _identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def _half_twist(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def _tau(i: int, n: int) -> Perm:
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def _mul(p: Perm, q: Perm) -> Perm:
    # composition as functions, q applied first
    return tuple(p[q[i] - 1] for i in range(len(p)))


def _inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def _flip(p: Perm) -> Perm:
    # conjugation by the half twist
    w0 = _half_twist(len(p))
    return _mul(w0, _mul(p, w0))


def _starting(p: Perm) -> set[int]:
    # i such that sigma_i is a left divisor of the permutation braid
    inv = _inv(p)
    return {i for i in range(1, len(p)) if inv[i - 1] > inv[i]}


def _finishing(p: Perm) -> set[int]:
    # i such that sigma_i is a right divisor
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def factor_word(p: Perm) -> tuple[int, ...]:
    """A positive word for a permutation braid, deterministic per input.

    Bubble sorting the image tuple to the identity records one letter
    per inversion; the reversed record is a word whose endpoint
    permutation is ``p``.
    """

    arr = list(p)
    record: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                record.append(i + 1)
                changed = True
    return tuple(reversed(record))


@dataclass(frozen=True)
class NormalForm:
    """Left normal form ``D^power F1 ... Fm`` with factors as permutations.

    Structural equality of normal forms is equality of braid elements.
    ``power`` is the infimum; ``power + len(factors)`` is the supremum.
    """

    index: int
    power: int
    factors: tuple[Perm, ...]

    @property
    def inf(self) -> int:
        return self.power

    @property
    def sup(self) -> int:
        return self.power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.power == 0 and not self.factors


def normal_form(w: BraidWord) -> NormalForm:
    """Compute the left normal form of a braid word."""
    n = w.index
    w0 = _half_twist(n)
    power = 0
    factors: list[Perm] = []
    for g in w.letters:
        if g > 0:
            factors.append(_tau(g, n))
        else:
            # sigma_g^-1 = D^-1 (D sigma_g^-1); push D^-1 to the front
            factors = [_flip(f) for f in factors]
            power -= 1
            factors.append(_mul(w0, _tau(-g, n)))
    factors = _left_weight(factors, n)
    while factors and factors[0] == w0:
        factors.pop(0)
        power += 1
    return NormalForm(n, power, tuple(factors))


def _left_weight(factors: list[Perm], n: int) -> list[Perm]:
    identity = _identity(n)
    factors = [f for f in factors if f != identity]
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            x, y = factors[j], factors[j + 1]
            moved = False
            while True:
                pending = _starting(y) - _finishing(x)
                if not pending:
                    break
                i = min(pending)
                t = _tau(i, n)
                x = _mul(x, t)
                y = _mul(t, y)
                moved = True
            if moved:
                factors[j], factors[j + 1] = x, y
                changed = True
        if changed:
            factors = [f for f in factors if f != identity]
    return factors


def normal_form_word(nf: NormalForm) -> BraidWord:
    """A word evaluating to the element the normal form represents."""
    n = nf.index
    letters: list[int] = []
    twist = factor_word(_half_twist(n))
    if nf.power >= 0:
        letters.extend(twist * nf.power)
    else:
        undo = tuple(-g for g in reversed(twist))
        letters.extend(undo * (-nf.power))
    for f in nf.factors:
        letters.extend(factor_word(f))
    return BraidWord(n, letters)


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    """Whether two words on the same strand count are the same element."""
    if u.index != v.index:
        raise ValueError(f"strand counts differ: {u.index} versus {v.index}")
    return normal_form(u) == normal_form(v)


def is_trivial(w: BraidWord) -> bool:
    """Whether the word is the identity element."""
    return normal_form(w).is_identity()


class Verdict(enum.Enum):
    CONJUGATE = "conjugate"
    NOT_CONJUGATE = "not-conjugate"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConjugacyReport:
    """Outcome of a conjugacy test plus the node count the search used."""

    verdict: Verdict
    nodes: int


def _conj(x: NormalForm, s: Perm) -> NormalForm:
    sw = BraidWord(x.index, factor_word(s))
    return normal_form(
        free_reduce(concat(inverse(sw), normal_form_word(x), sw))
    )


def _cycle_once(x: NormalForm) -> NormalForm:
    a = concat(
        normal_form_word(NormalForm(x.index, x.power, ())),
        BraidWord(x.index, factor_word(x.factors[0])),
    )
    return normal_form(
        free_reduce(concat(inverse(a), normal_form_word(x), a))
    )


def _decycle_once(x: NormalForm) -> NormalForm:
    a = BraidWord(x.index, factor_word(x.factors[-1]))
    return normal_form(
        free_reduce(concat(a, normal_form_word(x), inverse(a)))
    )


def _summit_representative(x: NormalForm) -> NormalForm:
    # raise inf by cycling, lower sup by decycling, until both settle
    while True:
        settled = True
        seen = {x}
        while x.factors:
            y = _cycle_once(x)
            if y.inf > x.inf:
                x = y
                settled = False
                seen = {x}
                continue
            if y in seen:
                break
            seen.add(y)
            x = y
        seen = {x}
        while x.factors:
            y = _decycle_once(x)
            if y.sup < x.sup:
                x = y
                settled = False
                seen = {x}
                continue
            if y in seen:
                break
            seen.add(y)
            x = y
        if settled:
            return x


def _all_simples(n: int) -> list[Perm]:
    return [
        p
        for p in itertools.permutations(range(1, n + 1))
        if p != _identity(n)
    ]


def conjugacy_test(
    u: BraidWord, v: BraidWord, node_cap: int = DEFAULT_NODE_CAP
) -> ConjugacyReport:
    """Decide conjugacy of two words on the same strand count.

    Cheap invariants run first: exponent sum and the cycle type of the
    endpoint permutation both separate non-conjugate pairs at no cost.
    Otherwise the super summit set of ``u`` is enumerated, conjugating
    by every permutation braid and keeping elements whose infimum and
    supremum match the summit values; ``v`` is conjugate to ``u``
    exactly when its own summit representative lands in that set.  If
    the set would exceed ``node_cap`` elements the verdict is
    inconclusive.  The search is deterministic: simples are tried in a
    fixed order and the frontier is processed first in, first out.
    """

    if u.index != v.index:
        raise ValueError(f"strand counts differ: {u.index} versus {v.index}")
    if exponent_sum(u) != exponent_sum(v):
        return ConjugacyReport(Verdict.NOT_CONJUGATE, 0)
    if _cycle_type(u) != _cycle_type(v):
        return ConjugacyReport(Verdict.NOT_CONJUGATE, 0)

    nu = _summit_representative(normal_form(u))
    nv = _summit_representative(normal_form(v))
    if (nu.inf, nu.sup) != (nv.inf, nv.sup):
        return ConjugacyReport(Verdict.NOT_CONJUGATE, 2)
    if nu == nv:
        return ConjugacyReport(Verdict.CONJUGATE, 2)

    simples = _all_simples(u.index)
    seen = {nu}
    frontier = [nu]
    while frontier:
        next_frontier: list[NormalForm] = []
        for x in frontier:
            for s in simples:
                y = _conj(x, s)
                if (y.inf, y.sup) != (nu.inf, nu.sup) or y in seen:
                    continue
                if y == nv:
                    return ConjugacyReport(Verdict.CONJUGATE, len(seen) + 1)
                if len(seen) >= node_cap:
                    return ConjugacyReport(Verdict.INCONCLUSIVE, len(seen))
                seen.add(y)
                next_frontier.append(y)
        frontier = next_frontier
    return ConjugacyReport(Verdict.NOT_CONJUGATE, len(seen))


def _cycle_type(w: BraidWord) -> tuple[int, ...]:
    perm = permutation(w)
    seen = [False] * len(perm)
    sizes = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        size = 0
        t = s
        while not seen[t]:
            seen[t] = True
            size += 1
            t = perm[t] - 1
        sizes.append(size)
    return tuple(sorted(sizes))
