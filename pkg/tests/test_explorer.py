"""Best-first reduction search."""

import random

import pytest

from braidcalc.explorer import (
    SearchConfig,
    canonical_key,
    proxy_complexity,
    search_reduce,
)
from braidcalc.invariants import fingerprint
from braidcalc.moves import (
    apply_exchange,
    find_exchanges,
    replay,
    stabilize,
)
from braidcalc.words import BraidWord, conjugate


def test_config_validation():
    cfg = SearchConfig()
    assert cfg.node_budget == 50_000
    with pytest.raises(ValueError):
        SearchConfig(max_index=0)
    with pytest.raises(ValueError):
        SearchConfig(node_budget=0)
    with pytest.raises(ValueError):
        SearchConfig(max_extra_stabilizations=-1)
    with pytest.raises(ValueError):
        search_reduce(BraidWord(5, ()), SearchConfig(max_index=4))


def test_proxy_complexity():
    assert proxy_complexity(BraidWord(3, (1, -2))) == (3, 2)
    assert proxy_complexity(BraidWord(3, (1, 2, -1))) == (3, 1)
    assert proxy_complexity(BraidWord(1, ())) == (1, 0)


def test_canonical_key():
    assert canonical_key(BraidWord(3, (2, 1))) == canonical_key(
        BraidWord(3, (1, 2))
    )
    assert canonical_key(BraidWord(3, (1,))) != canonical_key(
        BraidWord(3, (2,))
    )
    assert canonical_key(BraidWord(2, (1, -1))) == canonical_key(
        BraidWord(2, ())
    )
    assert canonical_key(BraidWord(2, ())) != canonical_key(BraidWord(3, ()))


def test_two_syntactic_destabilizations():
    out = search_reduce(BraidWord(3, (1, -2)))
    assert out.proxy_complexity == (1, 0)
    assert out.reached == BraidWord(1, ())
    destabs = [
        s for s in out.best.steps if type(s.move).__name__ == "Destabilize"
    ]
    assert len(destabs) == 2
    report = replay(out.best)
    assert report.ok and report.constant


def test_trefoil_stops_at_its_braid_index():
    out = search_reduce(BraidWord(3, (1, 1, 1, 2)))
    assert out.proxy_complexity == (2, 3)
    assert out.reached.index == 2
    assert not out.exhausted
    report = replay(out.best)
    assert report.ok and report.constant


def test_obfuscated_unknot_recovery():
    rng = random.Random(99)
    w = BraidWord(2, (1,))
    w = stabilize(w, 1)
    w = stabilize(w, -1)
    for _ in range(3):
        g = rng.choice([1, -1, 2, -2, 3, -3])
        w = conjugate(w, BraidWord(w.index, (g,)))
    sites = find_exchanges(w)
    if sites:
        w = apply_exchange(w, sites[0])
    out = search_reduce(w)
    assert out.proxy_complexity == (1, 0)
    assert fingerprint(out.reached) == fingerprint(w)
    report = replay(out.best)
    assert report.ok and report.constant


def test_search_never_worsens():
    for letters in [(), (1, 2), (1, 1, 2, -1, -2), (1, -2, 1, -2)]:
        w = BraidWord(3, letters)
        out = search_reduce(w)
        assert out.proxy_complexity <= proxy_complexity(w)
        assert out.reached == out.best.final
        assert proxy_complexity(out.reached) == out.proxy_complexity


def test_search_tower_starts_at_input():
    w = BraidWord(3, (2, 1, -2, 1))
    out = search_reduce(w)
    assert out.best.initial == w
    assert replay(out.best).ok


def test_determinism():
    w = BraidWord(4, (1, -2, 3, 1, -2, 3))
    a = search_reduce(w)
    b = search_reduce(w)
    assert a.nodes == b.nodes
    assert a.reached == b.reached
    assert [s.move for s in a.best.steps] == [s.move for s in b.best.steps]


def test_budget_exhaustion_is_reported():
    w = BraidWord(4, (1, -2, 3, 1, -2, 3))
    full = search_reduce(w)
    tiny = search_reduce(w, SearchConfig(node_budget=2))
    assert tiny.nodes <= 2
    if tiny.proxy_complexity > (1, 0):
        assert tiny.exhausted or tiny.proxy_complexity == full.proxy_complexity
    assert tiny.proxy_complexity >= full.proxy_complexity
