import random

import pytest

import partheap

HEAPS = [partheap.LPHeap, partheap.FHTNGHeap, partheap.ExpHeap]


@pytest.mark.parametrize("cls", HEAPS)
def test_heapsort(cls):
    rng = random.Random(5)
    keys = [rng.randint(-1000, 1000) for _ in range(2000)]
    h = cls()
    for k in keys:
        h.insert(k)
    assert len(h) == len(keys)
    assert h.find_min() == min(keys)
    out = [h.delete_min() for _ in range(len(keys))]
    assert out == sorted(keys)
    assert not h


@pytest.mark.parametrize("cls", HEAPS)
def test_decrease_key_and_handles(cls):
    h = cls()
    handles = [h.insert(k) for k in range(100, 200)]
    h.decrease_key(handles[50], 1)
    assert h.key_of(handles[50]) == 1
    assert h.find_min() == 1
    assert h.delete_min() == 1
    with pytest.raises(partheap.HeapError, match="dead-handle"):
        h.decrease_key(handles[50], 0)
    with pytest.raises(partheap.HeapError, match="key-increase"):
        h.decrease_key(handles[0], 500)
    ok, summary = h.audit()
    assert ok, summary


def test_empty_heap_errors():
    h = partheap.ExpHeap()
    with pytest.raises(partheap.HeapError, match="empty-heap"):
        h.delete_min()


def test_potential_parts():
    h = partheap.FHTNGHeap()
    h.insert(1)
    h.insert(2)
    assert h.potential() == [1, 1, 0]


def test_generate_and_run_agree_across_heaps():
    trace = partheap.generate_trace("dijkstra-like", 3000, seed=4)
    outputs = []
    for impl in ("lp", "fhtng", "exp"):
        result = partheap.run_trace(trace, impl, oracle=True, audit_every=10)
        assert result["ok"], result["failure"]
        outputs.append(result["outputs"])
    assert outputs[0] == outputs[1] == outputs[2]


def test_run_reports_lemma_tallies():
    trace = partheap.generate_trace("random", 2000, seed=1)
    result = partheap.run_trace(trace, "lp", phi=True)
    assert result["lemma_ok"]
    checked, skipped, failed = result["lemmas"]["lp/insert"]
    assert checked > 0 and failed == 0


def test_bad_arguments():
    with pytest.raises(ValueError):
        partheap.generate_trace("zigzag", 10)
    with pytest.raises(partheap.HeapError, match="malformed"):
        partheap.run_trace("i 1\nz\n")
