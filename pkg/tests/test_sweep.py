import pytest

from pydickson.search import _search_chunk
from pydickson.sweep import Sweep
from pydickson.util.exceptions import RangeError


def _boom(chunk):
    raise RuntimeError(f"chunk {chunk[0]}")


class TestSweepConstructor:
    def test_init(self):
        with pytest.raises(ValueError):
            _ = Sweep(concurrency=0)

        _ = Sweep()
        _ = Sweep(concurrency=4)


class TestSweepChunks:
    def test_contiguous(self):
        chunks = Sweep(concurrency=1).chunks(list(range(10)))
        assert chunks == [[0, 1, 2], [3, 4, 5], [6, 7], [8, 9]]

    def test_fewer_items_than_chunks(self):
        chunks = Sweep(concurrency=4).chunks([1, 2, 3])
        assert chunks == [[1], [2], [3]]

    def test_empty(self):
        assert Sweep(concurrency=2).chunks([]) == [[]]


class TestSweepMap:
    def test_in_process(self):
        result = Sweep(concurrency=1).map(_search_chunk, list(range(1, 24)), args=(5, True, False))
        assert [r["n"] for r in result] == list(range(1, 24))

    def test_pool_matches_in_process(self):
        items = list(range(1, 48))
        serial = Sweep(concurrency=1).map(_search_chunk, items, args=(7, True, False))
        pooled = Sweep(concurrency=2).map(_search_chunk, items, args=(7, True, False))
        assert pooled == serial

    def test_exception_in_process(self):
        with pytest.raises(RuntimeError):
            Sweep(concurrency=1).map(_boom, [1, 2, 3])

    def test_exception_in_pool(self):
        with pytest.raises(RangeError):
            Sweep(concurrency=2).map(_search_chunk, [1, 2, 30], args=(5, True, False))
