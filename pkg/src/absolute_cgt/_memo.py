"""Bounded, thread-safe memo tables shared by the recursive engines."""

import threading

DEFAULT_MAXSIZE = 1 << 18

_registry = []


class Memo:
    """A dict cache that is cleared wholesale once it reaches ``maxsize``.

    Reads and inserts are guarded by a lock; the wrapped computation runs
    outside the lock, so two threads may occasionally compute the same entry.
    """

    def __init__(self, name, maxsize=DEFAULT_MAXSIZE):
        self.name = name
        self.maxsize = maxsize
        self._data = {}
        self._lock = threading.Lock()
        self.resets = 0
        _registry.append(self)

    def get(self, key, default=None):
        with self._lock:
            return self._data.get(key, default)

    def put(self, key, value):
        with self._lock:
            if len(self._data) >= self.maxsize:
                self._data.clear()
                self.resets += 1
            self._data[key] = value
        return value

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)


_MISSING = object()


def memoized(memo, key_fn):
    """Decorator caching ``fn`` in ``memo`` under ``key_fn(*args)``."""

    def wrap(fn):
        def inner(*args):
            key = key_fn(*args)
            hit = memo.get(key, _MISSING)
            if hit is not _MISSING:
                return hit
            return memo.put(key, fn(*args))

        inner.__name__ = fn.__name__
        inner.__qualname__ = fn.__qualname__
        inner.__doc__ = fn.__doc__
        inner.__wrapped__ = fn
        inner.memo = memo
        return inner

    return wrap


def set_cache_size(maxsize):
    """Set the size bound of every registered memo table."""
    for memo in _registry:
        memo.maxsize = maxsize


def clear_caches():
    for memo in _registry:
        memo.clear()
