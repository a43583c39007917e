"""Permutations, pattern containment, and pattern-avoidance counting.

Conventions used throughout the package:

- A permutation of length n has entries that are exactly 1..n, each once.
- Entry values and positions are both 1-based in every public result, so
  statements like "position 3 holds a left-to-right minimum" can be read
  off directly.
- Pattern containment is classical: p contains q when some subsequence of
  p is order-isomorphic to q, and p avoids q otherwise.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

__all__ = [
    "Pattern",
    "Permutation",
    "contains",
    "count_avoiders",
    "enumerate_avoiders",
    "left_to_right_minima",
    "right_to_left_maxima",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n stored as a tuple of entries.

    >>> Permutation.parse("3612745").entries
    (3, 6, 1, 2, 7, 4, 5)
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"entries must be exactly 1..{n}: {entries!r}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse "3612745" (single digits) or "10,2,3,..." (comma form)."""
        text = text.strip()
        if not text:
            raise ValueError("empty permutation text")
        if "," in text or " " in text:
            parts = text.replace(",", " ").split()
        else:
            parts = list(text)
        try:
            return cls(tuple(int(part) for part in parts))
        except ValueError:
            raise ValueError(f"not a permutation: {text!r}") from None

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        if self.entries and max(self.entries) > 9:
            return ",".join(str(e) for e in self.entries)
        return "".join(str(e) for e in self.entries)


@dataclass(frozen=True)
class Pattern(Permutation):
    """A nonempty permutation used as a containment pattern."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.entries:
            raise ValueError("a pattern must have length at least 1")


def _entries_of(p: Permutation | Sequence[int]) -> tuple[int, ...]:
    if isinstance(p, Permutation):
        return p.entries
    if isinstance(p, str):
        return Permutation.parse(p).entries
    return tuple(p)


def left_to_right_minima(p: Permutation | Sequence[int]) -> tuple[int, ...]:
    """1-based positions whose entry is smaller than every entry before it.

    >>> left_to_right_minima(Permutation.parse("3612745"))
    (1, 3)
    """
    positions = []
    best: int | None = None
    for i, value in enumerate(_entries_of(p), start=1):
        if best is None or value < best:
            positions.append(i)
            best = value
    return tuple(positions)


def right_to_left_maxima(p: Permutation | Sequence[int]) -> tuple[int, ...]:
    """1-based positions whose entry is larger than every entry after it.

    >>> right_to_left_maxima(Permutation.parse("3612745"))
    (5, 7)
    """
    entries = _entries_of(p)
    positions = []
    best: int | None = None
    for i in range(len(entries), 0, -1):
        value = entries[i - 1]
        if best is None or value > best:
            positions.append(i)
            best = value
    return tuple(reversed(positions))


class _PatternMatcher:
    """Backtracking matcher for one fixed pattern.

    Slots are matched left to right; each candidate entry must sit inside
    the open value window determined by the already-matched slots, which
    prunes most branches long before all positions are tried.
    """

    def __init__(self, pattern: Sequence[int]):
        self.pattern = tuple(pattern)
        k = len(self.pattern)
        # smaller[j] / larger[j]: earlier slots whose pattern value is
        # below / above slot j's pattern value.
        self.smaller: list[tuple[int, ...]] = []
        self.larger: list[tuple[int, ...]] = []
        for j in range(k):
            self.smaller.append(
                tuple(i for i in range(j) if self.pattern[i] < self.pattern[j])
            )
            self.larger.append(
                tuple(i for i in range(j) if self.pattern[i] > self.pattern[j])
            )
        # below_last[j]: slot j's pattern value sits below the final slot's.
        self.below_last = tuple(
            self.pattern[j] < self.pattern[k - 1] for j in range(max(k - 1, 0))
        )

    def found_in(self, entries: Sequence[int]) -> bool:
        k = len(self.pattern)
        n = len(entries)
        if k == 0:
            return True
        if k > n:
            return False
        chosen = [0] * k

        def extend(slot: int, start: int) -> bool:
            last = slot == k - 1
            for pos in range(start, n - (k - slot) + 1):
                value = entries[pos]
                if any(value <= chosen[i] for i in self.smaller[slot]):
                    continue
                if any(value >= chosen[i] for i in self.larger[slot]):
                    continue
                chosen[slot] = value
                if last or extend(slot + 1, pos + 1):
                    return True
            return False

        return extend(0, 0)

    def found_ending_with(self, entries: Sequence[int], value: int) -> bool:
        """Would appending `value` complete an occurrence ending there?"""
        k = len(self.pattern)
        if k == 1:
            return True
        if len(entries) < k - 1:
            return False
        chosen = [0] * (k - 1)
        n = len(entries)

        def extend(slot: int, start: int) -> bool:
            last = slot == k - 2
            below = self.below_last[slot]
            for pos in range(start, n - (k - 2 - slot)):
                v = entries[pos]
                if (v < value) != below:
                    continue
                if any(v <= chosen[i] for i in self.smaller[slot]):
                    continue
                if any(v >= chosen[i] for i in self.larger[slot]):
                    continue
                chosen[slot] = v
                if last or extend(slot + 1, pos + 1):
                    return True
            return False

        return extend(0, 0)


def contains(
    p: Permutation | Sequence[int], q: Pattern | Permutation | Sequence[int]
) -> bool:
    """True when p has a subsequence order-isomorphic to q.

    >>> contains(Permutation.parse("2537164"), Pattern.parse("1324"))
    True
    >>> contains(Permutation.parse("3612745"), Pattern.parse("1324"))
    False
    """
    return _PatternMatcher(_entries_of(q)).found_in(_entries_of(p))


_PATTERN_1324 = (1, 3, 2, 4)


def _search_1324(n: int, prefix: list[int], theta: float) -> Iterator[tuple[int, ...]]:
    """Yield all completions of `prefix` to 1324-avoiding permutations.

    `theta` is the smallest value that tops a 132 occurrence inside the
    prefix (+inf when there is none); appending v creates a 1324 exactly
    when some whole 132 occurrence sits below v, i.e. when v > theta.
    """
    n_used = len(prefix)
    if n_used == n:
        yield tuple(prefix)
        return
    used = set(prefix)
    for v in range(1, n + 1):
        if v > theta:
            break
        if v in used:
            continue
        # Minimum value above v that follows some value below v: appending
        # v turns each such pair into a fresh 132 occurrence topped by it.
        new_top: float = theta
        armed = False
        for u in prefix:
            if armed and v < u < new_top:
                new_top = u
            elif not armed and u < v:
                armed = True
        prefix.append(v)
        yield from _search_1324(n, prefix, new_top)
        prefix.pop()


def _search_generic(
    n: int, prefix: list[int], matcher: _PatternMatcher
) -> Iterator[tuple[int, ...]]:
    if len(prefix) == n:
        yield tuple(prefix)
        return
    used = set(prefix)
    for v in range(1, n + 1):
        if v in used or matcher.found_ending_with(prefix, v):
            continue
        prefix.append(v)
        yield from _search_generic(n, prefix, matcher)
        prefix.pop()


def _count_1324(n: int, prefix: list[int], theta: float) -> int:
    n_used = len(prefix)
    remaining = n - n_used
    used = set(prefix)
    total = 0
    for v in range(1, n + 1):
        if v > theta:
            break
        if v in used:
            continue
        if remaining == 1:
            total += 1
            continue
        new_top: float = theta
        armed = False
        for u in prefix:
            if armed and v < u < new_top:
                new_top = u
            elif not armed and u < v:
                armed = True
        prefix.append(v)
        total += _count_1324(n, prefix, new_top)
        prefix.pop()
    return total


def _count_generic(n: int, prefix: list[int], matcher: _PatternMatcher) -> int:
    remaining = n - len(prefix)
    used = set(prefix)
    total = 0
    for v in range(1, n + 1):
        if v in used or matcher.found_ending_with(prefix, v):
            continue
        if remaining == 1:
            total += 1
        else:
            prefix.append(v)
            total += _count_generic(n, prefix, matcher)
            prefix.pop()
    return total


def _flatten(entries: tuple[int, ...]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(entries), start=1)}
    return tuple(ranks[v] for v in entries)


def _count_shard(args: tuple[int, tuple[int, ...], int]) -> int:
    n, pattern, first = args
    if pattern == _PATTERN_1324:
        if n == 1:
            return 1
        return _count_1324(n, [first], float("inf"))
    matcher = _PatternMatcher(pattern)
    if matcher.found_ending_with((), first):
        return 0
    if n == 1:
        return 1
    return _count_generic(n, [first], matcher)


def count_avoiders(
    n: int, q: Pattern | Permutation | Sequence[int], *, workers: int = 1
) -> int:
    """Number of permutations of 1..n avoiding q.

    The search builds permutations entry by entry and abandons a prefix as
    soon as the newest entry completes an occurrence of q, so every node
    visited is itself q-avoiding.  With `workers > 1` the search is
    sharded by first entry across processes; shard totals are summed, so
    the result does not depend on the worker count.

    >>> count_avoiders(4, Pattern.parse("1324"))
    23
    >>> count_avoiders(5, Pattern.parse("132"))
    42
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    pattern = _flatten(_entries_of(q))
    if not pattern:
        raise ValueError("pattern must be nonempty")
    if n == 0:
        return 1
    if len(pattern) > n:
        return _factorial(n)
    shards = [(n, pattern, first) for first in range(1, n + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_count_shard, shards))
    return sum(_count_shard(shard) for shard in shards)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def enumerate_avoiders(
    n: int, q: Pattern | Permutation | Sequence[int]
) -> Iterator[Permutation]:
    """Yield the q-avoiding permutations of 1..n in lexicographic order.

    >>> [str(p) for p in enumerate_avoiders(3, Pattern.parse("132"))]
    ['123', '213', '231', '312', '321']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    pattern = _flatten(_entries_of(q))
    if not pattern:
        raise ValueError("pattern must be nonempty")
    if n == 0:
        yield Permutation(())
        return
    if pattern == _PATTERN_1324:
        walk: Iterator[tuple[int, ...]] = _search_1324(n, [], float("inf"))
    else:
        walk = _search_generic(n, [], _PatternMatcher(pattern))
    for entries in walk:
        yield Permutation(entries)


def default_worker_count() -> int:
    """Worker count from PERMWORDS_THREADS, else 1."""
    raw = os.environ.get("PERMWORDS_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


if __name__ == "__main__":
    import doctest

    doctest.testmod()
