"""Brute-force ground truth by breadth-first search on the Cayley graph.

Shares nothing with the lifting code except the generator action (swap of
circularly adjacent window cells), which both sides must agree on.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass, field
from math import factorial

from .lift import circular_length
from .perm import CircularArrangement, InvalidArrangement

__all__ = [
    "MAX_BFS_N",
    "MAX_TABLE_N",
    "OracleLimitError",
    "DistanceTable",
    "EquivalenceReport",
    "encode",
    "decode",
    "bfs_distance",
    "exhaustive_table",
    "check_equivalence",
]

MAX_BFS_N = 9
MAX_TABLE_N = 8


class OracleLimitError(ValueError):
    pass


def encode(window) -> int:
    """Pack a window into one integer, base n + 1."""
    base = len(window) + 1
    code = 0
    for x in window:
        code = code * base + x
    return code


def decode(code: int, n: int) -> tuple[int, ...]:
    base = n + 1
    out = []
    for _ in range(n):
        code, x = divmod(code, base)
        out.append(x)
    return tuple(reversed(out))


def _sorted_windows(n: int) -> list[tuple[int, ...]]:
    base = list(range(1, n + 1))
    out = []
    for k in range(n):
        rot = base[k:] + base[:k]
        out.append(tuple(rot))
        out.append(tuple(reversed(rot)))
    return out


def _neighbours(w: tuple[int, ...]):
    n = len(w)
    for i in range(n):
        j = (i + 1) % n
        lst = list(w)
        lst[i], lst[j] = lst[j], lst[i]
        yield tuple(lst)


def _check_n(n: int, limit: int) -> None:
    if n < 3:
        raise InvalidArrangement(f"need at least 3 regions, got {n}")
    if n > limit:
        raise OracleLimitError(f"n={n} exceeds the oracle limit of {limit}")


def bfs_distance(a: CircularArrangement) -> int:
    """Shortest generator word taking ``a`` into the identity's dihedral class."""
    n = a.n
    _check_n(n, MAX_BFS_N)
    targets = {encode(w) for w in _sorted_windows(n)}
    start = tuple(a.window)
    if encode(start) in targets:
        return 0
    seen = {encode(start)}
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for w in frontier:
            for v in _neighbours(w):
                code = encode(v)
                if code in targets:
                    return depth
                if code not in seen:
                    seen.add(code)
                    nxt.append(v)
        frontier = nxt
    raise AssertionError("Cayley graph is connected; target must be reachable")


@dataclass(frozen=True)
class DistanceTable:
    n: int
    entries: dict[int, int]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, a: CircularArrangement | tuple[int, ...]) -> int:
        window = a.window if isinstance(a, CircularArrangement) else tuple(a)
        return self.entries[encode(window)]

    def items(self):
        for code, dist in self.entries.items():
            yield decode(code, self.n), dist

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.entries.values()).items()))

    def histogram_text(self) -> str:
        return "".join(f"{d} {c}\n" for d, c in self.histogram().items())


def _build_table(n: int) -> DistanceTable:
    dist: dict[int, int] = {}
    queue: deque[tuple[tuple[int, ...], int]] = deque()
    for w in _sorted_windows(n):
        code = encode(w)
        if code not in dist:
            dist[code] = 0
            queue.append((w, 0))
    while queue:
        w, d = queue.popleft()
        for v in _neighbours(w):
            code = encode(v)
            if code not in dist:
                dist[code] = d + 1
                queue.append((v, d + 1))
    assert len(dist) == factorial(n)
    return DistanceTable(n, dist)


def exhaustive_table(n: int) -> DistanceTable:
    """Distances of all n! windows by multi-source BFS from the sorted class."""
    _check_n(n, MAX_TABLE_N)
    return _build_table(n)


@dataclass
class EquivalenceReport:
    n: int
    checked: int = 0
    mismatches: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)
    histogram: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_equivalence(
    n: int, sample_size: int | None = None, seed: int = 0
) -> EquivalenceReport:
    """Compare :func:`circular_length` with BFS distances.

    Exhaustive when ``sample_size`` is None (n <= 8); otherwise draws
    ``sample_size`` uniform random windows (n <= 9).
    """
    if sample_size is None:
        _check_n(n, MAX_TABLE_N)
        table = _build_table(n)
        windows = [w for w, _ in table.items()]
    else:
        _check_n(n, MAX_BFS_N)
        table = _build_table(n)
        rng = random.Random(seed)
        windows = [tuple(rng.sample(range(1, n + 1), n)) for _ in range(sample_size)]
    report = EquivalenceReport(n)
    counts: Counter[int] = Counter()
    for w in windows:
        expected = table[w]
        got = circular_length(CircularArrangement(w))
        counts[expected] += 1
        if got != expected:
            report.mismatches.append((w, got, expected))
    report.checked = len(windows)
    report.histogram = dict(sorted(counts.items()))
    return report
