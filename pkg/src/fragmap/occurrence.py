"""Run-length compressed occurrence sets with counted access.

An occurrence set records, per pattern, the transaction indices it occurs
in. Sets are stored run-length encoded; cardinality is cached so support
lookups are free, intersection cardinality works directly on the runs, and
only full decompression (``members``) counts as an expensive access.
"""

from __future__ import annotations

import threading
from typing import BinaryIO, Iterable, Sequence

from .errors import FormatError

STORE_MAGIC = b"L2SO"
STORE_VERSION = 1


class AccessCounter:
    """Monotone counters for occurrence-data accesses."""

    __slots__ = ("_lock", "decompressions", "intersections")

    def __init__(self):
        self._lock = threading.Lock()
        self.decompressions = 0
        self.intersections = 0

    def count_decompression(self) -> None:
        with self._lock:
            self.decompressions += 1

    def count_intersection(self) -> None:
        with self._lock:
            self.intersections += 1

    def snapshot(self) -> dict[str, int]:
        with self._lock:
            return {
                "decompressions": self.decompressions,
                "intersections": self.intersections,
            }

    def reset(self) -> None:
        with self._lock:
            self.decompressions = 0
            self.intersections = 0


class OccurrenceSet:
    """Immutable RLE bit sequence over transaction indices ``0..universe-1``.

    ``runs`` alternates counts of 0s and 1s and starts with the (possibly
    empty) 0-run; all later runs are positive and the runs sum to the
    universe size.
    """

    __slots__ = ("runs", "universe", "support", "counter")

    def __init__(self, runs: Sequence[int], counter: AccessCounter | None = None):
        runs = tuple(int(r) for r in runs)
        if not runs:
            raise FormatError("occurrence set needs at least one run")
        if runs[0] < 0 or any(r <= 0 for r in runs[1:]):
            raise FormatError(f"invalid run lengths {runs}")
        self.runs = runs
        self.universe = sum(runs)
        self.support = sum(runs[1::2])
        self.counter = counter

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_indices(
        cls, indices: Iterable[int], universe: int, counter: AccessCounter | None = None
    ) -> "OccurrenceSet":
        members = sorted(set(int(i) for i in indices))
        if members and not (0 <= members[0] and members[-1] < universe):
            raise FormatError("occurrence index out of range")
        runs = [0]  # runs at even positions count 0s, odd positions count 1s
        pos = 0
        for start, stop in _consecutive_blocks(members):
            gap = start - pos
            if gap:
                if len(runs) % 2 == 1:
                    runs[-1] += gap
                else:
                    runs.append(gap)
            runs.append(stop - start)
            pos = stop
        tail = universe - pos
        if tail:
            if len(runs) % 2 == 1:
                runs[-1] += tail
            else:
                runs.append(tail)
        return cls(runs, counter)

    @classmethod
    def from_bits(
        cls, bits: Iterable[int], counter: AccessCounter | None = None
    ) -> "OccurrenceSet":
        runs = [0]
        current = 0
        for b in bits:
            b = 1 if b else 0
            if b == current:
                runs[-1] += 1
            else:
                runs.append(1)
                current = b
        return cls(runs, counter)

    @classmethod
    def from_bitstring(
        cls, text: str, counter: AccessCounter | None = None
    ) -> "OccurrenceSet":
        if set(text) - {"0", "1"}:
            raise FormatError(f"bitstring may only contain 0/1: {text!r}")
        return cls.from_bits((int(c) for c in text), counter)

    @classmethod
    def from_run_string(
        cls, text: str, counter: AccessCounter | None = None
    ) -> "OccurrenceSet":
        """Parse the comma-separated run-length form, e.g. ``"0,3,3,2"``."""
        try:
            runs = [int(p) for p in text.split(",")]
        except ValueError as exc:
            raise FormatError(f"bad run-length string {text!r}") from exc
        return cls(runs, counter)

    # -- queries -----------------------------------------------------------

    def members(self) -> list[int]:
        """Ascending 1-bit indices; counted as one decompression."""
        if self.counter is not None:
            self.counter.count_decompression()
        out = []
        pos = 0
        for k, run in enumerate(self.runs):
            if k % 2 == 1:
                out.extend(range(pos, pos + run))
            pos += run
        return out

    def to_run_string(self) -> str:
        return ",".join(str(r) for r in self.runs)

    def to_bitstring(self) -> str:
        parts = []
        for k, run in enumerate(self.runs):
            parts.append(("1" if k % 2 == 1 else "0") * run)
        return "".join(parts)

    def complement(self) -> "OccurrenceSet":
        if self.runs[0] == 0:
            runs = self.runs[1:]
        else:
            runs = (0,) + self.runs
        return OccurrenceSet(runs if runs else (0,), self.counter)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OccurrenceSet)
            and self.runs == other.runs
        )

    def __hash__(self) -> int:
        return hash(self.runs)

    def __repr__(self) -> str:
        return f"OccurrenceSet(runs={self.runs}, support={self.support})"


def support(s: OccurrenceSet) -> int:
    """Cached 1-bit count; never touches the compressed data."""
    return s.support


def and_support(a: OccurrenceSet, b: OccurrenceSet) -> int:
    """Cardinality of the intersection, merged run-by-run.

    Counted as one intersection query; the sets are not decompressed.
    """
    if a.universe != b.universe:
        raise FormatError(
            f"universe mismatch: {a.universe} vs {b.universe}"
        )
    for counter in {a.counter, b.counter} - {None}:
        counter.count_intersection()
    total = 0
    ia = ib = 0
    bita = bitb = 0  # bit value of current run
    rema = a.runs[0]
    remb = b.runs[0]
    n = a.universe
    done = 0
    while done < n:
        while rema == 0:
            ia += 1
            bita ^= 1
            rema = a.runs[ia]
        while remb == 0:
            ib += 1
            bitb ^= 1
            remb = b.runs[ib]
        step = rema if rema < remb else remb
        if bita & bitb:
            total += step
        rema -= step
        remb -= step
        done += step
    return total


# ---------------------------------------------------------------------------
# Store: one universe, many pattern sets, one shared counter
# ---------------------------------------------------------------------------

class OccurrenceStore:
    """Occurrence sets for all patterns of one lattice, sharing a counter."""

    def __init__(self, universe: int, counter: AccessCounter | None = None):
        self.universe = universe
        self.counter = counter or AccessCounter()
        self._sets: dict[int, OccurrenceSet] = {}

    def add(self, pattern_id: int, s: OccurrenceSet) -> None:
        if s.universe != self.universe:
            raise FormatError(
                f"pattern {pattern_id}: runs sum to {s.universe}, expected {self.universe}"
            )
        if pattern_id in self._sets:
            raise FormatError(f"duplicate occurrence set for pattern {pattern_id}")
        self._sets[pattern_id] = OccurrenceSet(s.runs, self.counter)

    def get(self, pattern_id: int) -> OccurrenceSet:
        return self._sets[pattern_id]

    def __contains__(self, pattern_id: int) -> bool:
        return pattern_id in self._sets

    def __len__(self) -> int:
        return len(self._sets)

    def pattern_ids(self) -> list[int]:
        return sorted(self._sets)

    def support(self, pattern_id: int) -> int:
        return self._sets[pattern_id].support

    def members(self, pattern_id: int) -> list[int]:
        return self._sets[pattern_id].members()

    def and_support(self, id_a: int, id_b: int) -> int:
        return and_support(self._sets[id_a], self._sets[id_b])

    # -- binary serialization ----------------------------------------------

    def save(self, stream: BinaryIO) -> None:
        stream.write(STORE_MAGIC)
        stream.write(bytes([STORE_VERSION]))
        _write_varint(stream, self.universe)
        _write_varint(stream, len(self._sets))
        for pid in self.pattern_ids():
            s = self._sets[pid]
            _write_varint(stream, pid)
            _write_varint(stream, len(s.runs))
            for run in s.runs:
                _write_varint(stream, run)

    def save_path(self, path) -> None:
        with open(path, "wb") as fh:
            self.save(fh)

    @classmethod
    def load(cls, stream: BinaryIO) -> "OccurrenceStore":
        magic = stream.read(4)
        if magic != STORE_MAGIC:
            raise FormatError(f"bad magic {magic!r}")
        version = stream.read(1)
        if version != bytes([STORE_VERSION]):
            raise FormatError(f"unsupported store version {version!r}")
        universe = _read_varint(stream)
        count = _read_varint(stream)
        store = cls(universe)
        for _ in range(count):
            pid = _read_varint(stream)
            n_runs = _read_varint(stream)
            runs = [_read_varint(stream) for _ in range(n_runs)]
            store.add(pid, OccurrenceSet(runs))
        return store

    @classmethod
    def load_path(cls, path) -> "OccurrenceStore":
        with open(path, "rb") as fh:
            return cls.load(fh)


def _consecutive_blocks(sorted_values: list[int]):
    """Yield (start, stop) half-open ranges of consecutive integers."""
    start = None
    prev = None
    for v in sorted_values:
        if start is None:
            start = prev = v
        elif v == prev + 1:
            prev = v
        else:
            yield start, prev + 1
            start = prev = v
    if start is not None:
        yield start, prev + 1


def _write_varint(stream: BinaryIO, value: int) -> None:
    if value < 0:
        raise FormatError("varint must be non-negative")
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            stream.write(bytes([byte | 0x80]))
        else:
            stream.write(bytes([byte]))
            return


def _read_varint(stream: BinaryIO) -> int:
    shift = 0
    value = 0
    while True:
        chunk = stream.read(1)
        if not chunk:
            raise FormatError("truncated varint")
        byte = chunk[0]
        value |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return value
        shift += 7
        if shift > 63:
            raise FormatError("varint too long")
