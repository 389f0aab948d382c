"""Framed Young diagram combinatorics.

A framed diagram is a weakly decreasing tuple of row lengths confined to a
rectangle with d rows and e columns.  Trailing zero rows are explicit: the
frame is part of the data, and the same row vector can satisfy the evenness
conditions in one frame while failing them in a larger one.

This module owns construction and validation, the jump-tuple encoding and its
inverse, the evenness predicate, the numeric invariants (area, nonzero-row
count, co-rank, half-perimeter parity), transposition into the flipped frame,
enumeration of all even diagrams of a frame, and the three partial maps that
shuttle diagrams between the frames (d,e-1), (d,e) and (d-1,e).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class JumpTuples:
    """Strictly increasing row-index and co-length vectors of equal length.

    ``dvec`` lists the row indices (1-based) where the row value strictly
    drops, the last entry being the number of rows; ``evec`` lists the
    corresponding co-lengths (frame width minus row value).  Entries of
    ``evec`` may start at 0; frame membership is checked when a frame is
    supplied, not here.
    """

    dvec: tuple[int, ...]
    evec: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dvec", tuple(self.dvec))
        object.__setattr__(self, "evec", tuple(self.evec))
        if len(self.dvec) != len(self.evec) or not self.dvec:
            raise ValueError("dvec and evec must be nonempty and of equal length")
        if any(not isinstance(v, int) for v in self.dvec + self.evec):
            raise ValueError("jump tuples must be integers")
        if self.dvec[0] < 1 or self.evec[0] < 0:
            raise ValueError("need dvec[0] >= 1 and evec[0] >= 0")
        if any(b <= a for a, b in zip(self.dvec, self.dvec[1:])):
            raise ValueError("dvec must be strictly increasing")
        if any(b <= a for a, b in zip(self.evec, self.evec[1:])):
            raise ValueError("evec must be strictly increasing")

    @property
    def k(self) -> int:
        return len(self.dvec)


@dataclass(frozen=True)
class FramedDiagram:
    """Weakly decreasing row lengths in a d-by-e frame, zeros explicit."""

    d: int
    e: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.d < 1 or self.e < 1:
            raise ValueError("frame dimensions must be at least 1")
        if len(self.rows) != self.d:
            raise ValueError(f"expected {self.d} rows, got {len(self.rows)}")
        if any(not isinstance(r, int) for r in self.rows):
            raise ValueError("row lengths must be integers")
        if any(r < 0 or r > self.e for r in self.rows):
            raise ValueError(f"row lengths must lie in [0, {self.e}]")
        if any(b > a for a, b in zip(self.rows, self.rows[1:])):
            raise ValueError("rows must be weakly decreasing")

    @classmethod
    def empty(cls, d: int, e: int) -> "FramedDiagram":
        return cls(d, e, (0,) * d)

    @classmethod
    def full(cls, d: int, e: int) -> "FramedDiagram":
        return cls(d, e, (e,) * d)

    def area(self) -> int:
        """Number of cells."""
        return sum(self.rows)

    def rho(self) -> int:
        """Number of nonzero rows."""
        return sum(1 for r in self.rows if r)

    def zeta(self) -> int:
        """Number of zero rows, d - rho."""
        return self.d - self.rho()

    def twist(self) -> int:
        """Half-perimeter parity (first row + nonzero rows) mod 2."""
        return (self.rows[0] + self.rho()) % 2

    def is_empty(self) -> bool:
        return self.rows[-1] == 0 and self.rows[0] == 0

    def is_full(self) -> bool:
        return self.rows[-1] == self.e

    def jump_tuples(self) -> JumpTuples:
        """Encode as jump tuples: drop positions and their co-lengths."""
        dvec: list[int] = []
        evec: list[int] = []
        for pos in range(1, self.d + 1):
            if pos == self.d or self.rows[pos] < self.rows[pos - 1]:
                dvec.append(pos)
                evec.append(self.e - self.rows[pos - 1])
        return JumpTuples(tuple(dvec), tuple(evec))

    def is_even(self) -> bool:
        """Whether every boundary segment strictly inside the frame has even length.

        Equivalent, via the jump encoding with the convention d_0 = 0:
        interior drop gaps d_{i+1}-d_i (i <= k-2) and all co-length gaps
        e_{i+1}-e_i are even; when 0 < e_1 < e the first block height d_1 is
        even; when 0 < e_k < e the last block height d_k-d_{k-1} is even.
        """
        t = self.jump_tuples()
        dv, ev, k = t.dvec, t.evec, t.k
        if any((dv[i + 1] - dv[i]) % 2 for i in range(k - 2)):
            return False
        if any((ev[i + 1] - ev[i]) % 2 for i in range(k - 1)):
            return False
        if 0 < ev[0] < self.e and dv[0] % 2:
            return False
        if 0 < ev[-1] < self.e:
            last_gap = dv[-1] - (dv[-2] if k >= 2 else 0)
            if last_gap % 2:
                return False
        return True

    def dual(self) -> "FramedDiagram":
        """Transpose into the e-by-d frame (column heights become rows)."""
        heights = tuple(sum(1 for r in self.rows if r >= c) for c in range(1, self.e + 1))
        return FramedDiagram(self.e, self.d, heights)

    def to_json(self) -> dict:
        return {"frame": [self.d, self.e], "rows": list(self.rows)}

    @classmethod
    def from_json(cls, obj: dict) -> "FramedDiagram":
        if not isinstance(obj, dict) or set(obj) != {"frame", "rows"}:
            raise ValueError("diagram object needs exactly the keys 'frame' and 'rows'")
        frame = obj["frame"]
        if not (isinstance(frame, (list, tuple)) and len(frame) == 2):
            raise ValueError("'frame' must be a pair [d, e]")
        rows = obj["rows"]
        if not isinstance(rows, (list, tuple)):
            raise ValueError("'rows' must be a list")
        return cls(frame[0], frame[1], tuple(rows))


def from_jump_tuples(tuples: JumpTuples, d: int, e: int) -> FramedDiagram:
    """Rebuild the diagram of a frame from its jump tuples."""
    if tuples.dvec[-1] != d:
        raise ValueError(f"dvec must end at the row count {d}")
    if tuples.evec[-1] > e:
        raise ValueError(f"evec entries must not exceed the column count {e}")
    rows: list[int] = []
    prev = 0
    for di, ei in zip(tuples.dvec, tuples.evec):
        rows.extend([e - ei] * (di - prev))
        prev = di
    return FramedDiagram(d, e, tuple(rows))


def _even_gap_chains(lo: int, hi: int):
    """Strictly increasing chains in [lo, hi] whose consecutive gaps are even."""
    chain: list[int] = []

    def grow(value: int):
        chain.append(value)
        yield tuple(chain)
        nxt = value + 2
        while nxt <= hi:
            yield from grow(nxt)
            nxt += 2
        chain.pop()

    for first in range(lo, hi + 1):
        yield from grow(first)


def _even_jump_candidates(d: int, e: int):
    # dvec: first value and final gap free, interior gaps even, last entry d
    dvecs: dict[int, list[tuple[int, ...]]] = {1: [(d,)]}
    for prefix in _even_gap_chains(1, d - 1):
        dvecs.setdefault(len(prefix) + 1, []).append(prefix + (d,))
    for evec in _even_gap_chains(0, e):
        for dvec in dvecs.get(len(evec), ()):
            if 0 < evec[0] < e and dvec[0] % 2:
                continue
            if 0 < evec[-1] < e:
                last_gap = dvec[-1] - (dvec[-2] if len(dvec) >= 2 else 0)
                if last_gap % 2:
                    continue
            yield JumpTuples(dvec, evec)


def enumerate_even(d: int, e: int) -> tuple[FramedDiagram, ...]:
    """All even diagrams of the d-by-e frame, largest row vector first.

    Generated directly from jump tuples satisfying the evenness constraints,
    so the cost tracks the number of even diagrams rather than the number of
    all C(d+e, d) monotone row vectors.
    """
    if d < 1 or e < 1:
        raise ValueError("frame dimensions must be at least 1")
    found = [from_jump_tuples(t, d, e) for t in _even_jump_candidates(d, e)]
    found.sort(key=lambda dg: dg.rows, reverse=True)
    return tuple(found)


def _require_even(diagram: FramedDiagram, role: str) -> None:
    if not diagram.is_even():
        raise ValueError(f"{role} expects an even diagram, got rows={diagram.rows} in "
                         f"{diagram.d}x{diagram.e}")


def widen(diagram: FramedDiagram) -> FramedDiagram | None:
    """Add one cell to every row, landing one frame wider.

    Defined on even diagrams with an even number of zero rows; returns None
    on the odd-zeta case (mapped to zero).
    """
    _require_even(diagram, "widen")
    if diagram.zeta() % 2:
        return None
    return FramedDiagram(diagram.d, diagram.e + 1, tuple(r + 1 for r in diagram.rows))


def shorten(diagram: FramedDiagram) -> FramedDiagram | None:
    """Drop the last row if it is empty, landing one frame shorter.

    Defined on even diagrams with at least two rows; returns None when the
    last row is nonzero (mapped to zero).
    """
    _require_even(diagram, "shorten")
    if diagram.d < 2:
        raise ValueError("shorten needs at least two rows")
    if diagram.rows[-1] != 0:
        return None
    return FramedDiagram(diagram.d - 1, diagram.e, diagram.rows[:-1])


def peel(diagram: FramedDiagram) -> FramedDiagram | None:
    """Remove one cell from every row and append an empty row.

    Defined on even diagrams whose frame has at least two columns; applies
    only when the last row is odd (hence every row nonzero), otherwise None.
    """
    _require_even(diagram, "peel")
    if diagram.e < 2:
        raise ValueError("peel needs at least two columns")
    if diagram.rows[-1] % 2 == 0:
        return None
    rows = tuple(r - 1 for r in diagram.rows) + (0,)
    return FramedDiagram(diagram.d + 1, diagram.e - 1, rows)


def all_diagrams(d: int, e: int):
    """Every diagram of the frame (even or not), largest row vector first."""
    if d < 1 or e < 1:
        raise ValueError("frame dimensions must be at least 1")
    for combo in itertools.combinations_with_replacement(range(e, -1, -1), d):
        yield FramedDiagram(d, e, combo)
