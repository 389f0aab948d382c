"""Graded free modules on even diagrams and the maps between adjacent frames.

For a frame (d,e) the cyclic sequence runs

    F(d,e-1) --iota--> F(d,e) --kappa--> F(d-1,e) --bord--> F(d,e-1)

with iota realized by ``widen``, kappa by ``shorten`` and bord by ``peel``.
Each basis element carries a graded degree (shift in Z/4, a mod-2 base class,
and a determinant twist in Z/2); frames with zero rows or zero columns
degenerate to a pair of point generators.  Exactness of the sequence is
verified two independent ways: structurally, from the partial-bijection shape
of the matrices, and by exact integer linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import intmatrix
from .diagrams import FramedDiagram, enumerate_even, peel, shorten, widen
from .picard import BASE, PicClassMod2, base_det2

MAP_NAMES = ("iota", "kappa", "bord")


@dataclass(frozen=True)
class GradedDegree:
    """Shift in Z/4, mod-2 base class, determinant twist in Z/2."""

    shift: int
    base: PicClassMod2
    det_twist: int

    def __post_init__(self) -> None:
        if not 0 <= self.shift <= 3:
            raise ValueError("shift must be reduced mod 4")
        if self.det_twist not in (0, 1):
            raise ValueError("det_twist must be 0 or 1")
        if any(kind != BASE for kind, _ in self.base.support):
            raise ValueError("degree base part must be supported on BaseDet generators")

    def to_json(self) -> dict:
        return {"shift": self.shift,
                "base": [i for _, i in self.base.support],
                "twist": self.det_twist}


@dataclass(frozen=True)
class PointGenerator:
    """Unit generator of a degenerate frame, indexed by det-twist parity."""

    index: int

    def __post_init__(self) -> None:
        if self.index not in (0, 1):
            raise ValueError("point index must be 0 or 1")

    def label(self) -> str:
        return f"pt{self.index}"


def degree(diagram: FramedDiagram) -> GradedDegree:
    """Graded degree of a diagram generator, in its own frame's ambient rank."""
    n = diagram.d + diagram.e
    base = base_det2(n, n) if diagram.rho() % 2 else PicClassMod2.zero(n)
    return GradedDegree(diagram.area() % 4, base, diagram.twist())


@dataclass(frozen=True)
class GradedBasis:
    """Ordered basis of one frame with the degree of each element."""

    d: int
    e: int
    elements: tuple[tuple[FramedDiagram | PointGenerator, GradedDegree], ...]

    @property
    def is_point_frame(self) -> bool:
        return self.d == 0 or self.e == 0

    def __len__(self) -> int:
        return len(self.elements)

    def labels(self) -> tuple[str, ...]:
        out = []
        for elem, _ in self.elements:
            out.append(elem.label() if isinstance(elem, PointGenerator)
                       else str(elem.rows))
        return tuple(out)

    def index_of(self, elem) -> int:
        for i, (candidate, _) in enumerate(self.elements):
            if candidate == elem:
                return i
        raise KeyError(f"{elem!r} not in basis")


def build_basis(d: int, e: int) -> GradedBasis:
    """Basis of the frame (d,e); degenerate frames get the two point generators."""
    if d < 0 or e < 0 or (d == 0 and e == 0):
        raise ValueError("need d,e >= 0 and not both zero")
    if d == 0 or e == 0:
        n = d + e
        zero = PicClassMod2.zero(n)
        elems = tuple((PointGenerator(i), GradedDegree(0, zero, i)) for i in (0, 1))
        return GradedBasis(d, e, elems)
    elems = tuple((dg, degree(dg)) for dg in enumerate_even(d, e))
    return GradedBasis(d, e, elems)


@dataclass(frozen=True)
class BasisMap:
    """Integer matrix of one of the three maps, rows indexed by the target."""

    which: str
    source: GradedBasis
    target: GradedBasis
    matrix: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"which": self.which,
                "source_frame": [self.source.d, self.source.e],
                "target_frame": [self.target.d, self.target.e],
                "matrix": [list(row) for row in self.matrix]}

    def array(self) -> np.ndarray:
        return intmatrix.as_int_matrix(self.matrix) if self.matrix else \
            np.zeros((0, len(self.source)), dtype=object)


def _image(which: str, d: int, e: int, elem):
    """Image basis element under one map of the (d,e) sequence, or None."""
    if which == "iota":
        if isinstance(elem, PointGenerator):  # e == 1: source is the point frame
            return FramedDiagram.full(d, 1) if elem.index == d % 2 else None
        return widen(elem)
    if which == "kappa":
        if d == 1:  # target is the point frame
            return PointGenerator(0) if elem.is_empty() else None
        return shorten(elem)
    if which == "bord":
        if isinstance(elem, PointGenerator):  # d == 1: source is the point frame
            if elem.index != 1:
                return None
            return PointGenerator(0) if e == 1 else FramedDiagram.empty(1, e - 1)
        if e == 1:  # target is the point frame
            return PointGenerator((d + 1) % 2) if elem.rows[-1] % 2 else None
        return peel(elem)
    raise ValueError(f"unknown map {which!r}; expected one of {MAP_NAMES}")


def map_matrix(which: str, d: int, e: int) -> BasisMap:
    """Matrix of iota, kappa or bord for the cyclic sequence anchored at (d,e)."""
    if d < 1 or e < 1:
        raise ValueError("the sequence needs d,e >= 1")
    if which == "iota":
        source, target = build_basis(d, e - 1), build_basis(d, e)
    elif which == "kappa":
        source, target = build_basis(d, e), build_basis(d - 1, e)
    elif which == "bord":
        source, target = build_basis(d - 1, e), build_basis(d, e - 1)
    else:
        raise ValueError(f"unknown map {which!r}; expected one of {MAP_NAMES}")
    columns = []
    for elem, _ in source.elements:
        image = _image(which, d, e, elem)
        columns.append(None if image is None else target.index_of(image))
    matrix = tuple(tuple(1 if columns[j] == i else 0 for j in range(len(source)))
                   for i in range(len(target)))
    return BasisMap(which, source, target, matrix)


def _element_json(elem):
    return {"pt": elem.index} if isinstance(elem, PointGenerator) else elem.to_json()


@dataclass(frozen=True)
class PositionVerdict:
    """Exactness verdict at one module of the cyclic sequence."""

    frame: tuple[int, int]
    incoming: str
    outgoing: str
    structural: bool
    linear: bool
    mod_p: tuple[tuple[int, bool], ...]
    witnesses: tuple = ()

    @property
    def ok(self) -> bool:
        return self.structural and self.linear and all(v for _, v in self.mod_p)

    def to_json(self) -> dict:
        return {"frame": list(self.frame),
                "incoming": self.incoming,
                "outgoing": self.outgoing,
                "structural": self.structural,
                "linear": self.linear,
                "mod_p": {str(p): v for p, v in self.mod_p},
                "witnesses": [_element_json(w) for w in self.witnesses]}


@dataclass(frozen=True)
class ExactnessReport:
    frame: tuple[int, int]
    positions: tuple[PositionVerdict, ...]
    maps_well_formed: bool

    @property
    def ok(self) -> bool:
        return self.maps_well_formed and all(p.ok for p in self.positions)

    def to_json(self) -> dict:
        return {"frame": list(self.frame),
                "maps_well_formed": self.maps_well_formed,
                "positions": [p.to_json() for p in self.positions],
                "exact": self.ok}


def _is_partial_bijection(matrix) -> bool:
    for row in matrix:
        if any(v not in (0, 1) for v in row):
            return False
        if sum(row) > 1:
            return False
    cols = len(matrix[0]) if matrix else 0
    for j in range(cols):
        if sum(row[j] for row in matrix) > 1:
            return False
    return True


def _structural_position(incoming: BasisMap, outgoing: BasisMap):
    hit = {i for i, row in enumerate(incoming.matrix) if any(row)}
    killed = {j for j in range(len(outgoing.source))
              if not any(row[j] for row in outgoing.matrix)}
    ok = hit == killed
    witnesses = tuple(outgoing.source.elements[i][0] for i in sorted(hit ^ killed))
    return ok, witnesses


def _linear_position(incoming: BasisMap, outgoing: BasisMap) -> bool:
    A = incoming.array()
    B = outgoing.array()
    if np.any(B.dot(A) != 0):
        return False
    K = intmatrix.integer_kernel(B)
    for idx in range(K.shape[1]):
        if not intmatrix.in_column_span(A, K[:, idx]):
            return False
    return True


def _mod_p_position(incoming: BasisMap, outgoing: BasisMap, p: int) -> bool:
    A = incoming.array()
    B = outgoing.array()
    if np.any(B.dot(A) % p != 0):
        return False
    middle = len(outgoing.source)
    return intmatrix.rank_mod_p(A, p) + intmatrix.rank_mod_p(B, p) == middle


def verify_exactness(d: int, e: int, primes: tuple[int, ...] = ()) -> ExactnessReport:
    """Verify exactness of the (d,e) cyclic sequence at all three modules.

    Runs the structural partial-bijection argument and the exact integer
    linear algebra independently; optionally also checks rank equalities
    over the prime fields listed in ``primes``.
    """
    iota = map_matrix("iota", d, e)
    kappa = map_matrix("kappa", d, e)
    bord = map_matrix("bord", d, e)
    well_formed = all(_is_partial_bijection(m.matrix) for m in (iota, kappa, bord))
    positions = []
    for incoming, outgoing in ((iota, kappa), (kappa, bord), (bord, iota)):
        structural, witnesses = _structural_position(incoming, outgoing)
        linear = _linear_position(incoming, outgoing)
        mod_p = tuple((p, _mod_p_position(incoming, outgoing, p)) for p in primes)
        positions.append(PositionVerdict(
            frame=(outgoing.source.d, outgoing.source.e),
            incoming=incoming.which, outgoing=outgoing.which,
            structural=structural, linear=linear, mod_p=mod_p,
            witnesses=witnesses))
    return ExactnessReport((d, e), tuple(positions), well_formed)


def _transport(which: str, d: int, e: int, deg: GradedDegree,
               trivial_base: bool = False) -> GradedDegree:
    """Expected target degree under one map, per the transport rules.

    With a trivial base the quotient-det offsets vanish and the rules become
    honest homogeneity statements.  Raises ValueError when the transported
    base cannot live in the target's ambient alphabet; the checker reports
    that as a failure.
    """
    n = d + e
    zero = PicClassMod2.zero(n)
    qdet = zero if trivial_base else PicClassMod2(n, ((BASE, n), (BASE, n - 1)))
    s, base_cls, t = deg.shift, deg.base, deg.det_twist
    base_cls = PicClassMod2(n, base_cls.support)  # lift into the big ambient alphabet
    if which == "iota":
        return GradedDegree((s + d) % 4, base_cls + (qdet if d % 2 else zero), (t + 1) % 2)
    if which == "kappa":
        base_cls = base_cls + (qdet if t else zero)
        # the target lives one ambient rank down
        return GradedDegree(s, PicClassMod2(n - 1, base_cls.support), t)
    if which == "bord":
        base_cls = base_cls + (qdet if (t - d) % 2 else zero)
        return GradedDegree((s - d + 1) % 4, PicClassMod2(n - 1, base_cls.support),
                            (t - 1) % 2)
    raise ValueError(f"unknown map {which!r}")


@dataclass(frozen=True)
class TransportFailure:
    which: str
    source: FramedDiagram | PointGenerator
    expected: GradedDegree | int
    actual: GradedDegree | int

    def to_json(self) -> dict:
        def enc(v):
            return v.to_json() if isinstance(v, GradedDegree) else v
        return {"which": self.which, "source": _element_json(self.source),
                "expected": enc(self.expected), "actual": enc(self.actual)}


@dataclass(frozen=True)
class TransportReport:
    frame: tuple[int, int]
    trivial_base: bool
    checked: int
    point_entries_det_only: int
    failures: tuple[TransportFailure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"frame": list(self.frame),
                "trivial_base": self.trivial_base,
                "checked": self.checked,
                "point_entries_det_only": self.point_entries_det_only,
                "failures": [f.to_json() for f in self.failures],
                "ok": self.ok}


_DET_OFFSET = {"iota": 1, "kappa": 0, "bord": -1}


def verify_degree_transport(d: int, e: int, trivial_base: bool = False) -> TransportReport:
    """Check that every nonzero matrix entry moves degrees by the stated rule.

    Point-generator endpoints carry no assigned shift or base, so entries
    whose source or target is a point generator are checked on the det-twist
    component only and counted separately in the report.
    """
    if d < 1 or e < 1:
        raise ValueError("the sequence needs d,e >= 1")
    checked = 0
    det_only = 0
    failures = []
    for which in MAP_NAMES:
        bm = map_matrix(which, d, e)
        for j, (src, src_deg) in enumerate(bm.source.elements):
            hits = [i for i in range(len(bm.target)) if bm.matrix[i][j]]
            if not hits:
                continue
            tgt, tgt_deg = bm.target.elements[hits[0]]
            checked += 1
            if isinstance(src, PointGenerator) or isinstance(tgt, PointGenerator):
                det_only += 1
                expected = (src_deg.det_twist + _DET_OFFSET[which]) % 2
                if expected != tgt_deg.det_twist:
                    failures.append(TransportFailure(which, src, expected,
                                                     tgt_deg.det_twist))
                continue
            actual = tgt_deg
            if trivial_base:
                src_deg = GradedDegree(src_deg.shift, PicClassMod2.zero(src_deg.base.n),
                                       src_deg.det_twist)
                actual = GradedDegree(actual.shift, PicClassMod2.zero(actual.base.n),
                                      actual.det_twist)
            try:
                expected = _transport(which, d, e, src_deg, trivial_base)
            except ValueError:
                failures.append(TransportFailure(which, src, "unrepresentable", actual))
                continue
            if expected != actual:
                failures.append(TransportFailure(which, src, expected, actual))
    return TransportReport((d, e), trivial_base, checked, det_only, tuple(failures))
