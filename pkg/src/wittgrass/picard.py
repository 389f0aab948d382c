"""Symbolic Picard-lattice arithmetic for split Grassmann and flag bundles.

Classes are integer (or mod-2) combinations of two generator families over a
base carrying a full flag of subbundles of an ambient rank-n bundle:

* ``BaseDet(i)``  -- determinant of the rank-i flag step on the base,
* ``TautDet(j)``  -- determinant of the rank-j tautological subbundle on the
  bundle upstairs.

On a flag bundle cut out by jump tuples, a step with co-length zero makes the
tautological subbundle a pullback from the base; the normalization rule
rewrites ``TautDet(d_i) -> BaseDet(d_i)`` whenever ``e_i = 0``, and every
constructor here applies it.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .diagrams import FramedDiagram, JumpTuples

BASE = "BaseDet"
TAUT = "TautDet"
_KINDS = (BASE, TAUT)


def _validated_terms(n, terms, with_coeff):
    out = []
    for term in terms:
        kind, index = term[0], term[1]
        if kind not in _KINDS:
            raise ValueError(f"unknown generator kind {kind!r}")
        if not isinstance(index, int) or not 1 <= index <= n:
            raise ValueError(f"generator index {index!r} outside 1..{n}")
        if with_coeff:
            coeff = term[2]
            if not isinstance(coeff, int):
                raise ValueError("coefficients must be integers")
            if coeff:
                out.append((kind, index, coeff))
        else:
            out.append((kind, index))
    out.sort()
    keys = [t[:2] for t in out]
    if len(set(keys)) != len(keys):
        raise ValueError("duplicate generator in term list")
    return tuple(out)


@dataclass(frozen=True)
class PicClass:
    """Integer combination of BaseDet/TautDet generators, ambient rank n."""

    n: int
    terms: tuple[tuple[str, int, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("ambient rank must be a positive integer")
        object.__setattr__(self, "terms", _validated_terms(self.n, self.terms, True))

    @classmethod
    def zero(cls, n: int) -> "PicClass":
        return cls(n, ())

    @classmethod
    def from_dict(cls, n: int, coeffs: dict) -> "PicClass":
        return cls(n, tuple((k, i, c) for (k, i), c in coeffs.items() if c))

    def coeff(self, kind: str, index: int) -> int:
        for k, i, c in self.terms:
            if (k, i) == (kind, index):
                return c
        return 0

    def as_dict(self) -> dict:
        return {(k, i): c for k, i, c in self.terms}

    def _combine(self, other: "PicClass", sign: int) -> "PicClass":
        if not isinstance(other, PicClass):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("ambient ranks differ")
        acc = self.as_dict()
        for k, i, c in other.terms:
            acc[(k, i)] = acc.get((k, i), 0) + sign * c
        return PicClass.from_dict(self.n, acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return PicClass(self.n, tuple((k, i, -c) for k, i, c in self.terms))

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return PicClass.from_dict(self.n, {(k, i): scalar * c for k, i, c in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def mod2(self) -> "PicClassMod2":
        return PicClassMod2(self.n, tuple((k, i) for k, i, c in self.terms if c % 2))

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"gen": k, "index": i, "coeff": c} for k, i, c in self.terms]}

    @classmethod
    def from_json(cls, obj: dict) -> "PicClass":
        terms = tuple((t["gen"], t["index"], t["coeff"]) for t in obj["terms"])
        return cls(obj["n"], terms)


@dataclass(frozen=True)
class PicClassMod2:
    """Mod-2 class: the set of generators with odd coefficient."""

    n: int
    support: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("ambient rank must be a positive integer")
        object.__setattr__(self, "support",
                           _validated_terms(self.n, tuple(self.support), False))

    @classmethod
    def zero(cls, n: int) -> "PicClassMod2":
        return cls(n, ())

    def __add__(self, other):
        if not isinstance(other, PicClassMod2):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("ambient ranks differ")
        sym = set(self.support) ^ set(other.support)
        return PicClassMod2(self.n, tuple(sym))

    def is_zero(self) -> bool:
        return not self.support

    def has(self, kind: str, index: int) -> bool:
        return (kind, index) in self.support

    def base_part(self) -> "PicClassMod2":
        return PicClassMod2(self.n, tuple(t for t in self.support if t[0] == BASE))

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"gen": k, "index": i} for k, i in self.support]}

    @classmethod
    def from_json(cls, obj: dict) -> "PicClassMod2":
        return cls(obj["n"], tuple((t["gen"], t["index"]) for t in obj["terms"]))


def base_det(n: int, i: int) -> PicClass:
    return PicClass(n, ((BASE, i, 1),))


def taut_det(n: int, j: int) -> PicClass:
    return PicClass(n, ((TAUT, j, 1),))


def base_det2(n: int, i: int) -> PicClassMod2:
    return PicClassMod2(n, ((BASE, i),))


def taut_det2(n: int, j: int) -> PicClassMod2:
    return PicClassMod2(n, ((TAUT, j),))


def quotient_det(n: int) -> PicClass:
    """det of (ambient bundle) / (corank-one flag step): BaseDet(n) - BaseDet(n-1)."""
    if n < 2:
        raise ValueError("needs ambient rank at least 2")
    return base_det(n, n) - base_det(n, n - 1)


def _normalize_flag(cls: PicClass, tuples: JumpTuples) -> PicClass:
    # co-length zero steps: the tautological det is pulled back from the base
    acc = cls.as_dict()
    for di, ei in zip(tuples.dvec, tuples.evec):
        if ei == 0 and (TAUT, di) in acc:
            c = acc.pop((TAUT, di))
            acc[(BASE, di)] = acc.get((BASE, di), 0) + c
    return PicClass.from_dict(cls.n, acc)


def rel_canonical_grass(d: int, n: int) -> PicClass:
    """Relative canonical class of the rank-d Grassmann bundle of a rank-n bundle."""
    if not 0 < d < n:
        raise ValueError("need 0 < d < n")
    return (-d) * base_det(n, n) + n * taut_det(n, d)


def rel_canonical_flag(tuples: JumpTuples, n: int) -> PicClass:
    """Relative canonical class of the flag bundle cut out by jump tuples.

    With the convention d_0 = 0, the class is
    sum_i (d_{i-1}-d_i) BaseDet(d_i+e_i)
    + sum_{i<k} (d_i-d_{i-1}+e_i-e_{i+1}) TautDet(d_i)
    + (d_k-d_{k-1}+e_k) TautDet(d_k), then normalized.
    """
    dv, ev, k = tuples.dvec, tuples.evec, tuples.k
    if dv[-1] + ev[-1] > n:
        raise ValueError("flag steps exceed the ambient rank")
    acc = PicClass.zero(n)
    prev = 0
    for di, ei in zip(dv, ev):
        acc = acc + (prev - di) * base_det(n, di + ei)
        prev = di
    for i in range(k - 1):
        d_step = dv[i] - (dv[i - 1] if i else 0)
        acc = acc + (d_step + ev[i] - ev[i + 1]) * taut_det(n, dv[i])
    last_step = dv[-1] - (dv[-2] if k >= 2 else 0)
    acc = acc + (last_step + ev[-1]) * taut_det(n, dv[-1])
    return _normalize_flag(acc, tuples)


def rel_canonical_fiber(tuples: JumpTuples, d: int, e: int) -> PicClass:
    """Relative canonical class of the flag bundle over the ambient Grassmann bundle.

    The flag bundle must refine the rank-d tautological subbundle, so dvec has
    to end at d; the ambient rank is n = d + e.  Equals the flag class minus
    the pullback of the Grassmann class (the pullback fixes BaseDet and sends
    TautDet(d) to TautDet(d_k)); computed here in closed form.
    """
    dv, ev, k = tuples.dvec, tuples.evec, tuples.k
    if dv[-1] != d:
        raise ValueError(f"dvec must end at the subbundle rank {d}")
    n = d + e
    if ev[-1] > e:
        raise ValueError("co-lengths must not exceed e")
    acc = PicClass.zero(n)
    prev = 0
    for di, ei in zip(dv, ev):
        acc = acc + (prev - di) * base_det(n, di + ei)
        prev = di
    acc = acc + d * base_det(n, n)
    for i in range(k - 1):
        d_step = dv[i] - (dv[i - 1] if i else 0)
        acc = acc + (d_step + ev[i] - ev[i + 1]) * taut_det(n, dv[i])
    d_prev = dv[-2] if k >= 2 else 0
    acc = acc + (-d_prev + ev[-1] - e) * taut_det(n, dv[-1])
    return _normalize_flag(acc, tuples)


def pullback_to_flag(cls: PicClassMod2, tuples: JumpTuples) -> PicClassMod2:
    """Pull a mod-2 Grassmann class back to the flag bundle cut out by tuples.

    BaseDet generators are fixed; the Grassmann TautDet(d_k) becomes the flag
    TautDet(d_k); the co-length-zero normalization is applied afterwards.
    """
    dk = tuples.dvec[-1]
    support = set()
    for kind, index in cls.support:
        if kind == TAUT:
            if index != dk:
                raise ValueError("Grassmann classes may only involve TautDet(d_k)")
            index = dk
        support.add((kind, index))
    if tuples.evec[0] == 0 and (TAUT, tuples.dvec[0]) in support:
        support.discard((TAUT, tuples.dvec[0]))
        support ^= {(BASE, tuples.dvec[0])}
    return PicClassMod2(cls.n, tuple(support))


def relative_dimension(tuples: JumpTuples) -> int:
    """Fiber dimension of the flag locus: sum of block height times co-length."""
    dim = 0
    prev = 0
    for di, ei in zip(tuples.dvec, tuples.evec):
        dim += (di - prev) * ei
        prev = di
    return dim


def twist_class(diagram: FramedDiagram) -> PicClassMod2:
    """Mod-2 twist attached to a diagram: rho * BaseDet(n) + t * TautDet(d)."""
    n = diagram.d + diagram.e
    acc = PicClassMod2.zero(n)
    if diagram.rho() % 2:
        acc = acc + base_det2(n, n)
    if diagram.twist():
        acc = acc + taut_det2(n, diagram.d)
    return acc


def verify_cond_even(diagram: FramedDiagram) -> bool:
    """Check the mod-2 cancellation of the fiber canonical against the twist.

    For an even diagram, the relative canonical of its flag locus plus the
    pullback of the diagram's twist class must vanish mod 2.
    """
    if not diagram.is_even():
        raise ValueError("verify_cond_even expects an even diagram")
    t = diagram.jump_tuples()
    canonical = rel_canonical_fiber(t, diagram.d, diagram.e).mod2()
    return (canonical + pullback_to_flag(twist_class(diagram), t)).is_zero()


def pushforward_admissible(diagram: FramedDiagram) -> bool:
    """Parity conditions for the twisted push-forward from the flag locus.

    (a) d_i-d_{i-1}+e_{i+1}-e_i even for i = 2..k-1; (b) when 0 < e_1 < e,
    d_1+e_2-e_1 even.  Both are vacuous for k = 1.  Every even diagram
    passes; some non-even diagrams do too.
    """
    t = diagram.jump_tuples()
    dv, ev, k = t.dvec, t.evec, t.k
    for i in range(2, k):  # 1-based interior steps
        if (dv[i - 1] - dv[i - 2] + ev[i] - ev[i - 1]) % 2:
            return False
    if k >= 2 and 0 < ev[0] < diagram.e and (dv[0] + ev[1] - ev[0]) % 2:
        return False
    return True


def canonical_in_pullback_span(diagram: FramedDiagram) -> bool:
    """Mod-2 membership of the fiber canonical in the span of pullback classes.

    The pullback span on the flag bundle is generated mod 2 by all BaseDet
    generators and TautDet(d_k); membership means no other TautDet survives.
    Agrees with pushforward_admissible on every diagram.
    """
    t = diagram.jump_tuples()
    canonical = rel_canonical_fiber(t, diagram.d, diagram.e).mod2()
    dk = t.dvec[-1]
    return all(kind == BASE or index == dk for kind, index in canonical.support)


class CellCanonicals(NamedTuple):
    sub_grassmannian: PicClass
    blow_down: PicClass
    exceptional_divisor: PicClass
    exceptional_projection: PicClass


def cell_canonicals(d: int, n: int) -> CellCanonicals:
    """Relative canonical classes of the four maps in the blow-up square.

    ``sub_grassmannian``: inclusion of the corank-one sub-Grassmannian;
    ``blow_down``: projection of the blow-up to the ambient Grassmann bundle;
    ``exceptional_divisor``: inclusion of the exceptional divisor;
    ``exceptional_projection``: its bundle projection to the smaller
    Grassmann bundle.  Tautological dets of ranks d and d-1 appear.
    """
    if d < 2 or n - d < 2:
        raise ValueError("need subbundle rank >= 2 and corank >= 2")
    qdet = quotient_det(n)
    sub = -taut_det(n, d) + d * qdet
    blow = (d - 1) * taut_det(n, d - 1) + (1 - d) * taut_det(n, d) + (d - 1) * qdet
    exc = qdet + taut_det(n, d - 1) - taut_det(n, d)
    proj = d * taut_det(n, d - 1) + (1 - d) * taut_det(n, d)
    return CellCanonicals(sub, blow, exc, proj)


def cell_canonical_identity(d: int, n: int) -> bool:
    """Coefficientwise identity tying the four cell canonicals together.

    Both compositions through the exceptional divisor agree, so
    exceptional_divisor + blow_down = exceptional_projection +
    pullback(sub_grassmannian), the pullback fixing every generator.
    """
    cc = cell_canonicals(d, n)
    lhs = cc.exceptional_divisor + cc.blow_down
    rhs = cc.exceptional_projection + cc.sub_grassmannian
    return lhs == rhs


def les_twists(d: int, e: int, twist: PicClassMod2) -> tuple[PicClassMod2, PicClassMod2]:
    """Transport a mod-2 twist along the corank-one localization sequence.

    Input lives on the rank-d Grassmann bundle of a rank-n bundle (n = d+e),
    supported on BaseDet generators and TautDet(d).  Returns the twists on
    the two smaller Grassmann bundles of the corank-one subbundle: the
    sub-Grassmannian side (still TautDet(d)) and the complementary side
    (TautDet(d) replaced by TautDet(d-1) plus the quotient det).
    """
    n = d + e
    if twist.n != n:
        raise ValueError(f"twist must have ambient rank {n}")
    if d < 2 or e < 1:
        raise ValueError("need d >= 2 and e >= 1")
    for kind, index in twist.support:
        if kind == TAUT and index != d:
            raise ValueError("twist may only involve TautDet(d) and BaseDet generators")
    qdet = quotient_det(n).mod2()
    t_det = 1 if twist.has(TAUT, d) else 0
    sub_side = twist + taut_det2(n, d) + (qdet if d % 2 else PicClassMod2.zero(n))
    comp_side = twist
    if t_det:
        comp_side = comp_side + taut_det2(n, d) + taut_det2(n, d - 1) + qdet
    return sub_side, comp_side
