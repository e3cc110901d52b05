"""
The Grothendieck group of Iwahori-equivariant sheaves, modelled by Z[W].

Classes are returned in theta-coordinates: theta([F]) = sum_w (-1)^l(w)
chi(stalk of F on the w-cell) * w. Standard and costandard objects both map to
w, Wakimoto objects to t_nu, and the IC class of w to
sum_{x <= w} (-1)^{l(w)-l(x)} P_{x,w}(1) x. Iwahori-Whittaker averaging sends
w to the standard class of its left W_fin-coset label.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Mapping, Sequence

from .affweyl import IWElement, IwahoriWeylGroup
from .errors import DimensionMismatch, NotWeylStable
from .kl import KLTable

__all__ = [
    "GroupRingElement", "IWClassVector", "theta_from_stalks",
    "class_standard", "class_costandard", "class_ic", "class_wakimoto",
    "class_central", "av_iw", "from_specialization",
]

Coweight = tuple[int, ...]


class GroupRingElement:
    __slots__ = ("group", "terms")

    def __init__(self, group: IwahoriWeylGroup, terms: Mapping[IWElement, int] | None = None):
        self.group = group
        self.terms = {w: int(c) for w, c in (terms or {}).items() if c}

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(self.group, out)

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement(self.group, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.group, {w: c * other for w, c in self.terms.items()})
        if self.group.datum != other.group.datum:
            raise DimensionMismatch("group ring elements over different data", location="datum")
        G = self.group
        out: dict[IWElement, int] = defaultdict(int)
        for x, a in self.terms.items():
            for y, b in other.terms.items():
                out[G.multiply(x, y)] += a * b
        return GroupRingElement(G, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def support(self) -> list[IWElement]:
        return sorted(self.terms, key=self.group.sort_key)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        G = self.group
        return " + ".join(f"{self.terms[w]}*{G.to_json(w)}" for w in self.support())

    def to_json(self) -> list[dict]:
        return [{"element": self.group.to_json(w), "coeff": self.terms[w]} for w in self.support()]

    @classmethod
    def from_json(cls, group: IwahoriWeylGroup, obj) -> GroupRingElement:
        out: dict[IWElement, int] = defaultdict(int)
        for e in obj:
            out[group.parse(e["element"])] += int(e["coeff"])
        return cls(group, out)


class IWClassVector:
    """Finitely supported coweight -> integer; classes of IW standard objects."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        self.terms = {tuple(nu): int(c) for nu, c in (terms or {}).items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, IWClassVector):
            return self.terms == other.terms
        if isinstance(other, Mapping):
            return self.terms == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def __repr__(self) -> str:
        return "IWClassVector(" + repr(dict(sorted(self.terms.items()))) + ")"

    def to_json(self) -> list[dict]:
        return [{"coweight": list(nu), "coeff": c} for nu, c in sorted(self.terms.items())]


def theta_from_stalks(group: IwahoriWeylGroup, stalk_euler: Mapping[IWElement, int]) -> GroupRingElement:
    """theta applied to a class given by the Euler characteristics of its stalks."""
    return GroupRingElement(group, {w: (-1) ** group.length(w) * chi for w, chi in stalk_euler.items()})


def class_standard(group: IwahoriWeylGroup, w: IWElement) -> GroupRingElement:
    # Delta_w = j_! Lambda[l(w)]: one stalk, Euler characteristic (-1)^l(w)
    return theta_from_stalks(group, {w: (-1) ** group.length(w)})


def class_costandard(group: IwahoriWeylGroup, w: IWElement) -> GroupRingElement:
    # same stalk on the open cell; boundary contributions cancel in K_0
    return theta_from_stalks(group, {w: (-1) ** group.length(w)})


def class_ic(kl: KLTable, w: IWElement) -> GroupRingElement:
    """IC stalk at x has Euler characteristic (-1)^l(w) P_{x,w}(1)."""
    G = kl.group
    lw = G.length(w)
    c = kl.kl_basis_element(w)
    stalks = {x: (-1) ** lw * kl.kl_polynomial(x, w).evaluate(1) for x in c.terms}
    return theta_from_stalks(G, stalks)


def class_wakimoto(group: IwahoriWeylGroup, nu: Sequence[int]) -> GroupRingElement:
    return GroupRingElement(group, {group.translation(nu): 1})


def class_central(group: IwahoriWeylGroup, ch: Mapping) -> GroupRingElement:
    """sum_nu dim V(nu) [J_nu] for a W_fin-stable character."""
    d = group.datum
    for nu, m in ch.items():
        for i in range(d.rank):
            if ch.get(d.reflect(i, tuple(nu)), 0) != m:
                raise NotWeylStable(f"multiplicity of {tuple(nu)} differs from its s{i + 1}-image",
                                    location="character")
    out = GroupRingElement(group)
    for nu, m in ch.items():
        out = out + class_wakimoto(group, nu) * int(m)
    return out


def av_iw(group: IwahoriWeylGroup, g: GroupRingElement) -> IWClassVector:
    out: dict[Coweight, int] = defaultdict(int)
    for w, c in g.terms.items():
        out[group.coset_label(w)] += c
    return IWClassVector(out)


def from_specialization(group: IwahoriWeylGroup, spec: Mapping[IWElement, object]) -> GroupRingElement:
    """Read an integral specialization of a Hecke element as a group ring element."""
    out = {}
    for w, c in spec.items():
        if getattr(c, "denominator", 1) != 1:
            raise DimensionMismatch(f"non-integral coefficient {c}", location="specialize")
        out[w] = int(c)
    return GroupRingElement(group, out)
