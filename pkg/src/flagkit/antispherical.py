"""
The antispherical right module M = sgn (x)_{H_f} H.

Standard basis N_nu = 1 (x) T_{w_nu}, one per coset label nu. With the
default sign convention T_s (s finite) acts on the sign line by -v^-1, the
eigenvalue killing C_s = T_s + v^-1, so the kernel of H -> M is spanned by
the C_w with w not minimal in W_fin w. The alternative convention
(sign="plus", T_s acting by v) pairs with the basis obtained from C_w by
v -> -v^-1.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Mapping

from .affweyl import IWElement
from .errors import DimensionMismatch, ValidationError
from .hecke import HeckeAlgebra, HeckeElement
from .kl import KLTable
from .laurent import LaurentPoly, ONE

__all__ = ["ASElement", "AntisphericalModule"]

Coweight = tuple[int, ...]


class ASElement:
    __slots__ = ("module", "terms")

    def __init__(self, module: AntisphericalModule, terms: Mapping[Coweight, LaurentPoly] | None = None):
        self.module = module
        self.terms = {nu: c for nu, c in (terms or {}).items() if c}

    def coefficient(self, nu) -> LaurentPoly:
        return self.terms.get(tuple(nu), LaurentPoly())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: ASElement) -> ASElement:
        out = dict(self.terms)
        for nu, c in other.terms.items():
            out[nu] = out[nu] + c if nu in out else c
        return ASElement(self.module, out)

    def __neg__(self) -> ASElement:
        return ASElement(self.module, {nu: -c for nu, c in self.terms.items()})

    def __sub__(self, other: ASElement) -> ASElement:
        return self + (-other)

    def scale(self, c) -> ASElement:
        return ASElement(self.module, {nu: x * c for nu, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ASElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*N{list(nu)}" for nu, c in sorted(self.terms.items()))

    def to_json(self) -> dict:
        return {"terms": [{"coweight": list(nu), "poly": c.to_pairs()}
                          for nu, c in sorted(self.terms.items())]}


class AntisphericalModule:
    def __init__(self, algebra: HeckeAlgebra, sign: str = "minus"):
        if sign not in ("minus", "plus"):
            raise ValidationError("sign must be 'minus' or 'plus'", location="sign")
        self.algebra = algebra
        self.group = algebra.group
        self.sign = sign
        # eigenvalue of T_s on the sign line
        self._eigen = LaurentPoly({-1: -1}) if sign == "minus" else LaurentPoly({1: 1})
        self._proj: dict[IWElement, tuple[Coweight, LaurentPoly]] = {}

    def zero(self) -> ASElement:
        return ASElement(self)

    def standard(self, nu) -> ASElement:
        return ASElement(self, {tuple(nu): ONE})

    def _project_basis(self, w: IWElement) -> tuple[Coweight, LaurentPoly]:
        got = self._proj.get(w)
        if got is None:
            G = self.group
            nu = G.coset_label(w)
            f, m = G.coset_factor(w)
            got = (nu, self._eigen ** G.length(f))
            self._proj[w] = got
        return got

    def project(self, h: HeckeElement) -> ASElement:
        out: dict[Coweight, LaurentPoly] = defaultdict(LaurentPoly)
        for w, c in h.terms.items():
            nu, factor = self._project_basis(w)
            out[nu] = out[nu] + c * factor
        return ASElement(self, out)

    def lift(self, m: ASElement) -> HeckeElement:
        G = self.group
        return HeckeElement(self.algebra, {G.min_coset_rep(nu): c for nu, c in m.terms.items()})

    def act(self, m: ASElement, h: HeckeElement) -> ASElement:
        if m.module.group.datum != h.algebra.group.datum:
            raise DimensionMismatch("module element and Hecke element over different data",
                                    location="datum")
        return self.project(self.algebra.multiply(self.lift(m), h))

    def kernel_basis_element(self, kl: KLTable, w: IWElement) -> HeckeElement:
        c = kl.kl_basis_element(w)
        return c if self.sign == "minus" else c.negate_invert()

    def kernel_check(self, kl: KLTable, w: IWElement) -> bool:
        """True iff the canonical basis element of w maps to zero."""
        return self.project(self.kernel_basis_element(kl, w)).is_zero()
