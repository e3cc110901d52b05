"""
The affine Hecke algebra over Z[v, v^-1], v = q^(1/2), in the T-basis.

Relations: T_x T_y = T_xy when lengths add, and (T_s + v^-1)(T_s - v) = 0,
i.e. T_s^2 = 1 + (v - v^-1) T_s.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Mapping, Sequence

from .affweyl import IWElement, IwahoriWeylGroup
from .errors import BoundExceeded, DimensionMismatch, NotWeylStable, ValidationError
from .laurent import LaurentPoly, ONE, V_MINUS_V_INV

__all__ = ["HeckeElement", "HeckeAlgebra"]


class HeckeElement:
    """A finite sum of Laurent polynomials times T_w."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HeckeAlgebra, terms: Mapping[IWElement, LaurentPoly] | None = None):
        self.algebra = algebra
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    def coefficient(self, w: IWElement) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly())

    def support(self) -> list[IWElement]:
        return sorted(self.terms, key=self.algebra.group.sort_key)

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: self.algebra.group.sort_key(kv[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def _same(self, other: HeckeElement) -> None:
        if self.algebra.group.datum != other.algebra.group.datum:
            raise DimensionMismatch("Hecke elements over different root data", location="datum")

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._same(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.algebra, out)

    def __neg__(self) -> HeckeElement:
        return HeckeElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> HeckeElement:
        return HeckeElement(self.algebra, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        G = self.algebra.group
        return " + ".join(f"({c})*T[{G.to_json(w)['translation']},{list(G.W[w.finite].word)}]"
                          for w, c in self)

    def bar(self) -> HeckeElement:
        """v -> v^-1, T_w -> T_{w^-1}^-1."""
        A = self.algebra
        out = A.zero()
        for w, c in self.terms.items():
            out = out + A.inverse_t(A.group.inverse(w)).scale(c.bar())
        return out

    def negate_invert(self) -> HeckeElement:
        """The ring automorphism v -> -v^-1 fixing every T_w."""
        return HeckeElement(self.algebra, {w: c.negate_invert() for w, c in self.terms.items()})

    def to_json(self) -> dict:
        G = self.algebra.group
        return {"terms": [{"element": G.to_json(w), "poly": c.to_pairs()} for w, c in self]}


class HeckeAlgebra:
    def __init__(self, group: IwahoriWeylGroup | str):
        if not isinstance(group, IwahoriWeylGroup):
            group = IwahoriWeylGroup(group)
        self.group = group
        self._inv_cache: dict[IWElement, HeckeElement] = {}

    @property
    def datum(self):
        return self.group.datum

    def zero(self) -> HeckeElement:
        return HeckeElement(self)

    def unit(self) -> HeckeElement:
        return self.t_basis(self.group.identity)

    def t_basis(self, w: IWElement) -> HeckeElement:
        return HeckeElement(self, {w: ONE})

    def from_json(self, obj) -> HeckeElement:
        terms: dict[IWElement, LaurentPoly] = {}
        for t in obj["terms"]:
            w = self.group.parse(t["element"])
            terms[w] = terms.get(w, LaurentPoly()) + LaurentPoly.from_pairs(t["poly"])
        return HeckeElement(self, terms)

    # -- multiplication ---------------------------------------------------------------

    def _left_simple(self, label: int, terms: Mapping[IWElement, LaurentPoly]) -> dict:
        G = self.group
        out: dict[IWElement, LaurentPoly] = defaultdict(LaurentPoly)
        for w, c in terms.items():
            sw = G.left_mul_simple(label, w)
            out[sw] = out[sw] + c
            if G.length(sw) < G.length(w):
                out[w] = out[w] + c * V_MINUS_V_INV
        return out

    def _left_simple_inverse(self, label: int, terms: Mapping[IWElement, LaurentPoly]) -> dict:
        # T_s^-1 = T_s - (v - v^-1)
        out = self._left_simple(label, terms)
        for w, c in terms.items():
            out[w] = out[w] - c * V_MINUS_V_INV
        return out

    def _left_omega(self, tau: IWElement, terms: Mapping[IWElement, LaurentPoly]) -> dict:
        G = self.group
        return {G.multiply(tau, w): c for w, c in terms.items()}

    def left_multiply_t(self, x: IWElement, h: HeckeElement) -> HeckeElement:
        """T_x * h, folding the letters of a reduced word of x from the right."""
        word = self.group.reduced_word(x)
        terms: Mapping[IWElement, LaurentPoly] = h.terms
        for i in reversed(word.letters):
            terms = self._left_simple(i, terms)
        terms = self._left_omega(word.omega_element, terms)
        return HeckeElement(self, terms)

    def left_multiply_simple(self, label: int, h: HeckeElement) -> HeckeElement:
        return HeckeElement(self, self._left_simple(label, h.terms))

    def multiply(self, h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
        h1._same(h2)
        out: dict[IWElement, LaurentPoly] = defaultdict(LaurentPoly)
        for x, c in h1.terms.items():
            for w, d in self.left_multiply_t(x, h2).terms.items():
                out[w] = out[w] + c * d
        return HeckeElement(self, out)

    def inverse_t(self, w: IWElement) -> HeckeElement:
        """T_w^-1 = T_{s_k}^-1 ... T_{s_1}^-1 T_{tau^-1} for w = tau s_1 ... s_k."""
        got = self._inv_cache.get(w)
        if got is not None:
            return got
        G = self.group
        word = G.reduced_word(w)
        terms: Mapping[IWElement, LaurentPoly] = {G.inverse(word.omega_element): ONE}
        for i in word.letters:
            terms = self._left_simple_inverse(i, terms)
        out = HeckeElement(self, terms)
        self._inv_cache[w] = out
        return out

    # -- Bernstein elements and the centre ------------------------------------------------

    def default_decomposition(self, nu: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """nu = nu1 - nu2 with nu2 = k * 2rho^vee for the least k making nu1 dominant."""
        d = self.datum
        rv = d.two_rho_vee
        k = 0
        for a in d.simple_roots:
            p = d.pairing(nu, a)
            if p < 0:
                k = max(k, (-p + 1) // 2)
        nu2 = tuple(k * c for c in rv)
        nu1 = tuple(a + b for a, b in zip(nu, nu2))
        return nu1, nu2

    def bernstein_theta(self, nu: Sequence[int], decomposition: tuple | None = None) -> HeckeElement:
        G = self.group
        nu = G._check(nu)
        if decomposition is None:
            nu1, nu2 = self.default_decomposition(nu)
        else:
            nu1, nu2 = (G._check(v) for v in decomposition)
            if tuple(a - b for a, b in zip(nu1, nu2)) != nu:
                raise ValidationError("decomposition does not sum to nu", location="decomposition")
            if not (self.datum.is_dominant(nu1) and self.datum.is_dominant(nu2)):
                raise ValidationError("decomposition parts must be dominant", location="decomposition")
        t1 = G.translation(nu1)
        if not any(nu2):
            return self.t_basis(t1)
        return self.left_multiply_t(t1, self.inverse_t(G.translation(nu2)))

    def central_element(self, ch) -> HeckeElement:
        """z_V = sum_nu ch(nu) theta_nu for a W_fin-stable weight multiset."""
        d = self.datum
        for nu, m in ch.items():
            for i in range(d.rank):
                if ch.get(d.reflect(i, nu), 0) != m:
                    raise NotWeylStable(f"multiplicity of {nu} differs from its s{i + 1}-image",
                                        location="character")
        out = self.zero()
        for nu, m in sorted(ch.items()):
            if m:
                out = out + self.bernstein_theta(nu).scale(m)
        return out

    def generators(self) -> list[HeckeElement]:
        """T_s for every simple affine reflection and T_tau for the Omega generators."""
        G = self.group
        gens = [self.t_basis(G.simple[i]) for i in G.labels]
        try:
            omegas = G.omega_elements()
        except BoundExceeded:
            # Omega infinite (non-semisimple): use the residue generators
            omegas = []
            for k in range(G.n):
                e = [0] * G.n
                e[k] = 1
                omegas.append(G.omega_from_residue(e))
        gens += [self.t_basis(t) for t in omegas if t != G.identity]
        return gens

    def is_central(self, h: HeckeElement) -> bool:
        return all(self.multiply(g, h) == self.multiply(h, g) for g in self.generators())

    # -- specialization --------------------------------------------------------------------

    def specialize(self, h: HeckeElement, v0) -> dict[IWElement, Fraction | int]:
        v0 = Fraction(v0)
        if v0 == 0:
            raise ValidationError("cannot specialize at v = 0", location="v0")
        out = {}
        for w, c in h.terms.items():
            val = c.evaluate(v0)
            if val:
                out[w] = val
        return out
