"""
The extended affine Weyl group W = X_* x| W_fin.

An element is stored as ``IWElement(translation, finite)`` and stands for
t_translation * w, where ``finite`` indexes the datum's enumerated W_fin.
It acts on the apartment by x -> translation + w(x). The base alcove lies in
the dominant chamber, so

    l(t_lam w) = sum_{a>0, w^-1 a>0} |<lam,a>| + sum_{a>0, w^-1 a<0} |<lam,a> - 1|

and dominant translations are minimal in their left W_fin-coset. The simple
affine reflections are s_1..s_r (finite) and s_0 = t_{theta^vee} s_theta per
irreducible component (labelled 0 for the first component and r+c for the
c-th further one).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BoundExceeded, DatumError, DimensionMismatch, NotDominant, Undetermined, ValidationError,
)
from .rootdata import RootDatum, load_root_datum

__all__ = ["IWElement", "AffineWord", "IwahoriWeylGroup", "DEFAULT_MAX_LENGTH"]

DEFAULT_MAX_LENGTH = 12


@dataclass(frozen=True, slots=True)
class IWElement:
    translation: tuple[int, ...]
    finite: int

    def sort_key(self, group: IwahoriWeylGroup):
        return (self.translation, group.W[self.finite].word)


@dataclass(frozen=True)
class AffineWord:
    omega: str
    letters: tuple[int, ...]
    omega_element: IWElement

    def to_json(self) -> dict:
        return {"omega": self.omega, "letters": list(self.letters)}


class IwahoriWeylGroup:
    def __init__(self, datum: RootDatum | str | dict):
        if not isinstance(datum, RootDatum):
            datum = load_root_datum(datum)
        self.datum = datum
        self.W = datum.weyl_group()
        self.n = datum.lattice_rank
        self.identity = IWElement((0,) * self.n, self.W.identity)
        self._roots = datum.positive_roots
        self._length: dict[IWElement, int] = {}
        self._lmul: dict[tuple[int, IWElement], IWElement] = {}
        self._words: dict[IWElement, AffineWord] = {}
        r = datum.rank
        self.simple: dict[int, IWElement] = {
            i + 1: IWElement(self.identity.translation, self.W.simple[i]) for i in range(r)
        }
        for c, k in enumerate(datum.highest_roots):
            theta_vee = datum.positive_coroots[k]
            s_theta = self._reflection_index(k)
            label = 0 if c == 0 else r + c
            self.simple[label] = IWElement(theta_vee, s_theta)
        self.finite_labels = tuple(range(1, r + 1))
        self.labels = tuple(sorted(self.simple))

    def _reflection_index(self, k: int) -> int:
        alpha = self.datum.positive_roots[k]
        alpha_vee = self.datum.positive_coroots[k]
        m = tuple(tuple(int(i == j) - alpha_vee[i] * alpha[j] for j in range(self.n))
                  for i in range(self.n))
        return self.W.index_of(m)

    # -- construction and encoding -------------------------------------------------

    def _check(self, nu: Sequence[int]) -> tuple[int, ...]:
        if len(nu) != self.n:
            raise DimensionMismatch(f"coweight must have length {self.n}, got {len(nu)}",
                                    location="translation")
        return tuple(int(x) for x in nu)

    def translation(self, nu: Sequence[int]) -> IWElement:
        return IWElement(self._check(nu), self.W.identity)

    def finite(self, word: Sequence[int]) -> IWElement:
        return IWElement((0,) * self.n, self.W.from_word(word))

    def element(self, translation: Sequence[int], finite_word: Sequence[int] = ()) -> IWElement:
        return IWElement(self._check(translation), self.W.from_word(finite_word))

    def from_letters(self, letters: Iterable[int]) -> IWElement:
        x = self.identity
        for i in letters:
            if i not in self.simple:
                raise DatumError(f"no simple reflection s{i}", location="letters")
            x = self.multiply(x, self.simple[i])
        return x

    def parse(self, obj) -> IWElement:
        """Accepts an IWElement JSON object/string, 'e', or a word such as 's2s1s0'."""
        if isinstance(obj, IWElement):
            return obj
        if isinstance(obj, str):
            s = obj.strip()
            if s.startswith("{"):
                try:
                    obj = json.loads(s)
                except json.JSONDecodeError as exc:
                    raise DatumError(f"element JSON does not parse: {exc}", location="element") from exc
            elif s in ("e", "1", ""):
                return self.identity
            else:
                parts = s.split("s")
                if parts[0] != "" or not all(p.isdigit() for p in parts[1:]):
                    raise DatumError(f"cannot parse element {s!r}", location="element")
                return self.from_letters(int(p) for p in parts[1:])
        if not isinstance(obj, dict) or "translation" not in obj:
            raise DatumError("element must have a 'translation' field", location="element")
        return self.element(obj["translation"], obj.get("finite_word", []))

    def to_json(self, x: IWElement) -> dict:
        return {"translation": list(x.translation), "finite_word": list(self.W[x.finite].word)}

    def sort_key(self, x: IWElement):
        return (x.translation, self.W[x.finite].word)

    # -- group law ------------------------------------------------------------------

    def multiply(self, x: IWElement, y: IWElement) -> IWElement:
        wy = self.W.apply(x.finite, y.translation)
        return IWElement(tuple(a + b for a, b in zip(x.translation, wy)),
                         self.W.mult(x.finite, y.finite))

    def product(self, *xs: IWElement) -> IWElement:
        out = self.identity
        for x in xs:
            out = self.multiply(out, x)
        return out

    def inverse(self, x: IWElement) -> IWElement:
        winv = self.W.inverse[x.finite]
        t = self.W.apply(winv, x.translation)
        return IWElement(tuple(-a for a in t), winv)

    def left_mul_simple(self, label: int, x: IWElement) -> IWElement:
        key = (label, x)
        r = self._lmul.get(key)
        if r is None:
            r = self.multiply(self.simple[label], x)
            self._lmul[key] = r
        return r

    # -- length -------------------------------------------------------------------

    def length(self, x: IWElement) -> int:
        l = self._length.get(x)
        if l is None:
            lam = x.translation
            flips = self.W.flips[x.finite]
            l = 0
            for a, f in zip(self._roots, flips):
                p = sum(u * v for u, v in zip(lam, a))
                l += abs(p - 1) if f else abs(p)
            self._length[x] = l
        return l

    def left_descents(self, x: IWElement) -> list[int]:
        lx = self.length(x)
        return [i for i in self.labels if self.length(self.left_mul_simple(i, x)) < lx]

    def first_left_descent(self, x: IWElement) -> int | None:
        lx = self.length(x)
        for i in self.labels:
            if self.length(self.left_mul_simple(i, x)) < lx:
                return i
        return None

    # -- Omega ----------------------------------------------------------------------

    def omega_residue(self, x: IWElement) -> tuple[int, ...]:
        return self.datum.coroot_residue(x.translation)

    def omega_label(self, x: IWElement) -> str:
        res = self.omega_residue(x)
        piv = self.datum.residue_pivots
        # free coordinates and torsion coordinates
        coords = [v for k, v in enumerate(res) if k not in piv or piv[k] > 1]
        if not any(coords):
            return "e"
        if len(coords) == 1:
            return "tau" if coords[0] == 1 else f"tau^{coords[0]}"
        return "tau^(" + ",".join(str(c) for c in coords) + ")"

    def omega_part(self, x: IWElement) -> IWElement:
        """The length-zero tau with x = tau * x_aff, x_aff in W_aff."""
        y = x
        while True:
            i = self.first_left_descent(y)
            if i is None:
                return y
            y = self.left_mul_simple(i, y)

    def omega_from_residue(self, residue: Sequence[int]) -> IWElement:
        return self.omega_part(self.translation(residue))

    def omega_elements(self, limit: int = 10_000) -> list[IWElement]:
        """All length-zero elements (finite when the datum is semisimple)."""
        piv = self.datum.residue_pivots
        if len(piv) < self.n:
            raise BoundExceeded("Omega is infinite for this datum", location="omega")
        ranges = [range(piv[k]) for k in range(self.n)]
        out = []
        from itertools import product
        for res in product(*ranges):
            out.append(self.omega_from_residue(res))
            if len(out) > limit:
                raise BoundExceeded(f"more than {limit} Omega elements", location="omega")
        out.sort(key=self.sort_key)
        return out

    # -- reduced words -----------------------------------------------------------

    def reduced_word(self, x: IWElement) -> AffineWord:
        """x = tau * s_{i1} ... s_{ik}; at each step the smallest left descent of
        the W_aff part is peeled off."""
        got = self._words.get(x)
        if got is not None:
            return got
        tau = self.omega_part(x)
        u = self.multiply(self.inverse(tau), x)
        letters = []
        while True:
            i = self.first_left_descent(u)
            if i is None:
                break
            letters.append(i)
            u = self.left_mul_simple(i, u)
        word = AffineWord(self.omega_label(tau), tuple(letters), tau)
        self._words[x] = word
        return word

    def evaluate_word(self, word: AffineWord) -> IWElement:
        return self.multiply(word.omega_element, self.from_letters(word.letters))

    # -- Bruhat order ---------------------------------------------------------------

    def bruhat_leq(self, x: IWElement, y: IWElement) -> bool:
        if self.omega_residue(x) != self.omega_residue(y):
            return False
        while True:
            lx, ly = self.length(x), self.length(y)
            if lx > ly:
                return False
            if ly == 0 or lx == 0:
                # same Omega component: the length-0 element is its minimum
                return lx == 0 if ly else x == y
            if lx == ly:
                return x == y
            i = self.first_left_descent(y)
            sx = self.left_mul_simple(i, x)
            if self.length(sx) < lx:
                x = sx
            y = self.left_mul_simple(i, y)

    def bruhat_interval_below(self, y: IWElement, max_length: int = DEFAULT_MAX_LENGTH) -> set[IWElement]:
        ly = self.length(y)
        if ly > max_length:
            raise BoundExceeded(f"length {ly} exceeds bound {max_length}", location="interval")
        return set(self._below(y))

    def _below(self, y: IWElement) -> frozenset[IWElement]:
        cache = self.__dict__.setdefault("_below_cache", {})
        got = cache.get(y)
        if got is not None:
            return got
        i = self.first_left_descent(y)
        if i is None:
            out = frozenset([y])
        else:
            lower = self._below(self.left_mul_simple(i, y))
            out = lower | frozenset(self.left_mul_simple(i, z) for z in lower)
        cache[y] = out
        return out

    def elements_up_to_length(self, max_length: int, omegas: Iterable[IWElement] | None = None) -> list[IWElement]:
        """All elements of length <= max_length in the given Omega components
        (default: every component when Omega is finite, otherwise only W_aff)."""
        if omegas is None:
            try:
                omegas = self.omega_elements()
            except BoundExceeded:
                omegas = [self.identity]
        seen = set(omegas)
        frontier = list(omegas)
        for _ in range(max_length):
            nxt = []
            for x in frontier:
                lx = self.length(x)
                for i in self.labels:
                    y = self.left_mul_simple(i, x)
                    if y not in seen and self.length(y) == lx + 1:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen, key=lambda z: (self.length(z), self.sort_key(z)))

    # -- cosets -------------------------------------------------------------------

    def coset_label(self, x: IWElement) -> tuple[int, ...]:
        """nu with W_fin x = W_fin t_nu; since t_nu w = w t_{w^-1 nu} this is w^-1(nu)."""
        return self.W.apply(self.W.inverse[x.finite], x.translation)

    def is_minimal_in_left_Wfin_coset(self, x: IWElement) -> bool:
        lx = self.length(x)
        return all(self.length(self.left_mul_simple(i, x)) > lx for i in self.finite_labels)

    def min_coset_rep(self, nu: Sequence[int]) -> IWElement:
        y = self.translation(nu)
        while True:
            ly = self.length(y)
            for i in self.finite_labels:
                z = self.left_mul_simple(i, y)
                if self.length(z) < ly:
                    y = z
                    break
            else:
                return y

    def coset_factor(self, x: IWElement) -> tuple[IWElement, IWElement]:
        """(f, m) with x = f * m, f in W_fin, m minimal in its coset, lengths adding."""
        m = self.min_coset_rep(self.coset_label(x))
        return self.multiply(x, self.inverse(m)), m

    # -- semi-infinite order ------------------------------------------------------------

    def semi_infinite_leq(self, x: IWElement, y: IWElement, window: int = 5, start: int | None = None) -> bool:
        """Stabilized comparison t_{n nu} x <= t_{n nu} y with nu = 2 rho^vee.

        Raises Undetermined if the answers over the window disagree.
        """
        if window < 1:
            raise ValidationError("window must be at least 1", location="window")
        if self.omega_residue(x) != self.omega_residue(y):
            return False
        nu = self.datum.two_rho_vee
        if start is None:
            start = self.length(x) + self.length(y) + self.datum.coxeter_number
        answers = set()
        for n in range(start, start + window):
            t = self.translation(tuple(n * c for c in nu))
            answers.add(self.bruhat_leq(self.multiply(t, x), self.multiply(t, y)))
        if len(answers) != 1:
            raise Undetermined(
                f"semi-infinite comparison did not stabilize for n in [{start}, {start + window})",
                location="semi_infinite_leq")
        return answers.pop()

    # -- admissible sets -------------------------------------------------------------

    def admissible_set(self, mu: Sequence[int], max_length: int = DEFAULT_MAX_LENGTH) -> set[IWElement]:
        mu = self._check(mu)
        if not self.datum.is_dominant(mu):
            raise NotDominant(f"{mu} is not dominant", location="mu")
        out: set[IWElement] = set()
        for nu in {self.W.apply(w.index, mu) for w in self.W.elements}:
            out |= self.bruhat_interval_below(self.translation(nu), max_length)
        return out
