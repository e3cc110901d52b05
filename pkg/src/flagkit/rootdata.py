"""
Root data, finite Weyl groups and dominance.

Conventions:

* Coweights (elements of the cocharacter lattice X_*) and weights (elements of
  the character lattice X^*) are integer tuples of length ``lattice_rank``;
  the pairing is the coordinate dot product.
* ``cartan[i][j] == <alpha_j^vee, alpha_i>``.
* Presets named by a Cartan type ("A1", "A2", "A3", "C2", "G2") use the
  adjoint group, i.e. X_* is the coweight lattice written in the basis of
  fundamental coweights. "SL2" is the simply connected form, "PGL2" equals
  "A1", and "GLn" has X_* = Z^n with alpha_i = e_i - e_{i+1}.

>>> d = load_root_datum("GL2")
>>> d.two_rho, d.two_rho_pairing((1, 0))
((1, -1), 1)
>>> [w.word for w in d.weyl_group().elements]
[(), (1,)]
"""

from __future__ import annotations

import hashlib
import json
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import DatumError, DimensionMismatch, NotDominant, BoundExceeded

__all__ = [
    "RootDatum", "FiniteWeylElement", "WeylGroup", "load_root_datum",
    "PRESET_NAMES", "DEFAULT_WEYL_BOUND",
]

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_WEYL_BOUND = 10**6

_CARTAN_PRESETS = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "C2": [[2, -1], [-2, 2]],
    "G2": [[2, -1], [-3, 2]],
}

PRESET_NAMES = ("A1", "A2", "A3", "C2", "G2", "GL2", "GL3", "GLn(n)", "SL2", "PGL2")


def _det(rows: Sequence[Sequence[int]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def _inverse(rows: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _hermite_rows(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``."""
    m = [list(r) for r in rows if any(r)]
    out: list[list[int]] = []
    col = 0
    while m and col < ncols:
        nz = [r for r in m if r[col] != 0]
        if not nz:
            col += 1
            continue
        # euclid on column ``col``
        while len([r for r in m if r[col] != 0]) > 1:
            m.sort(key=lambda r: (r[col] == 0, abs(r[col])))
            piv = m[0]
            for r in m[1:]:
                if r[col]:
                    q = r[col] // piv[col]
                    for k in range(ncols):
                        r[k] -= q * piv[k]
        m.sort(key=lambda r: (r[col] == 0, abs(r[col])))
        piv = m.pop(0)
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        m = [r for r in m if any(r)]
        col += 1
    # reduce entries above pivots
    for i, row in enumerate(out):
        pc = next(k for k, x in enumerate(row) if x)
        for j in range(i):
            q = out[j][pc] // row[pc]
            out[j] = [a - q * b for a, b in zip(out[j], row)]
    return out


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _matvec(a: Matrix, x: Sequence[int]) -> Vector:
    return tuple(sum(r[k] * x[k] for k in range(len(x))) for r in a)


@dataclass(frozen=True)
class FiniteWeylElement:
    index: int
    action: Matrix  # on the cocharacter lattice
    word: tuple[int, ...]  # reduced, 1-based simple reflection indices

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, nu: Sequence[int]) -> Vector:
        return _matvec(self.action, nu)


class WeylGroup:
    """All elements of W_fin, enumerated breadth-first from the identity."""

    def __init__(self, datum: RootDatum, bound: int = DEFAULT_WEYL_BOUND):
        self.datum = datum
        n = datum.lattice_rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.generators = [datum.reflection_matrix(i) for i in range(datum.rank)]
        elements = [FiniteWeylElement(0, ident, ())]
        index = {ident: 0}
        queue = deque([0])
        while queue:
            w = elements[queue.popleft()]
            for i, g in enumerate(self.generators):
                m = _matmul(g, w.action)
                if m not in index:
                    if len(elements) >= bound:
                        raise BoundExceeded(
                            f"finite Weyl group has more than {bound} elements",
                            location="enumerate_finite_weyl")
                    index[m] = len(elements)
                    elements.append(FiniteWeylElement(len(elements), m, (i + 1,) + w.word))
                    queue.append(index[m])
        self.elements = elements
        self._index = index
        self._mult: dict[tuple[int, int], int] = {}
        self.identity = 0
        self.longest = max(range(len(elements)), key=lambda k: len(elements[k].word))
        self.simple = [index[g] for g in self.generators]
        self.inverse = [index[_int_inverse(e.action)] for e in elements]
        # flips[w][k]: w^{-1} alpha_k < 0 for the k-th positive root
        pos = datum.positive_coroots
        neg = set(tuple(-x for x in c) for c in pos)
        self.flips = []
        for e in elements:
            winv = elements[self.inverse[e.index]].action
            self.flips.append(tuple(_matvec(winv, c) in neg for c in pos))

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, k: int) -> FiniteWeylElement:
        return self.elements[k]

    def mult(self, a: int, b: int) -> int:
        key = (a, b)
        r = self._mult.get(key)
        if r is None:
            r = self._index[_matmul(self.elements[a].action, self.elements[b].action)]
            self._mult[key] = r
        return r

    def from_word(self, word: Sequence[int]) -> int:
        w = 0
        for i in reversed(list(word)):
            if not 1 <= i <= self.datum.rank:
                raise DatumError(f"simple reflection index {i} out of range 1..{self.datum.rank}",
                                 location="finite_word")
            w = self.mult(self.simple[i - 1], w)
        return w

    def index_of(self, action: Matrix) -> int:
        return self._index[action]

    def apply(self, w: int, nu: Sequence[int]) -> Vector:
        return _matvec(self.elements[w].action, nu)

    def inversion_count(self, w: int) -> int:
        return sum(self.flips[self.inverse[w]])


def _int_inverse(action):
    inv = _inverse(action)
    return tuple(tuple(int(x) for x in row) for row in inv)


@dataclass(frozen=True)
class RootDatum:
    cartan: Matrix
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    preset_name: str | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def lattice_rank(self) -> int:
        return len(self.simple_roots[0])

    # -- validation -----------------------------------------------------------

    def validate(self) -> None:
        r = self.rank
        if r < 1:
            raise DatumError("rank must be positive", location="cartan")
        for i, row in enumerate(self.cartan):
            if len(row) != r:
                raise DatumError("Cartan matrix must be square", location=f"cartan[{i}]")
            if row[i] != 2:
                raise DatumError(f"diagonal entry A[{i}][{i}] must be 2", location=f"cartan[{i}][{i}]")
        for i in range(r):
            for j in range(r):
                if i != j:
                    a, b = self.cartan[i][j], self.cartan[j][i]
                    if a > 0 or (a == 0) != (b == 0):
                        raise DatumError(f"not a generalized Cartan matrix at ({i},{j})",
                                         location=f"cartan[{i}][{j}]")
        for k in range(1, r + 1):
            for idx in combinations(range(r), k):
                minor = _det([[self.cartan[i][j] for j in idx] for i in idx])
                if minor <= 0:
                    raise DatumError(
                        f"Cartan matrix is not of finite type: principal minor on rows "
                        f"{list(idx)} equals {minor}", location="cartan")
        if len(self.simple_roots) != r or len(self.simple_coroots) != r:
            raise DatumError("need one simple root and coroot per Cartan row", location="simple_roots")
        n = self.lattice_rank
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != n:
                raise DatumError("all lattice vectors must have the same length", location="simple_roots")
        for i in range(r):
            for j in range(r):
                got = _dot(self.simple_coroots[j], self.simple_roots[i])
                if got != self.cartan[i][j]:
                    raise DatumError(
                        f"pairing mismatch at ({i},{j}): <coroot_{j}, root_{i}> = {got} "
                        f"but A[{i}][{j}] = {self.cartan[i][j]}", location=f"({i},{j})")

    # -- pairings --------------------------------------------------------------

    def pairing(self, nu: Sequence[int], chi: Sequence[int]) -> int:
        if len(nu) != self.lattice_rank or len(chi) != self.lattice_rank:
            raise DimensionMismatch(
                f"expected vectors of length {self.lattice_rank}, got {len(nu)} and {len(chi)}",
                location="pairing")
        return _dot(nu, chi)

    def two_rho_pairing(self, nu: Sequence[int]) -> int:
        return self.pairing(nu, self.two_rho)

    def is_dominant(self, nu: Sequence[int]) -> bool:
        return all(self.pairing(nu, a) >= 0 for a in self.simple_roots)

    def reflect(self, i: int, nu: Sequence[int]) -> Vector:
        """s_i on coweights (0-based i)."""
        p = _dot(nu, self.simple_roots[i])
        return tuple(x - p * c for x, c in zip(nu, self.simple_coroots[i]))

    def reflection_matrix(self, i: int) -> Matrix:
        n = self.lattice_rank
        a, c = self.simple_roots[i], self.simple_coroots[i]
        return tuple(tuple(int(r == k) - c[r] * a[k] for k in range(n)) for r in range(n))

    # -- roots -----------------------------------------------------------------

    @cached_property
    def _root_system(self):
        """Positive roots/coroots as (root coeffs, coroot coeffs) in simple bases."""
        r = self.rank
        A = self.cartan
        start = [(tuple(int(i == k) for i in range(r)), tuple(int(i == k) for i in range(r)))
                 for k in range(r)]
        seen = set(start)
        queue = deque(start)
        while queue:
            c, d = queue.popleft()
            for j in range(r):
                pr = sum(c[i] * A[i][j] for i in range(r))  # <alpha_j^vee, beta>
                pc = sum(d[i] * A[j][i] for i in range(r))  # <beta^vee, alpha_j>
                c2 = tuple(x - pr * int(i == j) for i, x in enumerate(c))
                d2 = tuple(x - pc * int(i == j) for i, x in enumerate(d))
                if (c2, d2) not in seen:
                    seen.add((c2, d2))
                    queue.append((c2, d2))
        pos = [(c, d) for c, d in seen if all(x >= 0 for x in c)]
        pos.sort(key=lambda cd: (sum(cd[0]), tuple(-x for x in cd[0])))
        return pos

    @cached_property
    def positive_root_coefficients(self) -> list[Vector]:
        return [c for c, _ in self._root_system]

    @cached_property
    def positive_roots(self) -> list[Vector]:
        n = self.lattice_rank
        return [tuple(sum(c[i] * self.simple_roots[i][k] for i in range(self.rank)) for k in range(n))
                for c, _ in self._root_system]

    @cached_property
    def positive_coroots(self) -> list[Vector]:
        n = self.lattice_rank
        return [tuple(sum(d[i] * self.simple_coroots[i][k] for i in range(self.rank)) for k in range(n))
                for _, d in self._root_system]

    @cached_property
    def two_rho(self) -> Vector:
        return tuple(sum(col) for col in zip(*self.positive_roots))

    @cached_property
    def two_rho_vee(self) -> Vector:
        return tuple(sum(col) for col in zip(*self.positive_coroots))

    @cached_property
    def components(self) -> list[tuple[int, ...]]:
        """Connected components of the Dynkin diagram (0-based simple indices)."""
        left = set(range(self.rank))
        comps = []
        while left:
            stack = [min(left)]
            comp = set()
            while stack:
                i = stack.pop()
                if i in comp:
                    continue
                comp.add(i)
                stack.extend(j for j in range(self.rank) if self.cartan[i][j] and j not in comp)
            left -= comp
            comps.append(tuple(sorted(comp)))
        return comps

    @cached_property
    def highest_roots(self) -> list[int]:
        """Index (into positive_roots) of the highest root of each component."""
        out = []
        for comp in self.components:
            best = None
            for k, c in enumerate(self.positive_root_coefficients):
                if all(c[i] == 0 for i in range(self.rank) if i not in comp):
                    if best is None or sum(c) > sum(self.positive_root_coefficients[best]):
                        best = k
            out.append(best)
        return out

    @cached_property
    def coxeter_number(self) -> int:
        hs = []
        for comp in self.components:
            npos = sum(1 for c in self.positive_root_coefficients
                       if all(c[i] == 0 for i in range(self.rank) if i not in comp))
            hs.append(2 * npos // len(comp))
        return max(hs)

    def invariant_form(self, x: Sequence[int], y: Sequence[int]) -> int:
        """W-invariant symmetric form sum_{alpha>0} <x,alpha><y,alpha> on X_*."""
        return sum(_dot(x, a) * _dot(y, a) for a in self.positive_roots)

    @cached_property
    def _coroot_solver(self):
        # <x, alpha_j> = sum_i c_i A[j][i], so c = A^-1 p
        return _inverse(self.cartan)

    def coroot_coefficients(self, x: Sequence[int]) -> tuple[Fraction, ...] | None:
        """Coefficients of x in the simple coroot basis, or None off the coroot span."""
        p = [_dot(x, a) for a in self.simple_roots]
        inv = self._coroot_solver
        c = tuple(sum(inv[i][j] * p[j] for j in range(self.rank)) for i in range(self.rank))
        back = tuple(sum(c[i] * self.simple_coroots[i][k] for i in range(self.rank))
                     for k in range(self.lattice_rank))
        if back != tuple(x):
            return None
        return c

    def in_positive_coroot_cone(self, x: Sequence[int]) -> bool:
        """True iff x is a non-negative integer combination of simple coroots."""
        c = self.coroot_coefficients(x)
        return c is not None and all(v.denominator == 1 and v >= 0 for v in c)

    @cached_property
    def _coroot_hnf(self) -> list[list[int]]:
        return _hermite_rows(self.simple_coroots, self.lattice_rank)

    def coroot_residue(self, nu: Sequence[int]) -> Vector:
        """Canonical representative of nu modulo the coroot lattice."""
        x = list(nu)
        for row in self._coroot_hnf:
            pc = next(k for k, v in enumerate(row) if v)
            q = x[pc] // row[pc]
            x = [a - q * b for a, b in zip(x, row)]
        return tuple(x)

    @cached_property
    def residue_pivots(self) -> dict[int, int]:
        """Pivot column -> pivot value of the coroot Hermite form."""
        out = {}
        for row in self._coroot_hnf:
            pc = next(k for k, v in enumerate(row) if v)
            out[pc] = row[pc]
        return out

    # -- Weyl group ---------------------------------------------------------------

    def weyl_group(self, bound: int = DEFAULT_WEYL_BOUND) -> WeylGroup:
        cache = self.__dict__.setdefault("_weyl_cache", {})
        if "W" not in cache:
            cache["W"] = WeylGroup(self, bound)
        elif len(cache["W"]) > bound:
            raise BoundExceeded(f"finite Weyl group has more than {bound} elements",
                                location="enumerate_finite_weyl")
        return cache["W"]

    def enumerate_finite_weyl(self, bound: int = DEFAULT_WEYL_BOUND) -> list[FiniteWeylElement]:
        return list(self.weyl_group(bound).elements)

    @property
    def longest_element(self) -> FiniteWeylElement:
        W = self.weyl_group()
        return W[W.longest]

    def dominant_representative(self, nu: Sequence[int]) -> tuple[Vector, FiniteWeylElement]:
        """(nu+, w) with w(nu) = nu+ dominant and w of minimal length."""
        if len(nu) != self.lattice_rank:
            raise DimensionMismatch(f"coweight must have length {self.lattice_rank}", location="nu")
        W = self.weyl_group()
        nu = tuple(nu)
        w = W.identity
        while True:
            i = next((i for i, a in enumerate(self.simple_roots) if _dot(nu, a) < 0), None)
            if i is None:
                return nu, W[w]
            nu = self.reflect(i, nu)
            w = W.mult(W.simple[i], w)

    def classify_coweight(self, mu: Sequence[int]) -> str:
        if not self.is_dominant(mu):
            raise NotDominant(f"{tuple(mu)} is not dominant", location="mu")
        pairs = [_dot(mu, a) for a in self.positive_roots]
        if all(abs(p) <= 1 for p in pairs):
            return "minuscule"
        mu = tuple(mu)
        if mu in self.positive_coroots:
            k = self.positive_coroots.index(mu)
            c = self.positive_root_coefficients[k]
            comp = next(cp for cp in self.components if any(c[i] for i in cp))
            norms = [self.invariant_form(b, b) for b, cc in
                     zip(self.positive_coroots, self.positive_root_coefficients)
                     if any(cc[i] for i in comp)]
            if self.invariant_form(mu, mu) == min(norms):
                return "quasi-minuscule"
        return "neither"

    # -- identity -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "cartan": [list(r) for r in self.cartan],
            "simple_roots": [list(r) for r in self.simple_roots],
            "simple_coroots": [list(r) for r in self.simple_coroots],
        }

    @cached_property
    def fingerprint(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def is_type_a(self) -> bool:
        r = self.rank
        for i in range(r):
            for j in range(r):
                want = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
                if self.cartan[i][j] != want:
                    return False
        return True


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _adjoint_datum(cartan, name=None) -> RootDatum:
    r = len(cartan)
    roots = tuple(tuple(int(i == k) for k in range(r)) for i in range(r))
    coroots = tuple(tuple(cartan[i][j] for i in range(r)) for j in range(r))
    return RootDatum(tuple(tuple(row) for row in cartan), roots, coroots, preset_name=name)


def _gl_datum(n: int) -> RootDatum:
    if n < 2:
        raise DatumError("GLn needs n >= 2", location="datum")
    vecs = tuple(tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1))
    cartan = tuple(tuple(_dot(vecs[j], vecs[i]) for j in range(n - 1)) for i in range(n - 1))
    return RootDatum(cartan, vecs, vecs, preset_name=f"GL{n}")


def _preset(name: str) -> RootDatum:
    base = name[:-len("finite")] if name.endswith("finite") else name
    if base in _CARTAN_PRESETS:
        return _adjoint_datum(_CARTAN_PRESETS[base], name)
    if base == "PGL2":
        return _adjoint_datum([[2]], name)
    if base == "SL2":
        return RootDatum(((2,),), ((2,),), ((1,),), preset_name=name)
    m = re.fullmatch(r"GL(?:n\()?(\d+)\)?", base)
    if m:
        return _gl_datum(int(m.group(1)))
    raise DatumError(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}", location="datum")


def load_root_datum(spec) -> RootDatum:
    """Build and validate a datum from a preset name, a JSON string, or a dict.

    A dict may give ``cartan`` alone (adjoint lattice is used), roots and
    coroots alone (Cartan matrix is derived), or all three.
    """
    if isinstance(spec, RootDatum):
        spec.validate()
        return spec
    if isinstance(spec, str):
        s = spec.strip()
        if s.startswith("{"):
            try:
                spec = json.loads(s)
            except json.JSONDecodeError as exc:
                raise DatumError(f"datum JSON does not parse: {exc}", location="datum") from exc
        else:
            d = _preset(s)
            d.validate()
            return d
    if not isinstance(spec, dict):
        raise DatumError("datum must be a preset name or a JSON object", location="datum")
    cartan = spec.get("cartan")
    roots = spec.get("simple_roots")
    coroots = spec.get("simple_coroots")
    try:
        if roots is None and coroots is None:
            if cartan is None:
                raise DatumError("explicit datum needs 'cartan' or roots and coroots", location="datum")
            d = _adjoint_datum(cartan, spec.get("name"))
        else:
            if roots is None or coroots is None:
                raise DatumError("give both simple_roots and simple_coroots", location="datum")
            roots = tuple(tuple(int(x) for x in r) for r in roots)
            coroots = tuple(tuple(int(x) for x in r) for r in coroots)
            if cartan is None:
                cartan = [[_dot(coroots[j], roots[i]) for j in range(len(roots))]
                          for i in range(len(roots))]
            d = RootDatum(tuple(tuple(int(x) for x in r) for r in cartan), roots, coroots,
                          preset_name=spec.get("name"))
    except (TypeError, IndexError) as exc:
        raise DatumError(f"malformed datum: {exc}", location="datum") from exc
    # finite-type check must precede root enumeration
    d.validate()
    return d
