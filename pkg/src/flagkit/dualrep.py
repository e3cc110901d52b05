"""
Characters of the dual group, written on X_* = X^*(dual torus).

The dual root system has roots = coroots of the datum and coroots = roots of
the datum, so a coweight is dominant for the dual group exactly when it pairs
non-negatively with every simple root. Multiplicities come from Freudenthal's
formula using the W-invariant form sum_{a>0} <x,a><y,a>.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DatumError, DimensionMismatch, NotDominant, ValidationError
from .rootdata import RootDatum

__all__ = [
    "WeightMultiset", "irreducible_character", "weyl_dimension", "tensor_character",
    "weyl_orbit", "minuscule_decomposition_typeA", "fundamental_coweights",
]

Coweight = tuple[int, ...]


class WeightMultiset(Mapping):
    """Finitely supported map coweight -> non-negative multiplicity."""

    def __init__(self, mult: Mapping[Sequence[int], int] | Iterable = (), datum: RootDatum | None = None):
        items = mult.items() if isinstance(mult, Mapping) else mult
        self._m: dict[Coweight, int] = {}
        for nu, m in items:
            nu = tuple(int(x) for x in nu)
            if m < 0:
                raise ValidationError(f"negative multiplicity at {nu}", location="character")
            if m:
                self._m[nu] = self._m.get(nu, 0) + int(m)
        self.datum = datum

    def __getitem__(self, nu) -> int:
        return self._m[tuple(nu)]

    def get(self, nu, default=0):
        return self._m.get(tuple(nu), default)

    def __iter__(self) -> Iterator[Coweight]:
        return iter(sorted(self._m))

    def __len__(self) -> int:
        return len(self._m)

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightMultiset):
            return self._m == other._m
        if isinstance(other, Mapping):
            return self._m == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def __repr__(self) -> str:
        return "WeightMultiset({" + ", ".join(f"{k}: {v}" for k, v in self.items()) + "})"

    @property
    def mass(self) -> int:
        return sum(self._m.values())

    def is_weyl_stable(self, datum: RootDatum | None = None) -> bool:
        d = datum or self.datum
        return all(self._m.get(d.reflect(i, nu), 0) == m
                   for nu, m in self._m.items() for i in range(d.rank))

    def to_json(self) -> list[dict]:
        return [{"coweight": list(nu), "mult": m} for nu, m in self.items()]

    @classmethod
    def from_json(cls, obj, datum: RootDatum | None = None) -> WeightMultiset:
        if isinstance(obj, Mapping):
            obj = [{"coweight": k, "mult": v} for k, v in obj.items()]
        return cls([(e["coweight"], e["mult"]) for e in obj], datum=datum)


def _check_dominant(datum: RootDatum, mu: Sequence[int]) -> Coweight:
    if len(mu) != datum.lattice_rank:
        raise DimensionMismatch(f"coweight must have length {datum.lattice_rank}", location="mu")
    if not datum.is_dominant(mu):
        raise NotDominant(f"{tuple(mu)} is not dominant", location="mu")
    return tuple(int(x) for x in mu)


def weyl_orbit(datum: RootDatum, nu: Sequence[int]) -> set[Coweight]:
    nu = tuple(nu)
    seen = {nu}
    queue = deque([nu])
    while queue:
        x = queue.popleft()
        for i in range(datum.rank):
            y = datum.reflect(i, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _dominant(datum: RootDatum, nu: Coweight) -> Coweight:
    while True:
        i = next((i for i, a in enumerate(datum.simple_roots)
                  if sum(x * y for x, y in zip(nu, a)) < 0), None)
        if i is None:
            return nu
        nu = datum.reflect(i, nu)


def _is_weight(datum: RootDatum, lam: Coweight, mu: Coweight) -> bool:
    diff = tuple(a - b for a, b in zip(lam, _dominant(datum, mu)))
    return datum.in_positive_coroot_cone(diff)


def irreducible_character(datum: RootDatum, mu: Sequence[int]) -> WeightMultiset:
    """Character of the irreducible dual-group representation of highest weight mu."""
    lam = _check_dominant(datum, mu)
    B = datum.invariant_form
    coroots = datum.positive_coroots
    two_rho = datum.two_rho_vee  # 2 * rho of the dual group

    # dominant weights of V_lam, reached from lam by lowering along simple coroots
    weights = {lam}
    queue = deque([lam])
    while queue:
        x = queue.popleft()
        for c in datum.simple_coroots:
            y = tuple(a - b for a, b in zip(x, c))
            if y not in weights and _is_weight(datum, lam, y):
                weights.add(y)
                queue.append(y)
    dominant = [x for x in weights if datum.is_dominant(x)]

    def height(x):
        return sum(datum.coroot_coefficients(tuple(a - b for a, b in zip(lam, x))))

    dominant.sort(key=height)
    mult: dict[Coweight, int] = {lam: 1}
    top = B(lam, lam) + B(lam, two_rho)
    for x in dominant[1:]:
        denom = top - B(x, x) - B(x, two_rho)
        total = 0
        for beta in coroots:
            k = 1
            while True:
                y = tuple(a + k * b for a, b in zip(x, beta))
                if y not in weights:
                    break
                total += mult[_dominant(datum, y)] * B(y, beta)
                k += 1
        m = Fraction(2 * total, denom)
        if m.denominator != 1:
            raise DatumError(f"non-integral multiplicity {m} at {x}", location="freudenthal")
        mult[x] = int(m)
    return WeightMultiset({x: mult[_dominant(datum, x)] for x in weights}, datum=datum)


def weyl_dimension(datum: RootDatum, mu: Sequence[int]) -> int:
    lam = _check_dominant(datum, mu)
    two_rho = datum.two_rho_vee
    num = Fraction(1)
    for a in datum.positive_roots:
        p = sum(x * y for x, y in zip(two_rho, a))
        num *= Fraction(2 * sum(x * y for x, y in zip(lam, a)) + p, p)
    if num.denominator != 1:
        raise DatumError(f"Weyl dimension {num} is not an integer", location="weyl_dimension")
    return int(num)


def tensor_character(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    if a.datum is not None and b.datum is not None and a.datum != b.datum:
        raise DimensionMismatch("characters over different root data", location="character")
    out: dict[Coweight, int] = {}
    for x, m in a.items():
        for y, n in b.items():
            if len(x) != len(y):
                raise DimensionMismatch("weights of different lengths", location="character")
            z = tuple(p + q for p, q in zip(x, y))
            out[z] = out.get(z, 0) + m * n
    return WeightMultiset(out, datum=a.datum or b.datum)


def fundamental_coweights(datum: RootDatum) -> list[Coweight]:
    """Lattice vectors omega_i with <omega_i, alpha_j> = delta_ij (type A only)."""
    if not datum.is_type_a():
        raise DatumError("minuscule decomposition needs a type A datum", location="datum")
    n, r = datum.lattice_rank, datum.rank
    if datum.preset_name and datum.preset_name.startswith("GL"):
        return [tuple(int(k < i + 1) for k in range(n)) for i in range(r)]
    if n != r:
        raise DatumError("fundamental coweights are only located for GLn or semisimple data",
                         location="datum")
    # solve <omega, alpha_j> = delta_ij with the roots as rows
    from .rootdata import _inverse
    inv = _inverse(datum.simple_roots)
    out = []
    for i in range(r):
        col = [inv[k][i] for k in range(n)]
        if any(c.denominator != 1 for c in col):
            raise DatumError("fundamental coweights are not in the lattice (not minuscule-generated)",
                             location="datum")
        out.append(tuple(int(c) for c in col))
    return out


def minuscule_decomposition_typeA(datum: RootDatum, mu: Sequence[int]) -> tuple[list[int], int | Coweight]:
    """Column decomposition: returns (fundamental indices, central twist).

    With a_i = <mu, alpha_i>, the partition with consecutive differences a_i
    has a_i columns of height i, so mu = sum_i a_i omega_i + central part.
    For GLn the central part is twist * (1, ..., 1) and an int is returned.
    """
    lam = _check_dominant(datum, mu)
    omegas = fundamental_coweights(datum)
    a = [sum(x * y for x, y in zip(lam, al)) for al in datum.simple_roots]
    # greedy: tallest column first
    parts: list[int] = []
    for i in reversed(range(datum.rank)):
        parts.extend([i + 1] * a[i])
    rest = list(lam)
    for i in parts:
        rest = [x - y for x, y in zip(rest, omegas[i - 1])]
    if datum.preset_name and datum.preset_name.startswith("GL"):
        if len(set(rest)) != 1:
            raise DatumError("remainder is not central", location="mu")
        twist: int | Coweight = rest[0]
    else:
        twist = tuple(rest)
        if any(twist):
            raise DatumError("remainder is not zero", location="mu")
        twist = 0
    return sorted(parts), twist


def named_highest_weights(datum: RootDatum) -> dict[str, Coweight]:
    """Highest weights of the 'std' (first minuscule fundamental, when it lies
    in the lattice) and 'adjoint' dual-group representations."""
    from itertools import product
    out: dict[str, Coweight] = {}
    want = tuple(int(i == 0) for i in range(datum.rank))
    cands = [v for v in product((-1, 0, 1), repeat=datum.lattice_rank)
             if tuple(sum(x * y for x, y in zip(v, a)) for a in datum.simple_roots) == want]
    if cands:
        out["std"] = max(cands, key=lambda v: (sum(v), v))
    # highest root of the dual system: dominant coroot of maximal height
    best = max(
        (c for c in datum.positive_coroots if datum.is_dominant(c)),
        key=lambda c: (sum(datum.coroot_coefficients(c)), c),
    )
    out["adjoint"] = best
    return out
