"""
Invariant suite run by ``flagkit selftest``.

Each check returns (ok, detail). The default scope covers A1, GL2 and A2;
extra data can be added. Lengths are capped per rank (8 / 5 / 3) and by
--max-length; the scope actually used is printed with every line.
"""

from __future__ import annotations

import json
import random
import sys
import time
from itertools import product

from . import dualrep, ktheory
from .affweyl import IwahoriWeylGroup
from .antispherical import AntisphericalModule
from .errors import FlagkitError
from .hecke import HeckeAlgebra
from .kl import KLTable
from .laurent import LaurentPoly

DEFAULT_DATA = ("A1", "GL2", "A2")
RANK_CAPS = {1: 8, 2: 5}
SEED = 20240601


class Suite:
    def __init__(self, name: str, max_length: int, seed: int = SEED):
        self.name = name
        self.G = IwahoriWeylGroup(name)
        self.H = HeckeAlgebra(self.G)
        self.datum = self.G.datum
        self.L = min(max_length, RANK_CAPS.get(self.datum.rank, 3))
        self.kl = KLTable(self.H, max_length=self.L)
        self.rng = random.Random(seed)
        self.elements = self.G.elements_up_to_length(self.L)

    def dominant_box(self, bound: int = 2):
        d = self.datum
        out = []
        for nu in product(range(-bound, bound + 1), repeat=d.lattice_rank):
            if d.is_dominant(nu):
                out.append(nu)
        return out

    def random_coweight(self, bound: int = 2):
        return tuple(self.rng.randint(-bound, bound) for _ in range(self.datum.lattice_rank))

    def short_elements(self, length: int):
        return [x for x in self.elements if self.G.length(x) <= length]

    # -- checks ---------------------------------------------------------------------

    def length_law(self):
        d = self.datum
        for nu in self.dominant_box(3):
            if self.G.length(self.G.translation(nu)) != d.two_rho_pairing(nu):
                return False, f"nu={nu}"
        return True, ""

    def hecke_relations(self):
        H, G = self.H, self.G
        one = H.unit()
        for i in G.labels:
            T = H.t_basis(G.simple[i])
            if H.multiply(T, T) != one + T.scale(LaurentPoly({1: 1, -1: -1})):
                return False, f"quadratic s{i}"
        # braid relations: compare the two alternating words of length m_ij
        for i in G.labels:
            for j in G.labels:
                if i >= j:
                    continue
                si, sj = G.simple[i], G.simple[j]
                prod_el, m = G.multiply(si, sj), 1
                x = prod_el
                while x != G.identity and m <= 6:
                    x = G.multiply(x, prod_el)
                    m += 1
                if m > 6:
                    continue
                a, b = H.unit(), H.unit()
                for k in range(m):
                    a = H.multiply(a, H.t_basis(si if k % 2 == 0 else sj))
                    b = H.multiply(b, H.t_basis(sj if k % 2 == 0 else si))
                if a != b:
                    return False, f"braid s{i},s{j}"
        pool = self.short_elements(min(self.L, 3))
        for _ in range(20):
            x, y, z = (H.t_basis(self.rng.choice(pool)) for _ in range(3))
            if H.multiply(H.multiply(x, y), z) != H.multiply(x, H.multiply(y, z)):
                return False, "associativity"
        return True, ""

    def theta_well_defined(self):
        H, d = self.H, self.datum
        rv = d.two_rho_vee
        for _ in range(5):
            nu = self.random_coweight()
            nu1, nu2 = H.default_decomposition(nu)
            base = H.bernstein_theta(nu)
            shifted = (tuple(a + b for a, b in zip(nu1, rv)), tuple(a + b for a, b in zip(nu2, rv)))
            if H.bernstein_theta(nu, shifted) != base:
                return False, f"decomposition of {nu}"
            mu = self.random_coweight(1)
            lhs = H.multiply(base, H.bernstein_theta(mu))
            if lhs != H.bernstein_theta(tuple(a + b for a, b in zip(nu, mu))):
                return False, f"theta_{nu} theta_{mu}"
        return True, ""

    def centrality(self):
        names = dualrep.named_highest_weights(self.datum)
        for label, mu in sorted(names.items()):
            ch = dualrep.irreducible_character(self.datum, mu)
            if not self.H.is_central(self.H.central_element(ch)):
                return False, label
        return True, ",".join(sorted(names))

    def kl_sanity(self):
        G = self.G
        for w in self.elements:
            c = self.kl.kl_basis_element(w)
            if c.bar() != c:
                return False, f"bar {G.to_json(w)}"
        for x, y, p in self.kl.entries():
            gap = G.length(y) - G.length(x)
            if x == y:
                ok = p == LaurentPoly({0: 1}, "q")
            else:
                ok = p.degree() <= (gap - 1) // 2 and all(c >= 0 for _, c in p.to_pairs())
            if not ok:
                return False, f"P({G.to_json(x)},{G.to_json(y)})"
        return True, f"{len(self.kl.entries())} entries"

    def kernel_dichotomy(self):
        M = AntisphericalModule(self.H)
        for w in self.elements:
            if M.kernel_check(self.kl, w) == self.G.is_minimal_in_left_Wfin_coset(w):
                return False, json.dumps(self.G.to_json(w))
        return True, f"{len(self.elements)} elements"

    def k0_consistency(self):
        G, H = self.G, self.H
        for w in self.short_elements(6):
            spec = ktheory.from_specialization(G, H.specialize(H.t_basis(w), 1))
            if spec != ktheory.class_standard(G, w):
                return False, json.dumps(G.to_json(w))
        for ch in self._characters():
            if ktheory.from_specialization(G, H.specialize(H.central_element(ch), 1)) != \
                    ktheory.class_central(G, ch):
                return False, "central"
        return True, ""

    def averaging(self):
        G = self.G
        for w in self.short_elements(6):
            vanish = ktheory.av_iw(G, ktheory.class_ic(self.kl, w)).is_zero()
            if vanish == G.is_minimal_in_left_Wfin_coset(w):
                return False, json.dumps(G.to_json(w))
        return True, ""

    def _characters(self):
        return [dualrep.irreducible_character(self.datum, mu)
                for _, mu in sorted(dualrep.named_highest_weights(self.datum).items())]

    def multiplicity_formula(self):
        G = self.G
        for ch in self._characters():
            got = ktheory.av_iw(G, ktheory.class_central(G, ch))
            if got != dict(ch.items()):
                return False, repr(got)
        return True, ""

    def admissible_support(self):
        G = self.G
        for _, mu in sorted(dualrep.named_highest_weights(self.datum).items()):
            ch = dualrep.irreducible_character(self.datum, mu)
            adm = G.admissible_set(mu, max_length=2 * self.datum.two_rho_pairing(mu) + 2)
            if not set(ktheory.class_central(G, ch).terms) <= adm:
                return False, f"mu={mu}"
        return True, ""

    def characters(self):
        d = self.datum
        for mu in self.dominant_box(2):
            ch = dualrep.irreducible_character(d, mu)
            if ch.mass != dualrep.weyl_dimension(d, mu) or not ch.is_weyl_stable(d):
                return False, f"mu={mu}"
        return True, ""

    CHECKS: tuple[str, ...] = (
        "length_law", "hecke_relations", "theta_well_defined", "centrality", "kl_sanity",
        "kernel_dichotomy", "k0_consistency", "averaging", "multiplicity_formula",
        "admissible_support", "characters",
    )


def run_selftest(extra_data=(), max_length: int = 8, stream=None, fmt: str = "table") -> dict:
    stream = stream or sys.stdout
    data = list(DEFAULT_DATA) + [d for d in extra_data if d not in DEFAULT_DATA]
    results = []
    for name in data:
        suite = Suite(name, max_length)
        for check in Suite.CHECKS:
            t0 = time.perf_counter()
            try:
                ok, detail = getattr(suite, check)()
            except FlagkitError as exc:
                ok, detail = False, f"{exc.code}: {exc}"
            results.append({"datum": name, "invariant": check, "passed": ok, "detail": detail,
                            "max_length": suite.L, "seconds": round(time.perf_counter() - t0, 3)})
    passed = all(r["passed"] for r in results)
    if fmt == "json":
        stream.write(json.dumps({"passed": passed, "results": results}, sort_keys=True) + "\n")
    else:
        for r in results:
            mark = "PASS" if r["passed"] else "FAIL"
            extra = f" ({r['detail']})" if r["detail"] else ""
            stream.write(f"{mark} {r['datum']:<4} {r['invariant']:<22} L<={r['max_length']}{extra}\n")
        stream.write(f"{sum(r['passed'] for r in results)}/{len(results)} invariants passed\n")
    return {"passed": passed, "results": results}


def main(argv=None) -> int:
    from .cli import main as cli_main
    return cli_main(["selftest"] + list(argv or sys.argv[1:]))


if __name__ == "__main__":
    sys.exit(main())
