"""
Kazhdan-Lusztig basis and polynomials for the extended affine Weyl group.

C_w is the bar-invariant element with C_w = T_w mod sum_x v^-1 Z[v^-1] T_x,

    C_w = sum_{x <= w} v^{l(x) - l(w)} P_{x,w}(v^2) T_x,

so that C_s = T_s + v^-1. For w = tau * u with tau in Omega and u in W_aff we
use C_w = T_tau C_u, and for u with left descent s, u' = s u:

    C_u = C_s C_u' - sum_{z < u', s z < z} mu(z, u') C_z.

The memo holds C_u for u in W_aff only; it can be persisted to disk.
"""

from __future__ import annotations

import os
import struct
import threading
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterable

from .affweyl import IWElement
from .errors import BoundExceeded, DatumError
from .hecke import HeckeAlgebra, HeckeElement
from .laurent import LaurentPoly, V_INV

__all__ = ["KLTable", "CACHE_VERSION", "DEFAULT_KL_MAX_LENGTH"]

CACHE_VERSION = 1
CACHE_MAGIC = b"FKLC"
DEFAULT_KL_MAX_LENGTH = 12


class KLTable:
    def __init__(self, algebra: HeckeAlgebra, max_length: int = DEFAULT_KL_MAX_LENGTH,
                 cache_dir: str | os.PathLike | None = None):
        self.algebra = algebra
        self.group = algebra.group
        self.max_length = max_length
        self._basis: dict[IWElement, HeckeElement] = {}
        self._poly: dict[tuple[IWElement, IWElement], LaurentPoly] = {}
        self._lock = threading.Lock()
        self.stats = {"computed": 0, "loaded": 0, "hits": 0}
        self.cache_path = None
        if cache_dir is not None:
            self.cache_path = Path(cache_dir) / f"kl-{self.group.datum.fingerprint[:16]}.bin"
            if self.cache_path.exists():
                self.load(self.cache_path)

    # -- canonical basis ----------------------------------------------------------------

    def _check_bound(self, w: IWElement) -> None:
        l = self.group.length(w)
        if l > self.max_length:
            raise BoundExceeded(f"length {l} exceeds KL bound {self.max_length}", location="kl")

    def kl_basis_element(self, w: IWElement) -> HeckeElement:
        self._check_bound(w)
        G = self.group
        tau = G.omega_part(w)
        u = G.multiply(G.inverse(tau), w)
        cu = self._affine_basis(u)
        if tau == G.identity:
            return cu
        return self.algebra.left_multiply_t(tau, cu)

    def _affine_basis(self, u: IWElement) -> HeckeElement:
        got = self._basis.get(u)
        if got is not None:
            self.stats["hits"] += 1
            return got
        G, A = self.group, self.algebra
        # iterative descent chain avoids deep recursion
        chain = []
        x = u
        while x not in self._basis and G.length(x) > 0:
            chain.append(x)
            x = G.left_mul_simple(G.first_left_descent(x), x)
        if x not in self._basis:
            self._store(x, A.t_basis(x))
        for y in reversed(chain):
            s = G.first_left_descent(y)
            prev = self._basis[G.left_mul_simple(s, y)]
            c = A.left_multiply_simple(s, prev) + prev.scale(V_INV)
            yp = G.left_mul_simple(s, y)
            for z, coeff in prev.terms.items():
                if z == yp:
                    continue
                mu = coeff.coefficient(-1)
                if mu and G.length(G.left_mul_simple(s, z)) < G.length(z):
                    c = c - self._affine_basis(z).scale(mu)
            self._store(y, c)
        return self._basis[u]

    def _store(self, u: IWElement, c: HeckeElement) -> None:
        G = self.group
        lu = G.length(u)
        polys = {}
        for x, coeff in c.terms.items():
            polys[(x, u)] = coeff.shift(lu - G.length(x)).halve_exponents(var="q")
        with self._lock:
            self._basis.setdefault(u, c)
            for k, p in polys.items():
                self._poly.setdefault(k, p)
            self.stats["computed"] += 1

    # -- polynomials -----------------------------------------------------------------------

    def kl_polynomial(self, x: IWElement, y: IWElement) -> LaurentPoly:
        G = self.group
        self._check_bound(y)
        if G.omega_residue(x) != G.omega_residue(y):
            return LaurentPoly(var="q")
        tau = G.omega_part(y)
        ti = G.inverse(tau)
        xa, ya = G.multiply(ti, x), G.multiply(ti, y)
        self._affine_basis(ya)
        return self._poly.get((xa, ya), LaurentPoly(var="q"))

    def mu_coefficient(self, x: IWElement, y: IWElement) -> int:
        G = self.group
        d = G.length(y) - G.length(x)
        if d <= 0 or d % 2 == 0:
            return 0
        return self.kl_polynomial(x, y).coefficient((d - 1) // 2)

    def entries(self) -> list[tuple[IWElement, IWElement, LaurentPoly]]:
        """Every memoized (x, y, P_{x,y}) with y in W_aff."""
        with self._lock:
            return [(x, y, p) for (x, y), p in self._poly.items()]

    def warm(self, elements: Iterable[IWElement], workers: int = 1) -> None:
        """Fill the memo for many elements; with workers > 1 the descent chains
        run on a thread pool sharing this table. Results do not depend on the
        scheduling because memo values are canonical."""
        elements = sorted(set(elements), key=lambda z: (self.group.length(z), self.group.sort_key(z)))
        if workers <= 1:
            for w in elements:
                self.kl_basis_element(w)
            return
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(self.kl_basis_element, elements))

    # -- disk cache ------------------------------------------------------------------------

    def save(self, path: str | os.PathLike | None = None) -> Path:
        path = path or self.cache_path
        if path is None:
            raise DatumError("no cache path configured", location="cache")
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        G = self.group
        chunks = [CACHE_MAGIC, bytes([CACHE_VERSION]), bytes.fromhex(G.datum.fingerprint)]
        for (x, y), p in self._sorted_entries():
            payload = _encode_element(G, y) + _encode_element(G, x) + _encode_poly(p)
            chunks.append(struct.pack("<I", len(payload)) + payload)
        tmp = path.with_suffix(".tmp")
        tmp.write_bytes(b"".join(chunks))
        os.replace(tmp, path)
        return path

    def _sorted_entries(self):
        G = self.group
        with self._lock:
            items = list(self._poly.items())
        return sorted(items, key=lambda kv: (G.sort_key(kv[0][1]), G.sort_key(kv[0][0])))

    def load(self, path: str | os.PathLike) -> int:
        G, A = self.group, self.algebra
        data = Path(path).read_bytes()
        if data[:4] != CACHE_MAGIC or len(data) < 37:
            raise DatumError(f"{path} is not a KL cache file", location="cache")
        if data[4] != CACHE_VERSION:
            raise DatumError(f"unsupported KL cache version {data[4]}", location="cache")
        if data[5:37] != bytes.fromhex(G.datum.fingerprint):
            raise DatumError("KL cache belongs to a different root datum", location="cache")
        pos = 37
        by_y: dict[IWElement, dict[IWElement, LaurentPoly]] = {}
        while pos < len(data):
            (size,) = struct.unpack_from("<I", data, pos)
            pos += 4
            payload = data[pos:pos + size]
            pos += size
            y, off = _decode_element(G, payload, 0)
            x, off = _decode_element(G, payload, off)
            p, _ = _decode_poly(payload, off)
            by_y.setdefault(y, {})[x] = p
        for y, polys in by_y.items():
            ly = G.length(y)
            terms = {x: p.substitute_power(2, var="v").shift(G.length(x) - ly) for x, p in polys.items()}
            with self._lock:
                self._basis.setdefault(y, HeckeElement(A, terms))
                for x, p in polys.items():
                    self._poly.setdefault((x, y), p)
        self.stats["loaded"] += len(by_y)
        return len(by_y)


def _encode_element(G, x: IWElement) -> bytes:
    word = G.W[x.finite].word
    return (struct.pack("<H", len(x.translation)) + struct.pack(f"<{len(x.translation)}q", *x.translation)
            + struct.pack("<H", len(word)) + bytes(word))


def _decode_element(G, buf: bytes, off: int):
    (n,) = struct.unpack_from("<H", buf, off)
    off += 2
    t = struct.unpack_from(f"<{n}q", buf, off)
    off += 8 * n
    (k,) = struct.unpack_from("<H", buf, off)
    off += 2
    word = tuple(buf[off:off + k])
    off += k
    return G.element(t, word), off


def _encode_poly(p: LaurentPoly) -> bytes:
    coeffs = p.coefficient_list()
    out = [struct.pack("<H", len(coeffs))]
    for c in coeffs:
        raw = c.to_bytes((c.bit_length() + 8) // 8, "little", signed=True)
        out.append(struct.pack("<H", len(raw)) + raw)
    return b"".join(out)


def _decode_poly(buf: bytes, off: int):
    (n,) = struct.unpack_from("<H", buf, off)
    off += 2
    coeffs = {}
    for e in range(n):
        (k,) = struct.unpack_from("<H", buf, off)
        off += 2
        coeffs[e] = int.from_bytes(buf[off:off + k], "little", signed=True)
        off += k
    return LaurentPoly(coeffs, var="q"), off
