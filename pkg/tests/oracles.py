"""
Slow reference implementations used to check the library.

None of these call the routine they are checking: Bruhat order comes from
subwords of a reduced word, Hecke products are folded from the right, KL
polynomials for S_4 use permutations and the classical recursion, and weight
multiplicities come from Kostant's partition function.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product


# -- Bruhat order by subwords -------------------------------------------------------------

def subword_closure(G, y):
    """All products omega(y) * (subword of a reduced word of y)."""
    word = G.reduced_word(y)
    out = set()
    for mask in product((0, 1), repeat=len(word.letters)):
        x = word.omega_element
        for keep, i in zip(mask, word.letters):
            if keep:
                x = G.multiply(x, G.simple[i])
        out.add(x)
    return out


def brute_admissible(G, mu):
    d = G.datum
    orbit = {tuple(mu)}
    frontier = [tuple(mu)]
    while frontier:
        nu = frontier.pop()
        for i in range(d.rank):
            p = sum(a * b for a, b in zip(nu, d.simple_roots[i]))
            img = tuple(a - p * c for a, c in zip(nu, d.simple_coroots[i]))
            if img not in orbit:
                orbit.add(img)
                frontier.append(img)
    out = set()
    for nu in orbit:
        out |= subword_closure(G, G.translation(nu))
    return out


# -- Hecke multiplication folded from the right ------------------------------------------

def _padd(a, b):
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def _pmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: c for k, c in out.items() if c}


def hecke_product_oracle(G, x, y):
    """T_x T_y as {element: {exponent: coeff}}, using T_w T_s for right multiplication."""
    word = G.reduced_word(y)
    terms = {G.multiply(x, word.omega_element): {0: 1}}
    for i in word.letters:
        s = G.simple[i]
        nxt = {}
        for w, c in terms.items():
            ws = G.multiply(w, s)
            nxt[ws] = _padd(nxt.get(ws, {}), c)
            if G.length(ws) < G.length(w):
                nxt[w] = _padd(nxt.get(w, {}), _pmul(c, {1: 1, -1: -1}))
        terms = {w: c for w, c in nxt.items() if c}
    return terms


def as_pairs(h):
    return {w: dict(c.to_pairs()) for w, c in h.terms.items()}


# -- Kazhdan-Lusztig polynomials for S_n ------------------------------------------------

def _perm_length(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def _perm_leq(x, y):
    """Tableau criterion: sorted prefixes of x are dominated by those of y."""
    for k in range(1, len(x)):
        a, b = sorted(x[:k]), sorted(y[:k])
        if any(p > q for p, q in zip(a, b)):
            return False
    return True


def _left_swap(i, p):
    """s_i * p: swap the values i and i+1 (1-based)."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def perm_from_word(word, n):
    p = tuple(range(1, n + 1))
    for i in reversed(word):
        p = _left_swap(i, p)
    return p


class PermKL:
    """Classical KL recursion over all of S_n, polynomials as coefficient lists in q."""

    def __init__(self, n):
        self.n = n
        self.elements = sorted(permutations(range(1, n + 1)), key=_perm_length)
        self.P = {}
        for w in self.elements:
            for x in self.elements:
                self.P[x, w] = self._compute(x, w)

    def length(self, p):
        return _perm_length(p)

    def _mu(self, z, w):
        d = self.length(w) - self.length(z)
        if d % 2 == 0 or not _perm_leq(z, w):
            return 0
        p = self.P[z, w]
        k = (d - 1) // 2
        return p[k] if k < len(p) else 0

    def _compute(self, x, w):
        if not _perm_leq(x, w):
            return []
        if x == w:
            return [1]
        s = next(i for i in range(1, self.n) if self.length(_left_swap(i, w)) < self.length(w))
        v = _left_swap(s, w)
        sx = _left_swap(s, x)
        c = 1 if self.length(sx) < self.length(x) else 0
        acc = {}

        def add(poly, shift, sign=1):
            for k, a in enumerate(poly):
                acc[k + shift] = acc.get(k + shift, 0) + sign * a

        add(self.P.get((sx, v), []), 1 - c)
        add(self.P.get((x, v), []), c)
        for z in self.elements:
            if self.length(z) >= self.length(v) or self.length(_left_swap(s, z)) > self.length(z):
                continue
            m = self._mu(z, v)
            if m and _perm_leq(x, z):
                gap = self.length(w) - self.length(z)
                add([m * a for a in self.P[x, z]], gap // 2, -1)
        top = max((k for k, a in acc.items() if a), default=-1)
        return [acc.get(k, 0) for k in range(top + 1)]


# -- weight multiplicities via Kostant's partition function ------------------------------

def _solve(columns, target):
    """Solve sum_j c_j columns[j] = target over Q; None if inconsistent."""
    n, r = len(target), len(columns)
    rows = [[Fraction(columns[j][i]) for j in range(r)] + [Fraction(target[i])] for i in range(n)]
    piv = []
    row = 0
    for col in range(r):
        p = next((k for k in range(row, n) if rows[k][col] != 0), None)
        if p is None:
            continue
        rows[row], rows[p] = rows[p], rows[row]
        inv = 1 / rows[row][col]
        rows[row] = [a * inv for a in rows[row]]
        for k in range(n):
            if k != row and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[row])]
        piv.append(col)
        row += 1
    if any(rows[k][r] != 0 for k in range(row, n)):
        return None
    out = [Fraction(0)] * r
    for k, col in enumerate(piv):
        out[col] = rows[k][r]
    return out


class Kostant:
    def __init__(self, datum):
        self.d = datum
        r = datum.rank
        A = datum.cartan
        # positive coroots in simple-coroot coordinates, from the orbit of the simple ones
        seen = set()
        frontier = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        while frontier:
            c = frontier.pop()
            if c in seen:
                continue
            seen.add(c)
            for i in range(r):
                p = sum(c[j] * A[i][j] for j in range(r))
                frontier.append(tuple(c[k] - (p if k == i else 0) for k in range(r)))
        self.positive = sorted(c for c in seen if all(a >= 0 for a in c))
        # 2 rho of the dual group: sum of positive coroots, a regular dominant vector
        self.two_rho = tuple(
            sum(c[j] * datum.simple_coroots[j][m] for c in self.positive for j in range(r))
            for m in range(datum.lattice_rank))
        self.weyl = self._weyl_words()

    def _reflect(self, i, nu):
        d = self.d
        p = sum(a * b for a, b in zip(nu, d.simple_roots[i]))
        return tuple(a - p * c for a, c in zip(nu, d.simple_coroots[i]))

    def _weyl_words(self):
        # the orbit of a regular vector is in bijection with W_fin
        words = {self.two_rho: ()}
        frontier = [self.two_rho]
        while frontier:
            v = frontier.pop()
            for i in range(self.d.rank):
                u = self._reflect(i, v)
                if u not in words:
                    words[u] = (i,) + words[v]
                    frontier.append(u)
        return list(words.values())

    def apply(self, word, nu):
        for i in reversed(word):
            nu = self._reflect(i, nu)
        return nu

    @lru_cache(maxsize=None)
    def partitions(self, gamma):
        if all(a == 0 for a in gamma):
            return 1
        if any(a < 0 for a in gamma):
            return 0
        return self._count(gamma, len(self.positive))

    @lru_cache(maxsize=None)
    def _count(self, gamma, k):
        if all(a == 0 for a in gamma):
            return 1
        if k == 0 or any(a < 0 for a in gamma):
            return 0
        beta = self.positive[k - 1]
        total = 0
        g = gamma
        while all(a >= 0 for a in g):
            total += self._count(g, k - 1)
            g = tuple(a - b for a, b in zip(g, beta))
        return total

    def multiplicity(self, lam, mu):
        d = self.d
        two_rho = self.two_rho
        total = 0
        for word in self.weyl:
            sign = (-1) ** len(word)
            # w(lam + rho) - (mu + rho), doubled to stay integral
            wl = self.apply(word, tuple(2 * a + b for a, b in zip(lam, two_rho)))
            diff = [a - 2 * m - b for a, m, b in zip(wl, mu, two_rho)]
            c = _solve(d.simple_coroots, diff)
            if c is None or any((x / 2).denominator != 1 for x in c):
                continue
            total += sign * self.partitions(tuple(int(x / 2) for x in c))
        return total
