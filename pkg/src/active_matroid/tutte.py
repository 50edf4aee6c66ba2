"""Tutte polynomials and beta invariants, four independent ways."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from .errors import SizeBoundExceeded
from .filtration import enumerate_filtrations, is_connected_filtration, max_enumeration_size
from .fundamental import fundamental_graph
from .matroid import Matroid, cyclic_flats, minor, subsets


class TuttePolynomial(Mapping):
    """Sparse polynomial in x, y: maps (i, j) to the coefficient of x^i y^j."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping | Iterable = ()):
        c = Counter()
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        for (i, j), v in items:
            c[(int(i), int(j))] += int(v)
        self._c = {k: v for k, v in c.items() if v}

    def __getitem__(self, key):
        return self._c.get(tuple(key), 0)

    def __iter__(self):
        return iter(sorted(self._c, key=_order))

    def __len__(self):
        return len(self._c)

    def __contains__(self, key):
        return tuple(key) in self._c

    def __eq__(self, other):
        if isinstance(other, TuttePolynomial):
            return self._c == other._c
        if isinstance(other, Mapping):
            return self._c == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "TuttePolynomial") -> "TuttePolynomial":
        c = Counter(self._c)
        c.update(other._c)
        return TuttePolynomial(c)

    def __mul__(self, other: "TuttePolynomial") -> "TuttePolynomial":
        c = Counter()
        for (i1, j1), a in self._c.items():
            for (i2, j2), b in other._c.items():
                c[(i1 + i2, j1 + j2)] += a * b
        return TuttePolynomial(c)

    def __call__(self, x, y):
        return sum(v * x ** i * y ** j for (i, j), v in self._c.items())

    def transpose(self) -> "TuttePolynomial":
        return TuttePolynomial({(j, i): v for (i, j), v in self._c.items()})

    def at_y_zero(self) -> "TuttePolynomial":
        """t(x, 0): keep the monomials without y."""
        return TuttePolynomial({k: v for k, v in self._c.items() if k[1] == 0})

    def at_x_zero(self) -> "TuttePolynomial":
        """t(0, y): keep the monomials without x."""
        return TuttePolynomial({k: v for k, v in self._c.items() if k[0] == 0})

    def to_json(self) -> list:
        return [{"i": i, "j": j, "coeff": self._c[(i, j)]} for i, j in self]

    @classmethod
    def from_json(cls, data) -> "TuttePolynomial":
        return cls({(d["i"], d["j"]): d["coeff"] for d in data})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(_monomial(v, i, j) for (i, j), v in
                          ((k, self._c[k]) for k in self))

    def __repr__(self) -> str:
        return f"TuttePolynomial({self})"


def _order(k):
    # powers of x first (descending), then for each x-power ascending y
    return (-k[0], k[1])


def _power(var, e):
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def _monomial(v, i, j):
    body = _power("x", i) + _power("y", j)
    if not body:
        return str(v)
    return body if v == 1 else f"{v}{body}"


def tutte_by_activities(M: Matroid) -> TuttePolynomial:
    """Count bases by (internal activity, external activity)."""
    c = Counter()
    for B in M.bases:
        F = fundamental_graph(M, B)
        c[(len(F.internally_active), len(F.externally_active))] += 1
    return TuttePolynomial(c)


def tutte_rank_nullity(M: Matroid, max_n: int | None = None) -> TuttePolynomial:
    """Corank-nullity expansion over all subsets, expanded in exact integers."""
    n = len(M.ground)
    bound = max_enumeration_size(max_n)
    if n > bound:
        raise SizeBoundExceeded(f"|E|={n} exceeds the subset-sum bound {bound}")
    r = M.rank
    # tally (corank, nullity) first, then expand (x-1)^a (y-1)^b
    tally = Counter()
    for m in range(1 << n):
        ra = M.rank_mask(m)
        tally[(r - ra, m.bit_count() - ra)] += 1
    out = Counter()
    for (a, b), mult in tally.items():
        for (i, ci) in _shifted_power(a):
            for (j, cj) in _shifted_power(b):
                out[(i, j)] += mult * ci * cj
    return TuttePolynomial(out)


def _shifted_power(a: int):
    """Coefficients of (z - 1)^a as (exponent, coefficient) pairs."""
    from math import comb

    return [(k, comb(a, k) * (-1) ** (a - k)) for k in range(a + 1)]


def beta(M: Matroid) -> int:
    """Number of uniactive internal bases, b_{1,0}."""
    return tutte_by_activities(M)[(1, 0)]


def beta_star(M: Matroid) -> int:
    """Number of uniactive external bases, b_{0,1}."""
    return tutte_by_activities(M)[(0, 1)]


class _MinorBetas:
    """Memo of beta / beta* for the minors M(G)/F of one matroid."""

    def __init__(self, M: Matroid):
        self.M = M
        self.cache = {}

    def get(self, G, F):
        key = (G, F)
        if key not in self.cache:
            t = tutte_by_activities(minor(self.M, G, F))
            self.cache[key] = (t[(1, 0)], t[(0, 1)])
        return self.cache[key]

    def product(self, f) -> int:
        out = 1
        for k in range(1, f.iota + 1):
            out *= self.get(f.F(k), f.F(k - 1))[0]
            if not out:
                return 0
        for k in range(1, f.epsilon + 1):
            out *= self.get(f.Fp(k - 1), f.Fp(k))[1]
            if not out:
                return 0
        return out


def tutte_by_filtrations(M: Matroid, connected_only: bool = False,
                         max_n: int | None = None) -> TuttePolynomial:
    """Sum of beta products over filtrations, weighted by x^iota y^eps."""
    betas = _MinorBetas(M)
    c = Counter()
    for f in enumerate_filtrations(M.ground, max_n):
        if connected_only and not is_connected_filtration(M, f):
            continue
        w = betas.product(f)
        if w:
            c[(f.iota, f.epsilon)] += w
    return TuttePolynomial(c)


def tutte_convolution(M: Matroid, cyclic_flats_only: bool = True,
                      max_n: int | None = None) -> TuttePolynomial:
    """Sum of t(M/F; x, 0) * t(M(F); 0, y) over cyclic flats (or all subsets)."""
    n = len(M.ground)
    bound = max_enumeration_size(max_n)
    if n > bound:
        raise SizeBoundExceeded(f"|E|={n} exceeds the enumeration bound {bound}")
    sets = cyclic_flats(M) if cyclic_flats_only else subsets(M.ground)
    total = TuttePolynomial()
    for Fc in sorted(sets, key=sorted):
        low = tutte_by_activities(minor(M, M.ground, Fc)).at_y_zero()
        if not low:
            continue
        high = tutte_by_activities(minor(M, Fc, ())).at_x_zero()
        total = total + low * high
    return total


def tutte(M: Matroid, method: str = "activities") -> TuttePolynomial:
    methods = {
        "activities": tutte_by_activities,
        "ranknullity": tutte_rank_nullity,
        "filtrations": tutte_by_filtrations,
        "convolution": tutte_convolution,
    }
    if method not in methods:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(methods)}")
    return methods[method](M)
