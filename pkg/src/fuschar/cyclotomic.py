"""Exact arithmetic in rings of cyclotomic integers Z[zeta_e].

Values are stored as integer coefficient vectors over the power basis
1, zeta, ..., zeta^(e-1), reduced modulo the e-th cyclotomic polynomial so
that all coefficients at indices >= phi(e) vanish.  Two values are equal
iff their canonical vectors agree after embedding into a common order.
No floating point is used anywhere.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return tuple(out)


def _poly_divmod_monic(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Remainder of num by a monic integer polynomial den (in place on a copy)."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            num[i] = 0
            for j in range(dd):
                num[i - dd + j] -= c * den[j]
    del num[dd:]
    return num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the e-th cyclotomic polynomial."""
    if e < 1:
        raise ValueError(f"order must be positive, got {e}")
    if e == 1:
        return (-1, 1)
    num = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    den: tuple[int, ...] = (1,)
    for d in range(1, e):
        if e % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    # exact division (x^e - 1) / prod_{d|e, d<e} Phi_d
    quot = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(den) - 1]
        quot[i] = c
        if c:
            for j, dj in enumerate(den):
                rem[i + j] -= c * dj
    assert not any(rem), "cyclotomic polynomial division must be exact"
    return tuple(quot)


@lru_cache(maxsize=None)
def _phi_degree(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def _units(e: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, e + 1) if gcd(k, e) == 1)


class Cyclotomic:
    """An element of Z[zeta_e] in canonical power-basis form."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs) -> None:
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        vec = [0] * order
        for i, c in enumerate(coeffs):
            if c:
                vec[i % order] += c
        deg = _phi_degree(order)
        if any(vec[deg:]):
            vec = _poly_divmod_monic(vec, cyclotomic_polynomial(order))
            vec += [0] * (order - len(vec))
        self.order = order
        self.coeffs = tuple(vec)
        self._hash = None

    @classmethod
    def _make(cls, order: int, canonical_vec: tuple) -> "Cyclotomic":
        """Wrap an already-canonical coefficient tuple (no reduction pass)."""
        self = object.__new__(cls)
        self.order = order
        self.coeffs = canonical_vec
        self._hash = None
        return self

    # -- constructors ---------------------------------------------------

    @classmethod
    def integer(cls, n: int) -> "Cyclotomic":
        return cls(1, (n,))

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls(1, (0,))

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls(1, (1,))

    @classmethod
    def root_of_unity(cls, e: int, k: int = 1) -> "Cyclotomic":
        """zeta_e ** k."""
        vec = [0] * e
        vec[k % e] = 1
        return cls(e, vec)

    # -- basic predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"not a rational integer: {self!r}")
        return self.coeffs[0]

    # -- ring structure ---------------------------------------------------

    def embedded(self, order: int) -> "Cyclotomic":
        """The same value in Z[zeta_order]; requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into {order}")
        step = order // self.order
        vec = [0] * order
        for i, c in enumerate(self.coeffs):
            if c:
                vec[i * step] = c
        return Cyclotomic(order, vec)

    def _pair(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if isinstance(other, int):
            other = Cyclotomic.integer(other)
        elif not isinstance(other, Cyclotomic):
            return NotImplemented, NotImplemented
        e = lcm(self.order, other.order)
        return self.embedded(e), other.embedded(e)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        # sums of canonical vectors stay canonical
        return Cyclotomic._make(a.order, tuple([x + y for x, y in zip(a.coeffs, b.coeffs)]))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.order, tuple([-c for c in self.coeffs]))

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyclotomic._make(a.order, tuple([x - y for x, y in zip(a.coeffs, b.coeffs)]))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Cyclotomic._make(self.order, (0,) * self.order)
            return Cyclotomic._make(self.order, tuple([other * c for c in self.coeffs]))
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        e = a.order
        terms_a = [(i, c) for i, c in enumerate(a.coeffs) if c]
        terms_b = [(j, c) for j, c in enumerate(b.coeffs) if c]
        if not terms_a or not terms_b:
            return Cyclotomic._make(e, (0,) * e)
        if len(terms_a) == 1 and len(terms_b) == 1:
            i, ai = terms_a[0]
            j, bj = terms_b[0]
            c = ai * bj
            return Cyclotomic._make(e, tuple([c * m for m in _monomial(e, i + j)]))
        out = [0] * e
        for i, ai in terms_a:
            for j, bj in terms_b:
                out[(i + j) % e] += ai * bj
        return Cyclotomic(e, out)

    __rmul__ = __mul__

    def galois(self, k: int) -> "Cyclotomic":
        """Apply zeta |-> zeta^k; requires gcd(k, order) = 1."""
        e = self.order
        if gcd(k, e) != 1:
            raise ValueError(f"galois exponent {k} not coprime to order {e}")
        vec = [0] * e
        for i, c in enumerate(self.coeffs):
            if c:
                vec[(i * k) % e] += c
        return Cyclotomic(e, vec)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta |-> zeta^-1."""
        return self.galois(self.order - 1) if self.order > 1 else self

    # -- canonical identity across orders ---------------------------------

    def minimized(self) -> "Cyclotomic":
        """Equal value at the smallest order e' | order containing it."""
        val = self
        changed = True
        while changed:
            changed = False
            e = val.order
            for q in _prime_divisors(e):
                d = e // q
                low = val._descend(d)
                if low is not None:
                    val = low
                    changed = True
                    break
        return val

    def _descend(self, d: int) -> "Cyclotomic | None":
        """Express the value in Z[zeta_d] (d | order) if possible, else None."""
        e = self.order
        if e == d:
            return self
        # fixed by Gal(Q(zeta_e)/Q(zeta_d)) = {sigma_k : k = 1 mod d}?
        for k in _units(e):
            if k != 1 and k % d == 1 and self.galois(k) != self:
                return None
        sol = _descent_solver(e, d)(self.coeffs)
        if sol is None:
            return None
        return Cyclotomic(d, sol)

    def key(self) -> tuple:
        """Hashable canonical key, independent of the ambient order."""
        if self.is_rational_integer():
            return (1, (self.coeffs[0],))
        m = self.minimized()
        return (m.order, m.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_rational_integer() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self) -> str:
        if self.is_rational_integer():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = f"z{self.order}" + (f"^{i}" if i > 1 else "")
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return "(" + "+".join(terms).replace("+-", "-") + ")"

    def to_json(self) -> dict:
        m = self.minimized()
        deg = _phi_degree(m.order)
        return {"order": m.order, "coeffs": [str(c) for c in m.coeffs[:max(deg, 1)]]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        return cls(int(data["order"]), [int(c) for c in data["coeffs"]])


@lru_cache(maxsize=None)
def _monomial(e: int, k: int) -> tuple[int, ...]:
    """Canonical coefficient vector of zeta_e^k."""
    vec = [0] * e
    vec[k % e] = 1
    deg = _phi_degree(e)
    if k % e >= deg:
        vec = _poly_divmod_monic(vec, cyclotomic_polynomial(e))
        vec += [0] * (e - len(vec))
    return tuple(vec)


@lru_cache(maxsize=None)
def _prime_divisors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def _descent_solver(e: int, d: int):
    """A function mapping canonical order-e coefficients to order-d ones.

    Solves c * B = v where row i of B is the canonical order-e vector of
    zeta_d^i.  Returns None when no integer solution exists.
    """
    from .intlinalg import solve_left  # deferred: intlinalg imports nothing back

    basis = [Cyclotomic.root_of_unity(d, i).embedded(e).coeffs for i in range(d)]

    def solve(vec: tuple[int, ...]):
        return solve_left([list(r) for r in basis], list(vec))

    return solve


def exact_div(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    """a / b when the quotient lies in the ring; raises otherwise.

    Uses a * conj-product(b) / Norm(b) with the norm taken over the Galois
    orbit, so only a rational integer division remains.
    """
    if isinstance(a, int):
        a = Cyclotomic.integer(a)
    if isinstance(b, int):
        b = Cyclotomic.integer(b)
    if b.is_zero():
        raise ZeroDivisionError("cyclotomic division by zero")
    if b.is_rational_integer():
        n = b.coeffs[0]
        out = []
        for c in a.coeffs:
            q, r = divmod(c, n)
            if r:
                raise ArithmeticError(f"inexact cyclotomic division {a!r} / {n}")
            out.append(q)
        return Cyclotomic._make(a.order, tuple(out))
    e = lcm(a.order, b.order)
    a = a.embedded(e)
    b = b.embedded(e)
    cofactor = Cyclotomic.one()
    for k in _units(e):
        if k != 1:
            cofactor = cofactor * b.galois(k)
    norm = (b * cofactor).rational_value()
    num = a * cofactor
    out = []
    for c in num.coeffs:
        q, r = divmod(c, norm)
        if r:
            raise ArithmeticError(f"inexact cyclotomic division {a!r} / {b!r}")
        out.append(q)
    return Cyclotomic(e, out)


def cyclo_sum(values) -> Cyclotomic:
    total = Cyclotomic.zero()
    for v in values:
        total = total + v
    return total
