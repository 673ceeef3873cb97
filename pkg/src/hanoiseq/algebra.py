"""Truncated formal power series over a prime field.

A series is a coefficient tuple c[0], ..., c[order-1] with values
reduced modulo a prime q; every operation works modulo X^order, with
multiplication a schoolbook convolution cut off at the order.  A
relation is an identity sum_i A_i(X) F^i = 0 whose A_i are polynomials
given as coefficient lists (constant term first).

``find_algebraic_relation`` searches for such relations by linear
algebra: the unknowns are the coefficients of the A_i, each residue
coefficient gives one linear equation over F_q, and any non-trivial
null-space vector is a relation valid to the truncation order.  Finding
none rules out relations at this truncation only, so callers should
treat the answer as evidence rather than a transcendence proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .words import Word


class InsufficientTruncationError(ValueError):
    """Too few series coefficients for the requested relation search."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Series:
    """Power series modulo X^order over F_q, q prime."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        coeffs = tuple(int(c) % self.modulus for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls, modulus: int, order: int) -> "Series":
        return cls(modulus, (1,) + (0,) * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.modulus, self.coeffs[:order])

    def _check(self, other: "Series") -> None:
        if self.modulus != other.modulus:
            raise ValueError("series use different moduli")

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        order = min(self.order, other.order)
        q = self.modulus
        return Series(q, tuple((a + b) % q for a, b in
                               zip(self.coeffs[:order], other.coeffs[:order])))

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        order = min(self.order, other.order)
        return Series(self.modulus,
                      _convolve(self.coeffs[:order], other.coeffs[:order],
                                order, self.modulus))

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "coeffs": list(self.coeffs)}


def _convolve(a: Sequence[int], b: Sequence[int], order: int, q: int) -> tuple[int, ...]:
    if order == 0 or not len(a) or not len(b):
        return (0,) * order
    out = np.convolve(np.asarray(a, dtype=np.int64),
                      np.asarray(b, dtype=np.int64))[:order] % q
    result = tuple(int(v) for v in out)
    return result + (0,) * (order - len(result))


def series_from_sequence(seq, q: int, order: int,
                         value_map: Optional[Mapping[str, int]] = None) -> Series:
    """First `order` terms of a symbol sequence as a series over F_q.

    Symbols map through value_map when given, otherwise through int().
    """
    if not is_prime(q):
        raise ValueError(f"modulus {q} is not prime")
    tokens = seq.tokens() if isinstance(seq, Word) else tuple(seq)
    if len(tokens) < order:
        raise ValueError(f"sequence has {len(tokens)} terms but {order} are needed")
    values = []
    for tok in tokens[:order]:
        if value_map is not None:
            if tok not in value_map:
                raise ValueError(f"no field value for symbol {tok!r}")
            values.append(value_map[tok])
        elif isinstance(tok, int):
            values.append(tok)
        else:
            try:
                values.append(int(tok))
            except (TypeError, ValueError):
                raise ValueError(f"no field value for symbol {tok!r}") from None
    return Series(q, tuple(values))


def _poly_trim(p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(p)
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod(a: tuple[int, ...], b: tuple[int, ...], q: int):
    a = list(_poly_trim(a))
    b = _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, q)
    quot = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        factor = a[-1] * inv % q
        shift = len(a) - len(b)
        quot[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % q
        while a and a[-1] == 0:
            a.pop()
    return _poly_trim(quot), _poly_trim(a)


def poly_gcd(a: Sequence[int], b: Sequence[int], q: int) -> tuple[int, ...]:
    """Monic greatest common divisor over F_q."""
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        _, r = _poly_divmod(a, b, q)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, q)
        a = tuple(c * inv % q for c in a)
    return a


@dataclass(frozen=True)
class Relation:
    """Identity sum_i polys[i](X) * F^i = 0 over F_q.

    Zero polynomials at the top are trimmed so the leading one is
    non-zero; a relation that is identically zero is rejected.
    """

    modulus: int
    polys: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        polys = tuple(tuple(int(c) % self.modulus for c in p) for p in self.polys)
        while polys and not any(polys[-1]):
            polys = polys[:-1]
        if not polys:
            raise ValueError("relation must not be identically zero")
        object.__setattr__(self, "polys", polys)

    @property
    def degree(self) -> int:
        return len(self.polys) - 1

    def normalized(self) -> "Relation":
        """Divide out the common polynomial factor and make the leading
        polynomial monic; null spaces determine relations only up to
        such scaling."""
        q = self.modulus
        common: tuple[int, ...] = ()
        for p in self.polys:
            common = poly_gcd(common, p, q)
        polys = []
        for p in self.polys:
            trimmed = _poly_trim(p)
            if len(common) > 1 and trimmed:
                trimmed, rem = _poly_divmod(trimmed, common, q)
                if rem:
                    raise AssertionError("content division left a remainder")
            polys.append(trimmed)
        lead = polys[-1][-1]
        inv = pow(lead, -1, q)
        polys = [tuple(c * inv % q for c in p) for p in polys]
        return Relation(q, tuple(polys))

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "polys": [list(p) for p in self.polys]}


def period_doubling_relation() -> Relation:
    """The quadratic identity annihilating the period-doubling series
    over F_2: X(1+X) F^2 + (1+X) F + 1 = 0."""
    return Relation(2, ((1,), (1, 1), (0, 1, 1)))


def evaluate_relation(rel: Relation, f: Series) -> Series:
    """Residue series sum_i polys[i](X) f^i, truncated at f's order."""
    if rel.modulus != f.modulus:
        raise ValueError("relation and series use different moduli")
    q = f.modulus
    order = f.order
    total = np.zeros(order, dtype=np.int64)
    power = np.zeros(order, dtype=np.int64)
    if order:
        power[0] = 1  # f^0
    fc = np.asarray(f.coeffs, dtype=np.int64)
    for i, poly in enumerate(rel.polys):
        if i:
            power = np.convolve(power, fc)[:order] % q
        if any(poly):
            term = np.convolve(np.asarray(poly, dtype=np.int64), power)[:order]
            total = (total + term) % q
    return Series(q, tuple(int(v) for v in total))


def nullspace_mod(matrix, q: int) -> list[tuple[int, ...]]:
    """Basis of the right null space of an integer matrix modulo prime q."""
    a = np.array(matrix, dtype=np.int64) % q
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, q) % q
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % q
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [0] * cols
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = int(-a[row, free]) % q
        basis.append(tuple(v))
    return basis


def find_algebraic_relation(f: Series, max_degree: int, coeff_degree: int,
                            order: Optional[int] = None) -> Optional[Relation]:
    """Relation with deg_F <= max_degree and polynomial coefficients of
    degree <= coeff_degree annihilating f up to the order, or None.

    Needs comfortably more equations than unknowns (an extra margin of
    32).  Deterministic: the lexicographically smallest null-space basis
    vector is returned.
    """
    q = f.modulus
    order = f.order if order is None else order
    if order > f.order:
        raise ValueError("order exceeds the series truncation")
    unknowns = (max_degree + 1) * (coeff_degree + 1)
    if order <= unknowns + 32:
        raise InsufficientTruncationError(
            f"{unknowns} unknowns need order > {unknowns + 32}, got {order}")
    fc = np.asarray(f.coeffs[:order], dtype=np.int64)
    powers = [np.zeros(order, dtype=np.int64)]
    powers[0][0] = 1
    for _ in range(max_degree):
        powers.append(np.convolve(powers[-1], fc)[:order] % q)
    columns = []
    for i in range(max_degree + 1):
        for j in range(coeff_degree + 1):
            col = np.zeros(order, dtype=np.int64)
            col[j:] = powers[i][:order - j]
            columns.append(col)
    basis = nullspace_mod(np.stack(columns, axis=1), q)
    if not basis:
        return None
    vec = min(basis)
    width = coeff_degree + 1
    polys = tuple(vec[i * width:(i + 1) * width] for i in range(max_degree + 1))
    return Relation(q, polys)
