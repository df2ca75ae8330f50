"""Exact sparse polynomials in two indexed variable families ``x_i`` and ``t_i``.

Coefficients are Python ints, so nothing overflows.  Terms are kept in a dict
keyed by :class:`Monomial`; zero coefficients are never stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import permutations
from typing import Iterable, Mapping, Sequence, Union

Var = tuple[str, int]  # ("x", i) or ("t", i), i >= 1


def _strip(exps: Iterable[int]) -> tuple[int, ...]:
    exps = tuple(exps)
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


def _add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(u + v for u, v in zip(a, b)) + a[len(b):]


@dataclass(frozen=True)
class Monomial:
    """Dense exponent vectors ``x`` and ``t`` (index 0 holds the exponent of ``x_1``)."""

    x: tuple[int, ...] = ()
    t: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "x", _strip(self.x))
        object.__setattr__(self, "t", _strip(self.t))

    @classmethod
    def from_maps(cls, x: Mapping[int, int] | None = None, t: Mapping[int, int] | None = None) -> Monomial:
        return cls(_dense(x or {}), _dense(t or {}))

    @classmethod
    def var(cls, v: Var) -> Monomial:
        kind, i = v
        if i < 1:
            raise ValueError(f"variable index must be >= 1, got {v}")
        exps = (0,) * (i - 1) + (1,)
        return cls(x=exps) if kind == "x" else cls(t=exps)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(_add(self.x, other.x), _add(self.t, other.t))

    @property
    def degree(self) -> int:
        return sum(self.x) + sum(self.t)

    def x_map(self) -> dict[int, int]:
        return {i: e for i, e in enumerate(self.x, 1) if e}

    def t_map(self) -> dict[int, int]:
        return {i: e for i, e in enumerate(self.t, 1) if e}

    def sort_key(self):
        # graded lex: total degree, then x exponents, then t exponents
        return (self.degree, self.x, self.t)

    def __str__(self) -> str:
        factors = [_power(f"x{i}", e) for i, e in self.x_map().items()]
        factors += [_power(f"t{i}", e) for i, e in self.t_map().items()]
        return "*".join(factors) if factors else "1"


def _dense(m: Mapping[int, int]) -> tuple[int, ...]:
    if not m:
        return ()
    if min(m) < 1:
        raise ValueError("variable indices start at 1")
    out = [0] * max(m)
    for i, e in m.items():
        out[i - 1] = e
    return tuple(out)


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


ONE_MONOMIAL = Monomial()


class Polynomial:
    """Immutable integer polynomial; ``terms`` maps Monomial -> nonzero int."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> Polynomial:
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> Polynomial:
        return cls({m: c})

    @classmethod
    def var(cls, v: Var) -> Polynomial:
        return cls({Monomial.var(v): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Union[Polynomial, int]) -> Polynomial:
        other = _coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union[Polynomial, int]) -> Polynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: Union[Polynomial, int]) -> Polynomial:
        return _coerce(other) - self

    def __mul__(self, other: Union[Polynomial, int]) -> Polynomial:
        other = _coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        return reduce(lambda a, b: a * b, [self] * k, Polynomial.const(1))

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key(), reverse=True)

    def variables(self) -> set[Var]:
        out: set[Var] = set()
        for m in self._terms:
            out.update(("x", i) for i in m.x_map())
            out.update(("t", i) for i in m.t_map())
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if m == ONE_MONOMIAL:
                body = str(abs(c))
            elif abs(c) == 1:
                body = str(m)
            else:
                body = f"{abs(c)}*{m}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": c,
                    "x": {str(i): e for i, e in m.x_map().items()},
                    "t": {str(i): e for i, e in m.t_map().items()},
                }
                for m, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> Polynomial:
        terms: dict[Monomial, int] = {}
        for term in data["terms"]:
            m = Monomial.from_maps(
                {int(i): e for i, e in term.get("x", {}).items()},
                {int(i): e for i, e in term.get("t", {}).items()},
            )
            terms[m] = terms.get(m, 0) + term["coeff"]
        return cls(terms)


def _coerce(value: Union[Polynomial, int]) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.const(value)
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


ZERO = Polynomial()
ONE = Polynomial.const(1)


def x_vars(p: int) -> list[Var]:
    return [("x", i) for i in range(1, p + 1)]


def t_vars(lo: int, hi: int) -> list[Var]:
    """``t_lo, ..., t_hi``; empty when ``lo > hi``."""
    return [("t", i) for i in range(max(lo, 1), hi + 1)]


def elementary_symmetric(k: int, variables: Sequence[Var]) -> Polynomial:
    """``e_k`` of a finite list of distinct variables; 0 for ``k < 0`` or ``k > len``."""
    if len(set(variables)) != len(variables):
        raise ValueError(f"duplicate variables in {variables}")
    if k < 0 or k > len(variables):
        return ZERO
    # e[j] after processing a prefix of the variables
    e = [ONE] + [ZERO] * k
    for v in variables:
        z = Polynomial.var(v)
        for j in range(k, 0, -1):
            e[j] = e[j] + z * e[j - 1]
    return e[k]


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant by Laplace expansion along rows, memoised on column sets."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    memo: dict[tuple[int, int], Polynomial] = {}

    def minor(row: int, cols: int) -> Polynomial:
        # cols: bitmask of columns still available; rows row..n-1 remain
        if row == n:
            return ONE
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = ZERO
        sign = 1
        for c in range(n):
            if not cols >> c & 1:
                continue
            entry = matrix[row][c]
            if entry:
                sub = minor(row + 1, cols & ~(1 << c))
                if sub:
                    total = total + entry * sub if sign > 0 else total - entry * sub
            sign = -sign
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparable values."""
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                sign = -sign
    return sign


def leibniz_determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Signed sum over all permutations; independent route used to cross-check :func:`determinant`."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    total = ZERO
    for perm in permutations(range(n)):
        term = ONE
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if not term:
                break
        if term:
            total = total + term if permutation_sign(perm) > 0 else total - term
    return total


def specialize_t(poly: Polynomial, value: int) -> Polynomial:
    """Set every ``t_i`` to ``value`` (0 or 1) and collect terms."""
    if value not in (0, 1):
        raise ValueError("t can only be specialised to 0 or 1")
    out: dict[Monomial, int] = {}
    for m, c in poly.items():
        if m.t and value == 0:
            continue
        key = Monomial(m.x)
        out[key] = out.get(key, 0) + c
    return Polynomial(out)


def binomial(m: int, k: int) -> int:
    """``C(m, k)`` with the convention ``C(m, k) = [k == 0]`` for ``m < 0``."""
    if m < 0:
        return 1 if k == 0 else 0
    return math.comb(m, k) if 0 <= k <= m else 0


def binomial_jt_entry(i: int, j: int, lam, mu, p: int) -> Polynomial:
    """Entry ``(i, j)`` of the t = 1 Jacobi-Trudi matrix: ``sum_k C(L-1, k) e_{L-i+j-k}(x_1..x_p)``.

    Here ``L = lam'_i - mu'_j``.
    """
    lc, mc = lam.conjugate(), mu.conjugate()
    gap = lc.part(i) - mc.part(j)
    deg = gap - i + j
    xs = x_vars(p)
    total = ZERO
    for k in range(0, max(deg, 0) + 1):
        c = binomial(gap - 1, k)
        if c:
            total = total + c * elementary_symmetric(deg - k, xs)
    return total
