"""Exact linear algebra over the rationals and prime fields.

Only what the rest of the package needs: rank and greedy selection of
independent rows.  Matrices are dense and immutable; elimination runs on a
sparse row representation because boundary matrices are mostly zeros.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import ParameterRange


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``modulus is None``) or GF(p)."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.modulus is not None and not is_prime(self.modulus):
            raise ParameterRange(f"field modulus {self.modulus} is not prime")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls(int(p))

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``q`` / ``Q`` or ``gf:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls.rationals()
        if t.startswith("gf:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ParameterRange(f"bad field modulus in {text!r}") from None
            return cls.gf(p)
        raise ParameterRange(f"unknown field {text!r}; use 'q' or 'gf:<p>'")

    @property
    def kind(self) -> str:
        return "Rationals" if self.modulus is None else "PrimeField"

    @property
    def characteristic(self) -> int:
        return 0 if self.modulus is None else self.modulus

    def element(self, x) -> int | Fraction:
        if self.modulus is None:
            x = Fraction(x)
            return int(x) if x.denominator == 1 else x
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.modulus) % self.modulus
        return int(x) % self.modulus

    def is_element(self, x) -> bool:
        if self.modulus is None:
            return isinstance(x, (int, Fraction))
        return isinstance(x, int) and 0 <= x < self.modulus

    def token(self) -> str:
        return "q" if self.modulus is None else f"gf:{self.modulus}"

    def __str__(self) -> str:
        return "QQ" if self.modulus is None else f"GF({self.modulus})"


QQ = FieldSpec.rationals()


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple
    field: FieldSpec = QQ

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        for x in self.entries:
            if not self.field.is_element(x):
                raise ValueError(f"{x!r} is not an element of {self.field}")

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence], field: FieldSpec = QQ, cols: int | None = None
    ) -> ExactMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(field.element(x) for x in r)
        return cls(len(rows), cols, tuple(flat), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = QQ) -> ExactMatrix:
        return cls(rows, cols, (0,) * (rows * cols), field)

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> ExactMatrix:
        e = self.entries
        flat = tuple(e[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return ExactMatrix(self.cols, self.rows, flat, self.field)

    def select_rows(self, idx: Iterable[int]) -> ExactMatrix:
        idx = list(idx)
        flat = tuple(x for i in idx for x in self.row(i))
        return ExactMatrix(len(idx), self.cols, flat, self.field)

    def over(self, field: FieldSpec) -> ExactMatrix:
        """Reinterpret the entries in another field (e.g. reduce mod p)."""
        return ExactMatrix(self.rows, self.cols,
                           tuple(field.element(x) for x in self.entries), field)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        p = self.field.modulus
        out = []
        ocols = [other.entries[j::other.cols] for j in range(other.cols)] if other.rows else []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                s = sum(a * b for a, b in zip(r, ocols[j]))
                out.append(s % p if p is not None else self.field.element(s))
        return ExactMatrix(self.rows, other.cols, tuple(out), self.field)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def sparse_rows(self) -> list[dict[int, int | Fraction]]:
        out = []
        for i in range(self.rows):
            out.append({j: x for j, x in enumerate(self.row(i)) if x})
        return out


# -- elimination kernels ------------------------------------------------------
#
# Each kernel consumes sparse rows in order and returns the indices of the rows
# that are independent of all earlier rows (greedy, ascending row index).


def _select_gf2(rows: Iterable[dict[int, int]]) -> list[int]:
    basis: dict[int, int] = {}
    keep = []
    for idx, row in enumerate(rows):
        r = 0
        for j, v in row.items():
            if v & 1:
                r |= 1 << j
        while r:
            low = r & -r
            b = basis.get(low)
            if b is None:
                basis[low] = r
                keep.append(idx)
                break
            r ^= b
    return keep


def _select_mod(rows: Iterable[dict[int, int]], p: int) -> list[int]:
    basis: dict[int, dict[int, int]] = {}
    keep = []
    for idx, row in enumerate(rows):
        r = {j: v % p for j, v in row.items() if v % p}
        while r:
            c = min(r)
            b = basis.get(c)
            if b is None:
                inv = pow(r[c], -1, p)
                basis[c] = {j: v * inv % p for j, v in r.items()}
                keep.append(idx)
                break
            x = r[c]
            for j, v in b.items():
                nv = (r.get(j, 0) - x * v) % p
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
    return keep


def _primitive(r: dict[int, int]) -> dict[int, int]:
    g = reduce(math.gcd, r.values())
    if r[min(r)] < 0:
        g = -g
    if g != 1:
        r = {j: v // g for j, v in r.items()}
    return r


def _integral_row(row: dict[int, int | Fraction]) -> dict[int, int]:
    dens = [v.denominator for v in row.values() if isinstance(v, Fraction)]
    if not dens:
        return {j: int(v) for j, v in row.items() if v}
    l = reduce(lambda a, b: a * b // math.gcd(a, b), dens, 1)
    return {j: int(v * l) for j, v in row.items() if v}


def _select_q(rows: Iterable[dict[int, int | Fraction]]) -> list[int]:
    # Fraction-free: r <- a*r - x*b, then strip the content so entries stay small.
    basis: dict[int, dict[int, int]] = {}
    keep = []
    for idx, row in enumerate(rows):
        r = _integral_row(row)
        while r:
            c = min(r)
            b = basis.get(c)
            if b is None:
                basis[c] = _primitive(r)
                keep.append(idx)
                break
            a, x = b[c], r[c]
            new = {j: a * v for j, v in r.items()}
            for j, v in b.items():
                nv = new.get(j, 0) - x * v
                if nv:
                    new[j] = nv
                else:
                    new.pop(j, None)
            r = _primitive(new) if new else new
    return keep


def select_rows_sparse(rows: Iterable[dict], modulus: int | None) -> list[int]:
    if modulus is None:
        return _select_q(rows)
    if modulus == 2:
        return _select_gf2(rows)
    return _select_mod(rows, modulus)


def rank_sparse(rows: Iterable[dict], modulus: int | None) -> int:
    return len(select_rows_sparse(rows, modulus))


def rank(m: ExactMatrix, field: FieldSpec | None = None) -> int:
    """Rank of ``m`` over ``field`` (defaults to the matrix's own field)."""
    if field is not None and field != m.field:
        m = m.over(field)
    if m.rows == 0 or m.cols == 0:
        return 0
    return rank_sparse(m.sparse_rows(), m.field.modulus)


def select_independent_rows(m: ExactMatrix, field: FieldSpec | None = None) -> tuple[int, ...]:
    """Indices of a maximal independent set of rows, chosen greedily top-down."""
    if field is not None and field != m.field:
        m = m.over(field)
    if m.cols == 0:
        return ()
    return tuple(select_rows_sparse(m.sparse_rows(), m.field.modulus))


# -- arithmetic for generic coefficient draws ---------------------------------


class GaloisField:
    """GF(p**m) with log/antilog tables; elements are ints in base-p encoding.

    Only used to draw generic coefficients in a prescribed characteristic when
    the prime field itself is too small to be generic.
    """

    def __init__(self, p: int, m: int = 1) -> None:
        if not is_prime(p) or m < 1:
            raise ParameterRange(f"GF({p}^{m}) is not a field")
        self.p, self.m, self.order = p, m, p ** m
        if m > 1:
            self._exp, self._log = _log_tables(p, m)

    def __repr__(self) -> str:
        return f"GaloisField({self.p}, {self.m})"

    @classmethod
    def at_least(cls, p: int, size: int) -> GaloisField:
        m = 1
        while p ** m < size:
            m += 1
        return cls(p, m)

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out, scale, p = 0, 1, self.p
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        out, scale, p = 0, 1, self.p
        while a:
            out += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.m == 1:
            return pow(a, -1, self.p)
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.order)


def _log_tables(p: int, m: int) -> tuple[list[int], list[int]]:
    q = p ** m
    top = p ** (m - 1)
    # Search monic degree-m polynomials x^m - (tail); x must have order q-1.
    for tail in range(1, q):
        if tail % p == 0:
            continue  # constant term zero: x is not a unit
        exp = [0] * (q - 1)
        x, ok = 1, True
        for k in range(q - 1):
            if k and x == 1:
                ok = False
                break
            exp[k] = x
            # multiply by the generator: shift digits, fold the overflow digit
            hi = x // top
            x = (x % top) * p
            if hi:
                x = _digit_add(x, _digit_scale(tail, hi, p, m), p)
        if ok and x == 1:
            log = [0] * q
            for k, v in enumerate(exp):
                log[v] = k
            return exp, log
    raise RuntimeError(f"no primitive polynomial found for GF({p}^{m})")


def _digit_add(a: int, b: int, p: int) -> int:
    if p == 2:
        return a ^ b
    out, scale = 0, 1
    while a or b:
        out += ((a % p + b % p) % p) * scale
        a //= p
        b //= p
        scale *= p
    return out


def _digit_scale(a: int, s: int, p: int, m: int) -> int:
    out, scale = 0, 1
    for _ in range(m):
        out += (a % p) * s % p * scale
        a //= p
        scale *= p
    return out


def select_rows_generic(rows: Sequence[Sequence[int]], gf: GaloisField) -> list[int]:
    """Greedy independent-row selection over an arbitrary :class:`GaloisField`."""
    basis: dict[int, list[int]] = {}
    keep = []
    for idx, row in enumerate(rows):
        r = list(row)
        while True:
            nz = [j for j, v in enumerate(r) if v]
            if not nz:
                break
            c = nz[0]
            b = basis.get(c)
            if b is None:
                inv = gf.inv(r[c])
                basis[c] = [gf.mul(v, inv) for v in r]
                keep.append(idx)
                break
            x = r[c]
            r = [gf.sub(v, gf.mul(x, w)) for v, w in zip(r, b)]
    return keep
