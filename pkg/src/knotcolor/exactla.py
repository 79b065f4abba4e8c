"""Exact integer and modular linear algebra.

Everything here works on Python ints, so there is no magnitude limit and
no floating point.  Matrices are small (a few dozen rows at most), which
keeps plain nested loops competitive with anything fancier.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotPrime, NotSquare, SolutionSetTooLarge

DEFAULT_SOLUTION_CAP = 10**6


def solution_cap() -> int:
    """Enumeration cap, overridable through ``KNOTCOLOR_MAX_SOLUTIONS``."""
    raw = os.environ.get("KNOTCOLOR_MAX_SOLUTIONS")
    if raw is None:
        return DEFAULT_SOLUTION_CAP
    return int(raw)


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        return cls(k, k, tuple(int(i == j) for i in range(k) for j in range(k)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], cols=self.rows
        )

    def delete(self, i: int, j: int) -> "IntMatrix":
        """Drop row ``i`` and column ``j``."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return IntMatrix.from_rows(
            [[x for c, x in enumerate(self.row(r)) if c != j] for r in range(self.rows) if r != i],
            cols=self.cols - 1,
        )

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self[r, c] for c in col_order] for r in row_order], cols=len(col_order)
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols_of_other = [[other[k, j] for k in range(other.rows)] for j in range(other.cols)]
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), col)) for col in cols_of_other]
             for i in range(self.rows)],
            cols=other.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def apply(self, vec: Sequence[int], modulus: int | None = None) -> tuple[int, ...]:
        """Matrix-vector product, optionally reduced mod ``modulus``."""
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.cols} columns")
        out = tuple(sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows))
        if modulus is not None:
            out = tuple(x % modulus for x in out)
        return out

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(self.row(i)) for i in range(self.rows))

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(self[i, j] for i in range(self.rows)) for j in range(self.cols))

    def __str__(self) -> str:
        if not self.entries:
            return f"[] ({self.rows}x{self.cols})"
        width = max(len(str(x)) for x in self.entries)
        return "\n".join(" ".join(str(x).rjust(width) for x in self.row(i)) for i in range(self.rows))


@dataclass(frozen=True)
class ModVector:
    """Vector of residues mod ``modulus``; entries are always reduced."""

    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(self, "entries", tuple(int(x) % self.modulus for x in self.entries))

    @classmethod
    def zeros(cls, modulus: int, length: int) -> "ModVector":
        return cls(modulus, (0,) * length)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def _check(self, other: "ModVector"):
        if self.modulus != other.modulus or len(self) != len(other):
            raise ValueError("incompatible vectors")

    def __add__(self, other: "ModVector") -> "ModVector":
        self._check(other)
        return ModVector(self.modulus, tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "ModVector") -> "ModVector":
        self._check(other)
        return ModVector(self.modulus, tuple(a - b for a, b in zip(self, other)))

    def __mul__(self, k: int) -> "ModVector":
        return ModVector(self.modulus, tuple(k * a for a in self))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.entries)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % f for f in range(3, math.isqrt(p) + 1, 2))


def _require_prime(p: int):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


# -- determinants -------------------------------------------------------------

def det_rows(a: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of a list-of-lists; mutates ``a``.

    Every intermediate entry is a minor of the input, so the exact
    division below never leaves the integers.
    """
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        rk = a[k]
        if rk[k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    rk = a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rk[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            if f == 0 and prev == pivot:
                continue
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - f * rk[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def det(m: IntMatrix) -> int:
    """Exact signed determinant.  The 0x0 matrix has determinant 1."""
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return det_rows(m.to_rows())


def minor(m: IntMatrix, i: int, j: int) -> int:
    if not m.is_square:
        raise NotSquare(f"minor of a {m.rows}x{m.cols} matrix")
    return det(m.delete(i, j))


def cofactor(m: IntMatrix, i: int, j: int) -> int:
    """``(-1)**(i+j)`` times the minor; indices are 0-based (same parity as 1-based)."""
    return (-1) ** (i + j) * minor(m, i, j)


def cofactors(m: IntMatrix) -> list[list[int]]:
    return [[cofactor(m, i, j) for j in range(m.cols)] for i in range(m.rows)]


# -- modular elimination ------------------------------------------------------

def rref_mod_p(m: IntMatrix, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(p); returns (rows, pivot columns)."""
    _require_prime(p)
    a = [[x % p for x in m.row(i)] for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        piv = next((i for i in range(r, m.rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank_mod_p(m: IntMatrix, p: int) -> int:
    return len(rref_mod_p(m, p)[1])


def nullspace_mod_p(m: IntMatrix, p: int) -> tuple[int, list[ModVector]]:
    """Nullity and a basis of ``{v : m v = 0 mod p}``."""
    a, pivots = rref_mod_p(m, p)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for row, pc in zip(a, pivots):
            v[pc] = -row[f]
        basis.append(ModVector(p, v))
    return len(basis), basis


# -- Smith normal form --------------------------------------------------------

def smith_normal_form(m: IntMatrix) -> tuple[list[int], IntMatrix, IntMatrix]:
    """Return ``(divisors, U, V)`` with ``U @ m @ V`` diagonal.

    ``divisors`` has ``min(rows, cols)`` nonnegative entries, each dividing
    the next (zeros last).  ``U`` and ``V`` are unimodular.
    """
    rows, cols = m.shape
    a = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    divisors = [a[t][t] for t in range(min(rows, cols))]
    return divisors, IntMatrix.from_rows(u, cols=rows), IntMatrix.from_rows(v, cols=cols)


def _column_gcds(m: IntMatrix, n: int) -> tuple[list[int], IntMatrix]:
    divisors, _, v = smith_normal_form(m)
    diag = divisors + [0] * (m.cols - len(divisors))
    return [math.gcd(n, d) for d in diag], v


def count_solutions_mod_n(m: IntMatrix, n: int) -> int:
    """``|{x in (Z/n)^cols : m x = 0 mod n}|`` from the Smith divisors."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    gcds, _ = _column_gcds(m, n)
    return math.prod(gcds)


def solve_mod_n(m: IntMatrix, n: int, cap: int | None = None) -> list[ModVector]:
    """Every solution of ``m x = 0 (mod n)``, sorted.

    Prime ``n`` goes through elimination over GF(n).  Composite ``n`` goes
    through the Smith form: with ``U m V = D``, ``x = V y`` and each ``y_j``
    ranges over the multiples of ``n / gcd(n, d_j)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cap = solution_cap() if cap is None else cap
    if n == 1:
        return [ModVector.zeros(1, m.cols)]
    if is_prime(n):
        nullity, basis = nullspace_mod_p(m, n)
        count = n**nullity
        if count > cap:
            raise SolutionSetTooLarge(count, cap)
        sols = set()
        zero = ModVector.zeros(n, m.cols)
        for coeffs in itertools.product(range(n), repeat=nullity):
            vec = zero
            for k, b in zip(coeffs, basis):
                if k:
                    vec = vec + b * k
            sols.add(vec.entries)
        return [ModVector(n, s) for s in sorted(sols)]

    gcds, v = _column_gcds(m, n)
    count = math.prod(gcds)
    if count > cap:
        raise SolutionSetTooLarge(count, cap)
    ranges = [range(0, n, n // g) for g in gcds]
    sols = {v.apply(y, n) for y in itertools.product(*ranges)}
    assert len(sols) == count
    return [ModVector(n, s) for s in sorted(sols)]


def vectors_mod_n(n: int, length: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(n), repeat=length)
