"""Exact integer matrices, Smith normal form and finitely generated abelian groups.

All arithmetic uses Python integers, so there is no overflow however large the
intermediate entries of an elimination become.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("matrix dimensions do not match entry count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ocols) for row in self.entries))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def rank(self) -> int:
        return sum(1 for d in snf(self).diagonal if d)


@dataclass(frozen=True)
class SNFResult:
    """``U @ M @ V == D`` with ``D`` diagonal; ``diagonal`` lists ``min(rows, cols)`` entries."""

    diagonal: tuple[int, ...]
    U: IntMatrix | None = None
    V: IntMatrix | None = None
    U_inv: IntMatrix | None = None
    V_inv: IntMatrix | None = None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def snf(m: IntMatrix, with_transforms: bool = False) -> SNFResult:
    """Smith normal form.

    Pivot rule: smallest nonzero absolute value in the remaining block, ties
    broken by row-major position.  With ``with_transforms`` the unimodular
    ``U``, ``V`` and their inverses are returned as well.
    """
    r, c = m.rows, m.cols
    A = [list(row) for row in m.entries]
    track = with_transforms
    if track:
        U = [[int(i == j) for j in range(r)] for i in range(r)]
        Ui = [[int(i == j) for j in range(r)] for i in range(r)]
        V = [[int(i == j) for j in range(c)] for i in range(c)]
        Vi = [[int(i == j) for j in range(c)] for i in range(c)]

    # Row op R_i += k R_j : U rows likewise; U^{-1} columns: C_j -= k C_i.
    def row_add(i, j, k):
        if k == 0:
            return
        Ai, Aj = A[i], A[j]
        for t in range(c):
            Ai[t] += k * Aj[t]
        if track:
            Ui_, Uj_ = U[i], U[j]
            for t in range(r):
                Ui_[t] += k * Uj_[t]
            for row in Ui:
                row[j] -= k * row[i]

    def col_add(i, j, k):
        if k == 0:
            return
        for row in A:
            row[i] += k * row[j]
        if track:
            for row in V:
                row[i] += k * row[j]
            Vi_i, Vi_j = Vi[i], Vi[j]
            for t in range(c):
                Vi_j[t] -= k * Vi_i[t]

    def row_swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        if track:
            U[i], U[j] = U[j], U[i]
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def col_swap(i, j):
        if i == j:
            return
        for row in A:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_neg(i):
        A[i] = [-x for x in A[i]]
        if track:
            U[i] = [-x for x in U[i]]
            for row in Ui:
                row[i] = -row[i]

    def min_pivot(t):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return best

    diag = []
    for t in range(min(r, c)):
        piv = min_pivot(t)
        if piv is None:
            break
        _, i, j = piv
        row_swap(t, i)
        col_swap(t, j)
        while True:
            p = A[t][t]
            for i in range(t + 1, r):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
            for j in range(t + 1, c):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
            rest = [(abs(A[i][t]), i, t) for i in range(t + 1, r) if A[i][t]]
            rest += [(abs(A[t][j]), t, j) for j in range(t + 1, c) if A[t][j]]
            if rest:
                _, i, j = min(rest)
                row_swap(t, i)
                col_swap(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c)
                        if A[i][j] % p), None)
            if bad is None:
                break
            row_add(t, bad[0], 1)
        if A[t][t] < 0:
            row_neg(t)
        diag.append(A[t][t])
    diag += [0] * (min(r, c) - len(diag))
    if not track:
        return SNFResult(tuple(diag))
    mk = IntMatrix.from_rows
    return SNFResult(tuple(diag), mk(U, r), mk(V, c), mk(Ui, r), mk(Vi, c))


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Normalise a list of cyclic orders (each >= 1) into a divisor chain, dropping ones."""
    orders = [int(x) for x in orders if int(x) != 1]
    if any(x <= 0 for x in orders):
        raise ValueError("cyclic orders must be positive")
    if not orders:
        return ()
    diag = snf(IntMatrix.from_rows([[x if i == j else 0 for j in range(len(orders))]
                                    for i, x in enumerate(orders)])).diagonal
    return tuple(d for d in diag if d != 1)


@dataclass(frozen=True)
class AbelianInvariants:
    """The group ``Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t`` with ``d_1 | d_2 | ... | d_t``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        if self.free_rank < 0 or any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"not an invariant-factor description: {self.free_rank}, {t}")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_cyclic(cls, free_rank: int, orders: Iterable[int]) -> AbelianInvariants:
        return cls(free_rank, invariant_factors(orders))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def as_dict(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = [f"Z^{self.free_rank}" if self.free_rank > 1 else "Z"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def cokernel(m: IntMatrix) -> AbelianInvariants:
    """``Z^rows / m Z^cols``."""
    diag = snf(m).diagonal
    nonzero = [d for d in diag if d]
    return AbelianInvariants(m.rows - len(nonzero), tuple(d for d in nonzero if d != 1))


def lattice_is_saturated(m: IntMatrix) -> bool:
    """True when the column span of ``m`` is a direct summand of ``Z^rows``."""
    return all(d in (0, 1) for d in snf(m).diagonal)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return (a, x0, y0) if a >= 0 else (-a, -x0, -y0)


__all__ = ["IntMatrix", "SNFResult", "snf", "AbelianInvariants", "invariant_factors",
           "cokernel", "lattice_is_saturated", "gcd", "xgcd"]
