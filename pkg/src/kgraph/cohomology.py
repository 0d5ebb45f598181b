"""Cohomology with finitely generated abelian coefficients.

Groups come from integral homology by the universal-coefficient decomposition
``H^n = Hom(H_n, A) + Ext(H_{n-1}, A)``.  Coboundaries are the transposes of the
boundary matrices.  :func:`brute_force_cohomology` recomputes everything over
``Z/m`` by exhaustive enumeration and serves as an independent check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

import numpy as np

from .abelian import AbelianInvariants, IntMatrix, invariant_factors, snf
from .errors import CoefficientParseError, TooLarge, UnsupportedCoefficients, ZeroModulus
from .homology import ChainComplex, Homology, homology

ENUMERATION_BOUND = 10**6


# Coefficient groups are described by their invariant factors.
CoefficientGroup = AbelianInvariants


def is_cyclic(A: AbelianInvariants) -> bool:
    return (A.free_rank, len(A.torsion)) in ((1, 0), (0, 1))


_TERM = re.compile(r"^Z(?:\^(\d+)|/(\d+))?$")


def parse_coefficients(text: str) -> CoefficientGroup:
    """Parse ``"Z"``, ``"Z^r"``, ``"Z/n"`` or a ``+``-separated sum of these."""
    terms = [t.strip() for t in text.split("+")]
    rank, orders = 0, []
    for t in terms:
        m = _TERM.match(t.replace(" ", ""))
        if not m:
            raise CoefficientParseError(f"cannot parse coefficient term {t!r} in {text!r}")
        power, mod = m.groups()
        if mod is not None:
            if int(mod) == 0:
                raise ZeroModulus(f"Z/0 in {text!r}")
            orders.append(int(mod))
        else:
            rank += int(power) if power is not None else 1
    return AbelianInvariants(rank, invariant_factors(orders))


def _hom(H: AbelianInvariants, A: AbelianInvariants) -> tuple[int, list[int]]:
    rank = H.free_rank * A.free_rank
    orders = list(A.torsion) * H.free_rank
    orders += [gcd(d, a) for d in H.torsion for a in A.torsion]
    return rank, orders


def _ext(H: AbelianInvariants, A: AbelianInvariants) -> list[int]:
    orders = list(H.torsion) * A.free_rank
    orders += [gcd(d, a) for d in H.torsion for a in A.torsion]
    return orders


@dataclass(frozen=True)
class Cochain:
    labels: tuple[str, ...]
    values: tuple[int, ...]
    modulus: int = 0        # 0 means integer values

    def __getitem__(self, label: str) -> int:
        return self.values[self.labels.index(label)]

    def as_dict(self) -> dict:
        return dict(zip(self.labels, self.values))


class Representative(NamedTuple):
    cochain: Cochain
    order: int              # 0 means infinite order


class CohomologyResult(NamedTuple):
    H0: AbelianInvariants
    H1: AbelianInvariants
    H2: AbelianInvariants
    representatives: tuple[Representative, ...] | None = None

    def degree(self, n: int) -> AbelianInvariants:
        return (self.H0, self.H1, self.H2)[n]

    def as_dict(self) -> dict:
        out = {"H0": self.H0.as_dict(), "H1": self.H1.as_dict(), "H2": self.H2.as_dict()}
        if self.representatives is not None:
            out["representatives"] = [
                {"order": r.order or "infinite", "cochain": r.cochain.as_dict()}
                for r in self.representatives]
        return out


def cohomology(cx: ChainComplex, A: AbelianInvariants, hom: Homology | None = None,
               representatives: bool = False) -> CohomologyResult:
    H = hom or homology(cx)
    groups = []
    for n in range(3):
        rank, orders = _hom(H[n], A)
        if n:
            orders += _ext(H[n - 1], A)
        groups.append(AbelianInvariants.from_cyclic(rank, orders))
    reps = tuple(h2_representatives(cx, A)) if representatives else None
    return CohomologyResult(*groups, reps)


# -- explicit H^2 classes ----------------------------------------------------

def _divides(g: int, y: int) -> bool:
    return y == 0 if g == 0 else y % g == 0


def _coboundary_snf(cx: ChainComplex):
    return snf(cx.d2.T, with_transforms=True)


def is_coboundary(cx: ChainComplex, values, modulus: int = 0, _res=None) -> bool:
    """Whether a 2-cochain (values on the C_2 basis) lies in the image of the
    coboundary with coefficients in ``Z/modulus`` (``Z`` when 0)."""
    res = _res or _coboundary_snf(cx)
    y = res.U.apply(values)
    for i, yi in enumerate(y):
        d = res.diagonal[i] if i < res.rank else 0
        if not _divides(gcd(d, modulus), yi):
            return False
    return True


def h2_representatives(cx: ChainComplex, A: AbelianInvariants) -> list[Representative]:
    """One cocycle per invariant factor of ``H^2(cx; A)`` for cyclic ``A``.

    Orders are those of the classes; every returned cochain is checked to lie
    outside the coboundaries, and ``k`` times it inside exactly when the order
    divides ``k``.
    """
    if not is_cyclic(A):
        raise UnsupportedCoefficients(f"representatives need cyclic coefficients, got {A}")
    m = A.torsion[0] if A.torsion else 0
    n2 = len(cx.labels2)
    res = _coboundary_snf(cx)
    # In the basis given by the columns of U^{-1}, the coboundaries are d_i A.
    cyc, free = [], []
    for i in range(n2):
        d = res.diagonal[i] if i < res.rank else 0
        order = gcd(d, m)
        col = res.U_inv.column(i)
        if order == 0:
            free.append(col)
        elif order > 1:
            cyc.append((order, col))
    reps = []
    if cyc:
        rel = snf(IntMatrix.from_rows([[o if a == b else 0 for b in range(len(cyc))]
                                       for a, (o, _) in enumerate(cyc)]), with_transforms=True)
        for j, d in enumerate(rel.diagonal):
            if d == 1:
                continue
            vec = [sum(rel.U_inv[k, j] * cyc[k][1][t] for k in range(len(cyc))) for t in range(n2)]
            reps.append((d, vec))
        reps.sort(key=lambda x: x[0])
    reps += [(0, list(col)) for col in free]
    out = []
    for order, vec in reps:
        vals = tuple(v % m for v in vec) if m else tuple(vec)
        if is_coboundary(cx, vals, m, res):
            raise AssertionError("representative is a coboundary")
        if order and not is_coboundary(cx, [order * v for v in vals], m, res):
            raise AssertionError("representative has the wrong order")
        out.append(Representative(Cochain(cx.labels2, vals, m), order))
    return out


def coker_transpose(cx: ChainComplex) -> AbelianInvariants:
    """``Z^{C_2} / im d2^T``, i.e. ``H^2(cx; Z)`` computed directly."""
    d = snf(cx.d2.T).diagonal
    nz = [x for x in d if x]
    return AbelianInvariants(len(cx.labels2) - len(nz), tuple(x for x in nz if x > 1))


# -- exhaustive oracle -------------------------------------------------------

def _primes(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    return out + ([m] if m > 1 else [])


def _from_torsion_counts(m: int, count) -> AbelianInvariants:
    """Rebuild a finite group of exponent dividing ``m`` from ``count(n) = |G[n]|``."""
    orders = []
    for p in _primes(m):
        e, mm = 0, m
        while mm % p == 0:
            mm //= p
            e += 1
        logs = [0]
        for k in range(1, e + 1):
            c, t = count(p ** k), 0
            while c > 1:
                if c % p:
                    raise AssertionError("subgroup order is not a prime power")
                c //= p
                t += 1
            logs.append(t)
        # logs[k] - logs[k-1] = number of cyclic p-factors of order at least p^k
        at_least = [logs[k] - logs[k - 1] for k in range(1, e + 1)] + [0]
        for k in range(1, e + 1):
            orders += [p ** k] * (at_least[k - 1] - at_least[k])
    return AbelianInvariants.from_cyclic(0, orders)


def _all_vectors(m: int, n: int, chunk: int = 1 << 16):
    total = m ** n
    powers = m ** np.arange(n, dtype=np.int64)
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        yield (idx[:, None] // powers[None, :]) % m


def _encode(vecs: np.ndarray, m: int) -> np.ndarray:
    n = vecs.shape[1]
    if m ** n >= 2 ** 62:
        raise TooLarge(f"cannot encode vectors of length {n} over Z/{m}")
    return vecs @ (m ** np.arange(n, dtype=np.int64))


def brute_force_cohomology(cx: ChainComplex, m: int,
                           bound: int = ENUMERATION_BOUND) -> tuple[AbelianInvariants, ...]:
    """``H^0, H^1, H^2`` with ``Z/m`` coefficients by enumerating every cochain."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    n0, n1, n2 = cx.dims
    if m ** n0 > bound or m ** n1 > bound:
        raise TooLarge(f"Z/{m} cochains in degrees 0, 1 exceed {bound}")
    d0 = np.array(cx.d1.T.tolist(), dtype=np.int64).reshape(n1, n0)
    d1 = np.array(cx.d2.T.tolist(), dtype=np.int64).reshape(n2, n1)
    divisors = sorted({p ** k for p in _primes(m) for k in range(1, 64) if m % p ** k == 0})

    # degree 0: the kernel of d0, quotient by nothing
    k0 = {n: 0 for n in divisors}
    im0 = []
    for X in _all_vectors(m, n0):
        Y = (X @ d0.T) % m
        im0.append(_encode(Y, m))
        ker = X[~Y.any(axis=1)]
        for n in divisors:
            k0[n] += int((~((n * ker) % m).any(axis=1)).sum())
    im0 = np.unique(np.concatenate(im0)) if im0 else np.zeros(1, dtype=np.int64)

    # degree 1: kernel of d1 modulo image of d0
    k1 = {n: 0 for n in divisors}
    im1 = []
    for X in _all_vectors(m, n1):
        Y = (X @ d1.T) % m
        im1.append(_encode(Y, m))
        ker = X[~Y.any(axis=1)]
        for n in divisors:
            k1[n] += int(np.isin(_encode((n * ker) % m, m), im0).sum())
    im1_codes = np.unique(np.concatenate(im1)) if im1 else np.zeros(1, dtype=np.int64)

    # degree 2: everything modulo image of d1; x -> n x has kernel of size g^n2
    # and image the multiples of g = gcd(n, m)
    powers = m ** np.arange(n2, dtype=np.int64)
    digits = (im1_codes[:, None] // powers[None, :]) % m

    def count2(n):
        g = gcd(n, m)
        return int((~(digits % g).any(axis=1)).sum()) * g ** n2 // len(im1_codes)

    H0 = _from_torsion_counts(m, lambda n: k0[n])
    H1 = _from_torsion_counts(m, lambda n: k1[n] // len(im0))
    H2 = _from_torsion_counts(m, count2)
    return H0, H1, H2
