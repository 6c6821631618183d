"""Exact Schur polynomials in m variables, with two evaluation paths.

Polynomials are plain dicts mapping exponent tuples (length m, negative
entries allowed) to nonzero integer coefficients.  A Schur index is a
weakly decreasing integer list; an index shorter than m is padded (with 0,
or with its last entry when that is negative) and an index whose entries
are all shifted by a constant c contributes the monomial twist
(x_1 ... x_m)^c, so strictly polynomial machinery covers the Laurent cases.

schur_jt evaluates by the Jacobi-Trudi determinant in complete homogeneous
polynomials; schur_tableaux enumerates semistandard tableaux and is kept as
an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

__all__ = [
    "PartitionIndex",
    "schur_jt",
    "schur_tableaux",
    "pieri_expand",
    "straighten",
    "poly_zero",
    "poly_monomial",
    "poly_add",
    "poly_scale",
    "poly_mul",
    "poly_twist",
]

Poly = dict


# -- Laurent polynomial dicts -------------------------------------------------

def poly_zero() -> Poly:
    return {}

def poly_monomial(exps, coeff: int = 1) -> Poly:
    return {tuple(exps): coeff} if coeff else {}

def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for exps, coeff in q.items():
        total = out.get(exps, 0) + coeff
        if total:
            out[exps] = total
        else:
            out.pop(exps, None)
    return out

def poly_scale(p: Poly, c: int) -> Poly:
    return {exps: coeff * c for exps, coeff in p.items()} if c else {}

def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            exps = tuple(a + b for a, b in zip(e1, e2))
            total = out.get(exps, 0) + c1 * c2
            if total:
                out[exps] = total
            else:
                del out[exps]
    return out

def poly_twist(p: Poly, c: int) -> Poly:
    """Multiply by (x_1 ... x_m)^c."""
    if not c:
        return dict(p)
    return {tuple(e + c for e in exps): coeff for exps, coeff in p.items()}


@dataclass(frozen=True)
class PartitionIndex:
    """Weakly decreasing integer index in m variables.

    Trailing zeros are stripped on construction; padded() restores the
    full-length form.
    """

    entries: tuple[int, ...]
    m: int

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"{entries} is not weakly decreasing")
        if self.m < 1:
            raise ValueError("need at least one variable")
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)

    def padded(self) -> tuple[int, ...]:
        """Entries brought to length m (fill 0, or the last entry if negative)."""
        if len(self.entries) >= self.m:
            return self.entries
        fill = min(0, self.entries[-1]) if self.entries else 0
        return self.entries + (fill,) * (self.m - len(self.entries))

    def weight(self) -> int:
        return sum(self.entries)

    def text(self) -> str:
        return "(" + ",".join(str(e) for e in self.padded()) + ")"


def _settle(index: PartitionIndex) -> tuple[tuple[int, ...], int] | None:
    """Full-length nonnegative index and its monomial twist, or None if the
    Schur polynomial is identically zero (more nonzero rows than variables)."""
    entries = index.padded()
    if len(entries) > index.m:
        if all(e >= 1 for e in entries[index.m:]):
            return None
        raise ValueError(
            f"index {entries} of length {len(entries)} does not define a "
            f"Schur polynomial in {index.m} variables")
    twist = entries[-1]
    return tuple(e - twist for e in entries), twist


@lru_cache(maxsize=None)
def _homogeneous(k: int, m: int) -> tuple:
    """Complete homogeneous h_k in m variables, as a tuple of (exps, 1)."""
    if k < 0:
        return ()
    if m == 1:
        return (((k,), 1),)
    terms = []
    for first in range(k + 1):
        for exps, _ in _homogeneous(k - first, m - 1):
            terms.append(((first,) + exps, 1))
    return tuple(terms)


@lru_cache(maxsize=None)
def _schur_jt_cached(entries: tuple[int, ...], m: int) -> tuple:
    rows = len(entries)
    if rows == 0:
        return (((0,) * m, 1),)
    matrix = [[dict(_homogeneous(entries[i] - i + j, m)) for j in range(rows)]
              for i in range(rows)]
    total: Poly = {}
    for perm in permutations(range(rows)):
        sign = _perm_sign(perm)
        product = poly_monomial((0,) * m)
        for i in range(rows):
            product = poly_mul(product, matrix[i][perm[i]])
            if not product:
                break
        total = poly_add(total, poly_scale(product, sign))
    return tuple(sorted(total.items()))


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def schur_jt(index: PartitionIndex) -> Poly:
    """Schur polynomial by the Jacobi-Trudi determinant det(h_{mu_i - i + j})."""
    settled = _settle(index)
    if settled is None:
        return poly_zero()
    entries, twist = settled
    return poly_twist(dict(_schur_jt_cached(entries, index.m)), twist)


def schur_tableaux(index: PartitionIndex) -> Poly:
    """Schur polynomial by semistandard tableau enumeration (oracle path)."""
    settled = _settle(index)
    if settled is None:
        return poly_zero()
    entries, twist = settled
    m = index.m
    shape = [e for e in entries if e > 0]
    total: Poly = {}

    def fill(row: int, col: int, row_values: list[int], above: list[int],
             counts: list[int]):
        nonlocal total
        if row == len(shape):
            exps = tuple(counts)
            total[exps] = total.get(exps, 0) + 1
            return
        if col == shape[row]:
            fill(row + 1, 0, [], row_values, counts)
            return
        lo = row_values[col - 1] if col else 1
        if col < len(above):
            lo = max(lo, above[col] + 1)
        for value in range(lo, m + 1):
            counts[value - 1] += 1
            row_values.append(value)
            fill(row, col + 1, row_values, above, counts)
            row_values.pop()
            counts[value - 1] -= 1

    fill(0, 0, [], [], [0] * m)
    return poly_twist(total, twist)


def pieri_expand(index: PartitionIndex) -> list[PartitionIndex]:
    """All one-box additions mu + e_i that stay weakly decreasing."""
    padded = index.padded()
    out = []
    for i in range(index.m):
        bumped = padded[:i] + (padded[i] + 1,) + padded[i + 1:]
        if all(a >= b for a, b in zip(bumped, bumped[1:])):
            out.append(PartitionIndex(bumped, index.m))
    return out


def straighten(raw) -> tuple[int, PartitionIndex] | None:
    """Sort an alternant index, tracking the sign; None when entries repeat.

    The input is the already-shifted index of an alternant, so a repeated
    entry kills the term and an odd reordering flips its sign.
    """
    raw = tuple(int(e) for e in raw)
    if len(set(raw)) != len(raw):
        return None
    ranked = sorted(range(len(raw)), key=lambda i: -raw[i])
    positions = [0] * len(raw)
    for rank, i in enumerate(ranked):
        positions[i] = rank
    sign = _perm_sign(tuple(positions))
    return sign, PartitionIndex(tuple(sorted(raw, reverse=True)), len(raw))
