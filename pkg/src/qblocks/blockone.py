"""Block combinatorics at atypicality one, and the gl(l|m) dictionary.

A weight with a single atypical cross pair has a chain of block neighbours
built by moving along the pair's root until the within-group coordinates
are distinct again.  The chart over a finite window records those
neighbours together with the decomposition matrix (bidiagonal), the Cartan
matrix (its Gram square), and the nearest-neighbour quiver.

The second half is the integral dictionary: the coordinate shift onto
gl(l|m) weights, and the transported wt label, linkage, and atypicality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linkage import WtVector, atypicality
from .scalars import Scalar
from .weights import Root, Weight, is_dominant, is_in_lambda, weight_to_json

PARITY_SHIFT = "parity-shift"
IDENTITY = "identity"


def _cross_pair(weight: Weight, s: Scalar, ell: int) -> tuple[int, int]:
    if not is_dominant(weight, s, ell):
        raise ValueError("weight must be dominant for the given block family")
    pairs = [
        (p, q)
        for p in range(1, ell + 1)
        for q in range(ell + 1, weight.n + 1)
        if weight[p] + weight[q] == Scalar()
    ]
    if len(pairs) != 1 or atypicality(weight) != 1:
        raise ValueError("weight must have exactly one atypical cross pair")
    return pairs[0]


def _group_slices(weight: Weight, ell: int):
    return weight.coords[:ell], weight.coords[ell:]


def _distinct(values) -> bool:
    return all(a != b for idx, a in enumerate(values) for b in values[idx + 1:])


def _sorted_descending(values) -> tuple:
    if not values:
        return ()
    base = values[0]
    return tuple(sorted(values, key=lambda v: (v - base).rational, reverse=True))


def _resort(weight: Weight, ell: int) -> Weight:
    first, second = _group_slices(weight, ell)
    return Weight(_sorted_descending(first) + _sorted_descending(second))


def lambda_minus(weight: Weight, s: Scalar, ell: int) -> Weight:
    """Lower block neighbour: walk down the atypical root to the next
    weight whose within-group coordinates are all distinct, then sort."""
    p, q = _cross_pair(weight, s, ell)
    alpha = Root(p, q).as_weight(weight.n)
    for k in range(1, weight.n + 1):
        moved = weight - k * alpha
        first, second = _group_slices(moved, ell)
        if _distinct(first) and _distinct(second):
            return _resort(moved, ell)
    raise AssertionError("collision search exceeded its bound")


def lambda_plus(weight: Weight, s: Scalar, ell: int) -> Weight:
    """Upper block neighbour: the mirrored search, checked against
    lambda_minus."""
    p, q = _cross_pair(weight, s, ell)
    alpha = Root(p, q).as_weight(weight.n)
    for k in range(1, weight.n + 1):
        moved = weight + k * alpha
        first, second = _group_slices(moved, ell)
        if _distinct(first) and _distinct(second):
            result = _resort(moved, ell)
            if lambda_minus(result, s, ell) != weight:
                raise AssertionError("upper neighbour failed the inverse check")
            return result
    raise AssertionError("collision search exceeded its bound")


@dataclass(frozen=True)
class BlockChart:
    """Window of block neighbours with decomposition and Cartan data.

    Index i runs over [-window, window] with the center at 0; verma_flags
    row i marks the irreducibles of the i-th standard object (columns i-1
    and i), cartan is its Gram square, and edges join nearest neighbours.
    Rows listed in boundary are truncated by the window and their Cartan
    entries are not exact.
    """

    center: Weight
    window: int
    weights: tuple[Weight, ...]
    verma_flags: tuple[tuple[int, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    boundary: tuple[int, ...]

    def weight_at(self, i: int) -> Weight:
        if abs(i) > self.window:
            raise ValueError("index outside the chart window")
        return self.weights[i + self.window]

    def hom_dim(self, i: int, j: int) -> int:
        if max(abs(i), abs(j)) > self.window:
            raise ValueError("index outside the chart window")
        return self.cartan[i + self.window][j + self.window]


def block_chart(weight: Weight, s: Scalar, ell: int, window: int) -> BlockChart:
    if window < 0:
        raise ValueError("window must be nonnegative")
    _cross_pair(weight, s, ell)

    above = []
    cur = weight
    for _ in range(window):
        cur = lambda_plus(cur, s, ell)
        above.append(cur)
    below = []
    cur = weight
    for _ in range(window):
        nxt = lambda_minus(cur, s, ell)
        if lambda_plus(nxt, s, ell) != cur:
            raise AssertionError("chart chain is not invertible")
        below.append(nxt)
        cur = nxt
    weights = tuple(reversed(below)) + (weight,) + tuple(above)

    size = 2 * window + 1
    flags = tuple(
        tuple(1 if c == r or c == r - 1 else 0 for c in range(size))
        for r in range(size)
    )
    cartan = tuple(
        tuple(sum(flags[r][i] * flags[r][j] for r in range(size)) for j in range(size))
        for i in range(size)
    )
    edges = tuple((i, i + 1) for i in range(-window, window))
    boundary = (0,) if window == 0 else (-window, window)
    return BlockChart(weight, window, weights, flags, cartan, edges, boundary)


def pi_split(n: int) -> bool:
    """Whether a simple module and its parity shift sit in different blocks."""
    if n < 1:
        raise ValueError("rank must be positive")
    return n % 2 == 0


def tau_parity(n: int) -> str:
    """Effect of the duality twist on a simple module, for even rank only."""
    if n < 1 or n % 2 != 0:
        raise ValueError("defined for even rank only")
    return PARITY_SHIFT if n % 4 == 2 else IDENTITY


@dataclass(frozen=True)
class GlWeight:
    """Integral weight of gl(l|m) in delta coordinates."""

    ell: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.ell <= len(self.coords):
            raise ValueError("ell out of range")
        if not all(isinstance(c, int) for c in self.coords):
            raise ValueError("coordinates must be integers")

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def m(self) -> int:
        return self.n - self.ell

    def shifted(self) -> tuple[int, ...]:
        rho = gl_rho(self.ell, self.n)
        return tuple(c + r for c, r in zip(self.coords, rho))

    def text(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def gl_rho(ell: int, n: int) -> tuple[int, ...]:
    return tuple(
        -(ell - i + 1) if i <= ell else i - ell for i in range(1, n + 1)
    )


def to_gl(weight: Weight, s: Scalar, ell: int) -> GlWeight:
    """Coordinate dictionary onto gl(l|m): strip the coset anchor, shift by
    the fixed rho."""
    if not is_in_lambda(weight, s, ell):
        raise ValueError("weight does not lie in the given block family")
    rho = gl_rho(ell, weight.n)
    coords = []
    for i in range(1, weight.n + 1):
        stripped = weight[i] - s if i <= ell else weight[i] + s
        coords.append(int(stripped.rational) - rho[i - 1])
    return GlWeight(ell, tuple(coords))


def from_gl(nu: GlWeight, s: Scalar) -> Weight:
    """Inverse dictionary: restore the coset anchor."""
    rho = gl_rho(nu.ell, nu.n)
    coords = []
    for i in range(1, nu.n + 1):
        base = nu.coords[i - 1] + rho[i - 1]
        coords.append(s + base if i <= nu.ell else -s + base)
    return Weight(tuple(coords))


def gl_wt(nu: GlWeight) -> WtVector:
    shifted = nu.shifted()
    total = WtVector(())
    for i, value in enumerate(shifted, start=1):
        if i <= nu.ell:
            total = total + WtVector.basis(value)
        else:
            total = total - WtVector.basis(-value)
    return total


def gl_linked(nu: GlWeight, other: GlWeight) -> bool:
    if (nu.ell, nu.n) != (other.ell, other.n):
        raise ValueError("weights live on different gl(l|m)")
    if gl_wt(nu) != gl_wt(other):
        return False
    return sum(nu.coords) == sum(other.coords)


def gl_atypicality(nu: GlWeight) -> int:
    shifted = nu.shifted()
    left = list(shifted[: nu.ell])
    right = list(shifted[nu.ell:])
    total = 0
    for value in set(left):
        total += min(left.count(value), right.count(-value))
    return total


def chart_to_json(chart: BlockChart) -> dict:
    return {
        "center": weight_to_json(chart.center),
        "window": chart.window,
        "weights": [weight_to_json(w) for w in chart.weights],
        "D": [list(row) for row in chart.verma_flags],
        "C": [list(row) for row in chart.cartan],
        "edges": [list(e) for e in chart.edges],
        "boundary": list(chart.boundary),
    }


def gl_to_json(nu: GlWeight) -> dict:
    return {"ell": nu.ell, "coords": list(nu.coords)}
