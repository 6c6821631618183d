"""Weights and roots for q(n).

A weight is an exact coordinate vector in the epsilon basis.  Roots are the
type A ones, eps_i - eps_j.  Besides the even pairing (lambda, alpha) =
lambda_i - lambda_j there is the bar pairing (lambda, alpha-bar) =
lambda_i + lambda_j, which governs atypicality: the star action of a simple
reflection is the plain swap when the bar pairing is nonzero and the swap
followed by subtracting alpha when it vanishes.

class_signature groups the coordinates of a weight by coset pair {s+Z, -s+Z}
and tags each coordinate with a sign: + when its coset is the pair's
canonical half (for INT always, for HALF when the coordinate is positive).
The distinct pairs are listed INT first, HALF second, then the others in
order of first occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from qblocks.scalars import (
    HALF,
    INT,
    CosetClass,
    Scalar,
    coordinate_sign,
    coset_class,
)

__all__ = [
    "Weight",
    "Root",
    "ClassSignature",
    "TYPICAL",
    "ATYPICAL",
    "pairing",
    "bar_pairing",
    "ell_delta",
    "weyl_apply",
    "star_action",
    "class_signature",
    "is_in_lambda",
    "is_dominant",
    "weight_from_json",
    "weight_to_json",
]

TYPICAL = "typical"
ATYPICAL = "atypical"


@dataclass(frozen=True)
class Weight:
    coords: tuple[Scalar, ...]

    def __post_init__(self):
        coords = tuple(Scalar.coerce(c) for c in self.coords)
        if not coords:
            raise ValueError("a weight needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *values) -> "Weight":
        """Build from Scalars, ints, Fractions or scalar text."""
        coords = []
        for v in values:
            if isinstance(v, str):
                coords.append(Scalar.parse(v))
            else:
                coords.append(Scalar.coerce(v))
        return cls(tuple(coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        """Coordinate by 1-based index."""
        if not 1 <= i <= self.n:
            raise IndexError(f"coordinate index {i} out of 1..{self.n}")
        return self.coords[i - 1]

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, factor) -> "Weight":
        return Weight(tuple(c * factor for c in self.coords))

    __rmul__ = __mul__

    def _check_rank(self, other: "Weight"):
        if not isinstance(other, Weight) or other.n != self.n:
            raise ValueError("weights must have equal length")

    def replace(self, i: int, value) -> "Weight":
        """Copy with the 1-based coordinate i replaced."""
        coords = list(self.coords)
        coords[i - 1] = Scalar.coerce(value)
        return Weight(tuple(coords))

    def text(self) -> str:
        return "(" + ",".join(c.text() for c in self.coords) + ")"

    __str__ = text

    def __repr__(self) -> str:
        return f"Weight{self.text()}"


@dataclass(frozen=True)
class Root:
    """eps_i - eps_j with 1-based indices, i != j."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1 or self.i == self.j:
            raise ValueError(f"bad root indices ({self.i}, {self.j})")

    def is_positive(self) -> bool:
        return self.i < self.j

    def is_simple(self) -> bool:
        return self.j == self.i + 1

    def as_weight(self, n: int) -> Weight:
        if self.i > n or self.j > n:
            raise ValueError(f"root ({self.i},{self.j}) does not fit in rank {n}")
        coords = [Scalar(0)] * n
        coords[self.i - 1] = Scalar(1)
        coords[self.j - 1] = Scalar(-1)
        return Weight(tuple(coords))

    def text(self) -> str:
        return f"e{self.i}-e{self.j}"


def simple_root(i: int) -> Root:
    return Root(i, i + 1)


def positive_roots(n: int) -> list[Root]:
    return [Root(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _check_indices(weight: Weight, alpha: Root):
    if alpha.i > weight.n or alpha.j > weight.n:
        raise ValueError(
            f"root ({alpha.i},{alpha.j}) out of range for n={weight.n}")


def pairing(weight: Weight, alpha: Root) -> Scalar:
    """(lambda, alpha) = lambda_i - lambda_j."""
    _check_indices(weight, alpha)
    return weight[alpha.i] - weight[alpha.j]


def bar_pairing(weight: Weight, alpha: Root) -> Scalar:
    """(lambda, alpha-bar) = lambda_i + lambda_j."""
    _check_indices(weight, alpha)
    return weight[alpha.i] + weight[alpha.j]


def ell_delta(weight: Weight) -> tuple[int, int]:
    """(number of nonzero coordinates, its parity)."""
    ell = sum(1 for c in weight.coords if c)
    return ell, ell % 2


def weyl_apply(w, weight: Weight) -> Weight:
    """Permute coordinates: the coordinate at position i moves to w(i).

    w is given by its 1-based images (w(1), ..., w(n)).
    """
    w = tuple(w)
    n = weight.n
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{n}")
    coords: list[Scalar | None] = [None] * n
    for pos, image in enumerate(w, start=1):
        coords[image - 1] = weight[pos]
    return Weight(tuple(coords))


def star_action(alpha: Root, weight: Weight) -> tuple[Weight, str]:
    """Star action of the simple reflection s_alpha.

    Swaps the two coordinates; when the bar pairing vanishes the swapped
    weight is shifted down by alpha as well.  Only simple roots act.
    """
    if not alpha.is_simple():
        raise ValueError(f"star action needs a simple root, got ({alpha.i},{alpha.j})")
    _check_indices(weight, alpha)
    a, b = weight[alpha.i], weight[alpha.j]
    swapped = weight.replace(alpha.i, b).replace(alpha.j, a)
    if bar_pairing(weight, alpha):
        return swapped, TYPICAL
    return swapped - alpha.as_weight(weight.n), ATYPICAL


@dataclass(frozen=True)
class ClassSignature:
    """Coset-pair layout of a weight.

    classes: the distinct coset pairs, each stored by its canonical half,
    in canonical order (INT, HALF, then the rest by first occurrence).
    labels: one (class index, sign) per coordinate.
    """

    classes: tuple[CosetClass, ...]
    labels: tuple[tuple[int, int], ...]

    def class_of(self, i: int) -> CosetClass:
        """Coset pair of the 1-based coordinate i."""
        return self.classes[self.labels[i - 1][0]]

    def sign_of(self, i: int) -> int:
        return self.labels[i - 1][1]

    def positions(self, class_index: int) -> list[int]:
        return [pos for pos, (ci, _) in enumerate(self.labels, start=1)
                if ci == class_index]

    def text(self) -> str:
        chunks = []
        for ci, cls in enumerate(self.classes):
            members = []
            for pos in self.positions(ci):
                if cls.kind == INT:
                    members.append(str(pos))
                else:
                    members.append(f"{pos}{'+' if self.sign_of(pos) > 0 else '-'}")
            chunks.append(f"{cls.label()}:{{{','.join(members)}}}")
        return " ".join(chunks)


def class_signature(weight: Weight) -> ClassSignature:
    first_seen: dict[CosetClass, int] = {}
    have = {INT: False, HALF: False}
    for pos, coord in enumerate(weight.coords, start=1):
        cls = coset_class(coord)
        if cls.kind in have:
            have[cls.kind] = True
        else:
            rep = cls.pair_representative()
            first_seen.setdefault(rep, pos)
    classes: list[CosetClass] = []
    if have[INT]:
        classes.append(CosetClass(INT))
    if have[HALF]:
        classes.append(CosetClass(HALF))
    classes.extend(sorted(first_seen, key=first_seen.get))
    index = {cls: k for k, cls in enumerate(classes)}
    labels = []
    for coord in weight.coords:
        rep = coset_class(coord).pair_representative()
        labels.append((index[rep], coordinate_sign(coord)))
    return ClassSignature(tuple(classes), tuple(labels))


def is_in_lambda(weight: Weight, s: Scalar, ell: int) -> bool:
    """Coordinates up to position ell are congruent to s, the rest to -s."""
    s = Scalar.coerce(s)
    if not 0 <= ell <= weight.n:
        raise ValueError(f"ell={ell} out of 0..{weight.n}")
    for pos, coord in enumerate(weight.coords, start=1):
        target = s if pos <= ell else -s
        if not (coord - target).is_integer():
            return False
    return True


def is_dominant(weight: Weight, s: Scalar, ell: int) -> bool:
    """Membership plus strict decrease inside each of the two groups.

    No condition couples position ell to ell+1: for generic s the two
    groups are not comparable.
    """
    if not is_in_lambda(weight, s, ell):
        return False
    for i in range(1, weight.n):
        if i == ell:
            continue
        if not weight[i] > weight[i + 1]:
            return False
    return True


def weight_from_json(obj) -> Weight:
    """Read the weight JSON form {"n": ..., "coords": [scalar text, ...]}.

    An optional "symbols" list declares the symbol names; when present,
    every symbol used by a coordinate must be declared.
    """
    if not isinstance(obj, dict) or "coords" not in obj:
        raise ValueError("weight JSON needs a 'coords' list")
    coords = [Scalar.parse(t) for t in obj["coords"]]
    if "n" in obj and obj["n"] != len(coords):
        raise ValueError(f"n={obj['n']} but {len(coords)} coordinates given")
    if "symbols" in obj:
        declared = set(obj["symbols"])
        used = {name for c in coords for name, _ in c.symbols}
        if not used <= declared:
            raise ValueError(f"undeclared symbols {sorted(used - declared)}")
    return Weight(tuple(coords))


def weight_to_json(weight: Weight) -> dict:
    obj = {"n": weight.n, "coords": [c.text() for c in weight.coords]}
    symbols = sorted({name for c in weight.coords for name, _ in c.symbols})
    if symbols:
        obj["symbols"] = symbols
    return obj
