"""Formal characters of Verma and parabolic Verma modules.

A formal character lives in a completed group ring: finitely many terms per
height, all of them below a single anchor weight, truncated at a fixed depth.
Terms are stored by the simple-root coordinates of (anchor - weight), so
every key is a tuple of nonnegative integers and the height of a term is the
sum of its key.  A depth of None marks an exact polynomial (no truncation).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .linkage import WtVector, wt
from .scalars import Scalar
from .schur import PartitionIndex, poly_add, poly_scale, schur_jt, straighten
from .weights import Root, Weight, ell_delta, positive_roots

Terms = tuple[tuple[tuple[int, ...], int], ...]


def _c_coords(delta: Weight) -> tuple[int, ...] | None:
    """Simple-root coordinates of a weight, or None if outside the cone.

    Returns c with delta = sum_i c[i] * (e_i - e_{i+1}); this requires every
    coordinate of delta to be an integer, every partial sum to be
    nonnegative, and the total to vanish.
    """
    partial = Scalar()
    out = []
    for coord in delta.coords[:-1]:
        if not coord.is_integer():
            return None
        partial = partial + coord
        if not partial.is_integer() or partial.rational < 0:
            return None
        out.append(int(partial.rational))
    last = partial + delta.coords[-1]
    if last != Scalar():
        return None
    return tuple(out)


def _weight_at(anchor: Weight, c: tuple[int, ...]) -> Weight:
    coords = []
    prev = 0
    for i, a in enumerate(anchor.coords):
        cur = c[i] if i < len(c) else 0
        coords.append(a - (cur - prev))
        prev = cur
    return Weight(tuple(coords))


def _merge(depth: int | None, *sources: dict[tuple[int, ...], int]) -> Terms:
    merged: dict[tuple[int, ...], int] = {}
    for source in sources:
        for key, coeff in source.items():
            merged[key] = merged.get(key, 0) + coeff
    items = []
    for key, coeff in merged.items():
        if coeff == 0:
            continue
        if depth is not None and sum(key) > depth:
            continue
        items.append((key, coeff))
    return tuple(sorted(items))


@dataclass(frozen=True, eq=False)
class FormalCharacter:
    """Truncated sum of exponentials below a fixed anchor weight."""

    anchor: Weight
    depth: int | None
    terms: Terms

    def __post_init__(self):
        if self.depth is not None and self.depth < 0:
            raise ValueError("depth must be nonnegative")
        width = self.anchor.n - 1
        for key, coeff in self.terms:
            if len(key) != width or any(c < 0 for c in key):
                raise ValueError(f"bad term key {key}")
            if coeff == 0:
                raise ValueError("zero coefficient stored")
            if self.depth is not None and sum(key) > self.depth:
                raise ValueError("term beyond depth")

    @classmethod
    def exponential(cls, weight: Weight, depth: int | None = None,
                    coeff: int = 1) -> "FormalCharacter":
        zero = (0,) * (weight.n - 1)
        terms = ((zero, coeff),) if coeff else ()
        return cls(weight, depth, terms)

    @classmethod
    def zero(cls, anchor: Weight, depth: int | None = None) -> "FormalCharacter":
        return cls(anchor, depth, ())

    @property
    def n(self) -> int:
        return self.anchor.n

    def is_zero(self) -> bool:
        return not self.terms

    def terms_as_weights(self) -> dict[Weight, int]:
        return {_weight_at(self.anchor, key): coeff for key, coeff in self.terms}

    def coeff(self, weight: Weight) -> int:
        c = _c_coords(self.anchor - weight)
        if c is None:
            return 0
        if self.depth is not None and sum(c) > self.depth:
            raise ValueError("weight lies beyond the truncation depth")
        return dict(self.terms).get(c, 0)

    def truncated(self, depth: int | None) -> "FormalCharacter":
        if depth is None:
            if self.depth is not None:
                raise ValueError("cannot extend a truncated character")
            return self
        if self.depth is not None and self.depth < depth:
            raise ValueError("cannot extend a truncated character")
        return FormalCharacter(self.anchor, depth, _merge(depth, dict(self.terms)))

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("rank mismatch")
        gap = _c_coords_signed(other.anchor - self.anchor)
        if gap is None:
            raise ValueError("anchors differ by a non-integral weight")
        shift_self = tuple(max(0, g) for g in gap)
        shift_other = tuple(u - g for u, g in zip(shift_self, gap))
        anchor = _weight_at(self.anchor, tuple(-u for u in shift_self))
        depth = _min_depth(_shifted_depth(self.depth, sum(shift_self)),
                           _shifted_depth(other.depth, sum(shift_other)))
        left = {_key_add(k, shift_self): c for k, c in self.terms}
        right = {_key_add(k, shift_other): c for k, c in other.terms}
        return FormalCharacter(anchor, depth, _merge(depth, left, right))

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return FormalCharacter(self.anchor, self.depth, ())
            terms = tuple((k, c * other) for k, c in self.terms)
            return FormalCharacter(self.anchor, self.depth, terms)
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("rank mismatch")
        anchor = self.anchor + other.anchor
        depth = _min_depth(self.depth, other.depth)
        out: dict[tuple[int, ...], int] = {}
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                key = _key_add(k1, k2)
                if depth is not None and sum(key) > depth:
                    continue
                out[key] = out.get(key, 0) + c1 * c2
        return FormalCharacter(anchor, depth, _merge(depth, out))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        if self.n != other.n or self.depth != other.depth:
            return False
        return self.terms_as_weights() == other.terms_as_weights()

    def text_lines(self) -> list[str]:
        by_weight = self.terms_as_weights()
        rows = sorted((w.text(), c) for w, c in by_weight.items())
        return [f"{text} {coeff}" for text, coeff in rows]


def _key_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _min_depth(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _shifted_depth(depth: int | None, shift: int) -> int | None:
    return None if depth is None else depth + shift


def _c_coords_signed(delta: Weight) -> tuple[int, ...] | None:
    """Like _c_coords but allows negative partial sums."""
    partial = Scalar()
    out = []
    for coord in delta.coords[:-1]:
        if not coord.is_integer():
            return None
        partial = partial + coord
        if not partial.is_integer():
            return None
        out.append(int(partial.rational))
    if partial + delta.coords[-1] != Scalar():
        return None
    return tuple(out)


def _geometric_factor(alpha: Root, n: int, depth: int) -> FormalCharacter:
    """(1 + e^{-alpha}) / (1 - e^{-alpha}) = 1 + 2 e^{-alpha} + 2 e^{-2 alpha} + ...

    truncated at the given depth, anchored at the zero weight.
    """
    unit = tuple(1 if alpha.i <= k + 1 < alpha.j else 0 for k in range(n - 1))
    height = sum(unit)
    terms: dict[tuple[int, ...], int] = {(0,) * (n - 1): 1}
    k = 1
    while k * height <= depth:
        terms[tuple(k * u for u in unit)] = 2
        k += 1
    zero = Weight(tuple(Scalar() for _ in range(n)))
    return FormalCharacter(zero, depth, _merge(depth, terms))


def verma_character(weight: Weight, depth: int) -> FormalCharacter:
    """Character of the Verma module with the given highest weight.

    The top coefficient is 2^(ceil(z/2)) with z the number of nonzero
    coordinates, and every positive root contributes a geometric factor
    1 + 2q + 2q^2 + ... in q = e^{-root}.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    nonzero, _ = ell_delta(weight)
    char = FormalCharacter.exponential(weight, depth, 2 ** ((nonzero + 1) // 2))
    for alpha in positive_roots(weight.n):
        char = char * _geometric_factor(alpha, weight.n, depth)
    return char


def _group_values(weight: Weight, ell: int) -> tuple[tuple[Scalar, ...], tuple[Scalar, ...]]:
    return weight.coords[:ell], weight.coords[ell:]


def _validate_dominant(weight: Weight, ell: int) -> None:
    if not 0 <= ell <= weight.n:
        raise ValueError(f"ell must lie in [0, {weight.n}]")
    for group in _group_values(weight, ell):
        for a, b in zip(group, group[1:]):
            diff = a - b
            if not diff.is_integer():
                raise ValueError("within-group coordinates must differ by integers")
            if diff.rational <= 0:
                raise ValueError("within-group coordinates must strictly decrease")


def _validate_group_typical(weight: Weight, ell: int) -> None:
    for group in _group_values(weight, ell):
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                if group[i] + group[j] == Scalar():
                    raise ValueError("within-group atypical pair")


@lru_cache(maxsize=None)
def _group_poly(a: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Symmetrized group factor as a polynomial in the group's variables.

    a is the strictly decreasing tuple of integer offsets from the group's
    smallest coordinate (so a ends in 0).  Expanding the product of
    (x_i + x_j) over pairs into monomial choices turns each summand into a
    signed Schur polynomial after straightening the alternant index.
    """
    m = len(a)
    if m == 0:
        return (((), 1),)
    delta = tuple(range(m - 1, -1, -1))
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    total: dict[tuple[int, ...], int] = {}
    for choice in product(*pairs):
        u = list(a)
        for idx in choice:
            u[idx] += 1
        settled = straighten(tuple(u))
        if settled is None:
            continue
        sign, ordered = settled
        index = PartitionIndex(
            tuple(x - d for x, d in zip(ordered.padded(), delta)), m)
        total = poly_add(total, poly_scale(schur_jt(index), sign))
    return tuple(sorted(total.items()))


def levi_typical_character(weight: Weight, ell: int) -> FormalCharacter:
    """Exact character of the typical irreducible over the two-group Levi.

    Rejects weights that are not strictly decreasing within each group and
    weights with a within-group atypical pair; the result is a polynomial
    (depth None) with top coefficient 2^(ceil(n/2)).
    """
    _validate_dominant(weight, ell)
    _validate_group_typical(weight, ell)
    n = weight.n
    polys = []
    bases = []
    for group in _group_values(weight, ell):
        if group:
            base = group[-1]
            offsets = tuple(int((v - base).rational) for v in group)
        else:
            base = Scalar()
            offsets = ()
        bases.append(base)
        polys.append(_group_poly(offsets))
    prefactor = 2 ** ((n + 1) // 2)
    terms: dict[tuple[int, ...], int] = {}
    for exp1, c1 in polys[0]:
        for exp2, c2 in polys[1]:
            coords = tuple(bases[0] + e for e in exp1) + tuple(bases[1] + e for e in exp2)
            mu = Weight(coords)
            key = _c_coords(weight - mu)
            if key is None:
                raise AssertionError("group polynomial escaped the cone")
            terms[key] = terms.get(key, 0) + prefactor * c1 * c2
    return FormalCharacter(weight, None, _merge(None, terms))


def parabolic_verma_character(weight: Weight, ell: int, depth: int) -> FormalCharacter:
    """Character of the parabolic Verma module induced from the Levi typical.

    Each cross pair (i <= ell < j) contributes a geometric factor
    1 + 2q + 2q^2 + ... in q = e^{-(e_i - e_j)}.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    char = levi_typical_character(weight, ell).truncated(depth)
    for i in range(1, ell + 1):
        for j in range(ell + 1, weight.n + 1):
            char = char * _geometric_factor(Root(i, j), weight.n, depth)
    return char


def arrow_a(source: Weight, target: Weight, a: int, s: Scalar, ell: int) -> bool:
    """True when target = source + e_i raises a coordinate matching label a.

    For i <= ell the raised coordinate must equal a + s before the move; for
    i > ell it must equal -a - 1 - s.  Both weights are assumed dominant.
    """
    if source.n != target.n:
        raise ValueError("rank mismatch")
    moved = [i for i in range(1, source.n + 1) if source[i] != target[i]]
    if len(moved) != 1:
        return False
    i = moved[0]
    if target[i] - source[i] != Scalar(1):
        return False
    if i <= ell:
        return source[i] == s + a
    return source[i] == -(s + a + 1)


def _is_group_dominant(weight: Weight, ell: int) -> bool:
    for group in _group_values(weight, ell):
        for x, y in zip(group, group[1:]):
            diff = x - y
            if not diff.is_integer() or diff.rational <= 0:
                return False
    return True


def _raising_candidates(weight: Weight, ell: int, a: int, s: Scalar) -> list[Weight]:
    out = []
    for i in range(1, weight.n + 1):
        want = s + a if i <= ell else -(s + a + 1)
        if weight[i] != want:
            continue
        mu = weight.replace(i, weight[i] + 1)
        if _is_group_dominant(mu, ell):
            out.append(mu)
    return out


def _lowering_candidates(weight: Weight, ell: int, a: int, s: Scalar) -> list[Weight]:
    out = []
    for i in range(1, weight.n + 1):
        want = s + a + 1 if i <= ell else -(s + a)
        if weight[i] != want:
            continue
        mu = weight.replace(i, weight[i] - 1)
        if _is_group_dominant(mu, ell):
            out.append(mu)
    return out


def translate_char(kind: str, a: int, weight: Weight, s: Scalar, ell: int,
                   depth: int) -> FormalCharacter:
    """Character of the translation functor applied to a parabolic Verma.

    kind "F" lowers the wt label (candidates raise one coordinate of the
    weight); kind "E" raises it.  An empty candidate set gives the zero
    character.
    """
    if kind not in ("E", "F"):
        raise ValueError("kind must be 'E' or 'F'")
    _validate_dominant(weight, ell)
    if kind == "F":
        candidates = _raising_candidates(weight, ell, a, s)
        rest = weight.replace(1, weight[1] + Scalar(1))
    else:
        candidates = _lowering_candidates(weight, ell, a, s)
        rest = weight.replace(weight.n, weight[weight.n] - Scalar(1))
    total = FormalCharacter.zero(rest, depth)
    for mu in candidates:
        total = total + 2 * parabolic_verma_character(mu, ell, depth)
    return total.truncated(depth)


def _natural_character(n: int, dual: bool) -> FormalCharacter:
    """Character of the natural representation (2 per weight e_i), or its dual."""
    coords = [Scalar() for _ in range(n)]
    if dual:
        anchor = Weight(tuple(coords[:-1]) + (Scalar(-1),))
        offsets = [Weight(tuple(Scalar(-1 if k == i else 0) for k in range(n)))
                   for i in range(n)]
    else:
        anchor = Weight((Scalar(1),) + tuple(coords[1:]))
        offsets = [Weight(tuple(Scalar(1 if k == i else 0) for k in range(n)))
                   for i in range(n)]
    terms: dict[tuple[int, ...], int] = {}
    for off in offsets:
        key = _c_coords(anchor - off)
        terms[key] = 2
    return FormalCharacter(anchor, None, _merge(None, terms))


def tensor_project_verify(weight: Weight, ell: int, a: int, kind: str,
                          depth: int, s: Scalar) -> bool:
    """Check the translation functor against tensoring and block projection.

    Three comparisons, all at the given depth: the product of the parabolic
    Verma character with the natural (or dual natural) character equals the
    sum over all dominant one-step candidates; the candidates selected by
    the shifted wt label are exactly the arrow candidates; and the selected
    block's character sum equals translate_char.
    """
    if kind not in ("E", "F"):
        raise ValueError("kind must be 'E' or 'F'")
    _validate_dominant(weight, ell)
    n = weight.n
    gamma = wt(weight, s, ell)
    step = WtVector.basis(a) - WtVector.basis(a + 1)
    label = (gamma - step) if kind == "F" else (gamma + step)

    candidates = []
    for i in range(1, n + 1):
        delta = Scalar(1) if kind == "F" else Scalar(-1)
        mu = weight.replace(i, weight[i] + delta)
        if _is_group_dominant(mu, ell):
            candidates.append(mu)

    lhs = parabolic_verma_character(weight, ell, depth) * _natural_character(
        n, dual=(kind == "E"))
    rhs = FormalCharacter.zero(lhs.anchor, depth)
    for mu in candidates:
        rhs = rhs + 2 * parabolic_verma_character(mu, ell, depth)
    ok_product = lhs.truncated(depth) == rhs.truncated(depth)

    selected = [mu for mu in candidates if wt(mu, s, ell) == label]
    if kind == "F":
        arrows = [mu for mu in candidates if arrow_a(weight, mu, a, s, ell)]
    else:
        arrows = [mu for mu in candidates if arrow_a(mu, weight, a, s, ell)]
    ok_selection = set(selected) == set(arrows)

    block = FormalCharacter.zero(lhs.anchor, depth)
    for mu in selected:
        block = block + 2 * parabolic_verma_character(mu, ell, depth)
    expected = translate_char(kind, a, weight, s, ell, depth)
    ok_block = block.truncated(depth) == expected.truncated(depth)

    return ok_product and ok_selection and ok_block
