"""Atypicality, central characters, linkage relations and the wt label.

Central-character equality is decided by a cancellation invariant: walking
over the coordinate multiset, each pair of values (v, -v) cancels, zeros
cancel in pairs, and two weights are chi-equal exactly when the surviving
multisets agree.  The witness form of the same relation (permute after
subtracting multiples of mutually orthogonal roots whose bar pairing
vanishes) is produced by linked_approx for the finer relation, where the
permutation must respect integer-difference classes and the multiples must
be integers.

The witness search is complete despite the advertised bound: for a chosen
set of disjoint zero-sum pairs, any usable shift k on the pair (i, j) must
move coordinate i onto a value that mu actually takes inside the class of
i, so only finitely many forced candidates exist and they are all tried.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from qblocks.scalars import Scalar
from qblocks.weights import Root, Weight, bar_pairing, weyl_apply

__all__ = [
    "LinkageWitness",
    "WtVector",
    "atypicality",
    "same_central_char",
    "linked_sim",
    "linked_approx",
    "wt",
    "integer_classes",
    "witness_to_json",
    "witness_from_json",
]


@dataclass(frozen=True)
class LinkageWitness:
    """A pair (permutation, shifted zero-sum pairs) relating two weights.

    Replaying on the source weight means: subtract k * alpha for every
    listed (alpha, k), then permute coordinates by w.
    """

    w: tuple[int, ...]
    pairs: tuple[tuple[Root, Scalar], ...]

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(self.w))
        pairs = tuple((alpha, Scalar.coerce(k)) for alpha, k in self.pairs)
        used: set[int] = set()
        for alpha, _ in pairs:
            if alpha.i in used or alpha.j in used:
                raise ValueError("witness pairs share an index")
            used.update((alpha.i, alpha.j))
        object.__setattr__(self, "pairs", pairs)

    def replay(self, source: Weight) -> Weight:
        shifted = source
        for alpha, k in self.pairs:
            shifted = shifted - _scale_root(alpha, k, source.n)
        return weyl_apply(self.w, shifted)

    def check_source(self, source: Weight):
        """Every listed root must be a zero-sum pair of the source."""
        for alpha, _ in self.pairs:
            if bar_pairing(source, alpha):
                raise ValueError(
                    f"pair ({alpha.i},{alpha.j}) is not zero-sum on {source}")


def _scale_root(alpha: Root, k: Scalar, n: int) -> Weight:
    coords = [Scalar(0)] * n
    coords[alpha.i - 1] = k
    coords[alpha.j - 1] = -k
    return Weight(tuple(coords))


def atypicality(weight: Weight) -> int:
    """Size of a maximum set of disjoint zero-sum coordinate pairs.

    The pairing graph splits into one clique on the zero coordinates plus a
    complete bipartite piece between the positions of v and of -v for each
    value pair, so the maximum matching is a closed count.
    """
    counts = Counter(weight.coords)
    total = counts[Scalar(0)] // 2
    for value, count in counts.items():
        if not value:
            continue
        other = counts.get(-value, 0)
        if other and _first_of_pair(value):
            total += min(count, other)
    return total


def _first_of_pair(value: Scalar) -> bool:
    """Pick one representative of {v, -v} to avoid double counting."""
    if value.symbols:
        return value.symbols[0][1] > 0
    return value.rational > 0


def _residual(weight: Weight) -> Counter:
    counts = Counter(weight.coords)
    out: Counter = Counter()
    zero = Scalar(0)
    if counts.get(zero, 0) % 2:
        out[zero] = 1
    for value, count in counts.items():
        if not value:
            continue
        other = counts.get(-value, 0)
        if count > other:
            out[value] = count - other
    return out


def _check_rank(a: Weight, b: Weight):
    if a.n != b.n:
        raise ValueError(f"weights of different lengths: {a.n} vs {b.n}")


def same_central_char(a: Weight, b: Weight) -> bool:
    _check_rank(a, b)
    return _residual(a) == _residual(b)


def linked_sim(a: Weight, b: Weight) -> bool:
    """chi-equal and differing by an integer root-lattice element."""
    _check_rank(a, b)
    diff = b - a
    if any(not c.is_integer() for c in diff.coords):
        return False
    if sum(c.rational for c in diff.coords):
        return False
    return same_central_char(a, b)


def integer_classes(weight: Weight) -> list[list[int]]:
    """1-based index groups whose coordinates differ by integers."""
    groups: list[list[int]] = []
    for pos, coord in enumerate(weight.coords, start=1):
        for group in groups:
            if (coord - weight[group[0]]).is_integer():
                group.append(pos)
                break
        else:
            groups.append([pos])
    return groups


def _matchings(edges: list[tuple[int, int]]):
    """All sets of pairwise disjoint edges, smallest first, then lex."""
    yield ()
    for size in range(1, len(edges) + 1):
        for combo in combinations(edges, size):
            used: set[int] = set()
            ok = True
            for i, j in combo:
                if i in used or j in used:
                    ok = False
                    break
                used.update((i, j))
            if ok:
                yield combo


def linked_approx(a: Weight, b: Weight) -> LinkageWitness | None:
    """Witness for the shift-then-permute relation, or None.

    The permutation may move an index only within its integer-difference
    class and the shifts are integers on disjoint zero-sum pairs of the
    source.  The first witness in the deterministic search order is
    returned.
    """
    _check_rank(a, b)
    classes = integer_classes(a)
    class_of = {}
    for group in classes:
        for pos in group:
            class_of[pos] = tuple(group)

    # The permutation cannot move values between classes, so each class
    # must carry chi-compatible material; each candidate shift is forced
    # to land on a value b takes inside the same class.
    edges = [(i, j) for i, j in combinations(range(1, a.n + 1), 2)
             if not (a[i] + a[j])]

    for matching in _matchings(edges):
        candidate_lists = []
        for i, j in matching:
            seen: set[Scalar] = set()
            ks = []
            for t in class_of[i]:
                k = a[i] - b[t]
                if k.is_integer() and k not in seen:
                    seen.add(k)
                    ks.append(k.rational)
            if not ks:
                break
            candidate_lists.append(sorted(ks))
        else:
            for ks in _product_in_order(candidate_lists):
                shifted = a
                for (i, j), k in zip(matching, ks):
                    shifted = shifted - Root(i, j).as_weight(a.n) * k
                perm = _class_permutation(shifted, b, classes)
                if perm is not None:
                    pairs = tuple(
                        (Root(i, j), Scalar(k))
                        for (i, j), k in zip(matching, ks))
                    return LinkageWitness(perm, pairs)
    return None


def _product_in_order(lists):
    if not lists:
        yield ()
        return
    head, *rest = lists
    for k in head:
        for tail in _product_in_order(rest):
            yield (k,) + tail


def _class_permutation(shifted: Weight, target: Weight, classes) -> tuple[int, ...] | None:
    """Greedy class-respecting permutation sending shifted onto target."""
    perm = [0] * shifted.n
    for group in classes:
        free = list(group)
        for pos in group:
            for t in free:
                if target[t] == shifted[pos]:
                    perm[pos - 1] = t
                    free.remove(t)
                    break
            else:
                return None
    return tuple(perm)


@dataclass(frozen=True)
class WtVector:
    """Finite-support integer combination of basis elements eps_a, a in Z."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: dict[int, int] = {}
        for index, coeff in self.entries:
            merged[index] = merged.get(index, 0) + coeff
        object.__setattr__(
            self, "entries",
            tuple((a, merged[a]) for a in sorted(merged) if merged[a]))

    @classmethod
    def basis(cls, a: int) -> "WtVector":
        return cls(((a, 1),))

    def coeff(self, a: int) -> int:
        for index, value in self.entries:
            if index == a:
                return value
        return 0

    def __add__(self, other: "WtVector") -> "WtVector":
        return WtVector(self.entries + other.entries)

    def __neg__(self) -> "WtVector":
        return WtVector(tuple((a, -c) for a, c in self.entries))

    def __sub__(self, other: "WtVector") -> "WtVector":
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def text(self) -> str:
        if not self.entries:
            return "0"
        pieces = []
        for a, coeff in reversed(self.entries):
            sign = "-" if coeff < 0 else ("+" if pieces else "")
            mag = abs(coeff)
            term = f"e({a})" if mag == 1 else f"{mag}*e({a})"
            pieces.append(sign + term)
        return "".join(pieces)

    __str__ = text


def wt(weight: Weight, s: Scalar, ell: int) -> WtVector:
    """Block label: +eps at lambda_i - s for the first group, -eps at
    -(lambda_i + s) for the second."""
    s = Scalar.coerce(s)
    entries = []
    for pos, coord in enumerate(weight.coords, start=1):
        if pos <= ell:
            offset = coord - s
            sign = 1
        else:
            offset = -(coord + s)
            sign = -1
        if not offset.is_integer():
            raise ValueError(
                f"{weight} is not in the s={s} ell={ell} coordinate family")
        entries.append((int(offset.rational), sign))
    return WtVector(tuple(entries))


def witness_to_json(witness: LinkageWitness) -> dict:
    return {
        "w": list(witness.w),
        "pairs": [
            {"i": alpha.i, "j": alpha.j, "k": k.text()}
            for alpha, k in witness.pairs
        ],
    }


def witness_from_json(obj) -> LinkageWitness:
    pairs = tuple(
        (Root(p["i"], p["j"]), Scalar.parse(p["k"]))
        for p in obj.get("pairs", []))
    return LinkageWitness(tuple(obj["w"]), pairs)
