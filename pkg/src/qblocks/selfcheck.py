"""Randomized oracle suites behind the selfcheck command.

Every suite re-derives a library answer by an independent route (brute
force, replay, or a textbook identity) on seeded random inputs, so a run
with a fixed seed is reproducible byte for byte.  The zigzag suite takes
the fault hook so a deliberately broken multiplication table can be shown
to fail with the offending relation named.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from .blockone import block_chart, from_gl, gl_atypicality, gl_wt, lambda_minus, lambda_plus, to_gl
from .characters import (
    levi_typical_character,
    parabolic_verma_character,
    tensor_project_verify,
    verma_character,
)
from .linkage import LinkageWitness, atypicality, linked_approx, same_central_char, wt
from .reduction import normalize_block, replay_moves
from .schur import PartitionIndex, pieri_expand, poly_add, poly_monomial, poly_mul, poly_zero, schur_jt, schur_tableaux
from .scalars import Scalar
from .weights import Root, Weight, bar_pairing, positive_roots, simple_root, star_action
from .zigzag import build, compare_with_chart

__all__ = ["SuiteResult", "SelfcheckReport", "run_selfcheck", "SUITE_NAMES"]

_PI = Scalar.symbol("pi")
_S = Scalar.symbol("s")

_MAX_SHOWN_FAILURES = 5


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class SelfcheckReport:
    seed: int
    cases: int
    suites: tuple[SuiteResult, ...]

    @property
    def ok(self) -> bool:
        return all(suite.ok for suite in self.suites)

    def text_lines(self) -> list[str]:
        lines = [f"selfcheck seed={self.seed} cases={self.cases}"]
        for suite in self.suites:
            if suite.ok:
                lines.append(f"pass {suite.name}: {suite.cases} cases")
                continue
            lines.append(
                f"FAIL {suite.name}: {len(suite.failures)} failures "
                f"in {suite.cases} cases")
            shown = suite.failures[:_MAX_SHOWN_FAILURES]
            lines.extend(f"  {message}" for message in shown)
            hidden = len(suite.failures) - len(shown)
            if hidden:
                lines.append(f"  ... {hidden} more")
        bad = sum(1 for suite in self.suites if not suite.ok)
        if bad:
            lines.append(f"result: FAIL ({bad} of {len(self.suites)} suites)")
        else:
            lines.append(f"result: ok ({len(self.suites)} suites)")
        return lines

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "cases": self.cases,
            "ok": self.ok,
            "suites": [
                {
                    "name": suite.name,
                    "cases": suite.cases,
                    "ok": suite.ok,
                    "failures": list(suite.failures),
                }
                for suite in self.suites
            ],
        }


def _mixed_scalar(rng: random.Random) -> Scalar:
    kind = rng.randrange(4)
    k = rng.randint(-2, 2)
    if kind == 0:
        return Scalar(k)
    if kind == 1:
        return Scalar(Fraction(2 * k + 1, 2))
    if kind == 2:
        return _PI + Scalar(k)
    return -_PI + Scalar(k)


def _mixed_weight(rng: random.Random, n_min: int, n_max: int) -> Weight:
    n = rng.randint(n_min, n_max)
    return Weight(tuple(_mixed_scalar(rng) for _ in range(n)))


def _distinct_offsets(rng: random.Random, count: int, span: int = 3) -> list[int]:
    values = rng.sample(range(-span, span + 1), count)
    values.sort(reverse=True)
    return values


def _family_weight(rng: random.Random, s: Scalar, n: int, ell: int,
                   dominant: bool) -> Weight:
    if dominant:
        left = _distinct_offsets(rng, ell)
        right = _distinct_offsets(rng, n - ell)
    else:
        left = [rng.randint(-3, 3) for _ in range(ell)]
        right = [rng.randint(-3, 3) for _ in range(n - ell)]
    coords = [s + Scalar(c) for c in left]
    coords.extend(Scalar(d) - s for d in right)
    return Weight(tuple(coords))


def _one_pair_weight(rng: random.Random, s: Scalar):
    """A dominant family weight with exactly one zero-sum cross pair."""
    while True:
        n = rng.randint(2, 4)
        ell = rng.randint(1, n - 1)
        weight = _family_weight(rng, s, n, ell, dominant=True)
        left = [weight[i] for i in range(1, ell + 1)]
        right = [weight[i] for i in range(ell + 1, n + 1)]
        crossings = sum(1 for a in left for b in right if not a + b)
        if crossings == 1:
            return weight, ell


def _root_step(alpha: Root, k, n: int) -> Weight:
    coords = [Scalar(0)] * n
    coords[alpha.i - 1] = Scalar.coerce(k)
    coords[alpha.j - 1] = -Scalar.coerce(k)
    return Weight(tuple(coords))


def _check_star(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        weight = _mixed_weight(rng, 2, 5)
        alpha = simple_root(rng.randint(1, weight.n - 1))
        image, flag = star_action(alpha, weight)
        atypical = not bar_pairing(weight, alpha)
        if (flag == "atypical") != atypical:
            failures.append(
                f"star flag {flag!r} disagrees with the pairing "
                f"on {weight.text()} at {alpha.text()}")
            continue
        if flag == "typical":
            back, _ = star_action(alpha, image)
            if back != weight:
                failures.append(
                    f"typical star at {alpha.text()} is not an involution "
                    f"on {weight.text()}")
    return failures


def _check_reduce(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        weight = _mixed_weight(rng, 1, 6)
        result = normalize_block(weight)
        if replay_moves(weight, result.moves) != result.reduced:
            failures.append(f"move replay diverges on {weight.text()}")
            continue
        again = normalize_block(result.reduced)
        if again.moves:
            failures.append(
                f"normal form of {weight.text()} is not a fixed point")
        elif again.levi != result.levi:
            failures.append(
                f"levi factorization unstable on {weight.text()}")
        if sum(block.size for block in result.levi) != weight.n:
            failures.append(f"levi sizes do not add up on {weight.text()}")
    return failures


def _max_matching(coords, used: frozenset) -> int:
    free = [i for i in range(len(coords)) if i not in used]
    if len(free) < 2:
        return 0
    first = free[0]
    best = _max_matching(coords, used | {first})
    for other in free[1:]:
        if not coords[first] + coords[other]:
            best = max(best, 1 + _max_matching(coords, used | {first, other}))
    return best


def _check_atypicality(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        weight = _mixed_weight(rng, 1, 6)
        expected = _max_matching(weight.coords, frozenset())
        got = atypicality(weight)
        if got != expected:
            failures.append(
                f"atypicality {got} != matching {expected} on {weight.text()}")
    return failures


def _leftover_multisets(coords) -> dict[int, set]:
    seen: dict[int, set] = {}

    def descend(avail: tuple[int, ...], removed: int):
        key = tuple(sorted(coords[i].text() for i in avail))
        bucket = seen.setdefault(removed, set())
        if key in bucket:
            return
        bucket.add(key)
        for x in range(len(avail)):
            for y in range(x + 1, len(avail)):
                if not coords[avail[x]] + coords[avail[y]]:
                    rest = avail[:x] + avail[x + 1:y] + avail[y + 1:]
                    descend(rest, removed + 1)

    descend(tuple(range(len(coords))), 0)
    return seen


def _central_oracle(a: Weight, b: Weight) -> bool:
    """Delete matched zero-sum pairs from both sides and compare leftovers.

    Shifting a zero-sum pair by any multiple of its root gives an arbitrary
    zero-sum pair, so equal central characters mean: some equinumerous pair
    deletions leave equal multisets.
    """
    left = _leftover_multisets(a.coords)
    right = _leftover_multisets(b.coords)
    return any(left[k] & right[k] for k in left if k in right)


def _check_central(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        n = rng.randint(1, 4)
        a = Weight(tuple(Scalar(rng.randint(-3, 3)) for _ in range(n)))
        if rng.random() < 0.5:
            b = Weight(tuple(Scalar(rng.randint(-3, 3)) for _ in range(n)))
        else:
            coords = list(a.coords)
            pairs = [(i, j) for i in range(n) for j in range(i + 1, n)
                     if not coords[i] + coords[j]]
            if pairs:
                i, j = rng.choice(pairs)
                k = Scalar(rng.randint(-3, 3))
                coords[i] = coords[i] - k
                coords[j] = coords[j] + k
            rng.shuffle(coords)
            b = Weight(tuple(coords))
        if same_central_char(a, b) != _central_oracle(a, b):
            failures.append(
                f"central character test disagrees with pair deletion "
                f"on {a.text()} vs {b.text()}")
    return failures


def _check_approx(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        weight, ell = _one_pair_weight(rng, _S)
        n = weight.n
        moved = weight
        pairs = []
        if rng.random() < 0.8:
            cross = [(p, q) for p in range(1, ell + 1)
                     for q in range(ell + 1, n + 1)
                     if not weight[p] + weight[q]]
            alpha = Root(*rng.choice(cross))
            k = Scalar(rng.randint(-2, 2))
            pairs = [(alpha, k)]
        left_perm = list(range(1, ell + 1))
        right_perm = list(range(ell + 1, n + 1))
        rng.shuffle(left_perm)
        rng.shuffle(right_perm)
        witness = LinkageWitness(tuple(left_perm + right_perm), tuple(pairs))
        target = witness.replay(weight)
        found = linked_approx(weight, target)
        if found is None:
            failures.append(
                f"no witness found from {weight.text()} to {target.text()}")
        elif found.replay(weight) != target:
            failures.append(
                f"witness replay misses the target from {weight.text()}")
    return failures


def _check_gl_transport(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        n = rng.randint(2, 5)
        ell = rng.randint(0, n)
        weight = _family_weight(rng, _S, n, ell, dominant=False)
        nu = to_gl(weight, _S, ell)
        if from_gl(nu, _S) != weight:
            failures.append(f"gl map does not invert on {weight.text()}")
            continue
        if gl_wt(nu) != wt(weight, _S, ell):
            failures.append(f"wt transport fails on {weight.text()}")
        if gl_atypicality(nu) != atypicality(weight):
            failures.append(f"atypicality transport fails on {weight.text()}")
    return failures


def _check_schur(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        m = rng.randint(1, 4)
        parts = sorted((rng.randint(0, 3) for _ in range(m)), reverse=True)
        while sum(parts) > 6:
            parts[0] -= 1
            parts.sort(reverse=True)
        index = PartitionIndex(tuple(parts), m)
        if schur_jt(index) != schur_tableaux(index):
            failures.append(f"determinant vs tableaux mismatch at {index}")
            continue
        if sum(parts) > 5:
            continue
        x_sum = poly_zero()
        for i in range(m):
            exps = [0] * m
            exps[i] = 1
            x_sum = poly_add(x_sum, poly_monomial(exps))
        lhs = poly_mul(schur_jt(index), x_sum)
        rhs = poly_zero()
        for nu in pieri_expand(index):
            rhs = poly_add(rhs, schur_jt(nu))
        if lhs != rhs:
            failures.append(f"box-adding identity fails at {index}")
    return failures


def _verma_oracle(weight: Weight, depth: int) -> dict[Weight, int]:
    n = weight.n
    nonzero = sum(1 for c in weight.coords if c)
    frontier = {(weight, 0): 2 ** ((nonzero + 1) // 2)}
    for alpha in positive_roots(n):
        step = alpha.j - alpha.i
        grown: dict[tuple[Weight, int], int] = {}
        for (anchor, height), coeff in frontier.items():
            for m in range((depth - height) // step + 1):
                key = (anchor - _root_step(alpha, m, n), height + m * step)
                grown[key] = grown.get(key, 0) + coeff * (2 if m else 1)
        frontier = grown
    collapsed: dict[Weight, int] = {}
    for (anchor, _), coeff in frontier.items():
        collapsed[anchor] = collapsed.get(anchor, 0) + coeff
    return collapsed


def _check_verma(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        n = rng.randint(1, 3)
        depth = rng.randint(0, 4)
        weight = Weight(tuple(Scalar(rng.randint(-3, 3)) for _ in range(n)))
        char = verma_character(weight, depth)
        if char.terms_as_weights() != _verma_oracle(weight, depth):
            failures.append(
                f"highest-weight character mismatch on {weight.text()} "
                f"depth {depth}")
    return failures


def _check_levi_positive(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        n = rng.randint(2, 4)
        ell = rng.randint(1, n - 1)
        weight = _family_weight(rng, _S, n, ell, dominant=True)
        top = 2 ** ((n + 1) // 2)
        char = levi_typical_character(weight, ell)
        terms = char.terms_as_weights()
        if any(coeff <= 0 for coeff in terms.values()):
            failures.append(f"nonpositive coefficient on {weight.text()}")
        if terms.get(weight) != top:
            failures.append(f"top coefficient is not {top} on {weight.text()}")
        depth = rng.randint(0, 2)
        induced = parabolic_verma_character(weight, ell, depth)
        if induced.coeff(weight) != top:
            failures.append(
                f"induced top coefficient is not {top} on {weight.text()}")
    return failures


def _check_translate(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        n = rng.choice((2, 3))
        ell = rng.randint(1, n - 1)
        weight = _family_weight(rng, _S, n, ell, dominant=True)
        a = rng.randint(-2, 2)
        kind = rng.choice(("E", "F"))
        depth = rng.randint(0, 2)
        if not tensor_project_verify(weight, ell, a, kind, depth, _S):
            failures.append(
                f"tensor identity fails for {kind} a={a} depth={depth} "
                f"on {weight.text()}")
    return failures


def _check_neighbours(rng: random.Random, cases: int) -> list[str]:
    failures = []
    for _ in range(cases):
        weight, ell = _one_pair_weight(rng, _S)
        lower = lambda_minus(weight, _S, ell)
        if lambda_plus(lower, _S, ell) != weight:
            failures.append(f"neighbour maps not inverse on {weight.text()}")
            continue
        window = rng.randint(1, 2)
        chart = block_chart(weight, _S, ell, window)
        flags = chart.verma_flags
        size = 2 * window + 1
        for i in range(size):
            for j in range(size):
                gram = sum(flags[r][i] * flags[r][j] for r in range(size))
                if chart.cartan[i][j] != gram:
                    failures.append(
                        f"gram identity fails at ({i},{j}) on {weight.text()}")
        for i in range(1, size - 1):
            row = chart.cartan[i]
            expected = tuple(
                2 if j == i else 1 if abs(j - i) == 1 else 0
                for j in range(size))
            if row != expected:
                failures.append(
                    f"interior row {i} is {row} on {weight.text()}")
    return failures


def _check_zigzag(rng: random.Random, cases: int,
                  fault: str | None) -> list[str]:
    window = rng.randint(1, 3)
    algebra = build(window, fault=fault)
    failures = list(algebra.relation_violations())
    if len(algebra.radical_series()) > 2:
        failures.append("radical cube does not vanish")
    for _ in range(cases):
        ids = [rng.choice(algebra.basis) for _ in range(3)]
        u, v, w = (algebra.basis_element(b) for b in ids)
        left = algebra.multiply(algebra.multiply(u, v), w)
        right = algebra.multiply(u, algebra.multiply(v, w))
        if left != right:
            failures.append(
                "associativity fails at "
                + " ".join(b.text() for b in ids))
    if fault is None:
        chart = block_chart(Weight((_S, -_S)), _S, 1, window)
        report = compare_with_chart(algebra, chart)
        failures.extend(
            f"chart comparison: {check.name}: {check.detail}"
            for check in report.checks if not check.passed)
    return failures


def _suite_registry(zigzag_fault: str | None):
    return (
        ("star-involution", _check_star),
        ("reduce-replay", _check_reduce),
        ("atypicality-matching", _check_atypicality),
        ("central-char-deletion", _check_central),
        ("approx-witness-replay", _check_approx),
        ("gl-transport", _check_gl_transport),
        ("schur-two-ways", _check_schur),
        ("verma-expansion", _check_verma),
        ("levi-positivity", _check_levi_positive),
        ("translate-identity", _check_translate),
        ("neighbour-inverse", _check_neighbours),
        ("zigzag-relations", partial(_check_zigzag, fault=zigzag_fault)),
    )


SUITE_NAMES = tuple(name for name, _ in _suite_registry(None))


def run_selfcheck(seed: int = 0, cases: int = 25,
                  zigzag_fault: str | None = None) -> SelfcheckReport:
    """Run every suite with its own stream seeded off the main seed.

    cases == 0 lists the suites without running anything (vacuous pass).
    The zigzag_fault hook exists for tests that want to watch a broken
    multiplication table get caught.
    """
    if cases < 0:
        raise ValueError("case count must be nonnegative")
    root = random.Random(seed)
    suites = []
    for name, check in _suite_registry(zigzag_fault):
        rng = random.Random(root.getrandbits(64))
        failures = () if cases == 0 else tuple(check(rng, cases))
        suites.append(SuiteResult(name, cases, failures))
    return SelfcheckReport(seed, cases, tuple(suites))
