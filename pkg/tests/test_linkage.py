from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qblocks.linkage import (
    LinkageWitness,
    WtVector,
    atypicality,
    integer_classes,
    linked_approx,
    linked_sim,
    same_central_char,
    witness_from_json,
    witness_to_json,
    wt,
)
from qblocks.scalars import Scalar
from qblocks.weights import Root, Weight

PI = Scalar.symbol("pi")
S = Scalar.symbol("s")
W = Weight.of


# -- independent oracles ----------------------------------------------------

def zero_sum_edges(w):
    return [(i, j) for i, j in combinations(range(1, w.n + 1), 2)
            if not (w[i] + w[j])]


def all_matchings(edges):
    yield ()
    for size in range(1, len(edges) + 1):
        for combo in combinations(edges, size):
            used = set()
            if all(not ({i, j} & used or used.update({i, j})) for i, j in combo):
                yield combo


def oracle_atypicality(w):
    return max(len(m) for m in all_matchings(zero_sum_edges(w)))


def oracle_chi_witness(a, b):
    """Brute-force witness for chi-equality: disjoint zero-sum pairs of a,
    arbitrary scalar shifts forced by the values of b, then any permutation
    (multiset equality).  Returns a LinkageWitness or None."""
    targets = set(b.coords)
    for matching in all_matchings(zero_sum_edges(a)):
        k_lists = [[a[i] - m for m in sorted(targets, key=lambda s: s.text())]
                   for i, _ in matching]
        for ks in product(*k_lists):
            shifted = a
            for (i, j), k in zip(matching, ks):
                shifted = shifted.replace(i, a[i] - k).replace(j, a[j] + k)
            if Counter(shifted.coords) == Counter(b.coords):
                perm = [0] * a.n
                free = list(range(1, a.n + 1))
                for pos in range(1, a.n + 1):
                    for t in free:
                        if b[t] == shifted[pos]:
                            perm[pos - 1] = t
                            free.remove(t)
                            break
                pairs = tuple((Root(i, j), k)
                              for (i, j), k in zip(matching, ks))
                return LinkageWitness(tuple(perm), pairs)
    return None


def oracle_linked_approx(a, b):
    """Exhaustive search with the permutation ranging over all of W_lambda
    and integer shifts bounded by max |integer difference| + n."""
    classes = integer_classes(a)
    bound = a.n + max(
        (abs(int((x - y).rational)) for x in b.coords for y in a.coords
         if (x - y).is_integer()), default=0)
    for matching in all_matchings(zero_sum_edges(a)):
        for ks in product(range(-bound, bound + 1), repeat=len(matching)):
            shifted = a
            for (i, j), k in zip(matching, ks):
                shifted = shifted.replace(i, a[i] - k).replace(j, a[j] + k)
            for images in product(*(permutations(g) for g in classes)):
                perm = [0] * a.n
                for group, image in zip(classes, images):
                    for pos, t in zip(group, image):
                        perm[pos - 1] = t
                w = LinkageWitness(tuple(perm), ())
                if w.replay(shifted) == b:
                    return True
    return False


# -- strategies --------------------------------------------------------------

def linky_scalars():
    base = st.integers(min_value=-2, max_value=2).map(Scalar)
    sym = st.builds(lambda q, c: Scalar(q, {"pi": Fraction(c)}),
                    st.integers(min_value=-1, max_value=1).map(Fraction),
                    st.sampled_from([-1, 1]))
    return st.one_of(base, sym)


def linky_weights(max_n=4):
    return st.lists(linky_scalars(), min_size=1, max_size=max_n).map(
        lambda cs: Weight(tuple(cs)))


def family_weights(n, ell, spread=3):
    ints = st.integers(min_value=-spread, max_value=spread)
    return st.tuples(*([ints] * n)).map(lambda ks: Weight(tuple(
        S + k if i < ell else -S + k for i, k in enumerate(ks))))


# -- atypicality --------------------------------------------------------------

def test_atypicality_examples():
    assert atypicality(W(1, -1)) == 1
    assert atypicality(W(PI, -PI, -PI)) == 1
    assert atypicality(W(0, 0, 0)) == 1
    assert atypicality(W(1, 2)) == 0
    assert atypicality(W(1, -1, 2, -2)) == 2
    assert atypicality(W(0, 0, 0, 0)) == 2


@given(linky_weights(max_n=6))
def test_atypicality_matches_brute_force(w):
    assert atypicality(w) == oracle_atypicality(w)


# -- central characters -------------------------------------------------------

def test_same_central_char_examples():
    assert same_central_char(W(1, -1, 3), W(3, 5, -5))
    assert not same_central_char(W(1, 0), W(2, 0))
    w = W(PI, "1/5", -3)
    assert same_central_char(w, w)
    with pytest.raises(ValueError):
        same_central_char(W(1), W(1, 2))


def test_chi_oracle_agrees_on_small_grid():
    values = [Scalar(k) for k in range(-2, 3)]
    grid = [Weight((x, y)) for x in values for y in values]
    for a in grid:
        for b in grid:
            witness = oracle_chi_witness(a, b)
            assert same_central_char(a, b) == (witness is not None)
            if witness is not None:
                witness.check_source(a)
                assert witness.replay(a) == b


@given(linky_weights(), linky_weights())
def test_chi_oracle_agrees_randomized(a, b):
    if a.n != b.n:
        return
    witness = oracle_chi_witness(a, b)
    assert same_central_char(a, b) == (witness is not None)
    if witness is not None:
        assert witness.replay(a) == b


# -- linked_sim ---------------------------------------------------------------

def test_linked_sim_examples():
    assert linked_sim(W(1, -1), W(2, -2))
    assert linked_sim(W(1, -1, 3), W(3, 5, -5))
    assert not linked_sim(W(S, -S), W(S + Fraction(1, 2), -S - Fraction(1, 2)))
    assert not linked_sim(W(1, -1), W(2, -1))


# -- linked_approx ------------------------------------------------------------

def test_linked_approx_examples():
    witness = linked_approx(W(S, -S), W(S + 1, -S - 1))
    assert witness is not None
    assert witness.w == (1, 2)
    assert witness.pairs == ((Root(1, 2), Scalar(-1)),)

    w = W(PI, 2, -PI)
    witness = linked_approx(w, w)
    assert witness == LinkageWitness((1, 2, 3), ())

    witness = linked_approx(W(1, 2), W(2, 1))
    assert witness == LinkageWitness((2, 1), ())


def test_linked_approx_deterministic_k_example():
    witness = linked_approx(W(1, -1, 3), W(3, 5, -5))
    assert witness is not None
    assert witness.pairs == ((Root(1, 2), Scalar(-4)),)
    assert witness.w == (2, 3, 1)
    assert witness.replay(W(1, -1, 3)) == W(3, 5, -5)


def test_linked_approx_absent():
    assert linked_approx(W(1, 0), W(2, 0)) is None
    assert linked_approx(W(S, -S), W(S, -S - 1)) is None


@given(linky_weights(max_n=3), linky_weights(max_n=3))
@settings(max_examples=60, deadline=None)
def test_linked_approx_matches_exhaustive_search(a, b):
    if a.n != b.n:
        return
    witness = linked_approx(a, b)
    assert (witness is not None) == oracle_linked_approx(a, b)


@given(linky_weights(), linky_weights())
def test_linked_approx_witness_contract(a, b):
    if a.n != b.n:
        return
    witness = linked_approx(a, b)
    if witness is None:
        return
    witness.check_source(a)
    assert witness.replay(a) == b
    assert linked_sim(a, b)
    classes = {pos: tuple(g) for g in integer_classes(a) for pos in g}
    for pos, image in enumerate(witness.w, start=1):
        assert image in classes[pos]
    for _, k in witness.pairs:
        assert k.is_integer()


@given(st.integers(min_value=2, max_value=5), st.data())
@settings(max_examples=80, deadline=None)
def test_family_linkage_equivalences(n, data):
    ell = data.draw(st.integers(min_value=1, max_value=n - 1))
    a = data.draw(family_weights(n, ell))
    b = data.draw(family_weights(n, ell))
    sim = linked_sim(a, b)
    diff_ok = all((x - y).is_integer() for x, y in zip(b.coords, a.coords)) \
        and not sum((x - y).rational for x, y in zip(b.coords, a.coords))
    assert sim == ((wt(a, S, ell) == wt(b, S, ell)) and diff_ok)
    assert sim == (linked_approx(a, b) is not None)


# -- wt -----------------------------------------------------------------------

def test_wt_examples():
    assert wt(W(PI + 1, PI, -PI), PI, 2) == WtVector.basis(1)
    assert wt(W(S, -S), S, 1) == WtVector()
    assert wt(W(S + 1, -S), S, 1) == WtVector.basis(1) - WtVector.basis(0)


def test_wt_rejects_outsiders():
    with pytest.raises(ValueError):
        wt(W(PI, 1), PI, 1)
    with pytest.raises(ValueError):
        wt(W(S, -S), S, 0)


def test_wt_vector_text():
    assert WtVector().text() == "0"
    assert (WtVector.basis(1) - WtVector.basis(0)).text() == "e(1)-e(0)"
    v = WtVector(((3, 2), (-1, -1)))
    assert v.text() == "2*e(3)-e(-1)"
    assert v.coeff(3) == 2 and v.coeff(0) == 0


# -- witness JSON -------------------------------------------------------------

def test_witness_json_round_trip():
    witness = LinkageWitness((2, 3, 1), ((Root(1, 2), Scalar(-4)),))
    obj = witness_to_json(witness)
    assert obj == {"w": [2, 3, 1], "pairs": [{"i": 1, "j": 2, "k": "-4"}]}
    assert witness_from_json(obj) == witness


def test_witness_validation():
    with pytest.raises(ValueError):
        LinkageWitness((1, 2, 3), ((Root(1, 2), Scalar(1)),
                                   (Root(2, 3), Scalar(1))))
    witness = LinkageWitness((1, 2), ((Root(1, 2), Scalar(1)),))
    with pytest.raises(ValueError):
        witness.check_source(W(1, 2))
