from itertools import permutations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qblocks.blockone import (
    IDENTITY,
    PARITY_SHIFT,
    BlockChart,
    GlWeight,
    block_chart,
    chart_to_json,
    from_gl,
    gl_atypicality,
    gl_linked,
    gl_rho,
    gl_to_json,
    gl_wt,
    lambda_minus,
    lambda_plus,
    pi_split,
    tau_parity,
    to_gl,
)
from qblocks.linkage import WtVector, atypicality, linked_approx, linked_sim, wt
from qblocks.scalars import Scalar
from qblocks.weights import Root, Weight, is_dominant

S = Scalar.symbol("s")


# oracle: find the neighbour by trying every coordinate permutation instead
# of trusting the within-group distinctness shortcut


def oracle_neighbour(weight, s, ell, direction):
    pairs = [
        (p, q)
        for p in range(1, ell + 1)
        for q in range(ell + 1, weight.n + 1)
        if weight[p] + weight[q] == Scalar()
    ]
    assert len(pairs) == 1
    alpha = Root(*pairs[0]).as_weight(weight.n)
    for k in range(1, weight.n + 1):
        moved = weight + direction * k * alpha
        for perm in permutations(moved.coords):
            candidate = Weight(perm)
            if is_dominant(candidate, s, ell):
                return candidate
    raise AssertionError("oracle found no dominant rearrangement")


def one_pair_weights(draw, max_n=4, span=3):
    n = draw(st.integers(2, max_n))
    ell = draw(st.integers(1, n - 1))
    cs = sorted(draw(st.sets(st.integers(-span, span), min_size=ell, max_size=ell)),
                reverse=True)
    ds = sorted(
        draw(st.sets(st.integers(-span, span), min_size=n - ell, max_size=n - ell)),
        reverse=True,
    )
    matches = len(set(cs) & {-d for d in ds})
    assume(matches == 1)
    return Weight(tuple(S + c for c in cs) + tuple(-S + d for d in ds)), ell


def test_lower_neighbour_rank_two():
    assert lambda_minus(Weight((S, -S)), S, 1) == Weight((S - 1, -S + 1))


def test_lower_neighbour_collision():
    out = lambda_minus(Weight((S, S - 1, -S)), S, 2)
    assert out == Weight((S - 1, S - 2, -S + 2))


def test_lower_neighbour_immediate():
    out = lambda_minus(Weight((S + 1, S, -S)), S, 2)
    assert out == Weight((S + 1, S - 1, -S + 1))


def test_upper_neighbour_examples():
    assert lambda_plus(Weight((S - 1, -S + 1)), S, 1) == Weight((S, -S))
    assert lambda_plus(Weight((S - 1, S - 2, -S + 2)), S, 2) == Weight((S, S - 1, -S))


def test_neighbour_rejects_other_atypicality():
    with pytest.raises(ValueError):
        lambda_minus(Weight((S + 5, -S)), S, 1)
    with pytest.raises(ValueError):
        lambda_minus(Weight((S, -S + 3)), S, 1)
    with pytest.raises(ValueError):
        lambda_minus(Weight((-S, S)), S, 1)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_neighbours_match_permutation_oracle(data):
    weight, ell = one_pair_weights(data.draw)
    assert lambda_minus(weight, S, ell) == oracle_neighbour(weight, S, ell, -1)
    assert lambda_plus(weight, S, ell) == oracle_neighbour(weight, S, ell, +1)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_neighbours_are_mutually_inverse(data):
    weight, ell = one_pair_weights(data.draw)
    down = lambda_minus(weight, S, ell)
    assert lambda_plus(down, S, ell) == weight
    up = lambda_plus(weight, S, ell)
    assert lambda_minus(up, S, ell) == weight
    assert is_dominant(down, S, ell) and is_dominant(up, S, ell)
    assert atypicality(down) == 1 and atypicality(up) == 1


def test_chart_rank_two_is_the_alpha_line():
    lam = Weight((S, -S))
    alpha = Root(1, 2).as_weight(2)
    chart = block_chart(lam, S, 1, 2)
    for i in range(-2, 3):
        expect = lam + i * alpha if i >= 0 else lam - (-i) * alpha
        assert chart.weight_at(i) == expect
    assert chart.verma_flags == (
        (1, 0, 0, 0, 0),
        (1, 1, 0, 0, 0),
        (0, 1, 1, 0, 0),
        (0, 0, 1, 1, 0),
        (0, 0, 0, 1, 1),
    )
    assert chart.cartan[2] == (0, 1, 2, 1, 0)
    assert chart.edges == ((-2, -1), (-1, 0), (0, 1), (1, 2))
    assert chart.boundary == (-2, 2)


def test_chart_degenerate_window():
    chart = block_chart(Weight((S, -S)), S, 1, 0)
    assert chart.weights == (Weight((S, -S)),)
    assert chart.verma_flags == ((1,),)
    assert chart.cartan == ((1,),)
    assert chart.edges == ()
    assert chart.boundary == (0,)


def test_chart_collision_family():
    chart = block_chart(Weight((S, S - 1, -S)), S, 2, 1)
    assert chart.weights == (
        Weight((S - 1, S - 2, -S + 2)),
        Weight((S, S - 1, -S)),
        Weight((S + 1, S - 1, -S - 1)),
    )


def test_chart_hom_dims():
    chart = block_chart(Weight((S, -S)), S, 1, 3)
    assert chart.hom_dim(0, 0) == 2
    assert chart.hom_dim(0, 1) == 1
    assert chart.hom_dim(1, 0) == 1
    assert chart.hom_dim(0, 2) == 0
    with pytest.raises(ValueError):
        chart.hom_dim(0, 4)


@given(st.data())
@settings(max_examples=25, deadline=None)
def test_chart_invariants(data):
    weight, ell = one_pair_weights(data.draw, max_n=3, span=2)
    window = data.draw(st.integers(0, 2))
    chart = block_chart(weight, S, ell, window)
    size = 2 * window + 1

    gram = tuple(
        tuple(
            sum(chart.verma_flags[r][i] * chart.verma_flags[r][j] for r in range(size))
            for j in range(size)
        )
        for i in range(size)
    )
    assert chart.cartan == gram
    for i in range(1, size - 1):
        row = chart.cartan[i]
        assert row[i - 1 : i + 2] == (1, 2, 1)
        assert all(row[j] == 0 for j in range(size) if abs(j - i) > 1)
    for i in range(-window, window):
        assert lambda_plus(chart.weight_at(i), S, ell) == chart.weight_at(i + 1)
        assert lambda_minus(chart.weight_at(i + 1), S, ell) == chart.weight_at(i)
        assert linked_approx(chart.weight_at(i), chart.weight_at(i + 1)) is not None


def test_chart_json_shape():
    chart = block_chart(Weight((S, -S)), S, 1, 1)
    dumped = chart_to_json(chart)
    assert dumped["window"] == 1
    assert dumped["D"] == [[1, 0, 0], [1, 1, 0], [0, 1, 1]]
    assert dumped["C"] == [[2, 1, 0], [1, 2, 1], [0, 1, 1]]
    assert dumped["edges"] == [[-1, 0], [0, 1]]
    assert dumped["boundary"] == [-1, 1]
    assert len(dumped["weights"]) == 3


def test_parity_split_rule():
    assert pi_split(2)
    assert not pi_split(3)
    assert pi_split(6)
    with pytest.raises(ValueError):
        pi_split(0)


def test_duality_twist_parity():
    assert tau_parity(2) == PARITY_SHIFT
    assert tau_parity(4) == IDENTITY
    assert tau_parity(6) == PARITY_SHIFT
    for bad in (1, 3, 0):
        with pytest.raises(ValueError):
            tau_parity(bad)


def test_gl_rho():
    assert gl_rho(1, 2) == (-1, 1)
    assert gl_rho(2, 3) == (-2, -1, 1)


def test_to_gl_examples():
    assert to_gl(Weight((S, -S)), S, 1) == GlWeight(1, (1, -1))
    assert to_gl(Weight((S + 1, -S)), S, 1) == GlWeight(1, (2, -1))


def test_to_gl_rejects_non_member():
    pi = Scalar.symbol("pi")
    with pytest.raises(ValueError):
        to_gl(Weight((pi, -S)), S, 1)


@given(st.data())
@settings(max_examples=50, deadline=None)
def test_gl_roundtrip_and_transport(data):
    n = data.draw(st.integers(1, 5))
    ell = data.draw(st.integers(0, n))
    cs = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
    weight = Weight(
        tuple(S + c for c in cs[:ell]) + tuple(-S + c for c in cs[ell:])
    )
    nu = to_gl(weight, S, ell)
    assert from_gl(nu, S) == weight
    assert to_gl(from_gl(nu, S), S, nu.ell) == nu
    assert gl_wt(nu) == wt(weight, S, ell)
    assert gl_atypicality(nu) == atypicality(weight)


def test_gl_wt_example():
    assert gl_wt(GlWeight(1, (1, -1))) == WtVector(())


def test_gl_linked_examples():
    nu = GlWeight(1, (1, -1))
    assert gl_linked(nu, nu)
    assert gl_linked(nu, GlWeight(1, (2, -2)))
    assert not gl_linked(nu, GlWeight(1, (5, -1)))
    with pytest.raises(ValueError):
        gl_linked(nu, GlWeight(2, (1, -1)))


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_gl_linkage_transport(data):
    n = data.draw(st.integers(2, 4))
    ell = data.draw(st.integers(1, n - 1))
    cs = data.draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    ds = data.draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    a = Weight(tuple(S + c for c in cs[:ell]) + tuple(-S + c for c in cs[ell:]))
    b = Weight(tuple(S + d for d in ds[:ell]) + tuple(-S + d for d in ds[ell:]))
    assert linked_sim(a, b) == gl_linked(to_gl(a, S, ell), to_gl(b, S, ell))


def test_gl_atypicality_examples():
    assert gl_atypicality(GlWeight(1, (1, -1))) == 1
    assert gl_atypicality(GlWeight(1, (5, -1))) == 0


def test_gl_json():
    assert gl_to_json(GlWeight(1, (2, -1))) == {"ell": 1, "coords": [2, -1]}


def test_gl_weight_validation():
    with pytest.raises(ValueError):
        GlWeight(3, (1, -1))
    with pytest.raises(ValueError):
        GlWeight(1, (1, Scalar(1)))
