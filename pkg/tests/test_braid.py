import pytest
from hypothesis import given, settings, strategies as st

from rollercoaster import (
    BraidWord,
    ab_counts,
    closure_components,
    closure_gauss,
    dt_to_gauss,
    find_innermost_bigon,
    gauss_to_dt,
    min_warp,
    parse_braid,
    positive_unknotting,
    random_positive_braid_knot,
    reduce_to_base,
    remove_first_ascending_strand,
    smooth_bigon,
)
from rollercoaster.braid import permutation


def test_parse_braid_plain_and_generator_syntax():
    assert parse_braid("1 2 1").letters == ((1, 1), (2, 1), (1, 1))
    assert parse_braid("s1 s2^3").letters == ((1, 1), (2, 1), (2, 1), (2, 1))
    assert parse_braid("-1 2").letters == ((1, -1), (2, 1))
    assert parse_braid("s1^-2", strands=2).letters == ((1, -1), (1, -1))


def test_parse_braid_strand_inference_and_validation():
    assert parse_braid("1 2 1").strands == 3
    assert parse_braid("1", strands=4).strands == 4
    with pytest.raises(ValueError):
        parse_braid("3", strands=3)
    with pytest.raises(ValueError):
        parse_braid("0")


def test_permutation_and_components():
    word = parse_braid("1 1 1")
    assert permutation(word) == {1: 2, 2: 1}
    assert closure_components(word) == 1
    assert closure_components(parse_braid("1 1")) == 2
    assert closure_components(BraidWord(3, ())) == 3


def test_closure_gauss_trefoil():
    word = parse_braid("1 1 1")
    gauss, base = closure_gauss(word)
    assert gauss_to_dt(gauss).entries == (4, 6, 2)
    assert base.edge == 0 and base.forward


def test_ab_counts_frozen_values():
    assert ab_counts(parse_braid("1 1 1")) == (2, 1)
    assert ab_counts(parse_braid("1 1 1 1 1")) == (3, 2)
    assert ab_counts(parse_braid("1 2 1 2 1 2 1 2")) == (5, 3)
    assert ab_counts(BraidWord(1, ())) == (0, 0)


def test_positive_unknotting_values():
    assert positive_unknotting(parse_braid("1 1 1")) == 1
    assert positive_unknotting(parse_braid("1 1 1 1 1")) == 2
    assert positive_unknotting(parse_braid("1 2 1 2 1 2 1 2")) == 3
    with pytest.raises(ValueError):
        positive_unknotting(parse_braid("1 1"))
    with pytest.raises(ValueError):
        positive_unknotting(parse_braid("-1 -1 -1"))


def test_find_innermost_bigon_prefers_nested_pairs():
    # candidates at letters (0,5), (2,3), (3,4); the outer pair loses to
    # the leftmost pair strictly inside it
    word = parse_braid("1 2 1 1 1 2")
    bigon = find_innermost_bigon(word)
    assert (bigon.i, bigon.j) == (2, 3)
    assert find_innermost_bigon(parse_braid("1 2 1 2")).strands == (1, 2)
    assert find_innermost_bigon(parse_braid("1 2")) is None
    assert find_innermost_bigon(parse_braid("2 1")) is None


def test_smooth_bigon_identities():
    word = parse_braid("1 2 1 2")
    assert ab_counts(word) == (3, 1)
    bigon = find_innermost_bigon(word)
    assert (bigon.i, bigon.j) == (0, 3)
    smaller = smooth_bigon(word, bigon)
    assert str(smaller) == "2 1"
    assert ab_counts(smaller) == (2, 0)
    with pytest.raises(ValueError):
        smooth_bigon(word, type(bigon)(i=1, j=2, strands=(1, 3)))


def test_remove_strand_identities_on_base_words():
    word = parse_braid("1 2")  # bigon-free base word, 3 strands
    smaller, cert = remove_first_ascending_strand(word)
    assert str(smaller) == "1"
    assert cert.m == 0
    a, b = ab_counts(word)
    a2, b2 = ab_counts(smaller)
    assert (a2, b2) == (a - cert.m - 1, b - cert.m) == (1, 0)
    assert smaller.strands == word.strands - 1


def test_reduce_to_base_reaches_n_minus_1():
    word = parse_braid("1 2 1 2 1 2 1 2")
    base, steps = reduce_to_base(word)
    assert len(base.letters) == base.strands - 1
    assert ab_counts(base) == (base.strands - 1, 0)
    for step in steps:
        a, b = step.counts_before
        a2, b2 = step.counts_after
        if step.action == "smooth":
            assert (a2, b2) == (a - 1, b - 1)
        else:
            assert (a2, b2) == (a - step.detail.m - 1, b - step.detail.m)


def test_random_positive_braid_knot_is_deterministic():
    w1 = random_positive_braid_knot(6, 20, seed=7)
    w2 = random_positive_braid_knot(6, 20, seed=7)
    assert w1 == w2
    assert closure_components(w1) == 1
    assert w1.is_positive()


@st.composite
def positive_knot_words(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    extra = draw(st.lists(st.integers(min_value=1, max_value=n - 1), max_size=8))
    base = list(range(1, n))  # ensure the closure can be connected
    letters = draw(st.permutations(base + extra))
    word = BraidWord(n, tuple((i, 1) for i in letters))
    if closure_components(word) != 1:
        return None
    return word


@given(positive_knot_words())
@settings(max_examples=200)
def test_count_difference_is_strands_minus_one(word):
    if word is None:
        return
    a, b = ab_counts(word)
    assert a - b == word.strands - 1


@given(positive_knot_words())
@settings(max_examples=60, deadline=None)
def test_positive_unknotting_matches_min_warp(word):
    if word is None:
        return
    gauss, _ = closure_gauss(word)
    assert min_warp(gauss).degree == positive_unknotting(word)
