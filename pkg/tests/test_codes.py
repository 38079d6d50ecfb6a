import pytest
from hypothesis import given, strategies as st

from rollercoaster import (
    Basepoint,
    DTCode,
    FramingError,
    GaussCode,
    canonical_dt,
    dt_mirror,
    dt_to_gauss,
    gauss_to_dt,
    is_reduced,
    mirror,
    parse_dt,
    parse_gauss,
    reverse,
    rotate,
)
from rollercoaster.codes import format_dt, format_gauss, read_dt_lines

TREFOIL = DTCode((4, 6, 2))
FIG8 = DTCode((4, 6, 8, 2))


def test_parse_dt_bracketed_and_bare():
    assert parse_dt("[4, 6, 2]") == TREFOIL
    assert parse_dt("4 6 2") == TREFOIL
    assert parse_dt("-8,10,2,-12,6,4").entries == (-8, 10, 2, -12, 6, 4)


def test_parse_dt_rejects_bad_entries():
    with pytest.raises(ValueError, match="odd entry"):
        parse_dt("[4, 5, 2]")
    with pytest.raises(ValueError, match="cover"):
        parse_dt("[4, 8, 2]")
    with pytest.raises(ValueError, match="duplicate"):
        parse_dt("[4, -4, 2]")


def test_format_dt_round_trip():
    assert format_dt(TREFOIL) == "[4, 6, 2]"
    assert parse_dt(format_dt(FIG8)) == FIG8


def test_read_dt_lines_reports_line_numbers():
    codes = read_dt_lines(["# header", "[4, 6, 2]", "", "[4, 6, 8, 2]"])
    assert codes == [TREFOIL, FIG8]
    with pytest.raises(ValueError, match="line 2"):
        read_dt_lines(["[4, 6, 2]", "[4, 5, 2]"])


def test_dt_to_gauss_trefoil_passage_sequence():
    # crossing i owns odd label 2i-1; all-positive entries put every even
    # passage under
    gauss = dt_to_gauss(TREFOIL)
    assert gauss.passages == (
        (1, "O"), (3, "U"), (2, "O"), (1, "U"), (3, "O"), (2, "U")
    )


def test_dt_to_gauss_negative_entry_flips_even_passage():
    gauss = dt_to_gauss(DTCode((-4, -6, -2)))
    assert gauss.passages[0] == (1, "U")
    assert gauss.passages[1] == (3, "O")


def test_gauss_round_trip_on_catalog_style_codes():
    for text in ("[4, 6, 2]", "[-8, 10, 2, -12, 6, 4]", "[12, -14, 16, -2, 4, -6, 8, -10]"):
        code = parse_dt(text)
        assert gauss_to_dt(dt_to_gauss(code)) == code


def test_gauss_to_dt_rejects_same_parity_pairing():
    # a non-planar pairing where both passages of a crossing land on the
    # same parity has no DT form
    bad = GaussCode(((1, "O"), (2, "O"), (1, "U"), (2, "U")))
    with pytest.raises(FramingError):
        gauss_to_dt(bad)


def test_parse_gauss_positive_means_over():
    gauss = parse_gauss("1 -3 2 -1 3 -2")
    assert gauss.passages[0] == (1, "O")
    assert gauss.passages[1] == (3, "U")
    assert parse_gauss(format_gauss(gauss)) == gauss


def test_rotate_and_reverse_shift_passages():
    gauss = dt_to_gauss(TREFOIL)
    assert rotate(gauss, 1).passages[0] == gauss.passages[1]
    assert rotate(gauss, len(gauss.passages)) == gauss
    assert reverse(reverse(gauss)) == gauss


def test_mirror_swaps_roles():
    gauss = dt_to_gauss(TREFOIL)
    flipped = mirror(gauss)
    assert all(
        (i1 == i2 and r1 != r2)
        for (i1, r1), (i2, r2) in zip(gauss.passages, flipped.passages)
    )
    assert mirror(flipped) == gauss


def test_dt_mirror_negates_entries():
    assert dt_mirror(TREFOIL).entries == (-4, -6, -2)
    assert dt_mirror(dt_mirror(FIG8)) == FIG8


def test_canonical_dt_is_class_invariant():
    base = canonical_dt(TREFOIL)
    gauss = dt_to_gauss(TREFOIL)
    for k in range(6):
        assert canonical_dt(gauss_to_dt(rotate(gauss, k))) == base
        assert canonical_dt(gauss_to_dt(reverse(rotate(gauss, k)))) == base


def test_rotations_of_planar_codes_never_lose_framing():
    # paired passages of a realizable code sit at odd cyclic distance, so
    # every basepoint shift keeps one odd and one even label per crossing
    for text in ("[4, 6, 2]", "[4, 6, 8, 2]", "[-8, 10, 2, -12, 6, 4]"):
        gauss = dt_to_gauss(parse_dt(text))
        for k in range(len(gauss.passages)):
            gauss_to_dt(rotate(gauss, k))
            gauss_to_dt(reverse(rotate(gauss, k)))


def test_is_reduced_detects_kinks():
    assert is_reduced(dt_to_gauss(TREFOIL))
    # appending a crossing paired with adjacent labels 17, 18 is a kink
    kinked = dt_to_gauss(DTCode((10, 12, 14, 4, 16, 2, 6, 8, 18)))
    assert not is_reduced(kinked)
    assert not is_reduced(dt_to_gauss(DTCode((2,))))


def test_basepoint_str():
    assert str(Basepoint(0)) == "edge 0 forward"
    assert str(Basepoint(3, forward=False)) == "edge 3 backward"


@st.composite
def abstract_gauss(draw):
    c = draw(st.integers(min_value=1, max_value=6))
    slots = list(range(2 * c))
    order = draw(st.permutations(slots))
    passages = [None] * (2 * c)
    for ident in range(1, c + 1):
        first, second = order[2 * ident - 2], order[2 * ident - 1]
        over_first = draw(st.booleans())
        passages[first] = (ident, "O" if over_first else "U")
        passages[second] = (ident, "U" if over_first else "O")
    return GaussCode(tuple(passages))


@given(abstract_gauss())
def test_mirror_is_involution(gauss):
    assert mirror(mirror(gauss)) == gauss


@given(abstract_gauss(), st.integers(min_value=0, max_value=12))
def test_rotate_composes_modulo_length(gauss, k):
    n = len(gauss.passages)
    assert rotate(gauss, k).passages == rotate(gauss, k % n).passages


@given(abstract_gauss())
def test_reverse_is_involution(gauss):
    assert reverse(reverse(gauss)) == gauss
