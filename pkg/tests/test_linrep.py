"""Letter-matrix representations: fidelity to the census and the derivation."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hardimer.chdc import census, swap_word, words_of_length
from hardimer.derive import derive_blue_rep, derived_final, derived_initial, verify_rows
from hardimer.linrep import LinRep, blue_start_rep, census_rep, red_start_rep, rep_diff
from hardimer.poly import B3, ONE, R3, Y, Poly

words = st.text(alphabet="br", min_size=1, max_size=9)


def test_dimensions():
    blue = blue_start_rep()
    assert blue.dim == 19
    assert len(blue.initial) == len(blue.final) == 19
    assert census_rep().dim == 38


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        LinRep(2, (ONE,), ((ONE,),), ((ONE,),), (ONE,))


def test_blue_block_entries():
    blue = blue_start_rep()
    assert blue.mat_b[0][0] == ONE
    assert blue.mat_b[0][4] == B3
    assert blue.mat_b[0][14] == B3 * Y
    assert blue.mat_r[0][2] == R3
    assert blue.mat_r[0][6] == R3 * Y
    assert blue.initial[0] == ONE
    assert blue.initial[2] == -ONE
    assert blue.initial[9] == -(R3 * Y)
    assert blue.initial[10] == -R3
    assert blue.final[0] == blue.final[1] == blue.final[11] == ONE
    assert sum(1 for p in blue.final if p) == 3


def test_red_block_is_the_colour_mirror():
    blue = blue_start_rep()
    red = red_start_rep()
    for b_row, r_row in zip(blue.mat_b, red.mat_r):
        assert tuple(p.swap_colours() for p in b_row) == r_row
    for b_row, r_row in zip(blue.mat_r, red.mat_b):
        assert tuple(p.swap_colours() for p in b_row) == r_row
    assert tuple(p.swap_colours() for p in blue.initial) == red.initial
    assert tuple(p.swap_colours() for p in blue.final) == red.final


def test_empty_word_is_out_of_scope():
    with pytest.raises(ValueError):
        census_rep().coefficient("")
    with pytest.raises(ValueError):
        census_rep().specialize(1, 1, 1).coefficient("")


@given(words)
def test_census_rep_matches_brute_force(word):
    assert census_rep().coefficient(word) == census(word)


@given(words)
def test_blocks_split_by_first_letter(word):
    blue_val = blue_start_rep().coefficient(word)
    red_val = red_start_rep().coefficient(word)
    assert blue_val + red_val == census(word)
    if word.startswith("b"):
        assert red_val == Poly()
    else:
        assert blue_val == Poly()


@given(words)
def test_mirror_symmetry_of_blocks(word):
    blue = blue_start_rep()
    red = red_start_rep()
    assert red.coefficient(swap_word(word)) == blue.coefficient(word).swap_colours()


@given(words)
def test_specialized_chain_matches_polynomial_evaluation(word):
    rep = census_rep()
    poly = rep.coefficient(word)
    exact = rep.specialize(Fraction(1, 3), Fraction(-1, 2), Fraction(2, 7))
    assert exact.coefficient(word) == poly.evaluate(Fraction(1, 3), Fraction(-1, 2), Fraction(2, 7))
    ones = rep.specialize(1, 1, 1)
    got = ones.coefficient(word)
    assert isinstance(got, int)
    assert got == poly.evaluate(1, 1, 1)
    approx = rep.specialize(0.25, 0.5, 0.125)
    assert approx.coefficient(word) == pytest.approx(float(poly.evaluate(Fraction(1, 4), Fraction(1, 2), Fraction(1, 8))))


def test_json_dump_shape():
    blue = blue_start_rep()
    data = blue.to_json_obj()
    assert data["dim"] == 19
    assert len(data["initial"]) == len(data["final"]) == 19
    assert len(data["mat_b"]) == len(data["mat_r"]) == 19
    assert all(len(row) == 19 for row in data["mat_b"])
    assert data["mat_b"][0][4] == B3.to_json_obj()


def test_rep_diff_reports_discrepancies():
    blue = blue_start_rep()
    assert rep_diff(blue, blue) == []
    rows = [list(r) for r in blue.mat_b]
    rows[3][3] = rows[3][3] + ONE
    tampered = LinRep(
        blue.dim,
        blue.initial,
        tuple(tuple(r) for r in rows),
        blue.mat_r,
        blue.final,
    )
    diffs = rep_diff(blue, tampered)
    assert len(diffs) == 1
    # positions are 1-indexed, matching the published layout
    assert diffs[0][:3] == ("mat_b", 4, 4)


def test_derived_rep_reproduces_the_builtin():
    derived = derive_blue_rep()
    assert rep_diff(derived, blue_start_rep()) == []


def test_derivation_self_check_passes():
    verify_rows(check_len=6)


def test_derived_boundary_vectors():
    blue = blue_start_rep()
    initial = derived_initial()
    final = derived_final()
    got_initial = tuple(initial.get(idx, Poly()) for idx in range(19))
    got_final = tuple(final.get(idx, Poly()) for idx in range(19))
    assert got_initial == blue.initial
    assert got_final == blue.final


def test_eigenvalue_oracle_for_counting_block():
    # independent route to the spectral facts: dense eigensolver on the
    # all-ones specialization of the blue block averaged over letters
    blue = blue_start_rep()
    num = blue.specialize(1, 1, 1)
    mats = {}
    for colour in ("b", "r"):
        m = np.zeros((19, 19))
        for p, row in enumerate(num.rows[colour]):
            for q, val in row:
                m[p, q] = float(val)
        mats[colour] = m
    eigs = np.linalg.eigvals((mats["b"] + mats["r"]) / 2.0)
    moduli = np.sort(np.abs(eigs))[::-1]
    assert moduli[0] == pytest.approx(1.5, abs=1e-12)
    assert moduli[1] == pytest.approx(0.5, abs=1e-12)


def test_long_chain_stays_sparse_and_fast():
    ones = census_rep().specialize(1, 1, 1)
    word = "br" * 500
    value = ones.coefficient(word)
    assert value > 0
    # exact integer count of a kilobase word; also sanity: it exceeds the
    # count of either half (subadditivity)
    half = ones.coefficient("br" * 250)
    assert value >= half * half
