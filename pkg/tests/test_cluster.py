"""
相容对 (Λ, B̃)、Γ 坐标形式与 Λ^{[Q]}
"""

import numpy as np
import pytest

from src.cartan import LatticeVec, build_datum
from src.checks import commutation_readings
from src.cluster import (
    SequenceIndex,
    alpha_plus_minus,
    alpha_plus_minus_failure,
    check_compatible,
    check_conjecture,
    check_torus_iso,
    check_transposed,
    commutation_invariance_failure,
    compatible_failure,
    exchange_matrix,
    gamma_forms,
    gamma_forms_failure,
    lambda_matrix,
    lambda_Q,
    lambda_Q_failure,
    pair_matrices,
    prefixes_failure,
    satisfies_length_condition,
    skew_symmetrizer_failure,
    torus_iso_failure,
)
from src.quivers import DynkinQuiver, linear_quiver, longest_word, source_cycle_word
from src.weyl import is_reduced


def test_sequence_index():
    index = SequenceIndex((1, 2, 3, 1))
    assert index.r == 4
    assert index.kplus(1) == 4
    assert index.kplus(2) == 5
    assert index.kminus(4) == 1
    assert index.kminus(1) == 0
    assert index.Je == [1]
    assert index.Jf == [2, 3, 4]


def test_b3_short_word(b3):
    word = (1, 2, 3, 1)
    lam = lambda_matrix(b3, word)
    upper = [lam[s, t] for s in range(4) for t in range(s + 1, 4)]
    assert upper == [-2, -2, 2, -2, 0, 2]
    assert (lam == -lam.T).all()
    B, je = exchange_matrix(b3, word)
    assert je == [1]
    assert list(B[:, 0]) == [0, 1, 0, -1]
    pm = pair_matrices(b3, word)
    assert list(pm.product()[:, 0]) == [-4, 0, 0, 0]
    assert pm.product_diag() == [-4]
    assert pm.product_diag_intro() == [4]
    assert check_compatible(pm)


def test_repeated_coxeter_word(b3):
    pm = pair_matrices(b3, (1, 2, 3) * 3)
    assert compatible_failure(pm) is None
    assert check_transposed(pm)
    assert skew_symmetrizer_failure(pm) is None
    assert pm.product_diag() == [-2 * d for d in pm.d_col]
    assert pm.product_diag_intro() == [2 * d for d in pm.d_col]
    data = pm.to_dict()
    assert data["compatible"] is True
    assert data["je"] == pm.Je


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_longer_words_are_compatible(name):
    # 适配序列不一定满足长度条件，这里只检验相容性
    datum = build_datum(name)
    quiver = linear_quiver(datum)
    word = source_cycle_word(quiver, 2 * len(longest_word(quiver)))
    checked, failure = prefixes_failure(datum, word)
    assert failure is None
    assert checked == len(word)


def test_type_a_coxeter_windows_are_not_reduced():
    a3 = build_datum("A3")
    assert not is_reduced(a3, (3, 2, 1, 3, 2, 1))
    assert not satisfies_length_condition(a3, (1, 2, 3) * 4)


@pytest.mark.parametrize("name", ["B3", "C3", "D4", "G2"])
def test_conjecture_on_coxeter_powers(name):
    # -1 ∈ W 时 c^{h/2} = w_0，因此 c^h 的每个长为 ℓ(w_0) 的片段都是约化的
    datum = build_datum(name)
    word = tuple(datum.I) * datum.h
    assert satisfies_length_condition(datum, word)
    assert check_conjecture(datum, word) is None


def test_broken_pair_is_reported(b3):
    pm = pair_matrices(b3, (1, 2, 3) * 3)
    pm.Lambda = pm.Lambda.copy()
    pm.Lambda[0, 1] += 1
    pm.Lambda[1, 0] -= 1
    assert compatible_failure(pm) is not None
    assert not check_compatible(pm)


def test_length_condition_rejects_non_reduced(b3):
    assert not satisfies_length_condition(b3, (1, 1, 2, 3))
    with pytest.raises(ValueError):
        check_conjecture(b3, (1, 1, 2, 3))


def test_invalid_letters(b3):
    with pytest.raises(ValueError):
        pair_matrices(b3, (1, 4))


def test_gamma_forms(b3_quiver, b3_torus):
    word = longest_word(b3_quiver)
    forms = gamma_forms(b3_quiver, word, b3_torus)
    assert len(forms.positions) == len(word)
    assert np.array_equal(forms.Lambda, -forms.Lambda.T)
    assert gamma_forms_failure(b3_quiver, word, b3_torus) is None
    assert gamma_forms_failure(b3_quiver, (1, 2, 3) * 3, b3_torus) is None


def test_gamma_forms_other_types(g2_quiver, f4_quiver):
    for quiver in (g2_quiver, f4_quiver):
        assert gamma_forms_failure(quiver, longest_word(quiver)) is None


def test_alpha_plus_minus(b3_quiver):
    data = alpha_plus_minus(b3_quiver)
    assert len(data) == 9
    alpha1 = data[(1, 0, 0)]
    assert alpha1.minus is None
    assert alpha1.plus == LatticeVec.root((0, 1, 0))
    assert alpha_plus_minus_failure(b3_quiver) is None


@pytest.mark.parametrize("name,xi", [("B3", (1, 0, 1)), ("G2", (2, 1)), ("C3", (0, 1, 2)), ("A3", (0, 1, 0))])
def test_lambda_Q(name, xi):
    quiver = DynkinQuiver(build_datum(name), xi)
    assert alpha_plus_minus_failure(quiver) is None
    assert lambda_Q_failure(quiver) is None


def test_lambda_Q_lookup(b3_quiver):
    lq = lambda_Q(b3_quiver)
    assert lq.value((1, 0, 0), (1, 0, 0)) == 0
    assert lq.value((1, 0, 0), (1, 1, 0)) == -lq.value((1, 1, 0), (1, 0, 0))
    assert lq.residue((0, 0, 1)) == 3
    with pytest.raises(KeyError):
        lq.value((2, 0, 0), (1, 0, 0))


def test_torus_isomorphism(b3_quiver, b3_torus, g2_quiver):
    assert torus_iso_failure(b3_quiver, b3_torus) is None
    assert check_torus_iso(g2_quiver)


def test_commutation_invariance(b3_quiver):
    readings = commutation_readings(b3_quiver)
    assert len(readings) >= 2
    assert commutation_invariance_failure(b3_quiver.datum, readings) is None


def test_commutation_invariance_needs_reduced_words(b3):
    with pytest.raises(ValueError):
        commutation_invariance_failure(b3, [(1, 1)])
