"""
Weyl群、约化词与Hasse箭图
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cartan import LatticeVec, bilinear, build_datum, simple_root
from src.weyl import (
    PhiHatElt,
    WeylElement,
    beta_sequence,
    convex_leq,
    greedy_longest_word,
    hasse_quiver,
    hat_action,
    hat_element,
    hat_inverse,
    hat_simple,
    hat_simple_inverse,
    is_reduced,
    length_of,
    longest_element,
    parse_word,
    positive_roots,
    residues,
    same_commutation_class,
    star,
    star_involution,
)

ROOT_COUNTS = {"A3": 6, "B3": 9, "C3": 9, "D4": 12, "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


@pytest.mark.parametrize("name,count", sorted(ROOT_COUNTS.items()))
def test_positive_root_counts(name, count):
    assert len(positive_roots(build_datum(name))) == count


def test_g2_positive_roots(g2):
    coords = {root.coords for root in positive_roots(g2)}
    assert coords == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


@pytest.mark.parametrize("name", ["A3", "B3", "C4", "D5", "G2", "F4", "E6"])
def test_greedy_longest_word_is_reduced_of_full_length(name):
    datum = build_datum(name)
    word = greedy_longest_word(datum)
    assert len(word) == len(positive_roots(datum))
    assert is_reduced(datum, word)


@pytest.mark.parametrize("name,negates", [("A3", False), ("B3", True), ("D4", True), ("D5", False),
                                          ("E6", False), ("E7", True), ("G2", True), ("F4", True)])
def test_longest_element_negates_roots(name, negates):
    assert longest_element(build_datum(name)).negates_roots() is negates


@pytest.mark.parametrize(
    "name,mapping",
    [
        ("A3", {1: 3, 2: 2, 3: 1}),
        ("B3", {1: 1, 2: 2, 3: 3}),
        ("D5", {1: 1, 2: 2, 3: 3, 4: 5, 5: 4}),
        ("E6", {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}),
    ],
)
def test_star_involution(name, mapping):
    datum = build_datum(name)
    assert star_involution(datum) == mapping
    assert all(star(datum, i) == j for i, j in mapping.items())


def test_coxeter_element_has_order_h():
    for name in ("A4", "B3", "D4", "G2", "F4"):
        datum = build_datum(name)
        coxeter = WeylElement.from_word(datum, datum.I)
        assert coxeter.order() == datum.h


def test_element_group_laws(b3):
    w = WeylElement.from_word(b3, (1, 2, 3, 2))
    assert w.compose(w.inverse()).is_identity()
    assert w.power(3) == w.compose(w).compose(w)
    assert w.power(-1) == w.inverse()
    assert WeylElement.simple(b3, 2).order() == 2


def test_from_word_is_product_of_reflections(b3):
    word = (1, 3, 2)
    w = WeylElement.from_word(b3, word)
    product = WeylElement.identity(b3)
    for i in word:
        product = product.compose(WeylElement.simple(b3, i))
    assert w == product


def test_beta_sequence_of_non_reduced_word(b3):
    betas, reduced = beta_sequence(b3, (1, 1))
    assert not reduced
    assert betas[1] == LatticeVec.root((-1, 0, 0))


def test_parse_word():
    assert parse_word("1, 2,3") == (1, 2, 3)
    for bad in ("", "1,a", "0,1", "1,-2"):
        with pytest.raises(ValueError):
            parse_word(bad)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=3), max_size=12))
def test_length_and_reducedness_agree(word):
    datum = build_datum("B3")
    length = length_of(datum, word)
    assert length <= len(word)
    assert length % 2 == len(word) % 2
    assert is_reduced(datum, word) == (length == len(word))


def test_residues_cover_positive_roots(b3):
    word = (1, 2, 3) * 3
    mapping = residues(b3, word)
    assert set(mapping) == {root.coords for root in positive_roots(b3)}
    with pytest.raises(ValueError):
        residues(b3, (1, 1))


def test_hasse_quiver_commutation_class(b3):
    assert same_commutation_class(b3, (1, 2, 3) * 3, (1, 2, 1, 3, 2, 1, 3, 2, 3))
    assert not same_commutation_class(b3, (1, 2, 3) * 3, (3, 2, 1) * 3)


def test_hasse_quiver_rejects_bad_words(b3):
    with pytest.raises(ValueError):
        hasse_quiver(b3, (1, 1, 2, 3, 1, 2, 3, 1, 2))
    with pytest.raises(ValueError):
        hasse_quiver(b3, (1, 2, 3))


def test_hasse_quiver_shape(b3):
    quiver = hasse_quiver(b3, (1, 2, 3) * 3)
    assert len(quiver.vertices) == 9
    assert quiver.is_acyclic()
    assert quiver.vertices[0] == LatticeVec.root((1, 0, 0))
    assert quiver.vertices[-1] == LatticeVec.root((0, 0, 1))
    source, target, _ = quiver.arrows[0]
    assert convex_leq(quiver, target, source)
    assert not convex_leq(quiver, source, target)
    with pytest.raises(KeyError):
        convex_leq(quiver, (5, 5, 5), source)
    assert quiver.to_dot().startswith('digraph "hasse_B3"')


def test_hat_simple_round_trip(b3):
    for root in positive_roots(b3):
        x = PhiHatElt(root, 0)
        for i in b3.I:
            assert hat_simple_inverse(b3, i, hat_simple(b3, i, x)) == x


def test_hat_simple_on_simple_root(b3):
    x = PhiHatElt(simple_root(b3, 2), 4)
    assert hat_simple(b3, 2, x) == PhiHatElt(simple_root(b3, 2), 3)


def test_hat_word_matches_direct_formula(b3):
    word = (1, 2, 3)
    w = WeylElement.from_word(b3, word)
    for root in positive_roots(b3):
        x = PhiHatElt(root, 0)
        image = hat_action(b3, word, x)
        assert image == hat_element(w, x)
        assert hat_inverse(b3, word, image) == x


def _reduced_words_of_w0(datum):
    """深度优先枚举 w_0 的全部约化词"""
    target = len(positive_roots(datum))
    words = []

    def extend(prefix):
        if len(prefix) == target:
            words.append(prefix)
            return
        for i in datum.I:
            candidate = prefix + (i,)
            if is_reduced(datum, candidate):
                extend(candidate)

    extend(())
    return words


def _commutation_closure(datum, word):
    seen = {word}
    frontier = [word]
    while frontier:
        current = frontier.pop()
        for k in range(len(current) - 1):
            a, b = current[k], current[k + 1]
            if a != b and datum.c(a, b) == 0:
                moved = current[:k] + (b, a) + current[k + 2:]
                if moved not in seen:
                    seen.add(moved)
                    frontier.append(moved)
    return frozenset(seen)


@pytest.mark.parametrize("name,count", [("A2", 2), ("B2", 2), ("G2", 2), ("A3", 16), ("B3", 42)])
def test_commutation_class_matches_brute_force(name, count):
    datum = build_datum(name)
    words = _reduced_words_of_w0(datum)
    assert len(words) == count
    keys = {word: hasse_quiver(datum, word).labeled_key() for word in words}
    closures = {word: _commutation_closure(datum, word) for word in words}
    for w1 in words:
        assert closures[w1] <= set(words)
        for w2 in words:
            assert (keys[w1] == keys[w2]) == (w2 in closures[w1]), (w1, w2)
    first = words[0]
    assert all(same_commutation_class(datum, first, other) for other in closures[first])


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4"])
def test_convex_order(name):
    datum = build_datum(name)
    quiver = hasse_quiver(datum, greedy_longest_word(datum))
    roots = positive_roots(datum)
    coords = {root.coords for root in roots}
    for alpha in roots:
        for beta in roots:
            if alpha == beta:
                continue
            comparable = convex_leq(quiver, alpha, beta) or convex_leq(quiver, beta, alpha)
            total = alpha + beta
            if total.coords in coords:
                # α + β 严格位于 α 与 β 之间
                between = (
                    convex_leq(quiver, alpha, total) and convex_leq(quiver, total, beta)
                ) or (convex_leq(quiver, beta, total) and convex_leq(quiver, total, alpha))
                assert comparable and between, (alpha, beta)
            if not comparable:
                assert bilinear(datum, alpha, beta) == 0, (alpha, beta)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["B3", "C3", "A4", "G2"]), st.integers(min_value=0, max_value=20), st.data())
def test_hat_element_respects_composition(name, split, data):
    datum = build_datum(name)
    word = greedy_longest_word(datum)
    split = split % (len(word) + 1)
    u, v = word[:split], word[split:]
    root = data.draw(st.sampled_from(positive_roots(datum)))
    x = PhiHatElt(root, data.draw(st.integers(min_value=-5, max_value=5)))
    whole = hat_element(WeylElement.from_word(datum, word), x)
    parts = hat_element(WeylElement.from_word(datum, u), hat_element(WeylElement.from_word(datum, v), x))
    assert whole == parts
    assert hat_action(datum, u, hat_action(datum, v, x)) == hat_action(datum, word, x) == whole


@pytest.mark.parametrize("name", ["A3", "B3", "D5", "E6", "G2"])
def test_hat_longest_element_lowers_level(name):
    datum = build_datum(name)
    word = greedy_longest_word(datum)
    w0 = longest_element(datum)
    for root in positive_roots(datum):
        x = PhiHatElt(root, 2)
        # ŵ_0(β, k) = (β*, k - 1)，β* = -w_0 β
        assert hat_action(datum, word, x) == PhiHatElt(-w0.apply(root), 1)
    if w0.negates_roots():
        assert all(hat_action(datum, word, PhiHatElt(r, 0)) == PhiHatElt(r, -1) for r in positive_roots(datum))


def test_b2_and_c2_differ_by_relabeling():
    b2, c2 = build_datum("B2"), build_datum("C2")
    assert b2.h == c2.h == 4
    assert b2.d == tuple(reversed(c2.d))
    for i in (1, 2):
        for j in (1, 2):
            assert b2.c(i, j) == c2.c(3 - i, 3 - j)
    swap = {root.coords[::-1] for root in positive_roots(b2)}
    assert swap == {root.coords for root in positive_roots(c2)}
