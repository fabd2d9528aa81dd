import random

import pytest
from hypothesis import given, settings, strategies as st

from genus2pairs.automorphisms import Automorphism, compose, nielsen_generators
from genus2pairs.errors import NotInvertibleError
from genus2pairs.primitivity import is_basis_pair, is_primitive
from genus2pairs.words import CyclicWord, Word, cyclic_equal, cyclic_reduce

words = st.text(alphabet="AaBb", max_size=10).map(Word)
move_lists = st.lists(st.integers(0, 3), max_size=6)


def from_moves(moves):
    f = Automorphism.identity()
    for index in moves:
        f = compose(f, nielsen_generators()[index])
    return f


automorphisms = move_lists.map(from_moves)


class TestConstruction:
    def test_identity(self):
        f = Automorphism.identity()
        assert f.image_a == Word("A")
        assert f.image_b == Word("B")

    @pytest.mark.parametrize(
        "a, b", [("AA", "B"), ("ABab", "B"), ("A", "a"), ("1", "B")]
    )
    def test_non_bases_rejected(self, a, b):
        with pytest.raises(NotInvertibleError):
            Automorphism(Word(a), Word(b))

    def test_json_round_trip(self):
        f = Automorphism(Word("AB"), Word("B"))
        assert f.to_json() == {"A": "AB", "B": "B"}
        assert Automorphism.from_json(f.to_json()) == f


class TestApply:
    def test_length_reducing_move(self):
        f = Automorphism(Word("Ab"), Word("B"))
        assert f(Word("ABAB")) == Word("AA")

    def test_identity_fixes_everything(self):
        f = Automorphism.identity()
        assert f(Word("AbbA")) == Word("AbbA")

    def test_swap(self):
        f = Automorphism(Word("B"), Word("A"))
        assert f(Word("AAB")) == Word("BBA")

    def test_image_of_class(self):
        f = Automorphism(Word("AB"), Word("B"))
        assert f.image_of_class(CyclicWord("A")) == CyclicWord("AB")

    @given(automorphisms, words, words)
    def test_homomorphism(self, f, u, v):
        assert f(u * v) == f(u) * f(v)

    @given(automorphisms, words)
    def test_matrix_action_on_abelianization(self, f, w):
        (m00, m01), (m10, m11) = f.matrix()
        x, y = w.abelianization()
        assert f(w).abelianization() == (m00 * x + m01 * y, m10 * x + m11 * y)

    @given(automorphisms)
    def test_matrix_determinant_unimodular(self, f):
        (m00, m01), (m10, m11) = f.matrix()
        assert abs(m00 * m11 - m01 * m10) == 1

    @settings(deadline=None)
    @given(automorphisms, words)
    def test_preserves_primitivity(self, f, w):
        image = f(w)
        if len(image) <= 20:
            assert is_primitive(image) == is_primitive(w)

    @settings(deadline=None)
    @given(automorphisms, words, words)
    def test_preserves_basis_pairs(self, f, u, v):
        if len(f(u)) + len(f(v)) <= 24:
            assert is_basis_pair(f(u), f(v)) == is_basis_pair(u, v)

    @given(automorphisms)
    def test_commutator_class_preserved_up_to_inversion(self, f):
        image, _ = cyclic_reduce(f(Word("ABab")))
        assert cyclic_equal(image, CyclicWord("ABab"), up_to_inversion=True)


class TestComposeInvert:
    def test_compose_with_identity(self):
        f = Automorphism(Word("AB"), Word("B"))
        assert compose(Automorphism.identity(), f) == f
        assert compose(f, Automorphism.identity()) == f

    def test_swap_is_an_involution(self):
        swap = Automorphism(Word("B"), Word("A"))
        assert compose(swap, swap) == Automorphism.identity()

    def test_nielsen_move_inverse(self):
        f = Automorphism(Word("AB"), Word("B"))
        assert f.inverse() == Automorphism(Word("Ab"), Word("B"))

    @given(automorphisms, automorphisms, words)
    def test_compose_agrees_with_application_order(self, f, g, w):
        assert compose(f, g)(w) == f(g(w))

    @given(automorphisms)
    def test_inverse_round_trip(self, f):
        assert compose(f, f.inverse()) == Automorphism.identity()
        assert compose(f.inverse(), f) == Automorphism.identity()

    def test_inverse_of_random_long_compositions(self):
        rng = random.Random(20240817)
        gens = nielsen_generators()
        for _ in range(50):
            f = Automorphism.identity()
            for _ in range(rng.randrange(12)):
                f = compose(f, rng.choice(gens))
            assert compose(f, f.inverse()) == Automorphism.identity()


class TestNielsenGenerators:
    def test_contains_the_shift(self):
        assert Automorphism(Word("AB"), Word("B")) in nielsen_generators()

    def test_closed_under_inverse(self):
        gens = set(nielsen_generators())
        assert {f.inverse() for f in gens} == gens

    def test_all_validated(self):
        for f in nielsen_generators():
            assert is_basis_pair(f.image_a, f.image_b)
