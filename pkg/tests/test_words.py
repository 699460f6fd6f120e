import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import alternates_by_restriction
from wordrep.errors import CoverageError, EmptySet, LabelAbsent, NotUniform
from wordrep.graphs import LabeledGraph
from wordrep.words import (
    alternate,
    alternation_graph,
    cyclic_shift_to_front,
    d_word,
    is_uniform,
    parse_word,
    read_word_file,
    u_word,
    verify_representant,
)

C4_WORD = (1, 4, 2, 1, 3, 2, 4, 3)
C4 = LabeledGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def test_alternate_examples():
    assert alternate(C4_WORD, 1, 4)
    assert not alternate(C4_WORD, 1, 3)
    assert alternate((5, 9), 5, 9)


def test_alternate_absent_letter():
    with pytest.raises(LabelAbsent):
        alternate((1, 2, 1), 1, 3)


def test_c4_word():
    assert verify_representant(C4_WORD, C4).ok


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_and_edgeless(n):
    rng = random.Random(n)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    assert verify_representant(perm, LabeledGraph.complete(n)).ok
    assert verify_representant([v for v in range(1, n + 1) for _ in (0, 1)], LabeledGraph.empty(n)).ok


def test_violations_reported():
    verdict = verify_representant((1, 2, 3, 4, 1, 2, 3, 4), C4)
    assert not verdict.ok
    bad = {(v.x, v.y) for v in verdict.violations}
    assert bad == {(1, 3), (2, 4)}
    assert all(v.expected is False and v.actual is True for v in verdict.violations)


def test_coverage_error():
    with pytest.raises(CoverageError):
        verify_representant((1, 2, 1), C4)
    with pytest.raises(CoverageError):
        verify_representant((1, 2, 3, 4, 5), C4)


def test_u_and_d():
    assert u_word({2, 5, 9}) == (2, 5, 9)
    assert d_word({2, 5, 9}) == (9, 5, 2)
    assert u_word({7}) == d_word({7}) == (7,)
    with pytest.raises(EmptySet):
        u_word(set())
    with pytest.raises(EmptySet):
        d_word([])


@given(st.sets(st.integers(1, 50), min_size=1))
def test_u_d_reverse(s):
    assert tuple(reversed(u_word(s))) == d_word(s)


def test_is_uniform():
    assert is_uniform(C4_WORD) == 2
    assert is_uniform((1, 2, 2)) is None
    assert is_uniform((3, 1, 2)) == 1


def test_cyclic_shift():
    assert cyclic_shift_to_front((1, 2, 1, 2), 2) == (2, 1, 2, 1)
    assert cyclic_shift_to_front(C4_WORD, 1) == C4_WORD
    with pytest.raises(NotUniform):
        cyclic_shift_to_front((1, 2, 2), 1)
    with pytest.raises(LabelAbsent):
        cyclic_shift_to_front((1, 2, 1, 2), 3)


def uniform_words(max_n=6, max_k=3):
    return st.tuples(st.integers(1, max_n), st.integers(1, max_k)).flatmap(
        lambda nk: st.permutations([v for v in range(1, nk[0] + 1) for _ in range(nk[1])])
    )


@given(uniform_words(max_k=2), st.data())
def test_shift_of_2_uniform_represents_same_graph(w, data):
    x = data.draw(st.sampled_from(sorted(set(w))))
    assert verify_representant(cyclic_shift_to_front(w, x), alternation_graph(w)).ok


@given(uniform_words())
def test_rotations_preserve_alternation_graph(w):
    g = alternation_graph(w)
    for r in range(len(w)):
        assert alternation_graph(w[r:] + w[:r]) == g


@given(st.lists(st.integers(1, 5), min_size=2, max_size=20))
def test_alternate_against_restriction_oracle(w):
    letters = sorted(set(w))
    for x, y in itertools.combinations(letters, 2):
        assert alternate(w, x, y) == alternates_by_restriction(w, x, y)
        assert alternate(w, x, y) == alternate(w, y, x)


@given(st.lists(st.integers(1, 5), min_size=3, max_size=20))
def test_deleting_other_letters_preserves_alternation(w):
    letters = sorted(set(w))
    for x, y in itertools.combinations(letters, 2):
        for z in letters:
            if z in (x, y):
                continue
            assert alternate(w, x, y) == alternate([a for a in w if a != z], x, y)


def test_parse_word_forms():
    assert parse_word("14213243") == C4_WORD
    assert parse_word("1 4 2 1 3 2 4 3") == C4_WORD
    assert parse_word("10 4 11") == (10, 4, 11)
    assert parse_word("7") == (7,)
    with pytest.raises(ValueError):
        parse_word("1 x 2")
    assert read_word_file(["# comment", "", "1 2 1", "2 1"]) == [(1, 2, 1), (2, 1)]
