import random

import pytest

from corpus import random_flip_pair
from flipshift.fixtures import (example1_pair, example1_symmetric_pair,
                                golden_mean_pair, one_point_pair)
from flipshift.matrices import IntMatrix, mat_pow, trace
from flipshift.shifts import (blocks, count_pmn_bruteforce, enumerate_periodic,
                              essential_symbols, flip_point, is_essential,
                              reverse_word, shift_point, word_center,
                              word_initial, word_left, word_right,
                              word_terminal)


def test_word_ops():
    w = ("a", "b", "c")
    assert reverse_word(w) == ("c", "b", "a")
    assert word_left(w) == ("a", "b")
    assert word_right(w) == ("b", "c")
    assert word_initial(w) == "a"
    assert word_terminal(w) == "c"
    assert word_center(w) == "b"
    with pytest.raises(ValueError):
        word_center(("a", "b"))


def test_blocks_single_loop():
    a = IntMatrix.square("a", [[1]])
    assert blocks(a, 3) == (("a", "a", "a"),)


def test_blocks_golden_mean():
    gm = golden_mean_pair()
    assert blocks(gm.A, 2) == (("1", "1"), ("1", "2"), ("2", "1"))


def test_blocks_example1_symbols():
    assert blocks(example1_pair().A, 1) == (("1",), ("2",), ("3",), ("4",))


def test_stranded_symbols_warn_and_vanish():
    # symbol "b" has no outgoing path back to a cycle, "c" is unreachable
    a = IntMatrix.square("abc", [[1, 1, 0], [0, 0, 0], [0, 0, 0]])
    assert essential_symbols(a) == ("a",)
    assert not is_essential(a)
    with pytest.warns(UserWarning):
        assert blocks(a, 2) == (("a", "a"),)


def test_enumerate_periodic_counts():
    assert len(enumerate_periodic(one_point_pair().A, 5)) == 1
    gm = golden_mean_pair()
    assert [len(enumerate_periodic(gm.A, m)) for m in (1, 2, 3, 4)] == [1, 3, 4, 7]
    assert len(enumerate_periodic(example1_pair().A, 2)) == 8


def test_enumeration_matches_trace():
    rng = random.Random(17)
    pairs = [random_flip_pair(rng) for _ in range(10)]
    pairs += [golden_mean_pair(), example1_pair()]
    for p in pairs:
        for m in range(1, 8):
            assert len(enumerate_periodic(p.A, m)) == trace(mat_pow(p.A, m))


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_periodic(golden_mean_pair().A, 13)


def test_count_pmn_examples():
    gm = golden_mean_pair()
    assert count_pmn_bruteforce(gm, 1, 0) == 1
    p1 = example1_pair()
    assert all(count_pmn_bruteforce(p1, m, n) == 0
               for m in range(1, 7) for n in (0, 1))
    assert count_pmn_bruteforce(example1_symmetric_pair(), 2, 0) == 8


def test_count_parity_and_wraparound():
    rng = random.Random(19)
    pairs = [random_flip_pair(rng) for _ in range(8)] + [example1_symmetric_pair()]
    for p in pairs:
        for m in range(1, 7):
            base0 = count_pmn_bruteforce(p, m, 0)
            base1 = count_pmn_bruteforce(p, m, 1)
            for n in range(-4, 5):
                c = count_pmn_bruteforce(p, m, n)
                assert c == count_pmn_bruteforce(p, m, m + n)
                if m % 2 == 1:
                    assert c == base0
                else:
                    assert c == (base0 if n % 2 == 0 else base1)


def test_flip_permutes_periodic_points():
    rng = random.Random(23)
    pairs = [random_flip_pair(rng) for _ in range(6)] + [example1_pair()]
    for p in pairs:
        for m in range(1, 6):
            points = enumerate_periodic(p.A, m)
            images = [flip_point(p, x) for x in points]
            assert sorted(images) == sorted(points)
            for x in points:
                assert flip_point(p, flip_point(p, x)) == x


def test_shift_point():
    x = ("a", "b", "c")
    assert shift_point(x, 1) == ("b", "c", "a")
    assert shift_point(x, -1) == ("c", "a", "b")
