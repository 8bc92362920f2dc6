"""The topological Markov chain of a zero-one matrix.

Admissible blocks, word utilities, periodic-point enumeration, and the
brute-force counter of points fixed jointly by a shift power and a shifted
flip.  The enumerations here are deliberately naive: they are the oracle the
closed-form counting formulas are tested against.
"""

from __future__ import annotations

import warnings
from functools import lru_cache

from .errors import MatrixShapeError
from .flips import FlipPair, Word
from .matrices import IntMatrix

DEFAULT_PERIOD_CAP = 12


# -- word utilities -----------------------------------------------------------

def reverse_word(w: Word) -> Word:
    return tuple(reversed(w))


def word_left(w: Word) -> Word:
    """Drop the last symbol."""
    return w[:-1]


def word_right(w: Word) -> Word:
    """Drop the first symbol."""
    return w[1:]


def word_initial(w: Word) -> str:
    return w[0]


def word_terminal(w: Word) -> str:
    return w[-1]


def word_center(w: Word) -> str:
    if len(w) % 2 == 0:
        raise ValueError("center symbol needs a word of odd length")
    return w[len(w) // 2]


# -- graph structure ----------------------------------------------------------

def _check_graph_matrix(a: IntMatrix) -> None:
    if not a.is_square or a.row_labels != a.col_labels:
        raise MatrixShapeError("a shift needs a square matrix with one label list")
    if not a.is_zero_one:
        raise MatrixShapeError("a shift needs a zero-one matrix")


@lru_cache(maxsize=256)
def _essential_flags(a: IntMatrix) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    """(has infinite past, has infinite future) per symbol.

    A symbol has an infinite future iff it reaches a cycle, and an infinite
    past iff it is reachable from a cycle.
    """
    n = a.nrows
    reach = [[bool(x) for x in row] for row in a.entries]
    for k in range(n):
        rk = reach[k]
        for i in range(n):
            if reach[i][k]:
                ri = reach[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    cyclic = [reach[i][i] for i in range(n)]
    future = tuple(cyclic[i] or any(cyclic[j] and reach[i][j] for j in range(n))
                   for i in range(n))
    past = tuple(cyclic[i] or any(cyclic[j] and reach[j][i] for j in range(n))
                 for i in range(n))
    return past, future


def essential_symbols(a: IntMatrix) -> tuple[str, ...]:
    """Symbols lying on some bi-infinite path, in label order."""
    _check_graph_matrix(a)
    past, future = _essential_flags(a)
    return tuple(lab for i, lab in enumerate(a.row_labels) if past[i] and future[i])


def is_essential(a: IntMatrix) -> bool:
    return essential_symbols(a) == a.row_labels


def is_admissible(a: IntMatrix, w: Word) -> bool:
    """Every adjacent pair of the word is an allowed transition."""
    idx = {lab: i for i, lab in enumerate(a.row_labels)}
    try:
        ix = [idx[s] for s in w]
    except KeyError:
        return False
    return all(a.entries[i][j] == 1 for i, j in zip(ix, ix[1:]))


@lru_cache(maxsize=256)
def blocks(a: IntMatrix, n: int) -> tuple[Word, ...]:
    """All length-n words occurring in some bi-infinite point, in canonical order.

    Canonical order is lexicographic by symbol position in the alphabet, so
    matrices built over block alphabets are reproducible bit for bit.
    """
    _check_graph_matrix(a)
    if n < 1:
        raise ValueError("block length must be >= 1")
    past, future = _essential_flags(a)
    if not (all(past) and all(future)):
        warnings.warn("matrix has stranded symbols; they contribute no blocks",
                      stacklevel=2)
    labels = a.row_labels
    succ = [tuple(j for j in range(a.nrows) if a.entries[i][j] == 1)
            for i in range(a.nrows)]
    out: list[Word] = []
    stack: list[int] = []

    def extend():
        if len(stack) == n:
            if future[stack[-1]]:
                out.append(tuple(labels[i] for i in stack))
            return
        for j in succ[stack[-1]]:
            stack.append(j)
            extend()
            stack.pop()

    for i in range(a.nrows):
        if past[i]:
            stack.append(i)
            extend()
            stack.pop()
    return tuple(out)


# -- periodic points ----------------------------------------------------------

Point = Word  # a period-m point is stored as its cyclic word x_0..x_{m-1}


@lru_cache(maxsize=64)
def enumerate_periodic(a: IntMatrix, m: int, cap: int = DEFAULT_PERIOD_CAP
                       ) -> tuple[Point, ...]:
    """All points fixed by the m-th shift power, as cyclic words, in lex order.

    The count always equals trace(A^m).  Enumeration is exponential, so
    periods beyond ``cap`` are refused.
    """
    _check_graph_matrix(a)
    if m < 1:
        raise ValueError("period must be >= 1")
    if m > cap:
        raise ValueError(f"period {m} exceeds the enumeration cap {cap}")
    labels = a.row_labels
    succ = [tuple(j for j in range(a.nrows) if a.entries[i][j] == 1)
            for i in range(a.nrows)]
    out: list[Point] = []
    stack: list[int] = []

    def extend(start: int):
        if len(stack) == m:
            if a.entries[stack[-1]][start] == 1:
                out.append(tuple(labels[i] for i in stack))
            return
        for j in succ[stack[-1]]:
            stack.append(j)
            extend(start)
            stack.pop()

    for i in range(a.nrows):
        stack.append(i)
        extend(i)
        stack.pop()
    return tuple(out)


def is_periodic_point(a: IntMatrix, x: Point) -> bool:
    m = len(x)
    if m == 0:
        return False
    idx = {lab: i for i, lab in enumerate(a.row_labels)}
    try:
        ix = [idx[s] for s in x]
    except KeyError:
        return False
    return all(a.entries[ix[i]][ix[(i + 1) % m]] == 1 for i in range(m))


def shift_point(x: Point, d: int) -> Point:
    """The d-th shift power applied to a cyclic word: result_i = x_(i+d)."""
    m = len(x)
    return tuple(x[(i + d) % m] for i in range(m))


def flip_point(pair: FlipPair, x: Point) -> Point:
    """The one-block flip applied to a cyclic word: result_i = tau(x_(-i))."""
    tau = pair.tau
    m = len(x)
    return tuple(tau[x[(-i) % m]] for i in range(m))


def count_pmn_bruteforce(pair: FlipPair, m: int, n: int,
                         cap: int = DEFAULT_PERIOD_CAP) -> int:
    """Count points fixed by the m-th shift power and the n-shifted flip.

    Filters the full period-m enumeration by x_i == tau(x_(-i-n)); n is taken
    modulo m by the index arithmetic, so negative n is fine.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    tau = pair.tau
    count = 0
    for x in enumerate_periodic(pair.A, m, cap=cap):
        if all(tau[x[(-i - n) % m]] == x[i] for i in range(m)):
            count += 1
    return count
