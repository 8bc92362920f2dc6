"""Flip pairs: a zero-one matrix together with a compatible symbol involution.

A flip pair is a pair (A, J) of zero-one square matrices over one alphabet
with A*J == J*A^T and J*J == I.  J is then automatically a symmetric
permutation matrix, and the symbol involution it encodes acts on words by
"reverse and substitute".
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import FlipPairError
from .matrices import IntMatrix, mat_mul

Word = tuple[str, ...]


class FlipPair:
    """A validated flip pair; construction performs full axiom checking."""

    def __init__(self, A: IntMatrix, J: IntMatrix, name: str | None = None):
        if not A.is_zero_one:
            raise FlipPairError("A_zero_one", "transition matrix has an entry outside {0,1}")
        if not J.is_zero_one:
            raise FlipPairError("J_zero_one", "involution matrix has an entry outside {0,1}")
        if not A.is_square or A.row_labels != A.col_labels:
            raise FlipPairError("shape", "transition matrix must be square with one label list")
        if not J.is_square or J.row_labels != J.col_labels:
            raise FlipPairError("shape", "involution matrix must be square with one label list")
        if A.row_labels != J.row_labels:
            raise FlipPairError("labels", "the two matrices must share one alphabet")
        if any(lab == "" for lab in A.row_labels):
            raise FlipPairError("labels", "empty symbol label")
        ident = IntMatrix.identity(J.row_labels)
        if mat_mul(J, J) != ident:
            raise FlipPairError("J_involution", "J*J != I")
        if mat_mul(A, J) != mat_mul(J, A.transpose()):
            raise FlipPairError("flip_symmetry", "A*J != J*A^T")
        self._A = A
        self._J = J
        self.name = name
        # J*J == I for a zero-one J forces exactly one 1 per row.
        tau = {}
        for i, a in enumerate(J.row_labels):
            j = J.entries[i].index(1)
            tau[a] = J.col_labels[j]
        self._tau = MappingProxyType(tau)

    # -- data access ---------------------------------------------------------

    @property
    def A(self) -> IntMatrix:
        return self._A

    @property
    def J(self) -> IntMatrix:
        return self._J

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self._A.row_labels

    @property
    def size(self) -> int:
        return self._A.nrows

    @property
    def tau(self) -> Mapping[str, str]:
        """The symbol involution encoded by J: tau(a) = b iff J(a, b) == 1."""
        return self._tau

    def __eq__(self, other) -> bool:
        return isinstance(other, FlipPair) and self._A == other._A and self._J == other._J

    def __hash__(self) -> int:
        return hash((self._A, self._J))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<FlipPair{tag} on {self.size} symbols>"

    # -- word actions ---------------------------------------------------------

    def apply_tau(self, word: Iterable[str]) -> Word:
        """Apply the symbol involution letter by letter."""
        try:
            return tuple(self._tau[s] for s in word)
        except KeyError as e:
            raise FlipPairError("labels", f"unknown symbol {e.args[0]!r}") from None

    def flip_word(self, word: Iterable[str]) -> Word:
        """Reverse the word, then apply the symbol involution."""
        try:
            return tuple(self._tau[s] for s in reversed(tuple(word)))
        except KeyError as e:
            raise FlipPairError("labels", f"unknown symbol {e.args[0]!r}") from None

    # -- derived pairs ---------------------------------------------------------

    def relabel(self, mapping: dict[str, str], name: str | None = None) -> "FlipPair":
        """Rename symbols; the underlying matrices keep their row order."""
        return FlipPair(self._A.relabel(mapping), self._J.relabel(mapping), name=name)

    def reorder(self, labels: Iterable[str], name: str | None = None) -> "FlipPair":
        """Permute both matrices into the given label order."""
        labs = tuple(labels)
        return FlipPair(self._A.reorder(labs), self._J.reorder(labs), name=name)


def validate_flip_pair(A: IntMatrix, J: IntMatrix, name: str | None = None) -> FlipPair:
    """Validate the flip-pair axioms, returning the pair or raising FlipPairError."""
    return FlipPair(A, J, name=name)
