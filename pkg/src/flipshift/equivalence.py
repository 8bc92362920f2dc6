"""Certificates and checkers for the three equivalence notions on flip pairs.

A single splitting step is witnessed by a zero-one matrix R; the companion
matrix S is always derived as S = K R^T J, which halves both the certificate
format and every search space.  Chains of such steps, and the lag-k analogue
with nonnegative integral R, are verified identity by identity with the first
violation reported by name.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product

from .errors import BudgetError, CertificateError
from .flips import FlipPair
from .matrices import IntMatrix, mat_mul, mat_pow
from .report import Report
from .shifts import (DEFAULT_PERIOD_CAP, Point, enumerate_periodic, flip_point,
                     shift_point)

DEFAULT_CELL_BUDGET = 30
DEFAULT_SEARCH_BUDGET = 1_000_000


@dataclass(frozen=True)
class HalfElemCert:
    """A checked single splitting step between two flip pairs."""

    source: FlipPair
    target: FlipPair
    R: IntMatrix
    S: IntMatrix

    @cached_property
    def _gamma_table(self) -> dict[tuple[str, str], str]:
        table: dict[tuple[str, str], str] = {}
        r, s = self.R, self.S
        for i, a1 in enumerate(r.row_labels):
            for k, a2 in enumerate(s.col_labels):
                hits = [b for j, b in enumerate(r.col_labels)
                        if r.entries[i][j] == 1 and s.entries[j][k] == 1]
                if len(hits) == 1:
                    table[(a1, a2)] = hits[0]
        return table


@dataclass(frozen=True)
class StrongChain:
    """A sequence of splitting steps; the lag is the number of links."""

    pairs: tuple[FlipPair, ...]
    links: tuple[HalfElemCert, ...]

    def __post_init__(self):
        if len(self.pairs) != len(self.links) + 1:
            raise CertificateError("chain shape",
                                   "a chain of k links needs k+1 pairs")

    @property
    def lag(self) -> int:
        return len(self.links)

    @property
    def source(self) -> FlipPair:
        return self.pairs[0]

    @property
    def target(self) -> FlipPair:
        return self.pairs[-1]


@dataclass(frozen=True)
class ShiftFlipCert:
    """A checked lag-k equivalence witnessed by a nonnegative integral R."""

    source: FlipPair
    target: FlipPair
    R: IntMatrix
    S: IntMatrix
    lag: int


# -- single-step checking ------------------------------------------------------


def he_check(src: FlipPair, dst: FlipPair, R: IntMatrix,
             supplied_S: IntMatrix | None = None) -> HalfElemCert:
    """Check R as a single splitting step from src to dst.

    Derives S = K R^T J, then verifies A == R*S and B == S*R.  A supplied S is
    only cross-validated against the derived one.
    """
    if R.row_labels != src.alphabet or R.col_labels != dst.alphabet:
        raise CertificateError("shape", "R must map the source alphabet to the target alphabet")
    if not R.is_zero_one:
        raise CertificateError("R zero-one", "R has an entry outside {0,1}")
    s = mat_mul(mat_mul(dst.J, R.transpose()), src.J)
    if not s.is_zero_one:
        raise CertificateError("S zero-one", "derived S has an entry outside {0,1}")
    if supplied_S is not None and supplied_S != s:
        raise CertificateError("S == K*R^T*J", "supplied S differs from the derived one")
    if mat_mul(R, s) != src.A:
        raise CertificateError("A == R*S", "A != R*S")
    if mat_mul(s, R) != dst.A:
        raise CertificateError("B == S*R", "B != S*R")
    # equivalent restatement of the derivation; cheap sanity check
    if mat_mul(mat_mul(src.J, s.transpose()), dst.J) != R:
        raise CertificateError("R == J*S^T*K", "derived S does not invert back to R")
    return HalfElemCert(source=src, target=dst, R=R, S=s)


def gamma_block(cert: HalfElemCert, a1: str, a2: str) -> str:
    """The unique target symbol b with R(a1, b) == S(b, a2) == 1."""
    if cert.source.A.entry(a1, a2) != 1:
        raise CertificateError("admissible", f"({a1!r}, {a2!r}) is not an allowed transition")
    try:
        return cert._gamma_table[(a1, a2)]
    except KeyError:
        raise CertificateError("unique b",
                               f"no unique image symbol for ({a1!r}, {a2!r})") from None


def gamma_point(cert: HalfElemCert, x: Point) -> Point:
    """Image of a periodic point under the induced two-block conjugacy."""
    m = len(x)
    return tuple(gamma_block(cert, x[i], x[(i + 1) % m]) for i in range(m))


def verify_prop22(cert: HalfElemCert, m_max: int,
                  cap: int = DEFAULT_PERIOD_CAP) -> Report:
    """Check the flip-intertwining identity of the induced conjugacy.

    On every periodic point of period <= m_max the image of the flipped point
    must equal the once-shifted flip of the image point.  The first
    counterexample, if any, is reported with its period and coordinates.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    report = Report(title="flip intertwining of the induced conjugacy")
    for m in range(1, m_max + 1):
        bad: str = ""
        ok = True
        for x in enumerate_periodic(cert.source.A, m, cap=cap):
            try:
                lhs = gamma_point(cert, flip_point(cert.source, x))
                rhs = shift_point(flip_point(cert.target, gamma_point(cert, x)), 1)
            except CertificateError as e:
                ok, bad = False, f"point {x}: {e}"
                break
            if lhs != rhs:
                ok, bad = False, f"point {x}: {lhs} != {rhs}"
                break
        report.add(f"period {m}", ok, bad)
    return report


def sse_verify(chain: StrongChain) -> Report:
    """Re-verify every link of a chain and report its lag and parity.

    Even lag means the end systems are conjugate as flip systems; odd lag
    means the source is conjugate to the once-shifted flip of the target.
    """
    report = Report(title="splitting chain verification")
    for i, link in enumerate(chain.links):
        if link.source != chain.pairs[i] or link.target != chain.pairs[i + 1]:
            report.add(f"link {i} endpoints", False,
                       "link does not connect the adjacent pairs")
            continue
        try:
            he_check(link.source, link.target, link.R, supplied_S=link.S)
            report.add(f"link {i}", True)
        except CertificateError as e:
            report.add(f"link {i}", False, f"{e.identity}: {e}")
    k = chain.lag
    if k % 2 == 0:
        note = "even lag: end systems conjugate as flip systems"
    else:
        note = "odd lag: source conjugate to the once-shifted flip of the target"
    report.add(f"lag {k}", True, note)
    return report


# -- single-step search ----------------------------------------------------------


def he_search(src: FlipPair, dst: FlipPair, max_solutions: int = 16,
              cell_budget: int = DEFAULT_CELL_BUDGET) -> list[HalfElemCert]:
    """Enumerate all single splitting steps from src to dst, R row by row.

    S is forced by the derivation rule, so only zero-one R matrices are
    enumerated, in lexicographic row order.  Partial assignments are pruned
    against both product identities before descending.
    """
    na, nb = src.size, dst.size
    if na * nb > cell_budget:
        raise BudgetError(f"{na}x{nb} exceeds the search budget of {cell_budget} cells")
    aj = mat_mul(src.A, src.J).entries
    kb = mat_mul(dst.J, dst.A).entries
    tau_j = [src.alphabet.index(src.tau[a]) for a in src.alphabet]
    tau_k = [dst.alphabet.index(dst.tau[b]) for b in dst.alphabet]
    row_candidates = list(product((0, 1), repeat=nb))
    rows: list[tuple[int, ...]] = []
    found: list[HalfElemCert] = []

    def partial_ok(t: int) -> bool:
        # with rows 0..t placed, A*J == R*K*R^T is decided on those rows
        rt = rows[t]
        for i in range(t + 1):
            ri = rows[i]
            v1 = sum(rt[b] * ri[tau_k[b]] for b in range(nb))
            if v1 != aj[t][i]:
                return False
            v2 = sum(ri[b] * rt[tau_k[b]] for b in range(nb))
            if v2 != aj[i][t]:
                return False
        # monotone lower bounds for K*B == R^T*J*R on fully placed symbol pairs
        for b in range(nb):
            for b2 in range(nb):
                acc = 0
                for a in range(t + 1):
                    ja = tau_j[a]
                    if ja <= t:
                        acc += rows[a][b] * rows[ja][b2]
                        if acc > kb[b][b2]:
                            return False
        return True

    def descend():
        if len(found) >= max_solutions:
            return
        if len(rows) == na:
            r = IntMatrix.rect(src.alphabet, dst.alphabet, rows)
            try:
                found.append(he_check(src, dst, r))
            except CertificateError:
                pass
            return
        for cand in row_candidates:
            rows.append(cand)
            if partial_ok(len(rows) - 1):
                descend()
            rows.pop()
            if len(found) >= max_solutions:
                return

    descend()
    return found


# -- lag-k checking and bounded search -------------------------------------------


def sfe_check(src: FlipPair, dst: FlipPair, R: IntMatrix, lag: int,
              supplied_S: IntMatrix | None = None) -> ShiftFlipCert:
    """Check R as a lag-k equivalence witness from src to dst.

    Derives S = K R^T J and verifies A^k == R*S, B^k == S*R and A*R == R*B;
    the derived identity S*A == B*S is asserted as a consistency self-check.
    """
    if lag < 1:
        raise CertificateError("lag", "lag must be >= 1")
    if R.row_labels != src.alphabet or R.col_labels != dst.alphabet:
        raise CertificateError("shape", "R must map the source alphabet to the target alphabet")
    if any(x < 0 for row in R.entries for x in row):
        raise CertificateError("R nonnegative", "R has a negative entry")
    s = mat_mul(mat_mul(dst.J, R.transpose()), src.J)
    if supplied_S is not None and supplied_S != s:
        raise CertificateError("S == K*R^T*J", "supplied S differs from the derived one")
    if mat_mul(R, s) != mat_pow(src.A, lag):
        raise CertificateError("A^k == R*S", f"A^{lag} != R*S")
    if mat_mul(s, R) != mat_pow(dst.A, lag):
        raise CertificateError("B^k == S*R", f"B^{lag} != S*R")
    if mat_mul(src.A, R) != mat_mul(R, dst.A):
        raise CertificateError("A*R == R*B", "A*R != R*B")
    if mat_mul(s, src.A) != mat_mul(dst.A, s):
        raise CertificateError("S*A == B*S",
                               "internal: derived identity S*A == B*S failed")
    return ShiftFlipCert(source=src, target=dst, R=R, S=s, lag=lag)


def _rational_kernel_basis(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the kernel of a rational matrix, pivot-normalized.

    Each basis vector carries value 1 at its own free coordinate and 0 at the
    free coordinates of the others, so kernel vectors are recovered from their
    free coordinates alone.
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    m = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -m[ri][f]
        basis.append(v)
    return basis


def sfe_bounded_search(src: FlipPair, dst: FlipPair, lag_max: int, entry_max: int,
                       budget: int = DEFAULT_SEARCH_BUDGET) -> list[ShiftFlipCert]:
    """All lag-k certificates with entries of R bounded by entry_max, k <= lag_max.

    The intertwining condition A*R == R*B is linear in R, so candidates are
    enumerated inside its exact rational kernel: free coordinates of the
    kernel are entries of R and therefore range over 0..entry_max.  This is
    complete within the stated bounds; an empty result means "none within
    bounds", never a non-existence proof.
    """
    if lag_max < 1 or entry_max < 0:
        raise ValueError("need lag_max >= 1 and entry_max >= 0")
    na, nb = src.size, dst.size
    ncell = na * nb
    if ncell == 0:
        return []
    rows = []
    for i in range(na):
        for b in range(nb):
            row = [Fraction(0)] * ncell
            for j in range(na):
                row[j * nb + b] += src.A.entries[i][j]
            for c in range(nb):
                row[i * nb + c] -= dst.A.entries[c][b]
            rows.append(row)
    basis = _rational_kernel_basis(rows)
    d = len(basis)
    if (entry_max + 1) ** d > budget:
        raise BudgetError(
            f"kernel dimension {d} with entries <= {entry_max} exceeds budget {budget}")
    found: list[ShiftFlipCert] = []
    for coeffs in product(range(entry_max + 1), repeat=d):
        vec = [Fraction(0)] * ncell
        for c, bvec in zip(coeffs, basis):
            if c:
                for k, x in enumerate(bvec):
                    if x:
                        vec[k] += c * x
        if not all(x.denominator == 1 and 0 <= x <= entry_max for x in vec):
            continue
        r = IntMatrix.rect(src.alphabet, dst.alphabet,
                           [[int(vec[i * nb + b]) for b in range(nb)] for i in range(na)])
        for lag in range(1, lag_max + 1):
            try:
                found.append(sfe_check(src, dst, r, lag))
            except CertificateError:
                pass
    return found
