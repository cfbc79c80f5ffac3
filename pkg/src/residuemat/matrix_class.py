"""Cyclotomic sign matrices and the realizability classification.

A CycMatrix is an n x n array of residue-symbol indices mod d with an
undefined diagonal.  Whether such a matrix can be realized by a tuple of
distinct monic irreducibles depends only on (q - 1)/d:

* symmetric law (q even, or (q - 1)/d even): realizable iff symmetric;
* odd law (q odd and (q - 1)/d odd, forcing d even): realizable iff every
  entry pair is equal or negated (epsilon(j, k) well defined) and the
  diagonal of M Mbar is, as a multiset, s copies of n + 1 - 2s together
  with n - s copies of n - 1 for some 1 <= s <= n.  The s = 1 case is
  exactly the symmetric matrices (a 1 x 1 skew block is vacuous).

The second branch is equivalent to the existence of a permutation putting
the matrix into block form [[A, B], [B^t, S]] with A an s x s
skew-symmetric block (entry pairs negated: m_jk - m_kj = d/2 mod d),
S symmetric, and the lower-left block the exact transpose of B.
classify() decides the multiset condition directly and reconstructs the
permutation; the block search only exists for the brute-force
cross-check.

The text format: first line "n d", then n rows of n whitespace-separated
entries with "." on the diagonal.
"""

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

SYMMETRIC_LAW = "symmetric"
ODD_LAW = "odd"


class CycMatrix:
    """Immutable n x n matrix of indices mod d, diagonal undefined."""

    __slots__ = ("n", "d", "entries")

    def __init__(self, n: int, d: int, entries):
        if n < 1:
            raise ValueError("matrix size must be >= 1")
        if d < 1:
            raise ValueError("d must be >= 1")
        rows = [list(r) for r in entries]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected {n} rows of {n} entries")
        for i in range(n):
            for j in range(n):
                if i == j:
                    rows[i][j] = None
                else:
                    v = rows[i][j]
                    if not isinstance(v, int) or not 0 <= v < d:
                        raise ValueError(
                            f"entry ({i + 1},{j + 1}) = {v!r} not an index in [0, {d})"
                        )
        self.n = n
        self.d = d
        self.entries = tuple(tuple(r) for r in rows)

    def entry(self, i: int, j: int) -> int:
        """Off-diagonal entry, 0-based."""
        if i == j:
            raise ValueError("diagonal entries are undefined")
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, CycMatrix)
            and self.n == other.n
            and self.d == other.d
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n, self.d, self.entries))

    def __repr__(self):
        return f"CycMatrix({self.n}, {self.d}, {self.entries!r})"


def parse_matrix(text: str) -> CycMatrix:
    """Parse the text format; inverse of format_matrix."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n d', got {lines[0]!r}")
    n, d = int(head[0]), int(head[1])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} matrix rows, got {len(lines) - 1}")
    entries = []
    for i, ln in enumerate(lines[1:]):
        toks = ln.split()
        if len(toks) != n:
            raise ValueError(f"row {i + 1} has {len(toks)} entries, expected {n}")
        row = []
        for j, tok in enumerate(toks):
            if i == j:
                if tok != ".":
                    raise ValueError(f"diagonal entry ({i + 1},{i + 1}) must be '.'")
                row.append(None)
            else:
                if tok == ".":
                    raise ValueError(
                        f"off-diagonal entry ({i + 1},{j + 1}) must be an integer"
                    )
                row.append(int(tok))
        entries.append(row)
    return CycMatrix(n, d, entries)


def format_matrix(M: CycMatrix) -> str:
    lines = [f"{M.n} {M.d}"]
    for i in range(M.n):
        lines.append(
            " ".join("." if i == j else str(M.entries[i][j]) for j in range(M.n))
        )
    return "\n".join(lines) + "\n"


def epsilon(M: CycMatrix, j: int, k: int) -> Optional[int]:
    """Value of zeta^(m_jk) * conj(zeta^(m_kj)) when it is real: +1 for equal
    indices, -1 for indices differing by exactly d/2 mod d, None otherwise.
    Indices j, k are 0-based and must differ."""
    if j == k:
        raise ValueError("epsilon is undefined on the diagonal")
    a, b = M.entries[j][k], M.entries[k][j]
    if a == b:
        return 1
    d = M.d
    if d % 2 == 0 and (a - b) % d == d // 2:
        return -1
    return None


def mmbar_diagonal(M: CycMatrix) -> list:
    """Diagonal of M Mbar^t with zeta^k entries, as exact integers.

    Entry j is sum_k zeta^(m_jk) * conj(zeta^(m_kj)) over k != j, plus the
    n - 1 is implicit... concretely each summand is zeta^(m_jk - m_kj),
    which is +1 or -1 exactly when the matrix is epsilon-compatible; any
    other summand would be a proper complex number, which cannot happen for
    a realizable matrix, so that case raises.
    """
    n, d = M.n, M.d
    out = []
    for j in range(n):
        total = 0
        for k in range(n):
            if k == j:
                continue
            e = epsilon(M, j, k)
            if e is None:
                raise ValueError(
                    f"entries ({j + 1},{k + 1}) and ({k + 1},{j + 1}) are neither "
                    "equal nor conjugate; M Mbar diagonal is not an integer vector"
                )
            total += e
        out.append(total)
    return out


@dataclass(frozen=True)
class Classification:
    """Outcome of classify(): verdict plus the data needed to act on it.

    s and sigma are set only on the odd-law branch of a realizable matrix:
    sigma permutes positions so that the s rows carrying a -1 partner come
    first (for s = 1, where no row is distinguished, row 1 is designated),
    and a realizing tuple must use odd-degree polynomials exactly at those
    leading positions.  witness_pair (0-based) is set for symmetry and
    epsilon failures; witness_diagonal carries the sorted M Mbar diagonal
    when no admissible s exists.
    """

    realizable: bool
    branch: str
    s: Optional[int] = None
    sigma: Optional[tuple] = None
    witness_pair: Optional[tuple] = None
    witness_diagonal: Optional[tuple] = None

    def to_json_dict(self) -> dict:
        out = {
            "verdict": "realizable" if self.realizable else "not_realizable",
            "branch": self.branch,
            "s": self.s,
            "sigma": list(x + 1 for x in self.sigma) if self.sigma else None,
        }
        if self.witness_pair is not None:
            out["witness"] = {"pair": [self.witness_pair[0] + 1, self.witness_pair[1] + 1]}
        elif self.witness_diagonal is not None:
            out["witness"] = {"mmbar_diagonal": list(self.witness_diagonal)}
        else:
            out["witness"] = None
        return out


def classify(M: CycMatrix, q: int) -> Classification:
    """Decide realizability of M over F_q[t] for its own d."""
    if q < 2:
        raise ValueError(f"q must be a prime power >= 2, got {q}")
    if (q - 1) % M.d != 0:
        raise ValueError(f"d = {M.d} does not divide q - 1 = {q - 1}")
    if q % 2 == 0 or ((q - 1) // M.d) % 2 == 0:
        return _symmetric_law_decision(M)
    return _odd_law_decision(M)


def _symmetric_law_decision(M: CycMatrix) -> Classification:
    for i in range(M.n):
        for j in range(i + 1, M.n):
            if M.entries[i][j] != M.entries[j][i]:
                return Classification(
                    realizable=False, branch=SYMMETRIC_LAW, witness_pair=(i, j)
                )
    return Classification(realizable=True, branch=SYMMETRIC_LAW)


def _odd_law_decision(M: CycMatrix) -> Classification:
    n = M.n
    for i in range(n):
        for j in range(i + 1, n):
            if epsilon(M, i, j) is None:
                return Classification(
                    realizable=False, branch=ODD_LAW, witness_pair=(i, j)
                )
    diag = mmbar_diagonal(M)
    # D_j = n + 1 - 2s at the s skew positions and n - 1 elsewhere.  At most
    # one s in [1, n] can match a given multiset (s = 1 means all n - 1),
    # so the ascending scan returns the smallest — and only — valid s.
    for s in range(1, n + 1):
        want = Counter()
        want[n + 1 - 2 * s] += s
        if n - s:
            want[n - 1] += n - s
        if Counter(diag) == want:
            if s >= 2:
                target = n + 1 - 2 * s
                skew = [j for j in range(n) if diag[j] == target]
                rest = [j for j in range(n) if diag[j] != target]
                sigma = tuple(skew + rest)
            else:
                sigma = tuple(range(n))
            return Classification(realizable=True, branch=ODD_LAW, s=s, sigma=sigma)
    return Classification(
        realizable=False, branch=ODD_LAW, witness_diagonal=tuple(sorted(diag))
    )


def conjugate_by_permutation(M: CycMatrix, sigma) -> CycMatrix:
    """Matrix M' with M'[i][j] = M[sigma(i)][sigma(j)] (sigma 0-based)."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(M.n)):
        raise ValueError(f"not a permutation of range({M.n}): {sigma}")
    entries = [
        [None if i == j else M.entries[sigma[i]][sigma[j]] for j in range(M.n)]
        for i in range(M.n)
    ]
    return CycMatrix(M.n, M.d, entries)


def scale_indices(M: CycMatrix, c: int) -> CycMatrix:
    """Entrywise multiplication by a unit c mod d: the change of isomorphism."""
    if math.gcd(c, M.d) != 1:
        raise ValueError(f"c = {c} is not a unit mod d = {M.d}")
    entries = [
        [None if i == j else (c * M.entries[i][j]) % M.d for j in range(M.n)]
        for i in range(M.n)
    ]
    return CycMatrix(M.n, M.d, entries)


def check_block_form(M: CycMatrix, s: int, sigma) -> bool:
    """Does conjugating by sigma put M into [[A skew, B], [B^t, S sym]] form?

    A is the leading s x s block with m_jk - m_kj = d/2 mod d off its
    diagonal (vacuous for s = 1), S the trailing symmetric block, and the
    lower-left block must be the exact transpose of B.
    """
    n, d = M.n, M.d
    if not 1 <= s <= n:
        raise ValueError(f"s = {s} out of range [1, {n}]")
    if s >= 2 and d % 2 != 0:
        return False
    Mp = conjugate_by_permutation(M, sigma)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = Mp.entries[i][j], Mp.entries[j][i]
            if j < s:
                if (a - b) % d != d // 2:
                    return False
            elif a != b:
                return False
    return True


def iter_all_matrices(n: int, d: int) -> Iterator[CycMatrix]:
    """All d^(n(n-1)) matrices, in row-major lexicographic entry order."""
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    for combo in itertools.product(range(d), repeat=len(slots)):
        entries = [[None] * n for _ in range(n)]
        for (i, j), v in zip(slots, combo):
            entries[i][j] = v
        yield CycMatrix(n, d, entries)


@dataclass(frozen=True)
class EquivReport:
    """Brute-force comparison of the block-form and diagonal criteria."""

    n: int
    d: int
    total: int
    admissible: int
    mismatches: tuple

    @property
    def equivalent(self) -> bool:
        return not self.mismatches


def criteria_equiv_bruteforce(n: int, d: int, bound: int = 1_000_000) -> EquivReport:
    """Check (block form exists) == (diagonal criterion) over every matrix.

    The left side searches all (s, sigma) pairs outright, so this is
    definition-level and independent of the shortcut in classify().  Work
    is capped by `bound` on the number of matrices.
    """
    if d % 2 != 0:
        raise ValueError("the odd law requires d even")
    total = d ** (n * (n - 1))
    if total > bound:
        raise ValueError(f"{total} matrices exceed the bound {bound}")
    admissible = 0
    mismatches = []
    perms = list(itertools.permutations(range(n)))
    for M in iter_all_matrices(n, d):
        by_blocks = any(
            check_block_form(M, s, sigma)
            for s in range(1, n + 1)
            for sigma in perms
        )
        by_diag = _odd_law_decision(M).realizable
        if by_blocks:
            admissible += 1
        if by_blocks != by_diag:
            mismatches.append(M)
    return EquivReport(
        n=n, d=d, total=total, admissible=admissible, mismatches=tuple(mismatches)
    )
