"""Free linear codes over Z_{p^e} and the LCD property.

A code here is the row span of a full-row-rank k x n generator matrix
G, together with a full-row-rank parity check matrix H satisfying
G H^T = 0.  The code is LCD (linear complementary dual) when the code
meets its dual only in the zero word, which is equivalent to the
stacked n x n matrix (G over H) being invertible.  That equivalence is
what is_lcd computes; is_lcd_oracle instead enumerates both codes and
intersects them, so the two must agree and can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadParameters,
    DimensionMismatch,
    GenerationFailed,
    NotFullRowRank,
    TooLargeToEnumerate,
    ValidationError,
)
from .linalg import RMatrix, RVector, _rref, is_full_row_rank, stack_rows, unit_rank
from .ring import RingSpec
from .rng import SplitMix64

ENUMERATION_LIMIT = 2**20
DEFAULT_MAX_TRIES = 10_000


@dataclass(frozen=True)
class LinearCode:
    """A free [n, k] code with both G and H stored explicitly.

    Validation runs on construction: shape and ring consistency,
    1 <= k <= n, full row rank of G and H, and G H^T = 0.  For k = n
    the parity check matrix is the empty 0 x n matrix and the dual
    code is {0}.
    """

    ring: RingSpec
    n: int
    k: int
    G: RMatrix
    H: RMatrix

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if not 1 <= self.k <= self.n:
            raise ValidationError(f"dimension k={self.k} outside 1..n={self.n}")
        if self.G.ring != self.ring or self.H.ring != self.ring:
            raise ValidationError("G/H ring differs from the code ring")
        if self.G.shape != (self.k, self.n):
            raise ValidationError(
                f"G has shape {self.G.shape}, expected {(self.k, self.n)}"
            )
        if self.H.shape != (self.n - self.k, self.n):
            raise ValidationError(
                f"H has shape {self.H.shape}, expected {(self.n - self.k, self.n)}"
            )
        if not is_full_row_rank(self.G):
            raise ValidationError("G is not full row rank")
        if self.H.rows and not is_full_row_rank(self.H):
            raise ValidationError("H is not full row rank")
        syndromes = self.G @ self.H.T
        if syndromes.entries.any():
            raise ValidationError("G H^T != 0")


def parity_check_from_generator(generator: RMatrix) -> LinearCode:
    """Derive H from a full-row-rank G and assemble the code.

    Row-reduce G; the reduced form is an identity on its pivot columns
    and some block A elsewhere, so placing -A^T on the pivot columns
    and an identity on the remaining columns yields a full-row-rank H
    with G H^T = 0.  Column swaps are implicit: pivot columns need not
    be the leading ones, and H comes back in the original column order.
    """
    ring = generator.ring
    k, n = generator.rows, generator.cols
    E, _, pivots = _rref(ring, generator.entries)
    if len(pivots) < k:
        raise NotFullRowRank(
            f"generator has unit rank {len(pivots)} < {k}; cannot derive parity check"
        )
    others = [c for c in range(n) if c not in set(pivots)]
    H = np.zeros((n - k, n), dtype=np.int64)
    for j, c in enumerate(others):
        H[j, c] = 1
        for i, pc in enumerate(pivots):
            H[j, pc] = (-int(E[i, c])) % ring.m
    return LinearCode(ring=ring, n=n, k=k, G=generator, H=RMatrix(ring, H))


def encode(code: LinearCode, coefficients: RVector) -> RVector:
    """Codeword for a coefficient row: l @ G."""
    if coefficients.ring != code.ring:
        raise DimensionMismatch("coefficient ring differs from the code ring")
    if len(coefficients) != code.k:
        raise DimensionMismatch(
            f"coefficient vector has length {len(coefficients)}, expected k={code.k}"
        )
    return coefficients @ code.G


def is_codeword(code: LinearCode, word: RVector) -> bool:
    """Parity test: word @ H^T = 0."""
    if word.ring != code.ring or len(word) != code.n:
        raise DimensionMismatch("word does not match the code's ring or length")
    return (word @ code.H.T).is_zero


def is_lcd(code: LinearCode) -> bool:
    """LCD test via invertibility of the stacked (G over H) matrix."""
    stacked = stack_rows([code.G, code.H]) if code.H.rows else code.G
    return unit_rank(stacked) == code.n


def _all_vectors(ring: RingSpec, length: int) -> np.ndarray:
    """All of R^length as an (m**length, length) array, lexicographic."""
    total = ring.m**length
    idx = np.arange(total, dtype=np.int64)
    cols = [(idx // ring.m ** (length - 1 - j)) % ring.m for j in range(length)]
    if not cols:
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _row_set(arr: np.ndarray) -> np.ndarray:
    """View rows as opaque fixed-size records for set operations."""
    a = np.ascontiguousarray(arr)
    return a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).ravel()


def is_lcd_oracle(code: LinearCode, limit: int = ENUMERATION_LIMIT) -> bool:
    """Brute-force LCD test: enumerate the code and its dual in full
    and check the intersection is exactly {0}.

    Exists as an independent cross-check for is_lcd; refuses to run
    when either enumeration would exceed `limit` words.
    """
    m = code.ring.m
    if m**code.k > limit or m ** (code.n - code.k) > limit:
        raise TooLargeToEnumerate(
            f"enumerating {m}^{code.k} + {m}^{code.n - code.k} words exceeds {limit}"
        )
    from .linalg import _mod_matmul  # local import keeps module surface tidy

    codewords = _mod_matmul(_all_vectors(code.ring, code.k), code.G.entries, m)
    duals = _mod_matmul(_all_vectors(code.ring, code.n - code.k), code.H.entries, m)
    common = np.intersect1d(_row_set(codewords), _row_set(duals))
    # the zero word always lies in both, so LCD means nothing else does
    return common.size == 1


def dual(code: LinearCode) -> LinearCode:
    """The dual code, generated by H and checked by G."""
    if code.k == code.n:
        raise BadParameters("dual of a full-space code has dimension 0")
    return LinearCode(
        ring=code.ring, n=code.n, k=code.n - code.k, G=code.H, H=code.G
    )


def _random_matrix(rng: SplitMix64, ring: RingSpec, rows: int, cols: int) -> RMatrix:
    values = np.array(rng.residues(rows * cols, ring.m), dtype=np.int64)
    return RMatrix(ring, values.reshape(rows, cols))


def random_code(
    ring: RingSpec, n: int, k: int, seed: int, max_tries: int = DEFAULT_MAX_TRIES
) -> LinearCode:
    """Uniformly drawn full-row-rank generator, not filtered for LCD."""
    if not 1 <= k <= n:
        raise BadParameters(f"need 1 <= k <= n, got k={k}, n={n}")
    rng = SplitMix64(seed)
    for _ in range(max_tries):
        g = _random_matrix(rng, ring, k, n)
        if is_full_row_rank(g):
            return parity_check_from_generator(g)
    raise GenerationFailed(f"no full-row-rank generator found in {max_tries} draws")


def random_lcd_code(
    ring: RingSpec, n: int, k: int, seed: int, max_tries: int = DEFAULT_MAX_TRIES
) -> LinearCode:
    """Rejection-sample uniform generators until the derived code is LCD.

    Deterministic for a fixed seed.  Each draw counts against
    max_tries whether it fails the rank test or the LCD test.
    """
    if not 1 <= k <= n:
        raise BadParameters(f"need 1 <= k <= n, got k={k}, n={n}")
    rng = SplitMix64(seed)
    for _ in range(max_tries):
        g = _random_matrix(rng, ring, k, n)
        if not is_full_row_rank(g):
            continue
        code = parity_check_from_generator(g)
        if is_lcd(code):
            return code
    raise GenerationFailed(f"no LCD code found in {max_tries} draws")
