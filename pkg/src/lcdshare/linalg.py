"""Exact linear algebra over Z_{p^e} with unit-pivot Gaussian elimination.

Because Z_{p^e} is a local ring, an entry can serve as a pivot exactly
when it is a unit (not divisible by p).  Elimination that only ever
pivots on units yields a well-defined rank:

    unit_rank(M) = number of unit pivots
                 = largest size of an invertible square submatrix
                 = classical rank of (M mod p) over the field F_p.

Full row rank in this sense is equivalent to having a right inverse,
and its failure is equivalent to the existence of a nonzero left null
vector; both directions are constructive here.

Vectors and matrices are immutable wrappers around int64 numpy arrays
in canonical residue form.  Products are reduced in chunks sized so
that no intermediate ever exceeds the int64 range, which keeps every
operation exact for any modulus up to 2**31 - 1.

The pivot policy is fixed for reproducibility: scan columns left to
right, pick the topmost unit entry in each, and never swap columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    BadParameters,
    DimensionMismatch,
    NotEnoughIndependentRows,
    NotFullRowRank,
    Singular,
)
from .ring import RingSpec

_INT64_MAX = 2**63 - 1


def _canon(ring: RingSpec, arr: np.ndarray) -> np.ndarray:
    out = np.asarray(arr, dtype=np.int64) % ring.m
    out.setflags(write=False)
    return out


def _mod_matmul(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """Exact (a @ b) % m for int64 arrays with entries in [0, m).

    A single int64 dot product can overflow once the inner dimension
    exceeds (2**63 - m) / (m-1)**2, so the accumulation is chunked to
    stay below that bound.  For small moduli the chunk covers the whole
    inner dimension and this is one plain matmul.
    """
    inner = a.shape[-1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    per_product = max(1, (m - 1) * (m - 1))
    chunk = max(1, (_INT64_MAX - m) // per_product)
    if inner <= chunk:
        return (a @ b) % m
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for start in range(0, inner, chunk):
        stop = start + chunk
        acc = (acc + a[:, start:stop] @ b[start:stop, :]) % m
    return acc


@dataclass(frozen=True, eq=False)
class RVector:
    """Immutable vector over a ring; entries canonical in [0, m)."""

    ring: RingSpec
    entries: np.ndarray

    def __post_init__(self):
        arr = _canon(self.ring, self.entries)
        if arr.ndim != 1:
            raise DimensionMismatch(f"vector must be 1-D, got shape {arr.shape}")
        object.__setattr__(self, "entries", arr)

    def __len__(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, i: int) -> int:
        return int(self.entries[i])

    def __iter__(self):
        return (int(v) for v in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RVector)
            and self.ring == other.ring
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.ring, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"RVector({self.ring}, {self.tolist()})"

    def tolist(self) -> list[int]:
        return [int(v) for v in self.entries]

    @property
    def is_zero(self) -> bool:
        return not self.entries.any()

    def _require_same_ring(self, other):
        if self.ring != other.ring:
            raise DimensionMismatch(f"mixed rings {self.ring} and {other.ring}")

    def __add__(self, other: "RVector") -> "RVector":
        self._require_same_ring(other)
        if len(self) != len(other):
            raise DimensionMismatch(f"lengths {len(self)} and {len(other)}")
        return RVector(self.ring, self.entries + other.entries)

    def __sub__(self, other: "RVector") -> "RVector":
        self._require_same_ring(other)
        if len(self) != len(other):
            raise DimensionMismatch(f"lengths {len(self)} and {len(other)}")
        return RVector(self.ring, self.entries - other.entries)

    def __mul__(self, scalar: int) -> "RVector":
        return RVector(self.ring, self.entries * (int(scalar) % self.ring.m))

    __rmul__ = __mul__

    def __neg__(self) -> "RVector":
        return RVector(self.ring, -self.entries)

    def __matmul__(self, other):
        # vector @ vector -> scalar, vector @ matrix -> vector (numpy rules)
        if isinstance(other, RVector):
            self._require_same_ring(other)
            if len(self) != len(other):
                raise DimensionMismatch(f"lengths {len(self)} and {len(other)}")
            prod = _mod_matmul(
                self.entries[None, :], other.entries[:, None], self.ring.m
            )
            return int(prod[0, 0])
        if isinstance(other, RMatrix):
            self._require_same_ring(other)
            if len(self) != other.rows:
                raise DimensionMismatch(
                    f"vector length {len(self)} vs {other.rows} matrix rows"
                )
            prod = _mod_matmul(self.entries[None, :], other.entries, self.ring.m)
            return RVector(self.ring, prod[0])
        return NotImplemented


@dataclass(frozen=True, eq=False)
class RMatrix:
    """Immutable matrix over a ring; entries canonical in [0, m)."""

    ring: RingSpec
    entries: np.ndarray

    def __post_init__(self):
        arr = _canon(self.ring, self.entries)
        if arr.ndim != 2:
            raise DimensionMismatch(f"matrix must be 2-D, got shape {arr.shape}")
        object.__setattr__(self, "entries", arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> "RMatrix":
        return RMatrix(self.ring, self.entries.T)

    def row(self, i: int) -> RVector:
        return RVector(self.ring, self.entries[i])

    def take_rows(self, indices: Sequence[int]) -> "RMatrix":
        picked = self.entries[list(indices), :] if len(self.entries) else self.entries
        return RMatrix(self.ring, picked.reshape(len(indices), self.cols))

    def take_cols(self, indices: Sequence[int]) -> "RMatrix":
        return RMatrix(self.ring, self.entries[:, list(indices)])

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RMatrix)
            and self.ring == other.ring
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.ring, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"RMatrix({self.ring}, {self.tolist()})"

    def _require_same_ring(self, other):
        if self.ring != other.ring:
            raise DimensionMismatch(f"mixed rings {self.ring} and {other.ring}")

    def __add__(self, other: "RMatrix") -> "RMatrix":
        self._require_same_ring(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")
        return RMatrix(self.ring, self.entries + other.entries)

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        self._require_same_ring(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")
        return RMatrix(self.ring, self.entries - other.entries)

    def __mul__(self, scalar: int) -> "RMatrix":
        return RMatrix(self.ring, self.entries * (int(scalar) % self.ring.m))

    __rmul__ = __mul__

    def __neg__(self) -> "RMatrix":
        return RMatrix(self.ring, -self.entries)

    def __matmul__(self, other):
        if isinstance(other, RMatrix):
            self._require_same_ring(other)
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            return RMatrix(self.ring, _mod_matmul(self.entries, other.entries, self.ring.m))
        if isinstance(other, RVector):
            self._require_same_ring(other)
            if self.cols != len(other):
                raise DimensionMismatch(f"{self.shape} @ vector of length {len(other)}")
            prod = _mod_matmul(self.entries, other.entries[:, None], self.ring.m)
            return RVector(self.ring, prod[:, 0])
        return NotImplemented

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "RMatrix":
        return cls(ring, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int) -> "RMatrix":
        return cls(ring, np.zeros((rows, cols), dtype=np.int64))


def vector(ring: RingSpec, values: Iterable[int]) -> RVector:
    """Build a canonical vector; values are reduced mod p**e."""
    return RVector(ring, np.array(list(values), dtype=np.int64))


def matrix(ring: RingSpec, rows: Iterable[Iterable[int]]) -> RMatrix:
    """Build a canonical matrix; values are reduced mod p**e."""
    data = [list(r) for r in rows]
    if data and len({len(r) for r in data}) > 1:
        raise DimensionMismatch("rows have unequal lengths")
    arr = np.array(data, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(len(data), 0)
    return RMatrix(ring, arr)


def stack_rows(parts: Sequence[Union[RVector, RMatrix]]) -> RMatrix:
    """Stack vectors (as rows) and matrices vertically."""
    if not parts:
        raise BadParameters("nothing to stack")
    ring = parts[0].ring
    blocks = []
    width = None
    for part in parts:
        if part.ring != ring:
            raise DimensionMismatch("mixed rings in stack")
        block = part.entries[None, :] if isinstance(part, RVector) else part.entries
        if width is None:
            width = block.shape[1]
        elif block.shape[1] != width:
            raise DimensionMismatch("mixed widths in stack")
        blocks.append(block)
    return RMatrix(ring, np.vstack(blocks))


def _rref(ring: RingSpec, a: np.ndarray):
    """Reduced row echelon form using unit pivots only.

    Returns (E, U, pivots) with U @ a == E (mod m), U invertible, and
    pivots the list of pivot column indices in increasing order.  Rows
    that end without a pivot consist entirely of nilpotent entries.

    Pivot choice is deterministic: first eligible column, topmost unit
    entry within it.
    """
    m, p = ring.m, ring.p
    rows, cols = a.shape
    E = a.astype(np.int64, copy=True) % m
    U = np.eye(rows, dtype=np.int64)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(E[r:, c] % p != 0)[0]
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            E[[r, i]] = E[[i, r]]
            U[[r, i]] = U[[i, r]]
        inv = ring.inverse(int(E[r, c]))
        E[r] = E[r] * inv % m
        U[r] = U[r] * inv % m
        factors = E[:, c].copy()
        factors[r] = 0
        E = (E - np.outer(factors, E[r])) % m
        U = (U - np.outer(factors, U[r])) % m
        pivots.append(c)
        r += 1
    return E, U, pivots


def unit_rank(mat: RMatrix) -> int:
    """Number of unit pivots; the size of the largest invertible
    square submatrix."""
    _, _, pivots = _rref(mat.ring, mat.entries)
    return len(pivots)


def is_full_row_rank(mat: RMatrix) -> bool:
    """True iff every row yields a unit pivot (right-invertibility)."""
    return unit_rank(mat) == mat.rows


def right_inverse(mat: RMatrix) -> RMatrix:
    """An N with mat @ N = identity, for a full-row-rank k x n matrix.

    From U @ mat = E in reduced echelon form, the pivot columns of E
    form an identity, so placing the rows of U at the pivot positions
    of an n x k zero matrix gives a right inverse.
    """
    k, n = mat.rows, mat.cols
    _, U, pivots = _rref(mat.ring, mat.entries)
    if len(pivots) < k:
        raise NotFullRowRank(
            f"matrix has unit rank {len(pivots)} < {k} rows; no right inverse"
        )
    N = np.zeros((n, k), dtype=np.int64)
    for i, c in enumerate(pivots):
        N[c, :] = U[i, :]
    return RMatrix(mat.ring, N)


def solve_unique(a: RMatrix, b: RVector) -> RVector:
    """Solve a @ x = b for square invertible a; the transform from the
    elimination is exactly a^{-1} when all pivots are units."""
    if a.ring != b.ring:
        raise DimensionMismatch(f"mixed rings {a.ring} and {b.ring}")
    if a.rows != a.cols:
        raise DimensionMismatch(f"system matrix must be square, got {a.shape}")
    if a.rows != len(b):
        raise DimensionMismatch(f"{a.shape} system with length-{len(b)} right side")
    _, U, pivots = _rref(a.ring, a.entries)
    if len(pivots) < a.rows:
        raise Singular(
            f"system matrix has unit rank {len(pivots)} < {a.rows}; "
            "no unique solution"
        )
    x = _mod_matmul(U, b.entries[:, None], a.ring.m)
    return RVector(a.ring, x[:, 0])


def select_independent_rows(mat: RMatrix, count: int) -> list[int]:
    """Greedy lowest-index-first choice of `count` rows with full row
    rank; returns the lexicographically first such index set.

    A row is accepted iff, after reduction against the rows already
    chosen, a unit entry survives (equivalently: appending it raises
    the unit rank by one).
    """
    if count < 0 or count > mat.rows:
        raise BadParameters(f"cannot select {count} rows from {mat.rows}")
    m, p = mat.ring.m, mat.ring.p
    chosen: list[int] = []
    basis: list[np.ndarray] = []  # kept mutually reduced, pivots normalized to 1
    pivot_cols: list[int] = []
    for i in range(mat.rows):
        if len(chosen) == count:
            break
        row = mat.entries[i].astype(np.int64, copy=True)
        for b_row, pc in zip(basis, pivot_cols):
            f = int(row[pc])
            if f:
                row = (row - f * b_row) % m
        units = np.nonzero(row % p != 0)[0]
        if units.size == 0:
            continue
        pc = int(units[0])
        row = row * mat.ring.inverse(int(row[pc])) % m
        for j, b_row in enumerate(basis):
            f = int(b_row[pc])
            if f:
                basis[j] = (b_row - f * row) % m
        basis.append(row)
        pivot_cols.append(pc)
        chosen.append(i)
    if len(chosen) < count:
        raise NotEnoughIndependentRows(
            f"only {len(chosen)} independent rows found, needed {count}"
        )
    return chosen


def left_null_vector(mat: RMatrix) -> RVector:
    """A nonzero x with x @ mat = 0, for a matrix without full row rank.

    Any pivotless row of the echelon form is all-nilpotent, so p^{e-1}
    times the corresponding transform row annihilates the matrix while
    itself keeping a nonzero (since U is invertible) coordinate.
    """
    ring = mat.ring
    _, U, pivots = _rref(ring, mat.entries)
    rank = len(pivots)
    if rank == mat.rows:
        raise BadParameters("matrix has full row rank; no nonzero left null vector")
    witness = U[rank] * ring.p ** (ring.e - 1) % ring.m
    return RVector(ring, witness)
