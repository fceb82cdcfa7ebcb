"""Multi-secret sharing on top of an LCD code.

The secret is a whole vector s in R^n.  Each participant i receives

    P_i = (c_i, x_i, y_i)   with   c_i = l_i G,
                                   x_i = c_i . s,
                                   y_i = c'_i . s,

where l_i is a dealer-chosen coefficient row, l'_i keeps the first
n - k coordinates of l_i, and c'_i = l'_i H lies in the dual code.
Any k participants whose codewords are independent can reconstruct s:
their c rows contribute k equations, and because the code is LCD the
dual-side rows c''_j rebuilt from l''_i = c_i G^+ contribute n - k
more, giving an invertible n x n system.

The scheme needs 2k >= n so that the truncation from l to l' removes
2k - n trailing coordinates and leaves exactly n - k of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .codes import LinearCode, encode, is_codeword, is_lcd
from .errors import (
    BadParameters,
    DimensionMismatch,
    InternalSingular,
    InvalidShare,
    NotEnoughIndependentRows,
    NotEnoughIndependentShares,
    NotLcd,
    Singular,
)
from .linalg import (
    RVector,
    right_inverse,
    select_independent_rows,
    solve_unique,
    stack_rows,
    vector,
)
from .ring import RingSpec
from .rng import SplitMix64


@dataclass(frozen=True)
class Share:
    """One participant's holding: 1-based id, codeword, two residues."""

    id: int
    c: RVector
    x: int
    y: int


@dataclass(frozen=True)
class DealRecord:
    """Dealer-side audit trail: the seed and every coefficient row.

    coefficients holds (participant id, l_i) pairs in dealing order.
    """

    ring: RingSpec
    n: int
    k: int
    seed: int
    coefficients: tuple[tuple[int, RVector], ...]


def _check_scheme_inputs(code: LinearCode, secret: RVector) -> None:
    if 2 * code.k < code.n:
        raise BadParameters(
            f"scheme needs 2k >= n, got k={code.k}, n={code.n}"
        )
    if not is_lcd(code):
        raise NotLcd("the code is not LCD; shares would not be recoverable")
    if secret.ring != code.ring:
        raise DimensionMismatch("secret ring differs from the code ring")
    if len(secret) != code.n:
        raise DimensionMismatch(
            f"secret has length {len(secret)}, expected n={code.n}"
        )


def deal_one(
    code: LinearCode, secret: RVector, coefficients: RVector, share_id: int = 1
) -> Share:
    """Produce a single share from an explicit coefficient row."""
    _check_scheme_inputs(code, secret)
    c = encode(code, coefficients)
    truncated = vector(code.ring, coefficients.tolist()[: code.n - code.k])
    c_dual = truncated @ code.H
    return Share(id=share_id, c=c, x=c @ secret, y=c_dual @ secret)


def deal(
    code: LinearCode,
    secret: RVector,
    count: int,
    seed: int,
    coefficients: Optional[Sequence[RVector]] = None,
) -> tuple[list[Share], DealRecord]:
    """Deal `count` shares with ids 1..count.

    Coefficient rows are drawn uniformly from the seeded generator
    unless an explicit list overrides them (the override still records
    the seed it was called with).
    """
    _check_scheme_inputs(code, secret)
    if count < 1:
        raise BadParameters(f"count must be >= 1, got {count}")
    if coefficients is not None:
        if len(coefficients) != count:
            raise BadParameters(
                f"{len(coefficients)} coefficient rows supplied for count={count}"
            )
        rows = list(coefficients)
    else:
        rng = SplitMix64(seed)
        rows = [
            vector(code.ring, rng.residues(code.k, code.ring.m))
            for _ in range(count)
        ]
    shares = [
        deal_one(code, secret, l, share_id=i + 1) for i, l in enumerate(rows)
    ]
    record = DealRecord(
        ring=code.ring,
        n=code.n,
        k=code.k,
        seed=seed,
        coefficients=tuple((i + 1, l) for i, l in enumerate(rows)),
    )
    return shares, record


def recover(code: LinearCode, shares: Sequence[Share]) -> RVector:
    """Reconstruct the secret from at least k independent shares.

    Steps: reject non-codeword shares; greedily pick the first k whose
    codewords are independent; recompute l''_i = c_i G^+ and truncate
    each row to its first n - k coordinates; greedily pick n - k
    independent truncated rows and push them through H to get dual
    codewords; solve the stacked n x n system against the matching
    x and y values.  Exactly k shares are consumed; extras beyond the
    selection only matter for auditing via verify_share.
    """
    if 2 * code.k < code.n:
        raise BadParameters(f"scheme needs 2k >= n, got k={code.k}, n={code.n}")
    if not is_lcd(code):
        raise NotLcd("the code is not LCD; recovery is not defined")
    n, k = code.n, code.k
    for share in shares:
        if share.c.ring != code.ring or len(share.c) != n:
            raise DimensionMismatch(f"share {share.id} does not match the code")
        if not is_codeword(code, share.c):
            raise InvalidShare(f"share {share.id}: c is not a codeword")
    if len(shares) < k:
        raise NotEnoughIndependentShares(
            f"{len(shares)} shares supplied, need at least k={k}"
        )
    c_matrix = stack_rows([share.c for share in shares])
    try:
        picked = select_independent_rows(c_matrix, k)
    except NotEnoughIndependentRows as exc:
        raise NotEnoughIndependentShares(str(exc)) from exc
    selected = [shares[i] for i in picked]

    g_inv = right_inverse(code.G)
    l_rows = stack_rows([share.c @ g_inv for share in selected])
    truncated = l_rows.take_cols(range(n - k))
    try:
        dual_picks = select_independent_rows(truncated, n - k)
    except NotEnoughIndependentRows as exc:
        # impossible for a valid LCD code; inputs must be corrupted
        raise InternalSingular(str(exc)) from exc

    equations = [share.c for share in selected]
    values = [share.x for share in selected]
    for j in dual_picks:
        equations.append(truncated.row(j) @ code.H)
        values.append(selected[j].y)
    system = stack_rows(equations)
    try:
        return solve_unique(system, vector(code.ring, values))
    except Singular as exc:
        raise InternalSingular(str(exc)) from exc


def verify_share(code: LinearCode, secret: RVector, share: Share) -> bool:
    """Audit one share against a candidate secret.

    True iff c is a codeword, x matches c . s, and y matches the dual
    word rebuilt from c (the coefficient row is c G^+, which equals the
    dealer's l exactly because G G^+ is the identity).
    """
    _check_scheme_inputs(code, secret)
    if share.c.ring != code.ring or len(share.c) != code.n:
        return False
    if not is_codeword(code, share.c):
        return False
    if (share.c @ secret) != share.x % code.ring.m:
        return False
    l_row = share.c @ right_inverse(code.G)
    truncated = vector(code.ring, l_row.tolist()[: code.n - code.k])
    return (truncated @ code.H) @ secret == share.y % code.ring.m
