"""Full life of a secret: deal shares, lose some, recover, audit.

The secret is an entire vector in R^n.  Each participant holds a
codeword c, plus two residues: x = c . s and y = c' . s with c' taken
from the dual code.  Any k participants with independent codewords
rebuild the whole vector by solving one n x n system.
"""

from lcdshare import (
    deal,
    make_ring,
    random_lcd_code,
    recover,
    select_independent_rows,
    stack_rows,
    vector,
    verify_share,
)
from lcdshare.errors import InvalidShare, NotEnoughIndependentShares
from lcdshare.scheme import Share

ring = make_ring(2, 2)
code = random_lcd_code(ring, n=8, k=4, seed=42)
secret = vector(ring, [2, 2, 0, 1, 0, 3, 0, 0])

print(f"code: [{code.n}, {code.k}] over {ring}, threshold k = {code.k}")
print(f"secret: {secret.tolist()}")

shares, record = deal(code, secret, count=7, seed=99)
print(f"\ndealt {len(shares)} shares (seed 99):")
print(f"  {'id':>2}  {'codeword c':24} {'x':>2} {'y':>2}")
for s in shares:
    print(f"  {s.id:>2}  {str(s.c.tolist()):24} {s.x:>2} {s.y:>2}")

print("\nany k shares with independent codewords recover the secret.")
print("over Z_4 random codewords are often dependent (nilpotent rows are")
print("common), so pick an independent subset first:")
picked = select_independent_rows(stack_rows([s.c for s in shares]), code.k)
subset = [shares[i] for i in picked]
print(f"  using ids {[s.id for s in subset]}")
print(f"  recovered: {recover(code, subset).tolist()}")

print("\nfewer than k shares fail loudly, they do not leak a guess:")
try:
    recover(code, shares[:3])
except NotEnoughIndependentShares as exc:
    print(f"  {type(exc).__name__}: {exc}")

print("\na corrupted share is caught before any solving starts:")
bad_word = shares[0].c.tolist()
bad_word[0] = (bad_word[0] + 1) % ring.m
forged = Share(id=1, c=vector(ring, bad_word), x=shares[0].x, y=shares[0].y)
try:
    recover(code, [forged] + shares[1:5])
except InvalidShare as exc:
    print(f"  {type(exc).__name__}: {exc}")

print("\nshares can also be audited one by one against a known secret:")
print(f"  genuine share 3: {verify_share(code, secret, shares[2])}")
tampered = Share(id=3, c=shares[2].c, x=(shares[2].x + 1) % ring.m, y=shares[2].y)
print(f"  tampered x:      {verify_share(code, secret, tampered)}")

print("\nthe dealer record pins down every coefficient row it used:")
pid, l = record.coefficients[0]
print(f"  participant {pid} was dealt l = {l.tolist()}")
print(f"  l @ G = {(l @ code.G).tolist()} = its codeword above")
