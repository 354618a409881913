#!/usr/bin/env python3
"""Verify the central-binomial identity three ways.

sum_{i=0..n} C(2i,i) * C(2n-2i,n-i) = 4^n

First arithmetically, then structurally (split every length-2n path at its
last visit to the baseline and tally by prefix length), and finally by the
exhaustive bijection sweep that pairs balanced with unbalanced paths.
"""

from dyckflip import verify_bijection, verify_identity

print("arithmetic identity, a few sizes:")
for n in (0, 1, 2, 5, 10, 100):
    r = verify_identity(n, "arithmetic")
    print(f"  n={n:4d}  lhs=rhs={r.identity_lhs}")
print()

print("structural identity at n=4 (tally of paths by balanced-prefix half-length):")
r = verify_identity(4, "structural")
for i, t in enumerate(r.structural_tallies):
    print(f"  prefix half-length {i}: {t} paths")
print(f"  total {r.identity_lhs} = 4^4 = {r.identity_rhs}")
print()

print("exhaustive bijection sweep, n=1..6:")
for n in range(1, 7):
    r = verify_bijection(n)
    print(
        f"  n={n}: {r.balanced_count} balanced = {r.unbalanced_count} unbalanced, "
        f"bijection_ok={r.bijection_ok} ({r.elapsed:.3f}s)"
    )
