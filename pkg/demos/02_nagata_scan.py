#!/usr/bin/env python3
"""The strictness boundary at nine points.

For r general plane points the strict bound omega_l > l*sqrt(r) is the
Nagata-type statement; it provably fails up to r = 9 (the small-r table has
integer slopes there) and is expected for every r > 9.  This scan shows the
equality wall at r = 9 and strictness taking over from r = 10, all by exact
integer comparison.
"""

from nagata import generic_points, harbourne_table_check, nagata_check, omega_l
from nagata.seeds import derive_seed

SEED = 11

print("r  | omega_l for l=1..3 | strict omega_l^2 > l^2 r ?")
print("---+--------------------+---------------------------")
for r in range(6, 15):
    cfg = generic_points(2, r, derive_seed(SEED, f"scan-{r}"))
    omegas = [omega_l(cfg, l) for l in (1, 2, 3)]
    checks = nagata_check(cfg, 3)
    marks = " ".join("yes" if ok else "NO " for _, ok in checks)
    print(f"{r:2d} | {str(omegas):>18} | {marks}")

print()
print("r = 9 sits exactly on the wall: omega_l = 3l, so omega_l^2 = 9 l^2 = l^2 r.")
print()

print("Small-r least-degree table (slopes 1, 1, 3/2, 2, 2, 12/5, 21/8, 48/17, 3):")
check = harbourne_table_check(4, seed=SEED)
for r in range(1, 10):
    row = [c for c in check.cells if c.r == r]
    cells = " ".join(f"{c.actual:2d}{'' if c.passed else '!'}" for c in row)
    print(f"  r={r}: m=1..4 -> {cells}")
print("all cells match:", check.all_pass)
