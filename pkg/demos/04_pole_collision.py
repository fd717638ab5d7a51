#!/usr/bin/env python3
"""Pole collision: multipole Green functions contracting to one singularity.

Scale the symmetric two-point set by t and let t shrink.  The polynomial
lower approximants built from exact interpolation kernels converge to the
known closed-form limit; the pointwise gap to the exact Green function at
each t shrinks like t^2, while the radial envelope sits on ln r throughout
(for this configuration the envelope is exact at every scale).

A second run on the 2x2 grid shows the envelope slope climbing toward
sqrt(4) = 2, the expected Lelong number for four points colliding.
"""

from nagata import collision_experiment, grid_points, two_point_example, two_point_oracle

print("=== two-point set, polydisc, l=1, d=2 ===")
table = collision_experiment(two_point_example(), 1, 2,
                             ["1/2", "1/4", "1/10", "1/20"],
                             mode="polydisc", boundary_samples=4096,
                             seed=7, oracle=two_point_oracle)
print(f"omega_hat = {table.omega_hat} (envelope target slope)")
print("    t    | envelope dev | slope  | gap to exact formula")
print("---------+--------------+--------+---------------------")
for row in table.rows:
    print(f"{str(row.t):>8} | {row.envelope_dev:12.3e} | {row.slope:.4f} "
          f"| {row.oracle_gap:.5f}")
print("the deviation column is flat at rounding noise: this envelope is exact")
print("at every t; the oracle gap shows the actual pointwise convergence.")

print()
print("=== 2x2 grid, ball, l=1, d=2: slope climbs toward 2 ===")
table = collision_experiment(grid_points(2, 2), 1, 2,
                             ["1/8", "1/16", "1/32", "1/64"],
                             mode="ball", boundary_samples=2048, n_dirs=64,
                             seed=7)
print(f"omega_hat = {table.omega_hat}")
print("    t    | envelope dev | slope  | margin over target")
print("---------+--------------+--------+-------------------")
for row in table.rows:
    print(f"{str(row.t):>8} | {row.envelope_dev:12.4f} | {row.slope:.4f} "
          f"| {row.upper_margin:.4f}")
print("at finite t the true Green function exceeds Omega ln|z| by a margin")
print("that only vanishes in the limit; watch it shrink down the table.")
