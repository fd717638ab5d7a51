#!/usr/bin/env python3
"""Least degrees, Waldschmidt intervals, and witness bounds on small configs.

Walks through the exact side of the library: build a point configuration,
compute omega_l (the least degree of a hypersurface vanishing to order >= l
at every point), then derive the certified enclosure of the singular degree
and a lower bound for the very-singular-degree invariant.
"""

from fractions import Fraction

from nagata import (
    generic_points,
    grid_points,
    invariant_report,
    omega_l,
    omega_s_witness_bound,
    omega_table,
    two_point_example,
    waldschmidt_interval,
)

print("=== omega_l on reference configurations ===")
single = generic_points(2, 1, seed=0)
print(f"single point:   omega_l = {[omega_l(single, l) for l in (1, 2, 3)]} "
      "(always l: a line to the l-th power)")

nine = generic_points(2, 9, seed=7)
print(f"9 generic pts:  omega_1 = {omega_l(nine, 1)} (the cubic through 9 points)")

five = generic_points(2, 5, seed=3)
print(f"5 generic pts:  omega_2 = {omega_l(five, 2)} "
      "(the double conic: square of the conic through 5 points)")

grid = grid_points(2, 4)
print(f"4x4 grid:       omega_1 = {omega_l(grid, 1)} "
      "(special position: 4 collinear rows give a degree-4 product of lines)")

print()
print("=== Waldschmidt interval: the singular degree is only ever enclosed ===")
for label, cfg, l_max in [("two-point", two_point_example(), 3),
                          ("9 generic", nine, 2),
                          ("16 generic", generic_points(2, 16, seed=13), 2)]:
    lo, up = waldschmidt_interval(cfg, l_max)
    print(f"{label:>11}: omega table {dict(omega_table(cfg, l_max))} "
          f"-> Omega(S) in [{lo}, {up}]")

print()
print("=== witness lower bounds for omega(S) = sup sum(ord)/deg ===")
print(f"two-point, l=1, d=1: {omega_s_witness_bound(two_point_example(), 1, 1)} "
      "(the line through both points has order 1 at each, degree 1)")
print(f"9 generic, l=1, d=3: {omega_s_witness_bound(nine, 1, 3)}")

print()
print("=== full report for 10 generic points ===")
report = invariant_report(generic_points(2, 10, seed=4), 2)
print(f"table: {list(report.table)}")
print(f"Omega(S) in [{report.omega_lower}, {report.omega_upper}], "
      f"omega(S) >= {report.w_lower}")
for v in report.verdicts:
    print(f"  [{'PASS' if v.passed else 'FAIL'}] {v.name}: {v.detail}")
assert report.omega_upper < Fraction(4)  # sqrt(10) < 3.17 forces this at l_max=2
