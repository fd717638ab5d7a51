#!/usr/bin/env python3
"""Radial envelopes and Lelong slopes of Green functions.

The Lelong number of a logarithmic singularity is the slope of the radial
sup envelope against ln r.  For the unit-ball Green function with pole at
the origin the slope is exactly 1; for the collision limit of the symmetric
two-point set on the polydisc the envelope slope is 1 while the slope along
the axis through the (collided) poles is 2, reflecting the double zero the
limit carries on that axis.
"""

from fractions import Fraction

from nagata import (
    ball_green_single_pole,
    build_approximant,
    polydisc_two_pole_limit,
    radial_profile,
    two_point_example,
)

print("=== exact single pole in the ball: slope 1 ===")
prof = radial_profile(lambda z: ball_green_single_pole([0, 0], z),
                      mode="ball", sphere_samples=256, seed=1)
for r, s in zip(prof.radii, prof.sup_values):
    print(f"  r={r:7.4f}  sup={s: .6f}")
print(f"fitted slope {prof.slope:.6f} +- {prof.slope_stderr:.2e}")

print()
print("=== two-point collision limit on the polydisc ===")
prof = radial_profile(polydisc_two_pole_limit, mode="polydisc",
                      sphere_samples=256, seed=2)
print(f"sup-norm envelope slope: {prof.slope:.6f} (the limit envelope is ln|z|)")
axial = radial_profile(polydisc_two_pole_limit, mode="polydisc",
                       sphere_samples=64, seed=2, axis=0)
print(f"slope along the pole axis: {axial.slope:.6f} (double zero on z2 = 0)")

print()
print("=== a sampled approximant reproduces the slope ===")
g = build_approximant(two_point_example(), Fraction(1, 10), l=1, d=2,
                      boundary_samples=2048, seed=3, mode="polydisc")
print(f"pole radius {g.pole_radius:.3f}, sup-sampling slack {g.eps_sample:.2e}")
prof = radial_profile(g, sphere_samples=512, seed=4)
print(f"approximant envelope slope: {prof.slope:.4f} +- {prof.slope_stderr:.2e}")
