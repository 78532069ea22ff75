"""Correlation redistribution along a Hawking-temperature sweep.

As the temperature rises, the correlations an outside observer can
access (pair A_I) degrade, while the pairs involving the interior mode
(A_II and I_II) pick up exactly what is lost: the squared concurrences
centered on A and the A-centered mutual informations are conserved at
every temperature.
"""

import math

from hawkent.measures import binary_entropy
from hawkent.sweep import RunConfig, SweepSpec, run_sweep

alpha = 1.0 / math.sqrt(2.0)

spec = SweepSpec(
    vary="temperature",
    min=0.05,
    max=20.0,
    steps=9,
    scale="log",
    alpha=alpha,
    omega=1.0,
)
# verify mode is on by default: every row is recomputed through the
# spectral pipeline before it is reported
rows = run_sweep(RunConfig(sweep=spec))

print(f"alpha^2 = {alpha**2:.3f}, omega = 1, T from {spec.min} to {spec.max}")
print()
header = (
    f"{'T':>8}{'C_A_I':>10}{'C_A_II':>10}{'C_I_II':>10}"
    f"{'MI_A_I':>10}{'MI_A_II':>10}{'C2 sum':>10}{'MI sum':>10}"
)
print(header)
print("-" * len(header))
for row in rows:
    c2_sum = row.c_a_i**2 + row.c_a_ii**2
    mi_sum = row.mi_a_i + row.mi_a_ii
    print(
        f"{row.temperature:>8.3f}{row.c_a_i:>10.5f}{row.c_a_ii:>10.5f}"
        f"{row.c_i_ii:>10.5f}{row.mi_a_i:>10.5f}{row.mi_a_ii:>10.5f}"
        f"{c2_sum:>10.5f}{mi_sum:>10.5f}"
    )

print()
print(f"conserved tangle 4 a^2 (1 - a^2)   = {4 * alpha**2 * (1 - alpha**2):.5f}")
print(f"conserved information 2 H2(a^2)    = {2 * binary_entropy(alpha**2):.5f}")
