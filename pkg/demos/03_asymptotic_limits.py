"""Both temperature extremes, and the exact factor of one half.

At T = 0 all correlation lives between A and the exterior mode I.  In
the infinite-temperature limit the thermal weights equalise and closed
expressions exist for every pair; the A_I mutual information lands at
exactly half its flat-space value, independent of alpha.
"""

import math

from hawkent.cli import limits_command
from hawkent.model import ModelParams, ModePair, closed_form_mutual_information

for alpha in (0.3, 1.0 / math.sqrt(2.0), 0.9):
    print(limits_command(alpha))

# the limit is reached in practice: at T = 1e6 the finite-temperature
# value sits within 1e-6 of the analytic plateau
alpha = 0.9
hot = closed_form_mutual_information(ModelParams(alpha, 1.0, 1e6), ModePair.A_I)
cold = closed_form_mutual_information(ModelParams(alpha, 1.0, 1e-6), ModePair.A_I)
print(f"alpha = {alpha}: MI_A_I(T=1e6) / MI_A_I(T=1e-6) = {hot / cold:.9f}")
