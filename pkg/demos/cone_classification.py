# Cones over Hirzebruch surfaces with the anticanonical degree of P^3.
#
# The cone W over F_e embedded by D = a*sigma + b*l is resolved by
# V = P(O + O(-D)).  We pull -K_W back to V, expand its cube through the
# Chow relations and keep the cones whose degree is 64.
from fractions import Fraction

from degencalc.chow import (
    anticanonical_class_cone,
    anticanonical_cube_closed_form,
    anticanonical_cube_cone,
    anticanonical_divisible_by_four,
    classify_degenerations,
    cone_discrepancy,
)

# A cone that is too small: over F_0 with D = 3 sigma + l
print("(3,1,0):", anticanonical_cube_cone(3, 1, 0), "=", float(Fraction(550, 9)))

# The quadric cone and its partner over F_2
for abe in [(2, 2, 0), (2, 4, 2)]:
    print(abe, "discrepancies", cone_discrepancy(*abe), "pullback", anticanonical_class_cone(*abe))
    print("   cube", anticanonical_cube_cone(*abe), "closed form", anticanonical_cube_closed_form(*abe))

# Full scan with every path cross-checked
sols = classify_degenerations(cross_check=True)
for s in sols:
    print(s, "-K divisible by 4:", anticanonical_divisible_by_four(s.a, s.b, s.e))

# (2,3,1) is the anticanonical cone over F_1 = dP8.  It also has degree 64,
# but -K_W is not 4 times a Weil divisor, so it carries no limit of O(1).
