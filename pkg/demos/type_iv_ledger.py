# Divisor bookkeeping for the type IV degeneration.
#
# No cohomology here, only linear algebra on divisor coordinates.
from degencalc.typeiv import (
    ANTICANONICAL,
    HYPERPLANE_PULLBACK,
    TAU,
    parity_table,
    verify_crepant_tau,
    verify_hyperplane,
)

print("-K_Y' =", ANTICANONICAL["Y'"])
print("tau^*(-K_Y') =", TAU(ANTICANONICAL["Y'"]))
print("-K_Y~ =", ANTICANONICAL["Y~"])
print("crepant:", verify_crepant_tau().ok)

for basis, h in HYPERPLANE_PULLBACK.items():
    print(basis, "4H =", 4 * h)
print("4H = -K:", verify_hyperplane().ok)

# A degree-d surface meets a conic of the fibration in d/2 points
for d, ok, points in parity_table(4, 16):
    print(d, points, "admissible" if ok else "-")
