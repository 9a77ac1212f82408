# P(1,1,2,4) resolved over F_2, and its double covers.
from degencalc.chow import ThreefoldClass
from degencalc.cohomology import h_threefold
from degencalc.lesolve import euler_terms
from degencalc.models import branch_class, cover_cohomology, h2_tx, model_data, tangent_table

model = model_data("III")
print(model.description)
for ray, cls in model.rays:
    print("  ray", ray, "class", cls)

# Euler sequence 0 -> O^3 -> sum O(D_rho) -> T -> 0
left, middle = euler_terms(model)
print("left", left, "middle", middle)

for d1 in (5, 6, 7, 8):
    spec = branch_class("III", d1)
    t = tangent_table("III", d1)
    print(d1, "B =", spec.b_class, "h(O(B)) =", h_threefold(model.threefold, spec.b_class))
    print("   T_Y'", t.tangent, "twisted", t.twisted.total, "T_X'", t.tx)

# Geometric genus from the anti-invariant part of O_X'
print("O_X' at d1=5:", cover_cohomology("III", 5, ThreefoldClass.of(0, 0, 0)).total)

r = h2_tx("III", 5)
print("h^2(T_X') at d1=5:", r.exactness, "asserted", r.asserted, r.status)
