# Double covers of the resolved quadric cone, d1 = 5..10.
#
# Y' = P(O + O(-2,-2)) over F_0, branched over B = B0 (+ E for odd d1).
# Every column comes from Leray pushforward plus the long exact sequences.
from degencalc.models import h2_tx, moduli_count, tangent_table

header = ["d1", "h(O(B))", "h(N_B)", "h(T_Y')", "h(T_Y' x L^v)", "h(T_X')"]
print("  ".join(header))
for d1 in range(5, 11):
    t = tangent_table("II", d1)
    print(d1, t.o_b, t.normal, t.tangent, t.twisted.total, t.tx)

# h^1(T_X') against N - 17
for d1 in range(5, 11):
    t = tangent_table("II", d1)
    print(d1, t.tx[1][0], moduli_count(d1) - 17)

# The twisted term splits along 0 -> Theta_{Y'/T} -> T_Y' -> pi^*T_T -> 0
t = tangent_table("II", 7)
print("relative piece", t.twisted.relative, "base pieces", t.twisted.base_pieces)

# h^2(T_X'): exactness alone vs the asserted value
for d1 in range(5, 11):
    r = h2_tx("II", d1)
    print(d1, "exactness", r.exactness, "asserted", r.asserted, "->", r.status)

# d1 = 6 is the odd one out: h^2(T_Y' x L^v) is exactly 2 there, which forces 3.
