"""The polynomial ring with two commuting and one Grassmann family.

R_n has variables x_1..x_n, y_1..y_n and theta_1..theta_n, where the
thetas anticommute and square to zero.  The symmetric group permutes all
three index families at once; the ideal is generated by the polarized
power sums p[r,s] and their theta-twisted companions pt[r,s].
"""

from superdelta.superring import (
    SuperMonomial,
    SuperPoly,
    TriDegree,
    apply_perm,
    enumerate_monomials,
    gen_p,
    gen_ptilde,
    ideal_generators,
    mono_mul,
    mono_str,
)

n = 3

# Grassmann sign bookkeeping: theta_2 * theta_1 = -theta_1 * theta_2
t1 = SuperMonomial((0,) * n, (0,) * n, (1,))
t2 = SuperMonomial((0,) * n, (0,) * n, (2,))
print("theta_1 * theta_2 ->", mono_mul(t1, t2))
print("theta_2 * theta_1 ->", mono_mul(t2, t1))
print("theta_1 * theta_1 ->", mono_mul(t1, t1), "(squares vanish)")

# the signed action: a transposition flips the sign of theta_1 theta_2
f = SuperPoly.from_monomial(n, SuperMonomial((0,) * n, (0,) * n, (1, 2)))
swap = (2, 1, 3)
print(f"\nswap(1,2) on {f} -> {apply_perm(swap, f)}")

# ideal generators: symmetric sums, hence fixed by every permutation
print("\ngenerators for n = 3, in (r+s, r) order:")
for name, degree, gen in ideal_generators(n):
    fixed = apply_perm(swap, gen) == gen
    print(f"  {name:9} degree {tuple(degree)}  invariant: {fixed}  {gen}")

print("\np[1,1] =", gen_p(n, 1, 1))
print("pt[0,0] =", gen_ptilde(n, 0, 0))

# homogeneous components are spanned by normal-form monomials
d = TriDegree(1, 0, 1)
monos = enumerate_monomials(2, d)
print(f"\nmonomials of tri-degree {tuple(d)} for n = 2:")
print("  " + ", ".join(mono_str(m) for m in monos))
print("count = C(a+n-1,n-1) C(b+n-1,n-1) C(n,c) =", len(monos))
