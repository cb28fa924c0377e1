"""The module side: quotient characters degree by degree.

Each tri-degree (a, b, c) gives a finite-dimensional S_n-module: the
quotient of the span of monomials by the ideal component.  Characters are
traces: the signed permutation action on the ambient space minus its
restriction to an exact echelon basis of the ideal.  Assembling
sum q^a t^b z^c chi(mu) p_mu / z_mu over all degrees and converting to the
Schur basis yields the tri-graded Frobenius characteristic.
"""

from superdelta.coinvariants import (
    component_characters,
    frobenius_module,
    ideal_component,
    support_frontier,
    trace_regular,
)
from superdelta.partitions import partition_to_str
from superdelta.superring import TriDegree

# one worked component: n = 2 at tri-degree (0,0,1)
n, d = 2, TriDegree(0, 0, 1)
basis = ideal_component(n, d)
print(f"ideal component at {tuple(d)}: ambient dim {basis.dim}, rank {basis.rank}")
print("  basis rows (coordinates theta_1, theta_2):", basis.rows)

comp = component_characters(n, d)
print("  quotient characters:", {partition_to_str(mu): v for mu, v in comp.chars.items()})
print("  (the quotient is the sign representation: theta_1 ~ -theta_2)")

# trace of the regular action comes from a cycle-type count, no matrices
print("\ntrace of swap on the full component (0,0,2):",
      trace_regular((2, 1), 2, TriDegree(0, 0, 2)))

# frontier exploration: degrees with nonzero quotient at fixed theta-degree
for c in range(3):
    cells = sorted(tuple(x) for x in support_frontier(2, c))
    print(f"support of M_2 at theta-degree {c}: {cells}")

# the full tri-graded Frobenius characteristic
for n in (2, 3):
    result = frobenius_module(n)
    print(f"\nFrobenius characteristic of M_{n} (frontier closed: {result.closed}):")
    for line in result.series.pretty_lines():
        print("  " + line)
    z0 = result.series.specialize(z=0)
    print(f"  z=0, q=t=1 dimension: {z0.total_dimension()} = (n+1)^(n-1)")
    print("  Hilbert series (a, b, c) -> dim:")
    for deg, dim in sorted(result.hilbert().items()):
        print(f"    {tuple(deg)} -> {dim}")
