"""Build certified rate constants and steady states for two networks."""

from fractions import Fraction

from crnms import parse_network
from crnms.witness import certify, prescribe_roots_one_species, witness_two_reaction

# One species: place steady states exactly at 1 and 2.
net = parse_network("0 -> A\n2A -> A\n3A -> 4A")
w = prescribe_roots_one_species(net, [Fraction(1), Fraction(2)])
print(net)
print("  rates", [str(k) for k in w.rates])
for st in w.steady_states:
    print("  steady state", st.point_intervals, "stable" if st.stable else "unstable")

# Two species, two reactions: two nondegenerate states in one class.
net = parse_network("B -> A\nA + 2B -> 3B")
w = witness_two_reaction(net)
rep = certify(net, w)
print(net)
print("  rates", [str(k) for k in w.rates], "class", w.class_json())
print(f"  certified {rep.nondegenerate} nondegenerate, {rep.stable} stable")
