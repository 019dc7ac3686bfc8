"""The co-modular index, maximum decompositions, and hereditary witnesses.

Run:  python demos/03_indices.py
"""

from tourmod import (
    all_delta_decompositions,
    comodular_index,
    conflict_graph,
    decomposability_index,
    delta_decomposition,
    hereditary_witness,
    structured_delta_decomposition,
    subtournament,
    transitive,
)

# The co-modular index: the largest number of pairwise disjoint
# co-modules.  For the n-chain it is ceil((n+1)/2); the decomposability
# index (minimum inversions to reach a prime tournament) is always half
# of it, rounded up.
print(" n | co-modular index | inversion index")
for n in range(5, 13):
    T = transitive(n)
    print(f"{n:2d} | {comodular_index(T):16d} | {decomposability_index(T):15d}")

# The index is a maximum independent set in the overlap graph of the
# minimal co-modules (paths and isolated nodes only).
g = conflict_graph(transitive(7))
print("\noverlap graph of the 7-chain:",
      [c.members.members() for c in g.nodes], "edges", g.edges)

# Maximum decompositions into minimal co-modules; for even chains the
# decomposition is unique.
six = transitive(6)
print("\nmaximum decomposition of the 6-chain:",
      [p.members.members() for p in delta_decomposition(six).parts])
print("number of such decompositions:",
      sum(1 for _ in all_delta_decompositions(six)))
five = transitive(5)
print("the 5-chain has several:",
      [[p.members.members() for p in D.parts] for D in all_delta_decompositions(five)])

# The structured variant labels parts ready for the inversion synthesiser:
# M1 beats M2 beats M3, low overlap counts on M1/M3/M4.
_, labels = structured_delta_decomposition(six)
print("\nlabelled parts of the 6-chain:",
      {k: v.members.members() for k, v in labels.items()})

# Hereditary witnesses: removing k chosen vertices costs at most 2 in the
# co-modular index (hence at most 1 inversion).
nine = transitive(9)
for k in (1, 2, 3, 4):
    X = hereditary_witness(nine, k)
    rest, _ = subtournament(nine, X.complement())
    print(f"k={k}: remove {X.members()} -> index {comodular_index(nine)} "
          f"<= {comodular_index(rest)} + 2")
