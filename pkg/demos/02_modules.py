"""Modules, co-modules and transitive components.

A module is a set of vertices that the rest of the tournament cannot
tell apart.  Run:  python demos/02_modules.py
"""

from tourmod import (
    component_comodule,
    is_comodule,
    is_indecomposable,
    is_module,
    make_tournament,
    minimal_comodules,
    nontrivial_modules,
    overlap_set,
    smallest_module_containing,
    tilde,
    transitive,
    transitive_components,
)

chain = transitive(6)
cycle = make_tournament(3, [1, 0, 1])

# In a transitive chain the modules are exactly the intervals.
print("modules of the 6-chain:", [s.members() for s in nontrivial_modules(chain)])
print("{1,2} is a module:", is_module(chain, {1, 2}),
      " {0,2} is not:", not is_module(chain, {0, 2}))

# The 3-cycle has only trivial modules: it is indecomposable (prime).
print("\n3-cycle indecomposable:", is_indecomposable(cycle))
print("6-chain indecomposable:", is_indecomposable(chain))

# Growing a set to the smallest module containing it.
print("\nsmallest module containing {1,3} in the 6-chain:",
      smallest_module_containing(chain, {1, 3}).members())

# A co-module is a set which is, or whose complement is, a nontrivial
# module.  The minimal ones drive everything that follows.
print("\n{0} is a co-module of the 6-chain:", is_comodule(chain, {0}),
      " (its complement {1..5} is an interval)")
print("minimal co-modules of the 6-chain:",
      [c.members.members() for c in minimal_comodules(chain)])

# Minimal co-modules overlap each other in a constrained way: at most two
# neighbours, and only pairs (twins) overlap anything.
print("\noverlaps of {1,2}:", [c.members.members() for c in overlap_set(chain, [1, 2])])
print("overlaps of {0}:  ", [c.members.members() for c in overlap_set(chain, [0])])
print("distinguished subset of {1,2} (shared vertex):", tilde(chain, [1, 2]).members())

# Maximal transitive modules partition the vertex set.
blocks = transitive_components(chain).blocks
print("\ntransitive components of the 6-chain:", [b.members() for b in blocks])
print("of the 3-cycle:", [b.members() for b in transitive_components(cycle).blocks])

# Along a component, each consecutive pair contributes exactly one
# minimal co-module: the pair itself or one of its endpoints.
V = chain.vertex_set()
print("\npicks along the 6-chain:",
      [component_comodule(chain, V, k).members.members() for k in range(5)])
