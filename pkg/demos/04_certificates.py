"""Certified minimum inversion sets and transitive extensions.

Run:  python demos/04_certificates.py
"""

from tourmod import (
    InversionCertificate,
    certificate_to_json,
    comodular_index,
    erdos_transitive_extension,
    feasible_single_arcs,
    invert,
    is_indecomposable,
    make_tournament,
    nontrivial_modules,
    random_tournament,
    synthesize_certificate,
    transitive,
    verify_certificate,
)

# Synthesise a minimum inversion set for the 9-chain: the index trace
# drops 5 -> 3 -> 2, then the last reversal lands on a prime tournament.
nine = transitive(9)
cert = synthesize_certificate(nine)
print("arcs reversed:", list(cert.arcs))
print("index before each step:", list(cert.trace))
print("final indecomposable:", is_indecomposable(cert.final))
print("replay verifies:", bool(verify_certificate(nine, cert)))

# Certificates serialise to one JSON line.
print("\nJSON:", certificate_to_json(cert))

# Tampering is caught with a reason code.
clipped = InversionCertificate(nine, cert.arcs[:-1], cert.trace[:-1], cert.final)
res = verify_certificate(nine, clipped)
print("clipped certificate verifies:", bool(res), "reason:", res.reason)

# When one reversal suffices, these are exactly the usable arcs.
T = invert(transitive(5), [(0, 4)])
print("\nindex of the prepared 5-vertex tournament:", comodular_index(T))
print("arcs whose reversal makes it prime:", feasible_single_arcs(T))

# Already-prime inputs get an empty certificate.
prime = random_tournament(7, 1)
if is_indecomposable(prime):
    print("\nrandom n=7 seed 1 is already prime; certificate has",
          len(synthesize_certificate(prime).arcs), "arcs")

# Every non-transitive tournament embeds its module family into that of
# some transitive tournament on the same vertices, strictly.
cycle = make_tournament(3, [1, 0, 1])
ext = erdos_transitive_extension(cycle)
print("\n3-cycle modules:", len(nontrivial_modules(cycle)),
      "-> extension modules:", len(nontrivial_modules(ext)))
