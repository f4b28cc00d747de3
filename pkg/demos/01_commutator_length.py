"""Commutator length of words and chains, with the certificates behind the numbers."""
from clgenus.fi import factorize
from clgenus.genus import cl_chain, verify_certificate
from clgenus.words import Chain, parse_chain

# A single commutator needs one commutator, its square needs two.
for n in range(1, 5):
    w = "abAB" * n
    cert = cl_chain(Chain([w]))
    print(f"cl([a,b]^{n}) = {cert.genus}   (orbits {cert.orbits})")

# The pairing is a certificate anyone can check in linear time.
chain = Chain(["abABabAB"])
cert = cl_chain(chain)
print("pairing", cert.pairing.to_list(), "verifies:", verify_certificate(chain, cert.pairing, cert.genus))

# An explicit product of commutators for the same word.
f = factorize("abABabAB")
print("factorisation:", " * ".join(f"[{u}, {t}]" for u, t in f.pairs), "->", f.product())

# Chains: a term and its inverse bound an annulus, so this costs nothing.
for text in ["ab + BA", "ab + BA + abAB", "aabb + ABAB", "aaabbb + BABABA"]:
    print(f"cl({text}) = {cl_chain(parse_chain(text)).genus}")
