"""From a 3-PARTITION instance to a block-interchange instance whose distance is pinned by counting."""
from clgenus.cbi import verify_sequence
from clgenus.certify import exhaustive_delta_check, nu_lower_bound, nu_total
from clgenus.reduce import SHIPPED_INSTANCES, decode_3p_solution, encode_3p, solve_3p

print("one move changes nu by at most 6:", exhaustive_delta_check().to_json())

for name, inst in SHIPPED_INSTANCES.items():
    enc = encode_3p(inst)
    print(f"\n{name}: n={inst.n} N={inst.N} a={inst.a}")
    print(f"  v = {enc.v}\n  w = {enc.w}")
    print(f"  nu(v) - nu(w) = {nu_total(enc.v) - nu_total(enc.w)}, so at least {nu_lower_bound(enc.v, enc.w)} moves")
    solution = solve_3p(inst)
    if solution is None:
        print("  no partition exists, so there is nothing to decode")
        continue
    seq = decode_3p_solution(inst, solution)
    print(f"  partition {solution} gives {len(seq)} moves; verified: {verify_sequence(enc.v, enc.w, seq)}")
    for before, after in zip(seq.words(), seq.words()[1:]):
        print(f"    {before} -> {after}")
