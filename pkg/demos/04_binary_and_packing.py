"""Two more reductions: down to a two-letter alphabet, and bin packing as a genus-zero question."""
from clgenus.cbi import extract_sequence, verify_sequence
from clgenus.genus import cl_chain
from clgenus.reduce import EbpInstance, encode_ebp, lambda_encode, lift_sequence

v, w = "abcd", "adcb"
seq = extract_sequence(v, w)
lv, lw = lambda_encode(v), lambda_encode(w)
lifted = lift_sequence(seq)
print(f"{v} -> {w} in {len(seq)} moves; images have length {len(lv)}")
print("lifted moves:", [m.to_json() for m in lifted.moves])
print("lifted witness verifies:", verify_sequence(lv, lw, lifted))

for inst in [EbpInstance((1, 2), 1, 3), EbpInstance((1, 3), 2, 2), EbpInstance((1, 1, 2), 2, 2)]:
    chain = encode_ebp(inst)
    g = cl_chain(chain).genus
    print(f"\nsizes {inst.sizes} into {inst.N} bins of {inst.B}: chain {chain}")
    print(f"  genus {g} -> {'packable' if g == 0 else 'not packable'}")
