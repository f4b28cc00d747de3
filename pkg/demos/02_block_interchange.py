"""Cyclic block-interchange distance through commutator length, with optimal witnesses."""
from clgenus.cbi import apply_interchange, d_cbi, extract_sequence, oracle_bfs

v, w = "ababab", "aaabbb"
print(f"d({v}, {w}) = {d_cbi(v, w)}   breadth-first search agrees: {oracle_bfs(v, w)}")

for n in range(1, 6):
    v, w = "ab" * n, "a" * n + "b" * n
    seq = extract_sequence(v, w)
    print(f"\n(ab)^{n} -> a^{n}b^{n}: {len(seq)} moves")
    cur = v
    for m in seq.moves:
        nxt = apply_interchange(cur, m)
        print(f"  {cur}  rotate {m.rotation}, cut at {m.cuts}  ->  {nxt}")
        cur = nxt
