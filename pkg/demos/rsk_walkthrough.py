"""RSK by hand: insert a permutation letter by letter, then undo it.

Run with ``python3 demos/rsk_walkthrough.py``.
"""
from permorder import GeneralizedTableau, Permutation, lds, rsk_forward, rsk_inverse, schensted_insert

pi = Permutation((4, 1, 6, 3, 5, 2))
print("permutation:", list(pi))

# %% Row insertion, one letter at a time.  The new cell is where the
# bumping path ended; recording those cells in order gives Q.
t = None
for x in pi:
    t, cell = (GeneralizedTableau(((x,),)), (1, 1)) if t is None else schensted_insert(t, x)
    print(f"insert {x}: rows={t.to_lists()}  new cell={cell}")

# %% The full correspondence.
p, q = rsk_forward(pi)
print("\nP =", p.to_lists())
print("Q =", q.to_lists())

# %% The number of rows of P is the longest decreasing subsequence.
length, witness = lds(pi)
print(f"\nrows of P: {len(p.rows)}; longest decreasing subsequence: {length} at positions {witness}")
print("values:", [pi[i] for i in witness])

# %% Reverse bumping recovers the permutation.
assert rsk_inverse(p, q) == pi
print("inverse RSK gives back", list(rsk_inverse(p, q)))
