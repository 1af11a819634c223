"""Counting permutations by longest decreasing subsequence, four ways.

xi(n, k) is the number of permutations of 1..n whose longest decreasing
subsequence has length at most k.  The methods below share no code paths
beyond the partition generator.
"""
from permorder import catalan, xi3_closed, xi_brute, xi_from_series, xi_shapes

n_max = 8
print(" n  k   brute  shapes  series")
for n in range(1, n_max + 1):
    for k in (2, 3, 4):
        if k > n:
            continue
        row = (xi_brute(n, k), xi_shapes(n, k), xi_from_series(k, n) if k <= 4 else None)
        print(f"{n:2d} {k:2d} {row[0]:7d} {row[1]:7d} {row[2]:7d}")
        assert len(set(row)) == 1

# %% k = 2 gives the Catalan numbers, k = 3 has a closed binomial sum.
print("\nxi(n, 2):", [xi_shapes(n, 2) for n in range(1, 11)])
print("catalan :", [catalan(n) for n in range(1, 11)])
print("xi(n, 3) for n = 15..20 (closed form):", [xi3_closed(n) for n in range(15, 21)])

# %% The shape sum scales far past brute force.
print("\nxi(40, 5) =", xi_shapes(40, 5))
