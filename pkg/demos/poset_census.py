"""Dimension-2 posets: build them from permutations, compare them up to
isomorphism, and count the classes.
"""
from permorder import Permutation, canonical_form, epsilon_exact, is_isomorphic, max_antichain, poset_from_permutation
from permorder.posets import LinearOrder, intersect_linear_orders, pair_normal_form

# %% A permutation gives a poset: i < j when both orders agree.
pi = Permutation((2, 3, 1))
P = poset_from_permutation(pi)
print("relations of", list(pi), ":", sorted(P.relations()))
print("a largest antichain:", max_antichain(P))

# %% Different permutations can give isomorphic posets.
Q = poset_from_permutation(Permutation((3, 1, 2)))
print("(2,3,1) ~ (3,1,2):", is_isomorphic(P, Q), canonical_form(P) == canonical_form(Q))

# %% Class counts by width, n <= 6 (n = 7 takes a few seconds).
for n in range(1, 7):
    census = epsilon_exact(n)
    print(f"n={n}: total {sum(census.values()):4d}  by width {dict(census)}")

# %% Two pairs of linear orders whose normal forms differ, yet the posets
# they realise are isomorphic.  Pair comparison is therefore finer than
# poset isomorphism.
c1, c2, c3 = [3, 2, 1], list(range(8, 3, -1)), list(range(15, 8, -1))
first = (LinearOrder.from_sequence(c1 + c2 + c3), LinearOrder.from_sequence(c3 + c2 + c1))
second = (LinearOrder.from_sequence(c1 + c3 + c2), LinearOrder.from_sequence(c2 + c3 + c1))
print("\nnormal forms equal:", pair_normal_form(*first) == pair_normal_form(*second))
print("posets isomorphic :", is_isomorphic(intersect_linear_orders(*first), intersect_linear_orders(*second), guard=15))
