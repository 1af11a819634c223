"""Series and symmetric functions behind the counts.

A Toeplitz determinant of Bessel-type series generates xi(n, k); Schur
polynomials in the squarefree quotient count standard tableaux.
"""
from math import factorial

from permorder import bessel_b, gessel_U, rk_coefficient, schur, syt_count_hook, syt_count_schur, xi_shapes

print("b_0 up to x^8:", [str(c) for c in bessel_b(0, 8).coeffs])

# %% Odd coefficients of U_k vanish; even ones are xi(n, k) / (n!)^2.
u = gessel_U(3, 12)
print("U_3 coefficients:", [str(c) for c in u.coeffs])
print("recovered xi(n,3):", [factorial(n) ** 2 * u[2 * n] for n in range(7)])
print("direct    xi(n,3):", [1] + [xi_shapes(n, 3) for n in range(1, 7)])

# %% Schur polynomial of (2, 1) in three variables.
s = schur((2, 1), 3, cap=None)
print("\ns_(2,1)(x1,x2,x3) has", len(s.terms), "monomials")

# %% The squarefree coefficient counts standard tableaux.
for shape in [(3,), (2, 1), (3, 2), (2, 2, 1)]:
    print(shape, syt_count_schur(shape), syt_count_hook(shape))

# %% And a product of two Schur sums recovers xi again.
print("\nR_k coefficients for n=4:", [rk_coefficient(k, 4) for k in range(1, 5)])
