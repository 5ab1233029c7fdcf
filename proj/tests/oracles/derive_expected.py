#!/usr/bin/env python3
"""Brute-force oracles for the expected values frozen into the C++ tests.

Everything here is computed by routes that do not share code or algorithms
with the library: sympy determinants and series, direct monomial sums,
Euclid's algorithm, explicit Hamilton products.  Run it and compare the
printed values with the literals in tests/unit/*.cpp.
"""
from fractions import Fraction
from itertools import permutations

import sympy as sp
from sympy.combinatorics import Permutation

x, u, q = sp.symbols("x u q")


def tridiag(a, b, c, n):
    M = sp.zeros(n, n)
    for i in range(n):
        M[i, i] = a(i)
        if i + 1 < n:
            M[i, i + 1] = b(i)
            M[i + 1, i] = c(i)
    return M


def leibniz(M):
    n = M.shape[0]
    total = 0
    for perm in permutations(range(n)):
        sign = Permutation(list(perm)).signature()
        term = 1
        for i, j in enumerate(perm):
            term *= M[i, j]
        total += sign * term
    return sp.expand(total)


def show(label, value):
    print(f"{label}: {value}")


# continuant determinant oracle examples
show("det [[2,5],[7,3]]", sp.Matrix([[2, 5], [7, 3]]).det())
for n in (5, 6):
    M = tridiag(lambda i: 1, lambda i: 1, lambda i: -1, n)
    show(f"fib continuant K_{n}", leibniz(M))
K3 = tridiag(lambda i: 2, lambda i: 1, lambda i: -1, 3).det()
K2 = tridiag(lambda i: 2, lambda i: 1, lambda i: -1, 2).det()
show("a=2,b=1,c=-1 K3/K2", Fraction(int(K3), int(K2)))
show("fib K5/K4", Fraction(int(leibniz(tridiag(lambda i: 1, lambda i: 1, lambda i: -1, 5))),
                           int(leibniz(tridiag(lambda i: 1, lambda i: 1, lambda i: -1, 4)))))
show("cf 2+1/(2+1/2)", Fraction(2) + 1 / (Fraction(2) + Fraction(1, 2)))

# Chebyshev U_n via the hypergeometric sum (with the (-n)_k sign) and series inversion
def u_hyper(n):
    z = (1 - x) / 2
    s = 0
    for k in range(n + 1):
        rising = sp.rf(n + 1, k + 1)
        s += (-1) ** k * sp.binomial(n, k) * rising / sp.rf(sp.Rational(3, 2), k) * z ** k
    return sp.Poly(sp.expand(s), x).all_coeffs()[::-1]


for n in (0, 1, 2, 5):
    show(f"U_{n} hypergeometric (ascending)", u_hyper(n))
series = sp.series(1 / (1 - 2 * x * u + u ** 2), u, 0, 7).removeO()
for n in (0, 1, 6):
    show(f"U_{n} genfun (ascending)", sp.Poly(series.coeff(u, n), x).all_coeffs()[::-1])
show("chebyshevu(6)", sp.Poly(sp.chebyshevu(6, x), x).all_coeffs()[::-1])

# complete homogeneous
h = lambda n, X, Y: sum(X ** i * Y ** (n - i) for i in range(n + 1))
show("h_2(2,3)", h(2, 2, 3))
show("h_3(1,1)", h(3, 1, 1))

# 2x2 matrix powers
F = sp.Matrix([[1, 1], [1, 0]])
show("[[1,1],[1,0]]^2", (F ** 2).tolist())
show("[[1,1],[1,0]]^5", (F ** 5).tolist())
show("[[1,1],[1,1]]^3", (sp.Matrix([[1, 1], [1, 1]]) ** 3).tolist())
show("[[0,1],[-1,0]]^2", (sp.Matrix([[0, 1], [-1, 0]]) ** 2).tolist())
L = sp.Matrix([[1, 1], [1, 0]])  # L(1, -b c) with b=1, c=-1
show("A_2 with a=b=1,c=-1", (L * L).tolist())

# l=1 bc=0 example: K_4 for a=3, b*c=0
show("a=3,bc=0 K_4", tridiag(lambda i: 3, lambda i: 0, lambda i: 5, 4).det())

# q-Fibonacci via the parity-dependent recurrence and via the determinant
def qfib(n):
    F = {1: sp.Integer(1), 2: sp.Integer(1)}
    for k in range(3, n + 1):
        if k % 2 == 0:
            F[k] = sp.expand(F[k - 1] + F[k - 2] / q)
        else:
            F[k] = sp.expand(F[k - 1] + q * F[k - 2])
    return F[n]


for n in (3, 4, 5):
    show(f"F_{n}(q)", qfib(n))
# K_{2m}(alpha_1) with a=1, b_i = q^{(-1)^{i-1}}, c=-1 ; index i starts at 1
bq = lambda i: q if i % 2 == 1 else 1 / q
K4 = sp.expand(tridiag(lambda i: 1, lambda i: bq(i + 1), lambda i: -1, 4).det())
K3a2 = sp.expand(tridiag(lambda i: 1, lambda i: bq(i + 2), lambda i: -1, 3).det())
show("K_4(alpha_1) q-fib data", K4)
show("K_3(alpha_2) q-fib data", K3a2)


# continued-fraction digits
def euclid(r, s):
    d = []
    while s:
        d.append(r // s)
        r, s = s, r % s
    return d


for r, s in ((8, 5), (3, 1), (13, 8)):
    show(f"euclid {r}/{s}", euclid(r, s))


def cf_value(d):
    v = Fraction(d[-1])
    for a in reversed(d[:-1]):
        v = a + 1 / v
    return v


show("cf [1,1,1,2]", cf_value([1, 1, 1, 2]))
show("cf [1,1,1,1,1,1]", cf_value([1] * 6))
show("cf [1,1,1,1,1,2]", cf_value([1, 1, 1, 1, 1, 2]))


# q-rational of [1,1,1,2] by direct nested evaluation of the q-continued fraction
def qint(a, sign):
    qq = q if sign > 0 else 1 / q
    return sum(qq ** i for i in range(a))


def qrat(d):
    n = len(d)
    v = qint(d[-1], (-1) ** (n - 1))
    for i in range(n - 1, 0, -1):  # i = 1 .. n-1 (1-based), building from the bottom
        v = qint(d[i - 1], (-1) ** (i - 1)) + q ** ((-1) ** (i - 1) * d[i - 1]) / v
    return sp.factor(sp.simplify(v))


show("[8/5]_q", qrat([1, 1, 1, 2]))
show("[8/5]_q at q=1", qrat([1, 1, 1, 2]).subs(q, 1))
show("[2/1]_q", qrat([1, 1]))


# quaternions
def hamilton(p, r):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = r
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def qpow(p, n):
    r = (1, 0, 0, 0)
    for _ in range(n):
        r = hamilton(r, p)
    return r


show("i*j", hamilton((0, 1, 0, 0), (0, 0, 1, 0)))
show("(1+i)(1-i)", hamilton((1, 1, 0, 0), (1, -1, 0, 0)))
show("(1+i)^2", qpow((1, 1, 0, 0), 2))
show("(1,2,3,4)^5", qpow((1, 2, 3, 4), 5))
show("i^4", qpow((0, 1, 0, 0), 4))

# l=3 base 0 fixed instance for the general-theorem example (p=1, m=2, j=1 -> K_7(alpha_0))
a3 = [Fraction(1, 2), Fraction(-2), Fraction(3)]
b3 = [Fraction(1), Fraction(-1, 3), Fraction(2)]
c3 = [Fraction(-3), Fraction(2), Fraction(1, 2)]
idx = lambda arr, m: arr[m % 3]  # arrays anchored at base 0
M = sp.zeros(7, 7)
for i in range(7):
    M[i, i] = sp.Rational(idx(a3, i).numerator, idx(a3, i).denominator)
    if i + 1 < 7:
        M[i, i + 1] = sp.Rational(idx(b3, i).numerator, idx(b3, i).denominator)
        M[i + 1, i] = sp.Rational(idx(c3, i).numerator, idx(c3, i).denominator)
show("l=3 fixed instance K_7(alpha_0)", M.det())

# ModInt examples
show("5*4 mod 7", 5 * 4 % 7)
show("3/5 mod 7", 3 * pow(5, -1, 7) % 7)
