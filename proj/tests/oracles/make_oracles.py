"""Regenerates tests/oracle_values.hpp with mpmath.

Every value here is computed by mpmath routines that share no code with the
library: barnesg/loggamma/zeta for special functions, beta-function sums and
tanh-sinh quadrature for moments, mpmath matrices for determinants.

    python3 tests/oracles/make_oracles.py > tests/oracle_values.hpp
"""

import mpmath as mp

mp.mp.dps = 130
DIGITS = 70


def s(x):
    return mp.nstr(x, DIGITS, strip_zeros=False, min_fixed=1, max_fixed=0)


def jacobi_moment(k, a, b):
    # 2^{a+b+1} int_0^1 (2t-1)^k t^b (1-t)^a dt, binomially expanded.
    total = mp.mpf(0)
    for j in range(k + 1):
        total += mp.binomial(k, j) * mp.mpf(2) ** j * (-1) ** (k - j) * mp.beta(j + b + 1, a + 1)
    return mp.mpf(2) ** (a + b + 1) * total


def perturbed_moment(k, a, b, h):
    f = lambda x: x ** k * (1 - x) ** a * (1 + x) ** b * h(x)
    return mp.quad(f, [-1, 0, 1], method="tanh-sinh")


def log_hankel(mu, n):
    m = mp.matrix(n, n)
    for i in range(n):
        for j in range(n):
            m[i, j] = mu[i + j]
    return mp.log(mp.det(m))


def pv_inner(fprime, x):
    # P int sqrt(1-y^2) f'(y)/(y-x) dy by subtracting the singular part.
    g = lambda y: mp.sqrt(1 - y * y) * fprime(y)
    gx = g(x)
    reg = mp.quad(lambda y: (g(y) - gx) / (y - x), [-1, x, 1])
    return reg + gx * mp.log((1 - x) / (1 + x))


entries = []


def add(name, value, comment):
    entries.append((name, s(value), comment))


add("kLogBarnesG_half", mp.log(mp.barnesg(mp.mpf(1) / 2)), "ln G(1/2)")
add("kLogBarnesG_3_2", mp.log(mp.barnesg(mp.mpf(3) / 2)), "ln G(3/2)")
add("kLogBarnesG_0_1", mp.log(mp.barnesg(mp.mpf(1) / 10)), "ln G(1/10)")
add("kLogBarnesG_5_25", mp.log(mp.barnesg(mp.mpf(21) / 4)), "ln G(21/4)")
add("kLogBarnesG_37_3", mp.log(mp.barnesg(mp.mpf(37) / 3)), "ln G(37/3)")
add("kLogBarnesG_250_5", mp.log(mp.barnesg(mp.mpf(501) / 2)), "ln G(501/2)")
add("kLogGamma_1_3", mp.loggamma(mp.mpf(1) / 3), "ln Gamma(1/3)")
add("kLogGamma_77_7", mp.loggamma(mp.mpf(777) / 10), "ln Gamma(77.7)")
add("kZetaPrimeMinusOne", mp.zeta(-1, derivative=1), "zeta'(-1)")

half, third = mp.mpf(1) / 2, mp.mpf(1) / 3
mu = [jacobi_moment(k, half, -third) for k in range(12)]
add("kMoment_half_mthird_0", mu[0], "mu_0 of (1-x)^(1/2)(1+x)^(-1/3)")
add("kMoment_half_mthird_7", mu[7], "mu_7 of (1-x)^(1/2)(1+x)^(-1/3)")
add("kLogDet_half_mthird_6", log_hankel(mu, 6), "ln D_6 of (1-x)^(1/2)(1+x)^(-1/3)")

mu = [jacobi_moment(k, mp.mpf(3) / 2, 1) for k in range(16)]
add("kLogDet_3half_1_8", log_hankel(mu, 8), "ln D_8 of (1-x)^(3/2)(1+x)")

mu = [jacobi_moment(k, -mp.mpf(9) / 10, -mp.mpf(7) / 10) for k in range(10)]
add("kLogDet_m9_m7_5", log_hankel(mu, 5), "ln D_5 of (1-x)^(-9/10)(1+x)^(-7/10)")

mp.mp.dps = 60
mu = [perturbed_moment(k, half, 0, mp.exp) for k in range(10)]
add("kPerturbedMoment_half_0_exp_3", mu[3], "mu_3 of (1-x)^(1/2) e^x")
add("kLogDet_half_0_exp_5", log_hankel(mu, 5), "ln D_5 of (1-x)^(1/2) e^x")
quarter_t2 = lambda x: mp.exp((2 * x * x - 1) / 4)
mu = [perturbed_moment(k, 1, half, quarter_t2) for k in range(8)]
add("kLogDet_1_half_expT2q_4", log_hankel(mu, 4), "ln D_4 of (1-x)(1+x)^(1/2) exp(T_2(x)/4)")

for i, x in enumerate([mp.mpf(-7) / 10, mp.mpf(-1) / 5, mp.mpf(1) / 10, mp.mpf(2) / 5, mp.mpf(9) / 10]):
    add("kPvT2_%d" % i, pv_inner(lambda y: 4 * y, x), "P int sqrt(1-y^2) T_2'(y)/(y-x) dy at x = %s" % mp.nstr(x, 3))
add("kPvLinear_0_3", pv_inner(lambda y: mp.mpf(1), mp.mpf(3) / 10), "P int sqrt(1-y^2)/(y-x) dy at x = 0.3")

print("#pragma once")
print()
print("// Generated by tests/oracles/make_oracles.py (mpmath); do not edit.")
print()
print("namespace oracle {")
print()
for name, value, comment in entries:
    print("// %s" % comment)
    print('inline constexpr const char* %s = "%s";' % (name, value))
print()
print("}  // namespace oracle")
