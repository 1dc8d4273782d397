"""Freezes reference values computed with mpmath (50 digits) into
oracle_values.hpp. Re-run after changing the cases:

    python3 tests/oracles/gen_oracles.py > tests/oracles/oracle_values.hpp
"""
from mpmath import mp, mpf, mpc, besselk, sqrt, gamma, rgamma, loggamma, factorial, exp, log, hyper, pi, nsum, inf, rf

mp.dps = 50


def h_left(m, n, upper, lower, logz, terms=400):
    total = mpc(0)
    for h in range(m):
        bh, Bh = lower[h]
        for v in range(terms):
            w = (bh + v) / Bh
            t = mpc(1)
            for j in range(m):
                if j != h:
                    t *= gamma(lower[j][0] - lower[j][1] * w)
            for j in range(m, len(lower)):
                t *= rgamma(1 - lower[j][0] + lower[j][1] * w)
            for j in range(n):
                t *= gamma(1 - upper[j][0] + upper[j][1] * w)
            for j in range(n, len(upper)):
                t *= rgamma(upper[j][0] - upper[j][1] * w)
            total += t * (-1) ** v * exp(w * logz) / (factorial(v) * Bh)
    return total


def h_right(m, n, upper, lower, logz, terms=400):
    total = mpc(0)
    for h in range(n):
        ah, Ah = upper[h]
        for v in range(terms):
            w = (1 - ah + v) / Ah
            t = mpc(1)
            for j in range(n):
                if j != h:
                    t *= gamma(1 - upper[j][0] - upper[j][1] * w)
            for j in range(n, len(upper)):
                t *= rgamma(upper[j][0] + upper[j][1] * w)
            for j in range(m):
                t *= gamma(lower[j][0] + lower[j][1] * w)
            for j in range(m, len(lower)):
                t *= rgamma(1 - lower[j][0] - lower[j][1] * w)
            total += t * (-1) ** v * exp(-w * logz) / (factorial(v) * Ah)
    return total


def c(v):
    v = mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 17, min_fixed=-30, max_fixed=30), mp.nstr(v.imag, 17, min_fixed=-30, max_fixed=30))


out = []
emit = out.append

emit("// Generated by gen_oracles.py from mpmath at 50 digits; do not edit.")
emit("#pragma once\n\n#include <complex>\n\nnamespace oracle {\n\nusing C = std::complex<double>;\n")
emit("struct Point {\n  C z;\n  C value;\n};\n")

pts = [mpc(3, 4), mpc(0.5, 0), mpc(-2.5, 0.1), mpc(10, -20), mpc(1e-3, 1e-3), mpc(-7.3, 0), mpc(0.1, 30), mpc(-15.5, -3)]
emit("// mpmath loggamma (continuous branch); the principal log agrees modulo 2 pi i")
emit("inline const Point kLogGamma[] = {")
for z in pts:
    emit("    {%s, %s}," % (c(z), c(loggamma(z))))
emit("};\n")

pts = [mpc(-0.5, 0), mpc(0.25, 1), mpc(-3.7, 2.2), mpc(20.5, 0), mpc(1e-8, 0), mpc(-1 + 1e-6, 0)]
emit("inline const Point kGamma[] = {")
for z in pts:
    emit("    {%s, %s}," % (c(z), c(gamma(z))))
emit("};\n")

emit("// (0.5+0.5i)_10")
emit("inline const C kPochhammer = %s;\n" % c(rf(mpc(0.5, 0.5), 10)))

# H-functions with complex parameters, both residue series
up = [(mpc(0.3, 0.2), mpf("0.7")), (mpf("0.1"), mpf("1.3"))]
lo = [(mpf("0.2"), mpf("1.1")), (mpf("0.5"), mpf("0.6")), (mpf("-0.4"), mpf("0.9"))]
logz = log(mpf("0.8")) + 0.4j
emit("// H^{2,1}_{2,3}[0.8 e^{0.4i} | (0.3+0.2i,0.7),(0.1,1.3); (0.2,1.1),(0.5,0.6),(-0.4,0.9)]")
emit("inline const C kHLeft = %s;\n" % c(h_left(2, 1, up, lo, logz)))

up = [(mpf("0.2"), mpf("1.5")), (mpf("0.4"), mpf("0.8"))]
lo = [(mpf("0.1"), mpf("1.0"))]
logz = log(mpf("2.5")) + 0.3j
emit("// H^{1,1}_{2,1}[2.5 e^{0.3i} | (0.2,1.5),(0.4,0.8); (0.1,1)], delta < 0")
emit("inline const C kHRight = %s;\n" % c(h_right(1, 1, up, lo, logz)))

# same left spec on the log surface: phase 2.5 rad beyond the principal branch
up = [(mpf(0), mpf(1))]
lo = [(mpf(0), mpf(1)), (mpf(0), mpf(3))]
logz = log(mpf("0.7")) + 1j * (mpf(3) * pi / 2)
emit("// H^{1,1}_{1,2}[0.7 e^{3 pi i / 2} | (0,1); (0,1),(0,3)] on the log surface")
emit("inline const C kHSurface = %s;\n" % c(h_left(1, 1, up, lo, logz)))

emit("// 2F1(0.5, 1; 1.5; -0.25) and 1F2(1; 0.5+0.3i, 2.2; 3-1i)")
emit("inline const C kPfq21 = %s;" % c(hyper([0.5, 1], [1.5], -0.25)))
emit("inline const C kPfq12 = %s;\n" % c(hyper([1], [mpc(0.5, 0.3), 2.2], mpc(3, -1))))

emit("// sum_n w^n / Gamma(2.5 n + 1.3) at w = -1.7 and w = 0.4+1.1i")
for name, w in (("kMlReal", mpf("-1.7")), ("kMlComplex", mpc(0.4, 1.1))):
    emit("inline const C %s = %s;" % (name, c(nsum(lambda k: w ** k * rgamma(mpf("2.5") * k + mpf("1.3")), [0, inf]))))
emit("")
emit("// H^{2,0}_{0,2}[0.6 | -; (0,1),(0,1)] = 2 K_0(2 sqrt(0.6)), double poles")
emit("inline const C kDoublePole = %s;" % c(2 * besselk(0, 2 * sqrt(mpf("0.6")))))
emit("")
emit("}  // namespace oracle")
print("\n".join(out))
