// Generated by gen_oracles.py from mpmath at 50 digits; do not edit.
#pragma once

#include <complex>

namespace oracle {

using C = std::complex<double>;

struct Point {
  C z;
  C value;
};

// mpmath loggamma (continuous branch); the principal log agrees modulo 2 pi i
inline const Point kLogGamma[] = {
    {{3.0, 4.0}, {-1.7566267846037841, 4.7426644380346579}},
    {{0.5, 0.0}, {0.57236494292470009, 0.0}},
    {{-2.5, 0.10000000000000001}, {-0.1031492440428192, -9.3144442683598381}},
    {{10.0, -20.0}, {-1.7029804439565111, -52.660660425584719}},
    {{0.001, 0.001}, {6.5606044738375526, -0.78597373492965343}},
    {{-7.2999999999999998, 0.0}, {-7.7791016298268517, -25.132741228718346}},
    {{0.10000000000000001, 30.0}, {-47.565423555699173, 71.406325063462139}},
    {{-15.5, -3.0}, {-36.585118946851744, 41.929849117270233}},
};

inline const Point kGamma[] = {
    {{-0.5, 0.0}, {-3.5449077018110321, 0.0}},
    {{0.25, 1.0}, {0.099149758763453354, -0.51661774379288529}},
    {{-3.7000000000000002, 2.2000000000000002}, {-0.00061190872038372045, 0.00034663630649002413}},
    {{20.5, 0.0}, {540624298233507500.0, 0.0}},
    {{0.00000001, 0.0}, {99999999.422784343, 0.0}},
    {{-0.99999899999999997, 0.0}, {-1000000.4227569913, 0.0}},
};

// (0.5+0.5i)_10
inline const C kPochhammer = {-325674.21875, 945739.0625};

// H^{2,1}_{2,3}[0.8 e^{0.4i} | (0.3+0.2i,0.7),(0.1,1.3); (0.2,1.1),(0.5,0.6),(-0.4,0.9)]
inline const C kHLeft = {1.2049355485092938, 0.49798742806752886};

// H^{1,1}_{2,1}[2.5 e^{0.3i} | (0.2,1.5),(0.4,0.8); (0.1,1)], delta < 0
inline const C kHRight = {0.33885386930364494, -0.028128994896051092};

// H^{1,1}_{1,2}[0.7 e^{3 pi i / 2} | (0,1); (0,1),(0,3)] on the log surface
inline const C kHSurface = {0.99931944494569536, 0.11666572145074581};

// 2F1(0.5, 1; 1.5; -0.25) and 1F2(1; 0.5+0.3i, 2.2; 3-1i)
inline const C kPfq21 = {0.92729521800161223, 0.0};
inline const C kPfq12 = {2.726296289590397, -3.966786132229384};

// sum_n w^n / Gamma(2.5 n + 1.3) at w = -1.7 and w = 0.4+1.1i
inline const C kMlReal = {0.76622625706870523, 0.0};
inline const C kMlComplex = {1.1941990347277326, 0.23866274602770025};

// H^{2,0}_{0,2}[0.6 | -; (0,1),(0,1)] = 2 K_0(2 sqrt(0.6)), double poles
inline const C kDoublePole = {0.40125898393742176, 0.0};

}  // namespace oracle
