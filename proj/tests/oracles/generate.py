"""Reference values for the unit tests, computed with mpmath at 40 digits.

Run from the repository root:  python3 tests/oracles/generate.py > tests/oracles/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40


def c(x):
    return mp.nstr(x, 25, strip_zeros=False)


def lerch_chi4(s):
    return (mp.zeta(s, mp.mpf(1) / 4) - mp.zeta(s, mp.mpf(3) / 4)) / mp.power(4, s)


def spectral_theta(nu, a, s, j):
    # sum_m (|m+a|^2 + s^2)^{-j} = int_0^inf t^{j-1} e^{-s^2 t} theta_a(t)^nu dt / Gamma(j)
    def theta(t):
        if t < 1:
            q = mp.exp(-mp.pi ** 2 / t)
            return mp.sqrt(mp.pi / t) * (mp.jtheta(3, 0, q) if a == 0 else mp.jtheta(4, 0, q))
        q = mp.exp(-t)
        return mp.jtheta(3, 0, q) if a == 0 else mp.jtheta(2, 0, q)
    f = lambda t: t ** (j - 1) * mp.exp(-s * s * t) * theta(t) ** nu
    return mp.quad(f, [0, 0.05, 1, 10, mp.inf]) / mp.gamma(j)


def bessel_int_lhs(lam, mu, a, b):
    f = lambda x: x ** (lam + 1) * mp.besselj(lam, b * x) / (x * x + a * a) ** (mu + 1)
    return mp.quadosc(f, [0, mp.inf], omega=b)


values = {
    "zeta_3": mp.zeta(3),
    "zeta_2_5": mp.zeta(2.5),
    "zeta_c_re": mp.re(mp.zeta(mp.mpc(2.5, 1))),
    "zeta_c_im": mp.im(mp.zeta(mp.mpc(2.5, 1))),
    "zeta_c2_re": mp.re(mp.zeta(mp.mpc(1.5, 30))),
    "zeta_c2_im": mp.im(mp.zeta(mp.mpc(1.5, 30))),
    "catalan": mp.catalan,
    "L4_c_re": mp.re(lerch_chi4(mp.mpc(0.7, 3))),
    "L4_c_im": mp.im(lerch_chi4(mp.mpc(0.7, 3))),
    "L4_half": lerch_chi4(mp.mpf("0.5")),
    "K0_1em3": mp.besselk(0, mp.mpf("0.001")),
    "K1_1": mp.besselk(1, 1),
    "K5_0_5": mp.besselk(5, mp.mpf("0.5")),
    "K12_50": mp.besselk(12, 50),
    "K3_20": mp.besselk(3, 20),
    "K2_7_3": mp.besselk(2, mp.mpf("7.3")),
    "J0_100": mp.besselj(0, 100),
    "J0_7_5": mp.besselj(0, mp.mpf("7.5")),
    "J1_sqrt2": mp.besselj(1, mp.sqrt(2)),
    "J5_30": mp.besselj(5, 30),
    "J3_900": mp.besselj(3, 900),
    "spectral_nu2_a0_j2_s1": spectral_theta(2, 0, mp.mpf(1), 2),
    "spectral_nu3_ahalf_j2_s07": spectral_theta(3, mp.mpf("0.5"), mp.mpf("0.7"), 2),
    "spectral_nu4_a0_j3_s1_3": spectral_theta(4, 0, mp.mpf("1.3"), 3),
    "bessel_int_0_1": bessel_int_lhs(0, 1, mp.mpf(1), 2 * mp.pi),
    "bessel_int_2_3": bessel_int_lhs(2, 3, mp.mpf("0.8"), mp.mpf("2.5")),
    "zeta_7": mp.zeta(7),
    "zeta_6": mp.zeta(6),
}

print("#pragma once")
print()
print("// Generated by tests/oracles/generate.py (mpmath, 40 digits).")
print()
print("namespace oracle {")
print()
for k, v in values.items():
    print(f"inline constexpr double {k} = {c(v)};")
print()
print("} // namespace oracle")
