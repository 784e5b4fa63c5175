"""Independent oracle for the frozen constants in test_zoo.cpp.

phi is rebuilt with mpmath quadrature and the profile ODE is integrated
with scipy's DOP853, sharing no code with the C++ library.
Run: python3 tests/oracles/profile_oracle.py
"""

import math

import mpmath as mp
from scipy.integrate import quad, solve_ivp

mp.mp.dps = 40
BETA = 1


def E(x):
    return mp.exp(-BETA / x) if x > 0 else mp.mpf(0)


def step(t):
    t = mp.mpf(t)
    if abs(t) >= 0.5:
        return mp.sign(t)
    x = t + mp.mpf(1) / 2
    return 2 * E(x) / (E(x) + E(1 - x)) - 1


C = mp.mpf(1) / 2 + mp.quad(step, [0, 0.25, 0.5])


def phi(y):
    a = abs(y)
    if a >= 0.5:
        return 1 - a
    return float(C - mp.quad(step, [0, a]))


def dphi(y):
    return -float(step(y))


def rhs(y, z):
    return [(1 - z[0] ** 2) * (dphi(y) * z[0] + 1) / phi(y)]


def main():
    print("phi(0) =", mp.nstr(C, 30))
    sol = solve_ivp(rhs, [0, 1 - 1e-6], [0.0], method="DOP853", rtol=1e-13, atol=1e-15, dense_output=True)
    z = lambda y: float(sol.sol(y)[0])
    zp = z(0.5)
    w_half = quad(lambda y: math.sqrt(1 - z(y) ** 2) / phi(y), 0, 0.5, epsabs=1e-14, epsrel=1e-14, limit=200)[0]
    c_plus = w_half - math.sqrt((1 + zp) / (1 - zp))
    inner = quad(lambda y: 1 / phi(y), 0, 0.5, epsabs=1e-14, epsrel=1e-14, limit=200)[0]
    y = 1 - 1e-6
    r_M = inner - math.log(1 - y) + math.log(0.5)
    print("z_plus =", repr(zp))
    print("w(1/2) =", repr(w_half))
    print("c_plus =", repr(c_plus))
    print("z(1 - 1e-4) =", repr(z(1 - 1e-4)))
    print("z(1 - 1e-6) =", repr(z(y)))
    print("r_M(1 - 1e-6) =", repr(r_M))
    print("H / sqrt(r_M) =", repr(1 / math.sqrt(1 - z(y) ** 2) / math.sqrt(r_M)))


if __name__ == "__main__":
    main()
