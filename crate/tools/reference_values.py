"""Reference values for the diskdet test suite, computed with mpmath and SciPy.

Run: python3 tools/reference_values.py > crates/core/tests/data/reference.json
"""
import json
import math

import mpmath as mp
import numpy as np
from scipy.special import jn_zeros

mp.mp.dps = 30


def brute_force_s(nu, count=100_000):
    """S_nu from plain partial sums over SciPy's zeros of J_nu (integer nu),
    Richardson-extrapolated in 1/L over L = count/8, count/4, count/2, count."""
    z = jn_zeros(nu, count)
    ls = np.arange(1, count + 1, dtype=float)
    c = (2 * nu - 1) / 4
    terms = np.log(z / (ls * math.pi)) - c / ls
    table = [math.fsum(terms[: count >> j]) for j in (3, 2, 1, 0)]
    for level in (1, 2, 3):
        f = 2.0**level
        table = [(f * table[i + 1] - table[i]) / (f - 1) for i in range(len(table) - 1)]
    return table[0]


def f_prime_from_s(nu, s):
    c = (2 * nu - 1) / 4
    return -math.log(2) / 2 + c * (math.log(math.pi) - float(mp.euler)) - s


out = {}

# J_nu(x) spot values
nus = [0, 0.25, 0.5, 1, 2.5, 4, 10, 37.5, 100, 200]
xs = [0.1, 1, 2.5, 5, 8, 11.5, 15, 25, 40, 75, 150, 199, 201, 260, 400, 650, 1000]
out["bessel_j"] = [[nu, x, float(mp.besselj(nu, x))] for nu in nus for x in xs]

out["zeros"] = [[nu, l, float(mp.besseljzero(nu, l))]
                for nu in [0, 0.25, 1, 2, 3, 4, 10, 50, 200]
                for l in [1, 2, 3, 5, 10, 40, 200, 1000]]

# brute-force oracle for integer orders
s_brute = {nu: brute_force_s(nu) for nu in range(5)}
out["f_prime_zero_brute"] = {str(nu): [f_prime_from_s(nu, sv), sv] for nu, sv in s_brute.items()}

# closed form of the zeta-regularized product of Bessel zeros,
# f'_nu(0) = (nu/2) ln 2 + (1/2) ln Gamma(nu + 1) - (1/4) ln(2 pi)
out["f_prime_zero_closed"] = {
    str(nu): float(nu * mp.log(2) / 2 + mp.loggamma(nu + 1) / 2 - mp.log(2 * mp.pi) / 4)
    for nu in [0, 0.5, 1, 2, 3, 4, 1.5, 2.5]
}

# sum_l ln[(j_{m,l}/j_{0,l}) e^{-m/(2l)}] = S_m - S_0
out["ratio_series"] = {str(m): s_brute[m] - s_brute[0] for m in [1, 2, 3, 4]}

# q_0 for phi = -r^2/2, R = 1, alpha = 1
out["q0_gauss"] = float(mp.quad(lambda r: mp.exp(-r * r) * r, [0, 1]))
# q_n for phi = -r^4/4, n = 0..3
out["qn_quartic"] = [float(mp.quad(lambda r: mp.exp(-r**4 / 2) * r**(2 * n + 1), [0, 1])) for n in range(4)]

print(json.dumps(out, indent=1))
