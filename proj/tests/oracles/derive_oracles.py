"""Independent quadrature oracles for the frozen expected values in oracle_values.hpp.

Every value is computed by direct mpmath integration of the defining integral,
never by the C++ code paths under test. Run:  python3 derive_oracles.py
"""
import mpmath as mp

mp.mp.dps = 30
pi = mp.pi
inf = mp.inf


def q(f):
    return mp.quad(f, [-inf, 0, inf])


def moments(amp2):
    n = q(amp2)
    x0 = q(lambda x: x * amp2(x)) / n
    return n, x0, q(lambda x: (x - x0) ** 2 * amp2(x)) / n


def gaussian_amp2(zeta):
    return lambda x: mp.e ** (-x * x / zeta)


def freq_spread_from_derivative(lam, dlam, dphase, w0=0):
    # Delta w^2 = ||f'||^2/(4 pi^2 ||f||^2) - w0^2 with f = lam e^{2 pi i phase}
    n = q(lambda x: lam(x) ** 2)
    d2 = q(lambda x: dlam(x) ** 2 + (2 * pi * lam(x) * dphase(x)) ** 2)
    return d2 / (4 * pi ** 2 * n) - w0 ** 2


out = {}
g = lambda x: mp.e ** (-pi * x * x)
out["kGaussNorm"] = mp.sqrt(q(lambda x: g(x) ** 2))

zeta = 1 / (2 * pi)
_, _, sx = moments(gaussian_amp2(zeta))
out["kGaussSpreadX"] = sx
lam = lambda x: mp.e ** (-x * x / (2 * zeta))
dlam = lambda x: -x / zeta * lam(x)
out["kGaussSpreadW"] = freq_spread_from_derivative(lam, dlam, lambda x: 0)
out["kChirpSpreadW"] = freq_spread_from_derivative(lam, dlam, lambda x: x)  # c = 1
out["kChirpD2SpreadW"] = freq_spread_from_derivative(lam, dlam, lambda x: -2 * x)  # c - d = -2

n = q(lambda x: lam(x) ** 2)
out["kChirpCov"] = q(lambda x: x * x * lam(x) ** 2) / n
out["kSgnChirpCov"] = q(lambda x: x * abs(x) * lam(x) ** 2) / n
out["kSgnChirpAbsCov"] = q(lambda x: abs(x) * abs(x) * lam(x) ** 2) / n
out["kSgnChirpSpreadW"] = freq_spread_from_derivative(lam, dlam, lambda x: abs(x))
# The same quantities about the true frequency center E|x| of the sgn chirp
# (its gradient |x| has non-zero mean, so the center is not the w0 parameter).
sgn_w0 = q(lambda x: abs(x) * lam(x) ** 2) / n
out["kSgnChirpCenterW"] = sgn_w0
out["kSgnChirpCentralAbsCov"] = q(lambda x: abs(x) * abs(abs(x) - sgn_w0) * lam(x) ** 2) / n
out["kSgnChirpCentralSpreadW"] = freq_spread_from_derivative(lam, dlam, lambda x: abs(x), sgn_w0)

for z in (1 / (2 * pi), mp.mpf(1), mp.mpf(4)):
    l = lambda x, z=z: mp.e ** (-x * x / (2 * z))
    dl = lambda x, z=z: -x / z * l(x)
    _, _, s = moments(lambda x, z=z: l(x) ** 2)
    out[f"kGaussProduct_zeta{float(z):.4f}"] = s * freq_spread_from_derivative(l, dl, lambda x: 0)

out["kChirpProduct"] = sx * out["kChirpSpreadW"]
out["kSgnChirpProduct"] = sx * out["kSgnChirpSpreadW"]
out["kSgnChirpCentralProduct"] = sx * out["kSgnChirpCentralSpreadW"]
out["kBoundReal"] = 1 / (16 * pi ** 2)

# Wigner of e^{-pi x^2} at (0,0): int e^{-pi y^2/4 - pi y^2/4} dy
out["kWignerGaussOrigin"] = q(lambda y: mp.e ** (-pi * (y / 2) ** 2) * mp.e ** (-pi * (y / 2) ** 2))

# Wigner-domain spreads: weight |W|^2 = 2 e^{-4 pi (x^2+w^2)}
out["kWignerSpreadX"] = q(lambda x: x * x * mp.e ** (-4 * pi * x * x)) / q(lambda x: mp.e ** (-4 * pi * x * x))

# Distribution-domain product for chirp c=1, kernel phase d=2
out["kT2Product"] = (out["kChirpProduct"] + sx * freq_spread_from_derivative(lam, dlam, lambda x: -x)) / 8
out["kT4Bound"] = (out["kBoundReal"] + out["kChirpCov"] ** 2 + out["kBoundReal"]) / 8
out["kT1Bound"] = out["kBoundReal"] / 4
# Gaussian with kernel phase d=2: f conj(phi) is a chirp with Cov = -2 sx
out["kT3Bound"] = (out["kBoundReal"] + out["kBoundReal"] + (2 * sx) ** 2) / 8

# Hermite-1 x e^{-pi x^2}
h = lambda x: x * mp.e ** (-pi * x * x)
dh = lambda x: (1 - 2 * pi * x * x) * mp.e ** (-pi * x * x)
_, _, hsx = moments(lambda x: h(x) ** 2)
out["kHermiteSpreadX"] = hsx
out["kHermiteSpreadW"] = freq_spread_from_derivative(h, dh, lambda x: 0)

# Flandrin functional of the Gaussian Wigner: Delta x^2/T^2 + T^2 Delta w^2 (first-power marginals)
for T in (0.5, 1, 2):
    out[f"kFlandrinGaussT{T}"] = sx / T ** 2 + T ** 2 * out["kGaussSpreadW"]

for k, v in out.items():
    print(f"{k} = {mp.nstr(v, 17)}")
