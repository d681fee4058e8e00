"""Brute-force suprema with scipy: bounded scalar maximization refined from a dense scan.

Run: python3 brute_force.py
"""
import numpy as np
from scipy.optimize import minimize_scalar


def maximize(g, lo, hi, n=200001):
    x = np.linspace(lo, hi, n)
    v = g(x)
    i = int(np.argmax(v))
    a, b = x[max(i - 1, 0)], x[min(i + 1, n - 1)]
    res = minimize_scalar(lambda y: -g(np.array([y]))[0], bounds=(a, b), method="bounded",
                          options={"xatol": 1e-14})
    return max(-res.fun, v[i])


def blasco_atom(z0, mass, s, t):
    # sup_a (1-|a|^2)^t mass / |1 - conj(a) z0|^(s+t); the sup lies on the ray through z0
    g = lambda x: mass * (1 - x * x) ** t / np.abs(1 - x * z0) ** (s + t)
    return maximize(g, -0.999999, 0.999999)


def bloch_log_kernel(b, alpha=1.0):
    # f = log(2/(1-b z)): sup |b| (1-r^2)^alpha / (1 - |b| r), along the ray through b
    g = lambda r: b * (1 - r * r) ** alpha / (1 - b * r)
    return maximize(g, 0.0, 0.9999999)


if __name__ == "__main__":
    for s, t in ((1.0, 1.0), (2.0, 1.0), (0.5, 2.0)):
        print(f"blasco_atom(0.5, 1, s={s}, t={t}) = {blasco_atom(0.5, 1.0, s, t):.15g}")
    for b in (0.5, 0.9, 0.99):
        print(f"bloch_log_kernel({b}) = {bloch_log_kernel(b):.15g}")
