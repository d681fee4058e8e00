"""Two-kernel integrals I(a,b) = int (1-|z|^2)^s |1-a z|^-r |1-b z|^-t dA for real a, b,
by nested adaptive quadrature with breakpoints clustered at the kernel peaks.

Run: python3 kernel_pair.py
"""
import mpmath as mp

mp.mp.dps = 20


def kernel_pair(a, b, s, r, t):
    a, b = mp.mpf(a), mp.mpf(b)

    def angular(rho):
        f = lambda th: abs(1 - a * rho * mp.expj(th)) ** (-r) * abs(1 - b * rho * mp.expj(th)) ** (-t)
        # symmetric in theta; peaks at theta = 0
        pts = [0] + [mp.mpf(10) ** -k for k in range(6, -1, -1)] + [mp.pi]
        return 2 * mp.quad(f, pts) / (2 * mp.pi)

    radial = lambda rho: (1 - rho * rho) ** s * angular(rho) * 2 * rho
    pts = [0, 0.5, 0.9, 0.99, 0.995, 0.999, 0.9995, 0.9999, 0.99999, 1]
    return mp.quad(radial, pts)


CASES = [
    # (a, b, s, r, t)
    ("0.956", "0.999", 0.5, 1.0, 2.0),
    ("0.9", "0.99", 0.5, 1.0, 2.0),
    ("0.99", "0.999", 0.5, 1.0, 2.0),
    ("0.5", "0.9", 0.0, 1.0, 3.0),
]

if __name__ == "__main__":
    for a, b, s, r, t in CASES:
        print(f"kernel_pair(a={a}, b={b}, s={s}, r={r}, t={t}) = {mp.nstr(kernel_pair(a, b, s, r, t), 15)}")
