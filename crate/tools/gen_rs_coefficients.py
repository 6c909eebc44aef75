"""Emit the Taylor coefficients of the Riemann-Siegel kernel

    psi(p) = cos(2*pi*(p*p - p - 1/16)) / cos(2*pi*p)

about p = 1/2 as a Rust array. psi is even in u = p - 1/2, so only even
powers are written. Requires mpmath.

    python3 tools/gen_rs_coefficients.py > crates/core/src/zeta/rs_coefficients.rs
"""
import mpmath as mp

mp.mp.dps = 60
DEGREE = 80


def psi(u):
    return -mp.cos(2 * mp.pi * u * u - 5 * mp.pi / 8) / mp.cos(2 * mp.pi * u)


coeffs = mp.taylor(psi, 0, DEGREE)
print("// Generated by tools/gen_rs_coefficients.py; do not edit by hand.")
print()
print("/// Coefficient of `u^(2j)` in the Taylor series of the Riemann-Siegel kernel about `p = 1/2`.")
print(f"pub(crate) const PSI_EVEN: [f64; {DEGREE // 2 + 1}] = [")
for j in range(DEGREE // 2 + 1):
    print(f"    {mp.nstr(coeffs[2 * j], 20, min_fixed=0, max_fixed=0)},")
print("];")
