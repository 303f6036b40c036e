#!/usr/bin/env python3
"""Independent oracle for the soil-channel fixtures used in the C++ tests.

Evaluates, from first principles and independently of the C++ code:
  * the Peplinski semi-empirical soil dielectric model (0.3-1.3 GHz),
  * the exact complex propagation constant,
  * the modified-Friis underground loss,
  * normal-incidence Fresnel power-transmission losses (both directions),
  * the composite AG+UG+refraction loss for the refracting straight ray.

Run it to regenerate the frozen constants in tests/test_soil_channel.cpp.
"""
import cmath
import math

C0 = 299792458.0
EPS0 = 8.8541878128e-12
MU0 = 1.25663706212e-6
DB_PER_NEPER = 20.0 / math.log(10.0)

# Debye parameters for free water near room temperature.
EPS_W0 = 80.1
EPS_WINF = 4.9
TWO_PI_TAU_W = 0.58e-10  # seconds


def peplinski(vwc, clay, sand, rho_b, rho_s, f_hz):
    """Peplinski, Ulaby & Dobson (1995, with the 1997 correction), 0.3-1.3 GHz."""
    assert 0.3e9 <= f_hz <= 1.3e9
    alpha = 0.65
    beta_p = 1.2748 - 0.519 * sand - 0.152 * clay
    beta_pp = 1.33797 - 0.603 * sand - 0.166 * clay
    sigma_eff = 0.0467 + 0.2204 * rho_b - 0.4111 * sand + 0.6614 * clay
    eps_solid = (1.01 + 0.44 * rho_s) ** 2 - 0.062
    x = f_hz * TWO_PI_TAU_W  # = 2*pi*f*tau_w
    eps_fw_p = EPS_WINF + (EPS_W0 - EPS_WINF) / (1.0 + x * x)
    eps_real = (
        1.15
        * (
            1.0
            + (rho_b / rho_s) * (eps_solid**alpha - 1.0)
            + (vwc**beta_p) * (eps_fw_p**alpha)
            - vwc
        )
        ** (1.0 / alpha)
        - 0.68
    )
    if vwc <= 0.0:
        return eps_real, 0.0
    eps_fw_pp = (
        x * (EPS_W0 - EPS_WINF) / (1.0 + x * x)
        + sigma_eff * (rho_s - rho_b) / (2.0 * math.pi * f_hz * EPS0 * rho_s * vwc)
    )
    eps_imag = ((vwc**beta_pp) * (eps_fw_pp**alpha)) ** (1.0 / alpha)
    return eps_real, eps_imag


def propagation_constants(eps_real, eps_imag, f_hz):
    """alpha [Np/m], beta [rad/m] via the exact complex square root."""
    omega = 2.0 * math.pi * f_hz
    gamma = 1j * omega * cmath.sqrt(MU0 * EPS0 * (eps_real - 1j * eps_imag))
    return gamma.real, gamma.imag


def underground_loss_db(alpha, beta, d):
    if d <= 0.0:
        return 0.0
    spreading = 20.0 * math.log10(2.0 * d * beta)  # 20*log10(4*pi*d/lambda_soil)
    return max(0.0, spreading + DB_PER_NEPER * alpha * d)


def fresnel_losses_db(eps_real, eps_imag):
    """(air->soil, soil->air) power-transmission losses at normal incidence."""
    n = cmath.sqrt(eps_real - 1j * eps_imag)
    zeta = 1.0 / n  # soil impedance normalised by eta0
    denom = abs(1.0 + zeta) ** 2
    t_ag2ug = 4.0 * zeta.real / denom
    t_ug2ag = 4.0 * abs(zeta) ** 2 / (zeta.real * denom)
    return (max(0.0, -10.0 * math.log10(t_ag2ug)),
            max(0.0, -10.0 * math.log10(t_ug2ag)))


def above_ground_loss_db(d, f_hz, gamma_exp):
    if d <= 0.0:
        return 0.0
    lam = C0 / f_hz
    return 20.0 * math.log10(4.0 * math.pi / lam) + 10.0 * gamma_exp * math.log10(d)


def split_ray(tx_height, tag_depth, offset):
    """Straight Tx-tag segment split at its surface crossing (no Snell bending)."""
    total = tx_height + tag_depth
    if total <= 0.0:
        return offset, 0.0
    f_air = tx_height / total
    d_air = math.hypot(offset * f_air, tx_height)
    d_soil = math.hypot(offset * (1.0 - f_air), tag_depth)
    return d_air, d_soil


def composite_loss_db(tx_height, tag_depth, offset, f_hz, soil, direction, gamma_exp):
    eps = peplinski(*soil, f_hz)
    a, b = propagation_constants(*eps, f_hz)
    d_air, d_soil = split_ray(tx_height, tag_depth, offset)
    refr_down, refr_up = fresnel_losses_db(*eps)
    refr = refr_down if direction == "ag2ug" else refr_up
    return (above_ground_loss_db(d_air, f_hz, gamma_exp)
            + underground_loss_db(a, b, d_soil)
            + refr)


if __name__ == "__main__":
    f = 915e6
    soil = (0.15, 0.30, 0.50, 1.5, 2.66)
    eps = peplinski(*soil, f)
    print(f"eps(vwc=0.15)            = ({eps[0]:.15g}, {eps[1]:.15g})")
    for v in (0.05, 0.25):
        e = peplinski(v, 0.30, 0.50, 1.5, 2.66, f)
        print(f"eps(vwc={v:.2f})            = ({e[0]:.15g}, {e[1]:.15g})")
    a, b = propagation_constants(*eps, f)
    print(f"alpha                     = {a:.15g} Np/m")
    print(f"beta                      = {b:.15g} rad/m")
    print(f"beta_free_space           = {2*math.pi*f/C0:.15g} rad/m")
    print(f"ug_loss(0.025 m)          = {underground_loss_db(a, b, 0.025):.15g} dB")
    print(f"ug_loss(0.05 m)           = {underground_loss_db(a, b, 0.05):.15g} dB")
    fr = fresnel_losses_db(*eps)
    print(f"refraction ag2ug          = {fr[0]:.15g} dB")
    print(f"refraction ug2ag          = {fr[1]:.15g} dB")
    print(f"ag_loss(1 m, gamma=3)     = {above_ground_loss_db(1.0, f, 3):.15g} dB")
    d_air, d_soil = split_ray(0.3, 0.025, 1.0)
    print(f"ray split (trial, 1 m)    = air {d_air:.15g} m, soil {d_soil:.15g} m")
    print(f"ag segment loss           = {above_ground_loss_db(d_air, f, 3):.15g} dB")
    print(f"ug segment loss           = {underground_loss_db(a, b, d_soil):.15g} dB")
    comp_dl = composite_loss_db(0.3, 0.025, 1.0, f, soil, "ag2ug", 3)
    comp_ul = composite_loss_db(0.3, 0.025, 1.0, f, soil, "ug2ag", 3)
    print(f"composite ag2ug (trial)   = {comp_dl:.15g} dB")
    print(f"composite ug2ag (trial)   = {comp_ul:.15g} dB")
