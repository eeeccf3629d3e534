"""Definitional brute-force implementation used as an independent oracle.

Deliberately naive: scipy eigensolver, explicit index loops for marginals,
scalar formulas written straight from the definitions. Kept separate from the
library code paths it checks.
"""
import numpy as np
from scipy.linalg import eigh


def thermal(h, temperature):
    w, v = eigh(h)
    if temperature == 0:
        p = (w <= w[0] + 1e-12 * max(1.0, abs(w[0]))).astype(float)
    else:
        p = np.exp(-(w - w[0]) / temperature)
    p = p / p.sum()
    return v @ np.diag(p) @ v.conj().T


def entropy(rho):
    w = eigh(rho, eigvals_only=True)
    return float(-sum(x * np.log(x) for x in w if x > 1e-14))


def ptrace_a(rho, d_a, d_b):
    out = np.zeros((d_a, d_a), dtype=complex)
    for i in range(d_a):
        for k in range(d_a):
            for j in range(d_b):
                out[i, k] += rho[i * d_b + j, k * d_b + j]
    return out


def ptrace_b(rho, d_a, d_b):
    out = np.zeros((d_b, d_b), dtype=complex)
    for j in range(d_b):
        for l in range(d_b):
            for i in range(d_a):
                out[j, l] += rho[i * d_b + j, i * d_b + l]
    return out


def free_energy(rho, h, temperature):
    e = float(np.trace(h @ rho).real)
    if temperature == 0:
        return e
    return e - temperature * entropy(rho)


def protocol_report(h_a, h_b, h_i, temperature):
    """All protocol outputs computed from the definitions, as a dict."""
    d_a, d_b = h_a.shape[0], h_b.shape[0]
    h_total = np.kron(h_a, np.eye(d_b)) + np.kron(np.eye(d_a), h_b) + h_i

    rho_s = thermal(h_total, temperature)
    rho_a_r = ptrace_a(rho_s, d_a, d_b)
    rho_b_r = ptrace_b(rho_s, d_a, d_b)
    rho_a_th = thermal(h_a, temperature)
    rho_b_th = thermal(h_b, temperature)

    df_a = free_energy(rho_a_r, h_a, temperature) - free_energy(rho_a_th, h_a, temperature)
    df_b = free_energy(rho_b_r, h_b, temperature) - free_energy(rho_b_th, h_b, temperature)
    mi = entropy(rho_a_r) + entropy(rho_b_r) - entropy(rho_s)
    mi_term = 0.0 if temperature == 0 else temperature * mi

    hi_t2 = float(np.trace(h_i @ np.kron(rho_a_th, rho_b_th)).real)
    hi_t3 = float(np.trace(h_i @ rho_s).real)
    bound = hi_t2 - hi_t3
    work = df_a + df_b + mi_term

    return {
        "work": work,
        "work_local_only": df_a + df_b,
        "bound": bound,
        "efficiency": work / bound if abs(bound) > 1e-12 else None,
        "delta_f_a": df_a,
        "delta_f_b": df_b,
        "mi_term": mi_term,
        "hi_t2": hi_t2,
        "hi_t3": hi_t3,
    }
