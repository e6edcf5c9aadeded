"""Independent numerical oracles used by the test suite.

Adaptive 2-D quadrature of the boundary-patch integrands, parametrized in the
frame where the kept chord sits on the z-axis and the removed endpoints lie
in the z = 0 plane.  Nothing here calls the closed forms under test.
"""

import math

import numpy as np
from scipy import integrate

QUAD_OPTS = dict(epsabs=1e-11, epsrel=1e-11)


def special_frame(theta, theta_prime):
    """Endpoint coordinates (kept chord endpoints b, c; removed bp, cp)."""
    a = math.sin(theta / 2.0)
    phi = 2.0 * math.asin(math.sin(theta_prime / 2.0) / math.cos(theta / 2.0))
    w = math.sqrt(1.0 - a * a)
    b = np.array([0.0, 0.0, a])
    c = np.array([0.0, 0.0, -a])
    bp = np.array([w, 0.0, 0.0])
    cp = np.array([w * math.cos(phi), w * math.sin(phi), 0.0])
    return a, phi, b, c, bp, cp


def _t_upper(psi, a, phi):
    num = a * math.cos(psi - phi / 2.0)
    den = math.sqrt((1.0 - a * a) * math.cos(phi / 2.0) ** 2 + num * num)
    return math.asin(num / den)


def sliver_area_quad(theta, theta_prime):
    a, phi, *_ = special_frame(theta, theta_prime)
    val, _ = integrate.dblquad(
        lambda t, psi: math.cos(t),
        0.0, phi, lambda psi: math.asin(a), lambda psi: _t_upper(psi, a, phi),
        **QUAD_OPTS)
    return val


def sliver_flux_quad(theta, theta_prime):
    a, phi, *_ = special_frame(theta, theta_prime)
    val, _ = integrate.dblquad(
        lambda t, psi: (1.0 - a * math.sin(t)) * math.cos(t),
        0.0, phi, lambda psi: math.asin(a), lambda psi: _t_upper(psi, a, phi),
        **QUAD_OPTS)
    return val


class SpindleFrame:
    """Rotation-surface parametrization built from the endpoint coordinates."""

    def __init__(self, theta, theta_prime):
        a, phi, b, c, bp, cp = special_frame(theta, theta_prime)
        self.theta_prime = theta_prime
        self.phi_prime = 2.0 * math.asin(
            math.sin(theta / 2.0) / math.cos(theta_prime / 2.0))
        self.b, self.bp, self.cp = b, bp, cp
        self.mid = 0.5 * (bp + cp)
        self.v = (bp - cp) / np.linalg.norm(bp - cp)

    def eta(self, s):
        rel = self.b - self.mid
        return self.mid + math.cos(s) * rel + math.sin(s) * np.cross(self.v, rel)

    def point(self, s, t):
        tp = self.theta_prime
        e = self.eta(s)
        return (e + math.cos(t) * (self.bp - e)
                + math.sin(t) * (self.cp - e - math.cos(tp) * (self.bp - e))
                / math.sin(tp))

    def normal(self, s, t):
        tp = self.theta_prime
        return (math.cos(t - tp / 2.0) / math.cos(tp / 2.0) * (self.eta(s) - self.mid)
                + math.sin(t - tp / 2.0) * self.v)

    def area_element(self, t):
        tp = self.theta_prime
        return math.cos(t - tp / 2.0) - math.cos(tp / 2.0)


def spindle_area_quad(theta, theta_prime):
    fr = SpindleFrame(theta, theta_prime)
    val, _ = integrate.dblquad(
        lambda t, s: fr.area_element(t),
        0.0, fr.phi_prime, lambda s: 0.0, lambda s: fr.theta_prime,
        **QUAD_OPTS)
    return val


def spindle_flux_quad(theta, theta_prime):
    fr = SpindleFrame(theta, theta_prime)
    val, _ = integrate.dblquad(
        lambda t, s: float(fr.point(s, t) @ fr.normal(s, t)) * fr.area_element(t),
        0.0, fr.phi_prime, lambda s: 0.0, lambda s: fr.theta_prime,
        **QUAD_OPTS)
    return val
