"""The three families of Lorentz meridian surfaces and their sign tables.

A meridian surface z(u, v) = f(u) l(v) + g(u) e4 in the neutral 4-space is
determined by a directrix curve l on a carrier quadric in span{e1,e2,e3}
and a meridian profile (f, g).  Exactly three causal combinations produce
Lorentz surfaces; this module names them and centralizes every family-
dependent sign and formula so the profile, surface and harness modules all
draw from one table:

``FIRST_TIMELIKE``
    carrier S^2_1(1), spacelike directrix, timelike meridian:
    f'^2 - g'^2 = -1.
``FIRST_SPACELIKE``
    carrier S^2_1(1), timelike directrix, spacelike meridian:
    f'^2 - g'^2 = +1.
``SECOND``
    carrier H^2_1(-1), spacelike directrix, meridian with
    f'^2 + g'^2 = 1.

"First"/"second" refer to the two types of rotational hypersurface the
surfaces sit in (de Sitter vs. hyperbolic carrier).
"""

from __future__ import annotations

import enum

import numpy as np

from .curves import ChartKind, CurveFamily

__all__ = ["MeridianFamily"]


class MeridianFamily(enum.Enum):
    """Family tag shared by meridian profiles and assembled surfaces."""

    FIRST_TIMELIKE = "first-timelike"
    FIRST_SPACELIKE = "first-spacelike"
    SECOND = "second"

    # ------------------------------------------------------------------
    # structural data
    # ------------------------------------------------------------------

    @property
    def curve_family(self) -> CurveFamily:
        """The directrix curve type this family requires."""
        return {
            MeridianFamily.FIRST_TIMELIKE: CurveFamily.SPACELIKE_S21,
            MeridianFamily.FIRST_SPACELIKE: CurveFamily.TIMELIKE_S21,
            MeridianFamily.SECOND: CurveFamily.SPACELIKE_H21,
        }[self]

    @property
    def carrier(self) -> ChartKind:
        return self.curve_family.carrier

    @property
    def frame_signs(self) -> tuple[int, int, int, int]:
        """Causal signs (<X,X>, <Y,Y>, <n1,n1>, <n2,n2>) of the adapted frame."""
        return {
            MeridianFamily.FIRST_TIMELIKE: (-1, 1, -1, 1),
            MeridianFamily.FIRST_SPACELIKE: (1, -1, 1, -1),
            MeridianFamily.SECOND: (-1, 1, 1, -1),
        }[self]

    # ------------------------------------------------------------------
    # meridian speed constraint and g' rule
    # ------------------------------------------------------------------

    def speed_residual(self, fp, gp):
        """Residual of the unit-speed constraint (0 for exact profiles)."""
        fp = np.asarray(fp, dtype=float)
        gp = np.asarray(gp, dtype=float)
        if self is MeridianFamily.FIRST_TIMELIKE:
            return fp * fp - gp * gp + 1.0
        if self is MeridianFamily.FIRST_SPACELIKE:
            return fp * fp - gp * gp - 1.0
        return fp * fp + gp * gp - 1.0

    def gprime_radicand(self, fp):
        """g'^2 expressed through f' by the unit-speed constraint."""
        fp = np.asarray(fp, dtype=float)
        if self is MeridianFamily.FIRST_TIMELIKE:
            return fp * fp + 1.0
        if self is MeridianFamily.FIRST_SPACELIKE:
            return fp * fp - 1.0
        return 1.0 - fp * fp

    def gpp_rule(self, fp, fpp, gp):
        """g'' implied by differentiating the unit-speed constraint."""
        fp = np.asarray(fp, dtype=float)
        fpp = np.asarray(fpp, dtype=float)
        gp = np.asarray(gp, dtype=float)
        if self is MeridianFamily.SECOND:
            return -fp * fpp / gp
        return fp * fpp / gp

    # ------------------------------------------------------------------
    # governing ordinary differential expressions
    # ------------------------------------------------------------------

    @property
    def governing_offset(self) -> float:
        """Constant in D = f f'' + f'^2 + offset, which drives all three laws."""
        return 1.0 if self is MeridianFamily.FIRST_TIMELIKE else -1.0

    def governing_core(self, f, fp, fpp):
        """D = f f'' + f'^2 +- 1; minimality is exactly D = 0."""
        f = np.asarray(f, dtype=float)
        return f * np.asarray(fpp, dtype=float) + np.asarray(fp, dtype=float) ** 2 + self.governing_offset

    # ------------------------------------------------------------------
    # phi-reduction data (first integrals of the quasi-minimal / CMC ODEs)
    # ------------------------------------------------------------------

    def z2_from_phi2(self, phi2):
        """z^2 as a function of phi^2 in the order-reduction substitution."""
        phi2 = np.asarray(phi2, dtype=float)
        if self is MeridianFamily.FIRST_TIMELIKE:
            return phi2 + 1.0
        if self is MeridianFamily.FIRST_SPACELIKE:
            return phi2 - 1.0
        return 1.0 - phi2

    def phi2_from_z2(self, z2):
        """Inverse of :meth:`z2_from_phi2`."""
        z2 = np.asarray(z2, dtype=float)
        if self is MeridianFamily.FIRST_TIMELIKE:
            return z2 - 1.0
        if self is MeridianFamily.FIRST_SPACELIKE:
            return z2 + 1.0
        return 1.0 - z2

    @property
    def cmc_inner_sign(self) -> float:
        """Sign eps in the CMC radicand a^2 + 4 eps c t^2."""
        return 1.0 if self is MeridianFamily.FIRST_TIMELIKE else -1.0

    # ------------------------------------------------------------------
    # mean curvature decomposition in the adapted frame
    # ------------------------------------------------------------------

    def h_coefficients(self, kappa, f, fp, fpp, gp):
        """Normal components (h1, h2) of H = h1 n1 + h2 n2.

        Uses the signed g', so the formulas remain valid on every sign
        branch of the profile.
        """
        kappa = np.asarray(kappa, dtype=float)
        f = np.asarray(f, dtype=float)
        gp = np.asarray(gp, dtype=float)
        core = self.governing_core(f, fp, fpp)
        if self is MeridianFamily.FIRST_TIMELIKE:
            h1 = -kappa / (2.0 * f)
            h2 = -core / (2.0 * f * gp)
        elif self is MeridianFamily.FIRST_SPACELIKE:
            h1 = -kappa / (2.0 * f)
            h2 = core / (2.0 * f * gp)
        else:
            h1 = kappa / (2.0 * f)
            h2 = core / (2.0 * f * gp)
        return h1, h2

    def meridian_curvature(self, fpp, gp):
        """Normal curvature kappa_m of the meridian in its coordinate plane."""
        fpp = np.asarray(fpp, dtype=float)
        gp = np.asarray(gp, dtype=float)
        if self is MeridianFamily.SECOND:
            return -fpp / gp
        return fpp / gp

    @property
    def n2_directrix_sign(self) -> float:
        """Sign s in the second normal n2 = s g' l + f' e4."""
        return -1.0 if self is MeridianFamily.SECOND else 1.0
