"""Assembly and analytic geometry of Lorentz meridian surfaces in E^4_2.

A meridian surface is z(u, v) = f(u) l(v) + g(u) e4, where l is a unit
directrix on a carrier quadric in span{e1, e2, e3} and (f, g) a unit-speed
meridian profile.  This module glues a :class:`~meridian4.curves.FrameField`
and a :class:`~meridian4.profiles.MeridianProfile` into an evaluable
immersion with adapted frames and the closed-form mean curvature
decomposition, and implements the neutral-space congruence transform that
carries each family to its "tilde" partner.

Between samples, curve and profile data are evaluated by Hermite
interpolation (quintic for positions, matching the stored first and second
derivatives), so finite-difference probes of the immersion see a C^2
surface whose interpolation error sits far below the FD truncation error.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import BPoly, CubicSpline

from .algebra import SIG4, inner
from .curves import ChartKind, FrameField, chart, chart_params
from .errors import DomainError
from .families import MeridianFamily
from .profiles import MeridianProfile

__all__ = [
    "MeridianSurface",
    "MeanCurvatureDecomp",
    "assemble",
    "TRANSFORM_T",
    "transform_T",
    "TildeKind",
    "TildeSurface",
    "tilde_surface",
]


def _embed3(vecs: np.ndarray) -> np.ndarray:
    """Pad 3-vectors of span{e1,e2,e3} with a zero fourth coordinate."""
    out = np.zeros(vecs.shape[:-1] + (4,))
    out[..., :3] = vecs
    return out


@dataclass(frozen=True)
class MeanCurvatureDecomp:
    """Mean curvature in the adapted normal frame: H = h1 n1 + h2 n2.

    ``norm2`` is <H, H> = eps1 h1^2 + eps2 h2^2 with the family's normal
    signs; it is the quantity the classification theorems constrain.
    Fields are scalars or arrays matching the evaluation grid.
    """

    h1: np.ndarray
    h2: np.ndarray
    vector: np.ndarray
    norm2: np.ndarray


class MeridianSurface:
    """An assembled meridian surface with analytic evaluation methods."""

    def __init__(
        self,
        family: MeridianFamily,
        curve: FrameField,
        profile: MeridianProfile,
    ) -> None:
        if profile.family is not family:
            raise ValueError(
                f"profile was built for family {profile.family.value!r}, "
                f"cannot assemble a {family.value!r} surface"
            )
        if curve.family is not family.curve_family:
            raise ValueError(
                f"a {family.value!r} surface needs a {family.curve_family.value!r} "
                f"directrix, got {curve.family.value!r}"
            )
        if not np.all(np.isfinite(curve.ks)):
            raise ValueError("directrix curvature samples contain non-finite values")
        self.family = family
        self.curve = curve
        self.profile = profile

        cf = family.curve_family
        tp = cf.tangent_rate(curve.ks, curve.ls, curve.ts, curve.ns)
        n_rate = cf.normal_rate(curve.ks, curve.ts)
        self._Pl = BPoly.from_derivatives(
            curve.vs, np.stack([curve.ls, curve.ts, tp], axis=1)
        )
        self._Pt = self._Pl.derivative()
        self._Pn = BPoly.from_derivatives(curve.vs, np.stack([curve.ns, n_rate], axis=1))
        self._Pf = BPoly.from_derivatives(
            profile.us, np.column_stack([profile.f, profile.fp, profile.fpp])
        )
        self._Pf_d1 = self._Pf.derivative()
        # f'' is interpolated by value: twice-differentiating the Hermite
        # position interpolant hits an eps/h^2 roundoff floor, while the
        # spline through the stored f'' samples stays at the data's own
        # accuracy (the analytic minimality checks need ~1e-10 here).
        if len(profile.us) >= 4:
            self._Pf_d2 = CubicSpline(profile.us, profile.fpp)
        else:
            self._Pf_d2 = self._Pf.derivative(2)
        self._Pg = BPoly.from_derivatives(
            profile.us, np.column_stack([profile.g, profile.gp, profile.gpp])
        )
        self._Pg_d1 = self._Pg.derivative()

    # ------------------------------------------------------------------

    @property
    def u_span(self) -> tuple[float, float]:
        return self.profile.u_span

    @property
    def v_span(self) -> tuple[float, float]:
        return self.curve.v_span

    def _checked(self, u, v) -> tuple[np.ndarray, np.ndarray]:
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        u, v = np.broadcast_arrays(u, v)
        (u0, u1), (v0, v1) = self.u_span, self.v_span
        slack_u = 1e-12 * max(1.0, abs(u0), abs(u1))
        slack_v = 1e-12 * max(1.0, abs(v0), abs(v1))
        if u.size and (u.min() < u0 - slack_u or u.max() > u1 + slack_u):
            raise DomainError(
                f"u out of profile domain [{u0:.6g}, {u1:.6g}]: "
                f"requested [{u.min():.6g}, {u.max():.6g}]"
            )
        if v.size and (v.min() < v0 - slack_v or v.max() > v1 + slack_v):
            raise DomainError(
                f"v out of directrix domain [{v0:.6g}, {v1:.6g}]: "
                f"requested [{v.min():.6g}, {v.max():.6g}]"
            )
        return u, v

    def profile_values(self, u):
        """(f, f', f'', g, g') at arbitrary u inside the profile window."""
        u = np.asarray(u, dtype=float)
        return (
            self._Pf(u),
            self._Pf_d1(u),
            self._Pf_d2(u),
            self._Pg(u),
            self._Pg_d1(u),
        )

    def immersion(self, u, v) -> np.ndarray:
        """Evaluate z(u, v) = f(u) l(v) + g(u) e4; broadcasts, returns (..., 4)."""
        u, v = self._checked(u, v)
        f = self._Pf(u)
        g = self._Pg(u)
        l = self._Pl(v)
        out = np.empty(u.shape + (4,))
        out[..., :3] = f[..., None] * l
        out[..., 3] = g
        return out

    def grid_points(self, us, vs) -> np.ndarray:
        """Immersion on a product grid, shape (len(us), len(vs), 4)."""
        us = np.asarray(us, dtype=float)
        vs = np.asarray(vs, dtype=float)
        return self.immersion(us[:, None], vs[None, :])

    def frames(self, u, v):
        """The adapted frame (X, Y, n1, n2) at (u, v), each (..., 4).

        X = z_u = f' l + g' e4,  Y = z_v / f = t,  n1 = n,
        n2 = +- g' l + f' e4 (sign per family).  The frame is pseudo-
        orthonormal with the family's causal signs.
        """
        u, v = self._checked(u, v)
        f = self._Pf(u)
        if np.min(f) <= 1e-8:
            raise DomainError(f"warp factor f collapsed to {np.min(f):.3e}; frame undefined")
        fp = self._Pf_d1(u)
        gp = self._Pg_d1(u)
        l = self._Pl(v)
        t = self._Pt(v)
        n = self._Pn(v)
        shape = u.shape + (4,)
        X = np.zeros(shape)
        X[..., :3] = fp[..., None] * l
        X[..., 3] = gp
        Y = _embed3(t)
        n1 = _embed3(n)
        n2 = np.zeros(shape)
        n2[..., :3] = (self.family.n2_directrix_sign * gp)[..., None] * l
        n2[..., 3] = fp
        return X, Y, n1, n2

    def mean_curvature(self, u, v) -> MeanCurvatureDecomp:
        """Closed-form mean curvature decomposition at (u, v).

        h1 multiplies the directrix normal n1 and carries the spherical
        curvature kappa(v); h2 multiplies n2 and carries the profile's
        governing expression f f'' + f'^2 +- 1.  Degenerate spots (f -> 0
        or a vanishing g'^2 radicand, where n2 blows up) raise
        :class:`DomainError`.
        """
        u, v = self._checked(u, v)
        f = self._Pf(u)
        fp = self._Pf_d1(u)
        fpp = self._Pf_d2(u)
        gp = self._Pg_d1(u)
        if np.min(f) <= 1e-8:
            raise DomainError(f"warp factor f collapsed to {np.min(f):.3e}")
        radicand = self.family.gprime_radicand(fp)
        if np.min(np.abs(radicand)) <= 1e-10:
            raise DomainError(
                "meridian speed radicand g'^2 vanishes on the requested set; "
                "the second normal degenerates there"
            )
        kappa = self.curve.kappa_at(v)
        h1, h2 = self.family.h_coefficients(kappa, f, fp, fpp, gp)
        _, _, n1, n2 = self.frames(u, v)
        vector = h1[..., None] * n1 + h2[..., None] * n2
        s1, s2 = self.family.frame_signs[2], self.family.frame_signs[3]
        norm2 = s1 * h1 * h1 + s2 * h2 * h2
        return MeanCurvatureDecomp(h1=h1, h2=h2, vector=vector, norm2=norm2)


def assemble(
    family: MeridianFamily, curve: FrameField, profile: MeridianProfile
) -> MeridianSurface:
    """Assemble a meridian surface, enforcing curve/profile/family consistency."""
    return MeridianSurface(family, curve, profile)


# ---------------------------------------------------------------------------
# the congruence transform
# ---------------------------------------------------------------------------

#: Linear map with T e1 = e3, T e2 = e4, T e3 = e2, T e4 = e1.
#: It is an anti-isometry of the neutral metric (<Tx, Ty> = -<x, y>) with
#: T^4 = identity, and carries each meridian family onto its tilde partner.
TRANSFORM_T = np.array(
    [
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
    ]
)


def transform_T(x) -> np.ndarray:
    """Apply the congruence transform to 4-vectors (vectorized over leading axes)."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 4:
        raise ValueError("transform_T acts on 4-vectors")
    return x @ TRANSFORM_T.T


class TildeKind(enum.Enum):
    """The three congruence classes of transformed meridian surfaces.

    Each kind is the T-image of one source family; its directrix lands on
    the congruent carrier quadric inside span{e2, e3, e4}:

    * ``PRIME``    <- SECOND          (carrier becomes the tilde de Sitter sphere)
    * ``DOUBLE_A`` <- FIRST_SPACELIKE (carrier becomes the tilde hyperbolic sphere)
    * ``DOUBLE_B`` <- FIRST_TIMELIKE  (carrier becomes the tilde hyperbolic sphere)
    """

    PRIME = "tilde-prime"
    DOUBLE_A = "tilde-double-a"
    DOUBLE_B = "tilde-double-b"

    @property
    def source_family(self) -> MeridianFamily:
        return {
            TildeKind.PRIME: MeridianFamily.SECOND,
            TildeKind.DOUBLE_A: MeridianFamily.FIRST_SPACELIKE,
            TildeKind.DOUBLE_B: MeridianFamily.FIRST_TIMELIKE,
        }[self]

    @property
    def carrier(self) -> ChartKind:
        if self is TildeKind.PRIME:
            return ChartKind.S21_TILDE
        return ChartKind.H21_TILDE


@dataclass(eq=False)
class TildeSurface:
    """The T-image of a meridian surface.

    Evaluation is on demand: points are the transform of the source
    immersion, z~(u, v) = T z(u, v) = g(u) e1 + f(u) ltilde(v), where
    ltilde is the source directrix pushed to the tilde carrier chart.
    """

    kind: TildeKind
    source: MeridianSurface

    def immersion(self, u, v) -> np.ndarray:
        return transform_T(self.source.immersion(u, v))

    def grid_points(self, us, vs) -> np.ndarray:
        return transform_T(self.source.grid_points(us, vs))

    def chart_reference(self, u, v) -> np.ndarray:
        """Independent evaluation through the tilde carrier chart.

        Recovers the chart parameters (w1, w2) of the source directrix,
        re-expresses the transformed surface as g e1 + f * chart(tilde
        carrier; w1, w2), and returns those points.  Agreement of this
        with :meth:`immersion` is the numerical congruence certificate.
        """
        u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
        src = self.source
        l = src._Pl(v)
        w1, w2 = chart_params(src.family.carrier, l)
        f, _, _, g, _ = src.profile_values(u)
        out = f[..., None] * chart(self.kind.carrier, w1, w2)
        out[..., 0] += g
        return out


def tilde_surface(kind: TildeKind, source: MeridianSurface) -> TildeSurface:
    """Wrap the T-image of ``source``, checking the family/kind pairing."""
    if source.family is not kind.source_family:
        raise ValueError(
            f"{kind.value!r} is the image of {kind.source_family.value!r} surfaces, "
            f"got a {source.family.value!r} source"
        )
    return TildeSurface(kind=kind, source=source)
