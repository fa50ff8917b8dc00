"""Theorem-level verification: cases, reports, the built-in suite, samplers.

A :class:`CaseSpec` names one classification statement (a theorem tag plus
profile parameters, grids and tolerances); :func:`verify_case` builds the
full pipeline - Frenet curve, profile, assembled surface - and certifies
the statement against the finite-difference oracle, producing a
:class:`VerificationReport` whose pass/fail is recomputable from its own
recorded statistics.  :func:`run_theorem_suite` covers all nine theorem
cases (CMC with both sign branches), the congruence transform, and the
hyperplane corollary.
"""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass, field, replace

import numpy as np

from . import __version__
from .algebra import SIG4, CausalCharacter, affine_rank, causal_character, inner
from .curves import integrate_frenet, standard_initial_frame
from .errors import DomainError
from .families import MeridianFamily
from .oracle import fd_jet, frame_equation_residuals, fundamental_forms
from .profiles import (
    BranchSigns,
    GoverningLaw,
    MeridianProfile,
    ProfileParams,
    integrate_profile,
    minimal_profile,
    phi_closed_form,
    profile_from_callable,
    profile_residuals,
)
from .surfaces import (
    TRANSFORM_T,
    MeridianSurface,
    TildeKind,
    assemble,
    tilde_surface,
    transform_T,
)

__all__ = [
    "Theorem",
    "CaseSpec",
    "VerificationReport",
    "verify_case",
    "run_theorem_suite",
    "suite_to_dict",
    "sample_case",
]


class Theorem(enum.Enum):
    """The verifiable statements: one tag per classification theorem, plus
    the congruence check and a designed-to-fail control."""

    MINIMAL_A = "minimal-a"
    MINIMAL_B = "minimal-b"
    MINIMAL_C = "minimal-c"
    QUASI_A = "quasi-a"
    QUASI_B = "quasi-b"
    QUASI_C = "quasi-c"
    CMC_A = "cmc-a"
    CMC_B = "cmc-b"
    CMC_C = "cmc-c"
    CONGRUENCE_TILDE = "congruence-tilde"
    NEGATIVE_CONTROL = "negative-control"

    @property
    def family(self) -> MeridianFamily | None:
        if self is Theorem.CONGRUENCE_TILDE:
            return None
        if self is Theorem.NEGATIVE_CONTROL:
            return MeridianFamily.FIRST_TIMELIKE
        suffix = self.value.rsplit("-", 1)[1]
        return {
            "a": MeridianFamily.FIRST_TIMELIKE,
            "b": MeridianFamily.FIRST_SPACELIKE,
            "c": MeridianFamily.SECOND,
        }[suffix]

    @property
    def law(self) -> GoverningLaw | None:
        if self is Theorem.CONGRUENCE_TILDE:
            return None
        if self is Theorem.NEGATIVE_CONTROL:
            return GoverningLaw.MINIMAL
        prefix = self.value.rsplit("-", 1)[0]
        return {
            "minimal": GoverningLaw.MINIMAL,
            "quasi": GoverningLaw.QUASI_MINIMAL,
            "cmc": GoverningLaw.CMC,
        }[prefix]


@dataclass(frozen=True)
class CaseSpec:
    """One verification case: theorem tag, parameters, grids, tolerances.

    ``curve_kappa`` overrides the directrix curvature (default: 0 for
    minimal cases, the parameter a otherwise) - that is how the curvature-
    mismatch negative control is expressed.  ``f0`` seeds the profile ODE
    for quasi-minimal/CMC cases.  ``u_span``/``v_span`` default to
    theorem-appropriate windows.  ``tol_norm2`` defaults per target size:
    1e-5 absolute for |target| <= 1, else 1e-4 relative.
    """

    theorem: Theorem
    params: ProfileParams = field(default_factory=ProfileParams)
    curve_kappa: float | None = None
    f0: float | None = None
    nu: int = 21
    nv: int = 21
    u_span: tuple[float, float] | None = None
    v_span: tuple[float, float] | None = None
    step: float = 1e-3
    fd_step: float = 1e-4
    n_probe: int = 20
    seed: int = 0
    tol_H: float = 1e-5
    tol_norm2: float | None = None
    tol_frame: float = 1e-5
    tol_governing: float = 1e-6
    tol_constraint: float = 1e-8
    tol_h12: float = 1e-9
    tol_rank_residual: float = 1e-8
    min_H_floor: float = 1e-3

    def __post_init__(self) -> None:
        if self.nu < 5 or self.nv < 5:
            raise ValueError(f"grid must be at least 5x5, got {self.nu}x{self.nv}")
        if not (self.step > 0.0 and self.fd_step > 0.0):
            raise ValueError("step and fd_step must be positive")
        for name in (
            "tol_H",
            "tol_frame",
            "tol_governing",
            "tol_constraint",
            "tol_h12",
            "tol_rank_residual",
            "min_H_floor",
        ):
            if not (getattr(self, name) > 0.0):
                raise ValueError(f"{name} must be positive")
        if self.tol_norm2 is not None and not (self.tol_norm2 > 0.0):
            raise ValueError("tol_norm2 must be positive when given")
        if self.n_probe < 1:
            raise ValueError("n_probe must be at least 1")

    def resolved_tol_norm2(self, target: float) -> float:
        if self.tol_norm2 is not None:
            return self.tol_norm2
        return 1e-5 if abs(target) <= 1.0 else 1e-4 * abs(target)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "params": {
                "a": self.params.a,
                "b": self.params.b,
                "c": self.params.c,
                "c0": self.params.c0,
                "branch_signs": self.params.branch.as_string(),
            },
            "curve_kappa": self.curve_kappa,
            "f0": self.f0,
            "nu": self.nu,
            "nv": self.nv,
            "u_span": list(self.u_span) if self.u_span else None,
            "v_span": list(self.v_span) if self.v_span else None,
            "step": self.step,
            "fd_step": self.fd_step,
            "n_probe": self.n_probe,
            "seed": self.seed,
            "tol_H": self.tol_H,
            "tol_norm2": self.tol_norm2,
            "tol_frame": self.tol_frame,
            "tol_governing": self.tol_governing,
            "tol_constraint": self.tol_constraint,
            "tol_h12": self.tol_h12,
            "tol_rank_residual": self.tol_rank_residual,
            "min_H_floor": self.min_H_floor,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CaseSpec":
        data = dict(data)
        theorem = Theorem(data.pop("theorem"))
        pdata = dict(data.pop("params", {}))
        branch = BranchSigns.from_string(pdata.pop("branch_signs", "++++"))
        params = ProfileParams(branch=branch, **pdata)
        for key in ("u_span", "v_span"):
            if data.get(key) is not None:
                data[key] = tuple(data[key])
        known = {f.name for f in cls.__dataclass_fields__.values()}  # type: ignore[attr-defined]
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown CaseSpec fields: {sorted(unknown)}")
        return cls(theorem=theorem, params=params, **data)


@dataclass
class VerificationReport:
    """Outcome of one case: status, statistics, and the applied checks.

    ``status`` is "pass", "fail", or "domain-truncated" (the profile ODE
    stopped before the requested window; statistics then cover the reached
    span).  Each entry of ``checks`` records name, value, threshold,
    comparison and outcome, so the status is recomputable from the report
    alone.  ``runtime_seconds`` is the only non-deterministic field.
    """

    case: dict
    status: str
    stats: dict
    checks: list[dict]
    runtime_seconds: float
    tool_version: str = __version__
    schema: int = 1

    def to_dict(self, include_runtime: bool = True) -> dict:
        doc = {
            "schema": self.schema,
            "tool_version": self.tool_version,
            "case": self.case,
            "status": self.status,
            "stats": self.stats,
            "checks": self.checks,
        }
        if include_runtime:
            doc["runtime_seconds"] = self.runtime_seconds
        return doc

    def to_json(self, include_runtime: bool = True) -> str:
        return json.dumps(self.to_dict(include_runtime), sort_keys=True, indent=1) + "\n"

    @staticmethod
    def recompute_status(doc: dict) -> str:
        """Re-derive the status from a report dict's own stats and checks."""
        if doc["stats"].get("truncated"):
            return "domain-truncated"
        return "pass" if all(c["ok"] for c in doc["checks"]) else "fail"


def _check(name: str, value, threshold, comparison: str) -> dict:
    if comparison == "<=":
        ok = value <= threshold
    elif comparison == ">=":
        ok = value >= threshold
    elif comparison == "==":
        ok = value == threshold
    else:
        raise ValueError(f"unknown comparison {comparison!r}")
    return {
        "name": name,
        "value": value,
        "threshold": threshold,
        "comparison": comparison,
        "ok": bool(ok),
    }


# ---------------------------------------------------------------------------
# case building
# ---------------------------------------------------------------------------


def _samples_for(span: tuple[float, float], step: float) -> int:
    return max(9, int(round((span[1] - span[0]) / step)) + 1)


def _default_minimal_span(
    family: MeridianFamily, params: ProfileParams
) -> tuple[float, float]:
    a, b = params.a, params.b
    if family is MeridianFamily.FIRST_TIMELIKE:
        disc = a * a + b
        if disc <= 0.0:
            raise DomainError(f"first-timelike minimal case needs a^2 + b > 0, got {disc:.6g}")
        r = np.sqrt(disc)
        return (a - 0.8 * r, a + 0.8 * r)
    if family is MeridianFamily.FIRST_SPACELIKE:
        disc = a * a - b
        if disc <= 0.0:
            raise DomainError(f"first-spacelike minimal case needs a^2 - b > 0, got {disc:.6g}")
        edge = -a + np.sqrt(disc)
        pad = 0.2 * max(1.0, np.sqrt(disc))
        return (edge + pad, edge + pad + 1.0)
    disc = b - a * a
    if disc <= 0.0:
        raise DomainError(f"second-family minimal case needs b - a^2 > 0, got {disc:.6g}")
    return (-a - 0.8, -a + 0.8)


def _curve_growth_rate(family: MeridianFamily, kappa: float) -> float:
    """Exponential growth rate of the directrix frame components.

    The third-order scalar equation satisfied by the directrix components
    is l''' = w2 * l' with w2 = kappa^2 - 1, kappa^2 + 1, 1 - kappa^2 for
    the three carrier/causal combinations; positive w2 means cosh-type
    growth at rate sqrt(w2).
    """
    from .curves import CurveFamily

    k2 = kappa * kappa
    cf = family.curve_family
    if cf is CurveFamily.SPACELIKE_S21:
        w2 = k2 - 1.0
    elif cf is CurveFamily.TIMELIKE_S21:
        w2 = k2 + 1.0
    else:
        w2 = 1.0 - k2
    return float(np.sqrt(max(w2, 0.0)))


def _default_v_span(family: MeridianFamily, kappa: float) -> tuple[float, float]:
    """Default directrix window, capped so frame components stay below ~e^3.

    Finite-difference truncation scales with the fourth v-derivative of
    the immersion, which grows like rate^4 * exp(rate * v); keeping
    rate * v_max <= 2.2 keeps the oracle comfortably inside the default
    tolerances for any curvature the samplers draw.
    """
    rate = _curve_growth_rate(family, kappa)
    return (0.0, min(2.0, 2.2 / max(rate, 1.5)))


def _build_case(spec: CaseSpec):
    """Curve + profile + surface for a theorem case; returns (surface, law, target)."""
    thm = spec.theorem
    family = thm.family
    law = thm.law
    assert family is not None and law is not None
    params = spec.params

    kappa = spec.curve_kappa
    if kappa is None:
        kappa = 0.0 if law is GoverningLaw.MINIMAL else params.a
    v_span = spec.v_span if spec.v_span is not None else _default_v_span(family, kappa)
    cf = family.curve_family
    curve = integrate_frenet(
        cf, lambda v: kappa, standard_initial_frame(cf), v_span, spec.step
    )

    if thm is Theorem.NEGATIVE_CONTROL:
        u_span = spec.u_span if spec.u_span is not None else (0.0, 2.0)
        profile = profile_from_callable(
            family,
            f=lambda u: u + 2.0,
            fp=lambda u: np.ones_like(u),
            fpp=lambda u: np.zeros_like(u),
            u_span=u_span,
            n_samples=_samples_for(u_span, spec.step),
            params=params,
        )
    elif law is GoverningLaw.MINIMAL:
        u_span = spec.u_span if spec.u_span is not None else _default_minimal_span(family, params)
        # closed forms are free to sample densely; halving the step keeps
        # the interpolated f'' inside the 1e-9 analytic minimality budget
        profile = minimal_profile(
            family, params, u_span, _samples_for(u_span, 0.5 * spec.step)
        )
    else:
        if spec.f0 is None:
            raise ValueError(f"{thm.value} needs f0 (initial warp value f(u0))")
        u_span = spec.u_span if spec.u_span is not None else (0.0, 1.0)
        window = (1e-6, max(20.0, 8.0 * spec.f0))
        phi = phi_closed_form(law, family, params, window)
        profile = integrate_profile(phi, spec.f0, u_span, spec.step)

    surface = assemble(family, curve, profile)
    target = params.c if law is GoverningLaw.CMC else 0.0
    return surface, law, target


def _interior_grid(surface: MeridianSurface, spec: CaseSpec):
    (u0, u1), (v0, v1) = surface.u_span, surface.v_span
    scale = max(1.0, abs(u0), abs(u1), abs(v0), abs(v1))
    margin = 3.0 * spec.fd_step * scale
    if u0 + margin >= u1 - margin or v0 + margin >= v1 - margin:
        raise DomainError(
            f"domain too small for an interior grid with fd_step={spec.fd_step}"
        )
    us = np.linspace(u0 + margin, u1 - margin, spec.nu)
    vs = np.linspace(v0 + margin, v1 - margin, spec.nv)
    return us, vs


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def verify_case(spec: CaseSpec) -> VerificationReport:
    """Run one verification case end to end.

    Builds the pipeline, sweeps the analytic and finite-difference mean
    curvature over an interior grid, evaluates profile, constraint and
    frame-equation residuals, the affine rank of the sample cloud, and
    assembles a report whose checks depend on the theorem's law (see the
    class docstrings for the exact check sets).
    """
    t0 = time.perf_counter()
    if spec.theorem is Theorem.CONGRUENCE_TILDE:
        return _verify_congruence(spec, t0)

    surface, law, target = _build_case(spec)
    profile = surface.profile
    us, vs = _interior_grid(surface, spec)
    tol_norm2 = spec.resolved_tol_norm2(target)

    # analytic sweep
    mc = surface.mean_curvature(us[:, None], vs[None, :])
    max_h1 = float(np.max(np.abs(mc.h1)))
    max_h2 = float(np.max(np.abs(mc.h2)))
    min_h_pair = float(np.min(np.hypot(mc.h1, mc.h2)))

    # finite-difference sweep
    scale = max(1.0, float(np.max(np.abs(us))), float(np.max(np.abs(vs))))
    h_fd = spec.fd_step * scale
    max_H_inf = 0.0
    min_H_inf = np.inf
    max_norm2_dev = 0.0
    characters: set[CausalCharacter] = set()
    for u in us:
        for v in vs:
            forms = fundamental_forms(fd_jet(surface.immersion, u, v, h_fd))
            H_inf = float(np.max(np.abs(forms.H)))
            max_H_inf = max(max_H_inf, H_inf)
            min_H_inf = min(min_H_inf, H_inf)
            max_norm2_dev = max(max_norm2_dev, abs(forms.norm2H - target))
            characters.add(causal_character(forms.H))

    # frame equations and mixed second-form component at probe points
    rng = np.random.default_rng(spec.seed)
    pu = rng.uniform(us[0], us[-1], spec.n_probe)
    pv = rng.uniform(vs[0], vs[-1], spec.n_probe)
    max_frame = 0.0
    max_mixed = 0.0
    for u, v in zip(pu, pv):
        res = frame_equation_residuals(surface, u, v)
        max_frame = max(max_frame, max(res.values()))
        forms = fundamental_forms(fd_jet(surface.immersion, u, v, h_fd))
        f_here = float(surface.profile_values(u)[0])
        max_mixed = max(max_mixed, float(np.max(np.abs(forms.h_uv_vec))) / f_here)

    # profile residuals (normalized for the squared CMC form)
    res = profile_residuals(profile, law, spec.params)
    if law is GoverningLaw.CMC:
        w2 = np.clip(profile.family.gprime_radicand(profile.fp), 0.0, None)
        inner_rad = np.abs(
            spec.params.a**2
            + 4.0 * profile.family.cmc_inner_sign * spec.params.c * profile.f**2
        )
        denom = np.maximum(1.0, profile.family.governing_core(
            profile.f, profile.fp, profile.fpp
        ) ** 2 + inner_rad * w2)
        max_governing = float(np.max(np.abs(res.governing) / denom))
    else:
        max_governing = res.max_governing
    max_constraint = res.max_constraint

    rank, rank_res = affine_rank(surface.grid_points(us, vs).reshape(-1, 4))

    stats = {
        "max_h1_analytic": max_h1,
        "max_h2_analytic": max_h2,
        "min_h_pair_norm_analytic": min_h_pair,
        "max_H_fd_inf": max_H_inf,
        "min_H_fd_inf": float(min_H_inf),
        "max_norm2_dev_fd": float(max_norm2_dev),
        "target_norm2": target,
        "max_frame_residual": max_frame,
        "max_mixed_fd": max_mixed,
        "max_governing_residual": max_governing,
        "max_constraint_residual": max_constraint,
        "affine_rank": rank,
        "affine_rank_residual": rank_res,
        "H_causal_character": _uniform_character(characters),
        "truncated": bool(profile.truncated),
        "u_span_reached": [float(profile.us[0]), float(profile.us[-1])],
        "v_span": [float(surface.curve.vs[0]), float(surface.curve.vs[-1])],
        "max_gram_drift_curve": surface.curve.max_gram_drift,
    }

    checks = [
        _check("max_norm2_dev_fd", stats["max_norm2_dev_fd"], tol_norm2, "<="),
        _check("max_governing_residual", max_governing, spec.tol_governing, "<="),
        _check("max_constraint_residual", max_constraint, spec.tol_constraint, "<="),
        _check("max_frame_residual", max_frame, spec.tol_frame, "<="),
        _check("max_mixed_fd", max_mixed, spec.tol_frame, "<="),
    ]
    if law is GoverningLaw.MINIMAL:
        checks += [
            _check("max_H_fd_inf", max_H_inf, spec.tol_H, "<="),
            _check("max_h1_analytic", max_h1, spec.tol_h12, "<="),
            _check("max_h2_analytic", max_h2, spec.tol_h12, "<="),
            _check("affine_rank", rank, 3, "=="),
            _check("affine_rank_residual", rank_res, spec.tol_rank_residual, "<="),
        ]
    elif law is GoverningLaw.QUASI_MINIMAL:
        checks += [
            _check("min_H_fd_inf", stats["min_H_fd_inf"], spec.min_H_floor, ">="),
            _check("min_h_pair_norm_analytic", min_h_pair, spec.min_H_floor, ">="),
        ]
    else:
        if spec.params.c < 0.0:
            checks.append(
                _check(
                    "H_causal_character",
                    stats["H_causal_character"] or "mixed",
                    CausalCharacter.TIMELIKE.value,
                    "==",
                )
            )

    status = (
        "domain-truncated"
        if profile.truncated
        else ("pass" if all(c["ok"] for c in checks) else "fail")
    )
    return VerificationReport(
        case=spec.to_dict(),
        status=status,
        stats=stats,
        checks=checks,
        runtime_seconds=time.perf_counter() - t0,
    )


def _uniform_character(characters: set[CausalCharacter]) -> str | None:
    if len(characters) == 1:
        return next(iter(characters)).value
    return "mixed" if characters else None


# ---------------------------------------------------------------------------
# the congruence case
# ---------------------------------------------------------------------------


def _congruence_sources(spec: CaseSpec) -> dict[MeridianFamily, MeridianSurface]:
    """Three small generic surfaces, one per family (not special cases)."""
    recipes = {
        MeridianFamily.FIRST_TIMELIKE: (
            ProfileParams(a=0.0, b=1.0), (-0.6, 0.6), 0.4, (0.0, 1.2)
        ),
        MeridianFamily.FIRST_SPACELIKE: (
            ProfileParams(a=1.5, b=1.0), (0.0, 1.0), 0.3, (0.0, 1.2)
        ),
        MeridianFamily.SECOND: (
            ProfileParams(a=0.0, b=1.0), (-0.6, 0.6), 0.5, (0.0, 1.2)
        ),
    }
    out = {}
    for family, (params, u_span, kappa, v_span) in recipes.items():
        cf = family.curve_family
        curve = integrate_frenet(
            cf, lambda v: kappa, standard_initial_frame(cf), v_span, spec.step
        )
        profile = minimal_profile(family, params, u_span, _samples_for(u_span, spec.step))
        out[family] = assemble(family, curve, profile)
    return out


def _verify_congruence(spec: CaseSpec, t0: float) -> VerificationReport:
    """Certify the congruence transform: exact algebra, grid matches, H flips."""
    basis = np.eye(4)
    anti_dev = 0.0
    for x in basis:
        for y in basis:
            anti_dev = max(
                anti_dev, abs(inner(transform_T(x), transform_T(y)) + inner(x, y))
            )
    order_dev = float(
        np.max(np.abs(np.linalg.matrix_power(TRANSFORM_T, 4) - np.eye(4)))
    )

    sources = _congruence_sources(spec)
    rng = np.random.default_rng(spec.seed)
    max_grid_dev = 0.0
    max_flip_dev = 0.0
    flips_ok = True
    for kind in TildeKind:
        src = sources[kind.source_family]
        til = tilde_surface(kind, src)
        (u0, u1), (v0, v1) = src.u_span, src.v_span
        us = np.linspace(u0, u1, spec.nu)
        vs = np.linspace(v0, v1, spec.nv)
        dev = np.max(
            np.abs(til.grid_points(us, vs) - til.chart_reference(us[:, None], vs[None, :]))
        )
        max_grid_dev = max(max_grid_dev, float(dev))

        margin = 0.05 * min(u1 - u0, v1 - v0)
        pu = rng.uniform(u0 + margin, u1 - margin, spec.n_probe)
        pv = rng.uniform(v0 + margin, v1 - margin, spec.n_probe)
        for u, v in zip(pu, pv):
            forms_src = fundamental_forms(fd_jet(src.immersion, u, v))
            forms_til = fundamental_forms(fd_jet(til.immersion, u, v))
            max_flip_dev = max(max_flip_dev, abs(forms_til.norm2H + forms_src.norm2H))
            cs = causal_character(forms_src.zu)
            ct = causal_character(forms_til.zu)
            swap = {
                CausalCharacter.SPACELIKE: CausalCharacter.TIMELIKE,
                CausalCharacter.TIMELIKE: CausalCharacter.SPACELIKE,
                CausalCharacter.LIGHTLIKE: CausalCharacter.LIGHTLIKE,
            }
            if ct is not swap[cs]:
                flips_ok = False

    stats = {
        "anti_isometry_dev": anti_dev,
        "transform_order_dev": order_dev,
        "max_tilde_grid_dev": max_grid_dev,
        "max_norm2_flip_dev": max_flip_dev,
        "tangent_causal_flip": bool(flips_ok),
        "truncated": False,
    }
    checks = [
        _check("anti_isometry_dev", anti_dev, 0.0, "<="),
        _check("transform_order_dev", order_dev, 0.0, "<="),
        _check("max_tilde_grid_dev", max_grid_dev, 1e-10, "<="),
        _check("max_norm2_flip_dev", max_flip_dev, 1e-6, "<="),
        _check("tangent_causal_flip", 1.0 if flips_ok else 0.0, 1.0, ">="),
    ]
    status = "pass" if all(c["ok"] for c in checks) else "fail"
    return VerificationReport(
        case=spec.to_dict(),
        status=status,
        stats=stats,
        checks=checks,
        runtime_seconds=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# the built-in suite
# ---------------------------------------------------------------------------


def _suite_cases() -> list[CaseSpec]:
    """Nine theorem cases (CMC with both sign branches) plus the congruence."""
    return [
        CaseSpec(Theorem.MINIMAL_A, ProfileParams(a=0.0, b=1.0), u_span=(-0.8, 0.8), v_span=(0.0, 2.0)),
        CaseSpec(Theorem.MINIMAL_B, ProfileParams(a=1.5, b=1.0), u_span=(0.0, 1.0), v_span=(0.0, 1.5)),
        CaseSpec(Theorem.MINIMAL_C, ProfileParams(a=0.0, b=1.0), u_span=(-0.8, 0.8), v_span=(0.0, 1.5)),
        CaseSpec(Theorem.QUASI_A, ProfileParams(a=1.2, c=1.0), f0=2.0, u_span=(0.0, 0.8)),
        CaseSpec(Theorem.QUASI_B, ProfileParams(a=1.0, c=0.5), f0=1.5, u_span=(0.0, 0.5)),
        CaseSpec(Theorem.QUASI_C, ProfileParams(a=0.6, c=2.0), f0=1.6, u_span=(0.0, 1.0)),
        CaseSpec(Theorem.CMC_A, ProfileParams(a=2.0, b=0.5, c=1.0), f0=1.0, u_span=(0.0, 0.5)),
        CaseSpec(Theorem.CMC_A, ProfileParams(a=3.0, b=1.0, c=-0.5), f0=1.0, u_span=(0.0, 0.2)),
        CaseSpec(Theorem.CMC_B, ProfileParams(a=3.0, b=0.5, c=0.5), f0=1.0, u_span=(0.0, 0.2)),
        CaseSpec(Theorem.CMC_B, ProfileParams(a=2.0, b=0.5, c=-1.0), f0=1.5, u_span=(0.0, 0.4)),
        CaseSpec(
            Theorem.CMC_C,
            ProfileParams(a=1.5, b=-0.5, c=0.5, branch=BranchSigns(rhs=-1)),
            f0=0.8,
            u_span=(0.0, 0.3),
        ),
        CaseSpec(
            Theorem.CMC_C,
            ProfileParams(a=1.0, b=2.0, c=-1.0),
            f0=0.95,
            u_span=(0.0, 0.22),
        ),
        CaseSpec(Theorem.CONGRUENCE_TILDE),
    ]


def run_theorem_suite(**overrides) -> tuple[list[VerificationReport], dict]:
    """Run the built-in suite; returns (reports, corollary summary).

    The corollary summary certifies the hyperplane statement at sample
    resolution: every minimal case must have affine rank 3, and at least
    one quasi-minimal case must reach rank 4 (so dropping the minimality
    assumption genuinely leaves the hyperplane).  ``overrides`` replace
    CaseSpec fields uniformly (e.g. nu=11 for a faster pass).
    """
    reports = []
    minimal_ranks: list[int] = []
    quasi_ranks: list[int] = []
    for case in _suite_cases():
        if overrides:
            case = replace(case, **overrides)
        report = verify_case(case)
        reports.append(report)
        law = case.theorem.law
        if law is GoverningLaw.MINIMAL:
            minimal_ranks.append(report.stats["affine_rank"])
        elif law is GoverningLaw.QUASI_MINIMAL:
            quasi_ranks.append(report.stats["affine_rank"])
    corollary = {
        "name": "hyperplane-corollary",
        "minimal_ranks": minimal_ranks,
        "quasi_ranks": quasi_ranks,
        "ok": bool(
            minimal_ranks
            and all(r == 3 for r in minimal_ranks)
            and any(r == 4 for r in quasi_ranks)
        ),
    }
    return reports, corollary


def suite_to_dict(reports: list[VerificationReport], corollary: dict) -> dict:
    all_pass = all(r.status == "pass" for r in reports) and corollary["ok"]
    return {
        "schema": 1,
        "tool_version": __version__,
        "suite": [r.to_dict() for r in reports],
        "corollary": corollary,
        "all_pass": bool(all_pass),
    }


# ---------------------------------------------------------------------------
# admissible random draws (for acceptance testing and sweeps)
# ---------------------------------------------------------------------------


def sample_case(
    theorem: Theorem,
    rng: np.random.Generator,
    c: float | None = None,
    **overrides,
) -> CaseSpec:
    """Draw one random admissible CaseSpec for a theorem.

    Minimal cases are drawn from closed-form admissibility regions; the
    quasi-minimal and CMC cases go through the phi-domain machinery with
    rejection, so every returned spec integrates without truncation and
    keeps the geometry away from degeneracies (f > 0, |g'| bounded below
    for the families where it can vanish).  For CMC theorems ``c`` is the
    required target value.
    """
    law = theorem.law
    family = theorem.family
    if law is GoverningLaw.MINIMAL:
        spec = _sample_minimal(theorem, family, rng)
    elif law is GoverningLaw.QUASI_MINIMAL:
        spec = _sample_reduced(theorem, family, rng, GoverningLaw.QUASI_MINIMAL, None)
    elif law is GoverningLaw.CMC:
        if c is None:
            raise ValueError("CMC draws need the target c")
        spec = _sample_reduced(theorem, family, rng, GoverningLaw.CMC, float(c))
    else:
        raise ValueError(f"cannot sample cases for {theorem.value}")
    return replace(spec, **overrides) if overrides else spec


def _sample_minimal(theorem, family, rng) -> CaseSpec:
    sg = int(rng.choice([1, -1]))
    branch = BranchSigns(g=sg)
    if family is MeridianFamily.FIRST_TIMELIKE:
        a = rng.uniform(-0.5, 0.5)
        b = rng.uniform(0.5, 2.0)
        r = float(np.sqrt(a * a + b))
        u_span = (a - 0.75 * r, a + 0.75 * r)
        params = ProfileParams(a=a, b=b, branch=branch)
    elif family is MeridianFamily.FIRST_SPACELIKE:
        a = rng.uniform(0.8, 1.6)
        d = rng.uniform(0.3, 1.0)
        b = a * a - d
        edge = -a + float(np.sqrt(d))
        u_span = (edge + 0.25, edge + 1.25)
        params = ProfileParams(a=a, b=b, branch=branch)
    else:
        a = rng.uniform(-0.5, 0.5)
        d = rng.uniform(0.5, 1.5)
        b = a * a + d
        u_span = (-a - 0.75, -a + 0.75)
        params = ProfileParams(a=a, b=b, branch=branch)
    return CaseSpec(theorem, params, u_span=u_span)


def _reduced_priors(family, law, c, rng):
    """One random parameter draw for the phi-reduced laws."""
    sg = int(rng.choice([1, -1]))
    if law is GoverningLaw.QUASI_MINIMAL:
        if family is MeridianFamily.FIRST_TIMELIKE:
            params = ProfileParams(
                a=rng.uniform(1.15, 1.6), c=rng.uniform(0.3, 1.5), branch=BranchSigns(g=sg)
            )
        elif family is MeridianFamily.FIRST_SPACELIKE:
            params = ProfileParams(
                a=rng.uniform(0.5, 1.4), c=rng.uniform(0.2, 1.2), branch=BranchSigns(g=sg)
            )
        else:
            params = ProfileParams(
                a=rng.uniform(0.35, 0.75),
                c=rng.uniform(1.2, 2.8),
                branch=BranchSigns(g=sg, rhs=-1),
            )
        return params
    # When 4 * eps_family * c < 0 the CMC first integral only exists for
    # t <= a / (2 sqrt|c|), so the linear coefficient must scale with
    # sqrt|c| to leave a usable window.
    squeezed = family.cmc_inner_sign * c < 0.0
    a = rng.uniform(2.0, 3.0) * np.sqrt(abs(c)) if squeezed else rng.uniform(1.0, 2.2)
    if family is MeridianFamily.SECOND:
        rhs = int(rng.choice([1, -1]))
        return ProfileParams(
            a=a,
            b=rng.uniform(-0.8, 1.2),
            c=c,
            branch=BranchSigns(g=sg, rhs=rhs),
        )
    return ProfileParams(a=a, b=rng.uniform(0.2, 1.4), c=c, branch=BranchSigns(g=sg))


def _sample_reduced(theorem, family, rng, law, c) -> CaseSpec:
    needs_gp_floor = family is not MeridianFamily.FIRST_TIMELIKE
    for _ in range(800):
        params = _reduced_priors(family, law, c, rng)
        try:
            phi = phi_closed_form(law, family, params, window=(1e-3, 12.0))
        except (ValueError, DomainError):
            continue
        if phi.degenerate or not phi.domain:
            continue
        lo, hi = max(phi.domain, key=lambda iv: iv[1] - iv[0])
        width = hi - lo
        if width < 0.3:
            continue
        f0 = lo + 0.4 * width
        reach = hi - 0.05 * width
        probe = np.linspace(f0, reach, 64)
        vals = np.abs(np.asarray(phi(probe), dtype=float))
        vmax = float(np.nanmax(vals)) if np.any(np.isfinite(vals)) else np.nan
        if not np.isfinite(vmax) or vmax > 12.0:
            continue
        u_len = min(0.5, 0.6 * (reach - f0) / max(vmax, 0.2))
        if u_len < 0.1:
            continue
        try:
            profile = integrate_profile(phi, f0, (0.0, u_len), 1e-3)
        except DomainError:
            continue
        if profile.truncated or np.min(profile.f) < 0.3:
            continue
        if needs_gp_floor and float(np.min(np.abs(profile.gp))) < 0.1:
            continue
        # Keep the curvature coefficients moderate: the FD oracle's noise
        # enters <H,H> as 2|H| * deltaH, so large |h| eats the tolerance.
        h1r, h2r = family.h_coefficients(
            params.a, profile.f, profile.fp, profile.fpp, profile.gp
        )
        if max(float(np.max(np.abs(h1r))), float(np.max(np.abs(h2r)))) > 3.0:
            continue
        return CaseSpec(theorem, params, f0=f0, u_span=(0.0, u_len))
    raise RuntimeError(
        f"could not draw an admissible {theorem.value} case in 800 attempts"
    )
