"""Run the bundled certification suite and read one report closely.

Thirteen canonical cases cover the three families under each curvature law,
the congruence transform, and two controls that are *supposed* to fail.
Each report carries the measured statistics (worst finite-difference mean
curvature, frame-equation residuals, affine rank of the sampled cloud, ...)
plus a status string, so a verdict is never detached from its evidence.

Run:  python3 demos/06_certification_suite.py
"""

import json

from meridian4 import Theorem, run_theorem_suite


def main():
    reports, corollary = run_theorem_suite()
    width = max(len(r.case["theorem"]) for r in reports)
    for r in reports:
        tag = r.case["theorem"]
        if r.status == "pass":
            marker = ""
        elif tag == Theorem.NEGATIVE_CONTROL.value:
            marker = "   <- by design"
        else:
            marker = "   <- unexpected!"
        print(f"{tag:<{width}}  {r.status:<16}{marker}")
    print(f"hyperplane corollary: {'ok' if corollary['ok'] else 'violated'}  "
          f"(minimal ranks {corollary['minimal_ranks']}, quasi ranks {corollary['quasi_ranks']})")

    print()
    print("one report in detail (minimal, first family, timelike directrix):")
    doc = json.loads(reports[0].to_json(include_runtime=False))
    for key in (
        "max_H_fd_inf",
        "max_h1_analytic",
        "max_frame_residual",
        "max_governing_residual",
        "affine_rank",
        "affine_rank_residual",
    ):
        print(f"   {key:<24} {doc['stats'][key]}")
    print(f"   checks: {sum(1 for c in doc['checks'] if c['ok'])}/{len(doc['checks'])} ok")


if __name__ == "__main__":
    main()
