"""
The same harness on regression and multiclass tasks
===================================================

Regression scores 1 - MAPE with no imbalance penalty; multiclass reads its
noise from the full probability rows and its h from the class-size spread.
"""

from normetric import (
    LearnerConfig,
    TaskKind,
    make_blobs,
    make_regression,
    run_curve,
    schedule,
    stability_report,
)

# --- regression: h is pinned at 1, the curve is pure f and g -------------
reg = make_regression(600, d=5, seed=21, noise=0.05)
points = run_curve(reg, schedule(40, 400, 40), TaskKind.REGRESSION, seed=21)

print("regression (base = 1 - MAPE)")
print("size   base      adjusted   g       h")
for p in points:
    b = p.breakdown
    print("%5d  %.4f    %.4f   %.4f  %.1f"
          % (p.train_size, p.base_metric, p.adjusted_metric, b.snr_factor_g,
             b.imbalance_factor_h))
print()

# --- multiclass: three overlapping blobs with skewed sizes ---------------
blobs = make_blobs(900, d=4, n_classes=3, seed=8, spread=5.0, weights=[5, 3, 1])
points = run_curve(
    blobs, schedule(40, 600, 40), TaskKind.MULTICLASS_CLASSIFICATION,
    LearnerConfig(epochs=300), seed=8,
)

print("multiclass (base = accuracy)")
print("size   base      adjusted   snr_db")
for p in points[::3]:
    print("%5d  %.4f    %.4f   %7.2f"
          % (p.train_size, p.base_metric, p.adjusted_metric, p.breakdown.snr_db))
print()

report = stability_report(points, d=4)
print("multiclass mad_from_target: raw %.6f vs adjusted %.6f"
      % (report.initial.mad_from_target, report.adjusted.mad_from_target))
