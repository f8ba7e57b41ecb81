"""
Anatomy of the three adjustment factors
=======================================

Tables of f (dimensionality), g (signal-to-noise) and h (class imbalance)
over their operating ranges, so you can see each factor's shape without
reading the formulas.
"""

from normetric import (
    average_class_imbalance_ratio,
    class_imbalance_ratio,
    dimensionality_factor,
    imbalance_adjustment_binary,
    imbalance_adjustment_multiclass,
    normalize_snr,
    snr_adjustment,
)

# f rewards training below 20 rows per feature and is exactly 1 above it.
d = 13
print("f for d = %d features (neutral at n = %d)" % (d, 20 * d))
for n in (40, 80, 130, 200, 260, 400, 1000):
    print("  n = %4d   f = %.6f" % (n, dimensionality_factor(d, n)))
print()

# g is a piecewise-linear read of the SNR in decibels, saturating at 1.5.
print("g as the signal-to-noise ratio climbs")
for snr_db in (-5.0, 0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 32.5, 40.0, 60.0):
    g = snr_adjustment(normalize_snr(snr_db))
    print("  %6.1f dB   g = %.5f" % (snr_db, g))
print()

# h grows with the log of the imbalance: a 1000:1 skew quarters the score.
print("h for two classes")
for sizes in ([50, 50], [75, 25], [90, 10], [99, 1], [1000, 1]):
    ci = class_imbalance_ratio(sizes)
    print("  %4d:%-4d  CI = %7.1f   h = %.4f"
          % (sizes[0], sizes[1], ci, imbalance_adjustment_binary(ci)))
print()

# With more classes the average-imbalance ratio plays the same role.
print("h for several classes (relative to the largest)")
for sizes in ([30, 30, 30], [60, 30, 10], [90, 9, 1]):
    acir = average_class_imbalance_ratio(sizes)
    print("  sizes %-12s ACIR = %.4f   h = %.4f"
          % (sizes, acir, imbalance_adjustment_multiclass(acir)))
