"""Naive reference implementations used as oracles by the test suite.

Everything here is written as a direct, loop-heavy transcription of the
defining formulas, on purpose: no shared helpers with the library, no
vectorization, no clever branches.  When a library function and its
counterpart here agree on randomized inputs, that is evidence the library
implements the formula and not merely itself.
"""

import math


def ref_dimensionality_factor(d, n):
    x = d / (0.05 * n)
    sig = 1.0 / (1.0 + math.exp(-(x - 1.0)))
    return 1.0 + max(0.0, sig - 0.5)


def ref_class_imbalance(majority, minority):
    return majority / minority


def ref_imbalance_factor_binary(ci):
    return 1.0 + math.log10(ci)


def ref_acir(sizes):
    biggest = max(sizes)
    total = 0.0
    for s in sizes:
        total += s / biggest
    return total / len(sizes)


def ref_imbalance_factor_acir(acir):
    return 1.0 + math.log10(1.0 / acir)


def ref_snr_regression(y_true, y_pred):
    signal = 0.0
    noise = 0.0
    for t, p in zip(y_true, y_pred):
        signal += t * t
        noise += (t - p) * (t - p)
    if noise == 0.0:
        return math.inf
    if signal == 0.0:
        return -math.inf
    return 10.0 * math.log10(signal / noise)


def ref_snr_binary(y_true, y_pred, prob_predicted):
    correct = 0
    for t, p in zip(y_true, y_pred):
        if t == p:
            correct += 1
    noise = 0.0
    for q in prob_predicted:
        noise += (1.0 - q) * (1.0 - q)
    if noise == 0.0:
        return math.inf
    if correct == 0:
        return -math.inf
    return 10.0 * math.log10(correct / noise)


def ref_snr_multiclass(y_true, y_pred, prob_rows):
    classes = 0
    for row in prob_rows:
        classes = max(classes, len(row))
    counts = [[0] * classes for _ in range(classes)]
    for t, p in zip(y_true, y_pred):
        counts[t][p] += 1
    signal = 0.0
    for i in range(classes):
        signal += counts[i][i] ** 2
    noise = 0.0
    for t, row in zip(y_true, prob_rows):
        for j, q in enumerate(row):
            ideal = 1.0 if j == t else 0.0
            noise += (q - ideal) * (q - ideal)
    if noise == 0.0:
        return math.inf
    if signal == 0.0:
        return -math.inf
    return 10.0 * math.log10(signal / noise)


def ref_normalize_snr(x):
    if math.isinf(x) and x > 0:
        return 0.5
    if x < 0.0:
        value = 0.0
    elif x < 10.0:
        value = 0.125 + 0.0125 * x
    elif x < 15.0:
        value = 0.25 + 0.025 * (x - 10.0)
    elif x < 25.0:
        value = 0.375 + 0.0125 * (x - 15.0)
    elif x < 40.0:
        value = 0.5 + 0.125 * (x - 25.0) / 15.0
    else:
        value = 0.5
    return min(0.5, max(0.0, value))


def ref_snr_factor(normalized_snr):
    return 1.0 + normalized_snr


def ref_normalized_metric(base, f, g, h):
    return min(1.0, base * f * g / h)


def ref_accuracy(y_true, y_pred):
    correct = 0
    for t, p in zip(y_true, y_pred):
        if t == p:
            correct += 1
    return correct / len(y_true)


def ref_mape_score(y_true, y_pred):
    total = 0.0
    for t, p in zip(y_true, y_pred):
        total += abs(p - t) / abs(t)
    return max(0.0, 1.0 - total / len(y_true))


def ref_confusion(y_true, y_pred, n_classes):
    counts = [[0] * n_classes for _ in range(n_classes)]
    for t, p in zip(y_true, y_pred):
        counts[t][p] += 1
    return counts


def _entropy(labels):
    n = len(labels)
    freq = {}
    for v in labels:
        freq[v] = freq.get(v, 0) + 1
    h = 0.0
    for c in freq.values():
        p = c / n
        h -= p * math.log(p)
    return h


def ref_nmi(labels_a, labels_b):
    n = len(labels_a)
    ha = _entropy(labels_a)
    hb = _entropy(labels_b)
    if ha == 0.0 and hb == 0.0:
        return 1.0
    if ha == 0.0 or hb == 0.0:
        return 0.0
    joint = {}
    for a, b in zip(labels_a, labels_b):
        joint[(a, b)] = joint.get((a, b), 0) + 1
    ca = {}
    cb = {}
    for a in labels_a:
        ca[a] = ca.get(a, 0) + 1
    for b in labels_b:
        cb[b] = cb.get(b, 0) + 1
    mi = 0.0
    for (a, b), c in joint.items():
        pab = c / n
        mi += pab * math.log(pab / ((ca[a] / n) * (cb[b] / n)))
    return mi / ((ha + hb) / 2.0)


def ref_smooth(values, window):
    half = window // 2
    out = []
    for i in range(len(values)):
        lo = max(0, i - half)
        hi = min(len(values), i + half + 1)
        out.append(sum(values[lo:hi]) / (hi - lo))
    return out
