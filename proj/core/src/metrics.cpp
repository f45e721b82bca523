#include "corrinfo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corrinfo {

Curve fsc(const Spectrum& a, const Spectrum& b, const RadialBins& bins) {
    if (a.dims != b.dims || a.dims != bins.dims)
        throw std::invalid_argument("fsc: dimension mismatch");
    if (bins.n_shells <= 0) throw std::invalid_argument("fsc: empty shell set");

    std::vector<double> num(bins.n_shells, 0.0);
    std::vector<double> pow_a(bins.n_shells, 0.0);
    std::vector<double> pow_b(bins.n_shells, 0.0);
    for (size_t i = 0; i < a.values.size(); ++i) {
        const std::int32_t shell = bins.shell_of[i];
        if (shell == RadialBins::kOverflow) continue;
        const auto& fa = a.values[i];
        const auto& fb = b.values[i];
        num[shell] += fa.real() * fb.real() + fa.imag() * fb.imag();
        pow_a[shell] += std::norm(fa);
        pow_b[shell] += std::norm(fb);
    }

    Curve c = make_curve(CurveKind::fsc, bins.n_shells, bins.shell_width, bins.nyquist());
    for (int i = 0; i < bins.n_shells; ++i) {
        if (pow_a[i] <= 0.0 || pow_b[i] <= 0.0) {
            c.values[i] = 0.0;
            c.flags[i] |= curve_flag::zero_denominator;
            continue;
        }
        c.values[i] = std::clamp(num[i] / std::sqrt(pow_a[i] * pow_b[i]), -1.0, 1.0);
    }
    return c;
}

double half_bit_threshold_value(double n_eff) {
    const double t = 1.0 / std::sqrt(n_eff);
    const double num = 0.2071 + 1.9102 * t;
    // den == 1.2071 + 0.9102*t, written so that num == den exactly at n_eff=1.
    const double den = num + (1.0 - t);
    return num / den;
}

Curve half_bit_threshold(const RadialBins& bins, const ThresholdParams& p) {
    if (p.symmetry_order < 1)
        throw std::invalid_argument("half_bit_threshold: symmetry_order must be >= 1");
    if (!(p.fill_linear > 0.0 && p.fill_linear <= 1.0))
        throw std::invalid_argument("half_bit_threshold: fill_linear must be in (0,1]");

    const double fill_scale = std::pow(p.fill_linear, p.n_eff_exponent);
    Curve c = make_curve(CurveKind::threshold, bins.n_shells, bins.shell_width, bins.nyquist());
    for (int i = 0; i < bins.n_shells; ++i) {
        const double n_eff = std::max(
            1.0, static_cast<double>(bins.counts[i]) * fill_scale / p.symmetry_order);
        c.values[i] = half_bit_threshold_value(n_eff);
    }
    return c;
}

Curve fixed_threshold(const RadialBins& bins, double level) {
    Curve c = make_curve(CurveKind::threshold, bins.n_shells, bins.shell_width, bins.nyquist());
    std::fill(c.values.begin(), c.values.end(), level);
    return c;
}

CrossingReport resolution_crossing(const Curve& fsc, const Curve& thr) {
    if (fsc.values.size() != thr.values.size() || fsc.freq != thr.freq)
        throw std::invalid_argument("resolution_crossing: curves on different shell axes");

    const int n = fsc.n_shells();
    CrossingReport rep;
    // FSC oscillates near the origin and near zero, so a crossing only counts
    // when the curve stays below the threshold for two consecutive shells.
    int k = -1;
    for (int i = 0; i + 1 < n; ++i) {
        if (fsc.values[i] < thr.values[i] && fsc.values[i + 1] < thr.values[i + 1]) {
            k = i;
            break;
        }
    }
    if (k < 0) {
        rep.no_crossing = true;
        rep.frequency = fsc.nyquist;
        rep.resolution = rep.frequency > 0.0 ? 1.0 / rep.frequency : 0.0;
        rep.shell_lo = n - 1;
        rep.shell_hi = n - 1;
        return rep;
    }
    if (k == 0) {
        rep.frequency = fsc.freq[0];
        rep.shell_lo = 0;
        rep.shell_hi = 0;
    } else {
        const double d_prev = fsc.values[k - 1] - thr.values[k - 1];  // >= 0
        const double d_here = fsc.values[k] - thr.values[k];          // < 0
        const double t = d_prev / (d_prev - d_here);
        rep.frequency = fsc.freq[k - 1] + t * (fsc.freq[k] - fsc.freq[k - 1]);
        rep.shell_lo = k - 1;
        rep.shell_hi = k;
    }
    rep.resolution = rep.frequency > 0.0 ? 1.0 / rep.frequency : 0.0;
    return rep;
}

}  // namespace corrinfo
