#include "corrinfo/info.hpp"

#include <cmath>
#include <stdexcept>

namespace corrinfo {

InfoParams InfoParams::from_fill(int dimensionality, double d_over_l) {
    if (dimensionality != 2 && dimensionality != 3)
        throw std::invalid_argument("info: dimensionality must be 2 or 3");
    if (!(d_over_l > 0.0 && d_over_l <= 1.0))
        throw std::invalid_argument("info: D/L must be in (0,1]");
    InfoParams p;
    p.dimensionality = dimensionality;
    p.kappa = std::pow(d_over_l, dimensionality);
    return p;
}

double fisher_information_value(double c, double k, double clamp_eps, bool* saturated) {
    const double limit = 1.0 - clamp_eps;
    double mag = std::abs(c);
    bool sat = false;
    if (mag > limit) {
        mag = limit;
        sat = true;
    }
    if (saturated) *saturated = sat;
    const double bits = k * std::log2((1.0 + mag) / (1.0 - mag));
    return c < 0.0 ? -bits : bits;
}

Curve fisher_information(const Curve& fsc, double k, double clamp_eps) {
    if (!(clamp_eps > 0.0 && clamp_eps < 1e-3))
        throw std::invalid_argument("info: clamp_eps must be in (0, 1e-3)");
    Curve out = fsc;
    out.kind = CurveKind::fsi;
    for (size_t i = 0; i < out.values.size(); ++i) {
        bool sat = false;
        out.values[i] = fisher_information_value(fsc.values[i], k, clamp_eps, &sat);
        if (sat) out.flags[i] |= curve_flag::saturated;
    }
    return out;
}

double radial_weight(const InfoParams& p, double shell_index) {
    if (p.dimensionality != 2 && p.dimensionality != 3)
        throw std::invalid_argument("info: dimensionality must be 2 or 3");
    if (shell_index < 0.0)
        throw std::invalid_argument("info: shell index must be >= 0");
    return p.dimensionality == 3 ? p.kappa * shell_index * shell_index
                                 : p.kappa * shell_index;
}

namespace {

double weight_at(const InfoParams& p, int shell, const RadialBins* bins) {
    if (shell == 0) return 0.0;  // information drops to zero at the origin
    if (p.k_override) return *p.k_override;
    if (p.use_shell_counts) {
        if (!bins)
            throw std::invalid_argument("info: shell-count weighting needs RadialBins");
        return p.kappa * static_cast<double>(bins->counts[shell]);
    }
    return radial_weight(p, static_cast<double>(shell));
}

}  // namespace

Curve weighted_information(const Curve& fsc, const InfoParams& p, const RadialBins* bins) {
    Curve out = fsc;
    out.kind = CurveKind::fsi;
    for (int i = 0; i < fsc.n_shells(); ++i) {
        bool sat = false;
        out.values[i] =
            fisher_information_value(fsc.values[i], weight_at(p, i, bins), p.clamp_eps, &sat);
        if (sat && i > 0) out.flags[i] |= curve_flag::saturated;
    }
    return out;
}

namespace {

bool in_band(const Curve& c, int shell, double lo_frac, double hi_frac) {
    const double f = c.freq[shell];
    return f >= lo_frac * c.nyquist && f <= hi_frac * c.nyquist;
}

void check_band(double lo, double hi) {
    if (!(lo >= 0.0 && lo < hi && hi <= 1.0))
        throw std::invalid_argument("info: band must satisfy 0 <= lo < hi <= 1");
}

}  // namespace

double integrated_information(const Curve& fsi_r, double f_lo_frac, double f_hi_frac) {
    check_band(f_lo_frac, f_hi_frac);
    double total = 0.0;
    int used = 0;
    for (int i = 0; i < fsi_r.n_shells(); ++i) {
        if (!in_band(fsi_r, i, f_lo_frac, f_hi_frac)) continue;
        total += fsi_r.values[i];
        ++used;
    }
    if (used == 0) throw std::runtime_error("info: empty shell range for integration");
    return total;
}

double integrated_weight(const Curve& fsi_r, const InfoParams& p, double f_lo_frac,
                         double f_hi_frac, const RadialBins* bins) {
    check_band(f_lo_frac, f_hi_frac);
    double total = 0.0;
    for (int i = 0; i < fsi_r.n_shells(); ++i)
        if (in_band(fsi_r, i, f_lo_frac, f_hi_frac)) total += weight_at(p, i, bins);
    return total;
}

}  // namespace corrinfo
