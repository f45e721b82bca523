#pragma once

#include <optional>

#include "corrinfo/grid.hpp"
#include "corrinfo/types.hpp"

namespace corrinfo {

/// Scaling inputs of the information metrics. kappa is the real-space
/// filling degree of the object, (D/L)^d when derived from the linear fill.
struct InfoParams {
    int dimensionality = 3;  // 2 (rings) or 3 (shells)
    double kappa = 1.0;
    double clamp_eps = 1e-7;  // correlations clamped to +-(1 - clamp_eps)
    std::optional<double> k_override;  // constant K replacing kappa*r^(d-1)
    bool use_shell_counts = false;     // K_r = kappa*N(r) instead of the power law

    static InfoParams from_fill(int dimensionality, double d_over_l);
};

/// Fisher transform of a correlation curve, in bits:
/// sign(c) * K * log2((1+|c|)/(1-|c|)), |c| clamped to 1-eps (flagged).
/// The sign split makes antisymmetry in c exact.
Curve fisher_information(const Curve& fsc, double k, double clamp_eps = 1e-7);

/// Same transform for a single coefficient.
double fisher_information_value(double c, double k, double clamp_eps = 1e-7,
                                bool* saturated = nullptr);

/// Radial weight K_r = kappa * r_i^(d-1); zero at the origin.
double radial_weight(const InfoParams& p, double shell_index);

/// Radially weighted information curve (FSI_r / FRI_r): per shell
/// K_r(r_i) * log2((1+c)/(1-c)); the DC shell is always 0. `bins` is only
/// required for the exact-count weighting mode.
Curve weighted_information(const Curve& fsc, const InfoParams& p,
                           const RadialBins* bins = nullptr);

/// Integrated global information content: sum of FSI_r over shells whose
/// center frequency lies in [f_lo_frac, f_hi_frac] * Nyquist.
double integrated_information(const Curve& fsi_r, double f_lo_frac = 0.2,
                              double f_hi_frac = 0.6);

/// Sum of the radial weights over the same integration band; the
/// information capacity the band could have carried (used to normalize
/// local information values onto a correlation-comparable scale).
double integrated_weight(const Curve& fsi_r, const InfoParams& p,
                         double f_lo_frac = 0.2, double f_hi_frac = 0.6,
                         const RadialBins* bins = nullptr);

}  // namespace corrinfo
