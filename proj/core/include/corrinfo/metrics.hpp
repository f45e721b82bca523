#pragma once

#include "corrinfo/grid.hpp"
#include "corrinfo/types.hpp"

namespace corrinfo {

/// Inputs of the half-bit significance threshold. The effective voxel count
/// per shell is n_eff(r) = max(1, N(r) * (D/L)^n_eff_exponent / S): masking a
/// sub-region reduces independent voxels, point-group symmetry duplicates
/// them.
struct ThresholdParams {
    int symmetry_order = 1;       // S, point-group multiplicity
    double fill_linear = 1.0;     // D/L, object extent over box extent (0,1]
    double n_eff_exponent = 2.0;  // 2 for 3D shells, 1 for 2D rings

    static ThresholdParams defaults_for_rank(int rank) {
        ThresholdParams p;
        p.n_eff_exponent = rank == 2 ? 1.0 : 2.0;
        return p;
    }
};

/// Where an FSC curve drops below its threshold curve.
struct CrossingReport {
    double frequency = 0.0;   // absolute units
    double resolution = 0.0;  // 1/frequency
    int shell_lo = 0;         // last shell at/above threshold
    int shell_hi = 0;         // first shell of the below-threshold run
    bool no_crossing = false;
};

/// Shell-normalized cross-correlation of two Hermitian spectra:
/// Re(sum F1*conj(F2)) / sqrt(sum|F1|^2 * sum|F2|^2) per shell. Shells where
/// either power term vanishes yield 0 with curve_flag::zero_denominator.
Curve fsc(const Spectrum& a, const Spectrum& b, const RadialBins& bins);

/// Half-bit information significance threshold per shell,
/// T = (0.2071 + 1.9102/sqrt(n_eff)) / (1.2071 + 0.9102/sqrt(n_eff));
/// T(n_eff=1) == 1 exactly and T -> 0.17157 as n_eff grows.
Curve half_bit_threshold(const RadialBins& bins, const ThresholdParams& p);

/// Same closed form for a single effective voxel count.
double half_bit_threshold_value(double n_eff);

/// Fixed-value comparison curve (e.g. 0.5 or 0.143). These historical
/// thresholds ignore shell statistics and are provided for overlay only.
Curve fixed_threshold(const RadialBins& bins, double level);

/// First shell where `fsc` falls below `thr` and stays below for at least
/// two consecutive shells; the reported frequency interpolates linearly
/// between the bracketing shells. Never below => Nyquist + no_crossing flag.
CrossingReport resolution_crossing(const Curve& fsc, const Curve& thr);

}  // namespace corrinfo
