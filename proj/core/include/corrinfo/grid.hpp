#pragma once

#include "corrinfo/types.hpp"

namespace corrinfo {

/// Shell (3D) / ring (2D) geometry of a Fourier grid. Cell -> shell index
/// assignment rounds the isotropic frequency radius to the nearest shell;
/// shell_width = 1/(min_extent*step), so shells are one index unit wide.
/// Cells strictly beyond the Nyquist sphere of the shortest axis land in an
/// overflow region (shell_of == kOverflow) and never in a metric shell; the
/// DC cell alone occupies shell 0.
struct RadialBins {
    static constexpr std::int32_t kOverflow = -1;

    GridDims dims;
    double step = 1.0;
    double shell_width = 0.0;  // frequency units
    int n_shells = 0;          // floor(min_extent/2) + 1
    std::vector<std::int32_t> shell_of;  // per cell
    std::vector<index_t> counts;         // per shell
    index_t overflow_count = 0;

    double nyquist() const { return 0.5 / step; }
    double freq(int shell) const { return shell * shell_width; }
};

/// Unnormalized forward DFT of a real volume; rejects non-finite input.
Spectrum forward_transform(const Volume& v);

/// Inverse DFT with 1/N normalization, so inverse(forward(v)) == v up to
/// round-off. Verifies Hermitian symmetry to 1e-6 relative and reports the
/// worst-offending cell on failure; output is real.
Volume inverse_transform(const Spectrum& s);

/// Maximum Hermitian-symmetry violation |v(k) - conj(v(-k))| over the grid,
/// relative to the largest magnitude; writes the offending cell if asked.
double hermitian_violation(const Spectrum& s, std::array<index_t, 3>* worst_cell = nullptr);

RadialBins radial_bins(const GridDims& dims, double step);

/// Per-shell sum of |F|^2 (overflow cells excluded; see overflow_power).
Curve shell_power(const Spectrum& s, const RadialBins& bins);

/// Total |F|^2 in the overflow region beyond the inscribed Nyquist sphere.
double overflow_power(const Spectrum& s, const RadialBins& bins);

/// Signed frequency index along one axis for a storage index.
inline index_t signed_freq_index(index_t idx, index_t extent) {
    return idx < (extent + 1) / 2 ? idx : idx - extent;
}

}  // namespace corrinfo
