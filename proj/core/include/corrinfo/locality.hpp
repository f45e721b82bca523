#pragma once

#include "corrinfo/info.hpp"
#include "corrinfo/metrics.hpp"
#include "corrinfo/types.hpp"

namespace corrinfo {

/// Sliding sub-volume geometry for local metrics. Windows are apodized with
/// a Gaussian of sigma = mask_sigma_frac * size/2 about the window centre.
struct WindowSpec {
    int size = 24;
    int stride = 8;
    double mask_sigma_frac = 0.6;
};

/// Scalar-per-position map of integrated local information, in bits.
/// Voxels no window covered hold NaN with the evaluated flag cleared.
struct InfoMap {
    GridDims dims;
    double step = 1.0;
    std::vector<double> values;
    std::vector<std::uint8_t> flags;

    static constexpr std::uint8_t flag_evaluated = 1;
    static constexpr std::uint8_t flag_saturated = 2;
};

/// FSC between the Gaussian-windowed sub-volumes of a and b centred at
/// `center`, on window-local shells. The window must fit inside both grids.
Curve local_fsc(const Volume& a, const Volume& b, const std::array<index_t, 3>& center,
                const WindowSpec& w);

/// Local information density between two half-dataset reconstructions:
/// per window centre, local FSC -> radially weighted information ->
/// integration over [f_lo, f_hi] of Nyquist. The window's filling degree
/// (mean of the Gaussian mask) replaces p.kappa. Each stride cell has one
/// writer, so the map is deterministic.
InfoMap lid_map(const Volume& a, const Volume& b, const WindowSpec& w, const InfoParams& p,
                double f_lo = 0.2, double f_hi = 0.6);

/// Same machinery across two independently determined maps (already
/// translationally aligned, resampled and amplitude matched); rejects grids
/// whose steps disagree by more than 0.1%.
InfoMap lcid_map(const Volume& m1, const Volume& m2, const WindowSpec& w,
                 const InfoParams& p, double f_lo = 0.2, double f_hi = 0.6);

/// Filling degree of the window mask (mean of the Gaussian profile).
double window_kappa(const WindowSpec& w, int rank);

/// Sum of the radial weights over the integration band for the window's
/// local shell axis: the ceiling the LID could reach per unit Fisher bit.
double window_band_weight(const WindowSpec& w, int rank, double step, const InfoParams& p,
                          double f_lo = 0.2, double f_hi = 0.6);

/// Map an integrated information value back to the correlation scale:
/// the FSC a uniform band would need to produce `lid_bits` with total band
/// weight `band_weight`. Inverse Fisher transform of lid_bits/band_weight.
double band_correlation(double lid_bits, double band_weight);

}  // namespace corrinfo
