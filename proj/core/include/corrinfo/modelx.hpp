#pragma once

#include <string>

#include "corrinfo/grid.hpp"
#include "corrinfo/types.hpp"

namespace corrinfo {

/// Per-shell decomposition of the correlation between A = S + N1 and
/// B = S + N2 into its four bilinear terms. The term curves are normalized
/// only by the shell voxel count, so per shell
///   ss + s_n2 + n1_s + n1n2 == Re numerator of fsc_ab / N(r).
struct DecompositionCurves {
    Curve fsc_ab;  // Eq-style normalized FSC between A and B
    Curve ss;      // S . S*   (signal power)
    Curve s_n2;    // S . N2*  (signal-noise cross term)
    Curve n1_s;    // N1 . S*  (noise-signal cross term)
    Curve n1n2;    // N1 . N2* (noise-noise term)
    Curve signal_power;  // mean |F_S|^2 per cell, == ss
    Curve noise_power;   // mean of the two noise powers per cell
};

enum class DominanceVerdict { trivial, cross_terms_dominant, noise_noise_comparable };

std::string to_string(DominanceVerdict v);

/// Where the signal-noise cross terms stand against the noise-noise term.
struct DominanceReport {
    std::vector<double> ratio;         // |s_n2 + n1_s| / (|n1n2| + eps) per shell
    std::vector<std::uint8_t> in_band; // 1 where signal power >= threshold * noise power
    double mean_cross = 0.0;           // mean |s_n2 + n1_s| over the band
    double mean_noise_noise = 0.0;     // mean |n1n2| over the band
    double band_threshold = 0.5;
    DominanceVerdict verdict = DominanceVerdict::trivial;
};

/// Band-limited, zero-mean, apodized test object: seeded Gaussian blobs at
/// random interior positions under a 2/3-radius soft mask. Deterministic per
/// seed. blob_count == 0 yields the all-zero volume.
Volume generate_phantom(const GridDims& dims, std::uint64_t seed, int blob_count = 8,
                        double blob_sigma_min = 2.0, double blob_sigma_max = 4.0,
                        double step = 1.0);

struct NoisePair {
    Volume a;   // S + N1
    Volume b;   // S + N2
    Volume n1;
    Volume n2;
};

/// Two independent zero-mean Gaussian noise fields (independent streams
/// split from one seed) added to the signal; all components returned so each
/// cross term stays computable.
NoisePair add_noise_pair(const Volume& signal, double sigma, std::uint64_t seed);

DecompositionCurves decompose(const Volume& signal, const Volume& n1, const Volume& n2,
                              const RadialBins& bins);

/// band_threshold: minimum signal/noise power ratio for a shell to count as
/// signal-comparable when comparing term magnitudes.
DominanceReport dominance_report(const DecompositionCurves& d, double band_threshold = 0.5);

}  // namespace corrinfo
