#pragma once

#include <string>
#include <vector>

#include "corrinfo/grid.hpp"
#include "corrinfo/types.hpp"

namespace corrinfo {

/// Outcome of one sampling/apodization rule check. `measured` is the
/// offending fraction in [0,1]; `id` names the rule in the A-H inventory.
struct ComplianceReport {
    std::string id;     // "A".."H"
    std::string check;  // machine name, e.g. "band_limit"
    bool pass = false;
    bool applicable = true;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string finding;
};

std::string to_json(const ComplianceReport& r);
std::string to_json(const std::vector<ComplianceReport>& reports,
                    const std::vector<std::string>& warnings);

/// (A) Band limit: fraction of spectral power on shells beyond
/// radius_frac * Nyquist (overflow region included); pass iff <= tol.
ComplianceReport check_band_limit(const Spectrum& s, const RadialBins& bins,
                                  double radius_frac = 2.0 / 3.0, double tol = 1e-3);

/// (G) Corner emptiness: fraction of spectral power outside the inscribed
/// Nyquist disk/sphere. Isotropic data must leave the Cartesian corners
/// (~22% of the area in 2D, ~48% of the volume in 3D) empty. 1D input is
/// rejected (no corners).
ComplianceReport check_corner_emptiness(const Spectrum& s, const RadialBins& bins,
                                        double tol = 1e-3);

/// (H) Real-space apodization: fraction of the variance (about the mean)
/// outside the inscribed sphere of radius (1-margin_frac)*(min_extent/2).
/// Constant volumes yield an inapplicable report.
ComplianceReport check_real_space_apodization(const Volume& v, double margin_frac = 0.1,
                                              double tol = 1e-3);

struct FillingDegree {
    double kappa = 0.0;     // fraction of voxels carrying signal
    double d_over_l = 0.0;  // kappa^(1/rank)
};

/// Fraction of voxels whose |density - mean| exceeds level * max|density - mean|.
FillingDegree filling_degree(const Volume& v, double level = 0.5);

/// Minimum claimable resolution given the sampling step: 3*step (the 2/3
/// Nyquist rule applied to the two-pixel Nyquist distance).
ComplianceReport check_sampling_claim(double step, double claimed_resolution);

/// Informational warnings for signs of non-linear post-processing: maps with
/// the negative densities removed, or spectra with a hard-zeroed annulus.
std::vector<std::string> detect_processing_artifacts(const Volume& v, const Spectrum& s,
                                                     const RadialBins& bins);

}  // namespace corrinfo
