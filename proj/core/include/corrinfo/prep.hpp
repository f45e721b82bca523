#pragma once

#include "corrinfo/grid.hpp"
#include "corrinfo/types.hpp"

namespace corrinfo {

/// Arithmetic of a Fourier resampling step. Output extents are rounded to
/// even so the Nyquist element stays unambiguous; the physical extent drifts
/// by at most one destination voxel per axis.
struct ResamplePlan {
    double src_step = 0.0;
    double dst_step = 0.0;
    GridDims src_dims;
    GridDims dst_dims;
};

ResamplePlan make_resample_plan(const GridDims& src_dims, double src_step, double dst_step);

/// Resample by zero-padding (upsample) or cropping (downsample) the spectrum
/// about DC; the mean density (DC value) is preserved. dst_step == src_step
/// returns the input bit-for-bit.
Volume fourier_resample(const Volume& v, double dst_step);

/// Isotropic magnification correction: features at distance d from the
/// volume centre move to d*scale. Implemented as band-limited separable
/// cubic resampling so sub-percent factors (e.g. the ~0.3% relative
/// magnification differences between deposited maps) act exactly.
Volume magnification_scale(const Volume& v, double scale);

struct AmplitudeMatchResult {
    Spectrum spectrum;
    std::vector<std::uint8_t> shell_flags;  // curve_flag::zero_denominator where source power was 0
};

/// Scale each shell of `source` by sqrt(target power / source power) so the
/// rotationally averaged amplitude profiles agree; phases are untouched.
/// Zero-power source shells stay zero and are flagged.
AmplitudeMatchResult amplitude_match(const Spectrum& target, const Spectrum& source,
                                     const RadialBins& bins);

/// Radially symmetric apodization about the volume centre: 1 inside
/// radius_frac*(min_extent/2) voxels, Gaussian falloff with
/// sigma = softness_frac*(min_extent/2) outside. Never exactly zero.
Volume soft_mask(const Volume& v, double radius_frac, double softness_frac);

/// The mask profile itself at radius r (voxels from the centre).
double soft_mask_profile(double r, double min_extent, double radius_frac,
                         double softness_frac);

struct AlignResult {
    std::array<double, 3> shift{0, 0, 0};  // voxels, applied to mov
    Volume aligned;
};

/// Translational registration: integer shift from the circular
/// cross-correlation peak, sub-voxel refinement by a parabolic fit, output
/// shifted via Fourier phase ramp. aligned(x) == mov(x - shift).
AlignResult translational_align(const Volume& ref, const Volume& mov);

}  // namespace corrinfo
