#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace corrinfo {

using index_t = std::int64_t;

/// Grid geometry shared by Volume/Spectrum/RadialBins. Axis 0 is the
/// fastest-varying one in memory; unused trailing axes have extent 1.
struct GridDims {
    int rank = 0;
    std::array<index_t, 3> extent{1, 1, 1};

    index_t count() const {
        return extent[0] * extent[1] * extent[2];
    }
    index_t min_extent() const {
        index_t m = extent[0];
        for (int a = 1; a < rank; ++a) m = std::min(m, extent[a]);
        return m;
    }
    index_t linear_index(index_t x, index_t y = 0, index_t z = 0) const {
        return x + extent[0] * (y + extent[1] * z);
    }
    bool operator==(const GridDims&) const = default;
};

inline GridDims make_dims(std::initializer_list<index_t> extents) {
    GridDims d;
    d.rank = static_cast<int>(extents.size());
    int a = 0;
    for (index_t e : extents) d.extent[a++] = e;
    return d;
}

/// Real-valued sampled measurement (1D trace, 2D image or 3D map).
/// `step` is the physical size of one sample (Angstrom/px or s/sample).
struct Volume {
    GridDims dims;
    double step = 1.0;
    std::vector<double> data;
};

/// Complex DFT of a Volume, full grid, DC at index (0,0,0). For real
/// input the grid is Hermitian: value(k) == conj(value(-k mod extent)).
struct Spectrum {
    GridDims dims;
    double step = 1.0;  // real-space step of the source volume
    std::vector<std::complex<double>> values;

    /// Frequency increment along one axis, 1/(extent*step).
    double freq_step(int axis) const {
        return 1.0 / (static_cast<double>(dims.extent[axis]) * step);
    }
};

enum class CurveKind { fsc, fsi, threshold, power, tie, other };

std::string to_string(CurveKind k);
CurveKind curve_kind_from_string(const std::string& s);

/// Per-shell condition flags carried alongside curve values.
namespace curve_flag {
inline constexpr std::uint8_t zero_denominator = 1;  // empty/zero-power shell
inline constexpr std::uint8_t saturated = 2;         // correlation clamped at +-(1-eps)
inline constexpr std::uint8_t undefined = 4;         // quotient suppressed (value is NaN)
}  // namespace curve_flag

/// One real value per Fourier shell, with its frequency axis.
struct Curve {
    CurveKind kind = CurveKind::other;
    std::vector<double> values;
    std::vector<double> freq;         // absolute units (1/Angstrom or Hz)
    std::vector<std::uint8_t> flags;  // same length as values
    double nyquist = 0.0;

    int n_shells() const { return static_cast<int>(values.size()); }
};

/// Curve skeleton on the shell axis `n_shells` wide with spacing `shell_width`.
Curve make_curve(CurveKind kind, int n_shells, double shell_width, double nyquist);

/// Element-wise curve sum; axes must match.
Curve add_curves(const Curve& a, const Curve& b);

}  // namespace corrinfo
