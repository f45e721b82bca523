#include "corrinfo/locality.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace corrinfo {

namespace {

void check_window(const WindowSpec& w) {
    if (w.size < 8) throw std::invalid_argument("locality: window size must be >= 8");
    if (w.stride < 1) throw std::invalid_argument("locality: stride must be >= 1");
    if (!(w.mask_sigma_frac > 0.0 && w.mask_sigma_frac <= 1.0))
        throw std::invalid_argument("locality: mask_sigma_frac must be in (0,1]");
}

// Gaussian window on a size^rank cube, peak 1 at the centre.
std::vector<double> window_mask(const WindowSpec& w, int rank) {
    const index_t n = w.size;
    const double c = 0.5 * static_cast<double>(n - 1);
    const double sigma = w.mask_sigma_frac * static_cast<double>(n) / 2.0;
    const index_t ny = rank > 1 ? n : 1;
    const index_t nz = rank > 2 ? n : 1;
    std::vector<double> m(n * ny * nz);
    index_t i = 0;
    for (index_t z = 0; z < nz; ++z) {
        const double dz = rank > 2 ? z - c : 0.0;
        for (index_t y = 0; y < ny; ++y) {
            const double dy = rank > 1 ? y - c : 0.0;
            for (index_t x = 0; x < n; ++x, ++i) {
                const double dx = x - c;
                const double r2 = dx * dx + dy * dy + dz * dz;
                m[i] = std::exp(-0.5 * r2 / (sigma * sigma));
            }
        }
    }
    return m;
}

GridDims window_dims(const WindowSpec& w, int rank) {
    GridDims d;
    d.rank = rank;
    for (int a = 0; a < rank; ++a) d.extent[a] = w.size;
    return d;
}

Volume extract_window(const Volume& v, const std::array<index_t, 3>& center,
                      const WindowSpec& w, const std::vector<double>& mask) {
    const index_t h = w.size / 2;
    const auto& e = v.dims.extent;
    for (int a = 0; a < v.dims.rank; ++a) {
        if (center[a] - h < 0 || center[a] - h + w.size > e[a])
            throw std::invalid_argument("locality: window exceeds volume bounds");
    }
    Volume out;
    out.dims = window_dims(w, v.dims.rank);
    out.step = v.step;
    out.data.resize(out.dims.count());
    const index_t ny = out.dims.extent[1];
    const index_t nz = out.dims.extent[2];
    index_t i = 0;
    for (index_t z = 0; z < nz; ++z)
        for (index_t y = 0; y < ny; ++y)
            for (index_t x = 0; x < w.size; ++x, ++i) {
                const index_t sx = center[0] - h + x;
                const index_t sy = v.dims.rank > 1 ? center[1] - h + y : 0;
                const index_t sz = v.dims.rank > 2 ? center[2] - h + z : 0;
                out.data[i] = v.data[v.dims.linear_index(sx, sy, sz)] * mask[i];
            }
    return out;
}

}  // namespace

double window_kappa(const WindowSpec& w, int rank) {
    const auto mask = window_mask(w, rank);
    double sum = 0.0;
    for (double m : mask) sum += m;
    return sum / static_cast<double>(mask.size());
}

Curve local_fsc(const Volume& a, const Volume& b, const std::array<index_t, 3>& center,
                const WindowSpec& w) {
    check_window(w);
    if (a.dims != b.dims) throw std::invalid_argument("locality: volumes on different grids");
    const auto mask = window_mask(w, a.dims.rank);
    const Volume wa = extract_window(a, center, w, mask);
    const Volume wb = extract_window(b, center, w, mask);
    const RadialBins bins = radial_bins(wa.dims, wa.step);
    return fsc(forward_transform(wa), forward_transform(wb), bins);
}

double window_band_weight(const WindowSpec& w, int rank, double step, const InfoParams& p,
                          double f_lo, double f_hi) {
    const RadialBins bins = radial_bins(window_dims(w, rank), step);
    const Curve skeleton = make_curve(CurveKind::fsi, bins.n_shells, bins.shell_width,
                                      bins.nyquist());
    return integrated_weight(skeleton, p, f_lo, f_hi, &bins);
}

double band_correlation(double lid_bits, double band_weight) {
    if (band_weight <= 0.0) return 0.0;
    const double z = lid_bits / band_weight;           // bits per unit weight
    const double e = std::exp2(z);                     // (1+c)/(1-c)
    return (e - 1.0) / (e + 1.0);
}

namespace {

InfoMap windowed_info_map(const Volume& a, const Volume& b, const WindowSpec& w,
                          const InfoParams& p_in, double f_lo, double f_hi) {
    check_window(w);
    if (a.dims != b.dims) throw std::invalid_argument("locality: volumes on different grids");
    const int rank = a.dims.rank;

    InfoParams p = p_in;
    p.dimensionality = rank;
    p.kappa = window_kappa(w, rank);  // the window mask fixes the local filling degree

    const auto mask = window_mask(w, rank);
    const RadialBins bins = radial_bins(window_dims(w, rank), a.step);

    InfoMap map;
    map.dims = a.dims;
    map.step = a.step;
    map.values.assign(a.dims.count(), std::numeric_limits<double>::quiet_NaN());
    map.flags.assign(a.dims.count(), 0);

    const index_t h = w.size / 2;
    const auto& e = a.dims.extent;
    std::array<std::vector<index_t>, 3> centers;
    for (int ax = 0; ax < 3; ++ax) {
        if (ax >= rank) {
            centers[ax] = {0};
            continue;
        }
        for (index_t c = h; c - h + w.size <= e[ax]; c += w.stride) centers[ax].push_back(c);
        if (centers[ax].empty())
            throw std::invalid_argument("locality: window does not fit inside the volume");
    }

    for (index_t cz : centers[2])
        for (index_t cy : centers[1])
            for (index_t cx : centers[0]) {
                const std::array<index_t, 3> c{cx, cy, cz};
                const Volume wa = extract_window(a, c, w, mask);
                const Volume wb = extract_window(b, c, w, mask);
                const Curve lfsc = fsc(forward_transform(wa), forward_transform(wb), bins);
                const Curve fsi_r = weighted_information(lfsc, p, &bins);
                const double bits = integrated_information(fsi_r, f_lo, f_hi);

                bool all_saturated = true;
                for (int i = 0; i < fsi_r.n_shells(); ++i) {
                    const double f = fsi_r.freq[i];
                    if (f < f_lo * fsi_r.nyquist || f > f_hi * fsi_r.nyquist) continue;
                    if (!(fsi_r.flags[i] & curve_flag::saturated)) all_saturated = false;
                }

                // Write the window's stride cell; cells tile disjointly.
                const index_t s2 = w.stride / 2;
                index_t lo[3] = {0, 0, 0}, hi[3] = {1, 1, 1};
                for (int ax = 0; ax < rank; ++ax) {
                    lo[ax] = std::max<index_t>(0, c[ax] - s2);
                    hi[ax] = std::min<index_t>(e[ax], c[ax] - s2 + w.stride);
                }
                std::uint8_t fl = InfoMap::flag_evaluated;
                if (all_saturated) fl |= InfoMap::flag_saturated;
                for (index_t z = lo[2]; z < hi[2]; ++z)
                    for (index_t y = lo[1]; y < hi[1]; ++y)
                        for (index_t x = lo[0]; x < hi[0]; ++x) {
                            const index_t i = a.dims.linear_index(x, y, z);
                            map.values[i] = bits;
                            map.flags[i] = fl;
                        }
            }
    return map;
}

}  // namespace

InfoMap lid_map(const Volume& a, const Volume& b, const WindowSpec& w, const InfoParams& p,
                double f_lo, double f_hi) {
    return windowed_info_map(a, b, w, p, f_lo, f_hi);
}

InfoMap lcid_map(const Volume& m1, const Volume& m2, const WindowSpec& w,
                 const InfoParams& p, double f_lo, double f_hi) {
    if (std::abs(m1.step - m2.step) > 1e-3 * m1.step)
        throw std::invalid_argument(
            "lcid: sampling steps differ by more than 0.1%; resample to a common grid first");
    return windowed_info_map(m1, m2, w, p, f_lo, f_hi);
}

}  // namespace corrinfo
