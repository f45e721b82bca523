#include "corrinfo/prep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corrinfo {

namespace {

void enforce_hermitian(Spectrum& s) {
    const auto& e = s.dims.extent;
    for (index_t z = 0; z < e[2]; ++z) {
        const index_t zc = z == 0 ? 0 : e[2] - z;
        for (index_t y = 0; y < e[1]; ++y) {
            const index_t yc = y == 0 ? 0 : e[1] - y;
            for (index_t x = 0; x < e[0]; ++x) {
                const index_t xc = x == 0 ? 0 : e[0] - x;
                const index_t i = s.dims.linear_index(x, y, z);
                const index_t j = s.dims.linear_index(xc, yc, zc);
                if (j < i) continue;
                const auto avg = 0.5 * (s.values[i] + std::conj(s.values[j]));
                s.values[i] = avg;
                s.values[j] = std::conj(avg);
            }
        }
    }
}

}  // namespace

ResamplePlan make_resample_plan(const GridDims& src_dims, double src_step, double dst_step) {
    if (src_step <= 0.0 || dst_step <= 0.0)
        throw std::invalid_argument("resample: steps must be > 0");
    ResamplePlan plan;
    plan.src_step = src_step;
    plan.dst_step = dst_step;
    plan.src_dims = src_dims;
    plan.dst_dims = src_dims;
    for (int a = 0; a < src_dims.rank; ++a) {
        const double want = static_cast<double>(src_dims.extent[a]) * src_step / dst_step;
        plan.dst_dims.extent[a] = std::max<index_t>(2, 2 * std::llround(want / 2.0));
    }
    return plan;
}

Volume fourier_resample(const Volume& v, double dst_step) {
    const ResamplePlan plan = make_resample_plan(v.dims, v.step, dst_step);
    if (dst_step == v.step) return v;  // identity plan, bit-for-bit
    for (int a = 0; a < plan.dst_dims.rank; ++a)
        if (plan.dst_dims.extent[a] < 8)
            throw std::invalid_argument("resample: destination grid below 8 voxels/axis");

    const Spectrum src = forward_transform(v);
    Spectrum dst;
    dst.dims = plan.dst_dims;
    dst.step = dst_step;
    dst.values.assign(dst.dims.count(), {0.0, 0.0});

    const auto& se = src.dims.extent;
    const auto& de = dst.dims.extent;
    // Copy every destination frequency that the source grid represents; the
    // Nyquist rows are then repaired by symmetrization (padding splits them,
    // cropping keeps the real part).
    for (index_t z = 0; z < de[2]; ++z) {
        const index_t kz = signed_freq_index(z, de[2]);
        if (kz < -se[2] / 2 || kz > (se[2] - 1) / 2) continue;
        const index_t sz = kz >= 0 ? kz : kz + se[2];
        for (index_t y = 0; y < de[1]; ++y) {
            const index_t ky = signed_freq_index(y, de[1]);
            if (ky < -se[1] / 2 || ky > (se[1] - 1) / 2) continue;
            const index_t sy = ky >= 0 ? ky : ky + se[1];
            for (index_t x = 0; x < de[0]; ++x) {
                const index_t kx = signed_freq_index(x, de[0]);
                if (kx < -se[0] / 2 || kx > (se[0] - 1) / 2) continue;
                const index_t sx = kx >= 0 ? kx : kx + se[0];
                dst.values[dst.dims.linear_index(x, y, z)] =
                    src.values[src.dims.linear_index(sx, sy, sz)];
            }
        }
    }
    enforce_hermitian(dst);

    // Unnormalized forward + 1/N inverse: rescale so the mean density is kept.
    const double gain =
        static_cast<double>(dst.dims.count()) / static_cast<double>(src.dims.count());
    for (auto& z : dst.values) z *= gain;
    return inverse_transform(dst);
}

namespace {

// Catmull-Rom weights for fractional offset t in [0,1).
inline void cubic_weights(double t, double w[4]) {
    const double t2 = t * t;
    const double t3 = t2 * t;
    w[0] = 0.5 * (-t3 + 2.0 * t2 - t);
    w[1] = 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0);
    w[2] = 0.5 * (-3.0 * t3 + 4.0 * t2 + t);
    w[3] = 0.5 * (t3 - t2);
}

// Resample one axis of `v` at coordinates centre + (i - centre)/scale.
Volume resample_axis(const Volume& v, int axis, double scale) {
    const auto& e = v.dims.extent;
    Volume out = v;
    const index_t n = e[axis];
    const double centre = 0.5 * static_cast<double>(n - 1);

    index_t stride = 1;
    for (int a = 0; a < axis; ++a) stride *= e[a];
    const index_t n_lines = v.dims.count() / n;

    std::vector<double> line(n);
    for (index_t l = 0; l < n_lines; ++l) {
        // Base offset of this line: decompose l over the non-axis dimensions.
        index_t rem = l;
        index_t base = 0;
        index_t mul = 1;
        for (int a = 0; a < 3; ++a) {
            if (a == axis) {
                mul *= e[a];
                continue;
            }
            const index_t coord = rem % e[a];
            rem /= e[a];
            base += coord * mul;
            mul *= e[a];
        }
        for (index_t i = 0; i < n; ++i) line[i] = v.data[base + i * stride];
        for (index_t i = 0; i < n; ++i) {
            const double x = centre + (static_cast<double>(i) - centre) / scale;
            const double fl = std::floor(x);
            const auto i1 = static_cast<index_t>(fl);
            double w[4];
            cubic_weights(x - fl, w);
            double acc = 0.0;
            for (int k = -1; k <= 2; ++k) {
                const index_t j = i1 + k;
                if (j < 0 || j >= n) continue;  // outside: volumes are apodized
                acc += w[k + 1] * line[j];
            }
            out.data[base + i * stride] = acc;
        }
    }
    return out;
}

}  // namespace

Volume magnification_scale(const Volume& v, double scale) {
    if (!(scale >= 0.9 && scale <= 1.1))
        throw std::invalid_argument("magnification_scale: scale must be in [0.9, 1.1]");
    if (scale == 1.0) return v;
    Volume out = v;
    for (int a = 0; a < v.dims.rank; ++a) out = resample_axis(out, a, scale);
    return out;
}

AmplitudeMatchResult amplitude_match(const Spectrum& target, const Spectrum& source,
                                     const RadialBins& bins) {
    if (target.dims != source.dims || target.dims != bins.dims)
        throw std::invalid_argument("amplitude_match: dimension mismatch");

    const Curve pt = shell_power(target, bins);
    const Curve ps = shell_power(source, bins);
    std::vector<double> scale(bins.n_shells, 0.0);
    AmplitudeMatchResult res;
    res.shell_flags.assign(bins.n_shells, 0);
    for (int i = 0; i < bins.n_shells; ++i) {
        if (ps.values[i] <= 0.0) {
            res.shell_flags[i] |= curve_flag::zero_denominator;
            continue;
        }
        scale[i] = std::sqrt(pt.values[i] / ps.values[i]);
    }
    const double po_t = overflow_power(target, bins);
    const double po_s = overflow_power(source, bins);
    const double overflow_scale = po_s > 0.0 ? std::sqrt(po_t / po_s) : 0.0;

    res.spectrum = source;
    for (size_t i = 0; i < source.values.size(); ++i) {
        const std::int32_t shell = bins.shell_of[i];
        res.spectrum.values[i] *=
            shell == RadialBins::kOverflow ? overflow_scale : scale[shell];
    }
    return res;
}

double soft_mask_profile(double r, double min_extent, double radius_frac,
                         double softness_frac) {
    const double flat = radius_frac * min_extent / 2.0;
    if (r <= flat) return 1.0;
    const double sigma = softness_frac * min_extent / 2.0;
    const double d = (r - flat) / sigma;
    return std::exp(-0.5 * d * d);
}

Volume soft_mask(const Volume& v, double radius_frac, double softness_frac) {
    if (!(radius_frac > 0.0 && radius_frac <= 1.0))
        throw std::invalid_argument("soft_mask: radius_frac must be in (0,1]");
    if (softness_frac <= 0.0)
        throw std::invalid_argument("soft_mask: softness_frac must be > 0");

    const auto& e = v.dims.extent;
    const auto min_e = static_cast<double>(v.dims.min_extent());
    Volume out = v;
    index_t i = 0;
    for (index_t z = 0; z < e[2]; ++z) {
        const double dz = v.dims.rank > 2 ? z - 0.5 * (e[2] - 1) : 0.0;
        for (index_t y = 0; y < e[1]; ++y) {
            const double dy = v.dims.rank > 1 ? y - 0.5 * (e[1] - 1) : 0.0;
            for (index_t x = 0; x < e[0]; ++x, ++i) {
                const double dx = x - 0.5 * (e[0] - 1);
                const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
                out.data[i] *= soft_mask_profile(r, min_e, radius_frac, softness_frac);
            }
        }
    }
    return out;
}

AlignResult translational_align(const Volume& ref, const Volume& mov) {
    if (ref.dims != mov.dims)
        throw std::invalid_argument("align: volumes on different grids");
    const bool ref_zero = std::all_of(ref.data.begin(), ref.data.end(),
                                      [](double x) { return x == 0.0; });
    const bool mov_zero = std::all_of(mov.data.begin(), mov.data.end(),
                                      [](double x) { return x == 0.0; });
    if (ref_zero || mov_zero)
        throw std::invalid_argument("align: all-zero input volume");

    const Spectrum fr = forward_transform(ref);
    Spectrum fm = forward_transform(mov);

    // corr(t) = sum_x ref(x)*mov(x-t) = IDFT[ F_ref * conj(F_mov) ](t)
    Spectrum prod = fr;
    for (size_t i = 0; i < prod.values.size(); ++i)
        prod.values[i] = fr.values[i] * std::conj(fm.values[i]);
    const Volume corr = inverse_transform(prod);

    const auto& e = ref.dims.extent;
    index_t best = 0;
    for (size_t i = 1; i < corr.data.size(); ++i)
        if (corr.data[i] > corr.data[best]) best = static_cast<index_t>(i);
    index_t peak[3];
    peak[0] = best % e[0];
    peak[1] = (best / e[0]) % e[1];
    peak[2] = best / (e[0] * e[1]);

    std::array<double, 3> shift{0, 0, 0};
    for (int a = 0; a < ref.dims.rank; ++a) {
        index_t lo[3] = {peak[0], peak[1], peak[2]};
        index_t hi[3] = {peak[0], peak[1], peak[2]};
        lo[a] = (peak[a] + e[a] - 1) % e[a];
        hi[a] = (peak[a] + 1) % e[a];
        const double cm = corr.data[ref.dims.linear_index(lo[0], lo[1], lo[2])];
        const double c0 = corr.data[best];
        const double cp = corr.data[ref.dims.linear_index(hi[0], hi[1], hi[2])];
        const double den = cm - 2.0 * c0 + cp;
        double delta = den < 0.0 ? 0.5 * (cm - cp) / den : 0.0;
        delta = std::clamp(delta, -0.5, 0.5);
        shift[a] = static_cast<double>(signed_freq_index(peak[a], e[a])) + delta;
    }

    // aligned(x) = mov(x - shift) via phase ramp exp(-2*pi*i*k.shift/n).
    for (index_t z = 0; z < e[2]; ++z) {
        const double pz = ref.dims.rank > 2
                              ? static_cast<double>(signed_freq_index(z, e[2])) * shift[2] / e[2]
                              : 0.0;
        for (index_t y = 0; y < e[1]; ++y) {
            const double py =
                ref.dims.rank > 1
                    ? static_cast<double>(signed_freq_index(y, e[1])) * shift[1] / e[1]
                    : 0.0;
            for (index_t x = 0; x < e[0]; ++x) {
                const double px = static_cast<double>(signed_freq_index(x, e[0])) * shift[0] / e[0];
                const double phase = -2.0 * M_PI * (px + py + pz);
                fm.values[ref.dims.linear_index(x, y, z)] *=
                    std::complex<double>(std::cos(phase), std::sin(phase));
            }
        }
    }
    enforce_hermitian(fm);

    AlignResult res;
    res.shift = shift;
    res.aligned = inverse_transform(fm);
    return res;
}

}  // namespace corrinfo
