#include "corrinfo/modelx.hpp"

#include <cmath>
#include <stdexcept>

#include "corrinfo/metrics.hpp"
#include "corrinfo/prep.hpp"
#include "corrinfo/rng.hpp"

namespace corrinfo {

Volume generate_phantom(const GridDims& dims, std::uint64_t seed, int blob_count,
                        double blob_sigma_min, double blob_sigma_max, double step) {
    if (dims.rank < 2)
        throw std::invalid_argument("phantom: needs a 2D or 3D grid");
    for (int a = 0; a < dims.rank; ++a)
        if (dims.rank == 3 && dims.extent[a] < 32)
            throw std::invalid_argument("phantom: 3D grids need >= 32 voxels per axis");
    if (blob_count < 0) throw std::invalid_argument("phantom: blob_count must be >= 0");
    if (!(blob_sigma_min > 0.0 && blob_sigma_max >= blob_sigma_min))
        throw std::invalid_argument("phantom: bad blob sigma range");

    Volume v;
    v.dims = dims;
    v.step = step;
    v.data.assign(dims.count(), 0.0);
    if (blob_count == 0) return v;

    const auto& e = dims.extent;
    const double min_e = static_cast<double>(dims.min_extent());
    const double inner = 2.0 / 3.0 * min_e / 2.0;  // apodization flat radius

    Rng rng(seed, /*stream=*/0);
    struct Blob {
        double cx, cy, cz, sigma, amp;
    };
    std::vector<Blob> blobs(blob_count);
    for (auto& bl : blobs) {
        bl.sigma = rng.uniform(blob_sigma_min, blob_sigma_max);
        // Keep the blob mass comfortably inside the mask's flat zone.
        const double max_r = std::max(1.0, inner - 3.0 * bl.sigma);
        for (;;) {
            const double x = rng.uniform(-max_r, max_r);
            const double y = dims.rank > 1 ? rng.uniform(-max_r, max_r) : 0.0;
            const double z = dims.rank > 2 ? rng.uniform(-max_r, max_r) : 0.0;
            if (x * x + y * y + z * z <= max_r * max_r) {
                bl.cx = 0.5 * (e[0] - 1) + x;
                bl.cy = 0.5 * (e[1] - 1) + y;
                bl.cz = 0.5 * (e[2] - 1) + z;
                break;
            }
        }
        bl.amp = rng.uniform() < 0.5 ? 1.0 : -1.0;  // phase-contrast-like signed blobs
        bl.amp *= rng.uniform(0.5, 1.5);
    }

    index_t i = 0;
    for (index_t z = 0; z < e[2]; ++z)
        for (index_t y = 0; y < e[1]; ++y)
            for (index_t x = 0; x < e[0]; ++x, ++i) {
                double acc = 0.0;
                for (const auto& bl : blobs) {
                    const double dx = x - bl.cx;
                    const double dy = dims.rank > 1 ? y - bl.cy : 0.0;
                    const double dz = dims.rank > 2 ? z - bl.cz : 0.0;
                    const double r2 = dx * dx + dy * dy + dz * dz;
                    const double s2 = bl.sigma * bl.sigma;
                    if (r2 < 25.0 * s2) acc += bl.amp * std::exp(-0.5 * r2 / s2);
                }
                v.data[i] = acc;
            }

    // Zero the mean without a constant offset: subtract the mask-weighted
    // mean, then window, so the margin stays apodized and sum(v) == 0.
    const double radius_frac = 2.0 / 3.0;
    const double softness_frac = 0.08;
    Volume ones = v;
    ones.data.assign(v.data.size(), 1.0);
    const Volume mask = soft_mask(ones, radius_frac, softness_frac);
    double vw = 0.0, w = 0.0;
    for (size_t j = 0; j < v.data.size(); ++j) {
        vw += v.data[j] * mask.data[j];
        w += mask.data[j];
    }
    const double offset = vw / w;
    for (size_t j = 0; j < v.data.size(); ++j)
        v.data[j] = (v.data[j] - offset) * mask.data[j];
    return v;
}

NoisePair add_noise_pair(const Volume& signal, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) throw std::invalid_argument("noise: sigma must be >= 0");
    NoisePair out;
    out.n1 = signal;
    out.n2 = signal;
    Rng rng1(seed, /*stream=*/1);
    Rng rng2(seed, /*stream=*/2);
    for (size_t i = 0; i < signal.data.size(); ++i) {
        out.n1.data[i] = sigma * rng1.gaussian();
        out.n2.data[i] = sigma * rng2.gaussian();
    }
    out.a = signal;
    out.b = signal;
    for (size_t i = 0; i < signal.data.size(); ++i) {
        out.a.data[i] += out.n1.data[i];
        out.b.data[i] += out.n2.data[i];
    }
    return out;
}

namespace {

// Count-normalized per-shell Re(sum F1 * conj(F2)).
Curve shell_cross_term(const Spectrum& f1, const Spectrum& f2, const RadialBins& bins) {
    Curve c = make_curve(CurveKind::other, bins.n_shells, bins.shell_width, bins.nyquist());
    for (size_t i = 0; i < f1.values.size(); ++i) {
        const std::int32_t shell = bins.shell_of[i];
        if (shell == RadialBins::kOverflow) continue;
        c.values[shell] += f1.values[i].real() * f2.values[i].real() +
                           f1.values[i].imag() * f2.values[i].imag();
    }
    for (int s = 0; s < bins.n_shells; ++s)
        c.values[s] /= static_cast<double>(bins.counts[s]);
    return c;
}

}  // namespace

DecompositionCurves decompose(const Volume& signal, const Volume& n1, const Volume& n2,
                              const RadialBins& bins) {
    if (signal.dims != n1.dims || signal.dims != n2.dims || signal.dims != bins.dims)
        throw std::invalid_argument("decompose: grid mismatch");

    const Spectrum fs = forward_transform(signal);
    const Spectrum fn1 = forward_transform(n1);
    const Spectrum fn2 = forward_transform(n2);

    Spectrum fa = fs, fb = fs;
    for (size_t i = 0; i < fs.values.size(); ++i) {
        fa.values[i] += fn1.values[i];
        fb.values[i] += fn2.values[i];
    }

    DecompositionCurves d;
    d.fsc_ab = fsc(fa, fb, bins);
    d.ss = shell_cross_term(fs, fs, bins);
    d.s_n2 = shell_cross_term(fs, fn2, bins);
    d.n1_s = shell_cross_term(fn1, fs, bins);
    d.n1n2 = shell_cross_term(fn1, fn2, bins);
    d.signal_power = d.ss;
    d.noise_power = shell_cross_term(fn1, fn1, bins);
    const Curve p2 = shell_cross_term(fn2, fn2, bins);
    for (int s = 0; s < d.noise_power.n_shells(); ++s)
        d.noise_power.values[s] = 0.5 * (d.noise_power.values[s] + p2.values[s]);
    return d;
}

DominanceReport dominance_report(const DecompositionCurves& d, double band_threshold) {
    const int n = d.ss.n_shells();
    DominanceReport rep;
    rep.band_threshold = band_threshold;
    rep.ratio.resize(n);
    rep.in_band.assign(n, 0);

    double max_ss = 0.0;
    bool any_noise = false;
    for (int s = 0; s < n; ++s) {
        max_ss = std::max(max_ss, std::abs(d.ss.values[s]));
        if (d.s_n2.values[s] != 0.0 || d.n1_s.values[s] != 0.0 || d.n1n2.values[s] != 0.0)
            any_noise = true;
    }
    const double eps = 1e-12 * std::max(max_ss, 1e-300);

    int band_count = 0;
    for (int s = 0; s < n; ++s) {
        const double cross = std::abs(d.s_n2.values[s] + d.n1_s.values[s]);
        const double nn = std::abs(d.n1n2.values[s]);
        rep.ratio[s] = cross / (nn + eps);
        if (s > 0 && d.ss.values[s] >= band_threshold * d.noise_power.values[s] &&
            d.noise_power.values[s] > 0.0) {
            rep.in_band[s] = 1;
            rep.mean_cross += cross;
            rep.mean_noise_noise += nn;
            ++band_count;
        }
    }
    if (!any_noise) {
        rep.verdict = DominanceVerdict::trivial;
        return rep;
    }
    if (band_count == 0) {
        rep.verdict = DominanceVerdict::noise_noise_comparable;
        return rep;
    }
    rep.mean_cross /= band_count;
    rep.mean_noise_noise /= band_count;
    rep.verdict = rep.mean_cross > rep.mean_noise_noise
                      ? DominanceVerdict::cross_terms_dominant
                      : DominanceVerdict::noise_noise_comparable;
    return rep;
}

std::string to_string(DominanceVerdict v) {
    switch (v) {
        case DominanceVerdict::trivial: return "trivial";
        case DominanceVerdict::cross_terms_dominant: return "cross-terms dominant";
        case DominanceVerdict::noise_noise_comparable: return "noise-noise comparable";
    }
    return "trivial";
}

}  // namespace corrinfo
