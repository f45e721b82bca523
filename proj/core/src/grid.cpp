#include "corrinfo/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace corrinfo {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

void check_dims(const GridDims& d) {
    if (d.rank < 1 || d.rank > 3)
        throw std::invalid_argument("grid: rank must be 1..3");
    for (int a = 0; a < d.rank; ++a)
        if (d.extent[a] < 2)
            throw std::invalid_argument("grid: transformable axes need extent >= 2");
    for (int a = d.rank; a < 3; ++a)
        if (d.extent[a] != 1)
            throw std::invalid_argument("grid: unused axes must have extent 1");
}

// Executes an in-place c2c transform over `buf` (x fastest in memory, so the
// FFTW dimension list is reversed).
void run_dft(std::vector<std::complex<double>>& buf, const GridDims& d, int sign) {
    int n[3];
    for (int a = 0; a < d.rank; ++a)
        n[a] = static_cast<int>(d.extent[d.rank - 1 - a]);
    auto* ptr = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft(d.rank, n, ptr, ptr, sign, FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("grid: FFTW plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

}  // namespace

Spectrum forward_transform(const Volume& v) {
    check_dims(v.dims);
    if (v.step <= 0.0) throw std::invalid_argument("grid: step must be > 0");
    if (static_cast<index_t>(v.data.size()) != v.dims.count())
        throw std::invalid_argument("grid: data length does not match dims");
    for (double x : v.data)
        if (!std::isfinite(x))
            throw std::invalid_argument("grid: non-finite value in input volume");

    Spectrum s;
    s.dims = v.dims;
    s.step = v.step;
    s.values.assign(v.data.begin(), v.data.end());
    run_dft(s.values, s.dims, FFTW_FORWARD);
    return s;
}

double hermitian_violation(const Spectrum& s, std::array<index_t, 3>* worst_cell) {
    const auto& e = s.dims.extent;
    double max_abs = 0.0;
    for (const auto& z : s.values) max_abs = std::max(max_abs, std::abs(z));
    if (max_abs == 0.0) return 0.0;

    double worst = 0.0;
    std::array<index_t, 3> cell{0, 0, 0};
    for (index_t z = 0; z < e[2]; ++z) {
        const index_t zc = z == 0 ? 0 : e[2] - z;
        for (index_t y = 0; y < e[1]; ++y) {
            const index_t yc = y == 0 ? 0 : e[1] - y;
            for (index_t x = 0; x < e[0]; ++x) {
                const index_t xc = x == 0 ? 0 : e[0] - x;
                const auto a = s.values[s.dims.linear_index(x, y, z)];
                const auto b = s.values[s.dims.linear_index(xc, yc, zc)];
                const double dev = std::abs(a - std::conj(b));
                if (dev > worst) {
                    worst = dev;
                    cell = {x, y, z};
                }
            }
        }
    }
    if (worst_cell) *worst_cell = cell;
    return worst / max_abs;
}

Volume inverse_transform(const Spectrum& s) {
    check_dims(s.dims);
    if (static_cast<index_t>(s.values.size()) != s.dims.count())
        throw std::invalid_argument("grid: spectrum length does not match dims");

    std::array<index_t, 3> cell;
    const double viol = hermitian_violation(s, &cell);
    if (viol > 1e-6) {
        std::ostringstream msg;
        msg << "grid: spectrum is not Hermitian (relative violation " << viol
            << " at cell (" << cell[0] << "," << cell[1] << "," << cell[2] << "))";
        throw std::runtime_error(msg.str());
    }

    std::vector<std::complex<double>> buf = s.values;
    run_dft(buf, s.dims, FFTW_BACKWARD);

    Volume v;
    v.dims = s.dims;
    v.step = s.step;
    v.data.resize(buf.size());
    const double norm = 1.0 / static_cast<double>(s.dims.count());
    for (size_t i = 0; i < buf.size(); ++i) v.data[i] = buf[i].real() * norm;
    return v;
}

RadialBins radial_bins(const GridDims& dims, double step) {
    check_dims(dims);
    if (step <= 0.0) throw std::invalid_argument("grid: step must be > 0");

    RadialBins b;
    b.dims = dims;
    b.step = step;
    const index_t min_e = dims.min_extent();
    b.shell_width = 1.0 / (static_cast<double>(min_e) * step);
    b.n_shells = static_cast<int>(min_e / 2) + 1;
    b.counts.assign(b.n_shells, 0);
    b.shell_of.resize(dims.count());

    const double nyq = b.nyquist();
    const auto& e = dims.extent;
    double inv_len[3] = {0, 0, 0};
    for (int a = 0; a < dims.rank; ++a)
        inv_len[a] = 1.0 / (static_cast<double>(e[a]) * step);

    index_t i = 0;
    for (index_t z = 0; z < e[2]; ++z) {
        const double fz = static_cast<double>(signed_freq_index(z, e[2])) * inv_len[2];
        for (index_t y = 0; y < e[1]; ++y) {
            const double fy = static_cast<double>(signed_freq_index(y, e[1])) * inv_len[1];
            for (index_t x = 0; x < e[0]; ++x, ++i) {
                const double fx = static_cast<double>(signed_freq_index(x, e[0])) * inv_len[0];
                const double r = std::sqrt(fx * fx + fy * fy + fz * fz);
                if (r > nyq * (1.0 + 1e-12)) {
                    b.shell_of[i] = RadialBins::kOverflow;
                    ++b.overflow_count;
                    continue;
                }
                auto shell = static_cast<std::int32_t>(std::llround(r / b.shell_width));
                if (shell >= b.n_shells) {
                    b.shell_of[i] = RadialBins::kOverflow;
                    ++b.overflow_count;
                    continue;
                }
                // Shell 0 is the DC cell alone; on very anisotropic grids the
                // long-axis cells nearest DC would otherwise round into it.
                if (shell == 0 && i != 0) shell = 1;
                b.shell_of[i] = shell;
                ++b.counts[shell];
            }
        }
    }
    return b;
}

Curve make_curve(CurveKind kind, int n_shells, double shell_width, double nyquist) {
    Curve c;
    c.kind = kind;
    c.values.assign(n_shells, 0.0);
    c.flags.assign(n_shells, 0);
    c.freq.resize(n_shells);
    for (int i = 0; i < n_shells; ++i) c.freq[i] = i * shell_width;
    c.nyquist = nyquist;
    return c;
}

Curve add_curves(const Curve& a, const Curve& b) {
    if (a.values.size() != b.values.size() || a.freq != b.freq)
        throw std::invalid_argument("curve: shell axes do not match");
    Curve out = a;
    for (size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] += b.values[i];
        out.flags[i] |= b.flags[i];
    }
    return out;
}

Curve shell_power(const Spectrum& s, const RadialBins& bins) {
    if (s.dims != bins.dims)
        throw std::invalid_argument("grid: spectrum/bins dimension mismatch");
    Curve c = make_curve(CurveKind::power, bins.n_shells, bins.shell_width, bins.nyquist());
    for (size_t i = 0; i < s.values.size(); ++i) {
        const std::int32_t shell = bins.shell_of[i];
        if (shell == RadialBins::kOverflow) continue;
        c.values[shell] += std::norm(s.values[i]);
    }
    return c;
}

double overflow_power(const Spectrum& s, const RadialBins& bins) {
    if (s.dims != bins.dims)
        throw std::invalid_argument("grid: spectrum/bins dimension mismatch");
    double p = 0.0;
    for (size_t i = 0; i < s.values.size(); ++i)
        if (bins.shell_of[i] == RadialBins::kOverflow) p += std::norm(s.values[i]);
    return p;
}

std::string to_string(CurveKind k) {
    switch (k) {
        case CurveKind::fsc: return "fsc";
        case CurveKind::fsi: return "fsi";
        case CurveKind::threshold: return "threshold";
        case CurveKind::power: return "power";
        case CurveKind::tie: return "tie";
        case CurveKind::other: return "other";
    }
    return "other";
}

CurveKind curve_kind_from_string(const std::string& s) {
    if (s == "fsc") return CurveKind::fsc;
    if (s == "fsi") return CurveKind::fsi;
    if (s == "threshold") return CurveKind::threshold;
    if (s == "power") return CurveKind::power;
    if (s == "tie") return CurveKind::tie;
    return CurveKind::other;
}

}  // namespace corrinfo
