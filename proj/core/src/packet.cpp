#include "corrinfo/packet.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "corrinfo/grid.hpp"
#include "corrinfo/info.hpp"

namespace corrinfo {

namespace {

void check_pair(const Packet& x1, const Packet& x2) {
    if (x1.samples.size() != x2.samples.size())
        throw std::invalid_argument("packet: length mismatch");
    if (x1.samples.size() < 8)
        throw std::invalid_argument("packet: packets need at least 8 samples");
}

std::vector<double> centered(const Packet& p, bool mean_subtract) {
    std::vector<double> v = p.samples;
    if (mean_subtract) {
        const double mean =
            std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        for (double& x : v) x -= mean;
    }
    return v;
}

Spectrum packet_spectrum(const std::vector<double>& samples, double step) {
    Volume v;
    v.dims = make_dims({static_cast<index_t>(samples.size())});
    v.step = step;
    v.data = samples;
    return forward_transform(v);
}

}  // namespace

Correlation ccc_real(const Packet& x1, const Packet& x2, bool mean_subtract) {
    check_pair(x1, x2);
    const auto a = centered(x1, mean_subtract);
    const auto b = centered(x2, mean_subtract);
    double num = 0.0, pa = 0.0, pb = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        num += a[i] * b[i];
        pa += a[i] * a[i];
        pb += b[i] * b[i];
    }
    Correlation c;
    if (pa <= 0.0 || pb <= 0.0) {
        c.degenerate = true;
        return c;
    }
    c.value = std::clamp(num / std::sqrt(pa * pb), -1.0, 1.0);
    return c;
}

Correlation ccc_fourier(const Packet& x1, const Packet& x2, bool mean_subtract) {
    check_pair(x1, x2);
    const Spectrum f1 = packet_spectrum(centered(x1, mean_subtract), x1.sample_step);
    const Spectrum f2 = packet_spectrum(centered(x2, mean_subtract), x2.sample_step);
    double num = 0.0, pa = 0.0, pb = 0.0;
    for (size_t i = 0; i < f1.values.size(); ++i) {
        num += f1.values[i].real() * f2.values[i].real() +
               f1.values[i].imag() * f2.values[i].imag();
        pa += std::norm(f1.values[i]);
        pb += std::norm(f2.values[i]);
    }
    Correlation c;
    if (pa <= 0.0 || pb <= 0.0) {
        c.degenerate = true;
        return c;
    }
    c.value = std::clamp(num / std::sqrt(pa * pb), -1.0, 1.0);
    return c;
}

namespace {

PacketInfo scaled_info(double coefficient, double scale, double clamp_eps) {
    PacketInfo info;
    info.bits = fisher_information_value(coefficient, scale, clamp_eps, &info.saturated);
    return info;
}

}  // namespace

PacketInfo pic_real(const Packet& x1, const Packet& x2, double bandwidth,
                    double clamp_eps) {
    if (bandwidth <= 0.0) throw std::invalid_argument("pic: bandwidth must be > 0");
    return scaled_info(ccc_real(x1, x2).value, bandwidth, clamp_eps);
}

PacketInfo pic_fourier(const Packet& x1, const Packet& x2, double support_length,
                       double clamp_eps) {
    if (support_length <= 0.0)
        throw std::invalid_argument("pic: support length must be > 0");
    return scaled_info(ccc_fourier(x1, x2).value, support_length, clamp_eps);
}

Packet average_packets(const std::vector<Packet>& ps) {
    if (ps.empty()) throw std::invalid_argument("packet: nothing to average");
    const size_t n = ps.front().samples.size();
    for (const auto& p : ps) {
        if (p.samples.size() != n)
            throw std::invalid_argument("packet: mixed lengths in average");
        if (p.sample_step != ps.front().sample_step)
            throw std::invalid_argument("packet: mixed sample steps in average");
    }
    Packet out = ps.front();
    for (size_t k = 1; k < ps.size(); ++k)
        for (size_t i = 0; i < n; ++i) out.samples[i] += ps[k].samples[i];
    const double inv = 1.0 / static_cast<double>(ps.size());
    for (double& x : out.samples) x *= inv;
    return out;
}

BandwidthEstimate estimate_bandwidth(const Packet& p, double power_frac) {
    if (!(power_frac > 0.0 && power_frac <= 1.0))
        throw std::invalid_argument("estimate_bandwidth: power_frac must be in (0,1]");
    bool all_zero = true;
    for (double x : p.samples)
        if (x != 0.0) all_zero = false;
    if (all_zero) throw std::invalid_argument("estimate_bandwidth: zero packet");

    const Spectrum f = packet_spectrum(p.samples, p.sample_step);
    const auto n = static_cast<index_t>(p.samples.size());
    // One-sided power profile, DC excluded; +k and -k fold together.
    const index_t n_half = n / 2;
    std::vector<double> power(n_half + 1, 0.0);
    for (index_t k = 1; k < n; ++k) {
        const index_t kk = std::llabs(signed_freq_index(k, n));
        power[kk] += std::norm(f.values[k]);
    }
    const double total = std::accumulate(power.begin(), power.end(), 0.0);

    BandwidthEstimate est;
    if (total <= 0.0) {
        est.dc_only = true;
        return est;
    }
    const double bin = 1.0 / (static_cast<double>(n) * p.sample_step);
    double cum = 0.0;
    for (index_t k = 1; k <= n_half; ++k) {
        cum += power[k];
        if (cum >= power_frac * total) {
            est.bandwidth = static_cast<double>(k) * bin;
            return est;
        }
    }
    est.bandwidth = static_cast<double>(n_half) * bin;
    return est;
}

SupportEstimate estimate_support(const Packet& p, double var_frac) {
    if (!(var_frac > 0.0 && var_frac <= 1.0))
        throw std::invalid_argument("estimate_support: var_frac must be in (0,1]");
    const auto n = static_cast<index_t>(p.samples.size());
    const double mean =
        std::accumulate(p.samples.begin(), p.samples.end(), 0.0) / static_cast<double>(n);
    std::vector<double> var(n);
    double total = 0.0;
    for (index_t i = 0; i < n; ++i) {
        var[i] = (p.samples[i] - mean) * (p.samples[i] - mean);
        total += var[i];
    }
    SupportEstimate est;
    if (total <= 0.0) {
        est.first = 0;
        est.last = n - 1;
        est.length = static_cast<double>(n) * p.sample_step;
        return est;
    }
    const double need = var_frac * total;
    index_t best_lo = 0, best_hi = n - 1;
    index_t lo = 0;
    double window = 0.0;
    for (index_t hi = 0; hi < n; ++hi) {
        window += var[hi];
        while (window - var[lo] >= need) window -= var[lo++];
        if (window >= need && hi - lo < best_hi - best_lo) {
            best_lo = lo;
            best_hi = hi;
        }
    }
    est.first = best_lo;
    est.last = best_hi;
    est.length = static_cast<double>(best_hi - best_lo + 1) * p.sample_step;
    return est;
}

double channel_throughput(double pic_bits, double packets_per_second) {
    if (packets_per_second < 0.0)
        throw std::invalid_argument("channel_throughput: rate must be >= 0");
    return pic_bits * packets_per_second;
}

}  // namespace corrinfo
