#pragma once

#include "corrinfo/types.hpp"

namespace corrinfo {

/// A finite 1D measurement: a signal of limited length sent over a channel
/// of limited bandwidth. support_length and bandwidth stay 0 until estimated
/// or set.
struct Packet {
    std::vector<double> samples;
    double sample_step = 1.0;   // seconds (or any unit)
    double support_length = 0;  // physical length of the signal region
    double bandwidth = 0;       // Hz (or unit^-1)
};

struct Correlation {
    double value = 0.0;
    bool degenerate = false;  // a zero-power input forced the value to 0
};

struct PacketInfo {
    double bits = 0.0;
    bool saturated = false;  // correlation clamped at +-(1-eps)
};

struct BandwidthEstimate {
    double bandwidth = 0.0;
    bool dc_only = false;  // all power at DC, bandwidth meaningless
};

struct SupportEstimate {
    double length = 0.0;  // physical units
    index_t first = 0;    // sample range holding the variance mass
    index_t last = 0;
};

/// Real-space cross-correlation sum(x1*x2)/sqrt(sum x1^2 * sum x2^2), the
/// literal uncentered form; mean_subtract enables the Pearson variant.
Correlation ccc_real(const Packet& x1, const Packet& x2, bool mean_subtract = false);

/// Same coefficient computed from the full Fourier transforms,
/// Re(sum F1*conj(F2))/sqrt(sum|F1|^2 * sum|F2|^2). Equals ccc_real for real
/// packets (Parseval); the imaginary part cancels by Hermitian symmetry.
Correlation ccc_fourier(const Packet& x1, const Packet& x2, bool mean_subtract = false);

/// Packet information content in real space: B * log2((1+c)/(1-c)) bits.
PacketInfo pic_real(const Packet& x1, const Packet& x2, double bandwidth,
                    double clamp_eps = 1e-7);

/// Fourier-space twin: L * log2((1+c)/(1-c)) with c = ccc_fourier.
PacketInfo pic_fourier(const Packet& x1, const Packet& x2, double support_length,
                       double clamp_eps = 1e-7);

/// Element-wise mean of repeated measurements of one signal.
Packet average_packets(const std::vector<Packet>& ps);

/// Smallest frequency below which `power_frac` of the non-DC power lies.
BandwidthEstimate estimate_bandwidth(const Packet& p, double power_frac = 0.99);

/// Shortest contiguous sample range holding `var_frac` of the variance.
SupportEstimate estimate_support(const Packet& p, double var_frac = 0.99);

/// Channel throughput: bits per packet times packets per second.
double channel_throughput(double pic_bits, double packets_per_second);

}  // namespace corrinfo
