#pragma once

#include <utility>

#include "corrinfo/info.hpp"
#include "corrinfo/types.hpp"

namespace corrinfo {

/// Repeated image pairs of one test sample under identical conditions.
struct MeasurementSeries {
    std::vector<std::pair<Volume, Volume>> pairs;
    double step = 1.0;
};

/// Information-free denominator floor: shells whose input information is
/// below this (in bits) are emitted as undefined rather than divided by.
inline constexpr double kTieInputFloor = 0.01;

/// Sum of per-pair radially weighted FRI curves over the series. The
/// optional carry continues a previous accumulation, so accumulating a
/// concatenated series bit-exactly equals accumulating its parts in order.
Curve accumulate_fri(const MeasurementSeries& series, const InfoParams& p);
Curve accumulate_fri(const MeasurementSeries& series, const InfoParams& p,
                     const Curve& carry);

/// Transducer information efficiency: fri_out / fri_in per shell. Shells
/// with |fri_in| < eps_in carry NaN and curve_flag::undefined.
Curve tie(const Curve& fri_out, const Curve& fri_in, double eps_in = kTieInputFloor);

/// Relative efficiency of two transducers measured on the same input:
/// fri_out1 / fri_out2 (the unknown input information cancels).
Curve relative_tie(const Curve& fri_out1, const Curve& fri_out2,
                   double eps_in = kTieInputFloor);

/// Upper envelope of an oscillating curve: running maximum over
/// window_shells followed by a running minimum of the same width
/// (morphological closing). Identity on monotone curves; never below the
/// input.
Curve envelope(const Curve& c, int window_shells = 5);

}  // namespace corrinfo
