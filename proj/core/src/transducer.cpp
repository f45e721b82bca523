#include "corrinfo/transducer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "corrinfo/metrics.hpp"

namespace corrinfo {

namespace {

void check_series(const MeasurementSeries& series) {
    if (series.pairs.empty())
        throw std::invalid_argument("transducer: series needs at least one pair");
    const GridDims& d = series.pairs.front().first.dims;
    for (const auto& [a, b] : series.pairs)
        if (a.dims != d || b.dims != d)
            throw std::invalid_argument("transducer: dimension mismatch within series");
}

void check_axes(const Curve& a, const Curve& b) {
    if (a.values.size() != b.values.size() || a.freq != b.freq)
        throw std::invalid_argument("transducer: curves on different shell axes");
}

}  // namespace

Curve accumulate_fri(const MeasurementSeries& series, const InfoParams& p,
                     const Curve& carry) {
    check_series(series);
    const RadialBins bins =
        radial_bins(series.pairs.front().first.dims, series.step);
    Curve acc = carry;
    for (const auto& [a, b] : series.pairs) {
        const Curve frc = fsc(forward_transform(a), forward_transform(b), bins);
        acc = add_curves(acc, weighted_information(frc, p, &bins));
    }
    return acc;
}

Curve accumulate_fri(const MeasurementSeries& series, const InfoParams& p) {
    check_series(series);
    const RadialBins bins =
        radial_bins(series.pairs.front().first.dims, series.step);
    const Curve zero =
        make_curve(CurveKind::fsi, bins.n_shells, bins.shell_width, bins.nyquist());
    return accumulate_fri(series, p, zero);
}

namespace {

Curve quotient(const Curve& num, const Curve& den, double eps_in) {
    check_axes(num, den);
    Curve out = num;
    out.kind = CurveKind::tie;
    for (size_t i = 0; i < out.values.size(); ++i) {
        if (std::abs(den.values[i]) < eps_in) {
            out.values[i] = std::numeric_limits<double>::quiet_NaN();
            out.flags[i] = curve_flag::undefined;
            continue;
        }
        out.values[i] = num.values[i] / den.values[i];
        out.flags[i] = 0;
    }
    return out;
}

}  // namespace

Curve tie(const Curve& fri_out, const Curve& fri_in, double eps_in) {
    return quotient(fri_out, fri_in, eps_in);
}

Curve relative_tie(const Curve& fri_out1, const Curve& fri_out2, double eps_in) {
    return quotient(fri_out1, fri_out2, eps_in);
}

Curve envelope(const Curve& c, int window_shells) {
    if (window_shells < 3)
        throw std::invalid_argument("envelope: window must span at least 3 shells");
    const int n = c.n_shells();
    const int h = window_shells / 2;

    // Dilation lifts the valleys to the nearby peak level, erosion restores
    // the flanks; monotone curves come back unchanged.
    std::vector<double> dilated(n);
    for (int i = 0; i < n; ++i) {
        double m = -std::numeric_limits<double>::infinity();
        for (int j = std::max(0, i - h); j <= std::min(n - 1, i + h); ++j)
            m = std::max(m, c.values[j]);
        dilated[i] = m;
    }
    Curve out = c;
    for (int i = 0; i < n; ++i) {
        double m = std::numeric_limits<double>::infinity();
        for (int j = std::max(0, i - h); j <= std::min(n - 1, i + h); ++j)
            m = std::min(m, dilated[j]);
        out.values[i] = m;
    }
    return out;
}

}  // namespace corrinfo
