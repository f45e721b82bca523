#include "corrinfo/compliance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace corrinfo {

namespace {

std::string describe_fraction(double fraction, double tol, const std::string& what) {
    std::ostringstream os;
    os.precision(6);
    os << fraction * 100.0 << "% of " << what << " (tolerance " << tol * 100.0 << "%)";
    return os.str();
}

nlohmann::json report_json(const ComplianceReport& r) {
    return nlohmann::json{{"id", r.id},           {"check", r.check},
                          {"pass", r.pass},       {"applicable", r.applicable},
                          {"measured", r.measured}, {"tolerance", r.tolerance},
                          {"finding", r.finding}};
}

}  // namespace

std::string to_json(const ComplianceReport& r) { return report_json(r).dump(2); }

std::string to_json(const std::vector<ComplianceReport>& reports,
                    const std::vector<std::string>& warnings) {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : reports) j["checks"].push_back(report_json(r));
    j["warnings"] = warnings;
    bool all = true;
    for (const auto& r : reports) all = all && (r.pass || !r.applicable);
    j["pass"] = all;
    return j.dump(2);
}

ComplianceReport check_band_limit(const Spectrum& s, const RadialBins& bins,
                                  double radius_frac, double tol) {
    if (s.dims != bins.dims)
        throw std::invalid_argument("check_band_limit: dimension mismatch");
    const Curve p = shell_power(s, bins);
    const double over_nyquist = overflow_power(s, bins);
    const double limit = radius_frac * bins.nyquist();
    double beyond = over_nyquist;
    double total = over_nyquist;
    for (int i = 0; i < bins.n_shells; ++i) {
        total += p.values[i];
        if (p.freq[i] > limit) beyond += p.values[i];
    }
    ComplianceReport r;
    r.id = "A";
    r.check = "band_limit";
    r.tolerance = tol;
    r.measured = total > 0.0 ? beyond / total : 0.0;
    r.pass = r.measured <= tol;
    r.finding = describe_fraction(r.measured, tol, "spectral power lies beyond " +
                                                       std::to_string(radius_frac) +
                                                       " of Nyquist");
    return r;
}

ComplianceReport check_corner_emptiness(const Spectrum& s, const RadialBins& bins,
                                        double tol) {
    if (s.dims != bins.dims)
        throw std::invalid_argument("check_corner_emptiness: dimension mismatch");
    if (s.dims.rank < 2)
        throw std::invalid_argument("check_corner_emptiness: inapplicable to 1D data");
    const Curve p = shell_power(s, bins);
    const double corner = overflow_power(s, bins);
    double total = corner;
    for (int i = 0; i < bins.n_shells; ++i) total += p.values[i];

    const double geom = static_cast<double>(bins.overflow_count) /
                        static_cast<double>(bins.dims.count());
    ComplianceReport r;
    r.id = "G";
    r.check = "corner_emptiness";
    r.tolerance = tol;
    r.measured = total > 0.0 ? corner / total : 0.0;
    r.pass = r.measured <= tol;
    std::ostringstream os;
    os.precision(6);
    os << r.measured * 100.0 << "% of spectral power beyond the inscribed Nyquist "
       << (s.dims.rank == 2 ? "disk" : "sphere") << "; corner region is " << geom * 100.0
       << "% of the grid";
    r.finding = os.str();
    return r;
}

ComplianceReport check_real_space_apodization(const Volume& v, double margin_frac,
                                              double tol) {
    if (!(margin_frac >= 0.0 && margin_frac < 1.0))
        throw std::invalid_argument("apodization check: margin_frac must be in [0,1)");

    double mean = 0.0;
    for (double x : v.data) mean += x;
    mean /= static_cast<double>(v.data.size());

    const auto& e = v.dims.extent;
    const double r_lim = (1.0 - margin_frac) * static_cast<double>(v.dims.min_extent()) / 2.0;
    double outside = 0.0;
    double total = 0.0;
    index_t i = 0;
    for (index_t z = 0; z < e[2]; ++z) {
        const double dz = v.dims.rank > 2 ? z - 0.5 * (e[2] - 1) : 0.0;
        for (index_t y = 0; y < e[1]; ++y) {
            const double dy = v.dims.rank > 1 ? y - 0.5 * (e[1] - 1) : 0.0;
            for (index_t x = 0; x < e[0]; ++x, ++i) {
                const double dx = x - 0.5 * (e[0] - 1);
                const double dev = v.data[i] - mean;
                const double var = dev * dev;
                total += var;
                if (std::sqrt(dx * dx + dy * dy + dz * dz) > r_lim) outside += var;
            }
        }
    }

    ComplianceReport r;
    r.id = "H";
    r.check = "real_space_apodization";
    r.tolerance = tol;
    if (total <= 0.0) {
        r.applicable = false;
        r.pass = true;
        r.finding = "inapplicable: volume has zero variance";
        return r;
    }
    r.measured = outside / total;
    r.pass = r.measured <= tol;
    r.finding = describe_fraction(
        r.measured, tol,
        "density variance lies in the outer margin (outside " +
            std::to_string(1.0 - margin_frac) + " of the inscribed radius)");
    return r;
}

FillingDegree filling_degree(const Volume& v, double level) {
    if (!(level >= 0.0 && level <= 1.0))
        throw std::invalid_argument("filling_degree: level must be in [0,1]");
    double mean = 0.0;
    for (double x : v.data) mean += x;
    mean /= static_cast<double>(v.data.size());
    double max_dev = 0.0;
    for (double x : v.data) max_dev = std::max(max_dev, std::abs(x - mean));

    FillingDegree f;
    if (max_dev == 0.0) return f;  // empty box
    const double thr = level * max_dev;
    index_t above = 0;
    for (double x : v.data)
        if (std::abs(x - mean) > thr) ++above;
    f.kappa = static_cast<double>(above) / static_cast<double>(v.data.size());
    f.d_over_l = std::pow(f.kappa, 1.0 / static_cast<double>(v.dims.rank));
    return f;
}

ComplianceReport check_sampling_claim(double step, double claimed_resolution) {
    if (step <= 0.0 || claimed_resolution <= 0.0)
        throw std::invalid_argument("sampling_claim: step and resolution must be > 0");
    const double min_claimable = 3.0 * step;
    ComplianceReport r;
    r.id = "A";
    r.check = "sampling_claim";
    r.tolerance = 1.0;
    r.measured = std::min(1.0, min_claimable / claimed_resolution);
    r.pass = claimed_resolution >= min_claimable;
    std::ostringstream os;
    os.precision(6);
    os << "sampling step " << step << " supports claims no better than " << min_claimable
       << "; claimed " << claimed_resolution;
    r.finding = os.str();
    return r;
}

std::vector<std::string> detect_processing_artifacts(const Volume& v, const Spectrum& s,
                                                     const RadialBins& bins) {
    std::vector<std::string> warnings;

    double min_v = v.data.empty() ? 0.0 : v.data[0];
    double max_v = min_v;
    for (double x : v.data) {
        min_v = std::min(min_v, x);
        max_v = std::max(max_v, x);
    }
    if (min_v >= 0.0 && max_v > min_v)
        warnings.push_back(
            "map contains no negative densities; removing them breaks the zero-mean "
            "phase-contrast linearity of the data");

    // A hard truncation leaves shells with exactly zero power after shells
    // that carry power; apodized data decays but never reaches exact zero.
    const Curve p = shell_power(s, bins);
    bool seen_power = false;
    for (int i = 1; i < p.n_shells(); ++i) {
        if (p.values[i] > 0.0) {
            seen_power = true;
        } else if (seen_power) {
            warnings.push_back(
                "spectrum power is exactly zero from shell " + std::to_string(i) +
                " onward after a powered band; hard Fourier truncation breaks the "
                "real-space/Fourier-space sampling equivalence");
            break;
        }
    }
    return warnings;
}

}  // namespace corrinfo
