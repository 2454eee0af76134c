#include "pdc/limits.hpp"

#include <algorithm>
#include <cmath>

#include "pdc/errors.hpp"

namespace pdc {

double g2_broadband(double eta_hat, std::complex<double> xi_hat, const SlitGeometry& geom,
                    double x1, double x2, CrystalType type) {
    const double delta = polarization_delta(type);
    const double td = slit_spectrum(x2 - x1, geom);
    const double ts = slit_spectrum(x1 + x2, geom);
    return eta_hat * eta_hat * (1.0 + delta * td * td) + std::norm(xi_hat) * ts * ts;
}

double g2_narrowband(double eta_hat, std::complex<double> xi_hat, const SlitGeometry& geom,
                     double x1, double x2, CrystalType type, double scale) {
    const double delta = polarization_delta(type);
    const double t1 = slit_spectrum(x1, geom);
    const double t2 = slit_spectrum(x2, geom);
    const double strength = (1.0 + delta) * eta_hat * eta_hat + std::norm(xi_hat);
    return scale * strength * t1 * t1 * t2 * t2;
}

double visibility_v1(double theta, CrystalType type) {
    if (theta < 0.0) throw Error("theta must be nonnegative");
    const double delta = polarization_delta(type);
    return 1.0 / (1.0 + 2.0 * (1.0 + delta) * theta);
}

double visibility_v2(double theta, CrystalType type) {
    if (theta < 0.0) throw Error("theta must be nonnegative");
    if (type == CrystalType::TypeII)
        throw InvalidForTypeII("the opposite-position fringe vanishes for type II crystals");
    return theta / (3.0 * theta + 2.0);
}

double extract_visibility(const std::vector<double>& values, std::size_t lo, std::size_t hi) {
    if (lo > hi || hi >= values.size())
        throw Error("visibility window out of range");
    const auto [mn, mx] = std::minmax_element(values.begin() + static_cast<std::ptrdiff_t>(lo),
                                              values.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    const double sum = *mx + *mn;
    if (sum <= 0.0) throw Error("visibility undefined for an all-zero window");
    return (*mx - *mn) / sum;
}

} // namespace pdc
