#include "pdc/gain.hpp"

#include <cmath>
#include <string>

#include "pdc/errors.hpp"
#include "pdc/slit.hpp"

namespace pdc {

CrystalParams::CrystalParams(double g_, double delta0_, double q0_norm_, CrystalType type_)
    : g(g_), delta0(delta0_), q0_norm(q0_norm_), crystal_type(type_) {
    if (!(g >= 0.0)) throw ConfigError("coupling g must be >= 0, got " + std::to_string(g_));
    if (!(q0_norm > 0.0))
        throw ConfigError("bandwidth q0_norm must be > 0, got " + std::to_string(q0_norm_));
    if (!std::isfinite(delta0)) throw ConfigError("phase mismatch delta0 must be finite");
}

double phase_mismatch(const CrystalParams& p, double q, double w) {
    const double r = q / p.q0_norm;
    return p.delta0 + w * w - r * r;
}

std::complex<double> gain_eigenvalue(double g, double delta) {
    const double sd = g * g - 0.25 * delta * delta;
    if (sd >= 0.0) return {std::sqrt(sd), 0.0};
    return {0.0, std::sqrt(-sd)};
}

double sinhc(double x) {
    if (std::abs(x) < 1e-4) {
        const double s = x * x;
        return 1.0 + s / 6.0 * (1.0 + s / 20.0);
    }
    return std::sinh(x) / x;
}

GainTerms gain_terms(double g, double delta) {
    const double sd = g * g - 0.25 * delta * delta;
    const double r = std::sqrt(std::abs(sd));
    if (sd >= 0.0) return {std::cosh(r), sinhc(r)};
    return {std::cos(r), sinc(r)};
}

GainPair gain_pair(const CrystalParams& p, double q, double w) {
    const double delta = phase_mismatch(p, q, w);
    const GainTerms t = gain_terms(p.g, delta);
    const std::complex<double> theta = std::polar(1.0, -0.5 * p.delta0);
    GainPair out;
    out.u = theta * std::complex<double>(t.ch, 0.5 * delta * t.shc);
    out.v = theta * (p.g * t.shc);
    return out;
}

double coupling_from_rate(double rate) {
    if (!(rate >= 1.0))
        throw ConfigError("amplification rate must be >= 1, got " + std::to_string(rate));
    return 0.5 * std::log(rate);
}

} // namespace pdc
