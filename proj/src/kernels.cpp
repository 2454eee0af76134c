#include "pdc/kernels.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "pdc/errors.hpp"
#include "pdc/util.hpp"

namespace pdc {

namespace {

// Frequency collapse at one transverse node. The integrands are even in
// w (the mismatch depends on w^2), so only w >= 0 is sampled, with end
// nodes at single weight and interior nodes doubled. The constant pair
// phase exp(-i delta0) is applied once after the sum.
void collapse_at(const CrystalParams& p, double q, double w_half, int w_panels,
                 double& s_out, std::complex<double>& p_out) {
    const int m = w_panels / 2;
    const double hw = w_half / m;
    double s_acc = 0.0;
    double pr_acc = 0.0;
    double pi_acc = 0.0;
    for (int j = 0; j <= m; ++j) {
        const double w = j * hw;
        const double delta = phase_mismatch(p, q, w);
        const GainTerms t = gain_terms(p.g, delta);
        const double gs = p.g * t.shc; // |v| up to the phase
        const double weight = (j == 0 || j == m) ? 1.0 : 2.0;
        s_acc += weight * gs * gs;
        pr_acc += weight * gs * t.ch;
        pi_acc += weight * gs * 0.5 * delta * t.shc;
    }
    s_out = hw * s_acc;
    p_out = std::polar(1.0, -p.delta0) * std::complex<double>(hw * pr_acc, hw * pi_acc);
}

bool both_close(double s0, double s1, std::complex<double> p0, std::complex<double> p1,
                double rel_tol) {
    const double s_scale = std::max(std::abs(s0), std::abs(s1));
    const double p_scale = std::max(std::abs(p0), std::abs(p1));
    return std::abs(s1 - s0) <= rel_tol * s_scale && std::abs(p1 - p0) <= rel_tol * p_scale;
}

// Fill s/p values for the non-negative node indices [first, last] of a
// symmetric grid with center index `center`, then mirror onto the
// negative side. Node i sits at (i - center) * step.
void fill_nodes(const CrystalParams& p, double step, std::size_t center,
                std::size_t first, std::size_t last, double w_half, int w_panels,
                unsigned threads, std::vector<double>& s_vals,
                std::vector<std::complex<double>>& p_vals) {
    parallel_for(last - first + 1, threads, [&](std::size_t idx) {
        const std::size_t i = first + idx;
        const double q = (static_cast<double>(i) - static_cast<double>(center)) * step;
        collapse_at(p, q, w_half, w_panels, s_vals[i], p_vals[i]);
    });
    for (std::size_t i = std::max(first, center + 1); i <= last; ++i) {
        s_vals[2 * center - i] = s_vals[i];
        p_vals[2 * center - i] = p_vals[i];
    }
}

} // namespace

void QuadratureSpec::validate() const {
    if (!(q_halfwidth > 0.0) || !(w_halfwidth > 0.0))
        throw ConfigError("quadrature windows must be positive");
    if (q_points < 64 || q_points % 2 != 0)
        throw ConfigError("q_points must be even and at least 64, got " +
                          std::to_string(q_points));
    if (w_points < 64 || w_points % 2 != 0)
        throw ConfigError("w_points must be even and at least 64, got " +
                          std::to_string(w_points));
    if (!(rel_tol > 0.0) || !(rel_tol < 1.0))
        throw ConfigError("rel_tol must lie in (0, 1)");
}

QuadratureSpec default_quadrature(const CrystalParams& p, const SlitGeometry& geom) {
    QuadratureSpec spec;
    spec.q_halfwidth = std::max(4.0, 4.0 * p.q0_norm);
    double step = geom.rho / 5.0;
    if (p.g > 0.0) step = std::min(step, p.q0_norm * std::sqrt(2.0 * p.g) / 8.0);
    int n = static_cast<int>(std::ceil(2.0 * spec.q_halfwidth / step));
    n += (4 - n % 4) % 4; // multiple of 4, so halving the window keeps 0 a node
    spec.q_points = std::max(n, 64);
    spec.w_halfwidth = std::max(8.0, 2.0 * std::sqrt(2.0 * p.g + std::abs(p.delta0)));
    spec.w_points = 256;
    return spec;
}

SpectralKernels omega_collapse(const CrystalParams& p, const QuadratureSpec& spec,
                               double c_omega, unsigned threads) {
    spec.validate();

    // Converge the frequency sample density on the q = 0 node. Each
    // candidate density is summed from scratch so the accepted values are
    // bitwise identical to a direct evaluation at that density.
    int w_panels = spec.w_points;
    double s0;
    std::complex<double> p0;
    collapse_at(p, 0.0, spec.w_halfwidth, w_panels, s0, p0);
    int rounds = 0;
    for (;;) {
        double s1;
        std::complex<double> p1;
        collapse_at(p, 0.0, spec.w_halfwidth, w_panels * 2, s1, p1);
        ++rounds;
        const bool done = both_close(s0, s1, p0, p1, spec.rel_tol);
        const double s_prev = s0;
        w_panels *= 2;
        s0 = s1;
        p0 = p1;
        if (done) break;
        if (rounds >= 12)
            throw ConvergenceFailure("frequency-axis density refinement", c_omega * s_prev,
                                     c_omega * s1, rounds);
    }

    SpectralKernels k;
    k.c_omega = c_omega;
    k.w_halfwidth = spec.w_halfwidth;
    k.w_points_used = w_panels;
    k.w_rounds = rounds;
    k.q_step = 2.0 * spec.q_halfwidth / spec.q_points;

    const std::size_t n = static_cast<std::size_t>(spec.q_points);
    const std::size_t center = n / 2;
    k.q_grid.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        k.q_grid[i] = (static_cast<double>(i) - static_cast<double>(center)) * k.q_step;
    k.s_vals.resize(n + 1);
    k.p_vals.resize(n + 1);
    fill_nodes(p, k.q_step, center, center, n, spec.w_halfwidth, w_panels, threads,
               k.s_vals, k.p_vals);

    k.eta_hat = c_omega * k.s_vals[center];
    k.xi_hat = c_omega * k.p_vals[center];
    return k;
}

SpectralKernels extend_window(const SpectralKernels& k, const CrystalParams& p,
                              double new_halfwidth, unsigned threads) {
    if (k.q_grid.empty() || !(k.q_step > 0.0))
        throw Error("extend_window needs kernels with a populated grid");
    const std::size_t old_n = k.q_grid.size() - 1;
    const std::size_t old_center = old_n / 2;
    const double old_halfwidth = static_cast<double>(old_center) * k.q_step;
    const auto side = static_cast<std::size_t>(
        std::llround((new_halfwidth - old_halfwidth) / k.q_step));
    if (side == 0)
        throw Error("extend_window must grow the transverse window");

    SpectralKernels out;
    out.c_omega = k.c_omega;
    out.eta_hat = k.eta_hat;
    out.xi_hat = k.xi_hat;
    out.q_step = k.q_step;
    out.w_halfwidth = k.w_halfwidth;
    out.w_points_used = k.w_points_used;
    out.w_rounds = k.w_rounds;

    const std::size_t n = old_n + 2 * side;
    const std::size_t center = n / 2;
    out.q_grid.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        out.q_grid[i] = (static_cast<double>(i) - static_cast<double>(center)) * out.q_step;
    out.s_vals.assign(n + 1, 0.0);
    out.p_vals.assign(n + 1, std::complex<double>{});
    for (std::size_t i = 0; i <= old_n; ++i) {
        out.s_vals[side + i] = k.s_vals[i];
        out.p_vals[side + i] = k.p_vals[i];
    }
    fill_nodes(p, out.q_step, center, center + old_center + 1, n, out.w_halfwidth,
               out.w_points_used, threads, out.s_vals, out.p_vals);
    return out;
}

double theta_ratio(const SpectralKernels& k) {
    const double xi_mag = std::abs(k.xi_hat);
    if (xi_mag < 1e-300)
        throw DegenerateGain("pair amplitude vanishes; the visibility ratio is undefined");
    const double r = k.eta_hat / xi_mag;
    return r * r;
}

} // namespace pdc
