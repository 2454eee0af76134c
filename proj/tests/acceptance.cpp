// Acceptance checks for the library and the scenario layer. Each criterion
// prints one PASS/FAIL line with its pinned tolerance; the process exits
// nonzero if any criterion fails. Runs standalone, no test framework.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pdc/biphoton.hpp"
#include "pdc/config.hpp"
#include "pdc/engine.hpp"
#include "pdc/errors.hpp"
#include "pdc/gain.hpp"
#include "pdc/kernels.hpp"
#include "pdc/limits.hpp"
#include "pdc/scenarios.hpp"
#include "pdc/slit.hpp"

using namespace pdc;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// Independent closed form of the slit spectrum for rho = 0.2, used as the
// reference the library must reproduce.
double reference_spectrum(double q) {
    constexpr double pi = std::numbers::pi;
    if (q == 0.0) return 1.0;
    return (std::sin(6.0 * pi * q) - std::sin(4.0 * pi * q)) / (2.0 * pi * q);
}

struct SplitMix {
    std::uint64_t state;
    double next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }
};

std::size_t index_of(const DetectionGrid& grid, double x) {
    const double step = grid.spacing();
    const auto i = static_cast<std::size_t>(std::llround((x - grid.points.front()) / step));
    return std::min(i, grid.points.size() - 1);
}

std::size_t argmax_in(const std::vector<double>& v, const DetectionGrid& grid,
                      double xlo, double xhi) {
    std::size_t best = index_of(grid, xlo);
    for (std::size_t i = best; i < v.size() && grid.points[i] <= xhi; ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

std::size_t argmin_in(const std::vector<double>& v, const DetectionGrid& grid,
                      double xlo, double xhi) {
    std::size_t best = index_of(grid, xlo);
    for (std::size_t i = best; i < v.size() && grid.points[i] <= xhi; ++i)
        if (v[i] < v[best]) best = i;
    return best;
}

// Count confirmed direction changes of a series; a turn registers only
// after the series retreats from its running extremum by at least prom.
int turning_points(const std::vector<double>& v, double prom) {
    int turns = 0;
    int dir = 0;
    double lo = v.front(), hi = v.front();
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double x = v[i];
        if (dir == 0) {
            if (x >= lo + prom) dir = +1;
            else if (x <= hi - prom) dir = -1;
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        } else if (dir > 0) {
            if (x > hi) hi = x;
            else if (x <= hi - prom) {
                ++turns;
                dir = -1;
                lo = x;
            }
        } else {
            if (x < lo) lo = x;
            else if (x >= lo + prom) {
                ++turns;
                dir = +1;
                hi = x;
            }
        }
    }
    return turns;
}

int raw_direction_changes(const std::vector<double>& v) {
    int changes = 0, last = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double d = v[i] - v[i - 1];
        const int s = (d > 0.0) - (d < 0.0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::map<std::string, std::string> dir_bytes(const fs::path& dir) {
    std::map<std::string, std::string> m;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file()) m[e.path().filename().string()] = slurp(e.path());
    return m;
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("pdc_acceptance_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// Maps shared between the wide-cone oracle and the fringe-period check.
struct BroadbandRun {
    PreparedKernels pk;
    DetectionGrid grid{{}, GridMode::Diagonal};
    CorrelationMap diag1, diag2, anti1, anti2;
    double seconds = 0.0;
    bool ready = false;
};

// ---------------------------------------------------------------- 1
bool criterion_1(std::string& detail) {
    constexpr double kRelTol = 1e-9;   // scaled relative error bound
    constexpr double kFloor = 1e-6;    // denominator floor, in units of the peak
    constexpr double kSquareTol = 1e-12;
    constexpr double kTimeLimit = 1.0; // seconds

    const auto t0 = clock_type::now();
    const RunConfig cfg = scenario_defaults("fig2");
    const DetectionGrid grid = config_grid(cfg);
    const SlitGeometry geom = cfg.geom;
    const double intensity = cfg.input.amplitude_sq;

    double peak = 0.0;
    std::vector<double> ref(grid.points.size());
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const double t = reference_spectrum(grid.points[i]);
        ref[i] = intensity * t * t;
        peak = std::max(peak, std::abs(ref[i]));
    }
    double worst = 0.0, worst_sq = 0.0;
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const double x = grid.points[i];
        const double g1 = coherent_g1(x, geom, intensity);
        worst = std::max(worst, std::abs(g1 - ref[i]) / std::max(std::abs(ref[i]), kFloor * peak));
        const double g2 = coherent_g2(x, x, geom, intensity);
        worst_sq = std::max(worst_sq, std::abs(g2 - g1 * g1) / std::max(g1 * g1, kFloor * peak));
    }
    const double dt = seconds_since(t0);

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "max rel err %.2e (tol %.0e), square err %.2e (tol %.0e), %.3f s (limit %.0f s)",
                  worst, kRelTol, worst_sq, kSquareTol, dt, kTimeLimit);
    detail = buf;
    return worst <= kRelTol && worst_sq <= kSquareTol && dt < kTimeLimit &&
           grid.points.size() == 401;
}

// ---------------------------------------------------------------- 2
bool criterion_2(std::string& detail) {
    constexpr double kTol = 1e-12;
    constexpr double kTimeLimit = 5.0;
    constexpr int kDraws = 100000;

    const auto t0 = clock_type::now();
    SplitMix rng{20260816ull};
    double worst = 0.0;
    for (int i = 0; i < kDraws; ++i) {
        const double g = rng.in(0.0, 3.0);
        const double q0 = rng.in(0.01, 50.0);
        const double q = rng.in(-5.0, 5.0);
        const double w = rng.in(-4.0, 4.0);
        double delta0;
        if (i % 5 == 0) {
            // pin the phase mismatch to the gain-band edge, where the
            // eigenvalue |Gamma| passes through zero
            static const double jitter[] = {0.0, 1e-15, -1e-15, 1e-12, -1e-12, 1e-8, -1e-8};
            const double target = (i % 2 == 0 ? 2.0 : -2.0) * g *
                                  (1.0 + jitter[(i / 5) % 7]);
            delta0 = target - w * w + (q / q0) * (q / q0);
        } else {
            delta0 = rng.in(-10.0, 10.0);
        }
        const CrystalParams p(g, delta0, q0, CrystalType::TypeI);
        const GainPair gp = gain_pair(p, q, w);
        const double photon_balance = std::norm(gp.u) - std::norm(gp.v);
        worst = std::max(worst, std::abs(photon_balance - 1.0));
    }
    const double dt = seconds_since(t0);

    char buf[256];
    std::snprintf(buf, sizeof buf, "max |(|u|^2-|v|^2)-1| = %.2e over %d draws (tol %.0e), %.2f s (limit %.0f s)",
                  worst, kDraws, kTol, dt, kTimeLimit);
    detail = buf;
    return worst <= kTol && dt < kTimeLimit;
}

// ---------------------------------------------------------------- 3
bool criterion_3(std::string& detail, BroadbandRun& shared) {
    constexpr double kRelTol = 0.01;      // at fringe extrema
    constexpr double kFlatTol = 0.01;     // TypeII antidiagonal modulation
    constexpr double kTimeLimit = 60.0;

    const auto t0 = clock_type::now();
    const SlitGeometry geom;
    const CrystalParams p(0.5 * std::log(1.5), 0.0, 50.0, CrystalType::TypeI);
    shared.pk = converged_kernels(p, geom, default_quadrature(p, geom));
    shared.grid = make_detection_grid(-0.25, 0.25, 201, GridMode::Diagonal);
    const DetectionGrid anti = make_detection_grid(-0.25, 0.25, 201, GridMode::Antidiagonal);
    shared.diag1 = spontaneous_map(shared.pk, geom, shared.grid, CrystalType::TypeI);
    shared.diag2 = spontaneous_map(shared.pk, geom, shared.grid, CrystalType::TypeII);
    shared.anti1 = spontaneous_map(shared.pk, geom, anti, CrystalType::TypeI);
    shared.anti2 = spontaneous_map(shared.pk, geom, anti, CrystalType::TypeII);
    shared.seconds = seconds_since(t0);
    shared.ready = true;

    const double eta = shared.pk.kernels.eta_hat;
    const std::complex<double> xi = shared.pk.kernels.xi_hat;
    const double extrema[] = {-0.1, -0.05, 0.0, 0.05, 0.1};
    double worst = 0.0;
    for (const double x : extrema) {
        const std::size_t i = index_of(shared.grid, x);
        struct Case {
            const CorrelationMap* map;
            double x1, x2;
            CrystalType type;
        } cases[] = {
            {&shared.diag1, x, x, CrystalType::TypeI},
            {&shared.diag2, x, x, CrystalType::TypeII},
            {&shared.anti1, -x, x, CrystalType::TypeI},
            {&shared.anti2, -x, x, CrystalType::TypeII},
        };
        for (const auto& c : cases) {
            const double ref = g2_broadband(eta, xi, geom, c.x1, c.x2, c.type);
            const double num = c.map->values[i];
            worst = std::max(worst, std::abs(num - ref) / ref);
        }
    }
    const double flat = extract_visibility(shared.anti2.values, 0, shared.anti2.values.size() - 1);

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "worst extremum rel err %.4f (tol %.2f), opposite-position TypeII modulation %.4f (tol %.2f), %.1f s (limit %.0f s)",
                  worst, kRelTol, flat, kFlatTol, shared.seconds, kTimeLimit);
    detail = buf;
    return worst <= kRelTol && flat < kFlatTol && shared.seconds < kTimeLimit;
}

// ---------------------------------------------------------------- 4
bool criterion_4(std::string& detail) {
    constexpr double kShapeTol = 0.01; // on peak-normalized curves

    const SlitGeometry geom;
    const CrystalParams p(0.5 * std::log(1.5), 0.0, 1e-3, CrystalType::TypeI);
    const PreparedKernels pk = converged_kernels(p, geom, default_quadrature(p, geom));
    const DetectionGrid grid = make_detection_grid(-0.5, 0.5, 201, GridMode::Diagonal);
    const CorrelationMap map = spontaneous_map(pk, geom, grid, CrystalType::TypeI);

    const double num_peak = *std::max_element(map.values.begin(), map.values.end());
    const double coh_peak = coherent_g2(0.0, 0.0, geom);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const double x = grid.points[i];
        const double shape_num = map.values[i] / num_peak;
        const double shape_coh = coherent_g2(x, x, geom) / coh_peak;
        worst = std::max(worst, std::abs(shape_num - shape_coh));
    }

    char buf[256];
    std::snprintf(buf, sizeof buf, "max normalized shape deviation %.5f (tol %.2f)", worst,
                  kShapeTol);
    detail = buf;
    return worst <= kShapeTol;
}

// ---------------------------------------------------------------- 5
bool criterion_5(std::string& detail, const BroadbandRun& shared) {
    constexpr double kSpacingTol = 0.005;

    if (!shared.ready) {
        detail = "wide-cone maps unavailable";
        return false;
    }
    const DetectionGrid& grid = shared.grid;
    const std::vector<double>& two = shared.diag1.values;

    const std::size_t imax = argmax_in(two, grid, -0.025, 0.025);
    const std::size_t imin = argmin_in(two, grid, grid.points[imax], 0.075);
    const double spacing_two = grid.points[imin] - grid.points[imax];

    const SlitGeometry geom;
    std::vector<double> one(grid.points.size());
    for (std::size_t i = 0; i < grid.points.size(); ++i)
        one[i] = coherent_g1(grid.points[i], geom);
    const std::size_t jmax = argmax_in(one, grid, -0.025, 0.025);
    const std::size_t jmin = argmin_in(one, grid, grid.points[jmax], 0.15);
    const double spacing_one = grid.points[jmin] - grid.points[jmax];

    const bool ok = std::abs(spacing_two - 0.05) <= kSpacingTol &&
                    std::abs(spacing_one - 0.1) <= kSpacingTol &&
                    std::abs(2.0 * spacing_two - spacing_one) <= grid.spacing() / 2.0;

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "two-photon fringe spacing %.4f (want 0.05 +- %.3f), one-photon %.4f (want 0.1), ratio doubled",
                  spacing_two, kSpacingTol, spacing_one);
    detail = buf;
    return ok;
}

// ---------------------------------------------------------------- 6
bool criterion_6(std::string& detail) {
    constexpr double kEndTol = 1e-3;   // visibility limits at vanishing gain
    constexpr double kAgreeTol = 0.05; // high-gain agreement between the two fringes
    constexpr double kBandLo = 0.15, kBandHi = 0.30;
    // regression constants measured with this quadrature (window 8, 256
    // starting panels, tol 1e-6); the pipeline is deterministic, so they
    // hold to far better than the pinned tolerance
    constexpr double kThetaHighGain = 1.0583672187;
    constexpr double kV1HighGain = 0.1910778537;
    constexpr double kV2HighGain = 0.2045113872;
    constexpr double kFrozenTol = 1e-9;

    const int n = 25;
    std::vector<double> gs(n);
    const double la = std::log(0.01), lb = std::log(3.0);
    for (int i = 0; i < n; ++i) gs[i] = std::exp(la + (lb - la) * i / (n - 1));
    gs.front() = 0.01;
    gs.back() = 3.0;

    const QuadratureSpec spec{4.0, 64, 8.0, 256, 1e-6};
    std::vector<double> v1_t1(n), v1_t2(n), v2_t1(n);
    double theta_high = 0.0;
    for (int i = 0; i < n; ++i) {
        const CrystalParams p(gs[i], 0.0, 1.0, CrystalType::TypeI);
        const SpectralKernels k = omega_collapse(p, spec);
        const double theta = theta_ratio(k);
        v1_t1[i] = visibility_v1(theta, CrystalType::TypeI);
        v1_t2[i] = visibility_v1(theta, CrystalType::TypeII);
        v2_t1[i] = visibility_v2(theta);
        if (i == n - 1) theta_high = theta;
    }

    bool monotone = true;
    for (int i = 1; i < n; ++i)
        monotone = monotone && v1_t1[i] < v1_t1[i - 1] && v1_t2[i] < v1_t2[i - 1] &&
                   v2_t1[i] > v2_t1[i - 1];
    const bool endpoints = std::abs(v1_t1.front() - 1.0) <= kEndTol &&
                           std::abs(v1_t2.front() - 1.0) <= kEndTol && v2_t1.front() <= kEndTol;
    const double v1_high = v1_t1.back(), v2_high = v2_t1.back();
    const bool high_gain = std::abs(v1_high - v2_high) <= kAgreeTol && v1_high >= kBandLo &&
                           v1_high <= kBandHi && v2_high >= kBandLo && v2_high <= kBandHi;
    const bool frozen = std::abs(theta_high - kThetaHighGain) <= kFrozenTol &&
                        std::abs(v1_high - kV1HighGain) <= kFrozenTol &&
                        std::abs(v2_high - kV2HighGain) <= kFrozenTol;

    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "V1(0.01)={%.6f,%.6f}, V2(0.01)=%.2e; monotone %s; g=3: V1=%.10f V2=%.10f theta=%.10f (frozen +- %.0e)",
                  v1_t1.front(), v1_t2.front(), v2_t1.front(), monotone ? "yes" : "NO", v1_high,
                  v2_high, theta_high, kFrozenTol);
    detail = buf;
    return endpoints && monotone && high_gain && frozen;
}

// ---------------------------------------------------------------- 7
bool criterion_7(std::string& detail) {
    constexpr double kFactorTol = 1e-10;
    constexpr double kFlatTol = 0.01;

    const SlitGeometry geom;

    // separable amplitude: coincidences factorize into singles. The mode
    // profiles stay narrower than one fringe period so the detected field
    // is not a cancelling average over the slit pattern.
    const int nq = 401;
    std::vector<double> qs(nq), qi(nq);
    std::vector<std::complex<double>> fs(nq), fi(nq);
    for (int k = 0; k < nq; ++k) {
        const double q = -2.0 + 4.0 * k / (nq - 1);
        qs[k] = qi[k] = q;
        fs[k] = std::exp(-0.5 * (q - 0.12) * (q - 0.12) / (0.15 * 0.15));
        fi[k] = std::exp(-0.5 * (q + 0.12) * (q + 0.12) / (0.15 * 0.15)) *
                std::exp(std::complex<double>(0.0, 0.7 * q));
    }
    const BiphotonAmplitude sep = normalized(separable_biphoton(qs, qi, fs, fi));
    const double pts[] = {-0.12, -0.04, 0.0, 0.06, 0.14};
    double worst_factor = 0.0;
    for (const double x1 : pts)
        for (const double y1 : pts)
            for (const double x2 : pts)
                for (const double y2 : pts) {
                    const double lhs = biphoton_g2(sep, geom, x1, x2) *
                                       biphoton_g2(sep, geom, y1, y2);
                    const double rhs = biphoton_g2(sep, geom, x1, y2) *
                                       biphoton_g2(sep, geom, y1, x2);
                    worst_factor = std::max(
                        worst_factor, std::abs(lhs - rhs) / std::max({lhs, rhs, 1e-300}));
                }

    // perfectly anticorrelated ridge: featureless singles, half-period
    // coincidence fringe
    const int nr = 801;
    std::vector<double> qr(nr);
    std::vector<std::complex<double>> flat(nr, 1.0);
    for (int k = 0; k < nr; ++k) qr[k] = -20.0 + 0.05 * k;
    const BiphotonAmplitude ridge = ridge_biphoton(qr, flat);

    std::vector<double> singles;
    for (double x = -0.2; x <= 0.2 + 1e-12; x += 0.005)
        singles.push_back(biphoton_g1(ridge, geom, x, x, Arm::Signal).real());
    const double flat_mod = extract_visibility(singles, 0, singles.size() - 1);

    // the fringe period is twice the crest-to-valley distance; the valley
    // is an exact null, immune to the diffraction envelope that pulls the
    // second crest slightly inward
    const DetectionGrid fine = make_detection_grid(-0.03, 0.23, 105, GridMode::Diagonal);
    std::vector<double> coinc(fine.points.size());
    for (std::size_t i = 0; i < fine.points.size(); ++i)
        coinc[i] = biphoton_g2(ridge, geom, fine.points[i], fine.points[i]);
    const std::size_t p0 = argmax_in(coinc, fine, -0.03, 0.03);
    const std::size_t v0 = argmin_in(coinc, fine, fine.points[p0], 0.08);
    const double period = 2.0 * (fine.points[v0] - fine.points[p0]);
    const double rho_half = geom.rho / 2.0;

    const bool ok = worst_factor <= kFactorTol && flat_mod < kFlatTol &&
                    std::abs(period - rho_half) <= fine.spacing() + 1e-12;

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "factorization err %.2e (tol %.0e), singles modulation %.4f (tol %.2f), period %.4f (want %.2f +- %.4f)",
                  worst_factor, kFactorTol, flat_mod, kFlatTol, period, rho_half, fine.spacing());
    detail = buf;
    return ok;
}

// ---------------------------------------------------------------- 8
bool criterion_8(std::string& detail) {
    constexpr double kZeroSeedTol = 1e-12;
    constexpr double kZeroGainTol = 1e-10;
    constexpr double kMirrorTol = 1e-9;

    const SlitGeometry geom;
    const CrystalParams p(0.5 * std::log(10.0), 0.0, 2.0, CrystalType::TypeI);
    const PreparedKernels pk = converged_kernels(p, geom, default_quadrature(p, geom));

    // zero seed amplitude: stimulated machinery must reproduce the
    // spontaneous rate
    double worst_seed = 0.0;
    const StimulatedInput dark{0.0, 1.5};
    for (int i = 0; i <= 60; ++i) {
        const double x = -0.3 + 0.01 * i;
        for (const double x1 : {x, -x}) {
            const double a = g2_stimulated(p, pk.kernels, geom, dark, x1, x, CrystalType::TypeI);
            const double b = g2_spontaneous(pk.kernels, geom, x1, x, CrystalType::TypeI);
            worst_seed = std::max(worst_seed, std::abs(a - b) / std::max({a, b, 1.0}));
        }
    }

    // zero gain: the crystal is transparent and the seed alone reaches the
    // detectors, so every rate collapses to the coherent pattern at the
    // injected mode
    const CrystalParams p0(0.0, 0.0, 2.0, CrystalType::TypeI);
    const PreparedKernels pk0 = converged_kernels(p0, geom, default_quadrature(p0, geom));
    const StimulatedInput seed{1.0, 1.0};
    double worst_gain = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double x = -0.3 + 0.01 * i;
        const double g1 = g1_stimulated(p0, pk0.kernels, geom, seed, x, Beam::Combined);
        worst_gain = std::max(worst_gain,
                              std::abs(g1 - coherent_g1(x - seed.q_inject, geom)));
        const double g2 = g2_stimulated(p0, pk0.kernels, geom, seed, x, 0.5 * x,
                                        CrystalType::TypeI);
        const double ref = coherent_g1(x - seed.q_inject, geom) *
                           coherent_g1(0.5 * x - seed.q_inject, geom);
        worst_gain = std::max(worst_gain, std::abs(g2 - ref));
    }

    // opposite-position stimulated coincidence map: mirror symmetric in
    // the scan position for a type I crystal
    std::vector<double> sweep(41);
    for (int r = 0; r < 41; ++r) sweep[r] = 3.0 * r / 40.0;
    const DetectionGrid anti = make_detection_grid(-1.0, 1.0, 161, GridMode::Antidiagonal);
    const CorrelationMap map =
        stimulated_g2_map(p, pk, geom, 1.0, sweep, anti, CrystalType::TypeI);
    const std::size_t nx = anti.points.size();
    double worst_mirror = 0.0;
    for (std::size_t r = 0; r < sweep.size(); ++r) {
        double row_max = 0.0;
        for (std::size_t i = 0; i < nx; ++i)
            row_max = std::max(row_max, std::abs(map.values[r * nx + i]));
        for (std::size_t i = 0; i < nx; ++i) {
            const double d =
                std::abs(map.values[r * nx + i] - map.values[r * nx + (nx - 1 - i)]);
            worst_mirror = std::max(worst_mirror, d / std::max(row_max, 1e-300));
        }
    }

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "zero-seed err %.2e (tol %.0e), zero-gain err %.2e (tol %.0e), mirror err %.2e (tol %.0e)",
                  worst_seed, kZeroSeedTol, worst_gain, kZeroGainTol, worst_mirror, kMirrorTol);
    detail = buf;
    return worst_seed <= kZeroSeedTol && worst_gain <= kZeroGainTol &&
           worst_mirror <= kMirrorTol;
}

// ---------------------------------------------------------------- 9
bool criterion_9(std::string& detail) {
    struct Family {
        const char* tag;
        RunConfig cfg;
    };
    std::vector<Family> families;

    RunConfig wide = scenario_defaults("g2");
    wide.x_min = -0.25;
    wide.x_max = 0.25;
    wide.x_points = 41;
    families.push_back({"wide_diag", wide});
    wide.grid_mode = GridMode::Antidiagonal;
    families.push_back({"wide_anti", wide});

    RunConfig stim = scenario_defaults("fig6");
    stim.panel = "b";
    stim.sweep_points = 21;
    stim.x_points = 81;
    families.push_back({"stim_anti", stim});

    const unsigned thread_counts[] = {1, 2, 8};
    bool all_equal = true;
    std::string offender;
    for (auto& fam : families) {
        std::map<std::string, std::string> baseline;
        for (const unsigned t : thread_counts) {
            RunConfig cfg = fam.cfg;
            cfg.threads = t;
            const fs::path out =
                fresh_dir(std::string("c9_") + fam.tag + "_t" + std::to_string(t));
            cfg.out_dir = out.string();
            run_scenario(cfg);
            auto bytes = dir_bytes(out);
            if (t == 1) {
                baseline = std::move(bytes);
            } else if (bytes != baseline) {
                all_equal = false;
                offender = std::string(fam.tag) + " at " + std::to_string(t) + " threads";
            }
        }
    }

    detail = all_equal ? "byte-identical files for 1, 2 and 8 threads on all three configurations"
                       : "mismatch: " + offender;
    return all_equal;
}

// ---------------------------------------------------------------- 10
bool criterion_10(std::string& detail) {
    constexpr double kProminence = 0.02;
    constexpr double kFallback = 0.005;
    constexpr int kFrozenTurns = 12; // regression count at the 0.02 prominence

    const SlitGeometry geom;
    const CrystalParams p(0.5 * std::log(10.0), 0.0, 2.0, CrystalType::TypeI);
    const PreparedKernels pk = converged_kernels(p, geom, default_quadrature(p, geom));

    std::vector<double> sweep(81);
    for (int r = 0; r < 81; ++r) sweep[r] = 3.0 * r / 80.0;
    // one full central fringe: between the first nulls of the one-photon
    // pattern at -rho/2 and +rho/2
    const DetectionGrid grid = make_detection_grid(-0.1, 0.1, 81, GridMode::Diagonal);
    const CorrelationMap map =
        stimulated_g1_map(p, pk, geom, 1.0, sweep, grid, CrystalType::TypeI, false);

    const std::size_t nx = grid.points.size();
    std::vector<double> vis(sweep.size());
    for (std::size_t r = 0; r < sweep.size(); ++r)
        vis[r] = extract_visibility(map.values, r * nx, r * nx + nx - 1);

    const int turns = turning_points(vis, kProminence);
    const int turns_fine = turning_points(vis, kFallback);
    const int raw = raw_direction_changes(vis);
    const bool ok = (turns >= 2 || turns_fine >= 2) && turns == kFrozenTurns;

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%d turning points at prominence %.3f (%d at %.3f, %d raw); need >= 2, frozen count %d",
                  turns, kProminence, turns_fine, kFallback, raw, kFrozenTurns);
    detail = buf;
    return ok;
}

} // namespace

int main() {
    BroadbandRun shared;
    int failures = 0;
    const auto report = [&](int id, const char* title, bool pass, const std::string& detail) {
        std::printf("[criterion %d] %s  %s: %s\n", id, pass ? "PASS" : "FAIL", title,
                    detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    };
    const auto guard = [&](int id, const char* title, auto&& fn) {
        std::string detail;
        bool pass = false;
        try {
            pass = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        report(id, title, pass, detail);
    };

    guard(1, "coherent reference", [](std::string& d) { return criterion_1(d); });
    guard(2, "photon-number balance", [](std::string& d) { return criterion_2(d); });
    guard(3, "wide-cone oracle", [&](std::string& d) { return criterion_3(d, shared); });
    guard(4, "narrow-cone oracle", [](std::string& d) { return criterion_4(d); });
    guard(5, "fringe period halving", [&](std::string& d) { return criterion_5(d, shared); });
    guard(6, "visibility endpoints", [](std::string& d) { return criterion_6(d); });
    guard(7, "two-photon wavepacket oracle", [](std::string& d) { return criterion_7(d); });
    guard(8, "stimulated reductions", [](std::string& d) { return criterion_8(d); });
    guard(9, "thread determinism", [](std::string& d) { return criterion_9(d); });
    guard(10, "injection alternation", [](std::string& d) { return criterion_10(d); });

    if (failures == 0) std::printf("acceptance: all 10 criteria passed\n");
    else std::printf("acceptance: %d of 10 criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
