#include "pdc/biphoton.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "pdc/errors.hpp"

namespace pdc {

namespace {

void check_grid(const std::vector<double>& q, const char* axis) {
    if (q.size() < 2) throw Error(std::string(axis) + " grid needs at least 2 nodes");
    const double d = q[1] - q[0];
    if (!(d > 0.0)) throw Error(std::string(axis) + " grid must be strictly increasing");
    for (std::size_t i = 1; i + 1 < q.size(); ++i) {
        const double di = q[i + 1] - q[i];
        if (std::abs(di - d) > 1e-9 * std::max(1.0, std::abs(d)))
            throw Error(std::string(axis) + " grid must be uniform");
    }
}

std::vector<double> spectrum_row(const std::vector<double>& q, const SlitGeometry& geom,
                                 double x) {
    std::vector<double> t(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) t[i] = slit_spectrum(x - q[i], geom);
    return t;
}

} // namespace

BiphotonAmplitude make_biphoton(std::vector<double> qs_grid, std::vector<double> qi_grid,
                                std::vector<std::complex<double>> values) {
    check_grid(qs_grid, "signal");
    check_grid(qi_grid, "idler");
    if (values.size() != qs_grid.size() * qi_grid.size())
        throw Error("amplitude value count does not match the grid");
    bool any = false;
    for (const auto& v : values) {
        if (v != std::complex<double>{0.0, 0.0}) {
            any = true;
            break;
        }
    }
    if (!any) throw Error("two-photon amplitude is identically zero");
    BiphotonAmplitude amp;
    amp.qs_grid = std::move(qs_grid);
    amp.qi_grid = std::move(qi_grid);
    amp.values = std::move(values);
    return amp;
}

double biphoton_norm(const BiphotonAmplitude& amp) {
    double acc = 0.0;
    for (const auto& v : amp.values) acc += std::norm(v);
    return acc * amp.qs_spacing() * amp.qi_spacing();
}

BiphotonAmplitude normalized(BiphotonAmplitude amp) {
    const double n = biphoton_norm(amp);
    if (!(n > 0.0)) throw Error("cannot normalize a zero amplitude");
    const double s = 1.0 / std::sqrt(n);
    for (auto& v : amp.values) v *= s;
    return amp;
}

BiphotonAmplitude separable_biphoton(std::vector<double> qs_grid, std::vector<double> qi_grid,
                                     const std::vector<std::complex<double>>& f_signal,
                                     const std::vector<std::complex<double>>& f_idler) {
    if (f_signal.size() != qs_grid.size() || f_idler.size() != qi_grid.size())
        throw Error("factor length does not match its grid");
    std::vector<std::complex<double>> values(qs_grid.size() * qi_grid.size());
    for (std::size_t is = 0; is < qs_grid.size(); ++is)
        for (std::size_t ii = 0; ii < qi_grid.size(); ++ii)
            values[is * qi_grid.size() + ii] = f_signal[is] * f_idler[ii];
    return make_biphoton(std::move(qs_grid), std::move(qi_grid), std::move(values));
}

BiphotonAmplitude ridge_biphoton(std::vector<double> q_grid,
                                 const std::vector<std::complex<double>>& ridge_values) {
    check_grid(q_grid, "ridge");
    const std::size_t n = q_grid.size();
    if (ridge_values.size() != n) throw Error("ridge value count does not match the grid");
    const double span = q_grid.back() - q_grid.front();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(q_grid[n - 1 - i] + q_grid[i]) > 1e-9 * span)
            throw Error("ridge grid must be symmetric about zero");
    }
    const double d = q_grid[1] - q_grid[0];
    std::vector<std::complex<double>> values(n * n, std::complex<double>{0.0, 0.0});
    for (std::size_t is = 0; is < n; ++is) values[is * n + (n - 1 - is)] = ridge_values[is] / d;
    return make_biphoton(q_grid, q_grid, std::move(values));
}

std::complex<double> biphoton_wavepacket(const BiphotonAmplitude& amp, const SlitGeometry& geom,
                                         double x1, double x2) {
    const std::vector<double> ts = spectrum_row(amp.qs_grid, geom, x2);
    const std::vector<double> ti = spectrum_row(amp.qi_grid, geom, x1);
    const std::size_t ni = amp.qi_grid.size();
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t is = 0; is < amp.qs_grid.size(); ++is) {
        std::complex<double> row{0.0, 0.0};
        for (std::size_t ii = 0; ii < ni; ++ii) row += amp.values[is * ni + ii] * ti[ii];
        acc += ts[is] * row;
    }
    return acc * (amp.qs_spacing() * amp.qi_spacing());
}

double biphoton_g2(const BiphotonAmplitude& amp, const SlitGeometry& geom,
                   double x1, double x2) {
    return std::norm(biphoton_wavepacket(amp, geom, x1, x2));
}

std::complex<double> biphoton_g1(const BiphotonAmplitude& amp, const SlitGeometry& geom,
                                 double x1, double x2, Arm arm) {
    const std::size_t ni = amp.qi_grid.size();
    const std::size_t ns = amp.qs_grid.size();
    std::complex<double> acc{0.0, 0.0};
    if (arm == Arm::Signal) {
        const std::vector<double> t1 = spectrum_row(amp.qs_grid, geom, x1);
        const std::vector<double> t2 = spectrum_row(amp.qs_grid, geom, x2);
        for (std::size_t ii = 0; ii < ni; ++ii) {
            std::complex<double> a{0.0, 0.0}, b{0.0, 0.0};
            for (std::size_t is = 0; is < ns; ++is) {
                const std::complex<double>& c = amp.values[is * ni + ii];
                a += c * t1[is];
                b += c * t2[is];
            }
            acc += std::conj(a) * b;
        }
        return acc * (amp.qs_spacing() * amp.qs_spacing() * amp.qi_spacing());
    }
    const std::vector<double> t1 = spectrum_row(amp.qi_grid, geom, x1);
    const std::vector<double> t2 = spectrum_row(amp.qi_grid, geom, x2);
    for (std::size_t is = 0; is < ns; ++is) {
        std::complex<double> a{0.0, 0.0}, b{0.0, 0.0};
        for (std::size_t ii = 0; ii < ni; ++ii) {
            const std::complex<double>& c = amp.values[is * ni + ii];
            a += c * t1[ii];
            b += c * t2[ii];
        }
        acc += std::conj(a) * b;
    }
    return acc * (amp.qi_spacing() * amp.qi_spacing() * amp.qs_spacing());
}

} // namespace pdc
