#include "pdc/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "pdc/errors.hpp"
#include "pdc/util.hpp"

namespace pdc {

std::string format_value(double v) {
    v += 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string format_value_exact(double v) {
    v += 0.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void append_comments(std::string& out, const std::vector<std::string>& comments) {
    for (const auto& c : comments) {
        out += "# ";
        out += c;
        out += '\n';
    }
}

} // namespace

std::string render_curve_csv(const std::vector<std::string>& comments,
                             const std::vector<CsvColumn>& columns) {
    if (columns.empty()) throw Error("curve CSV needs at least one column");
    const std::size_t rows = columns.front().data->size();
    std::string out;
    append_comments(out, comments);
    out += "# ";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].data->size() != rows)
            throw Error("curve CSV columns differ in length");
        if (c) out += ',';
        out += columns[c].name;
    }
    out += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            out += format_value((*columns[c].data)[r]);
        }
        out += '\n';
    }
    return out;
}

std::string render_map_csv(const std::vector<std::string>& comments,
                           const CorrelationMap& map) {
    const std::size_t nx = map.grid.points.size();
    std::string out;
    append_comments(out, comments);
    if (!map.sweep.empty()) {
        if (map.values.size() != map.sweep.size() * nx)
            throw Error("map value count does not match sweep x grid");
        out += "# x," + map.sweep_name + ',' + map.meta.observable + '\n';
        for (std::size_t r = 0; r < map.sweep.size(); ++r) {
            const std::string sv = format_value(map.sweep[r]);
            for (std::size_t i = 0; i < nx; ++i) {
                out += format_value(map.grid.points[i]);
                out += ',';
                out += sv;
                out += ',';
                out += format_value(map.values[r * nx + i]);
                out += '\n';
            }
        }
        return out;
    }
    if (map.grid.mode == GridMode::Full) {
        if (map.values.size() != nx * nx)
            throw Error("full map value count does not match the grid");
        out += "# x1,x2," + map.meta.observable + '\n';
        for (std::size_t i1 = 0; i1 < nx; ++i1) {
            const std::string v1 = format_value(map.grid.points[i1]);
            for (std::size_t i2 = 0; i2 < nx; ++i2) {
                out += v1;
                out += ',';
                out += format_value(map.grid.points[i2]);
                out += ',';
                out += format_value(map.values[i1 * nx + i2]);
                out += '\n';
            }
        }
        return out;
    }
    if (map.values.size() != nx) throw Error("curve value count does not match the grid");
    out += "# x," + map.meta.observable + '\n';
    for (std::size_t i = 0; i < nx; ++i) {
        out += format_value(map.grid.points[i]);
        out += ',';
        out += format_value(map.values[i]);
        out += '\n';
    }
    return out;
}

std::string render_pgm16(const CorrelationMap& map, PgmScale& scale_out) {
    const std::size_t nx = map.grid.points.size();
    const std::size_t rows = map.sweep.empty()
                                 ? (map.grid.mode == GridMode::Full ? nx : 1)
                                 : map.sweep.size();
    if (map.values.size() != rows * nx) throw Error("map value count does not match its shape");

    double lo = map.values.front(), hi = lo;
    for (double v : map.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    scale_out = PgmScale{lo, hi, 65535};
    const double span = hi - lo;

    std::string out = "P2\n";
    out += std::to_string(nx) + " " + std::to_string(rows) + "\n65535\n";
    char buf[8];
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < nx; ++i) {
            int g = 0;
            if (span > 0.0) {
                const double t = (map.values[r * nx + i] - lo) / span;
                g = static_cast<int>(std::lround(t * 65535.0));
                g = std::min(65535, std::max(0, g));
            }
            std::snprintf(buf, sizeof buf, i ? " %d" : "%d", g);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::string render_pgm_scale(const PgmScale& scale, const CorrelationMap& map) {
    const std::size_t nx = map.grid.points.size();
    std::string out;
    out += "value_min=" + format_value(scale.value_min) + '\n';
    out += "value_max=" + format_value(scale.value_max) + '\n';
    out += "max_gray=" + std::to_string(scale.max_gray) + '\n';
    out += "gray_mapping=linear\n";
    if (!map.sweep.empty()) {
        out += "rows=" + std::to_string(map.sweep.size()) + " " + map.sweep_name + " " +
               format_value(map.sweep.front()) + " to " + format_value(map.sweep.back()) +
               " top to bottom\n";
    } else if (map.grid.mode == GridMode::Full) {
        out += "rows=" + std::to_string(nx) + " x1 " + format_value(map.grid.points.front()) +
               " to " + format_value(map.grid.points.back()) + " top to bottom\n";
    } else {
        out += "rows=1\n";
    }
    out += "cols=" + std::to_string(nx) + " x " + format_value(map.grid.points.front()) +
           " to " + format_value(map.grid.points.back()) + " left to right\n";
    return out;
}

std::string render_manifest(const std::vector<std::pair<std::string, std::string>>& entries) {
    std::string out;
    for (const auto& [k, v] : entries) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

WrittenFile write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw Error("write failed for " + path);
    WrittenFile w;
    w.path = path;
    w.name = std::filesystem::path(path).filename().string();
    w.checksum = fnv1a64(content);
    return w;
}

std::string checksum_hex(std::uint64_t checksum) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(checksum));
    return buf;
}

} // namespace pdc
