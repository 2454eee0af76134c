#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pdc/engine.hpp"

namespace pdc {

/// One column of a curve CSV.
struct CsvColumn {
    std::string name;
    const std::vector<double>* data = nullptr;
};

/// Format a value with 9 significant digits (shortest form, no locale).
std::string format_value(double v);

/// Format a value with 17 significant digits so parsing it back yields
/// the identical double. Used for manifests, which must re-run byte-
/// identically; data CSVs use format_value.
std::string format_value_exact(double v);

/// Curve CSV: '#'-prefixed comment lines, one '#'-prefixed header line of
/// column names, then comma-separated rows. LF line endings throughout.
std::string render_curve_csv(const std::vector<std::string>& comments,
                             const std::vector<CsvColumn>& columns);

/// Long-format CSV of a swept map: columns (x, sweep, value), one row per
/// cell, sweep-major in row order. A plain curve (empty sweep) degrades
/// to columns (x, value), a full 2-D grid to (x1, x2, value).
std::string render_map_csv(const std::vector<std::string>& comments,
                           const CorrelationMap& map);

/// Linear value <-> gray mapping used by a rendered PGM.
struct PgmScale {
    double value_min = 0.0;
    double value_max = 0.0;
    int max_gray = 65535;
};

/// 16-bit ASCII PGM (P2) of a swept map: one image row per sweep entry
/// (first sweep value on the top row), one column per detector position
/// (x_min leftmost). Values map linearly onto [0, 65535]; a constant map
/// renders as all zeros.
std::string render_pgm16(const CorrelationMap& map, PgmScale& scale_out);

/// Text sidecar describing the PGM's value scale and axes.
std::string render_pgm_scale(const PgmScale& scale, const CorrelationMap& map);

/// Flat key=value manifest, one entry per line, in the given order.
std::string render_manifest(const std::vector<std::pair<std::string, std::string>>& entries);

/// A file written to disk plus the checksum of its exact bytes.
struct WrittenFile {
    std::string path;     // path as written
    std::string name;     // basename used in manifest keys
    std::uint64_t checksum = 0;
};

/// Write content to path (binary mode, bytes exactly as given) and return
/// its checksum record. Throws Error on I/O failure.
WrittenFile write_text_file(const std::string& path, const std::string& content);

/// Lowercase hex (16 digits) of a checksum.
std::string checksum_hex(std::uint64_t checksum);

} // namespace pdc
