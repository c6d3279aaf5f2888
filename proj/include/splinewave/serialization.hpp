// CSV / JSON serialization of coefficient tables, verification reports and
// transform results, plus the on-disk table cache.
//
// Conventions: CSV has a header row, comma separators, LF line endings.
// JSON files carry a top-level `schema_version` field and serialize doubles
// with 17 significant digits (round-trip exact).
#pragma once

#include "transform.hpp"
#include "wavelet_system.hpp"
#include <string>

namespace splinewave {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCodeVersion = "1.0.0";

// Round-trip-exact decimal form of a double (17 significant digits).
std::string format_double(double v);

std::string table_to_csv(const CoefficientTable& t);
std::string table_to_json(const CoefficientTable& t);
CoefficientTable table_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

std::string dwt_to_json(const DwtResult& r);
DwtResult dwt_from_json(const std::string& text);

// Single-column signal CSV (header "value").
std::vector<double> signal_from_csv(const std::string& text);
std::string signal_to_csv(const std::vector<double>& signal);

// FNV-1a checksum over the serialized table payload.
std::string table_checksum(const CoefficientTable& t);

// On-disk cache of coefficient tables keyed by
// (m, eps, quadrature_nodes, code version); entries embed a checksum and
// loads fail on mismatch.  Directory resolution: SPLINEWAVE_CACHE_DIR env
// var, else <cwd>/.splinewave-cache.
struct TableCache {
    std::string dir;

    static TableCache resolve();
    std::string key_path(int m, double eps, int nodes, CoeffKind kind) const;
    // Returns false if absent; throws std::runtime_error on checksum mismatch.
    bool load(int m, double eps, int nodes, CoeffKind kind,
              CoefficientTable& out) const;
    void store(int m, double eps, int nodes, const CoefficientTable& t) const;
};

} // namespace splinewave
