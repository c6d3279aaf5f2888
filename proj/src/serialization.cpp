#include "splinewave/serialization.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace splinewave {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json double_list(const std::vector<double>& vs) {
    // Serialize through the 17-digit decimal form so files are byte-stable
    // and round-trip exact.
    json arr = json::array();
    for (double v : vs) arr.push_back(std::stod(format_double(v)));
    return arr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CoeffKind kind_from_string(const std::string& s) {
    if (s == "c") return CoeffKind::c;
    if (s == "b") return CoeffKind::b;
    if (s == "a") return CoeffKind::a;
    if (s == "gamma") return CoeffKind::gamma;
    throw std::runtime_error("unknown coefficient kind: " + s);
}

CoeffMethod method_from_string(const std::string& s) {
    if (s == "quadrature") return CoeffMethod::quadrature;
    if (s == "series") return CoeffMethod::series;
    if (s == "composed") return CoeffMethod::composed;
    throw std::runtime_error("unknown table method: " + s);
}

} // namespace

std::string table_to_csv(const CoefficientTable& t) {
    std::string out = "j,value\n";
    for (int j = -t.window; j <= t.window; ++j) {
        out += std::to_string(j);
        out += ',';
        out += format_double(t.at(j));
        out += '\n';
    }
    return out;
}

std::string table_to_json(const CoefficientTable& t) {
    json o;
    o["schema_version"] = kSchemaVersion;
    o["kind"] = to_string(t.kind);
    o["m"] = t.m;
    o["window"] = t.window;
    o["tail_bound"] = std::stod(format_double(t.tail_bound));
    o["method"] = to_string(t.method);
    o["reliable_limit"] = t.reliable_limit;
    o["values"] = double_list(t.values);
    return o.dump(1) + "\n";
}

CoefficientTable table_from_json(const std::string& text) {
    json o = json::parse(text);
    CoefficientTable t;
    t.kind = kind_from_string(o.at("kind").get<std::string>());
    t.m = o.at("m").get<int>();
    t.window = o.at("window").get<int>();
    t.tail_bound = o.at("tail_bound").get<double>();
    t.method = method_from_string(o.at("method").get<std::string>());
    t.reliable_limit = o.value("reliable_limit", 0);
    t.values = o.at("values").get<std::vector<double>>();
    if (t.values.size() != static_cast<size_t>(2 * t.window + 1))
        throw std::runtime_error("table value count inconsistent with window");
    return t;
}

std::string report_to_json(const VerificationReport& r) {
    json o;
    o["schema_version"] = kSchemaVersion;
    o["m"] = r.m;
    o["all_pass"] = r.all_pass();
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["measured"] = std::stod(format_double(c.measured));
        e["target"] = std::stod(format_double(c.target));
        e["tolerance"] = std::stod(format_double(c.tolerance));
        e["pass"] = c.pass;
        checks.push_back(e);
    }
    o["checks"] = checks;
    return o.dump(1) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
    std::string out = "verification report, order m = " + std::to_string(r.m) + "\n";
    for (const auto& c : r.checks) {
        out += (c.pass ? "  [pass] " : "  [FAIL] ");
        out += c.name + ": measured " + format_double(c.measured) + ", target " +
               format_double(c.target) + ", tolerance " + format_double(c.tolerance) + "\n";
    }
    out += r.all_pass() ? "ALL CHECKS PASS\n" : "CHECK FAILURES PRESENT\n";
    return out;
}

std::string dwt_to_json(const DwtResult& r) {
    json o;
    o["schema_version"] = kSchemaVersion;
    o["levels"] = r.levels;
    json bands = json::array();
    for (const auto& d : r.details) bands.push_back(double_list(d));
    o["details"] = bands;
    o["approximation"] = double_list(r.approximation);
    return o.dump(1) + "\n";
}

DwtResult dwt_from_json(const std::string& text) {
    json o = json::parse(text);
    DwtResult r;
    r.levels = o.at("levels").get<int>();
    for (const auto& b : o.at("details"))
        r.details.push_back(b.get<std::vector<double>>());
    r.approximation = o.at("approximation").get<std::vector<double>>();
    return r;
}

std::vector<double> signal_from_csv(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {  // header row
            first = false;
            continue;
        }
        out.push_back(std::stod(line));
    }
    return out;
}

std::string signal_to_csv(const std::vector<double>& signal) {
    std::string out = "value\n";
    for (double v : signal) { out += format_double(v); out += '\n'; }
    return out;
}

std::string table_checksum(const CoefficientTable& t) {
    // FNV-1a over the CSV payload.
    std::string payload = table_to_csv(t);
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

TableCache TableCache::resolve() {
    TableCache c;
    if (const char* env = std::getenv("SPLINEWAVE_CACHE_DIR"))
        c.dir = env;
    else
        c.dir = (std::filesystem::current_path() / ".splinewave-cache").string();
    return c;
}

std::string TableCache::key_path(int m, double eps, int nodes, CoeffKind kind) const {
    std::ostringstream ss;
    ss << dir << "/table_m" << m << "_eps" << format_double(eps) << "_n" << nodes << "_"
       << to_string(kind) << "_v" << kCodeVersion << ".json";
    return ss.str();
}

bool TableCache::load(int m, double eps, int nodes, CoeffKind kind,
                      CoefficientTable& out) const {
    std::string path = key_path(m, eps, nodes, kind);
    if (!std::filesystem::exists(path)) return false;
    json o = json::parse(read_file(path));
    CoefficientTable t = table_from_json(o.at("table").dump());
    std::string want = o.at("checksum").get<std::string>();
    if (table_checksum(t) != want)
        throw std::runtime_error("cache checksum mismatch for " + path);
    out = std::move(t);
    return true;
}

void TableCache::store(int m, double eps, int nodes, const CoefficientTable& t) const {
    std::filesystem::create_directories(dir);
    json o;
    o["schema_version"] = kSchemaVersion;
    o["code_version"] = kCodeVersion;
    o["m"] = m;
    o["eps"] = std::stod(format_double(eps));
    o["quadrature_nodes"] = nodes;
    o["checksum"] = table_checksum(t);
    o["table"] = json::parse(table_to_json(t));
    std::ofstream outf(key_path(m, eps, nodes, t.kind), std::ios::binary);
    outf << o.dump(1) << "\n";
}

} // namespace splinewave
