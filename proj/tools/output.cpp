#include "output.hpp"

#include "metasurf/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <map>
#include <sstream>

namespace msurf::out {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace {

const std::map<std::string, Schema>& registry() {
    static const std::map<std::string, Schema> r = [] {
        std::map<std::string, Schema> m;
        auto add = [&](Schema s) { m.emplace(s.name, std::move(s)); };
        add({"dispersion", {{"k_over_kp", "1"}, {"omega_over_omegap", "1"}, {"branch", "label"}}});
        add({"stability_grid", {{"d_nm", "nm"}, {"lambda_nm", "nm"}, {"gamma_total_J_per_m2_per_A2", "J/m^4"}}});
        add({"stability_contour", {{"lambda_nm", "nm"}, {"d_critical_nm", "nm"}}});
        add({"amplitudes",
             {{"sweep_var", "see sidecar"},
              {"order_m", "1"},
              {"channel", "label"},
              {"re", "V/m"},
              {"im", "V/m"},
              {"intensity", "V^2/m^2"},
              {"solver", "label"},
              {"anomaly", "flag"}}});
        add({"field", {{"x_over_period", "1"}, {"z_times_g", "1"}, {"intensity", "V^2/m^2"}}});
        add({"cerenkov",
             {{"beta", "1"},
              {"omega_rad_per_s", "rad/s"},
              {"spectral_power_J_per_m", "J/m"},
              {"angle_rad", "rad"}}});
        add({"casimir_du",
             {{"d_nm", "nm"},
              {"delta_u_expanded_J_per_m2", "J/m^2"},
              {"delta_u_full_J_per_m2", "J/m^2"},
              {"delta_u_lifshitz_J_per_m2", "J/m^2"},
              {"closed_form_J_per_m2", "J/m^2"}}});
        return m;
    }();
    return r;
}

std::string header_line(const Schema& s) {
    std::string h;
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
        if (i) h += ',';
        h += s.columns[i].name;
    }
    return h;
}

} // namespace

const Schema& schema(const std::string& name) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw Error("unknown output schema '" + name + "'");
    return it->second;
}

std::vector<std::string> schema_names() {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& schema_name)
    : schema_(out::schema(schema_name)), path_(path) {
    os_.open(path, std::ios::binary | std::ios::trunc);
    if (!os_) throw Error("cannot open " + path + " for writing");
    os_ << header_line(schema_) << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != schema_.columns.size())
        throw Error("row width " + std::to_string(cells.size()) + " does not match schema " + schema_.name);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os_ << ',';
        os_ << cells[i];
    }
    os_ << '\n';
}

void CsvWriter::close() {
    os_.close();
    if (!header_matches(path_, schema_.name)) throw Error("header self-check failed for " + path_);
}

bool header_matches(const std::string& path, const std::string& schema_name) {
    std::ifstream is(path, std::ios::binary);
    std::string line;
    if (!is || !std::getline(is, line)) return false;
    return line == header_line(schema(schema_name));
}

void write_sidecar(const std::string& csv_path, const std::string& schema_name, const nlohmann::json& extra) {
    nlohmann::json j = extra;
    j["schema"] = schema_name;
    nlohmann::json units = nlohmann::json::object();
    for (const auto& c : schema(schema_name).columns) units[c.name] = c.unit;
    j["units"] = units;
    std::ofstream os(csv_path + ".json", std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot write sidecar for " + csv_path);
    os << j.dump(2) << '\n';
}

namespace {

template <class T>
void put_le(std::ostream& os, T v) {
    static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);
    std::array<char, sizeof(T)> b;
    std::memcpy(b.data(), &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(b.begin(), b.end());
    os.write(b.data(), b.size());
}

template <class T>
T get_le(std::istream& is) {
    std::array<char, sizeof(T)> b;
    if (!is.read(b.data(), b.size())) throw Error("truncated DGF1 file");
    if constexpr (std::endian::native == std::endian::big) std::reverse(b.begin(), b.end());
    T v;
    std::memcpy(&v, b.data(), sizeof(T));
    return v;
}

} // namespace

void write_dgf1(const std::string& path, std::uint32_t nx, std::uint32_t nz, const std::vector<double>& data) {
    if (data.size() != std::size_t(nx) * nz) throw Error("DGF1 payload size does not match nx * nz");
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open " + path + " for writing");
    os.write("DGF1", 4);
    put_le<std::uint32_t>(os, nx);
    put_le<std::uint32_t>(os, nz);
    os.write("\0\0\0\0", 4);   // pad header to 16 bytes
    for (double v : data) put_le<double>(os, v);
}

Grid read_dgf1(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open " + path);
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "DGF1", 4) != 0) throw Error("bad DGF1 magic");
    Grid g;
    g.nx = get_le<std::uint32_t>(is);
    g.nz = get_le<std::uint32_t>(is);
    get_le<std::uint32_t>(is);
    g.data.resize(std::size_t(g.nx) * g.nz);
    for (auto& v : g.data) v = get_le<double>(is);
    return g;
}

} // namespace msurf::out
