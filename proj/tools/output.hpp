#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace msurf::out {

// Shortest representation that round-trips to the same double.
std::string fmt(double v);

struct Column {
    std::string name;
    std::string unit;   // "1" for dimensionless, "label" for text
};

struct Schema {
    std::string name;
    std::vector<Column> columns;
};

// Registered output schemas; CsvWriter refuses anything else.
const Schema& schema(const std::string& name);
std::vector<std::string> schema_names();

// CSV with a single header row. The header is checked against the schema on
// open and every row width is checked on write.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& schema_name);
    void row(const std::vector<std::string>& cells);
    void close();
    const Schema& schema() const { return schema_; }

private:
    std::ofstream os_;
    Schema schema_;
    std::string path_;
};

// Validates that the first line of a CSV file matches a registered schema.
bool header_matches(const std::string& path, const std::string& schema_name);

// Sidecar JSON: schema name, column units, plus caller-provided extras.
void write_sidecar(const std::string& csv_path, const std::string& schema_name, const nlohmann::json& extra);

// "DGF1" little-endian binary grid: magic, u32 nx, u32 nz, then nx*nz f64
// row-major over x.
void write_dgf1(const std::string& path, std::uint32_t nx, std::uint32_t nz, const std::vector<double>& data);

struct Grid {
    std::uint32_t nx = 0, nz = 0;
    std::vector<double> data;
};
Grid read_dgf1(const std::string& path);

} // namespace msurf::out
