#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eub/quantum.hpp"

namespace eub {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> notes;  // emitted as comment lines ahead of the header
};

enum class ScenarioSource { paper_family, explicit_bases, random };
enum class StateSource { none, maximally_mixed, pure_random, explicit_matrix };

struct ScenarioConfig {
    ScenarioSource source = ScenarioSource::paper_family;

    // paper_family
    std::vector<double> a_grid;
    double phi = 0.0;

    // explicit
    std::vector<MeasurementBasis> bases;

    // random
    std::size_t dim = 2;
    std::size_t n_meas = 2;
    std::uint64_t seed = 0;

    StateSource state = StateSource::none;
    std::uint64_t state_seed = 0;
    std::optional<DensityMatrix> state_matrix;

    std::vector<std::string> bounds;
    double log_base = 2.0;
    std::size_t budget = 2'000'000;
    std::string output = "-";

    // Optional derived column: difference[0] minus difference[1].
    std::vector<std::string> difference;

    static ScenarioConfig from_json_file(const std::string& path);
    static ScenarioConfig from_json_text(const std::string& text, const std::string& origin);
};

Table run_compare(const ScenarioConfig& config);

void emit_csv(const Table& table, std::ostream& os);
void emit_csv_file(const Table& table, const std::string& path);
Table parse_csv(std::istream& is);

void emit_svg_lines(const Table& table, std::ostream& os, const std::string& y_label);
void emit_svg_file(const Table& table, const std::string& path, const std::string& y_label);

}  // namespace eub
