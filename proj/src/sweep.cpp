#include "eub/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "eub/admixture.hpp"
#include "eub/channel.hpp"
#include "eub/errors.hpp"
#include "eub/majorization.hpp"
#include "eub/omega.hpp"
#include "eub/scenarios.hpp"

namespace eub {

namespace {

using nlohmann::json;

const std::vector<std::string> kKnownBounds = {
    "deutsch",         "maassen_uffink", "coles_piani",     "liu_b",
    "liu_b_min",       "cyclic_average_I", "admixture",     "H_omega",
    "H_omega_hat",     "H_omega_simple", "entropy_sum_lhs", "shannon_sum",
};

MeasurementBasis basis_from_json(const json& jb, std::size_t which) {
    std::vector<std::vector<cplx>> vectors;
    for (const auto& row : jb) {
        std::vector<cplx> v;
        for (const auto& entry : row) {
            if (entry.is_number())
                v.emplace_back(entry.get<double>(), 0.0);
            else if (entry.is_array() && entry.size() == 2)
                v.emplace_back(entry[0].get<double>(), entry[1].get<double>());
            else
                throw ConfigError("basis " + std::to_string(which) +
                                  ": entries must be numbers or [re, im] pairs");
        }
        vectors.push_back(std::move(v));
    }
    return MeasurementBasis(std::move(vectors));
}

ComplexMatrix matrix_from_json(const json& jm) {
    const std::size_t d = jm.size();
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (jm[i].size() != d) throw ConfigError("state matrix: not square");
        for (std::size_t j = 0; j < d; ++j) {
            const auto& e = jm[i][j];
            if (e.is_number())
                m(i, j) = cplx(e.get<double>(), 0.0);
            else if (e.is_array() && e.size() == 2)
                m(i, j) = cplx(e[0].get<double>(), e[1].get<double>());
            else
                throw ConfigError("state matrix: entries must be numbers or [re, im] pairs");
        }
    }
    return m;
}

ScenarioConfig parse_config(const json& j, const std::string& origin) {
    ScenarioConfig cfg;
    if (!j.contains("scenario")) throw ConfigError(origin + ": missing \"scenario\" section");
    const auto& sc = j.at("scenario");
    const std::string type = sc.value("type", "");
    if (type == "paper_family") {
        cfg.source = ScenarioSource::paper_family;
        cfg.phi = sc.value("phi", 0.0);
        if (sc.contains("a_grid")) {
            const auto& g = sc.at("a_grid");
            if (g.is_array()) {
                for (const auto& x : g) cfg.a_grid.push_back(x.get<double>());
            } else {
                const double start = g.value("start", 0.0);
                const double stop = g.value("stop", 1.0);
                const double step = g.value("step", 0.01);
                if (step <= 0.0) throw ConfigError(origin + ": a_grid.step must be positive");
                const std::size_t count = static_cast<std::size_t>(
                    std::floor((stop - start) / step + 0.5)) + 1;
                for (std::size_t i = 0; i < count; ++i)
                    cfg.a_grid.push_back(std::min(start + step * static_cast<double>(i), stop));
            }
        } else {
            cfg.a_grid = {0.5};
        }
    } else if (type == "explicit") {
        cfg.source = ScenarioSource::explicit_bases;
        if (!sc.contains("bases")) throw ConfigError(origin + ": explicit scenario needs bases");
        std::size_t which = 0;
        for (const auto& jb : sc.at("bases")) cfg.bases.push_back(basis_from_json(jb, which++));
        if (cfg.bases.size() < 2)
            throw ConfigError(origin + ": need at least 2 explicit bases");
    } else if (type == "random") {
        cfg.source = ScenarioSource::random;
        cfg.dim = sc.value("dim", 2);
        cfg.n_meas = sc.value("n", 2);
        cfg.seed = sc.value("seed", 0);
    } else {
        throw ConfigError(origin + ": scenario.type must be paper_family, explicit, or random");
    }

    if (j.contains("state")) {
        const auto& st = j.at("state");
        const std::string stype = st.value("type", "none");
        if (stype == "none")
            cfg.state = StateSource::none;
        else if (stype == "maximally_mixed")
            cfg.state = StateSource::maximally_mixed;
        else if (stype == "pure_random") {
            cfg.state = StateSource::pure_random;
            cfg.state_seed = st.value("seed", 0);
        } else if (stype == "explicit") {
            cfg.state = StateSource::explicit_matrix;
            cfg.state_matrix = DensityMatrix(matrix_from_json(st.at("matrix")));
        } else
            throw ConfigError(origin + ": unknown state.type \"" + stype + "\"");
    }

    if (!j.contains("bounds") || !j.at("bounds").is_array() || j.at("bounds").empty())
        throw ConfigError(origin + ": \"bounds\" must be a nonempty list");
    for (const auto& b : j.at("bounds")) {
        const std::string name = b.get<std::string>();
        bool known = false;
        for (const auto& k : kKnownBounds) known = known || k == name;
        if (!known) throw ConfigError(origin + ": unknown bound identifier \"" + name + "\"");
        cfg.bounds.push_back(name);
    }

    if (j.contains("log_base")) {
        const auto& lb = j.at("log_base");
        if (lb.is_string()) {
            const std::string s = lb.get<std::string>();
            if (s == "e")
                cfg.log_base = std::exp(1.0);
            else if (s == "2")
                cfg.log_base = 2.0;
            else
                throw ConfigError(origin + ": log_base must be 2 or \"e\"");
        } else {
            cfg.log_base = lb.get<double>();
            if (cfg.log_base <= 1.0) throw ConfigError(origin + ": log_base must be > 1");
        }
    }

    cfg.budget = j.value("budget", std::size_t{2'000'000});
    cfg.output = j.value("output", std::string("-"));
    if (j.contains("difference")) {
        for (const auto& b : j.at("difference")) cfg.difference.push_back(b.get<std::string>());
        if (cfg.difference.size() != 2)
            throw ConfigError(origin + ": \"difference\" must name exactly two bounds");
    }
    return cfg;
}

double logb(double x, double base) { return std::log(x) / std::log(base); }

// Per-row bound evaluation with lazy shared omega.
struct RowEval {
    const std::vector<MeasurementBasis>& bases;
    const std::optional<DensityMatrix>& rho;
    double base;
    std::size_t budget;

    std::optional<OmegaResult> omega_cache;
    std::optional<OmegaResult> omega_hat_cache;

    const OmegaResult& omega() {
        if (!omega_cache) omega_cache = compute_omega(bases, budget);
        return *omega_cache;
    }
    const OmegaResult& omega_hat() {
        if (!omega_hat_cache) omega_hat_cache = compute_omega_hat(bases, budget);
        return *omega_hat_cache;
    }

    double pair_c1() const {
        if (bases.size() != 2)
            throw ConfigError("two-measurement bound requested with N != 2");
        return overlap_matrix(bases[0], bases[1]).largest();
    }

    double eval(const std::string& name) {
        if (name == "deutsch") return deutsch_bound(pair_c1(), base);
        if (name == "maassen_uffink") return maassen_uffink_bound(pair_c1(), base);
        if (name == "coles_piani") {
            const auto o = overlap_matrix(bases[0], bases[1]);
            return coles_piani_bound(o.largest(), o.second_largest(), base);
        }
        if (name == "liu_b") return -logb(liu_b(bases), base);
        if (name == "liu_b_min") return -logb(liu_b_min(bases).first, base);
        if (name == "cyclic_average_I") {
            if (!rho) throw ConfigError("cyclic_average_I requires a state");
            return average_I(*rho, bases, AverageMode::cyclic, base);
        }
        if (name == "admixture") return admixture_bound(bases, omega().omega, base);
        if (name == "H_omega") return shannon_entropy(omega().omega.values(), base);
        if (name == "H_omega_hat") return shannon_entropy(omega_hat().omega.values(), base);
        if (name == "H_omega_simple")
            return shannon_entropy(omega_simple(bases, budget).values(), base);
        if (name == "shannon_sum" || name == "entropy_sum_lhs") {
            if (!rho) throw ConfigError(name + " requires a state");
            double h = 0.0;
            for (const auto& b : bases)
                h += shannon_entropy(born_probabilities(*rho, b).values(), base);
            if (name == "shannon_sum") return h;
            return h + (1.0 - static_cast<double>(bases.size())) * von_neumann_entropy(*rho, base);
        }
        throw ConfigError("unknown bound identifier \"" + name + "\"");
    }
};

std::optional<DensityMatrix> make_state(const ScenarioConfig& cfg, std::size_t dim) {
    switch (cfg.state) {
        case StateSource::none:
            return std::nullopt;
        case StateSource::maximally_mixed: {
            ComplexMatrix m(dim, dim);
            for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
            return DensityMatrix(std::move(m));
        }
        case StateSource::pure_random:
            return random_state(dim, 1, cfg.state_seed);
        case StateSource::explicit_matrix:
            if (cfg.state_matrix->dim() != dim)
                throw ConfigError("explicit state dimension does not match the bases");
            return cfg.state_matrix;
    }
    return std::nullopt;
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return parse_config(j, origin);
}

ScenarioConfig ScenarioConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), path);
}

Table run_compare(const ScenarioConfig& cfg) {
    Table t;
    const bool sweep = cfg.source == ScenarioSource::paper_family;
    t.columns.push_back(sweep ? "a" : "index");
    for (const auto& b : cfg.bounds) t.columns.push_back(b);
    if (!cfg.difference.empty())
        t.columns.push_back(cfg.difference[0] + "_minus_" + cfg.difference[1]);

    std::vector<std::vector<MeasurementBasis>> grid;
    std::vector<double> xs;
    if (sweep) {
        for (double a : cfg.a_grid) {
            grid.push_back(paper_three_measurements(a, cfg.phi));
            xs.push_back(a);
        }
    } else if (cfg.source == ScenarioSource::explicit_bases) {
        grid.push_back(cfg.bases);
        xs.push_back(0.0);
    } else {
        std::vector<MeasurementBasis> bs;
        for (std::size_t m = 0; m < cfg.n_meas; ++m)
            bs.push_back(random_basis(cfg.dim, cfg.seed + m));
        grid.push_back(std::move(bs));
        xs.push_back(0.0);
    }

    for (std::size_t r = 0; r < grid.size(); ++r) {
        const auto& bases = grid[r];
        const std::optional<DensityMatrix> rho = make_state(cfg, bases.front().dim());
        RowEval ev{bases, rho, cfg.log_base, cfg.budget, {}, {}};
        std::vector<double> row;
        row.push_back(xs[r]);
        std::map<std::string, double> computed;
        for (const auto& name : cfg.bounds) {
            const double v = ev.eval(name);
            computed[name] = v;
            row.push_back(v);
        }
        if (!cfg.difference.empty()) {
            for (const auto& name : cfg.difference)
                if (!computed.count(name)) computed[name] = ev.eval(name);
            row.push_back(computed[cfg.difference[0]] - computed[cfg.difference[1]]);
        }
        t.rows.push_back(std::move(row));
    }

    t.notes.push_back("log_base=" + std::to_string(cfg.log_base));
    for (const auto& b : cfg.bounds)
        if (b == "liu_b_min")
            t.notes.push_back(
                "liu_b_min is the symmetrized channel baseline (orbit minimum of b), used in "
                "place of the unavailable closed-form symmetrized bound");
    if (!grid.empty() && grid.front().size() == 2)
        for (const auto& b : cfg.bounds)
            if (b == "admixture")
                t.notes.push_back("admixture with N=2 is an extension beyond the derived N=3 case");
    return t;
}

void emit_csv(const Table& table, std::ostream& os) {
    for (const auto& n : table.notes) os << "# " << n << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
    char buf[64];
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
            os << buf << (c + 1 < row.size() ? "," : "\n");
        }
    }
}

void emit_csv_file(const Table& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    emit_csv(table, out);
    if (!out) throw std::runtime_error("write failure: " + path);
}

Table parse_csv(std::istream& is) {
    Table t;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            t.notes.push_back(line.size() > 2 ? line.substr(2) : "");
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        if (!have_header) {
            while (std::getline(ss, cell, ',')) t.columns.push_back(cell);
            have_header = true;
        } else {
            std::vector<double> row;
            while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

void emit_svg_lines(const Table& table, std::ostream& os, const std::string& y_label) {
    if (table.rows.empty() || table.columns.size() < 2)
        throw std::runtime_error("emit_svg_lines: nonempty table with at least one series needed");
    const double width = 800, height = 500, ml = 70, mr = 160, mt = 30, mb = 50;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = table.rows.front()[0], xmax = xmin;
    double ymin = table.rows.front()[1], ymax = ymin;
    for (const auto& row : table.rows) {
        xmin = std::min(xmin, row[0]);
        xmax = std::max(xmax, row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            ymin = std::min(ymin, row[c]);
            ymax = std::max(ymax, row[c]);
        }
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    static const char* palette[] = {"#2ca02c", "#1f77b4", "#d62728", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
       << mt + ph << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
       << "\" stroke=\"black\"/>\n";

    char buf[64];
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double yv = ymin + (ymax - ymin) * i / 5.0;
        std::snprintf(buf, sizeof(buf), "%.3g", xv);
        os << "<text x=\"" << px(xv) << "\" y=\"" << mt + ph + 20
           << "\" font-size=\"12\" text-anchor=\"middle\">" << buf << "</text>\n";
        std::snprintf(buf, sizeof(buf), "%.3g", yv);
        os << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
           << "\" font-size=\"12\" text-anchor=\"end\">" << buf << "</text>\n";
        os << "<line x1=\"" << ml - 4 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml << "\" y2=\""
           << py(yv) << "\" stroke=\"black\"/>\n";
        os << "<line x1=\"" << px(xv) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(xv)
           << "\" y2=\"" << mt + ph + 4 << "\" stroke=\"black\"/>\n";
    }
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 10
       << "\" font-size=\"14\" text-anchor=\"middle\">" << table.columns[0] << "</text>\n";
    os << "<text x=\"18\" y=\"" << mt + ph / 2
       << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << mt + ph / 2
       << ")\">" << y_label << "</text>\n";

    for (std::size_t c = 1; c < table.columns.size(); ++c) {
        const char* color = palette[(c - 1) % 8];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& row : table.rows) os << px(row[0]) << "," << py(row[c]) << " ";
        os << "\"/>\n";
        const double ly = mt + 16.0 * static_cast<double>(c);
        os << "<line x1=\"" << ml + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << ml + pw + 34
           << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << ml + pw + 40 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
           << table.columns[c] << "</text>\n";
    }
    os << "</svg>\n";
}

void emit_svg_file(const Table& table, const std::string& path, const std::string& y_label) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    emit_svg_lines(table, out, y_label);
    if (!out) throw std::runtime_error("write failure: " + path);
}

}  // namespace eub
