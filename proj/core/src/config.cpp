#include "gfem/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gfem/diagnostics.hpp"
#include "gfem/errors.hpp"

namespace gfem {

double RunConfig::report_peclet() const {
    return element_peclet(problem.alpha.reference_speed(problem.ly), mesh_spacing(), problem.kappa);
}

std::vector<std::string> preset_names() {
    return {"ad1d", "ad2d_square", "ad1d_gl", "ad2d_gl", "thermal_bl"};
}

RunConfig preset(const std::string& name) {
    RunConfig c;
    c.preset_name = name;

    if (name == "ad1d") {
        c.problem.dim = 1;
        c.problem.lx = 1.0;
        c.problem.alpha = AdvectionField::constant({1.0, 0.0});
        c.problem.kappa = 0.005;
        c.problem.source = 1.0;
        c.problem.dirichlet = {{"inflow", 0.0}, {"outflow", 0.0}};
        c.mesh_nx = 6;
        c.family = EnrichmentFamily::Hb;
        c.enrich_tags = {"outflow"};
        c.bc = BcMode::strong();
        return c;
    }
    if (name == "ad2d_square") {
        c.problem.dim = 2;
        c.problem.lx = c.problem.ly = 1.0;
        const double s = 1.0 / std::sqrt(2.0);
        c.problem.alpha = AdvectionField::constant({s, s});
        c.problem.kappa = 1.0 / 700.0;  // Pe^h = 35 on the 10x10 grid
        c.problem.source = 1.0;
        c.problem.dirichlet = {{"left", 0.0}, {"right", 0.0}, {"bottom", 0.0}, {"top", 0.0}};
        c.mesh_nx = c.mesh_ny = 10;
        c.family = EnrichmentFamily::Hb2;
        c.enrich_tags = {"right", "top"};
        c.bc = BcMode::strong();
        c.line_y = 0.5;
        return c;
    }
    if (name == "ad1d_gl") {
        c = preset("ad1d");
        c.preset_name = name;
        c.family = EnrichmentFamily::GlobalLocalField;
        c.continuation = true;
        c.plan = {1.0, 3.0, 8};
        c.problem.kappa = (1.0 / 6.0) / (2.0 * c.plan.pe_end);  // kappa at the target Pe
        return c;
    }
    if (name == "ad2d_gl") {
        c = preset("ad2d_square");
        c.preset_name = name;
        c.family = EnrichmentFamily::GlobalLocalField;
        c.continuation = true;
        c.plan = {1.0, 7.0, 8};
        c.problem.kappa = 0.1 / (2.0 * c.plan.pe_end);
        c.bc = BcMode::weak_penalty(1e6);
        return c;
    }
    if (name == "thermal_bl") {
        c.problem.dim = 2;
        c.problem.lx = c.problem.ly = 1.0;
        c.problem.alpha = AdvectionField::couette();
        c.problem.kappa = 1.0 / 700.0;  // global Pe 700, Pe^h = 25 at the top plate
        c.problem.source = 0.0;
        c.problem.dirichlet = {{"top", 1.0}, {"left", 0.0}, {"bottom", 0.0}, {"right", 0.0}};
        c.mesh_nx = c.mesh_ny = 14;
        c.family = EnrichmentFamily::Hc;
        c.enrich_tags = {"right"};
        c.bc = BcMode::weak_penalty(1e10);
        c.line_y = 0.75;
        return c;
    }

    std::string names;
    for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown preset '" + name + "'; valid presets: " + names);
}

namespace {

double parse_number(const std::string& value, int line) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" + value + "'");
    }
    if (pos != value.size())
        throw ConfigError("line " + std::to_string(line) + ": trailing characters in number '" + value + "'");
    return v;
}

bool parse_bool(const std::string& value, int line) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("line " + std::to_string(line) + ": expected true/false, got '" + value + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return parts;
}

std::vector<std::pair<std::string, double>> parse_tag_values(const std::string& value, int line) {
    std::vector<std::pair<std::string, double>> out;
    for (const std::string& item : split(value, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected tag:value, got '" + item + "'");
        out.emplace_back(item.substr(0, colon), parse_number(item.substr(colon + 1), line));
    }
    return out;
}

EnrichmentFamily parse_family(const std::string& value, int line) {
    if (value == "none") return EnrichmentFamily::None;
    if (value == "ha") return EnrichmentFamily::Ha;
    if (value == "hb") return EnrichmentFamily::Hb;
    if (value == "hc") return EnrichmentFamily::Hc;
    if (value == "hb2") return EnrichmentFamily::Hb2;
    if (value == "global-local") return EnrichmentFamily::GlobalLocalField;
    throw ConfigError("line " + std::to_string(line) +
                      ": enrichment.family must be one of none|ha|hb|hc|hb2|global-local");
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw IoError("cannot open config file '" + path + "'");

    RunConfig c;
    c.problem.dim = 1;
    std::vector<std::string> unknown;
    std::string raw;
    int line = 0;
    bool saw_ny = false;

    while (std::getline(stream, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string text = hash == std::string::npos ? raw : raw.substr(0, hash);
        const auto begin = text.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = text.find_last_not_of(" \t\r");
        text = text.substr(begin, end - begin + 1);

        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected key = value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        if (key == "problem.dim") {
            const double d = parse_number(value, line);
            if (d != 1 && d != 2) throw ConfigError("problem.dim must be 1 or 2");
            c.problem.dim = static_cast<int>(d);
        } else if (key == "problem.lx") {
            c.problem.lx = parse_number(value, line);
        } else if (key == "problem.ly") {
            c.problem.ly = parse_number(value, line);
        } else if (key == "problem.alpha") {
            if (value == "couette") {
                c.problem.alpha = AdvectionField::couette();
            } else {
                std::stringstream vs(value);
                double ax = 0, ay = 0;
                if (!(vs >> ax)) throw ConfigError("line " + std::to_string(line) + ": bad alpha '" + value + "'");
                vs >> ay;
                c.problem.alpha = AdvectionField::constant({ax, ay});
            }
        } else if (key == "problem.kappa") {
            c.problem.kappa = parse_number(value, line);
            if (!(c.problem.kappa > 0.0)) throw ConfigError("problem.kappa: kappa must be positive");
        } else if (key == "problem.source") {
            c.problem.source = parse_number(value, line);
        } else if (key == "problem.dirichlet") {
            c.problem.dirichlet = parse_tag_values(value, line);
        } else if (key == "problem.neumann") {
            c.problem.neumann = parse_tag_values(value, line);
        } else if (key == "mesh.n" || key == "mesh.nx") {
            c.mesh_nx = static_cast<int>(parse_number(value, line));
        } else if (key == "mesh.ny") {
            c.mesh_ny = static_cast<int>(parse_number(value, line));
            saw_ny = true;
        } else if (key == "enrichment.family") {
            c.family = parse_family(value, line);
        } else if (key == "enrichment.gamma") {
            c.gamma = value == "auto" ? 0.0 : parse_number(value, line);
            if (c.gamma < 0.0) throw ConfigError("enrichment.gamma: gamma must be positive or auto");
        } else if (key == "enrichment.tags") {
            c.enrich_tags = split(value, ',');
        } else if (key == "bc.mode") {
            if (value == "strong")
                c.bc = BcMode::strong();
            else if (value == "weak")
                c.bc = BcMode{BcMode::Kind::WeakPenalty, c.bc.lambda > 0 ? c.bc.lambda : 1e10};
            else
                throw ConfigError("line " + std::to_string(line) + ": bc.mode must be strong or weak");
        } else if (key == "bc.lambda") {
            const double lambda = parse_number(value, line);
            if (!(lambda > 0.0)) throw ConfigError("bc.lambda: lambda must be positive");
            if (c.bc.kind == BcMode::Kind::WeakPenalty)
                c.bc = BcMode::weak_penalty(lambda);
            else
                c.bc.lambda = lambda;
        } else if (key == "continuation.enabled") {
            c.continuation = parse_bool(value, line);
        } else if (key == "continuation.pe_start") {
            c.plan.pe_start = parse_number(value, line);
        } else if (key == "continuation.pe_end") {
            c.plan.pe_end = parse_number(value, line);
        } else if (key == "continuation.steps") {
            c.plan.n_steps = static_cast<int>(parse_number(value, line));
        } else if (key == "output.dir") {
            c.out_dir = value;
        } else if (key == "output.emit_tau") {
            c.emit_tau = parse_bool(value, line);
        } else if (key == "output.line_y") {
            c.line_y = parse_number(value, line);
        } else {
            unknown.push_back(key);
        }
    }

    if (!unknown.empty()) {
        std::string keys;
        for (const auto& k : unknown) keys += (keys.empty() ? "" : ", ") + k;
        throw ConfigError("unknown config keys: " + keys);
    }
    if (c.problem.dim == 2 && !saw_ny) c.mesh_ny = c.mesh_nx;
    validate(c);
    return c;
}

void validate(const RunConfig& c) {
    if (!(c.problem.kappa > 0.0)) throw ConfigError("kappa must be positive");
    if (c.mesh_nx < 1) throw ConfigError("mesh.nx must be >= 1");
    if (c.problem.dim == 2 && c.mesh_ny < 1) throw ConfigError("mesh.ny must be >= 1");
    if (c.gamma < 0.0) throw ConfigError("gamma must be positive or auto");
    if (c.bc.kind == BcMode::Kind::WeakPenalty && !(c.bc.lambda > 0.0))
        throw ConfigError("bc.lambda must be positive in weak mode");
    if (c.continuation) {
        if (c.plan.pe_end < c.plan.pe_start) throw ConfigError("continuation.pe_end must be >= pe_start");
        if (c.plan.n_steps < 1) throw ConfigError("continuation.steps must be >= 1");
    }
    if (c.family != EnrichmentFamily::None && c.enrich_tags.empty())
        throw ConfigError("enrichment.tags must name at least one boundary for family " +
                          std::string(family_name(c.family)));

    // Ha never vanishes on the boundary, so strong enforcement is rejected
    // as soon as the enriched boundary carries Dirichlet data.
    if (c.family == EnrichmentFamily::Ha && c.bc.kind == BcMode::Kind::Strong) {
        std::set<std::string> dir_tags;
        for (const auto& [tag, v] : c.problem.dirichlet) {
            (void)v;
            dir_tags.insert(tag);
        }
        for (const auto& tag : c.enrich_tags)
            if (dir_tags.count(tag))
                throw ModeConflictError(
                    "config: enrichment ha with bc.mode=strong conflicts on boundary '" + tag +
                    "'; use bc.mode=weak");
    }
}

}  // namespace gfem
