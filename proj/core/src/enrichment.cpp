#include "gfem/enrichment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gfem/errors.hpp"
#include "gfem/field.hpp"

namespace gfem {

namespace {

constexpr double kMaxExpArg = 700.0;  // exp(709) overflows a double

void guard_exp(double arg, const char* family) {
    if (arg > kMaxExpArg)
        throw OverflowGuardError(std::string(family) + ": exp argument " + std::to_string(arg) +
                                 " exceeds the overflow guard; use the polynomial enrichment Hc instead");
}

// Hb along one axis: value and d/ds at s, exponents kept non-positive for
// large gamma so that s in [0,1] never overflows.
std::pair<double, double> hb_1d(double gamma, double s) {
    if (gamma <= 30.0) {
        guard_exp(gamma * s, "Hb");
        const double denom = std::expm1(gamma);
        const double v = 1.0 - std::expm1(gamma * s) / denom;
        const double g = -gamma * std::exp(gamma * s) / denom;
        return {v, g};
    }
    guard_exp(gamma * (s - 1.0), "Hb");
    const double em = std::exp(gamma * (s - 1.0));
    const double den = -std::expm1(-gamma);  // 1 - exp(-gamma)
    const double v = 1.0 - (em - std::exp(-gamma)) / den;
    const double g = -gamma * em / den;
    return {v, g};
}

}  // namespace

bool EnrichmentSpec::enriched(int node) const { return rank(node) >= 0; }

int EnrichmentSpec::rank(int node) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
    if (it == nodes.end() || *it != node) return -1;
    return static_cast<int>(it - nodes.begin());
}

void EnrichmentSpec::validate() const {
    if (!std::is_sorted(nodes.begin(), nodes.end()) ||
        std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw std::invalid_argument("EnrichmentSpec: node set J must be sorted and unique");
    switch (family) {
        case EnrichmentFamily::None:
            break;
        case EnrichmentFamily::Ha:
        case EnrichmentFamily::Hb:
        case EnrichmentFamily::Hc:
        case EnrichmentFamily::Hb2:
            if (!(gamma > 0.0))
                throw std::invalid_argument(std::string("EnrichmentSpec: ") + family_name(family) +
                                            " requires gamma > 0");
            break;
        case EnrichmentFamily::GlobalLocalField:
            if (!carrier)
                throw std::invalid_argument("EnrichmentSpec: GlobalLocalField requires a carrier field");
            break;
    }
}

EnrichmentValue eval_enrichment(const EnrichmentSpec& spec, const Vec2& x) {
    EnrichmentValue v = eval_enrichment_unscaled(spec, x);
    if (spec.scale != 1.0) {
        v.value *= spec.scale;
        v.gradient = spec.scale * v.gradient;
    }
    return v;
}

EnrichmentValue eval_enrichment_unscaled(const EnrichmentSpec& spec, const Vec2& x) {
    switch (spec.family) {
        case EnrichmentFamily::None:
            return {0.0, {}};
        case EnrichmentFamily::Ha: {
            if (!(spec.gamma > 0.0)) throw std::invalid_argument("Ha requires gamma > 0");
            guard_exp(spec.gamma * x.x, "Ha");
            const double v = std::exp(spec.gamma * x.x);
            return {v, {spec.gamma * v, 0.0}};
        }
        case EnrichmentFamily::Hb: {
            if (!(spec.gamma > 0.0)) throw std::invalid_argument("Hb requires gamma > 0");
            auto [v, g] = hb_1d(spec.gamma, x.x);
            return {v, {g, 0.0}};
        }
        case EnrichmentFamily::Hc: {
            if (!(spec.gamma > 0.0)) throw std::invalid_argument("Hc requires gamma > 0");
            if (x.x < 0.0 && spec.gamma != std::floor(spec.gamma))
                throw std::domain_error("Hc: x^gamma undefined for x < 0 with non-integer gamma");
            const double v = 1.0 - std::pow(x.x, spec.gamma);
            const double g = -spec.gamma * std::pow(x.x, spec.gamma - 1.0);
            return {v, {x.x == 0.0 && spec.gamma > 1.0 ? 0.0 : g, 0.0}};
        }
        case EnrichmentFamily::Hb2: {
            if (!(spec.gamma > 0.0)) throw std::invalid_argument("Hb2 requires gamma > 0");
            auto [vx, gx] = hb_1d(spec.gamma, x.x);
            auto [vy, gy] = hb_1d(spec.gamma, x.y);
            return {vx * vy, {gx * vy, vx * gy}};
        }
        case EnrichmentFamily::GlobalLocalField: {
            if (!spec.carrier) throw std::invalid_argument("GlobalLocalField requires a carrier field");
            return {spec.carrier->value(x), spec.carrier->gradient(x)};
        }
    }
    throw std::logic_error("eval_enrichment: unknown family");
}

EnrichmentValue eval_enrichment(const EnrichmentSpec& spec, const Vec2& x);

double default_gamma(const ProblemSpec& problem) {
    return problem.alpha.reference_speed(problem.ly) / problem.kappa;
}

const char* family_name(EnrichmentFamily family) {
    switch (family) {
        case EnrichmentFamily::None: return "none";
        case EnrichmentFamily::Ha: return "Ha";
        case EnrichmentFamily::Hb: return "Hb";
        case EnrichmentFamily::Hc: return "Hc";
        case EnrichmentFamily::Hb2: return "Hb2";
        case EnrichmentFamily::GlobalLocalField: return "global-local";
    }
    return "?";
}

}  // namespace gfem
