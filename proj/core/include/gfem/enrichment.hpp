#pragma once

#include <memory>
#include <vector>

#include "gfem/mesh.hpp"
#include "gfem/problem.hpp"

namespace gfem {

struct SampledField;  // field.hpp

/// Enrichment families. With gamma the advection-to-diffusion ratio along
/// the flow, Ha(x) = exp(gamma x) has the raw exponential character of the
/// boundary layer; Hb(x) = 1 - (1 - exp(gamma x)) / (1 - exp(gamma)) is its
/// normalization that vanishes at the outflow end x = 1; Hc(x) = 1 - x^gamma
/// is a polynomial stand-in that stays well defined for extreme gamma.
/// Hb2(x, y) = Hb(x) Hb(y) extends Hb to tensor-product layers, and
/// GlobalLocalField evaluates a previously computed solution (continuation).
enum class EnrichmentFamily { None, Ha, Hb, Hc, Hb2, GlobalLocalField };

struct EnrichmentSpec {
    EnrichmentFamily family = EnrichmentFamily::None;
    double gamma = 0.0;
    double scale = 1.0;  // multiplies H; the solution space and tau are scale-invariant
    std::vector<int> nodes;  // enriched node set J, sorted ascending
    std::shared_ptr<const SampledField> carrier;  // GlobalLocalField only

    bool enriched(int node) const;
    /// Position of node within the sorted set J; -1 if not enriched.
    int rank(int node) const;
    /// gamma > 0 for the exponential families, carrier present for
    /// GlobalLocalField, nodes sorted and unique.
    void validate() const;
};

struct EnrichmentValue {
    double value = 0.0;
    Vec2 gradient{};
};

/// H(x) and its spatial gradient at a global physical point. The
/// exponential families are rewritten for gamma > 30 so that every
/// exponent stays non-positive on the unit domain; an argument that would
/// still exceed exp(700) raises OverflowGuardError suggesting Hc.
EnrichmentValue eval_enrichment(const EnrichmentSpec& spec, const Vec2& x);

/// Default gamma: reference flow speed over kappa.
double default_gamma(const ProblemSpec& problem);

const char* family_name(EnrichmentFamily family);

}  // namespace gfem
