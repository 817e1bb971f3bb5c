#pragma once

#include <stdexcept>
#include <string>

namespace gfem {

/// Raised when an exponential enrichment would overflow double precision
/// (any intermediate beyond exp(700)). The message names a safer family.
struct OverflowGuardError : std::domain_error {
    explicit OverflowGuardError(const std::string& what) : std::domain_error(what) {}
};

/// Strong Dirichlet enforcement requested with an enrichment that does not
/// vanish on the Dirichlet boundary.
struct ModeConflictError : std::invalid_argument {
    explicit ModeConflictError(const std::string& what) : std::invalid_argument(what) {}
};

struct AssemblyError : std::runtime_error {
    explicit AssemblyError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularSystemError : std::runtime_error {
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateEnrichmentError : std::runtime_error {
    explicit DegenerateEnrichmentError(const std::string& what) : std::runtime_error(what) {}
};

/// Config-file parse or schema violation; message carries line number or key.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gfem
