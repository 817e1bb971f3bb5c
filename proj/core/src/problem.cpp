#include "gfem/problem.hpp"

#include <set>
#include <stdexcept>

namespace gfem {

void ProblemSpec::validate(const Mesh& mesh) const {
    if (!(kappa > 0.0)) throw std::invalid_argument("ProblemSpec: kappa must be positive");
    std::set<std::string> dir_tags;
    for (const auto& [tag, value] : dirichlet) {
        (void)value;
        if (!mesh.has_tag(tag)) throw std::invalid_argument("ProblemSpec: unknown Dirichlet tag '" + tag + "'");
        dir_tags.insert(tag);
    }
    for (const auto& [tag, value] : neumann) {
        (void)value;
        if (!mesh.has_tag(tag)) throw std::invalid_argument("ProblemSpec: unknown Neumann tag '" + tag + "'");
        if (dir_tags.count(tag))
            throw std::invalid_argument("ProblemSpec: tag '" + tag + "' appears in both Dirichlet and Neumann lists");
    }
}

}  // namespace gfem
