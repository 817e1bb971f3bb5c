#pragma once

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gfem {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

/// A boundary face: a point in 1D (nodes[1] == -1), an edge in 2D.
struct BoundaryFace {
    int element = -1;
    std::array<int, 2> nodes{-1, -1};
};

/// Structured interval or tensor-product quadrilateral mesh.
/// Immutable after construction; all queries are safe to call concurrently.
struct Mesh {
    int dim = 1;
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 4>> elements;  // 1D segments use the first two slots
    std::map<std::string, std::vector<int>> boundary_nodes;
    std::map<std::string, std::vector<BoundaryFace>> boundary_faces;
    std::vector<double> h;  // characteristic length per element

    // structured-grid metadata used for point location
    double lx = 0.0, ly = 0.0;
    int nx = 0, ny = 0;

    int n_nodes() const { return static_cast<int>(nodes.size()); }
    int n_elements() const { return static_cast<int>(elements.size()); }
    int nodes_per_element() const { return dim == 1 ? 2 : 4; }

    double element_measure(int e) const;
    double domain_measure() const { return dim == 1 ? lx : lx * ly; }

    bool has_tag(const std::string& tag) const { return boundary_faces.count(tag) > 0; }

    /// Index of the element containing p. Throws std::domain_error outside
    /// the mesh (relative tolerance 1e-12).
    int locate(const Vec2& p) const;
};

struct NodeSupport {
    int node = -1;
    std::set<int> elements;
};

/// n_elems equal segments on [0, length]; endpoints tagged "inflow"/"outflow".
Mesh build_interval_mesh(double length, int n_elems);

/// nx-by-ny grid of quads on [0,lx]x[0,ly]; edges tagged
/// "left"/"right"/"bottom"/"top". Element nodes are counterclockwise.
Mesh build_quad_mesh(double lx, double ly, int nx, int ny);

/// Support of every node: exactly the elements that list it.
std::vector<NodeSupport> node_supports(const Mesh& mesh);

/// Nodes whose support touches any of the tagged boundaries, i.e. all nodes
/// of any element with a face there. Returned sorted. Unknown tags throw.
std::vector<int> select_enriched_nodes(const Mesh& mesh, const std::vector<std::string>& tags);

}  // namespace gfem
