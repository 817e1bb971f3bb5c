#include "gfem/mesh.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfem {

double Mesh::element_measure(int e) const {
    const auto& el = elements.at(e);
    if (dim == 1) {
        return std::abs(nodes[el[1]].x - nodes[el[0]].x);
    }
    // shoelace formula, counterclockwise quad
    double a = 0.0;
    for (int k = 0; k < 4; ++k) {
        const Vec2& p = nodes[el[k]];
        const Vec2& q = nodes[el[(k + 1) % 4]];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
}

int Mesh::locate(const Vec2& p) const {
    const double tolx = 1e-12 * std::max(1.0, lx);
    if (p.x < -tolx || p.x > lx + tolx)
        throw std::domain_error("point outside mesh: x = " + std::to_string(p.x));
    const double hx = lx / nx;
    int ix = std::clamp(static_cast<int>(std::floor(p.x / hx)), 0, nx - 1);
    if (dim == 1) return ix;

    const double toly = 1e-12 * std::max(1.0, ly);
    if (p.y < -toly || p.y > ly + toly)
        throw std::domain_error("point outside mesh: y = " + std::to_string(p.y));
    const double hy = ly / ny;
    int iy = std::clamp(static_cast<int>(std::floor(p.y / hy)), 0, ny - 1);
    return iy * nx + ix;
}

Mesh build_interval_mesh(double length, int n_elems) {
    if (n_elems < 1) throw std::invalid_argument("build_interval_mesh: n_elems must be >= 1");
    if (!(length > 0.0)) throw std::invalid_argument("build_interval_mesh: length must be > 0");

    Mesh m;
    m.dim = 1;
    m.lx = length;
    m.nx = n_elems;
    m.ny = 0;

    const double he = length / n_elems;
    m.nodes.resize(n_elems + 1);
    for (int i = 0; i <= n_elems; ++i) m.nodes[i] = {i * length / n_elems, 0.0};

    m.elements.resize(n_elems);
    m.h.assign(n_elems, he);
    for (int e = 0; e < n_elems; ++e) m.elements[e] = {e, e + 1, -1, -1};

    m.boundary_nodes["inflow"] = {0};
    m.boundary_nodes["outflow"] = {n_elems};
    m.boundary_faces["inflow"] = {BoundaryFace{0, {0, -1}}};
    m.boundary_faces["outflow"] = {BoundaryFace{n_elems - 1, {n_elems, -1}}};
    return m;
}

Mesh build_quad_mesh(double lx, double ly, int nx, int ny) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("build_quad_mesh: nx and ny must be >= 1");
    if (!(lx > 0.0) || !(ly > 0.0)) throw std::invalid_argument("build_quad_mesh: side lengths must be > 0");

    Mesh m;
    m.dim = 2;
    m.lx = lx;
    m.ly = ly;
    m.nx = nx;
    m.ny = ny;

    const double hx = lx / nx;
    const double hy = ly / ny;
    m.nodes.resize((nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i) m.nodes[j * (nx + 1) + i] = {i * lx / nx, j * ly / ny};

    auto nid = [nx](int i, int j) { return j * (nx + 1) + i; };

    m.elements.resize(nx * ny);
    m.h.assign(nx * ny, std::max(hx, hy));
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            m.elements[j * nx + i] = {nid(i, j), nid(i + 1, j), nid(i + 1, j + 1), nid(i, j + 1)};

    auto& bn = m.boundary_nodes;
    for (int j = 0; j <= ny; ++j) {
        bn["left"].push_back(nid(0, j));
        bn["right"].push_back(nid(nx, j));
    }
    for (int i = 0; i <= nx; ++i) {
        bn["bottom"].push_back(nid(i, 0));
        bn["top"].push_back(nid(i, ny));
    }

    auto& bf = m.boundary_faces;
    for (int j = 0; j < ny; ++j) {
        bf["left"].push_back(BoundaryFace{j * nx, {nid(0, j), nid(0, j + 1)}});
        bf["right"].push_back(BoundaryFace{j * nx + nx - 1, {nid(nx, j), nid(nx, j + 1)}});
    }
    for (int i = 0; i < nx; ++i) {
        bf["bottom"].push_back(BoundaryFace{i, {nid(i, 0), nid(i + 1, 0)}});
        bf["top"].push_back(BoundaryFace{(ny - 1) * nx + i, {nid(i, ny), nid(i + 1, ny)}});
    }
    return m;
}

std::vector<NodeSupport> node_supports(const Mesh& mesh) {
    std::vector<NodeSupport> supports(mesh.n_nodes());
    for (int i = 0; i < mesh.n_nodes(); ++i) supports[i].node = i;
    for (int e = 0; e < mesh.n_elements(); ++e)
        for (int k = 0; k < mesh.nodes_per_element(); ++k)
            supports[mesh.elements[e][k]].elements.insert(e);
    return supports;
}

std::vector<int> select_enriched_nodes(const Mesh& mesh, const std::vector<std::string>& tags) {
    std::set<int> result;
    for (const auto& tag : tags) {
        auto it = mesh.boundary_faces.find(tag);
        if (it == mesh.boundary_faces.end())
            throw std::invalid_argument("select_enriched_nodes: unknown boundary tag '" + tag + "'");
        for (const BoundaryFace& face : it->second)
            for (int k = 0; k < mesh.nodes_per_element(); ++k)
                result.insert(mesh.elements[face.element][k]);
    }
    return {result.begin(), result.end()};
}

}  // namespace gfem
