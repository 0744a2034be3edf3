#ifndef WCSO_GRID_HPP
#define WCSO_GRID_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace wcso {

// Axis-aligned rectangle [x0,x1] x [y0,y1] with positive area.
struct RectDomain {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 1.0;
    double y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }

    bool operator==(const RectDomain&) const = default;
};

// P1 triangulation of a rectangle on a tensor grid of nx-by-ny cells.
// Every cell is split along its lower-left to upper-right diagonal, so the
// assembled Laplacian reduces to the 5-point stencil on square cells.
// Node (i,j) has index j*(nx+1)+i; with this diagonal the lower-left and
// upper-right corner nodes touch 2 triangles, the other two corners touch 1.
class StructuredMesh {
public:
    StructuredMesh(const RectDomain& domain, int nx, int ny);

    const RectDomain& domain() const { return domain_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double hx() const { return hx_; }
    double hy() const { return hy_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t triangle_count() const { return triangles_.size(); }

    std::size_t node_index(int i, int j) const {
        return static_cast<std::size_t>(j) * (nx_ + 1) + i;
    }
    const std::array<double, 2>& node(std::size_t k) const { return nodes_[k]; }
    const std::array<std::size_t, 3>& triangle(std::size_t t) const { return triangles_[t]; }
    double triangle_area(std::size_t t) const;

    bool is_boundary(std::size_t k) const { return boundary_mask_[k]; }
    const std::vector<bool>& boundary_mask() const { return boundary_mask_; }
    std::size_t boundary_node_count() const;

    bool same_layout(const StructuredMesh& other) const {
        return domain_ == other.domain_ && nx_ == other.nx_ && ny_ == other.ny_;
    }

private:
    RectDomain domain_;
    int nx_;
    int ny_;
    double hx_;
    double hy_;
    std::vector<std::array<double, 2>> nodes_;
    std::vector<std::array<std::size_t, 3>> triangles_;
    std::vector<bool> boundary_mask_;
};

// Nodal values over a mesh. One value per node; used for u, f, V, w and g.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const StructuredMesh& mesh, double fill = 0.0)
        : mesh_(&mesh), values_(mesh.node_count(), fill) {}
    ScalarField(const StructuredMesh& mesh, std::vector<double> values);

    const StructuredMesh& mesh() const { return *mesh_; }
    bool attached() const { return mesh_ != nullptr; }

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    double& operator[](std::size_t k) { return values_[k]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    // Throws ValidationError unless the field lives on `mesh` and is finite.
    void check_on(const StructuredMesh& mesh, const char* role) const;

private:
    const StructuredMesh* mesh_ = nullptr;
    std::vector<double> values_;
};

StructuredMesh build_mesh(const RectDomain& domain, int nx, int ny);

// Samples a pointwise descriptor f(x,y) at every node.
ScalarField interpolate(const StructuredMesh& mesh,
                        const std::function<double(double, double)>& f);

} // namespace wcso

#endif
