#include "wcso/grid.hpp"

#include <cmath>
#include <string>

#include "wcso/errors.hpp"

namespace wcso {

StructuredMesh::StructuredMesh(const RectDomain& domain, int nx, int ny)
    : domain_(domain), nx_(nx), ny_(ny) {
    if (nx < 1 || ny < 1) {
        throw ValidationError("nx/ny", "cell counts must be positive, got nx=" +
                                           std::to_string(nx) + " ny=" + std::to_string(ny));
    }
    if (!(domain.x0 < domain.x1) || !(domain.y0 < domain.y1)) {
        throw ValidationError("domain", "degenerate rectangle: require x0 < x1 and y0 < y1");
    }
    hx_ = domain.width() / nx;
    hy_ = domain.height() / ny;

    nodes_.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            // Endpoints exact, interior by linear blend: bit-identical for equal inputs.
            double x = (i == nx) ? domain.x1 : domain.x0 + i * hx_;
            double y = (j == ny) ? domain.y1 : domain.y0 + j * hy_;
            nodes_.push_back({x, y});
        }
    }

    triangles_.reserve(2u * nx * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            std::size_t p00 = node_index(i, j);
            std::size_t p10 = node_index(i + 1, j);
            std::size_t p01 = node_index(i, j + 1);
            std::size_t p11 = node_index(i + 1, j + 1);
            // Diagonal p00--p11; both triangles counterclockwise.
            triangles_.push_back({p00, p10, p11});
            triangles_.push_back({p00, p11, p01});
        }
    }

    boundary_mask_.assign(nodes_.size(), false);
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            if (i == 0 || i == nx || j == 0 || j == ny) {
                boundary_mask_[node_index(i, j)] = true;
            }
        }
    }
}

double StructuredMesh::triangle_area(std::size_t t) const {
    const auto& tri = triangles_[t];
    const auto& a = nodes_[tri[0]];
    const auto& b = nodes_[tri[1]];
    const auto& c = nodes_[tri[2]];
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

std::size_t StructuredMesh::boundary_node_count() const {
    std::size_t n = 0;
    for (bool b : boundary_mask_) {
        n += b ? 1 : 0;
    }
    return n;
}

ScalarField::ScalarField(const StructuredMesh& mesh, std::vector<double> values)
    : mesh_(&mesh), values_(std::move(values)) {
    if (values_.size() != mesh.node_count()) {
        throw ValidationError("field", "value count " + std::to_string(values_.size()) +
                                           " does not match node count " +
                                           std::to_string(mesh.node_count()));
    }
}

void ScalarField::check_on(const StructuredMesh& mesh, const char* role) const {
    if (mesh_ == nullptr || !mesh_->same_layout(mesh) || values_.size() != mesh.node_count()) {
        throw ValidationError(role, "field is not defined on the given mesh");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw ValidationError(role, "field contains a non-finite value");
        }
    }
}

StructuredMesh build_mesh(const RectDomain& domain, int nx, int ny) {
    return StructuredMesh(domain, nx, ny);
}

ScalarField interpolate(const StructuredMesh& mesh,
                        const std::function<double(double, double)>& f) {
    ScalarField out(mesh);
    for (std::size_t k = 0; k < mesh.node_count(); ++k) {
        const auto& p = mesh.node(k);
        out[k] = f(p[0], p[1]);
    }
    return out;
}

} // namespace wcso
