#pragma once

#include "shoms/tensor.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shoms {

/// Side bits used in TriMesh::side_tags.
enum Side : std::uint8_t {
    kBottom = 1,
    kRight = 2,
    kTop = 4,
    kLeft = 8,
};
inline constexpr std::array<Side, 4> kAllSides{kBottom, kRight, kTop, kLeft};

/// Returns the zero-based position of a side bit (bottom=0 .. left=3).
int side_index(Side s);

struct BoundaryEdge {
    int a;
    int b;
    Side side;
};

/// Regular grid bookkeeping kept by every mesh this toolkit builds. Squares are
/// split along a diagonal whose direction is mirrored across the midlines of each
/// `period` x `period` block, which keeps blocks reflection-symmetric for even periods.
struct GridInfo {
    int nx = 0;
    int ny = 0;
    double x0 = 0.0;
    double y0 = 0.0;
    double hx = 0.0;
    double hy = 0.0;
    int period = 0;

    /// True when square (i, j) is split along the (0,0)-(1,1) diagonal.
    bool rising_diagonal(int i, int j) const;
};

using MaterialTagger = std::function<int(const Vec2&)>;

struct PointLocation {
    int element = -1;
    std::array<double, 3> bary{};
};

/// Triangulated domain with per-element material ids and boundary markers.
struct TriMesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> material_id;
    /// Bitwise OR of Side values per node; zero for interior nodes.
    std::vector<std::uint8_t> side_tags;
    std::vector<BoundaryEdge> boundary_edges;
    GridInfo grid;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t element_count() const { return triangles.size(); }

    double signed_area(std::size_t e) const;
    Vec2 centroid(std::size_t e) const;
    double total_area() const;
    /// Area fraction of elements carrying material id 1.
    double tagged_fraction() const;

    std::vector<int> boundary_nodes() const;
    std::vector<int> nodes_on(std::uint8_t side_mask) const;

    /// Finds the element containing x; points outside the grid are clamped onto it.
    PointLocation locate(const Vec2& x) const;
    /// Evaluates a nodal P1 field (stride components per node) at x.
    double interpolate(std::span<const double> field, const Vec2& x, int stride = 1,
                       int component = 0) const;
};

/// Structured nx x ny triangulation of [x0, x0 + nx*hx] x [y0, y0 + ny*hy].
TriMesh structured_mesh(int nx, int ny, double x0, double y0, double hx, double hy, int period,
                        const MaterialTagger& tagger = {});

/// Gradients of the three P1 shape functions of element e (constant on e).
std::array<Vec2, 3> shape_gradients(const TriMesh& mesh, std::size_t e);

/// Legacy-VTK ASCII writer for triangle meshes with optional point and cell data.
class VtkWriter {
public:
    explicit VtkWriter(const TriMesh& mesh) : mesh_(mesh) {}

    VtkWriter& point_scalar(std::string name, std::span<const double> values);
    VtkWriter& point_vector(std::string name, std::span<const double> values);
    VtkWriter& cell_scalar(std::string name, std::span<const double> values);
    VtkWriter& cell_vector(std::string name, std::span<const double> values);

    void write(std::ostream& os, const std::string& title = "shoms mesh") const;
    void write(const std::string& path, const std::string& title = "shoms mesh") const;

private:
    struct Field {
        std::string name;
        std::vector<double> values;
        int components;
    };
    const TriMesh& mesh_;
    std::vector<Field> point_fields_;
    std::vector<Field> cell_fields_;
};

} // namespace shoms
