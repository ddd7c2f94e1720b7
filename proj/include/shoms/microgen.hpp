#pragma once

#include "shoms/mesh.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace shoms {

/// Reproducible generator used for every random microstructure: std::mt19937_64
/// seeded with the sample seed, mapped to doubles via the top 53 bits so that the
/// stream is identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// One elliptical inclusion in unit-cell coordinates.
struct InclusionParams {
    Vec2 center{};
    double a = 0.0;     ///< long semi-axis
    double b = 0.0;     ///< short semi-axis
    double angle = 0.0; ///< angle between the long axis and y1, radians

    double area() const;
    bool contains(const Vec2& y) const;
    /// Half extents of the axis-aligned bounding box.
    Vec2 half_extent() const;
    bool inside_unit_square() const;
    Vec2 boundary_point(double t) const;
};

/// 3D ellipsoid record (x1,x2,x3,a,b,c,theta1..3). Parsed and stored, never meshed.
struct EllipsoidParams {
    std::array<double, 3> center{};
    std::array<double, 3> semi_axes{};
    std::array<double, 3> euler{};
};

struct RveGeometry {
    std::vector<InclusionParams> inclusions;
    std::uint64_t seed = 0;
    double achieved_fraction = 0.0;

    int material_at(const Vec2& y) const;
};

enum class OverlapMode { CenterDistance, SurfaceRay };

enum class InclusionShape { Circle, Ellipse, Fiber };

struct InclusionSpec {
    InclusionShape shape = InclusionShape::Circle;
    /// Number of inclusions; ignored when target_fraction is set.
    int count = 0;
    std::optional<double> target_fraction;
    /// Long semi-axis range; a fixed size uses a_min == a_max.
    double a_min = 0.1;
    double a_max = 0.1;
    /// a/b range. Circles force 1; fibres require at least 4.
    double aspect_min = 1.0;
    double aspect_max = 1.0;
    bool random_angle = true;
    OverlapMode overlap = OverlapMode::CenterDistance;
    int max_rejections = 100000;
};

/// Draws inclusions by rejection sampling until the requested count or fraction is met.
RveGeometry sample_inclusions(const InclusionSpec& spec, std::uint64_t seed);

/// True if the candidate may be added next to the existing inclusions.
bool overlap_test(const InclusionParams& candidate, const std::vector<InclusionParams>& existing,
                  OverlapMode mode);

/// Number of boundary points sampled on the candidate in surface-ray mode.
inline constexpr int kSurfaceSamples = 64;

/// n x n structured triangulation of the unit cell tagged with the geometry.
TriMesh build_mesh(const RveGeometry& geometry, int n);
TriMesh build_mesh(const MaterialTagger& tagger, int n);

/// Cell pattern made of vertical stripes: material 1 on the right half of each period.
MaterialTagger stripe_pattern(int periods);

/// Tiles [0,1]^2 with cells of size eps. Cell (ci, cj) uses geometries[(cj * m + ci) % size],
/// so a single geometry gives the periodic layout and one geometry per cell the random one.
TriMesh tile_domain(const std::vector<RveGeometry>& geometries, double eps, int n_per_cell);
TriMesh tile_domain(const std::vector<MaterialTagger>& taggers, double eps, int n_per_cell);

/// Returns 1/eps when it is an integer (within 1e-9), otherwise throws NonIntegerTiling.
int cells_per_side(double eps);

/// Plain-text geometry record: '#' header lines, then one "x1 x2 a b theta1" per line.
void write_geometry(std::ostream& os, const RveGeometry& g);
RveGeometry read_geometry(std::istream& is);

/// Parses a 3D record line; meshing such a record raises Unsupported.
EllipsoidParams parse_ellipsoid(const std::string& line);
TriMesh build_mesh_3d(const std::vector<EllipsoidParams>& inclusions, int n);

} // namespace shoms
