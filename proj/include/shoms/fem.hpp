#pragma once

#include "shoms/mesh.hpp"
#include "shoms/tensor.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace shoms {

/// Symmetric sparse matrix in compressed-row form with sorted column indices.
struct CsrMatrix {
    int rows = 0;
    std::vector<int> row_ptr;
    std::vector<int> col;
    std::vector<double> val;

    std::size_t nnz() const { return val.size(); }
    /// Index into val of entry (r, c), or -1 when outside the pattern.
    long find(int r, int c) const;
    double coeff(int r, int c) const;

    /// y = A x, OpenMP-parallel over rows.
    void multiply(std::span<const double> x, std::span<double> y) const;
    void multiply_serial(std::span<const double> x, std::span<double> y) const;

    /// this += s * other; both must share the same pattern.
    void add_scaled(const CsrMatrix& other, double s);
    void scale(double s);
    /// max |A - A^T| / max |A|.
    double asymmetry() const;
};

struct SparseSystem {
    CsrMatrix matrix;
    std::vector<double> rhs;
};

enum class Units { Kelvin, Length, Dimensionless };

/// Nodal values with one or two components per node (interleaved for vectors).
struct NodalField {
    int components = 1;
    Units units = Units::Dimensionless;
    std::vector<double> values;

    NodalField() = default;
    NodalField(std::size_t nodes, int comps, Units u = Units::Dimensionless)
        : components(comps), units(u), values(nodes * comps, 0.0) {}
    std::size_t node_count() const { return components > 0 ? values.size() / components : 0; }
    double& operator()(std::size_t node, int c = 0) { return values[node * components + c]; }
    double operator()(std::size_t node, int c = 0) const { return values[node * components + c]; }
};

/// Per-mesh data shared by every assembly: element areas, shape gradients,
/// node-to-element incidence and the scalar / 2-vector sparsity patterns with
/// precomputed scatter positions.
class FemSpace {
public:
    explicit FemSpace(const TriMesh& mesh);

    const TriMesh& mesh() const { return *mesh_; }
    std::size_t node_count() const { return mesh_->node_count(); }
    std::size_t element_count() const { return mesh_->element_count(); }
    double area(std::size_t e) const { return area_[e]; }
    const std::array<Vec2, 3>& gradients(std::size_t e) const { return grad_[e]; }

    /// Zero-valued matrix with the pattern for `components` unknowns per node.
    CsrMatrix empty_matrix(int components) const;

    std::span<const int> incident_elements(std::size_t node) const {
        return {incidence_.data() + incidence_ptr_[node], incidence_.data() + incidence_ptr_[node + 1]};
    }
    /// Position of node within element e (0..2).
    int local_index(std::size_t e, std::size_t node) const;

    /// Scatter positions into CsrMatrix::val for element e: (3c x 3c) row-major.
    std::span<const int> positions(std::size_t e, int components) const;

private:
    const TriMesh* mesh_;
    std::vector<double> area_;
    std::vector<std::array<Vec2, 3>> grad_;
    std::vector<int> incidence_ptr_;
    std::vector<int> incidence_;
    CsrMatrix pattern1_;
    CsrMatrix pattern2_;
    std::vector<int> pos1_;
    std::vector<int> pos2_;
};

// Assembly. The default entry points are OpenMP-parallel (element kernels in parallel,
// then a row-gather so that each matrix row is owned by one thread and summed in a
// fixed order). The *_serial variants are the plain scatter loops kept as references.

CsrMatrix assemble_diffusion(const FemSpace& space, std::span<const Mat2> k);
CsrMatrix assemble_elasticity(const FemSpace& space, std::span<const Tensor4> c);
CsrMatrix assemble_elasticity(const FemSpace& space, std::span<const Voigt3> c);
CsrMatrix assemble_mass(const FemSpace& space, std::span<const double> coefficient);
/// Lumped (row-sum) mass matrix on the scalar pattern.
CsrMatrix assemble_lumped_mass(const FemSpace& space, std::span<const double> coefficient);

CsrMatrix assemble_diffusion_serial(const FemSpace& space, std::span<const Mat2> k);
CsrMatrix assemble_elasticity_serial(const FemSpace& space, std::span<const Tensor4> c);
CsrMatrix assemble_mass_serial(const FemSpace& space, std::span<const double> coefficient);

/// Load for -div(K grad u) = ... written as  div(K grad u) = f + div(g):
/// b_a = -int f phi_a + int g . grad phi_a, with f and g constant per element.
std::vector<double> assemble_scalar_load(const FemSpace& space, std::span<const double> f,
                                         std::span<const Vec2> g);
/// Vector analogue with F_i per element and G_ij per element (row i, column j).
std::vector<double> assemble_vector_load(const FemSpace& space, std::span<const Vec2> f,
                                         std::span<const Mat2> g);
/// int_{edges on side_mask} q phi ds for a scalar flux q(x).
void add_boundary_flux(const FemSpace& space, std::uint8_t side_mask,
                       const std::function<double(const Vec2&)>& q, std::span<double> rhs,
                       int components = 1, int component = 0);

/// Symmetric elimination of prescribed dofs: rows and columns zeroed, unit diagonal,
/// right-hand side corrected with the eliminated columns.
void apply_dirichlet(SparseSystem& system, std::span<const int> dofs, std::span<const double> values);

enum class SolverKind { Auto, ConjugateGradient, Direct };

struct SolveOptions {
    double rel_tol = 1e-10;
    int max_iter = 0; ///< 0 selects 10 * dimension
    SolverKind kind = SolverKind::Auto;
    /// Auto uses the direct solver below this dimension.
    int direct_threshold = 2000;
};

struct SolveStats {
    int iterations = 0;
    double relative_residual = 0.0;
    bool direct = false;
};

/// Solves the SPD system. Throws NoConvergence on failure.
std::vector<double> solve_spd(const SparseSystem& system, const SolveOptions& opts = {},
                              SolveStats* stats = nullptr);
std::vector<double> conjugate_gradient(const CsrMatrix& a, std::span<const double> b,
                                       double rel_tol, int max_iter, SolveStats* stats = nullptr);

/// Sparse Cholesky factorization reused across right-hand sides.
class SpdFactor {
public:
    explicit SpdFactor(const CsrMatrix& a);
    ~SpdFactor();
    SpdFactor(SpdFactor&&) noexcept;
    SpdFactor& operator=(SpdFactor&&) noexcept;

    std::vector<double> solve(std::span<const double> rhs) const;
    int dimension() const { return dim_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int dim_ = 0;
};

/// Fixed-order blocked dot product (same result for any thread count).
double dot(std::span<const double> x, std::span<const double> y);

/// Constant element gradient of a P1 field: comps x 2 values per element,
/// laid out [e][c][d].
std::vector<double> element_gradients(const FemSpace& space, std::span<const double> field,
                                      int components = 1);

/// Node gradient = area-weighted mean of incident element gradients; layout [node][c][d].
std::vector<double> recover_gradient(const FemSpace& space, std::span<const double> field,
                                     int components = 1);
std::vector<double> recover_gradient_serial(const FemSpace& space, std::span<const double> field,
                                            int components = 1);

/// Dofs of the given nodes for a field with `components` unknowns per node.
std::vector<int> node_dofs(std::span<const int> nodes, int components);

} // namespace shoms
