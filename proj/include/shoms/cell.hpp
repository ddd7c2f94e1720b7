#pragma once

#include "shoms/fem.hpp"
#include "shoms/materials.hpp"
#include "shoms/mesh.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace shoms {

/// Strictly increasing representative temperatures (K).
struct TemperatureGrid {
    std::vector<double> values;

    static TemperatureGrid uniform(double t_min, double t_max, int count);
    std::size_t size() const { return values.size(); }
    double operator[](std::size_t s) const { return values[s]; }
    double front() const { return values.front(); }
    double back() const { return values.back(); }

    struct Bracket {
        std::size_t lo = 0;
        double weight = 0.0; ///< weight of values[lo + 1]
        bool clamped = false;
    };
    /// Linear-interpolation bracket; temperatures outside the range are clamped.
    Bracket bracket(double t) const;
};

/// Every cell function stored per (sample, temperature). Second-order functions
/// with a trailing direction index gamma (R, Z, Q) are the directional-expanded
/// forms contracted with dT0/dx_gamma at reconstruction time.
enum class CellField : int {
    M,   ///< M_a: 2 scalars
    N,   ///< N^a_{.m}: 4 vectors, index a*2+m
    P,   ///< P: 1 vector
    S,   ///< S: 1 scalar
    M2,  ///< M_{ab} symmetrized: 3 scalars (11, 12, 22)
    R,   ///< R_{a gamma}: 4 scalars, index a*2+gamma
    B,   ///< B_{ab}: 4 scalars, index a*2+b
    N2,  ///< N^{ab}_{.m} symmetrized: 6 vectors, index pair*2+m
    Z,   ///< Z^{a gamma}_{.m}: 8 vectors, index (a*2+gamma)*2+m
    Q,   ///< Q^{gamma}: 2 vectors
    H,   ///< H^a: 2 vectors
    W,   ///< W^a: 2 vectors
    A,   ///< A^{ab}_{.m}: 8 vectors, index (a*2+b)*2+m
};
inline constexpr int kCellFieldKinds = 13;

struct CellFieldInfo {
    const char* name;
    int count;      ///< number of functions of this kind
    int components; ///< 1 scalar, 2 vector
    bool second_order;
    /// Vanishes for temperature-independent laws.
    bool temperature_driven;
};
const CellFieldInfo& field_info(CellField f);

/// Index of the symmetric pair (a, b) in the 11, 12, 22 storage.
inline int sym_pair(int a, int b) { return a + b; }

/// Ensemble-free effective coefficients for one sample at one temperature.
struct EffectiveSample {
    double S = 0.0;
    Mat2 k;
    Tensor4 C;
    Mat2 beta;

    EffectiveSample& operator+=(const EffectiveSample& o);
    EffectiveSample& operator*=(double s);
};

/// Nodal values of all cell functions for one (sample, temperature).
struct CellFunctionSet {
    std::uint64_t seed = 0;
    int n = 0;
    double temperature = 0.0;
    std::size_t nodes = 0;
    bool has_second_order = false;
    /// data[kind][function] = nodal values (components interleaved).
    std::array<std::vector<std::vector<double>>, kCellFieldKinds> data;
    EffectiveSample effective;

    explicit CellFunctionSet(std::size_t node_count = 0);
    std::vector<double>& field(CellField f, int index) { return data[static_cast<int>(f)][index]; }
    const std::vector<double>& field(CellField f, int index) const { return data[static_cast<int>(f)][index]; }
    /// Max |value| over all functions of one kind.
    double max_abs(CellField f) const;
};

enum class XDerivativeMode { ChainRule, Drop };

struct CellOptions {
    bool second_order = true;
    XDerivativeMode x_derivatives = XDerivativeMode::ChainRule;
    SolveOptions solve;
};

/// Number of scalar and vector Dirichlet problems solved.
struct SolveCounts {
    long scalar = 0;
    long vector = 0;
    long total() const { return scalar + vector; }
    SolveCounts& operator+=(const SolveCounts& o) {
        scalar += o.scalar;
        vector += o.vector;
        return *this;
    }
};

/// Problems per temperature for one sample under the current enumeration.
SolveCounts problems_per_temperature(bool second_order);

/// Unit-cell mesh, FE space and constituent laws shared by every cell problem of one sample.
class CellContext {
public:
    CellContext(TriMesh mesh, LawPair laws, std::uint64_t seed = 0);

    const TriMesh& mesh() const { return mesh_; }
    const FemSpace& space() const { return space_; }
    const LawPair& laws() const { return laws_; }
    std::uint64_t seed() const { return seed_; }
    int n() const { return mesh_.grid.nx; }
    const std::vector<int>& boundary_dofs(int components) const {
        return components == 1 ? bdofs1_ : bdofs2_;
    }

    /// Per-element constituent states (order 0) or temperature derivatives (order 1, 2).
    std::vector<ConstituentState> element_states(double t, int order = 0) const;

private:
    TriMesh mesh_;
    FemSpace space_;
    LawPair laws_;
    std::uint64_t seed_;
    std::vector<int> bdofs1_;
    std::vector<int> bdofs2_;
};

/// M_a, N^a, P at one temperature.
CellFunctionSet solve_first_order(const CellContext& ctx, double t, const CellOptions& opts = {},
                                  SolveCounts* counts = nullptr);

/// Volume averages of the effective-coefficient integrands with element gradients.
EffectiveSample effective_at(const CellContext& ctx, double t, const CellFunctionSet& first);

/// d/dT across the grid: 3-point central differences (non-uniform spacing) inside,
/// 3-point one-sided at the ends. table[s] is one vector of values per grid point.
std::vector<std::vector<double>> temperature_sensitivity(const TemperatureGrid& grid,
                                                         const std::vector<std::vector<double>>& table);

/// Flattens an effective sample (S, k, C, beta) for differentiation across the grid.
std::vector<double> flatten(const EffectiveSample& e);
EffectiveSample unflatten(const std::vector<double>& v);

/// Temperature derivatives of first-order functions and effective values at one grid point.
struct FirstOrderSensitivity {
    CellFunctionSet d_first;
    EffectiveSample d_effective;
};

/// All second-order functions at one grid point, filled into `set`.
void solve_second_order(const CellContext& ctx, double t, CellFunctionSet& set,
                        const FirstOrderSensitivity& sens, const CellOptions& opts = {},
                        SolveCounts* counts = nullptr);

/// Full off-line computation for one sample over the whole grid.
std::vector<CellFunctionSet> solve_sample(const CellContext& ctx, const TemperatureGrid& grid,
                                          const CellOptions& opts = {}, SolveCounts* counts = nullptr);

} // namespace shoms
