#pragma once

#include "shoms/effective.hpp"
#include "shoms/fem.hpp"
#include "shoms/materials.hpp"
#include "shoms/mesh.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace shoms {

/// Heat capacity, conductivity, stiffness and thermal modulus of one element.
struct ElementCoefficients {
    double S = 0.0;
    Mat2 k;
    Tensor4 C;
    Mat2 beta;
};

/// Supplies element coefficients at a given element temperature. The homogenized
/// problem and the fine-scale reference only differ in this provider.
class CoefficientProvider {
public:
    virtual ~CoefficientProvider() = default;
    virtual ElementCoefficients at(std::size_t element, double t) const = 0;
    /// Number of lookups outside the tabulated temperature range so far.
    virtual long clamped_lookups() const { return 0; }
};

/// Ensemble-averaged effective coefficients, identical on every element.
class HomogenizedCoefficients final : public CoefficientProvider {
public:
    explicit HomogenizedCoefficients(EffectiveTable table) : interp_(std::move(table)) {}
    ElementCoefficients at(std::size_t, double t) const override;
    long clamped_lookups() const override { return interp_.clamped_lookups(); }

private:
    CoeffInterpolator interp_;
};

/// Constituent laws selected per element by material id.
class ConstituentCoefficients final : public CoefficientProvider {
public:
    ConstituentCoefficients(const TriMesh& mesh, LawPair laws) : mesh_(mesh), laws_(std::move(laws)) {}
    ElementCoefficients at(std::size_t element, double t) const override;

private:
    const TriMesh& mesh_;
    LawPair laws_;
};

using ScalarData = std::function<double(const Vec2& x, double t)>;
using VectorData = std::function<Vec2(const Vec2& x, double t)>;

/// Boundary, initial and load data of the transient thermo-mechanical problem.
struct TransientData {
    double initial_temperature = 273.15; ///< stress-free and initial temperature
    std::uint8_t temperature_sides = kBottom | kRight | kTop | kLeft;
    ScalarData boundary_temperature;
    std::uint8_t flux_sides = 0;
    ScalarData boundary_flux; ///< outward-normal heat flux k dT/dn
    ScalarData heat_source;
    std::uint8_t displacement_sides = kBottom | kRight | kTop | kLeft;
    VectorData boundary_displacement;
    std::uint8_t traction_sides = 0;
    VectorData traction;
    VectorData body_force;
};

struct StepperOptions {
    double dt = 0.002;
    double t_end = 1.0;
    double picard_tol = 1e-8; ///< K, max-norm change between iterates
    int picard_max = 50;
    bool lumped_mass = false;
    SolveOptions solve;
    /// Written after every step when set; run_transient resumes from it if present.
    std::optional<std::filesystem::path> checkpoint;
};

struct MacroState {
    int step = 0;
    double time = 0.0;
    std::vector<double> T;
    std::vector<double> u; ///< interleaved (u1, u2) per node
    int picard_iterations = 0;
    double picard_change = 0.0;
};

/// Implicit-Euler thermal step with Picard iteration on the coefficients, followed by
/// the quasi-static mechanical solve. One instance per mesh.
class TransientSolver {
public:
    TransientSolver(const TriMesh& mesh, const CoefficientProvider& coeffs, TransientData data,
                    StepperOptions opts);

    const TriMesh& mesh() const { return mesh_; }
    const FemSpace& space() const { return space_; }
    const StepperOptions& options() const { return opts_; }
    const TransientData& data() const { return data_; }

    MacroState initial_state() const;
    /// Temperature at step N+1 from the state at step N. Throws PicardNoConvergence.
    std::vector<double> step_thermal(const MacroState& state, int* iterations = nullptr,
                                     double* last_change = nullptr) const;
    /// One linear thermal solve with coefficients frozen at `frozen`.
    std::vector<double> thermal_solve(const std::vector<double>& previous, const std::vector<double>& frozen,
                                      double t_new) const;
    std::vector<double> step_mechanical(const std::vector<double>& T, double t) const;
    MacroState advance(const MacroState& state) const;

    /// All states from step 0 to the horizon. `on_step` sees each new state.
    std::vector<MacroState> run(const std::function<void(const MacroState&)>& on_step = {}) const;

    /// Element-centroid temperatures of a nodal field.
    std::vector<double> centroid_values(const std::vector<double>& T) const;

private:
    const TriMesh& mesh_;
    FemSpace space_;
    const CoefficientProvider& coeffs_;
    TransientData data_;
    StepperOptions opts_;
    std::vector<int> t_nodes_;
    std::vector<int> u_dofs_;
};

void save_checkpoint(const std::filesystem::path& path, const MacroState& state);
MacroState load_checkpoint(const std::filesystem::path& path);
/// Every state of a run in one binary file.
void save_states(const std::filesystem::path& path, const std::vector<MacroState>& states);
std::vector<MacroState> load_states(const std::filesystem::path& path);

/// Per-step CSV: step, t, T_min, T_max, T_mean, picard, picard_change, u_max.
void write_step_csv(std::ostream& os, const std::vector<MacroState>& states);

} // namespace shoms
