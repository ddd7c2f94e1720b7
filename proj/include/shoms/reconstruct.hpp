#pragma once

#include "shoms/cache.hpp"
#include "shoms/fem.hpp"
#include "shoms/materials.hpp"
#include "shoms/mesh.hpp"

#include <vector>

namespace shoms {

/// Homogenized fields at one time step on the macro mesh, plus the previous
/// temperature for the time derivative (empty at the first step).
struct MacroSnapshot {
    const TriMesh* mesh = nullptr;
    std::vector<double> T;
    std::vector<double> T_previous;
    std::vector<double> u;
    double dt = 0.0;
};

struct ReconstructionRequest {
    int order = 2;
    double eps = 0.2;
    double reference_temperature = 273.15;
    /// Sample index per cell, cell (ci, cj) at cj * m + ci. Empty means sample 0 everywhere.
    std::vector<int> cell_samples;
};

/// Separate expansion terms at the evaluation nodes; the order-k field is
/// T0 + eps T1 + eps^2 T2 truncated after term k.
struct ReconstructionTerms {
    std::vector<double> T0, T1, T2;
    std::vector<double> u0, u1, u2; ///< interleaved per node
};

/// Evaluates every expansion term at the nodes of `target`.
ReconstructionTerms reconstruction_terms(const ReconstructionRequest& request, const MacroSnapshot& macro,
                                         const CellTables& tables, const TriMesh& target);

/// Combines terms up to `order` (0, 1 or 2).
std::vector<double> combine_temperature(const ReconstructionTerms& terms, int order, double eps);
std::vector<double> combine_displacement(const ReconstructionTerms& terms, int order, double eps);

/// Reconstructed fields with per-element flux, strain and stress.
struct FineField {
    NodalField T;
    NodalField u;
    std::vector<Vec2> flux;
    std::vector<Mat2> strain;
    std::vector<Mat2> stress;
};

FineField reconstruct_temperature(const ReconstructionRequest& request, const MacroSnapshot& macro,
                                  const CellTables& tables, const TriMesh& target);
FineField reconstruct_displacement(const ReconstructionRequest& request, const MacroSnapshot& macro,
                                   const CellTables& tables, const TriMesh& target);
/// Both fields of the requested order in one pass.
FineField reconstruct(const ReconstructionRequest& request, const MacroSnapshot& macro, const CellTables& tables,
                      const TriMesh& target);

/// Fills flux, strain and stress from T and u with the local material law at the element-mean temperature.
void derived_fields(FineField& field, const FemSpace& space, const LawPair& laws, double reference_temperature);

/// Writes T, u as point data and flux, strain, stress, material id as cell data.
void write_fine_vtk(const std::string& path, const TriMesh& mesh, const FineField& field,
                    const std::string& title);

} // namespace shoms
