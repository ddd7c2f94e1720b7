#pragma once

#include "shoms/cell.hpp"
#include "shoms/materials.hpp"
#include "shoms/microgen.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace shoms {

enum class MicrostructureKind { Periodic, Random, Stripes, Homogeneous };

struct MicrostructureConfig {
    MicrostructureKind kind = MicrostructureKind::Periodic;
    /// Periodic kind: one centred circular inclusion of this radius.
    double radius = 0.3;
    /// Random kind: packing parameters.
    InclusionSpec inclusions;
    int stripes = 1;
    int samples = 1;
    std::uint64_t seed = 1;
};

struct MacroConfig {
    int n = 40;
    double eps = 0.2;
    double dt = 0.01;
    double t_end = 0.5;
    double reference_temperature = 273.15;
    double boundary_temperature = 373.15;
    double heat_source = 5000.0;
    Vec2 body_force{-2000.0, -2000.0};
    bool lumped_mass = false;
};

struct OutputConfig {
    /// Times at which reconstructions are written as VTK.
    std::vector<double> snapshot_times;
    std::vector<int> orders{0, 1, 2};
    bool vtk = true;
};

/// Everything one pipeline run needs. Defaults reproduce the desk-scale periodic example.
struct RunConfig {
    std::string name = "run";
    std::filesystem::path output_dir = "runs";

    std::string material_preset = "structure";
    double length_unit = 1.0; ///< metres per domain length unit
    LawPair laws;             ///< after length rescaling

    MicrostructureConfig micro;

    int cell_n = 32;
    CellOptions cell;

    double t_min = 273.15;
    double t_max = 873.15;
    int t_points = 12;

    std::optional<MacroConfig> macro;
    /// DNS elements per macro-domain side; zero disables the reference run.
    int dns_n = 0;

    double picard_tol = 1e-8;
    int picard_max = 50;
    SolveOptions macro_solve;

    OutputConfig output;
    int workers = 0;

    TemperatureGrid grid() const { return TemperatureGrid::uniform(t_min, t_max, t_points); }
};

/// Parses YAML text; relative output paths resolve against `base_dir`. Throws ConfigInvalid.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Canonical text of every field a stage depends on, used for content hashes.
std::string offline_key(const RunConfig& c);
std::string macro_key(const RunConfig& c);
std::string dns_key(const RunConfig& c);

/// Hex FNV-1a digest of a key.
std::string digest(const std::string& key);

} // namespace shoms
