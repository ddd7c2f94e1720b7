#pragma once

#include "shoms/cache.hpp"
#include "shoms/config.hpp"
#include "shoms/effective.hpp"
#include "shoms/microgen.hpp"
#include "shoms/report.hpp"
#include "shoms/stepper.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace shoms {

inline constexpr const char* kVersion = "0.1.0";

struct StageReport {
    std::string stage;
    std::filesystem::path dir;
    bool skipped = false;
    double seconds = 0.0;
};

/// One microstructure sample: tagger for meshing plus the geometry when there is one.
struct MicroSample {
    std::uint64_t seed = 0;
    MaterialTagger tagger;
    std::optional<RveGeometry> geometry;
};

/// Off-line / on-line stages keyed by content hashes of the config fields they depend on.
/// A stage whose manifest.json exists is skipped unless `force` is set.
class Pipeline {
public:
    explicit Pipeline(RunConfig config, bool force = false);

    const RunConfig& config() const { return cfg_; }

    StageReport generate();
    StageReport cells();
    StageReport effective();
    StageReport macro();
    StageReport reconstruct();
    StageReport dns();
    StageReport errors();
    /// Every stage the config enables, in dependency order.
    std::vector<StageReport> run_all();

    std::filesystem::path stage_dir(const std::string& stage) const;

    std::vector<MicroSample> samples() const;
    /// Sample index of each macro cell (cj * m + ci); empty for a single sample.
    std::vector<int> cell_assignment() const;
    TriMesh cell_mesh(const MicroSample& s) const;
    TriMesh macro_mesh() const;
    TriMesh dns_mesh() const;
    TransientData transient_data() const;
    StepperOptions stepper_options() const;

    /// Loads cell tables of a completed cells stage. Throws StageInputMissing otherwise.
    CellTables load_tables() const;
    EffectiveTable effective_table() const;
    std::vector<MacroState> load_macro_states() const;
    std::vector<MacroState> load_dns_states() const;

private:
    bool complete(const std::string& stage) const;
    void require_stage(const std::string& stage) const;

    RunConfig cfg_;
    bool force_;
};

/// Error rows for every step after the initial state, orders 0..2 (order 2 only with second-order tables).
std::vector<ErrorRow> error_series(const Pipeline& p, const CellTables& tables, const std::vector<MacroState>& macro,
                                   const std::vector<MacroState>& dns);

} // namespace shoms
