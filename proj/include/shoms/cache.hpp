#pragma once

#include "shoms/cell.hpp"

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace shoms {

/// 64-bit FNV-1a over a byte range.
std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t h = 0xcbf29ce484222325ULL);

/// Binary record of one CellFunctionSet: "SHOMSCF1", seed, n, grid index, T,
/// node count, second-order flag, effective values, every field, then the
/// FNV-1a checksum of everything before it.
void write_cell_set(std::ostream& os, const CellFunctionSet& set, int grid_index);
CellFunctionSet read_cell_set(std::istream& is, int* grid_index = nullptr);

/// Directory of cell-table files, one per (seed, n, grid index), plus manifest.json.
class CellCache {
public:
    explicit CellCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(std::uint64_t seed, int n, int s) const;
    bool has(std::uint64_t seed, int n, int s) const;
    /// Throws CacheCorrupt on checksum or header mismatch.
    CellFunctionSet load(std::uint64_t seed, int n, int s) const;
    /// Thread-safe; the manifest is rewritten after each call.
    void store(const CellFunctionSet& set, int s);

private:
    void write_manifest_locked() const;

    std::filesystem::path dir_;
    mutable std::mutex mutex_;
    struct Entry {
        std::uint64_t seed;
        int n;
        int s;
        double temperature;
        std::string file;
    };
    std::vector<Entry> entries_;
};

/// One random (or prescribed) microstructure sample.
struct CellSample {
    std::uint64_t seed = 0;
    MaterialTagger tagger;
};

struct CellTables {
    TemperatureGrid grid;
    int n = 0;
    /// sets[sample][grid index]
    std::vector<std::vector<CellFunctionSet>> sets;
    SolveCounts solved;
    long loaded = 0;

    std::size_t sample_count() const { return sets.size(); }
};

/// Solves (or loads from the cache) every sample over the whole grid. Samples run in
/// parallel when there are several, otherwise the temperatures of the single sample do.
CellTables build_cell_tables(const std::vector<CellSample>& samples, const TemperatureGrid& grid, int n,
                             const LawPair& laws, const CellOptions& opts, CellCache* cache = nullptr,
                             bool force = false);

} // namespace shoms
