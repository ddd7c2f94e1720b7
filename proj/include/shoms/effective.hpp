#pragma once

#include "shoms/cache.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace shoms {

struct EnsembleStats {
    EffectiveSample mean;
    EffectiveSample stddev; ///< unbiased, componentwise; zero when M = 1
    std::size_t count = 0;
};

/// Componentwise mean and unbiased standard deviation, summed in input order.
EnsembleStats ensemble_average(const std::vector<EffectiveSample>& samples);

/// Ensemble-averaged effective coefficients over the temperature grid.
struct EffectiveTable {
    TemperatureGrid grid;
    std::vector<EffectiveSample> mean;
    std::vector<EffectiveSample> stddev;
    std::size_t samples = 0;
};

EffectiveTable build_effective_table(const CellTables& tables);

/// Piecewise-linear interpolation of an EffectiveTable in T with clamping at the ends.
class CoeffInterpolator {
public:
    explicit CoeffInterpolator(EffectiveTable table);

    EffectiveSample at(double t) const;
    const EffectiveTable& table() const { return table_; }
    /// Number of lookups that fell outside the grid since construction.
    long clamped_lookups() const { return clamped_; }

private:
    EffectiveTable table_;
    mutable long clamped_ = 0;
};

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
    bool contains(double v) const { return v >= lower && v <= upper; }
    bool strictly_contains(double v) const { return v > lower && v < upper; }
};

/// Reuss (harmonic) and Voigt (arithmetic) means; f is the inclusion fraction.
Interval voigt_reuss_bounds(double f, double p_matrix, double p_inclusion);
/// Two-dimensional Hashin-Shtrikman bounds for two-phase conductivity.
Interval hashin_shtrikman_bounds(double f, double k_matrix, double k_inclusion);

/// Mean of the eigenvalues of the symmetric part of k.
double eigenvalue_mean(const Mat2& k);

struct IsotropicModuli {
    double E = 0.0;
    double nu = 0.0;
    double lambda = 0.0;
    double mu = 0.0;
};
/// Nearest isotropic tensor through the two isotropic invariants, inverted under plane strain.
IsotropicModuli isotropic_projection(const Tensor4& C);

/// CSV: T, S, k11, k12, k22, C11, C12, C13, C22, C23, C33 (Voigt upper triangle),
/// beta11, beta12, beta22, then the same columns suffixed _sd.
void write_effective_csv(std::ostream& os, const EffectiveTable& table);
/// CSV of conductivity and modulus scalars with Voigt-Reuss and HS bounds per temperature.
void write_bounds_csv(std::ostream& os, const EffectiveTable& table, const LawPair& laws, double fraction);

} // namespace shoms
