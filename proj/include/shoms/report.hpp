#pragma once

#include "shoms/fem.hpp"

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

namespace shoms {

/// L2 norm of a P1 field (exact for piecewise-linear integrands).
double l2_norm(const FemSpace& space, std::span<const double> field, int components = 1);
/// Gradient seminorm for scalars, strain seminorm (symmetric gradient) for 2-vectors.
double h1_seminorm(const FemSpace& space, std::span<const double> field, int components = 1);

struct RelativeErrors {
    double l2 = 0.0;
    double h1_semi = 0.0;
    double h1_full = 0.0;
};

/// |rec - ref| / |ref| in each norm. Throws ZeroReference when a reference norm is below 1e-14.
RelativeErrors relative_errors(const FemSpace& space, std::span<const double> reconstructed,
                               std::span<const double> reference, int components = 1);

/// One snapshot: index k of each array is the order-k reconstruction.
struct ErrorRow {
    int step = 0;
    double time = 0.0;
    std::array<double, 3> Terr{};  ///< relative L2
    std::array<double, 3> TErr{};  ///< relative H1 seminorm
    std::array<double, 3> Uerr{};
    std::array<double, 3> UErr{};  ///< relative strain seminorm
    std::array<double, 3> TErr_full{};
    std::array<double, 3> UErr_full{};
};

/// Columns: step,t,Terr0..2,TErr0..2,Uerr0..2,UErr0..2,TErrFull0..2,UErrFull0..2 with 17 significant digits.
void emit_series(std::ostream& os, const std::vector<ErrorRow>& rows);
std::vector<ErrorRow> read_series(std::istream& is);

} // namespace shoms
