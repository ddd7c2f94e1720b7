#pragma once

#include "shoms/tensor.hpp"

#include <string>
#include <vector>

namespace shoms {

/// p(T) = c0 + c1 T + c2 T^2 + ...
struct Polynomial {
    std::vector<double> coeffs;

    Polynomial() = default;
    Polynomial(std::initializer_list<double> c) : coeffs(c) {}
    explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) {}

    double operator()(double t) const;
    /// order-th derivative with respect to T.
    double derivative(double t, int order = 1) const;
    bool is_constant() const;
    Polynomial scaled(double s) const;
};

/// Pointwise values of the constituent tensors at one temperature.
/// k and beta are isotropic (scalar times identity), C is plane strain.
struct ConstituentState {
    double rho_c = 0.0;
    Mat2 k;
    Tensor4 C;
    Mat2 beta;
};

/// Plane-strain isotropic stiffness from Young's modulus and Poisson ratio.
Tensor4 plane_strain_stiffness(double E, double nu);

/// Temperature-dependent laws for one constituent. rho in kg/m^3, c in J/(kg K),
/// k in W/(m K), E in Pa, beta in Pa/K (SI unless rescaled with in_length_unit).
struct MaterialLaw {
    std::string name;
    Polynomial rho;
    Polynomial c;
    Polynomial k;
    Polynomial E;
    double nu = 0.25;
    Polynomial beta;

    ConstituentState at(double t) const;
    /// First (order=1) or second (order=2) temperature derivative of every tensor.
    ConstituentState derivative_at(double t, int order = 1) const;
    /// Same law with every coefficient frozen at its value at temperature t.
    MaterialLaw frozen(double t) const;
    /// Re-expresses the law with lengths measured in units of `metres` metres.
    /// rho*c scales with L^3, k with L, E and beta with L^2.
    MaterialLaw in_length_unit(double metres) const;
    bool temperature_independent() const;

    /// Throws Error if k, E, rho, c are not positive or nu not in (0, 0.5) on [t_min, t_max].
    void check_admissible(double t_min, double t_max, int samples = 61) const;
};

/// Matrix (material id 0) and inclusion (material id 1) laws.
struct LawPair {
    MaterialLaw matrix;
    MaterialLaw inclusion;

    const MaterialLaw& operator[](int id) const { return id == 0 ? matrix : inclusion; }
};

/// Terms of the expansion p(T0 + eps T1 + eps^2 T2) = p0 + eps p1 + eps^2 p2 + O(eps^3).
struct ExpansionTerms {
    double zeroth = 0.0;
    double first = 0.0;
    double second = 0.0;
};

ExpansionTerms expand(const Polynomial& p, double t0, double t1, double t2);

struct ParameterExpansion {
    ExpansionTerms rho, c, k, E, beta;
};

ParameterExpansion expand_parameters(const MaterialLaw& law, double t0, double t1, double t2);

namespace presets {

/// Composite of the periodic and random structure examples.
LawPair structure_composite();
/// Ti-6Al-4V matrix with ZrO2 inclusions (only k, E, nu given).
LawPair ti64_zro2();
/// SiC matrix with carbon inclusions (only k, E, nu given).
LawPair sic_c();
/// Looks up one of the names above ("structure", "ti64_zro2", "sic_c").
LawPair by_name(const std::string& name);

} // namespace presets

} // namespace shoms
