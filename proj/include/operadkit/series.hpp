#pragma once

#include <string>
#include <vector>

#include "operadkit/rat.hpp"

namespace operadkit {

/// Coefficients c_1..c_N of a Hilbert series, index = arity.
struct IntSeries {
    std::vector<Int> coeffs;  // coeffs[0] is c_1

    int order() const { return static_cast<int>(coeffs.size()); }
    const Int& at(int n) const { return coeffs[static_cast<std::size_t>(n - 1)]; }
};

Int catalan(int n);
Int narayana(int n, int k);
Int schroeder(int n);

enum class OperadFamily { Dias, Dendr, As, DAs, Dup, Trias, TDendr };
OperadFamily family_by_name(const std::string& name);
std::string family_name(OperadFamily f);

/// Closed-form dimension of the arity-n component.
Int dim_formula(OperadFamily family, int gamma, int n);

IntSeries dim_series(OperadFamily family, int gamma, int N);

/// Functional equation H = t + q t H + r t H^2, or with the t factor
/// dropped from both H terms when h2_carries_t is false (H = t + q H t ...
/// keeps c_1 = 1 in either shape).
struct QuadraticSeriesSpec {
    Int q;
    Int r;
    bool h2_carries_t = true;
};

QuadraticSeriesSpec dendr_series_spec(int gamma);
QuadraticSeriesSpec das_series_spec(int gamma);
QuadraticSeriesSpec tdendr_series_spec(int gamma);

/// Unique power-series solution with c_1 = 1, by coefficient recursion.
IntSeries solve_quadratic_series(const QuadraticSeriesSpec& spec, int N);

/// True iff H(-K(-t)) = t modulo t^{N+1}, over exact arithmetic.
bool koszul_inverse_check(const IntSeries& h, const IntSeries& k, int N);

enum class StructureKind { Evbt, AltSchroder, EvSchroder, Hook, ExtHook };
StructureKind structure_by_name(const std::string& name);

/// Exhaustive structure counts (trees materialized for hooks, recursive
/// convolution for the tree families). Guarded at n <= 8.
Int count_structures(StructureKind kind, int gamma, int n);

}  // namespace operadkit
