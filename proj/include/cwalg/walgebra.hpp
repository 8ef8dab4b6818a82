#pragma once

#include "cwalg/brst.hpp"

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cwalg {

/// Where the entries e_ij^(r)[-1] of the matrix act: dressed modes in the
/// full complex, or generators of the reduced realization.
enum class Backend { Full, Reduced };

const char* backend_name(Backend b);

/// Polynomial in the central variables x and u with State coefficients,
/// keyed by (power of x, power of u).
using PolyState = std::map<std::pair<int, int>, State>;

/// Coefficients keyed by (l, r): the coefficient of x^{n-l} u^r.
using Coefficients = std::map<std::pair<int, int>, State>;

/// Column determinant sum_s sgn(s) a_{s(1)1} ... a_{s(n)n} of the matrix with
/// diagonal x + alpha_i T + e_ii(u), superdiagonal -u^{lambda_{i+1}-1} and
/// lower entries e_ij(u) = sum_r e_ij^(r)[-1] u^r, applied to |0>. The
/// column-1 factor acts last.
PolyState cdet_apply(Complex& cx, Backend backend);
/// Row determinant sum_s sgn(s) a_{1s(1)} ... a_{ns(n)} applied to |0>.
PolyState rdet_apply(Complex& cx, Backend backend);

/// Reads w_l^(r)|0> off a determinant (l = 1..n, every r that occurs).
Coefficients coefficients(const Pyramid& p, const PolyState& det);

/// r with lambda_{n-l+2} + ... + lambda_n < r + l <= lambda_{n-l+1} + ... + lambda_n.
Window admissible_window(const Pyramid& p, int l);

/// w_l^(r)|0> for every admissible (l, r).
Coefficients generators(Complex& cx, Backend backend);

/// Applies d to every generator in the full complex.
/// Report: {schema, statement, pyramid, level, generators: [{l, r, terms, closed}], count, N, status}.
nlohmann::json certify_generators(Complex& cx);

/// Grading of a reduced monomial by the sum of j - i over its e-modes.
int triangular_degree(const ModeAlgebra& reduced, const Monomial& mono);
/// Lowest triangular-degree component of the reduced w_l^(r)|0>.
State leading_term(Complex& cx, int l, int r);
/// P_l^(r')[-1]|0> in the reduced realization with r' = r - (lambda_{n-l+2} + ... + lambda_n - l + 1).
State p_vacuum_state(Complex& cx, int l, int r);

/// Maps a reduced state to the full complex through e -> dressed mode and
/// psi* -> psi*, applying each monomial's modes right to left to |0>.
State dress(Complex& cx, const State& reduced);

/// Coefficients of prod_{s>=0} prod_{l=1}^n (1 - q^{l+s})^{-lambda_{n-l+1}} up to q^cap.
std::vector<long> hilbert_series(const Pyramid& p, int cap);
/// Ordered monomials W_{l1}^(r1)[m1] ... (triples non-decreasing, m < 0) counted
/// by conformal degree sum(l - m - 1) up to cap.
std::vector<long> count_w_monomials(const Pyramid& p, int cap);

}  // namespace cwalg
