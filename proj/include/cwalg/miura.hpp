#pragma once

#include "cwalg/walgebra.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace cwalg {

class NotInReducedForm : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Kills every monomial with a strictly lower e_ij (i > j) and re-expresses
/// the rest in the Heisenberg realization. Throws NotInReducedForm on psi*.
State miura_project(Complex& cx, const State& reduced);

/// Coefficients v_l^(r)|0> of (x + alpha_1 T + e_11(u)) ... (x + alpha_n T + e_nn(u))|0>.
Coefficients miura_expand(Complex& cx);

/// Projection of each admissible w_l^(r)|0> against v_l^(r)|0>.
nlohmann::json verify_miura(Complex& cx);

/// Projection compatibility with the (-1)-product on generator pairs.
nlohmann::json verify_miura_products(Complex& cx);

/// Exact rank of ordered W-monomials of conformal degree <= cap, realized in
/// the Heisenberg algebra at a random rational level drawn from `seed`.
nlohmann::json injectivity_rank(const Pyramid& p, int cap, std::uint64_t seed = 20240601, int attempts = 3);

/// Rank of a dense rational matrix by exact Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

/// At k = -N every product w_(n) w'|0> with n >= 0 vanishes. Also records
/// whether some product is nonzero at symbolic k (generic_nonzero).
nlohmann::json critical_commutativity(const Pyramid& p);

}  // namespace cwalg
