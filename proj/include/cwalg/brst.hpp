#pragma once

#include "cwalg/field.hpp"
#include "cwalg/pyramid.hpp"
#include "cwalg/scalar.hpp"
#include "cwalg/statespace.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace cwalg {

/// One summand c * e_ij^(r) of a P or I field.
struct DressedTerm {
    int i;
    int j;
    int r;
};

/// The BRST complex C^k(a) together with the reduced and Heisenberg
/// realizations built over the same pyramid and level.
class Complex {
public:
    explicit Complex(Pyramid p, Scalar level = Scalar::k());

    const Pyramid& pyramid() const { return pyramid_; }
    const Scalar& level() const { return level_; }

    StateSpace& full() { return full_; }
    StateSpace& reduced() { return reduced_; }
    StateSpace& heisenberg() { return heisenberg_; }

    /// res Q(z).
    State d_st(const State& v);
    /// sum_i psi*_{i,i+1}^(lambda_{i+1}-1)[1].
    State chi(const State& v);
    State d(const State& v);

    /// Dressed field e_ij^(r)(z) in the full complex. Returns the zero field
    /// for out-of-range (i, j, r).
    FieldPtr dressed_field(int i, int j, int r);
    /// The mode e_ij^(r)[m] applied to v (z^{-m-1} convention).
    State dressed_mode(int i, int j, int r, int m, const State& v);

    /// Summands of P_l^(r) and I_ij^(r); out-of-range summands are dropped.
    std::vector<DressedTerm> p_field_terms(int l, int r) const;
    std::vector<DressedTerm> i_field_terms(int i, int j, int r) const;
    FieldPtr p_field(int l, int r);
    FieldPtr i_field(int i, int j, int r);

    /// Plain generator field of the full complex, zero if out of range.
    FieldPtr generator_field(GenKind kind, int i, int j, int r, int deriv = 0);

private:
    State d_st_monomial(const Monomial& mono);
    FieldPtr sum_of_dressed(const std::vector<DressedTerm>& terms);

    Pyramid pyramid_;
    Scalar level_;
    StateSpace full_;
    StateSpace reduced_;
    StateSpace heisenberg_;
    std::unordered_map<Monomial, State, MonomialHash> d_st_cache_;
    std::map<std::tuple<int, int, int>, FieldPtr> dressed_;
    std::map<std::tuple<int, int, int, int, int>, FieldPtr> generator_fields_;
};

/// Identity families that verify_lemma can sweep.
enum class Lemma { Nilpotency, LowerBrackets, UpperBrackets, DifferentialAction, ChiAction };

const char* lemma_name(Lemma which);
std::optional<Lemma> lemma_from_name(const std::string& name);
/// Plain-language statement of the identities a sweep checks.
const char* lemma_statement(Lemma which);

struct SweepOptions {
    int degree_cap = 3;
    int energy_cap = -1;  // defaults to degree_cap
    int charge_cap = 2;
    int mode_lo = -2;
    int mode_hi = 2;
};

/// Checks every identity of a family as operators on all PBW basis states of
/// the full complex within the caps. Report:
/// {schema, lemma, statement, pyramid, cap, checked, status, counterexample?, ...}
nlohmann::json verify_lemma(Complex& cx, Lemma which, const SweepOptions& options);

}  // namespace cwalg
