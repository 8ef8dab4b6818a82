#pragma once

#include "cwalg/scalar.hpp"
#include "cwalg/statespace.hpp"

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace cwalg {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Formal field expression A(z) = sum_n A_(n) z^{-n-1}.
///
/// Atoms are divided-power derivatives d^k X(z)/k! of generating fields,
/// whose modes are (-1)^k binom(n, k) X_(n-k). Generator modes relate to
/// field modes by X_(n) = X[n] for E, e and psi, and psi*_(n) = psi*[n+1].
///
/// Normal ordering splits A into creation (n < 0) and annihilation parts:
///   :AB:_(n) = sum_{j<0} A_(j) B_(n-j-1) + (-1)^{|A||B|} sum_{j>=0} B_(n-j-1) A_(j).
class Field {
public:
    enum class Kind { Identity, Atom, Normal, Sum };

    static FieldPtr identity();
    static FieldPtr atom(const ModeAlgebra& algebra, int gen, int deriv = 0);
    static FieldPtr atom(const ModeAlgebra& algebra, const GenIndex& g, int deriv = 0);
    static FieldPtr normal(FieldPtr left, FieldPtr right);
    /// Sum of scaled fields; all summands must share one parity.
    static FieldPtr sum(std::vector<std::pair<Scalar, FieldPtr>> terms);
    static FieldPtr zero() { return sum({}); }

    /// Field of a state under the state-field correspondence, with nested
    /// normal orderings associating to the right.
    static FieldPtr of_state(const ModeAlgebra& algebra, const State& v);

    Kind kind() const { return kind_; }
    std::size_t id() const { return id_; }
    bool odd() const { return odd_; }
    /// Energy weight h: f_(n) shifts energy by h - n - 1.
    int weight() const { return weight_; }
    bool is_zero() const { return kind_ == Kind::Sum && terms_.empty(); }

    int gen() const { return gen_; }
    int deriv() const { return deriv_; }
    const FieldPtr& left() const { return left_; }
    const FieldPtr& right() const { return right_; }
    const std::vector<std::pair<Scalar, FieldPtr>>& terms() const { return terms_; }

private:
    Field(Kind kind);

    Kind kind_;
    std::size_t id_;
    bool odd_ = false;
    int weight_ = 0;
    int gen_ = -1;
    int deriv_ = 0;
    bool psi_star_ = false;
    FieldPtr left_;
    FieldPtr right_;
    std::vector<std::pair<Scalar, FieldPtr>> terms_;

    friend class StateSpace;
};

/// Generalized binomial coefficient binom(n, k) for any integer n, k >= 0.
Rational binomial(long n, int k);

}  // namespace cwalg
