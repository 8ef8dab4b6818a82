#pragma once

#include "cwalg/pyramid.hpp"
#include "cwalg/scalar.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cwalg {

/// Which induced module the modes act on.
///  Full       - C^k = V^k(a) (x) Fock space: E, psi, psi* with level k.
///  Reduced    - the induced module over b[t,1/t] + K + m[t,1/t]: lower
///               generators e (i >= j) and psi*, with K acting as k + N.
///  Heisenberg - diagonal e_ii only, purely central, level k + N.
enum class Realization { Full, Reduced, Heisenberg };

const char* realization_name(Realization r);

/// A single mode X[m]. The member order gives the canonical PBW order:
/// mode index first, then generator id (ids follow kind rank, i, j, r).
struct Mode {
    int m = 0;
    int gen = 0;

    friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// Creation modes in non-decreasing canonical order, applied to |0>.
using Monomial = std::vector<Mode>;

struct MonomialHash {
    std::size_t operator()(const Monomial& mono) const noexcept;
};

/// Generators and structure constants of one realization. Immutable after
/// construction and safe to share between threads.
class ModeAlgebra {
public:
    struct Term {
        Rational coeff;
        int gen;
    };
    struct Rule {
        std::vector<Term> lie;
        /// Central term m delta_{m,-p} * central_level() * form.
        Rational form;
        /// Clifford pairing: the anticommutator is delta_{m,-p}.
        bool clifford = false;
    };

    ModeAlgebra(Pyramid p, Realization realization, Scalar level = Scalar::k());

    const Pyramid& pyramid() const { return pyramid_; }
    Realization realization() const { return realization_; }
    const Scalar& level() const { return level_; }
    /// Value of the central element in brackets: k (full) or k + N.
    const Scalar& central_level() const { return central_level_; }

    int size() const { return static_cast<int>(gens_.size()); }
    const GenIndex& gen(int id) const { return gens_[id]; }
    std::optional<int> find(const GenIndex& g) const;
    /// Throws InadmissibleIndex when g is not a generator here.
    int id(const GenIndex& g) const;

    bool odd(int id) const { return odd_[id]; }
    /// Energy weight of the generating field: 0 for psi*, 1 otherwise.
    int weight(int id) const { return weight_[id]; }
    /// Field index m + weight - 1 is negative: E[m], psi[m] for m < 0, psi*[m] for m <= 0.
    bool creates(Mode x) const { return x.m + weight_[x.gen] - 1 < 0; }
    int deg_conformal(Mode x) const { return cwalg::deg_conformal(gens_[x.gen], x.m); }
    int charge(Mode x) const { return cwalg::charge(gens_[x.gen]); }

    const Rule& rule(int a, int b) const { return rules_[static_cast<std::size_t>(a) * gens_.size() + b]; }

    /// Supercommutator [x, y} = sum lie + central.
    void bracket(Mode x, Mode y, std::vector<std::pair<Rational, Mode>>& lie, Scalar& central) const;

    std::string mode_text(Mode x) const;

private:
    void add_lie(Rule& rule, const GenIndex& target, const Rational& coeff, bool strict);

    Pyramid pyramid_;
    Realization realization_;
    Scalar level_;
    Scalar central_level_;
    std::vector<GenIndex> gens_;
    std::map<GenIndex, int> index_;
    std::vector<char> odd_;
    std::vector<int> weight_;
    std::vector<Rule> rules_;
};

/// Finite Scalar-linear combination of PBW monomials applied to |0>.
class State {
public:
    using Terms = std::map<Monomial, Scalar>;

    State() = default;
    static State vacuum();
    static State of(Monomial mono, const Scalar& coeff = Scalar(1L));

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Terms::const_iterator begin() const { return terms_.begin(); }
    Terms::const_iterator end() const { return terms_.end(); }
    Scalar coeff(const Monomial& mono) const;

    void add(const Monomial& mono, const Scalar& coeff);
    /// this += coeff * other
    State& add_scaled(const State& other, const Scalar& coeff);

    State& operator+=(const State& rhs);
    State& operator-=(const State& rhs);
    State& operator*=(const Scalar& rhs);
    State operator-() const;

    friend State operator+(State a, const State& b) { return a += b; }
    friend State operator-(State a, const State& b) { return a -= b; }
    friend State operator*(const Scalar& c, State v) { return v *= c; }
    friend bool operator==(const State& a, const State& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const State& a, const State& b) { return !(a == b); }

    /// Substitutes a numeric value for k in every coefficient.
    State evaluated(const Rational& level) const;
    /// Keeps the monomials accepted by pred.
    template <typename Pred>
    State filtered(Pred pred) const
    {
        State out;
        for (const auto& [mono, c] : terms_)
            if (pred(mono))
                out.terms_.emplace(mono, c);
        return out;
    }

private:
    Terms terms_;
};

class Field;

/// Bounds for PBW basis sweeps. Conformal degree alone does not bound a
/// sweep (E_12[-1] has degree 0), so the energy -sum(m) is capped as well.
struct BasisCaps {
    int degree = 3;
    int energy = 3;
    int charge = 2;
};

/// Rewriting engine over one ModeAlgebra: PBW normal ordering of mode
/// actions, translation, gradings and the field calculus used for
/// n-products. Results are memoized, so an instance must not be used from
/// several threads at once; the shared ModeAlgebra may be.
class StateSpace {
public:
    explicit StateSpace(std::shared_ptr<const ModeAlgebra> algebra);

    const ModeAlgebra& algebra() const { return *algebra_; }
    std::shared_ptr<const ModeAlgebra> algebra_ptr() const { return algebra_; }

    Mode mode(const GenIndex& g, int m) const { return {m, algebra_->id(g)}; }

    /// PBW normal form of x * v.
    State apply(Mode x, const State& v);
    const State& apply(Mode x, const Monomial& mono);
    /// Applies word[last] first, word[0] last.
    State apply_word(std::span<const Mode> word, const State& v);
    /// Returns the monomial state if `modes` is already a valid PBW word,
    /// otherwise normal-orders the product applied to |0>.
    State monomial_state(std::span<const Mode> modes);

    /// Translation operator T: T|0> = 0, [T, X_(j)] = -j X_(j-1).
    State translate(const State& v);
    const State& translate(const Monomial& mono);

    /// -(sum of mode indices); every mode X[m] with m > energy kills the monomial.
    static int energy(const Monomial& mono);
    /// M with g[m] v = 0 for all m > M and every generator g.
    static int annihilation_bound(const State& v);
    int deg_conformal(const Monomial& mono) const;
    int charge(const Monomial& mono) const;
    /// Bihomogeneous components keyed by (conformal degree, charge).
    std::map<std::pair<int, int>, State> grade(const State& v) const;

    /// Ordered creation monomials within the caps (vacuum included).
    std::vector<Monomial> basis(const BasisCaps& caps) const;

    /// n-th mode of a field, f_(n) v.
    State field_mode(const Field& f, int n, const State& v);
    const State& field_mode(const Field& f, int n, const Monomial& mono);
    /// a_(n) b through the state-field correspondence.
    State n_product(const State& a, int n, const State& b);

    std::string to_text(const Monomial& mono) const;
    std::string to_text(const State& v) const;
    nlohmann::json to_json(const State& v) const;
    State from_json(const nlohmann::json& j);

    void clear_caches();

private:
    struct ModeKey {
        Mode x;
        Monomial mono;
        friend bool operator==(const ModeKey&, const ModeKey&) = default;
    };
    struct ModeKeyHash {
        std::size_t operator()(const ModeKey& k) const noexcept;
    };
    struct FieldKey {
        std::size_t field;
        int n;
        Monomial mono;
        friend bool operator==(const FieldKey&, const FieldKey&) = default;
    };
    struct FieldKeyHash {
        std::size_t operator()(const FieldKey& k) const noexcept;
    };

    State compute_apply(Mode x, const Monomial& mono);
    State compute_field_mode(const Field& f, int n, const Monomial& mono);

    std::shared_ptr<const ModeAlgebra> algebra_;
    std::unordered_map<ModeKey, State, ModeKeyHash> apply_cache_;
    std::unordered_map<Monomial, State, MonomialHash> translate_cache_;
    std::unordered_map<FieldKey, State, FieldKeyHash> field_cache_;
};

}  // namespace cwalg
