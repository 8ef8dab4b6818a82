#include "cwalg/field.hpp"

#include <atomic>
#include <stdexcept>

namespace cwalg {

namespace {

std::size_t next_field_id()
{
    static std::atomic<std::size_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

Rational binomial(long n, int k)
{
    if (k < 0)
        return 0;
    mpz_class num = 1;
    mpz_class den = 1;
    for (int t = 0; t < k; ++t) {
        num *= n - t;
        den *= t + 1;
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Field::Field(Kind kind) : kind_(kind), id_(next_field_id()) {}

FieldPtr Field::identity()
{
    return FieldPtr(new Field(Kind::Identity));
}

FieldPtr Field::atom(const ModeAlgebra& algebra, int gen, int deriv)
{
    if (deriv < 0)
        throw std::invalid_argument("negative derivative order");
    auto f = std::shared_ptr<Field>(new Field(Kind::Atom));
    f->gen_ = gen;
    f->deriv_ = deriv;
    f->odd_ = algebra.odd(gen);
    f->weight_ = algebra.weight(gen) + deriv;
    f->psi_star_ = algebra.gen(gen).kind == GenKind::PsiStar;
    return f;
}

FieldPtr Field::atom(const ModeAlgebra& algebra, const GenIndex& g, int deriv)
{
    return atom(algebra, algebra.id(g), deriv);
}

FieldPtr Field::normal(FieldPtr left, FieldPtr right)
{
    if (left->is_zero() || right->is_zero())
        return zero();
    if (right->kind() == Kind::Identity)
        return left;
    auto f = std::shared_ptr<Field>(new Field(Kind::Normal));
    f->odd_ = left->odd() != right->odd();
    f->weight_ = left->weight() + right->weight();
    f->left_ = std::move(left);
    f->right_ = std::move(right);
    return f;
}

FieldPtr Field::sum(std::vector<std::pair<Scalar, FieldPtr>> terms)
{
    auto f = std::shared_ptr<Field>(new Field(Kind::Sum));
    bool have_parity = false;
    for (auto& [c, term] : terms) {
        if (c.is_zero() || term->is_zero())
            continue;
        if (have_parity && term->odd() != f->odd_)
            throw std::invalid_argument("sum of fields with mixed parity");
        have_parity = true;
        f->odd_ = term->odd();
        f->weight_ = std::max(f->weight_, term->weight());
        f->terms_.emplace_back(std::move(c), std::move(term));
    }
    return f;
}

FieldPtr Field::of_state(const ModeAlgebra& algebra, const State& v)
{
    std::vector<std::pair<Scalar, FieldPtr>> terms;
    for (const auto& [mono, c] : v) {
        FieldPtr f = identity();
        for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
            // X_(-d-1)|0> corresponds to d^d X(z)/d!
            const int d = -it->m - algebra.weight(it->gen);
            f = normal(atom(algebra, it->gen, d), f);
        }
        terms.emplace_back(c, std::move(f));
    }
    if (terms.size() == 1 && terms.front().first == Scalar(1L))
        return terms.front().second;
    return sum(std::move(terms));
}

}  // namespace cwalg
