#include "cwalg/brst.hpp"

#include <functional>
#include <stdexcept>

namespace cwalg {

namespace {

std::shared_ptr<const ModeAlgebra> make_algebra(const Pyramid& p, Realization r, const Scalar& level)
{
    return std::make_shared<const ModeAlgebra>(p, r, level);
}

}  // namespace

Complex::Complex(Pyramid p, Scalar level)
    : pyramid_(std::move(p)),
      level_(std::move(level)),
      full_(make_algebra(pyramid_, Realization::Full, level_)),
      reduced_(make_algebra(pyramid_, Realization::Reduced, level_)),
      heisenberg_(make_algebra(pyramid_, Realization::Heisenberg, level_))
{
}

// ---------------------------------------------------------------------------
// differentials

State Complex::d_st(const State& v)
{
    State out;
    for (const auto& [mono, c] : v) {
        auto it = d_st_cache_.find(mono);
        if (it == d_st_cache_.end())
            it = d_st_cache_.emplace(mono, d_st_monomial(mono)).first;
        out.add_scaled(it->second, c);
    }
    return out;
}

State Complex::d_st_monomial(const Monomial& mono)
{
    const ModeAlgebra& alg = full_.algebra();
    const int n = pyramid_.n();
    const int e = StateSpace::energy(mono);
    const State v = State::of(mono);
    State out;

    // sum_{i<j} sum_m E_ij^(a)[m] psi*_ij^(a)[-m]; the two factors commute,
    // E[m] kills v for m > e and psi*[-m] kills it for -m > e.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Window w = pyramid_.shifts(GenKind::PsiStar, i, j);
            for (int a = w.lo; a <= w.hi; ++a) {
                const int eg = alg.id({GenKind::E, i, j, a});
                const int pg = alg.id({GenKind::PsiStar, i, j, a});
                for (int m = -e; m <= e; ++m) {
                    const State inner = full_.apply(Mode{-m, pg}, v);
                    if (!inner.is_zero())
                        out += full_.apply(Mode{m, eg}, inner);
                }
            }
        }

    // - sum_{i<j<h} psi*_ij^(a)[m] psi*_jh^(b)[p] psi_ih^(a+b)[s], m + p + s = 0.
    // The three index pairs differ, so the factors anticommute and each one
    // is bounded by e separately.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int h = j + 1; h <= n; ++h) {
                const Window wa = pyramid_.shifts(GenKind::PsiStar, i, j);
                const Window wb = pyramid_.shifts(GenKind::PsiStar, j, h);
                for (int a = wa.lo; a <= wa.hi; ++a)
                    for (int b = wb.lo; b <= wb.hi; ++b) {
                        const auto psi = alg.find({GenKind::Psi, i, h, a + b});
                        if (!psi)
                            continue;
                        const int g1 = alg.id({GenKind::PsiStar, i, j, a});
                        const int g2 = alg.id({GenKind::PsiStar, j, h, b});
                        for (int s = -2 * e; s <= e; ++s) {
                            const State v3 = full_.apply(Mode{s, *psi}, v);
                            if (v3.is_zero())
                                continue;
                            for (int p = -2 * e; p <= e; ++p) {
                                const int m = -p - s;
                                if (m < -2 * e || m > e)
                                    continue;
                                const State v2 = full_.apply(Mode{p, g2}, v3);
                                if (!v2.is_zero())
                                    out -= full_.apply(Mode{m, g1}, v2);
                            }
                        }
                    }
            }
    return out;
}

State Complex::chi(const State& v)
{
    const ModeAlgebra& alg = full_.algebra();
    State out;
    for (int i = 1; i < pyramid_.n(); ++i)
        out += full_.apply(Mode{1, alg.id({GenKind::PsiStar, i, i + 1, pyramid_.lambda(i + 1) - 1})}, v);
    return out;
}

State Complex::d(const State& v)
{
    return d_st(v) + chi(v);
}

// ---------------------------------------------------------------------------
// fields

FieldPtr Complex::generator_field(GenKind kind, int i, int j, int r, int deriv)
{
    const auto key = std::make_tuple(static_cast<int>(kind), i, j, r, deriv);
    auto it = generator_fields_.find(key);
    if (it != generator_fields_.end())
        return it->second;
    const auto id = full_.algebra().find({kind, i, j, r});
    FieldPtr f = id ? Field::atom(full_.algebra(), *id, deriv) : Field::zero();
    generator_fields_.emplace(key, f);
    return f;
}

FieldPtr Complex::dressed_field(int i, int j, int r)
{
    const auto key = std::make_tuple(i, j, r);
    auto it = dressed_.find(key);
    if (it != dressed_.end())
        return it->second;

    const int n = pyramid_.n();
    FieldPtr out;
    if (i < 1 || j < 1 || i > n || j > n || !pyramid_.shifts(GenKind::E, i, j).contains(r)) {
        out = Field::zero();
    } else {
        std::vector<std::pair<Scalar, FieldPtr>> terms;
        terms.emplace_back(Scalar(1L), generator_field(GenKind::E, i, j, r));
        // the h-ranges differ between i < j and i >= j
        const int upper_from = (i < j ? j : i) + 1;
        const int lower_to = (i < j ? i : j) - 1;
        for (int h = upper_from; h <= n; ++h) {
            const Window w = pyramid_.shifts(GenKind::Psi, i, h);
            for (int a = w.lo; a <= w.hi; ++a) {
                FieldPtr f = Field::normal(generator_field(GenKind::Psi, i, h, a),
                                           generator_field(GenKind::PsiStar, j, h, a - r));
                terms.emplace_back(Scalar(1L), f);
            }
        }
        for (int h = 1; h <= lower_to; ++h) {
            const Window w = pyramid_.shifts(GenKind::Psi, h, j);
            for (int a = w.lo; a <= w.hi; ++a) {
                FieldPtr f = Field::normal(generator_field(GenKind::Psi, h, j, a),
                                           generator_field(GenKind::PsiStar, h, i, a - r));
                terms.emplace_back(Scalar(-1L), f);
            }
        }
        out = Field::sum(std::move(terms));
    }
    dressed_.emplace(key, out);
    return out;
}

State Complex::dressed_mode(int i, int j, int r, int m, const State& v)
{
    if (!pyramid_.shifts(GenKind::E, i, j).contains(r))
        throw InadmissibleIndex("no dressed generator e_" + std::to_string(i) + std::to_string(j) + "^(" +
                                std::to_string(r) + ") for pyramid " + pyramid_.to_string());
    return full_.field_mode(*dressed_field(i, j, r), m, v);
}

std::vector<DressedTerm> Complex::p_field_terms(int l, int r) const
{
    const int n = pyramid_.n();
    std::vector<DressedTerm> out;
    int shift = r;
    for (int t = 0; t <= n - l; ++t) {
        if (t > 0)
            shift += pyramid_.lambda(n - t + 1) - pyramid_.lambda(n - l + 2 - t);
        const int i = n - t;
        const int j = n - l + 1 - t;
        if (pyramid_.shifts(GenKind::E, i, j).contains(shift))
            out.push_back({i, j, shift});
    }
    return out;
}

std::vector<DressedTerm> Complex::i_field_terms(int i, int j, int r) const
{
    std::vector<DressedTerm> out;
    int shift = r;
    for (int h = 1; h <= i; ++h) {
        if (h > 1)
            shift += pyramid_.lambda(j - h + 1) - pyramid_.lambda(i - h + 2);
        const int a = j - h;
        const int b = i - h + 1;
        if (pyramid_.shifts(GenKind::E, a, b).contains(shift))
            out.push_back({a, b, shift});
    }
    return out;
}

FieldPtr Complex::sum_of_dressed(const std::vector<DressedTerm>& terms)
{
    std::vector<std::pair<Scalar, FieldPtr>> parts;
    for (const auto& t : terms)
        parts.emplace_back(Scalar(1L), dressed_field(t.i, t.j, t.r));
    return Field::sum(std::move(parts));
}

FieldPtr Complex::p_field(int l, int r)
{
    return sum_of_dressed(p_field_terms(l, r));
}

FieldPtr Complex::i_field(int i, int j, int r)
{
    return sum_of_dressed(i_field_terms(i, j, r));
}

// ---------------------------------------------------------------------------
// identity sweeps

const char* lemma_name(Lemma which)
{
    switch (which) {
    case Lemma::Nilpotency:
        return "nilpotency";
    case Lemma::LowerBrackets:
        return "lower-brackets";
    case Lemma::UpperBrackets:
        return "upper-brackets";
    case Lemma::DifferentialAction:
        return "differential-action";
    case Lemma::ChiAction:
        return "chi-action";
    }
    return "?";
}

std::optional<Lemma> lemma_from_name(const std::string& name)
{
    for (Lemma l : {Lemma::Nilpotency, Lemma::LowerBrackets, Lemma::UpperBrackets, Lemma::DifferentialAction,
                    Lemma::ChiAction})
        if (name == lemma_name(l))
            return l;
    return std::nullopt;
}

const char* lemma_statement(Lemma which)
{
    switch (which) {
    case Lemma::Nilpotency:
        return "d_st^2 = chi^2 = d_st chi + chi d_st = 0 (hence d^2 = 0)";
    case Lemma::LowerBrackets:
        return "brackets of lower dressed modes e_ij (i >= j) with psi* and with each other; "
               "central term m delta_{m,-p} (k+N) <E_ij, E_hl>";
    case Lemma::UpperBrackets:
        return "brackets of upper dressed modes e_ij (i < j) with psi and with each other; no central term";
    case Lemma::DifferentialAction:
        return "action of d_st and chi on dressed fields e_ij, on psi and on psi*";
    case Lemma::ChiAction:
        return "[chi, P_l^(r)(z)] = 0 and [chi, I_ij^(r)(z)] = psi*_ij^(lambda_j-r-1)(z)";
    }
    return "?";
}

namespace {

using Op = std::function<State(const State&)>;

struct Identity {
    std::string label;
    Op lhs;
    Op rhs;
};

// [A, B} with the Koszul sign
Op bracket(Op a, Op b, bool both_odd)
{
    return [a = std::move(a), b = std::move(b), both_odd](const State& v) {
        State out = a(b(v));
        if (both_odd)
            out += b(a(v));
        else
            out -= b(a(v));
        return out;
    };
}

Op zero_op()
{
    return [](const State&) { return State(); };
}

std::string dressed_label(int i, int j, int r, int m)
{
    return "e_" + std::to_string(i) + std::to_string(j) + "^(" + std::to_string(r) + ")[" + std::to_string(m) + "]";
}

std::string fermion_label(const char* name, int i, int j, int r, int m)
{
    return std::string(name) + "_" + std::to_string(i) + std::to_string(j) + "^(" + std::to_string(r) + ")[" +
           std::to_string(m) + "]";
}

class Builder {
public:
    explicit Builder(Complex& cx) : cx_(cx), alg_(cx.full().algebra()), p_(cx.pyramid()) {}

    Op e(int i, int j, int r, int m)
    {
        if (!p_.shifts(GenKind::E, i, j).contains(r))
            return zero_op();
        return [this, i, j, r, m](const State& v) { return cx_.dressed_mode(i, j, r, m, v); };
    }
    Op gen(GenKind kind, int i, int j, int r, int m)
    {
        const auto id = alg_.find({kind, i, j, r});
        if (!id)
            return zero_op();
        const Mode x{m, *id};
        return [this, x](const State& v) { return cx_.full().apply(x, v); };
    }
    Op field(FieldPtr f, int n)
    {
        return [this, f, n](const State& v) { return cx_.full().field_mode(*f, n, v); };
    }
    Op d_st()
    {
        return [this](const State& v) { return cx_.d_st(v); };
    }
    Op chi()
    {
        return [this](const State& v) { return cx_.chi(v); };
    }
    static Op scaled(Op a, Scalar c)
    {
        return [a = std::move(a), c](const State& v) { return c * a(v); };
    }
    static Op plus(std::vector<Op> ops)
    {
        return [ops = std::move(ops)](const State& v) {
            State out;
            for (const auto& op : ops)
                out += op(v);
            return out;
        };
    }

    Complex& cx_;
    const ModeAlgebra& alg_;
    const Pyramid& p_;
};

std::vector<Identity> nilpotency(Builder& b)
{
    std::vector<Identity> out;
    out.push_back({"d_st^2", [&b](const State& v) { return b.cx_.d_st(b.cx_.d_st(v)); }, zero_op()});
    out.push_back({"chi^2", [&b](const State& v) { return b.cx_.chi(b.cx_.chi(v)); }, zero_op()});
    out.push_back({"d_st chi + chi d_st", bracket(b.d_st(), b.chi(), true), zero_op()});
    out.push_back({"d^2", [&b](const State& v) { return b.cx_.d(b.cx_.d(v)); }, zero_op()});
    return out;
}

std::vector<Identity> lower_brackets(Builder& b, const SweepOptions& o)
{
    const Pyramid& p = b.p_;
    const int n = p.n();
    const Scalar shifted = b.cx_.level() + Scalar(static_cast<long>(p.N()));
    std::vector<Identity> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            for (int r = 0; r < p.lambda(j); ++r)
                for (int m = o.mode_lo; m <= o.mode_hi; ++m) {
                    // with psi*
                    for (int h = 1; h <= n; ++h)
                        for (int l = h + 1; l <= n; ++l) {
                            const Window ws = p.shifts(GenKind::PsiStar, h, l);
                            for (int s = ws.lo; s <= ws.hi; ++s)
                                for (int q = o.mode_lo; q <= o.mode_hi; ++q) {
                                    std::vector<Op> rhs;
                                    if (l == j)
                                        rhs.push_back(b.gen(GenKind::PsiStar, h, i, s - r, m + q));
                                    if (h == i)
                                        rhs.push_back(Builder::scaled(b.gen(GenKind::PsiStar, j, l, s - r, m + q), -1L));
                                    out.push_back({"[" + dressed_label(i, j, r, m) + ", " +
                                                       fermion_label("psi*", h, l, s, q) + "]",
                                                   bracket(b.e(i, j, r, m), b.gen(GenKind::PsiStar, h, l, s, q), false),
                                                   Builder::plus(std::move(rhs))});
                                }
                        }
                    // with lower dressed modes
                    for (int h = 1; h <= n; ++h)
                        for (int l = 1; l <= h; ++l)
                            for (int s = 0; s < p.lambda(l); ++s)
                                for (int q = o.mode_lo; q <= o.mode_hi; ++q) {
                                    std::vector<Op> rhs;
                                    if (h == j)
                                        rhs.push_back(b.e(i, l, r + s, m + q));
                                    if (i == l)
                                        rhs.push_back(Builder::scaled(b.e(h, j, r + s, m + q), -1L));
                                    const Rational f = form(p, {GenKind::E, i, j, r}, {GenKind::E, h, l, s});
                                    if (m + q == 0 && m != 0 && f != 0) {
                                        const Scalar central = shifted * (f * m);
                                        rhs.push_back([central](const State& v) { return central * v; });
                                    }
                                    out.push_back({"[" + dressed_label(i, j, r, m) + ", " + dressed_label(h, l, s, q) + "]",
                                                   bracket(b.e(i, j, r, m), b.e(h, l, s, q), false),
                                                   Builder::plus(std::move(rhs))});
                                }
                }
    return out;
}

std::vector<Identity> upper_brackets(Builder& b, const SweepOptions& o)
{
    const Pyramid& p = b.p_;
    const int n = p.n();
    std::vector<Identity> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Window wr = p.shifts(GenKind::E, i, j);
            for (int r = wr.lo; r <= wr.hi; ++r)
                for (int m = o.mode_lo; m <= o.mode_hi; ++m)
                    for (int h = 1; h <= n; ++h)
                        for (int l = h + 1; l <= n; ++l) {
                            const Window ws = p.shifts(GenKind::E, h, l);
                            for (int s = ws.lo; s <= ws.hi; ++s)
                                for (int q = o.mode_lo; q <= o.mode_hi; ++q) {
                                    std::vector<Op> rhs_psi;
                                    std::vector<Op> rhs_e;
                                    if (h == j) {
                                        rhs_psi.push_back(b.gen(GenKind::Psi, i, l, r + s, m + q));
                                        rhs_e.push_back(b.e(i, l, r + s, m + q));
                                    }
                                    if (i == l) {
                                        rhs_psi.push_back(Builder::scaled(b.gen(GenKind::Psi, h, j, r + s, m + q), -1L));
                                        rhs_e.push_back(Builder::scaled(b.e(h, j, r + s, m + q), -1L));
                                    }
                                    out.push_back({"[" + dressed_label(i, j, r, m) + ", " +
                                                       fermion_label("psi", h, l, s, q) + "]",
                                                   bracket(b.e(i, j, r, m), b.gen(GenKind::Psi, h, l, s, q), false),
                                                   Builder::plus(std::move(rhs_psi))});
                                    out.push_back({"[" + dressed_label(i, j, r, m) + ", " + dressed_label(h, l, s, q) + "]",
                                                   bracket(b.e(i, j, r, m), b.e(h, l, s, q), false),
                                                   Builder::plus(std::move(rhs_e))});
                                }
                        }
        }
    return out;
}

std::vector<Identity> differential_action(Builder& b, const SweepOptions& o)
{
    Complex& cx = b.cx_;
    const Pyramid& p = b.p_;
    const int n = p.n();
    std::vector<Identity> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Window wr = p.shifts(GenKind::E, i, j);
            for (int r = wr.lo; r <= wr.hi; ++r) {
                FieldPtr rhs_field;
                if (i >= j) {
                    // sum_{h=j}^{i-1} :e_hj^(a+r) psi*_hi^(a): - sum_{h=j+1}^{i} :psi*_jh^(a) e_ih^(a+r):
                    //   + alpha_j delta_r0 d psi*_ji^(0)
                    std::vector<std::pair<Scalar, FieldPtr>> terms;
                    for (int h = j; h <= i - 1; ++h) {
                        const Window wa = p.shifts(GenKind::PsiStar, h, i);
                        for (int a = wa.lo; a <= wa.hi; ++a)
                            terms.emplace_back(1L, Field::normal(cx.dressed_field(h, j, a + r),
                                                                 cx.generator_field(GenKind::PsiStar, h, i, a)));
                    }
                    for (int h = j + 1; h <= i; ++h) {
                        const Window wa = p.shifts(GenKind::PsiStar, j, h);
                        for (int a = wa.lo; a <= wa.hi; ++a)
                            terms.emplace_back(-1L, Field::normal(cx.generator_field(GenKind::PsiStar, j, h, a),
                                                                  cx.dressed_field(i, h, a + r)));
                    }
                    if (r == 0)
                        terms.emplace_back(alpha(p, j, cx.level()), cx.generator_field(GenKind::PsiStar, j, i, 0, 1));
                    rhs_field = Field::sum(std::move(terms));
                }
                for (int m = o.mode_lo; m <= o.mode_hi; ++m) {
                    const std::string tag = dressed_label(i, j, r, m);
                    if (i >= j) {
                        out.push_back({"[d_st, " + tag + "]", bracket(b.d_st(), b.e(i, j, r, m), false),
                                       b.field(rhs_field, m)});
                        std::vector<Op> rhs;
                        if (i < n)
                            rhs.push_back(b.gen(GenKind::PsiStar, j, i + 1, p.lambda(i + 1) - r - 1, m + 1));
                        if (j > 1)
                            rhs.push_back(
                                Builder::scaled(b.gen(GenKind::PsiStar, j - 1, i, p.lambda(j) - r - 1, m + 1), -1L));
                        out.push_back({"[chi, " + tag + "]", bracket(b.chi(), b.e(i, j, r, m), false),
                                       Builder::plus(std::move(rhs))});
                    } else {
                        out.push_back({"[d_st, " + tag + "]", bracket(b.d_st(), b.e(i, j, r, m), false), zero_op()});
                        out.push_back({"[chi, " + tag + "]", bracket(b.chi(), b.e(i, j, r, m), false), zero_op()});
                        const std::string ptag = fermion_label("psi", i, j, r, m);
                        out.push_back({"[d_st, " + ptag + "]", bracket(b.d_st(), b.gen(GenKind::Psi, i, j, r, m), true),
                                       b.e(i, j, r, m)});
                        const bool unit = j == i + 1 && r == p.lambda(j) - 1 && m == -1;
                        out.push_back({"[chi, " + ptag + "]", bracket(b.chi(), b.gen(GenKind::Psi, i, j, r, m), true),
                                       unit ? Op([](const State& v) { return v; }) : zero_op()});
                        // [d_st, psi*_ij^(r)(z)] = -sum_{i<h<j} psi*_ih^(a)(z) psi*_hj^(r-a)(z)
                        std::vector<std::pair<Scalar, FieldPtr>> terms;
                        for (int h = i + 1; h < j; ++h) {
                            const Window wa = p.shifts(GenKind::PsiStar, i, h);
                            for (int a = wa.lo; a <= wa.hi; ++a)
                                terms.emplace_back(-1L, Field::normal(cx.generator_field(GenKind::PsiStar, i, h, a),
                                                                      cx.generator_field(GenKind::PsiStar, h, j, r - a)));
                        }
                        FieldPtr quad = Field::sum(std::move(terms));
                        const std::string stag = fermion_label("psi*", i, j, r, m);
                        // psi*(z) = sum psi*[m] z^{-m}, so psi*[m] pairs with field index m - 1
                        out.push_back({"[d_st, " + stag + "]",
                                       bracket(b.d_st(), b.gen(GenKind::PsiStar, i, j, r, m), true), b.field(quad, m - 1)});
                        out.push_back({"[chi, " + stag + "]",
                                       bracket(b.chi(), b.gen(GenKind::PsiStar, i, j, r, m), true), zero_op()});
                    }
                }
            }
        }
    return out;
}

std::vector<Identity> chi_action(Builder& b, const SweepOptions& o)
{
    Complex& cx = b.cx_;
    const Pyramid& p = b.p_;
    const int n = p.n();
    std::vector<Identity> out;
    for (int l = 1; l <= n; ++l)
        for (int r = 0; r < p.lambda(n - l + 1); ++r) {
            FieldPtr f = cx.p_field(l, r);
            for (int m = o.mode_lo; m <= o.mode_hi; ++m)
                out.push_back({"[chi, P_" + std::to_string(l) + "^(" + std::to_string(r) + ")[" + std::to_string(m) + "]]",
                               bracket(b.chi(), b.field(f, m), false), zero_op()});
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int r = 0; r < p.lambda(i); ++r) {
                FieldPtr f = cx.i_field(i, j, r);
                for (int m = o.mode_lo; m <= o.mode_hi; ++m)
                    out.push_back({"[chi, I_" + std::to_string(i) + std::to_string(j) + "^(" + std::to_string(r) + ")[" +
                                       std::to_string(m) + "]]",
                                   bracket(b.chi(), b.field(f, m), false),
                                   b.gen(GenKind::PsiStar, i, j, p.lambda(j) - r - 1, m + 1)});
            }
    return out;
}

}  // namespace

nlohmann::json verify_lemma(Complex& cx, Lemma which, const SweepOptions& options)
{
    Builder b(cx);
    std::vector<Identity> ids;
    switch (which) {
    case Lemma::Nilpotency:
        ids = nilpotency(b);
        break;
    case Lemma::LowerBrackets:
        ids = lower_brackets(b, options);
        break;
    case Lemma::UpperBrackets:
        ids = upper_brackets(b, options);
        break;
    case Lemma::DifferentialAction:
        ids = differential_action(b, options);
        break;
    case Lemma::ChiAction:
        ids = chi_action(b, options);
        break;
    }

    BasisCaps caps;
    caps.degree = options.degree_cap;
    caps.energy = options.energy_cap >= 0 ? options.energy_cap : options.degree_cap;
    caps.charge = options.charge_cap;
    const auto basis = cx.full().basis(caps);

    nlohmann::json report = {{"schema", 1},
                             {"lemma", lemma_name(which)},
                             {"statement", lemma_statement(which)},
                             {"pyramid", cx.pyramid().to_json()},
                             {"level", cx.level().to_string()},
                             {"cap", options.degree_cap},
                             {"energy_cap", caps.energy},
                             {"charge_cap", caps.charge},
                             {"modes", {options.mode_lo, options.mode_hi}},
                             {"identities", ids.size()},
                             {"basis_states", basis.size()}};
    if (which == Lemma::LowerBrackets)
        report["central_level"] = (cx.level() + Scalar(static_cast<long>(cx.pyramid().N()))).to_string();

    std::size_t checked = 0;
    for (const auto& id : ids)
        for (const auto& mono : basis) {
            const State v = State::of(mono);
            const State diff = id.lhs(v) - id.rhs(v);
            ++checked;
            if (!diff.is_zero()) {
                report["status"] = "fail";
                report["checked"] = checked;
                report["counterexample"] = {{"identity", id.label},
                                            {"state", cx.full().to_text(mono)},
                                            {"lhs_minus_rhs", cx.full().to_text(diff)}};
                return report;
            }
        }
    report["status"] = "pass";
    report["checked"] = checked;
    return report;
}

}  // namespace cwalg
