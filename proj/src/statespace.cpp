#include "cwalg/statespace.hpp"

#include "cwalg/field.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cwalg {

namespace {

inline std::size_t mix(std::size_t seed, std::size_t v)
{
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t mode_hash(Mode x)
{
    return (static_cast<std::size_t>(static_cast<unsigned>(x.m)) << 20) ^ static_cast<std::size_t>(x.gen);
}

}  // namespace

const char* realization_name(Realization r)
{
    switch (r) {
    case Realization::Full:
        return "full";
    case Realization::Reduced:
        return "reduced";
    case Realization::Heisenberg:
        return "heisenberg";
    }
    return "?";
}

std::size_t MonomialHash::operator()(const Monomial& mono) const noexcept
{
    std::size_t h = mono.size();
    for (Mode x : mono)
        h = mix(h, mode_hash(x));
    return h;
}

// ---------------------------------------------------------------------------
// ModeAlgebra

ModeAlgebra::ModeAlgebra(Pyramid p, Realization realization, Scalar level)
    : pyramid_(std::move(p)), realization_(realization), level_(std::move(level))
{
    central_level_ = realization_ == Realization::Full ? level_ : level_ + Scalar(static_cast<long>(pyramid_.N()));

    const int n = pyramid_.n();
    auto push_family = [&](GenKind kind, auto accept) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (!accept(i, j))
                    continue;
                const Window w = pyramid_.shifts(kind, i, j);
                for (int r = w.lo; r <= w.hi; ++r)
                    gens_.push_back({kind, i, j, r});
            }
    };
    switch (realization_) {
    case Realization::Full:
        push_family(GenKind::E, [](int, int) { return true; });
        push_family(GenKind::Psi, [](int i, int j) { return i < j; });
        push_family(GenKind::PsiStar, [](int i, int j) { return i < j; });
        break;
    case Realization::Reduced:
        push_family(GenKind::ELow, [](int i, int j) { return i >= j; });
        push_family(GenKind::PsiStar, [](int i, int j) { return i < j; });
        break;
    case Realization::Heisenberg:
        push_family(GenKind::ELow, [](int i, int j) { return i == j; });
        break;
    }
    std::sort(gens_.begin(), gens_.end(), [](const GenIndex& a, const GenIndex& b) {
        return std::tuple(kind_rank(a.kind), a.i, a.j, a.r) < std::tuple(kind_rank(b.kind), b.i, b.j, b.r);
    });
    for (int id = 0; id < size(); ++id) {
        index_.emplace(gens_[id], id);
        const bool fermion = gens_[id].kind == GenKind::Psi || gens_[id].kind == GenKind::PsiStar;
        odd_.push_back(fermion ? 1 : 0);
        weight_.push_back(gens_[id].kind == GenKind::PsiStar ? 0 : 1);
    }

    rules_.resize(gens_.size() * gens_.size());
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            Rule& rule = rules_[static_cast<std::size_t>(a) * gens_.size() + b];
            const GenIndex& x = gens_[a];
            const GenIndex& y = gens_[b];
            const bool x_even = !odd_[a];
            const bool y_even = !odd_[b];
            if (x_even && y_even) {
                // [E_ij^(r), E_hl^(s)] = delta_hj E_il^(r+s) - delta_il E_hj^(r+s)
                if (realization_ != Realization::Heisenberg) {
                    if (y.i == x.j)
                        add_lie(rule, {x.kind, x.i, y.j, x.r + y.r}, 1, true);
                    if (x.i == y.j)
                        add_lie(rule, {x.kind, y.i, x.j, x.r + y.r}, -1, true);
                }
                rule.form = form(pyramid_, x, y);
            } else if (!x_even && !y_even) {
                rule.clifford = x.kind != y.kind && x.i == y.i && x.j == y.j && x.r == y.r;
            } else if (realization_ == Realization::Reduced) {
                // [e_ij^(r)[m], psi*_hl^(s)[p]] = delta_lj psi*_hi^(s-r) - delta_hi psi*_jl^(s-r)
                const GenIndex& e = x_even ? x : y;
                const GenIndex& f = x_even ? y : x;
                const int sign = x_even ? 1 : -1;
                if (f.j == e.j)
                    add_lie(rule, {GenKind::PsiStar, f.i, e.i, f.r - e.r}, sign, false);
                if (f.i == e.i)
                    add_lie(rule, {GenKind::PsiStar, e.j, f.j, f.r - e.r}, -sign, false);
            }
        }
}

void ModeAlgebra::add_lie(Rule& rule, const GenIndex& target, const Rational& coeff, bool strict)
{
    const auto found = find(target);
    if (!found) {
        // Superscripts past the top of the range vanish; anything else would
        // mean the structure constants are not closed.
        const Window w = pyramid_.shifts(target.kind, target.i, target.j);
        if (strict && !w.empty() && target.r < w.lo)
            throw std::logic_error("bracket leaves the generator set at " + to_string(target));
        return;
    }
    for (auto it = rule.lie.begin(); it != rule.lie.end(); ++it)
        if (it->gen == *found) {
            it->coeff += coeff;
            if (it->coeff == 0)
                rule.lie.erase(it);
            return;
        }
    rule.lie.push_back({coeff, *found});
}

std::optional<int> ModeAlgebra::find(const GenIndex& g) const
{
    auto it = index_.find(g);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int ModeAlgebra::id(const GenIndex& g) const
{
    auto found = find(g);
    if (!found)
        throw InadmissibleIndex("no generator " + to_string(g) + " in the " + realization_name(realization_) +
                                " realization of pyramid " + pyramid_.to_string());
    return *found;
}

void ModeAlgebra::bracket(Mode x, Mode y, std::vector<std::pair<Rational, Mode>>& lie, Scalar& central) const
{
    lie.clear();
    central = Scalar();
    const Rule& r = rule(x.gen, y.gen);
    for (const Term& t : r.lie)
        lie.emplace_back(t.coeff, Mode{x.m + y.m, t.gen});
    if (x.m + y.m != 0)
        return;
    if (r.clifford)
        central = Scalar(1L);
    else if (r.form != 0 && x.m != 0)
        central = central_level_ * (r.form * x.m);
}

std::string ModeAlgebra::mode_text(Mode x) const
{
    const GenIndex& g = gens_[x.gen];
    std::ostringstream os;
    os << kind_name(g.kind) << "[" << g.i << "," << g.j << "," << g.r << ";" << x.m << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// State

State State::vacuum()
{
    return of({});
}

State State::of(Monomial mono, const Scalar& coeff)
{
    State s;
    if (!coeff.is_zero())
        s.terms_.emplace(std::move(mono), coeff);
    return s;
}

Scalar State::coeff(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar() : it->second;
}

void State::add(const Monomial& mono, const Scalar& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

State& State::add_scaled(const State& other, const Scalar& coeff)
{
    if (coeff.is_zero())
        return *this;
    const bool unit = coeff == Scalar(1L);
    for (const auto& [mono, c] : other.terms_)
        add(mono, unit ? c : c * coeff);
    return *this;
}

State& State::operator+=(const State& rhs)
{
    for (const auto& [mono, c] : rhs.terms_)
        add(mono, c);
    return *this;
}

State& State::operator-=(const State& rhs)
{
    for (const auto& [mono, c] : rhs.terms_)
        add(mono, -c);
    return *this;
}

State& State::operator*=(const Scalar& rhs)
{
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_)
        c *= rhs;
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    return *this;
}

State State::operator-() const
{
    State out = *this;
    for (auto& [mono, c] : out.terms_)
        c = -c;
    return out;
}

State State::evaluated(const Rational& level) const
{
    State out;
    for (const auto& [mono, c] : terms_)
        out.add(mono, Scalar(c.evaluate(level)));
    return out;
}

// ---------------------------------------------------------------------------
// StateSpace

std::size_t StateSpace::ModeKeyHash::operator()(const ModeKey& k) const noexcept
{
    return mix(MonomialHash{}(k.mono), mode_hash(k.x));
}

std::size_t StateSpace::FieldKeyHash::operator()(const FieldKey& k) const noexcept
{
    return mix(mix(MonomialHash{}(k.mono), k.field), static_cast<std::size_t>(k.n + 4096));
}

StateSpace::StateSpace(std::shared_ptr<const ModeAlgebra> algebra) : algebra_(std::move(algebra)) {}

void StateSpace::clear_caches()
{
    apply_cache_.clear();
    translate_cache_.clear();
    field_cache_.clear();
}

State StateSpace::apply(Mode x, const State& v)
{
    State out;
    for (const auto& [mono, c] : v)
        out.add_scaled(apply(x, mono), c);
    return out;
}

const State& StateSpace::apply(Mode x, const Monomial& mono)
{
    ModeKey key{x, mono};
    auto it = apply_cache_.find(key);
    if (it != apply_cache_.end())
        return it->second;
    State result = compute_apply(x, mono);
    return apply_cache_.emplace(std::move(key), std::move(result)).first->second;
}

State StateSpace::compute_apply(Mode x, const Monomial& mono)
{
    const ModeAlgebra& alg = *algebra_;
    if (mono.empty()) {
        if (alg.creates(x))
            return State::of({x});
        return {};
    }
    const Mode a1 = mono.front();
    if (alg.creates(x)) {
        if (x < a1 || (x == a1 && !alg.odd(x.gen))) {
            Monomial out;
            out.reserve(mono.size() + 1);
            out.push_back(x);
            out.insert(out.end(), mono.begin(), mono.end());
            return State::of(std::move(out));
        }
        if (x == a1)
            return {};
    }

    // x a1 R = (+-) a1 (x R) + [x, a1} R
    const Monomial rest(mono.begin() + 1, mono.end());
    State out;
    const Scalar sign((alg.odd(x.gen) && alg.odd(a1.gen)) ? -1L : 1L);
    {
        const State inner = apply(x, rest);
        for (const auto& [m2, c] : inner)
            out.add_scaled(apply(a1, m2), c * sign);
    }
    std::vector<std::pair<Rational, Mode>> lie;
    Scalar central;
    alg.bracket(x, a1, lie, central);
    for (const auto& [c, mode] : lie)
        out.add_scaled(apply(mode, rest), Scalar(c));
    if (!central.is_zero())
        out.add(rest, central);
    return out;
}

State StateSpace::apply_word(std::span<const Mode> word, const State& v)
{
    State cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = apply(*it, cur);
    return cur;
}

State StateSpace::monomial_state(std::span<const Mode> modes)
{
    const ModeAlgebra& alg = *algebra_;
    bool ordered = true;
    for (std::size_t a = 0; a < modes.size() && ordered; ++a) {
        if (!alg.creates(modes[a]))
            ordered = false;
        else if (a > 0 && (modes[a] < modes[a - 1] || (modes[a] == modes[a - 1] && alg.odd(modes[a].gen))))
            ordered = false;
    }
    if (ordered)
        return State::of(Monomial(modes.begin(), modes.end()));
    return apply_word(modes, State::vacuum());
}

State StateSpace::translate(const State& v)
{
    State out;
    for (const auto& [mono, c] : v)
        out.add_scaled(translate(mono), c);
    return out;
}

const State& StateSpace::translate(const Monomial& mono)
{
    auto it = translate_cache_.find(mono);
    if (it != translate_cache_.end())
        return it->second;
    State result;
    if (!mono.empty()) {
        // T(a1 R) = [T, a1] R + a1 T(R), with [T, X_(j)] = -j X_(j-1)
        const Mode a1 = mono.front();
        const Monomial rest(mono.begin() + 1, mono.end());
        const int j = a1.m + algebra_->weight(a1.gen) - 1;
        if (j != 0)
            result.add_scaled(apply(Mode{a1.m - 1, a1.gen}, rest), Scalar(static_cast<long>(-j)));
        const State tail = translate(rest);
        for (const auto& [m2, c] : tail)
            result.add_scaled(apply(a1, m2), c);
    }
    return translate_cache_.emplace(mono, std::move(result)).first->second;
}

int StateSpace::energy(const Monomial& mono)
{
    int e = 0;
    for (Mode x : mono)
        e -= x.m;
    return e;
}

int StateSpace::annihilation_bound(const State& v)
{
    int bound = 0;
    for (const auto& [mono, c] : v)
        bound = std::max(bound, energy(mono));
    return bound;
}

int StateSpace::deg_conformal(const Monomial& mono) const
{
    int d = 0;
    for (Mode x : mono)
        d += algebra_->deg_conformal(x);
    return d;
}

int StateSpace::charge(const Monomial& mono) const
{
    int c = 0;
    for (Mode x : mono)
        c += algebra_->charge(x);
    return c;
}

std::map<std::pair<int, int>, State> StateSpace::grade(const State& v) const
{
    std::map<std::pair<int, int>, State> out;
    for (const auto& [mono, c] : v)
        out[{deg_conformal(mono), charge(mono)}].add(mono, c);
    return out;
}

std::vector<Monomial> StateSpace::basis(const BasisCaps& caps) const
{
    const ModeAlgebra& alg = *algebra_;
    std::vector<Mode> candidates;
    for (int g = 0; g < alg.size(); ++g)
        for (int m = -caps.energy; alg.creates({m, g}); ++m)
            candidates.push_back({m, g});
    std::sort(candidates.begin(), candidates.end());

    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, int)> extend = [&](std::size_t from, int energy_left) {
        if (deg_conformal(cur) <= caps.degree && std::abs(charge(cur)) <= caps.charge)
            out.push_back(cur);
        for (std::size_t a = from; a < candidates.size(); ++a) {
            const Mode x = candidates[a];
            if (-x.m > energy_left)
                continue;
            cur.push_back(x);
            extend(alg.odd(x.gen) ? a + 1 : a, energy_left + x.m);
            cur.pop_back();
        }
    };
    extend(0, caps.energy);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Field calculus

State StateSpace::field_mode(const Field& f, int n, const State& v)
{
    State out;
    for (const auto& [mono, c] : v)
        out.add_scaled(field_mode(f, n, mono), c);
    return out;
}

const State& StateSpace::field_mode(const Field& f, int n, const Monomial& mono)
{
    FieldKey key{f.id(), n, mono};
    auto it = field_cache_.find(key);
    if (it != field_cache_.end())
        return it->second;
    State result = compute_field_mode(f, n, mono);
    return field_cache_.emplace(std::move(key), std::move(result)).first->second;
}

State StateSpace::compute_field_mode(const Field& f, int n, const Monomial& mono)
{
    const int e = energy(mono);
    if (n > e + f.weight() - 1)
        return {};
    switch (f.kind()) {
    case Field::Kind::Identity:
        return n == -1 ? State::of(mono) : State();
    case Field::Kind::Atom: {
        const Rational c = f.deriv() % 2 ? Rational(-binomial(n, f.deriv())) : binomial(n, f.deriv());
        if (c == 0)
            return {};
        const int label = n - f.deriv() + (f.psi_star_ ? 1 : 0);
        State out = apply(Mode{label, f.gen()}, mono);
        if (c != 1)
            out *= Scalar(c);
        return out;
    }
    case Field::Kind::Sum: {
        State out;
        for (const auto& [c, term] : f.terms())
            out.add_scaled(field_mode(*term, n, mono), c);
        return out;
    }
    case Field::Kind::Normal: {
        const Field& a = *f.left();
        const Field& b = *f.right();
        State out;
        // creation part of a on the left
        for (int j = n - e - b.weight(); j < 0; ++j) {
            const State inner = field_mode(b, n - j - 1, mono);
            for (const auto& [m2, c] : inner)
                out.add_scaled(field_mode(a, j, m2), c);
        }
        // annihilation part of a on the right
        const Scalar sign((a.odd() && b.odd()) ? -1L : 1L);
        for (int j = 0; j <= e + a.weight() - 1; ++j) {
            const State inner = field_mode(a, j, mono);
            for (const auto& [m2, c] : inner)
                out.add_scaled(field_mode(b, n - j - 1, m2), c * sign);
        }
        return out;
    }
    }
    return {};
}

State StateSpace::n_product(const State& a, int n, const State& b)
{
    const FieldPtr f = Field::of_state(*algebra_, a);
    return field_mode(*f, n, b);
}

// ---------------------------------------------------------------------------
// Serialization

std::string StateSpace::to_text(const Monomial& mono) const
{
    std::string out;
    for (Mode x : mono)
        out += algebra_->mode_text(x) + " ";
    return out + "|0>";
}

std::string StateSpace::to_text(const State& v) const
{
    if (v.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : v) {
        if (!first)
            out += " + ";
        first = false;
        if (c != Scalar(1L))
            out += "(" + c.to_string() + ") ";
        out += to_text(mono);
    }
    return out;
}

nlohmann::json StateSpace::to_json(const State& v) const
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [mono, c] : v) {
        nlohmann::json modes = nlohmann::json::array();
        for (Mode x : mono) {
            const GenIndex& g = algebra_->gen(x.gen);
            modes.push_back({kind_name(g.kind), g.i, g.j, g.r, x.m});
        }
        out.push_back({{"coeff", c.to_json()}, {"monomial", modes}});
    }
    return out;
}

State StateSpace::from_json(const nlohmann::json& j)
{
    State out;
    for (const auto& term : j) {
        std::vector<Mode> modes;
        for (const auto& m : term.at("monomial")) {
            GenIndex g{kind_from_name(m.at(0).get<std::string>()), m.at(1).get<int>(), m.at(2).get<int>(),
                       m.at(3).get<int>()};
            modes.push_back({m.at(4).get<int>(), algebra_->id(g)});
        }
        out.add_scaled(monomial_state(modes), Scalar::from_json(term.at("coeff")));
    }
    return out;
}

}  // namespace cwalg
