#include "cwalg/walgebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace cwalg {

const char* backend_name(Backend b)
{
    return b == Backend::Full ? "full" : "reduced";
}

namespace {

void add_to(PolyState& poly, std::pair<int, int> key, const State& v, const Scalar& c = Scalar(1L))
{
    if (v.is_zero() || c.is_zero())
        return;
    State& slot = poly[key];
    slot.add_scaled(v, c);
    if (slot.is_zero())
        poly.erase(key);
}

class EntryAction {
public:
    EntryAction(Complex& cx, Backend backend) : cx_(cx), backend_(backend), p_(cx.pyramid()) {}

    /// e_ij^(r)[-1] v
    State lower(int i, int j, int r, const State& v)
    {
        if (backend_ == Backend::Full)
            return cx_.dressed_mode(i, j, r, -1, v);
        StateSpace& s = cx_.reduced();
        return s.apply(Mode{-1, s.algebra().id({GenKind::ELow, i, j, r})}, v);
    }

    State translate(const State& v)
    {
        return backend_ == Backend::Full ? cx_.full().translate(v) : cx_.reduced().translate(v);
    }

    /// a_{row,col} P, or nothing for the zero entries above the superdiagonal.
    PolyState apply(int row, int col, const PolyState& poly)
    {
        PolyState out;
        if (row == col) {
            const Scalar a = alpha(p_, row, cx_.level());
            for (const auto& [key, v] : poly) {
                add_to(out, {key.first + 1, key.second}, v);
                add_to(out, key, translate(v), a);
            }
        } else if (row == col - 1) {
            const int shift = p_.lambda(col) - 1;
            for (const auto& [key, v] : poly)
                add_to(out, {key.first, key.second + shift}, v, Scalar(-1L));
            return out;
        } else if (row < col) {
            return out;
        }
        for (int r = 0; r < p_.lambda(col); ++r)
            for (const auto& [key, v] : poly)
                add_to(out, {key.first, key.second + r}, lower(row, col, r, v));
        return out;
    }

private:
    Complex& cx_;
    Backend backend_;
    const Pyramid& p_;
};

void add_poly(PolyState& into, const PolyState& from, long sign)
{
    for (const auto& [key, v] : from)
        add_to(into, key, v, Scalar(sign));
}

// Expands a determinant by filling one position at a time from the last one
// backwards, so the word is applied to |0> right to left. entry(a, b) takes
// a = the free index chosen here and b = the position being filled.
PolyState expand(int n, const std::function<PolyState(int, int, const PolyState&)>& entry)
{
    std::map<unsigned, PolyState> layer;
    layer[0u][{0, 0}] = State::vacuum();
    for (int pos = n; pos >= 1; --pos) {
        std::map<unsigned, PolyState> next;
        for (const auto& [used, poly] : layer)
            for (int a = 1; a <= n; ++a) {
                const unsigned bit = 1u << (a - 1);
                if (used & bit)
                    continue;
                PolyState applied = entry(a, pos, poly);
                if (applied.empty())
                    continue;
                // inversions against the positions already filled
                const int below = __builtin_popcount(used & (bit - 1));
                add_poly(next[used | bit], applied, below % 2 ? -1 : 1);
            }
        layer = std::move(next);
    }
    return layer.empty() ? PolyState{} : layer.begin()->second;
}

}  // namespace

PolyState cdet_apply(Complex& cx, Backend backend)
{
    EntryAction act(cx, backend);
    return expand(cx.pyramid().n(),
                  [&act](int row, int col, const PolyState& poly) { return act.apply(row, col, poly); });
}

PolyState rdet_apply(Complex& cx, Backend backend)
{
    EntryAction act(cx, backend);
    return expand(cx.pyramid().n(),
                  [&act](int col, int row, const PolyState& poly) { return act.apply(row, col, poly); });
}

Coefficients coefficients(const Pyramid& p, const PolyState& det)
{
    Coefficients out;
    for (const auto& [key, v] : det) {
        const int l = p.n() - key.first;
        if (l >= 1 && !v.is_zero())
            out.emplace(std::make_pair(l, key.second), v);
    }
    return out;
}

Window admissible_window(const Pyramid& p, int l)
{
    const int n = p.n();
    if (l < 1 || l > n)
        throw std::out_of_range("generator degree " + std::to_string(l) + " outside 1.." + std::to_string(n));
    int s = 0;
    for (int a = n - l + 2; a <= n; ++a)
        s += p.lambda(a);
    return {s - l + 1, s + p.lambda(n - l + 1) - l};
}

Coefficients generators(Complex& cx, Backend backend)
{
    const Pyramid& p = cx.pyramid();
    const Coefficients all = coefficients(p, cdet_apply(cx, backend));
    Coefficients out;
    for (int l = 1; l <= p.n(); ++l) {
        const Window w = admissible_window(p, l);
        for (int r = w.lo; r <= w.hi; ++r) {
            auto it = all.find({l, r});
            out.emplace(std::make_pair(l, r), it == all.end() ? State() : it->second);
        }
    }
    return out;
}

nlohmann::json certify_generators(Complex& cx)
{
    const Pyramid& p = cx.pyramid();
    const Coefficients gens = generators(cx, Backend::Full);
    nlohmann::json report = {{"schema", 1},
                             {"statement", "every admissible w_l^(r)|0> is annihilated by d = d_st + chi"},
                             {"pyramid", p.to_json()},
                             {"level", cx.level().to_string()},
                             {"backend", "full"}};
    nlohmann::json list = nlohmann::json::array();
    bool ok = true;
    for (const auto& [key, w] : gens) {
        const State dw = cx.d(w);
        const bool closed = dw.is_zero() && !w.is_zero();
        ok = ok && closed;
        nlohmann::json entry = {{"l", key.first}, {"r", key.second}, {"terms", w.size()}, {"closed", closed}};
        if (!dw.is_zero())
            entry["dw"] = cx.full().to_text(dw);
        if (w.is_zero())
            entry["note"] = "coefficient vanishes";
        list.push_back(entry);
    }
    report["generators"] = list;
    report["count"] = gens.size();
    report["N"] = p.N();
    ok = ok && static_cast<int>(gens.size()) == p.N();
    report["status"] = ok ? "pass" : "fail";
    return report;
}

int triangular_degree(const ModeAlgebra& reduced, const Monomial& mono)
{
    int d = 0;
    for (Mode x : mono) {
        const GenIndex& g = reduced.gen(x.gen);
        if (g.kind == GenKind::ELow)
            d += g.j - g.i;
    }
    return d;
}

State leading_term(Complex& cx, int l, int r)
{
    const Coefficients gens = generators(cx, Backend::Reduced);
    auto it = gens.find({l, r});
    if (it == gens.end())
        throw std::out_of_range("(l, r) outside the admissible window");
    const ModeAlgebra& alg = cx.reduced().algebra();
    int lowest = 0;
    bool first = true;
    for (const auto& [mono, c] : it->second) {
        const int d = triangular_degree(alg, mono);
        lowest = first ? d : std::min(lowest, d);
        first = false;
    }
    return it->second.filtered([&](const Monomial& mono) { return triangular_degree(alg, mono) == lowest; });
}

State p_vacuum_state(Complex& cx, int l, int r)
{
    const Pyramid& p = cx.pyramid();
    const Window w = admissible_window(p, l);
    const int shifted = r - w.lo;
    const ModeAlgebra& alg = cx.reduced().algebra();
    State out;
    for (const DressedTerm& t : cx.p_field_terms(l, shifted))
        out.add({Mode{-1, alg.id({GenKind::ELow, t.i, t.j, t.r})}}, Scalar(1L));
    return out;
}

State dress(Complex& cx, const State& reduced)
{
    const ModeAlgebra& alg = cx.reduced().algebra();
    StateSpace& full = cx.full();
    State out;
    for (const auto& [mono, c] : reduced) {
        State v = State::vacuum();
        for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
            const GenIndex& g = alg.gen(it->gen);
            if (g.kind == GenKind::ELow)
                v = cx.dressed_mode(g.i, g.j, g.r, it->m, v);
            else
                v = full.apply(Mode{it->m, full.algebra().id(g)}, v);
        }
        out.add_scaled(v, c);
    }
    return out;
}

std::vector<long> hilbert_series(const Pyramid& p, int cap)
{
    const int n = p.n();
    std::vector<long> series(cap + 1, 0);
    series[0] = 1;
    // multiply by (1 - q^d)^{-1} once per unit of exponent
    for (int l = 1; l <= n; ++l)
        for (int d = l; d <= cap; ++d)
            for (int times = 0; times < p.lambda(n - l + 1); ++times)
                for (int e = d; e <= cap; ++e)
                    series[e] += series[e - d];
    return series;
}

std::vector<long> count_w_monomials(const Pyramid& p, int cap)
{
    const int n = p.n();
    struct Triple {
        int l;
        int r;
        int m;
    };
    std::vector<Triple> modes;
    for (int l = 1; l <= n; ++l) {
        const Window w = admissible_window(p, l);
        for (int r = w.lo; r <= w.hi; ++r)
            for (int m = -1; l - m - 1 <= cap; --m)
                modes.push_back({l, r, m});
    }
    std::sort(modes.begin(), modes.end(),
              [](const Triple& a, const Triple& b) { return std::tie(a.l, a.r, a.m) < std::tie(b.l, b.r, b.m); });

    std::vector<long> counts(cap + 1, 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t from, int degree) {
        ++counts[degree];
        for (std::size_t a = from; a < modes.size(); ++a) {
            const int d = modes[a].l - modes[a].m - 1;
            if (degree + d <= cap)
                walk(a, degree + d);
        }
    };
    walk(0, 0);
    return counts;
}

}  // namespace cwalg
