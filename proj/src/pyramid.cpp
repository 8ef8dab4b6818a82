#include "cwalg/pyramid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cwalg {

int kind_rank(GenKind kind)
{
    switch (kind) {
    case GenKind::E:
    case GenKind::ELow:
        return 0;
    case GenKind::Psi:
        return 1;
    case GenKind::PsiStar:
        return 2;
    }
    return 0;
}

const char* kind_name(GenKind kind)
{
    switch (kind) {
    case GenKind::E:
        return "E";
    case GenKind::Psi:
        return "psi";
    case GenKind::PsiStar:
        return "psi*";
    case GenKind::ELow:
        return "e";
    }
    return "?";
}

GenKind kind_from_name(std::string_view name)
{
    if (name == "E")
        return GenKind::E;
    if (name == "psi")
        return GenKind::Psi;
    if (name == "psi*")
        return GenKind::PsiStar;
    if (name == "e")
        return GenKind::ELow;
    throw std::invalid_argument("unknown generator kind '" + std::string(name) + "'");
}

Pyramid Pyramid::build(std::vector<int> lambdas)
{
    if (lambdas.empty())
        throw ShapeError(ShapeError::Code::EmptyShape, "pyramid needs at least one row");
    for (int l : lambdas)
        if (l < 1)
            throw ShapeError(ShapeError::Code::NonPositivePart, "row lengths must be positive");
    if (!std::is_sorted(lambdas.begin(), lambdas.end()))
        throw ShapeError(ShapeError::Code::NonMonotoneShape,
                         "row lengths must be given in non-decreasing order");

    Pyramid p;
    p.lambdas_ = std::move(lambdas);
    for (int l : p.lambdas_) {
        p.row_start_.push_back(p.N_ + 1);
        p.N_ += l;
    }
    const int width = p.lambdas_.back();
    for (int c = 1; c <= width; ++c)
        p.q_.push_back(static_cast<int>(
            std::count_if(p.lambdas_.begin(), p.lambdas_.end(), [c](int l) { return l >= c; })));
    return p;
}

Pyramid Pyramid::parse(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw ShapeError(ShapeError::Code::Parse, "cannot parse pyramid '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return build(std::move(parts));
}

std::pair<int, int> Pyramid::row_col(int a) const
{
    if (a < 1 || a > N_)
        throw std::out_of_range("box entry " + std::to_string(a) + " outside 1.." + std::to_string(N_));
    auto it = std::upper_bound(row_start_.begin(), row_start_.end(), a);
    const int row = static_cast<int>(it - row_start_.begin());
    return {row, a - row_start_[row - 1] + 1};
}

int Pyramid::box(int row, int col) const
{
    if (row < 1 || row > n() || col < 1 || col > lambda(row))
        throw std::out_of_range("no box at (" + std::to_string(row) + "," + std::to_string(col) + ")");
    return row_start_[row - 1] + col - 1;
}

Window Pyramid::shifts(GenKind kind, int i, int j) const
{
    if (i < 1 || i > n() || j < 1 || j > n())
        return {};
    const int li = lambda(i);
    const int lj = lambda(j);
    switch (kind) {
    case GenKind::E:
        return {lj - std::min(li, lj), lj - 1};
    case GenKind::Psi:
    case GenKind::PsiStar:
        if (i >= j)
            return {};
        return {lj - li, lj - 1};
    case GenKind::ELow:
        if (i < j)
            return {};
        return {0, lj - 1};
    }
    return {};
}

bool Pyramid::admissible(const GenIndex& g) const
{
    return shifts(g.kind, g.i, g.j).contains(g.r);
}

std::vector<GenIndex> Pyramid::basis_E() const
{
    std::vector<GenIndex> out;
    for (int i = 1; i <= n(); ++i)
        for (int j = 1; j <= n(); ++j) {
            const Window w = shifts(GenKind::E, i, j);
            for (int r = w.lo; r <= w.hi; ++r)
                out.push_back({GenKind::E, i, j, r});
        }
    return out;
}

std::vector<std::pair<int, int>> Pyramid::matrix_units(const GenIndex& g) const
{
    if (!admissible(g))
        throw InadmissibleIndex("inadmissible index " + cwalg::to_string(g));
    std::vector<std::pair<int, int>> out;
    for (int ca = 1; ca <= lambda(g.i); ++ca) {
        const int cb = ca + g.r;
        if (cb >= 1 && cb <= lambda(g.j))
            out.emplace_back(box(g.i, ca), box(g.j, cb));
    }
    return out;
}

std::string Pyramid::to_string() const
{
    std::ostringstream os;
    for (std::size_t a = 0; a < lambdas_.size(); ++a)
        os << (a ? "," : "") << lambdas_[a];
    return os.str();
}

nlohmann::json Pyramid::to_json() const
{
    return {{"lambdas", lambdas_}, {"q", q_}, {"N", N_}};
}

int deg_conformal(const GenIndex& g, int m)
{
    if (g.kind == GenKind::PsiStar)
        return -m + g.j - g.i;
    return -m + g.i - g.j;
}

int charge(const GenIndex& g)
{
    switch (g.kind) {
    case GenKind::Psi:
        return -1;
    case GenKind::PsiStar:
        return 1;
    default:
        return 0;
    }
}

std::string to_string(const GenIndex& g)
{
    return std::string(kind_name(g.kind)) + "[" + std::to_string(g.i) + "," + std::to_string(g.j) + "," +
           std::to_string(g.r) + "]";
}

}  // namespace cwalg
