#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cwalg {

/// Rejected pyramid input.
class ShapeError : public std::invalid_argument {
public:
    enum class Code { EmptyShape, NonMonotoneShape, NonPositivePart, Parse };

    ShapeError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

class InadmissibleIndex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generator families. ELow are the lower-triangular (i >= j) dressed
/// generators; they share E's index set restricted to i >= j.
enum class GenKind { E, Psi, PsiStar, ELow };

/// Rank used by the canonical mode order: E-like < psi < psi*.
int kind_rank(GenKind kind);
const char* kind_name(GenKind kind);
GenKind kind_from_name(std::string_view name);

struct GenIndex {
    GenKind kind = GenKind::E;
    int i = 1;
    int j = 1;
    int r = 0;

    friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct Window {
    int lo = 0;
    int hi = -1;

    bool empty() const { return lo > hi; }
    bool contains(int x) const { return lo <= x && x <= hi; }
    int size() const { return empty() ? 0 : hi - lo + 1; }
};

/// Left-justified pyramid with row lengths lambda_1 <= ... <= lambda_n.
/// Rows, columns and generator indices are 1-based throughout.
class Pyramid {
public:
    static Pyramid build(std::vector<int> lambdas);
    /// Parses "2,3,4".
    static Pyramid parse(std::string_view text);

    int n() const { return static_cast<int>(lambdas_.size()); }
    int N() const { return N_; }
    int lambda(int row) const { return lambdas_.at(row - 1); }
    const std::vector<int>& lambdas() const { return lambdas_; }
    /// Column lengths q_1 >= ... >= q_{lambda_n}.
    const std::vector<int>& q() const { return q_; }

    /// Row and column of the box holding entry a of the row-tableau.
    std::pair<int, int> row_col(int a) const;
    /// Entry of the row-tableau in the given box.
    int box(int row, int col) const;

    /// Admissible shifts r for a family and a row pair; empty if the pair
    /// itself is not allowed (e.g. psi with i >= j).
    Window shifts(GenKind kind, int i, int j) const;
    bool admissible(const GenIndex& g) const;

    /// All E_ij^(r), ordered by (i, j, r).
    std::vector<GenIndex> basis_E() const;
    /// gl_N matrix units (a, b) whose sum is E_ij^(r) (or the E element a
    /// lower/psi index names).
    std::vector<std::pair<int, int>> matrix_units(const GenIndex& g) const;

    std::string to_string() const;
    nlohmann::json to_json() const;

    friend bool operator==(const Pyramid& a, const Pyramid& b) { return a.lambdas_ == b.lambdas_; }

private:
    std::vector<int> lambdas_;
    std::vector<int> q_;
    std::vector<int> row_start_;
    int N_ = 0;
};

/// Conformal degree of the mode g[m]: -m + i - j for E-like and psi modes,
/// -m + j - i for psi*.
int deg_conformal(const GenIndex& g, int m);
/// Fermion charge: -1 for psi, +1 for psi*, 0 otherwise.
int charge(const GenIndex& g);

std::string to_string(const GenIndex& g);

}  // namespace cwalg
