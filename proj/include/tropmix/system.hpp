#ifndef TROPMIX_SYSTEM_HPP
#define TROPMIX_SYSTEM_HPP

#include <tropmix/germ.hpp>

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropmix {

// ── MixedInequality ─────────────────────────────────────────────────────────
// One row  a_1 x_1 + ... + a_n x_n + a_0  <=  b_1 x_1 + ... + b_n x_n + b_0
// with max-plus coefficients on the left and germ coefficients on the right
// ("+" is tropical join). Rows are stored normalized: at every position,
// including the constant, at most one side carries a non-bottom entry. The
// normalization keeps the solution set over Rmax unchanged.

struct MixedInequality {
    std::vector<MaxPlus> lhs;  // a_1 .. a_n
    MaxPlus lhs_const;         // a_0
    std::vector<Germ> rhs;     // b_1 .. b_n
    Germ rhs_const;            // b_0

    MixedInequality() = default;
    MixedInequality(std::vector<MaxPlus> l, MaxPlus lc, std::vector<Germ> r, Germ rc);

    int dim() const { return static_cast<int>(lhs.size()); }

    /// True when the left side is identically -oo (row is trivially true).
    bool lhs_bottom() const;

    friend bool operator==(const MixedInequality& a, const MixedInequality& b) {
        return a.lhs == b.lhs && a.lhs_const == b.lhs_const && a.rhs == b.rhs &&
               a.rhs_const == b.rhs_const;
    }
    friend bool operator!=(const MixedInequality& a, const MixedInequality& b) {
        return !(a == b);
    }
};

/// Drops the dominated side at every position where both sides are
/// non-bottom: the left entry when it is <=_germ the right one, the right
/// entry otherwise. Idempotent; the solution set is unchanged.
MixedInequality normalize(const MixedInequality& ineq);

// ── MixedSystem ─────────────────────────────────────────────────────────────

struct MixedSystem {
    int dim = 0;
    std::vector<MixedInequality> rows;

    MixedSystem() = default;
    explicit MixedSystem(int n) : dim(n) {}
    MixedSystem(int n, std::vector<MixedInequality> rs);

    void add_row(MixedInequality row);

    /// True when some right-hand coefficient (or constant) is +oo.
    bool has_pos_inf() const;

    friend bool operator==(const MixedSystem& a, const MixedSystem& b) {
        return a.dim == b.dim && a.rows == b.rows;
    }
};

// ── Point ───────────────────────────────────────────────────────────────────

struct Point {
    std::vector<MaxPlus> coords;

    Point() = default;
    explicit Point(std::vector<MaxPlus> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
};

/// Indices (1-based) of the finite coordinates.
std::set<int> support_pattern(const Point& p);

/// Membership test by exact germ comparison of each row at p.
/// Throws std::invalid_argument on dimension mismatch.
bool satisfies(const MixedInequality& row, const Point& p);
bool satisfies(const MixedSystem& sys, const Point& p);

// ── Text format ─────────────────────────────────────────────────────────────
// Line-based UTF-8: optional `# comment` lines, a `dim <n>` header, then one
// inequality per line, `LHS <= RHS`. Each side is `term (+ term)*`; a term is
// `<coef>`, `<coef>*x<k>` or bare `x<k>` (coefficient 0). Left coefficients
// are integers or `-oo`; right ones may additionally be `<int>~` or `+oo`.
// A missing side renders as `-oo`.

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                             ": " + msg),
          line(l),
          column(c) {}
};

MixedSystem parse_system(const std::string& text);
std::istream& read_system(std::istream& is, MixedSystem& sys);

/// Parses a single inequality against a known dimension (used for CLI goals).
MixedInequality parse_inequality(const std::string& line, int dim);

std::string print_inequality(const MixedInequality& row);
std::string print_system(const MixedSystem& sys);

}  // namespace tropmix

#endif
