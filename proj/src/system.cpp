#include <tropmix/system.hpp>

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace tropmix {

MixedInequality::MixedInequality(std::vector<MaxPlus> l, MaxPlus lc, std::vector<Germ> r,
                                 Germ rc)
    : lhs(std::move(l)), lhs_const(std::move(lc)), rhs(std::move(r)), rhs_const(std::move(rc)) {
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("inequality sides have different lengths");
}

bool MixedInequality::lhs_bottom() const {
    if (lhs_const.is_finite()) return false;
    for (const auto& a : lhs)
        if (a.is_finite()) return false;
    return true;
}

namespace {

void normalize_slot(MaxPlus& a, Germ& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return;
    if (germ_leq(Germ::of(a), b)) {
        a = MaxPlus::neg_inf();
    } else {
        b = Germ::neg_inf();
    }
}

}  // namespace

MixedInequality normalize(const MixedInequality& ineq) {
    MixedInequality out = ineq;
    for (int j = 0; j < out.dim(); ++j) normalize_slot(out.lhs[j], out.rhs[j]);
    normalize_slot(out.lhs_const, out.rhs_const);
    return out;
}

MixedSystem::MixedSystem(int n, std::vector<MixedInequality> rs) : dim(n) {
    for (auto& r : rs) add_row(std::move(r));
}

void MixedSystem::add_row(MixedInequality row) {
    if (row.dim() != dim) throw std::invalid_argument("row dimension mismatch");
    rows.push_back(normalize(row));
}

bool MixedSystem::has_pos_inf() const {
    for (const auto& r : rows) {
        if (r.rhs_const.is_pos_inf()) return true;
        for (const auto& b : r.rhs)
            if (b.is_pos_inf()) return true;
    }
    return false;
}

std::set<int> support_pattern(const Point& p) {
    std::set<int> out;
    for (int j = 0; j < p.dim(); ++j)
        if (p.coords[j].is_finite()) out.insert(j + 1);
    return out;
}

bool satisfies(const MixedInequality& row, const Point& p) {
    if (row.dim() != p.dim()) throw std::invalid_argument("point dimension mismatch");
    MaxPlus left = row.lhs_const;
    Germ right = row.rhs_const;
    for (int j = 0; j < row.dim(); ++j) {
        left = left + row.lhs[j] * p.coords[j];
        right = right + row.rhs[j] * Germ::of(p.coords[j]);
    }
    return germ_leq(Germ::of(left), right);
}

bool satisfies(const MixedSystem& sys, const Point& p) {
    if (sys.dim != p.dim()) throw std::invalid_argument("point dimension mismatch");
    for (const auto& row : sys.rows)
        if (!satisfies(row, p)) return false;
    return true;
}

// ── Parsing ─────────────────────────────────────────────────────────────────

namespace {

struct LineCursor {
    const std::string& text;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    int column() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, column(), msg); }

    bool try_literal(const std::string& lit) {
        skip_ws();
        if (text.compare(pos, lit.size(), lit) == 0) {
            pos += lit.size();
            return true;
        }
        return false;
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            fail("expected integer");
        }
        if (pos < text.size() && text[pos] == '.') fail("non-integer coefficients are not accepted");
        return std::stoll(text.substr(start, pos - start));
    }
};

// One parsed term: a coefficient and an optional variable index (0 = constant).
struct Term {
    Germ coef;
    int var;  // 1-based, or 0 for the constant slot
};

Term parse_term(LineCursor& cur, int dim) {
    cur.skip_ws();
    Term t;
    t.var = 0;
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == 'x') {
        // bare variable: coefficient 0
        ++cur.pos;
        long long k = cur.integer();
        if (k < 1 || k > dim) cur.fail("variable index out of range");
        t.coef = Germ::plain(0);
        t.var = static_cast<int>(k);
        return t;
    }
    if (cur.try_literal("-oo")) {
        t.coef = Germ::neg_inf();
    } else if (cur.try_literal("+oo")) {
        t.coef = Germ::pos_inf();
    } else {
        long long v = cur.integer();
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '~') {
            ++cur.pos;
            t.coef = Germ::under(v);
        } else {
            t.coef = Germ::plain(v);
        }
    }
    cur.skip_ws();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '*') {
        ++cur.pos;
        cur.skip_ws();
        if (cur.pos >= cur.text.size() || cur.text[cur.pos] != 'x') cur.fail("expected variable");
        ++cur.pos;
        long long k = cur.integer();
        if (k < 1 || k > dim) cur.fail("variable index out of range");
        t.var = static_cast<int>(k);
    }
    return t;
}

MaxPlus to_maxplus(const Germ& g, LineCursor& cur) {
    if (g.is_under()) cur.fail("perturbed coefficient on a left-hand side");
    if (g.is_pos_inf()) cur.fail("+oo coefficient on a left-hand side");
    return g.is_neg_inf() ? MaxPlus::neg_inf() : MaxPlus(g.finite_modulus());
}

MixedInequality parse_row(LineCursor& cur, int dim) {
    std::vector<MaxPlus> lhs(dim, MaxPlus::neg_inf());
    MaxPlus lhs_const = MaxPlus::neg_inf();
    std::vector<Germ> rhs(dim, Germ::neg_inf());
    Germ rhs_const = Germ::neg_inf();

    while (true) {
        Term t = parse_term(cur, dim);
        MaxPlus c = to_maxplus(t.coef, cur);
        if (t.var == 0)
            lhs_const = lhs_const + c;
        else
            lhs[t.var - 1] = lhs[t.var - 1] + c;
        if (!cur.try_literal("+")) break;
    }
    if (!cur.try_literal("<=")) cur.fail("expected '<='");

    while (true) {
        Term t = parse_term(cur, dim);
        if (t.var == 0)
            rhs_const = rhs_const + t.coef;
        else
            rhs[t.var - 1] = rhs[t.var - 1] + t.coef;
        if (!cur.try_literal("+")) break;
    }

    if (!cur.done()) cur.fail("trailing characters after inequality");
    return MixedInequality(std::move(lhs), std::move(lhs_const), std::move(rhs),
                           std::move(rhs_const));
}

bool significant(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return false;
        if (ch != ' ' && ch != '\t' && ch != '\r') return true;
    }
    return false;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

MixedInequality parse_inequality(const std::string& line, int dim) {
    LineCursor cur{line, 1};
    return parse_row(cur, dim);
}

MixedSystem parse_system(const std::string& text) {
    std::istringstream is(text);
    MixedSystem sys;
    read_system(is, sys);
    return sys;
}

std::istream& read_system(std::istream& is, MixedSystem& sys) {
    std::string line;
    int lineno = 0;
    bool have_dim = false;
    MixedSystem out;
    while (std::getline(is, line)) {
        ++lineno;
        line = strip_cr(line);
        if (!significant(line)) continue;
        LineCursor cur{line, lineno};
        if (!have_dim) {
            if (!cur.try_literal("dim")) cur.fail("expected 'dim <n>' header");
            long long n = cur.integer();
            if (n < 1) cur.fail("dimension must be positive");
            if (!cur.done()) cur.fail("trailing characters after header");
            out = MixedSystem(static_cast<int>(n));
            have_dim = true;
            continue;
        }
        out.add_row(parse_row(cur, out.dim));
    }
    if (!have_dim) throw ParseError(lineno + 1, 1, "missing 'dim <n>' header");
    sys = std::move(out);
    return is;
}

// ── Printing ────────────────────────────────────────────────────────────────

namespace {

void append_term(std::string& out, const std::string& coef, int var, bool plain_unit) {
    if (!out.empty()) out += " + ";
    if (var == 0) {
        out += coef;
    } else if (plain_unit) {
        out += "x" + std::to_string(var);
    } else {
        out += coef + "*x" + std::to_string(var);
    }
}

}  // namespace

std::string print_inequality(const MixedInequality& row) {
    std::string left, right;
    for (int j = 0; j < row.dim(); ++j) {
        const MaxPlus& a = row.lhs[j];
        if (a.is_finite())
            append_term(left, to_string(a), j + 1, a == MaxPlus::one());
    }
    if (row.lhs_const.is_finite()) append_term(left, to_string(row.lhs_const), 0, false);
    for (int j = 0; j < row.dim(); ++j) {
        const Germ& b = row.rhs[j];
        if (!b.is_neg_inf())
            append_term(right, to_string(b), j + 1, b == Germ::one());
    }
    if (!row.rhs_const.is_neg_inf()) append_term(right, to_string(row.rhs_const), 0, false);
    if (left.empty()) left = "-oo";
    if (right.empty()) right = "-oo";
    return left + " <= " + right;
}

std::string print_system(const MixedSystem& sys) {
    std::string out = "dim " + std::to_string(sys.dim) + "\n";
    for (const auto& row : sys.rows) out += print_inequality(row) + "\n";
    return out;
}

}  // namespace tropmix
