#include <tropmix/atoms.hpp>

#include <cctype>
#include <stdexcept>

namespace tropmix {

namespace {

void skip_ws(const std::string& s, size_t& p) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
}

int parse_var(const std::string& s, size_t& p, int dim) {
    skip_ws(s, p);
    if (p >= s.size() || s[p] != 'x') throw std::invalid_argument("expected clock/variable: " + s);
    ++p;
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (start == p) throw std::invalid_argument("expected variable index: " + s);
    int k = std::stoi(s.substr(start, p - start));
    if (k < 1 || k > dim) throw std::invalid_argument("variable index out of range: " + s);
    return k;
}

Atom::Rel parse_rel(const std::string& s, size_t& p) {
    skip_ws(s, p);
    auto two = s.substr(p, 2);
    if (two == "<=") {
        p += 2;
        return Atom::Le;
    }
    if (two == ">=") {
        p += 2;
        return Atom::Ge;
    }
    if (p < s.size()) {
        char c = s[p];
        if (c == '<') {
            ++p;
            return Atom::Lt;
        }
        if (c == '>') {
            ++p;
            return Atom::Gt;
        }
        if (c == '=') {
            ++p;
            return Atom::Eq;
        }
    }
    throw std::invalid_argument("expected relation in atom: " + s);
}

Atom parse_one(const std::string& s, int dim) {
    size_t p = 0;
    Atom a;
    a.var = parse_var(s, p, dim);
    a.rel = parse_rel(s, p);
    skip_ws(s, p);
    if (p < s.size() && s[p] == 'x') {
        // bare variable on the right: k = 0
        a.bound = MaxPlus::one();
        a.other = parse_var(s, p, dim);
    } else if (s.compare(p, 3, "-oo") == 0) {
        p += 3;
        a.bound = MaxPlus::neg_inf();
    } else {
        size_t start = p;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        size_t digits = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (digits == p) throw std::invalid_argument("expected integer bound: " + s);
        a.bound = MaxPlus(std::stoll(s.substr(start, p - start)));
        skip_ws(s, p);
        if (p < s.size() && s[p] == '+') {
            ++p;
            a.other = parse_var(s, p, dim);
        }
    }
    skip_ws(s, p);
    if (p != s.size()) throw std::invalid_argument("trailing characters in atom: " + s);
    return a;
}

}  // namespace

std::vector<Atom> parse_atoms(const std::string& text, int dim) {
    std::vector<Atom> out;
    size_t p = 0;
    skip_ws(text, p);
    if (text.compare(p, 4, "true") == 0) {
        size_t q = p + 4;
        skip_ws(text, q);
        if (q == text.size()) return out;
    }
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        size_t a = 0;
        skip_ws(piece, a);
        if (a < piece.size()) out.push_back(parse_one(piece.substr(a), dim));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Atom& a) {
    static const char* rel[] = {"<", "<=", "=", ">=", ">"};
    std::string out = "x" + std::to_string(a.var) + " " + rel[a.rel] + " ";
    if (a.other != 0) {
        if (a.bound == MaxPlus::one())
            out += "x" + std::to_string(a.other);
        else
            out += to_string(a.bound) + " + x" + std::to_string(a.other);
    } else {
        out += to_string(a.bound);
    }
    return out;
}

std::string to_string(const std::vector<Atom>& atoms) {
    if (atoms.empty()) return "true";
    std::string out;
    for (const auto& a : atoms) {
        if (!out.empty()) out += ", ";
        out += to_string(a);
    }
    return out;
}

}  // namespace tropmix
