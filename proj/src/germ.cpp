#include <tropmix/germ.hpp>

#include <ostream>
#include <stdexcept>

namespace tropmix {

bool germ_leq(const Germ& x, const Germ& y) {
    // x in Rmax ∪ {+oo} against a perturbed real: strict modulus comparison.
    if (x.in_completed_maxplus() && y.is_under()) return x.modulus() < y.modulus();
    return x.modulus() <= y.modulus();
}

bool germ_lt(const Germ& x, const Germ& y) { return germ_leq(x, y) && x != y; }

Germ germ_mul(const Germ& x, const Germ& y) {
    if (x.is_neg_inf() || y.is_neg_inf()) return Germ::neg_inf();
    if (x.is_pos_inf() || y.is_pos_inf()) return Germ::pos_inf();
    Rat m = x.finite_modulus() + y.finite_modulus();
    if (x.is_under() || y.is_under()) return Germ::under(std::move(m));
    return Germ::plain(std::move(m));
}

Extended valuate(const Germ& x, const Epsilon& eps) {
    switch (x.cls()) {
        case GermClass::NegInf: return Extended::neg_inf();
        case GermClass::PosInf: return Extended::pos_inf();
        case GermClass::Plain: return Extended::finite(x.finite_modulus());
        default: return Extended::finite(x.finite_modulus() - eps.value);
    }
}

Germ residual(const Germ& y, const Germ& x) {
    if (x.is_plain() && y.is_under()) {
        return Germ::under(y.finite_modulus() - x.finite_modulus());
    }
    // Otherwise the result is the modulus difference read back in
    // Rmax ∪ {+oo}, with a - (-oo) = +oo, a - (+oo) = -oo for a in Rmax,
    // and (+oo) - (+oo) = +oo.
    if (x.is_neg_inf()) return Germ::pos_inf();
    if (y.is_pos_inf()) return Germ::pos_inf();
    if (x.is_pos_inf()) return Germ::neg_inf();
    if (y.is_neg_inf()) return Germ::neg_inf();
    return Germ::plain(y.finite_modulus() - x.finite_modulus());
}

std::string to_string(const Germ& g) {
    switch (g.cls()) {
        case GermClass::NegInf: return "-oo";
        case GermClass::PosInf: return "+oo";
        case GermClass::Plain: return rat_to_string(g.finite_modulus());
        default: return rat_to_string(g.finite_modulus()) + "~";
    }
}

std::string to_string(const MaxPlus& m) {
    return m.is_finite() ? rat_to_string(m.value()) : "-oo";
}

Germ parse_germ(const std::string& text) {
    if (text == "-oo") return Germ::neg_inf();
    if (text == "+oo") return Germ::pos_inf();
    std::string body = text;
    bool under = false;
    if (!body.empty() && body.back() == '~') {
        under = true;
        body.pop_back();
    }
    if (body.empty()) throw std::invalid_argument("empty germ literal");
    size_t pos = 0;
    long long v;
    try {
        v = std::stoll(body, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad germ literal: " + text);
    }
    if (pos != body.size()) throw std::invalid_argument("bad germ literal: " + text);
    return under ? Germ::under(v) : Germ::plain(v);
}

std::ostream& operator<<(std::ostream& os, const Germ& g) { return os << to_string(g); }
std::ostream& operator<<(std::ostream& os, const MaxPlus& m) { return os << to_string(m); }

}  // namespace tropmix
