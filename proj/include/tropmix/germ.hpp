#ifndef TROPMIX_GERM_HPP
#define TROPMIX_GERM_HPP

#include <tropmix/rat.hpp>

#include <cassert>
#include <iosfwd>
#include <string>

namespace tropmix {

// ── MaxPlus ─────────────────────────────────────────────────────────────────
// Scalar of the max-plus semiring: a finite rational or -oo. Tropical
// addition is max, tropical multiplication is classical +. +oo is not
// representable here (it lives in Germ only).

class MaxPlus {
public:
    MaxPlus() : finite_(false), value_(0) {}  // -oo
    explicit MaxPlus(Rat v) : finite_(true), value_(std::move(v)) {}
    explicit MaxPlus(long long v) : finite_(true), value_(v) {}

    static MaxPlus neg_inf() { return MaxPlus(); }
    static MaxPlus zero() { return MaxPlus(); }      // additive unit (-oo)
    static MaxPlus one() { return MaxPlus(Rat(0)); } // multiplicative unit (0)

    bool is_neg_inf() const { return !finite_; }
    bool is_finite() const { return finite_; }

    /// Finite value; only valid when is_finite().
    const Rat& value() const {
        assert(finite_);
        return value_;
    }

    friend bool operator==(const MaxPlus& a, const MaxPlus& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const MaxPlus& a, const MaxPlus& b) { return !(a == b); }
    friend bool operator<(const MaxPlus& a, const MaxPlus& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const MaxPlus& a, const MaxPlus& b) { return a < b || a == b; }
    friend bool operator>(const MaxPlus& a, const MaxPlus& b) { return b < a; }
    friend bool operator>=(const MaxPlus& a, const MaxPlus& b) { return b <= a; }

    /// Tropical addition (max).
    friend MaxPlus operator+(const MaxPlus& a, const MaxPlus& b) { return a < b ? b : a; }

    /// Tropical multiplication (classical +; -oo absorbs).
    friend MaxPlus operator*(const MaxPlus& a, const MaxPlus& b) {
        if (!a.finite_ || !b.finite_) return MaxPlus();
        return MaxPlus(a.value_ + b.value_);
    }

private:
    bool finite_;
    Rat value_;
};

// ── Extended ────────────────────────────────────────────────────────────────
// Completed scalar R ∪ {±oo}; germ valuations land here.

struct Extended {
    enum Kind { NegInf, Finite, PosInf };

    Kind kind = NegInf;
    Rat value{0};  // meaningful only when kind == Finite

    static Extended neg_inf() { return {NegInf, Rat(0)}; }
    static Extended pos_inf() { return {PosInf, Rat(0)}; }
    static Extended finite(Rat v) { return {Finite, std::move(v)}; }
    static Extended of(const MaxPlus& m) {
        return m.is_finite() ? finite(m.value()) : neg_inf();
    }

    friend bool operator==(const Extended& a, const Extended& b) {
        if (a.kind != b.kind) return false;
        return a.kind != Finite || a.value == b.value;
    }
    friend bool operator<(const Extended& a, const Extended& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.kind == Finite && a.value < b.value;
    }
    friend bool operator<=(const Extended& a, const Extended& b) { return a < b || a == b; }
};

// ── Germ ────────────────────────────────────────────────────────────────────
// Affine germ: a real alpha, its downward perturbation alpha - epsilon
// (class Under, printed "alpha~"), -oo, or +oo. Germs are the right-hand
// coefficients of mixed inequalities; the Under class encodes strictness.

enum class GermClass { NegInf, Plain, Under, PosInf };

class Germ {
public:
    Germ() : cls_(GermClass::NegInf), mod_(0) {}

    static Germ neg_inf() { return Germ(); }
    static Germ pos_inf() {
        Germ g;
        g.cls_ = GermClass::PosInf;
        return g;
    }
    static Germ plain(Rat m) { return Germ(GermClass::Plain, std::move(m)); }
    static Germ plain(long long m) { return plain(Rat(m)); }
    static Germ under(Rat m) { return Germ(GermClass::Under, std::move(m)); }
    static Germ under(long long m) { return under(Rat(m)); }

    /// Semiring embedding of a max-plus scalar (-oo or Plain).
    static Germ of(const MaxPlus& m) {
        return m.is_finite() ? plain(m.value()) : neg_inf();
    }

    static Germ zero() { return neg_inf(); }
    static Germ one() { return plain(Rat(0)); }

    GermClass cls() const { return cls_; }
    bool is_neg_inf() const { return cls_ == GermClass::NegInf; }
    bool is_pos_inf() const { return cls_ == GermClass::PosInf; }
    bool is_plain() const { return cls_ == GermClass::Plain; }
    bool is_under() const { return cls_ == GermClass::Under; }

    /// True when the germ lies in Rmax ∪ {+oo} (no Under class).
    bool in_completed_maxplus() const { return cls_ != GermClass::Under; }

    /// Finite modulus; only valid for Plain/Under germs.
    const Rat& finite_modulus() const {
        assert(is_plain() || is_under());
        return mod_;
    }

    /// Modulus as an extended scalar: |-oo| = -oo, |+oo| = +oo.
    Extended modulus() const {
        switch (cls_) {
            case GermClass::NegInf: return Extended::neg_inf();
            case GermClass::PosInf: return Extended::pos_inf();
            default: return Extended::finite(mod_);
        }
    }

    /// Structural equality: same class, same modulus.
    friend bool operator==(const Germ& a, const Germ& b) {
        return a.cls_ == b.cls_ && a.mod_ == b.mod_;
    }
    friend bool operator!=(const Germ& a, const Germ& b) { return !(a == b); }

private:
    Germ(GermClass c, Rat m) : cls_(c), mod_(std::move(m)) {}

    GermClass cls_;
    Rat mod_;  // kept at 0 for the infinite classes so equality is structural
};

/// Positive perturbation parameter for valuations.
struct Epsilon {
    explicit Epsilon(Rat v) : value(std::move(v)) { assert(value > Rat(0)); }
    Rat value;
};

/// Total order on germs: strict modulus comparison when x is in
/// Rmax ∪ {+oo} and y is a perturbed real, non-strict otherwise.
bool germ_leq(const Germ& x, const Germ& y);
bool germ_lt(const Germ& x, const Germ& y);

inline const Germ& germ_max(const Germ& x, const Germ& y) { return germ_leq(x, y) ? y : x; }
inline const Germ& germ_min(const Germ& x, const Germ& y) { return germ_leq(x, y) ? x : y; }

/// Semiring addition: the greater of the two operands.
inline Germ germ_add(const Germ& x, const Germ& y) { return germ_max(x, y); }

/// Semiring multiplication: moduli add; Under is contagious among finite
/// operands; -oo absorbs everything, +oo everything else.
Germ germ_mul(const Germ& x, const Germ& y);

inline Germ operator+(const Germ& x, const Germ& y) { return germ_add(x, y); }
inline Germ operator*(const Germ& x, const Germ& y) { return germ_mul(x, y); }

/// Value of the germ at a concrete perturbation: alpha~ becomes alpha - eps.
Extended valuate(const Germ& x, const Epsilon& eps);

/// Residuation: the greatest z with z * x <=_germ y.
Germ residual(const Germ& y, const Germ& x);

/// Renders as "3", "3~", "+oo" or "-oo"; parse_germ is the exact inverse.
std::string to_string(const Germ& g);
std::string to_string(const MaxPlus& m);

/// Parses the textual germ form; throws std::invalid_argument on junk.
Germ parse_germ(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Germ& g);
std::ostream& operator<<(std::ostream& os, const MaxPlus& m);

}  // namespace tropmix

#endif
