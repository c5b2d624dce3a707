// Exact arithmetic in the real quadratic field tower Q(sqrt2, sqrt3).
//
// Every element is stored as a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational
// coordinates; the representation is unique because {1, sqrt2, sqrt3, sqrt6}
// is a Q-basis. Signs are decided exactly: zero by coordinates, otherwise by
// dyadic interval refinement of sqrt2 and sqrt3 until zero is excluded.

#ifndef RAC_FIELD_HPP
#define RAC_FIELD_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace rac {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer isqrt_floor(const Integer& n) {
    return boost::multiprecision::sqrt(n);
}

/// Element of Q(sqrt2, sqrt3): a + b*r2 + c*r3 + d*r6.
class FieldElement {
public:
    Rational a, b, c, d;

    FieldElement() = default;
    FieldElement(Rational a_) : a(std::move(a_)) {}
    FieldElement(long v) : a(v) {}
    FieldElement(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static FieldElement r2() { return {0, 1, 0, 0}; }
    static FieldElement r3() { return {0, 0, 1, 0}; }
    static FieldElement r6() { return {0, 0, 0, 1}; }
    static FieldElement rational(Rational q) { return FieldElement(std::move(q)); }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    FieldElement operator-() const { return {-a, -b, -c, -d}; }

    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        // (a + b r2 + c r3 + d r6)(e + f r2 + g r3 + h r6)
        const Rational &e = y.a, &f = y.b, &g = y.c, &h = y.d;
        return {x.a * e + 2 * x.b * f + 3 * x.c * g + 6 * x.d * h,
                x.a * f + x.b * e + 3 * (x.c * h + x.d * g),
                x.a * g + x.c * e + 2 * (x.b * h + x.d * f),
                x.a * h + x.d * e + x.b * g + x.c * f};
    }

    /// Multiplicative inverse; throws on zero.
    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("FieldElement: division by zero");
        // conjugate r2 -> -r2, then r3 -> -r3; the product of all four
        // conjugates is a nonzero rational (field norm).
        FieldElement c1{a, -b, c, -d};
        FieldElement t = (*this) * c1;        // lives in Q(r3)
        FieldElement c2{t.a, 0, -t.c, 0};
        FieldElement n = t * c2;              // rational
        return c1 * c2 * FieldElement(Rational(1) / n.a);
    }
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
        return x * y.inverse();
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

    /// Exact sign: -1, 0, +1.
    int sign() const {
        if (is_zero()) return 0;
        if (b == 0 && c == 0 && d == 0) return a > 0 ? 1 : -1;
        for (unsigned prec = 16;; prec *= 2) {
            auto [lo, hi] = enclose(prec);
            if (lo > 0) return 1;
            if (hi < 0) return -1;
            if (prec > 4096)
                throw std::logic_error("FieldElement::sign: refinement failed");
        }
    }

    bool operator<(const FieldElement& o) const { return (*this - o).sign() < 0; }

    double to_double() const;

    std::string str() const;
    static FieldElement parse(const std::string& text);

private:
    // Dyadic enclosure [lo, hi] of the real value at 2^-prec resolution.
    std::pair<Rational, Rational> enclose(unsigned prec) const {
        Integer scale = Integer(1) << prec;
        auto root_lo = [&](const Integer& n) {
            return isqrt_floor(n * scale * scale);
        };
        Integer l2 = root_lo(2), l3 = root_lo(3), l6 = root_lo(6);
        auto term = [&](const Rational& q, const Integer& lo) -> std::pair<Rational, Rational> {
            // q * [lo/scale, (lo+1)/scale]
            Rational rlo(lo, scale), rhi(lo + 1, scale);
            Rational x = q * rlo, y = q * rhi;
            if (q >= 0) return {x, y};
            return {y, x};
        };
        auto [b_lo, b_hi] = term(b, l2);
        auto [c_lo, c_hi] = term(c, l3);
        auto [d_lo, d_hi] = term(d, l6);
        Rational lo = a + b_lo + c_lo + d_lo;
        Rational hi = a + b_hi + c_hi + d_hi;
        return {lo, hi};
    }
};

inline double FieldElement::to_double() const {
    return static_cast<double>(a) + static_cast<double>(b) * 1.41421356237309504880
         + static_cast<double>(c) * 1.73205080756887729353
         + static_cast<double>(d) * 2.44948974968163702861;
}

namespace detail {
inline std::string rat_str(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}
}  // namespace detail

/// Renders as `a + b*r2 + c*r3 + d*r6`, omitting zero terms ("0" if all zero).
inline std::string FieldElement::str() const {
    std::string out;
    auto emit = [&](const Rational& q, const char* sym) {
        if (q == 0) return;
        if (!out.empty()) {
            out += (q > 0) ? " + " : " - ";
            Rational aq = q > 0 ? q : Rational(-q);
            out += detail::rat_str(aq);
        } else {
            out += detail::rat_str(q);
        }
        if (*sym) { out += '*'; out += sym; }
    };
    emit(a, ""); emit(b, "r2"); emit(c, "r3"); emit(d, "r6");
    return out.empty() ? "0" : out;
}

/// Parses the grammar produced by str(): terms `p/q[*r2|*r3|*r6]` joined by +/-.
inline FieldElement FieldElement::parse(const std::string& text) {
    FieldElement out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (first) throw std::invalid_argument("FieldElement::parse: empty input");
            break;
        }
        int sgn = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (first) { sgn = text[i] == '-' ? -1 : 1; ++i; }
            else { sgn = text[i] == '-' ? -1 : 1; ++i; }
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("FieldElement::parse: expected +/- between terms");
        }
        size_t j = i;
        while (j < text.size() && (isdigit(text[j]) || text[j] == '/')) ++j;
        if (j == i) throw std::invalid_argument("FieldElement::parse: expected number");
        Rational q(text.substr(i, j - i));
        i = j;
        Rational* slot = &out.a;
        if (i < text.size() && text[i] == '*') {
            ++i;
            if (text.compare(i, 2, "r2") == 0) { slot = &out.b; i += 2; }
            else if (text.compare(i, 2, "r3") == 0) { slot = &out.c; i += 2; }
            else if (text.compare(i, 2, "r6") == 0) { slot = &out.d; i += 2; }
            else throw std::invalid_argument("FieldElement::parse: bad radical");
        }
        *slot += sgn * q;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace rac

#include <ostream>
namespace rac {
inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    return os << x.str();
}
}  // namespace rac

#endif  // RAC_FIELD_HPP
