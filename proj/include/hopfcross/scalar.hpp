#pragma once

// Exact scalars: rationals (GMP mpq) and elements of cyclotomic fields Q(zeta_n),
// represented canonically modulo the n-th cyclotomic polynomial. A Scalar of
// order 1 is a plain rational; rationals embed silently into any Q(zeta_n),
// while two distinct cyclotomic orders never mix.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hopfcross/error.hpp"

namespace hopfcross {

inline unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// Monic integer polynomials, coefficient i = coefficient of X^i.
using ZPoly = std::vector<mpz_class>;

inline ZPoly zpoly_div_exact(const ZPoly& num, const ZPoly& den) {
    ZPoly rem = num;
    ZPoly quot(num.size() - den.size() + 1, mpz_class(0));
    for (size_t i = quot.size(); i-- > 0;) {
        mpz_class c = rem[i + den.size() - 1]; // den is monic
        quot[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    return quot;
}

// Phi_n as a monic integer polynomial, via Phi_n = (X^n - 1) / prod_{d|n, d<n} Phi_d.
inline const ZPoly& cyclotomic_poly(unsigned n) {
    static std::map<unsigned, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<unsigned> pending{n};
    while (!pending.empty()) {
        unsigned k = pending.back();
        if (cache.count(k)) { pending.pop_back(); continue; }
        bool ready = true;
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0 && !cache.count(d)) { pending.push_back(d); ready = false; }
        if (!ready) continue;
        ZPoly poly(k + 1, mpz_class(0));
        poly[0] = -1; poly[k] = 1; // X^k - 1
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) poly = zpoly_div_exact(poly, cache.at(d));
        cache.emplace(k, std::move(poly));
        pending.pop_back();
    }
    return cache.at(n);
}

} // namespace detail

class Scalar {
public:
    Scalar() : ord_(1), c_(1) {}
    Scalar(long v) : ord_(1), c_(1) { c_[0] = v; }
    Scalar(const mpq_class& q) : ord_(1), c_(1) { c_[0] = q; c_[0].canonicalize(); }
    Scalar(long num, long den) : ord_(1), c_(1) {
        if (den == 0) fail("ZeroDenominator", "rational with zero denominator");
        c_[0] = mpq_class(num, den);
        c_[0].canonicalize();
    }

    static Scalar zero_of(unsigned order) { return Scalar(order, std::vector<mpq_class>(euler_phi(order))); }

    static Scalar zeta(unsigned n, long power = 1) {
        if (n < 1) fail("ParseError", "zeta order must be positive");
        long p = power % (long)n;
        if (p < 0) p += n;
        Scalar out(n, std::vector<mpq_class>(n, mpq_class(0)));
        out.c_[(size_t)p] = 1;
        out.reduce_full(n);
        return out;
    }

    unsigned order() const { return ord_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_) if (q != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i) if (c_[i] != 0) return false;
        return true;
    }
    mpq_class rational_part() const { return c_.empty() ? mpq_class(0) : c_[0]; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        auto [x, y] = unify(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        auto [x, y] = unify(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    Scalar operator-() const {
        Scalar out = *this;
        for (auto& q : out.c_) q = -q;
        return out;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        auto [x, y] = unify(a, b);
        if (x.ord_ == 1) { x.c_[0] *= y.c_[0]; return x; }
        std::vector<mpq_class> prod(x.c_.size() + y.c_.size() - 1);
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j < y.c_.size(); ++j)
                if (y.c_[j] != 0) prod[i + j] += x.c_[i] * y.c_[j];
        }
        Scalar out(x.ord_, std::move(prod));
        out.reduce_full(x.ord_);
        return out;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        auto [x, y] = unify(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const {
        if (is_zero()) fail("DivisionByZero", "inverse of zero");
        if (ord_ == 1) return Scalar(mpq_class(1) / c_[0]);
        // extended Euclid in Q[X] against Phi_n, which is irreducible over Q
        using QPoly = std::vector<mpq_class>;
        const auto& phi_z = detail::cyclotomic_poly(ord_);
        QPoly r0(phi_z.size());
        for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = mpq_class(phi_z[i]);
        QPoly r1(c_.begin(), c_.end());
        trim(r1);
        QPoly s0{mpq_class(0)}, s1{mpq_class(1)}; // track coefficient of *this
        while (true) {
            trim(r1);
            if (r1.size() == 1) break; // nonzero constant: gcd reached
            QPoly q, rem = r0;
            q.assign(r0.size() - r1.size() + 1, mpq_class(0));
            mpq_class lead = r1.back();
            for (size_t i = q.size(); i-- > 0;) {
                mpq_class c = rem[i + r1.size() - 1] / lead;
                q[i] = c;
                if (c != 0)
                    for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
            }
            trim(rem);
            QPoly s2 = s0; // s2 = s0 - q*s1
            s2.resize(std::max(s0.size(), q.size() + s1.size() - 1), mpq_class(0));
            for (size_t i = 0; i < q.size(); ++i)
                if (q[i] != 0)
                    for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            r0 = std::move(r1); r1 = std::move(rem);
            s0 = std::move(s1); s1 = std::move(s2);
        }
        mpq_class g = r1[0];
        Scalar out(ord_, std::vector<mpq_class>(s1.size()));
        for (size_t i = 0; i < s1.size(); ++i) out.c_[i] = s1[i] / g;
        out.reduce_full(ord_);
        return out;
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc(1L), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Embed into Q(zeta_n); identity if already there.
    Scalar embedded(unsigned n) const {
        if (ord_ == n) return *this;
        if (ord_ != 1) fail("FieldMismatch", "cannot embed Q(zeta_" + std::to_string(ord_) +
                                             ") into Q(zeta_" + std::to_string(n) + ")");
        Scalar out = zero_of(n);
        out.c_[0] = c_[0];
        return out;
    }

    std::string render() const;
    static Scalar parse(const std::string& text, unsigned field_order);

private:
    Scalar(unsigned ord, std::vector<mpq_class> c) : ord_(ord), c_(std::move(c)) {}

    static void trim(std::vector<mpq_class>& p) {
        while (p.size() > 1 && p.back() == 0) p.pop_back();
    }

    // reduce c_ (arbitrary length, viewed as polynomial in zeta) mod Phi_n, resize to phi(n)
    void reduce_full(unsigned n) {
        const auto& phi = detail::cyclotomic_poly(n);
        size_t deg = phi.size() - 1; // = euler_phi(n)
        for (size_t i = c_.size(); i-- > deg;) {
            if (i >= c_.size() || c_[i] == 0) continue;
            mpq_class c = c_[i];
            c_[i] = 0;
            for (size_t j = 0; j < deg; ++j) c_[i - deg + j] -= c * mpq_class(phi[j]);
        }
        c_.resize(deg);
        ord_ = n;
    }

    static std::pair<Scalar, Scalar> unify(const Scalar& a, const Scalar& b) {
        if (a.ord_ == b.ord_) return {a, b};
        if (a.ord_ == 1) return {a.embedded(b.ord_), b};
        if (b.ord_ == 1) return {a, b.embedded(a.ord_)};
        fail("FieldMismatch", "mixed cyclotomic orders " + std::to_string(a.ord_) + " and " +
                                  std::to_string(b.ord_));
    }

    unsigned ord_;
    std::vector<mpq_class> c_;
};

// ---- text form: lowest terms, ascending powers of z --------------------------------

inline std::string Scalar::render() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class q = c_[i];
        bool neg = q < 0;
        mpq_class aq = neg ? mpq_class(-q) : q;
        std::string mag;
        if (i == 0) {
            mag = aq.get_str();
        } else {
            std::string zp = (i == 1) ? "z" : "z^" + std::to_string(i);
            mag = (aq == 1) ? zp : aq.get_str() + "*" + zp;
        }
        if (out.empty())
            out = (neg ? "-" : "") + mag;
        else
            out += (neg ? "-" : "+") + mag;
    }
    return out;
}

namespace detail {

class ScalarParser {
public:
    ScalarParser(const std::string& text, unsigned order) : s_(normalize(text)), order_(order) {}

    Scalar run() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("ParseError", "trailing input in scalar '" + s_ + "'");
        return v;
    }

private:
    static std::string normalize(const std::string& text) {
        std::string out;
        for (size_t i = 0; i < text.size(); ++i) {
            // U+2212 (minus sign) -> '-'
            if (i + 2 < text.size() + 1 && (unsigned char)text[i] == 0xE2 && i + 2 < text.size() &&
                (unsigned char)text[i + 1] == 0x88 && (unsigned char)text[i + 2] == 0x92) {
                out += '-';
                i += 2;
            } else {
                out += text[i];
            }
        }
        return out;
    }

    void skip_ws() { while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_; }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    Scalar expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true; else eat('+');
        Scalar v = term();
        if (neg) v = -v;
        while (true) {
            skip_ws();
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else break;
        }
        return v;
    }

    Scalar term() {
        Scalar v = factor();
        while (eat('*')) v *= factor();
        return v;
    }

    Scalar factor() {
        Scalar base = atom();
        if (eat('^')) {
            skip_ws();
            std::string digits = read_digits();
            if (digits.empty()) fail("ParseError", "exponent expected in '" + s_ + "'");
            base = base.pow(std::stol(digits));
        }
        return base;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("ParseError", "unexpected end of scalar '" + s_ + "'");
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("ParseError", "missing ')' in '" + s_ + "'");
            return v;
        }
        char c = s_[pos_];
        if (c == 'z') {
            ++pos_;
            if (order_ <= 1) fail("ParseError", "'z' used in a rational session");
            return Scalar::zeta(order_, 1);
        }
        if (std::isdigit((unsigned char)c)) {
            std::string num = read_digits();
            if (eat('/')) {
                std::string den = read_digits();
                if (den.empty()) fail("ParseError", "denominator expected in '" + s_ + "'");
                mpz_class dz(den);
                if (dz == 0) fail("ZeroDenominator", "zero denominator in '" + s_ + "'");
                mpq_class q(mpz_class(num), dz);
                q.canonicalize();
                return Scalar(q);
            }
            return Scalar(mpq_class(mpz_class(num)));
        }
        fail("ParseError", std::string("unexpected character '") + c + "' in '" + s_ + "'");
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) out += s_[pos_++];
        return out;
    }

    std::string s_;
    unsigned order_;
    size_t pos_ = 0;
};

} // namespace detail

inline Scalar Scalar::parse(const std::string& text, unsigned field_order) {
    Scalar v = detail::ScalarParser(text, field_order).run();
    if (field_order > 1) return v.embedded(field_order);
    return v;
}

} // namespace hopfcross
