#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars and vectors.
 *
 * Every quantity in this library is an exact arbitrary-precision rational;
 * there is no floating-point representation anywhere. Scalars are GMP
 * rationals (`mpq_class`), always canonicalized: lowest terms, positive
 * denominator, zero stored as 0/1.
 *
 * The text form of a rational is "p/q" (or "p" when q = 1), with the sign on
 * the numerator. Decimal notation is deliberately rejected by the parser so
 * inexact values can never sneak in through a file.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperfan {

/// Exact rational scalar. Canonical (lowest terms, q > 0) after any gmpxx op.
using Rat = mpq_class;

/// Dense rational vector; the ambient dimension is the length.
using RatVec = std::vector<Rat>;

/// Dense row-major rational matrix.
using RatMat = std::vector<RatVec>;

/// Thrown when operands disagree on ambient dimension.
struct dimension_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or "p" (optional leading '-' or '+' on p). Rejects anything
/// else, in particular decimal notation such as "0.5" or "1e3".
inline Rat parse_rat(const std::string& text) {
    const auto bad = [&]() -> std::runtime_error {
        return std::runtime_error("not a rational literal: \"" + text + "\"");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "" : text.substr(slash + 1);

    const auto is_integer_literal = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_integer_literal(num, /*allow_sign=*/true)) throw bad();
    if (slash != std::string::npos && !is_integer_literal(den, /*allow_sign=*/false)) throw bad();

    // mpz_set_str accepts a leading '-' but not '+'.
    mpz_class p(num[0] == '+' ? num.substr(1) : num);
    mpz_class q = slash == std::string::npos ? mpz_class(1) : mpz_class(den);
    if (q == 0) throw std::runtime_error("zero denominator in rational literal: \"" + text + "\"");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

/// Canonical text form: "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Convenience constructor from small integers.
inline Rat rat(long p, long q = 1) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

/// Builds a vector from integer coordinates.
inline RatVec vec(std::initializer_list<long> coords) {
    RatVec v;
    v.reserve(coords.size());
    for (long c : coords) v.emplace_back(c);
    return v;
}

/// Text form "(c1,c2,...)" used in reports and diagnostics.
inline std::string vec_to_string(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(v[i]);
    }
    return out + ")";
}

inline void require_dim(const RatVec& v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw dimension_mismatch(std::string(what) + ": expected dimension " +
                                 std::to_string(n) + ", got " + std::to_string(v.size()));
}

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& c : v)
        if (c != 0) return false;
    return true;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
    require_dim(b, a.size(), "vector addition");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    require_dim(b, a.size(), "vector subtraction");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline RatVec scale(const Rat& s, const RatVec& a) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

inline RatVec neg(const RatVec& a) { return scale(Rat(-1), a); }

inline Rat dot(const RatVec& a, const RatVec& b) {
    require_dim(b, a.size(), "dot product");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// 2x2 determinant of two plane vectors; the workhorse of the 2D fan tests.
inline Rat cross2(const RatVec& a, const RatVec& b) {
    require_dim(a, 2, "cross2");
    require_dim(b, 2, "cross2");
    return a[0] * b[1] - a[1] * b[0];
}

/// True iff b = lambda * a for some rational lambda > 0 (a, b nonzero).
inline bool positively_proportional(const RatVec& a, const RatVec& b) {
    require_dim(b, a.size(), "proportionality test");
    if (is_zero_vec(a) || is_zero_vec(b)) return false;
    Rat lambda = 0;
    bool have_lambda = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            if (b[i] != 0) return false;
            continue;
        }
        Rat l = b[i] / a[i];
        if (!have_lambda) {
            lambda = l;
            have_lambda = true;
        } else if (l != lambda) {
            return false;
        }
    }
    return have_lambda && lambda > 0;
}

/// Sign of a rational as -1, 0, +1.
inline int sign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

/// Floor of a rational as an exact integer.
inline mpz_class floor_rat(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace hyperfan
