#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "padspec/errors.hpp"

namespace padspec {

using BigInt = boost::multiprecision::cpp_int;

/// Element of the value group of the absolute value, extended by zero:
/// the number p^(-q) with q in (1/2)Z, or the value 0 (exponent +infinity).
/// Stored as twice the exponent so half-integers stay exact.
///
/// Larger norm means smaller exponent; the zero norm loses under max and
/// absorbs under multiplication.
class LogNorm {
public:
    static LogNorm zero() { return LogNorm(true, 0); }
    static LogNorm one() { return LogNorm(false, 0); }
    /// p^(-e)
    static LogNorm from_exponent(std::int64_t e) { return LogNorm(false, 2 * e); }
    /// p^(-e2/2)
    static LogNorm from_half_exponent(std::int64_t e2) { return LogNorm(false, e2); }

    bool is_zero() const { return zero_; }

    /// Twice the exponent q; only valid for nonzero norms.
    std::int64_t twice_exponent() const {
        if (zero_) throw InputError("twice_exponent of the zero norm");
        return e2_;
    }

    LogNorm operator*(const LogNorm& o) const {
        if (zero_ || o.zero_) return zero();
        return from_half_exponent(e2_ + o.e2_);
    }

    LogNorm div(const LogNorm& o) const {
        if (o.zero_) throw DivisionByZeroError("division by the zero norm");
        if (zero_) return zero();
        return from_half_exponent(e2_ - o.e2_);
    }

    LogNorm pow(std::int64_t k) const {
        if (zero_) {
            if (k <= 0) throw InputError("nonpositive power of the zero norm");
            return zero();
        }
        return from_half_exponent(e2_ * k);
    }

    bool operator==(const LogNorm& o) const {
        return zero_ == o.zero_ && (zero_ || e2_ == o.e2_);
    }
    bool operator!=(const LogNorm& o) const { return !(*this == o); }

    /// Order by norm value: 0 is smallest, otherwise smaller exponent = larger value.
    bool operator<(const LogNorm& o) const {
        if (zero_) return !o.zero_;
        if (o.zero_) return false;
        return e2_ > o.e2_;
    }
    bool operator<=(const LogNorm& o) const { return *this < o || *this == o; }
    bool operator>(const LogNorm& o) const { return o < *this; }
    bool operator>=(const LogNorm& o) const { return o <= *this; }

    static LogNorm max(const LogNorm& a, const LogNorm& b) { return a < b ? b : a; }
    static LogNorm min(const LogNorm& a, const LogNorm& b) { return a < b ? a : b; }

    /// Exponent as a string: "inf" for the zero norm, else "3", "-1/2", ...
    std::string exponent_string() const;
    static LogNorm from_exponent_string(const std::string& s);

private:
    LogNorm(bool zero, std::int64_t e2) : zero_(zero), e2_(e2) {}
    bool zero_;
    std::int64_t e2_;
};

/// Exact element of Q_p at a fixed working precision.
///
/// The value is held exactly as p^v * (num/den) with num, den coprime to p, so
/// valuations and norms are never approximated and algebraic identities hold
/// as identities of rationals. The observable canonical form is the pair
/// (valuation, unit mod p^N): equality, serialization and the unit accessor
/// all reduce to it. N is the working precision (significant base-p digits).
class PadicScalar {
public:
    static constexpr std::int64_t kValuationInfinity = INT64_MAX;

    static PadicScalar zero(std::int64_t p, std::int32_t precision);
    static PadicScalar one(std::int64_t p, std::int32_t precision);
    static PadicScalar from_integer(std::int64_t p, std::int32_t precision, BigInt value);
    static PadicScalar from_ratio(std::int64_t p, std::int32_t precision, BigInt num, BigInt den);
    /// Build from the canonical form; unit must be coprime to p.
    static PadicScalar from_unit(std::int64_t p, std::int32_t precision,
                                 std::int64_t valuation, BigInt unit);

    std::int64_t prime() const { return p_; }
    std::int32_t precision() const { return prec_; }
    bool is_zero() const { return zero_; }

    /// Exact p-adic valuation; kValuationInfinity for zero.
    std::int64_t valuation() const { return zero_ ? kValuationInfinity : val_; }

    /// Canonical unit in [1, p^N): (num/den) mod p^N. Throws on zero.
    BigInt unit() const;

    /// |x| = p^(-v) exactly; |0| = 0.
    LogNorm abs() const {
        return zero_ ? LogNorm::zero() : LogNorm::from_exponent(val_);
    }

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator-() const;

    /// Exact multiplicative inverse. Throws DivisionByZeroError on zero.
    PadicScalar inv() const;

    /// Square root of a unit by Hensel lifting (odd p only). The returned root
    /// is the lift of the smaller of the two seeds mod p; r*r equals the input
    /// at working precision. Throws NoSquareRootError when the input is not a
    /// unit quadratic residue.
    static PadicScalar hensel_sqrt(const PadicScalar& a);

    /// Equality at working precision: same prime, same valuation, units
    /// congruent mod p^min(N_a, N_b).
    bool operator==(const PadicScalar& o) const;
    bool operator!=(const PadicScalar& o) const { return !(*this == o); }

    /// Deterministic total order by (valuation, unit), zero last.
    /// Only meaningful between scalars over the same prime.
    static bool canonical_less(const PadicScalar& a, const PadicScalar& b);

    /// Deterministic label "0", "7", or "7*5^-2" from the canonical form.
    std::string label() const;

    /// p^N for this scalar's field parameters.
    BigInt precision_modulus() const;

private:
    PadicScalar(std::int64_t p, std::int32_t prec)
        : p_(p), prec_(prec), zero_(true), val_(0), num_(0), den_(1) {}

    void normalize();
    static void require_same_field(const PadicScalar& a, const PadicScalar& b);

    std::int64_t p_;
    std::int32_t prec_;
    bool zero_;
    std::int64_t val_;  // exact valuation of the whole value
    BigInt num_;        // coprime to p, carries the sign
    BigInt den_;        // positive, coprime to p
};

/// a^(-1) mod m for a coprime to m.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// a mod m reduced to [0, m).
BigInt mod_reduce(const BigInt& a, const BigInt& m);

}  // namespace padspec
