#include "padspec/scalar.hpp"

#include <algorithm>

namespace padspec {

namespace {

bool is_small_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt pow_big(std::int64_t base, std::int64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

/// Divide out all factors of p; returns the number removed.
std::int64_t strip_p(BigInt& n, std::int64_t p) {
    std::int64_t count = 0;
    while (n % p == 0) {
        n /= p;
        ++count;
    }
    return count;
}

}  // namespace

BigInt mod_reduce(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    // extended Euclid
    BigInt old_r = mod_reduce(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw InputError("mod_inverse: argument not invertible");
    return mod_reduce(old_s, m);
}

std::string LogNorm::exponent_string() const {
    if (zero_) return "inf";
    if (e2_ % 2 == 0) return std::to_string(e2_ / 2);
    return std::to_string(e2_) + "/2";
}

LogNorm LogNorm::from_exponent_string(const std::string& s) {
    if (s == "inf") return zero();
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_exponent(std::stoll(s));
    if (s.substr(slash + 1) != "2") throw InputError("bad norm exponent: " + s);
    return from_half_exponent(std::stoll(s.substr(0, slash)));
}

PadicScalar PadicScalar::zero(std::int64_t p, std::int32_t precision) {
    if (!is_small_prime(p)) throw InputError("not a prime: " + std::to_string(p));
    if (precision < 1) throw InputError("precision must be positive");
    return PadicScalar(p, precision);
}

PadicScalar PadicScalar::one(std::int64_t p, std::int32_t precision) {
    return from_integer(p, precision, 1);
}

PadicScalar PadicScalar::from_integer(std::int64_t p, std::int32_t precision, BigInt value) {
    return from_ratio(p, precision, std::move(value), 1);
}

PadicScalar PadicScalar::from_ratio(std::int64_t p, std::int32_t precision,
                                    BigInt num, BigInt den) {
    PadicScalar x = zero(p, precision);
    if (den == 0) throw DivisionByZeroError("zero denominator");
    if (num == 0) return x;
    x.zero_ = false;
    x.val_ = 0;
    x.num_ = std::move(num);
    x.den_ = std::move(den);
    x.normalize();
    return x;
}

PadicScalar PadicScalar::from_unit(std::int64_t p, std::int32_t precision,
                                   std::int64_t valuation, BigInt unit) {
    PadicScalar x = zero(p, precision);
    if (unit == 0 || unit % p == 0)
        throw InputError("unit must be coprime to p");
    x.zero_ = false;
    x.val_ = valuation;
    x.num_ = mod_reduce(unit, x.precision_modulus());
    x.den_ = 1;
    return x;
}

BigInt PadicScalar::precision_modulus() const { return pow_big(p_, prec_); }

void PadicScalar::normalize() {
    if (zero_) return;
    if (num_ == 0) {
        zero_ = true;
        val_ = 0;
        num_ = 0;
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    val_ += strip_p(num_, p_);
    val_ -= strip_p(den_, p_);
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt PadicScalar::unit() const {
    if (zero_) throw InputError("unit of zero");
    BigInt m = precision_modulus();
    BigInt u = mod_reduce(num_, m);
    if (den_ != 1) u = mod_reduce(u * mod_inverse(den_, m), m);
    return u;
}

void PadicScalar::require_same_field(const PadicScalar& a, const PadicScalar& b) {
    if (a.p_ != b.p_)
        throw InputError("prime mismatch: " + std::to_string(a.p_) + " vs " +
                         std::to_string(b.p_));
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    require_same_field(*this, o);
    std::int32_t prec = std::min(prec_, o.prec_);
    if (zero_) {
        PadicScalar r = o;
        r.prec_ = prec;
        return r;
    }
    if (o.zero_) {
        PadicScalar r = *this;
        r.prec_ = prec;
        return r;
    }
    std::int64_t v = std::min(val_, o.val_);
    // p^v * (num/den * p^(val-v) + o.num/o.den * p^(o.val-v))
    BigInt lhs = num_ * o.den_ * pow_big(p_, val_ - v);
    BigInt rhs = o.num_ * den_ * pow_big(p_, o.val_ - v);
    PadicScalar r = zero(p_, prec);
    r.zero_ = false;
    r.val_ = v;
    r.num_ = lhs + rhs;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::operator-() const {
    PadicScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    require_same_field(*this, o);
    std::int32_t prec = std::min(prec_, o.prec_);
    PadicScalar r = zero(p_, prec);
    if (zero_ || o.zero_) return r;
    r.zero_ = false;
    r.val_ = val_ + o.val_;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::inv() const {
    if (zero_) throw DivisionByZeroError("inverse of zero");
    PadicScalar r = zero(p_, prec_);
    r.zero_ = false;
    r.val_ = -val_;
    if (num_ < 0) {
        r.num_ = -den_;
        r.den_ = -num_;
    } else {
        r.num_ = den_;
        r.den_ = num_;
    }
    return r;
}

PadicScalar PadicScalar::hensel_sqrt(const PadicScalar& a) {
    if (a.is_zero() || a.valuation() != 0)
        throw NoSquareRootError("hensel_sqrt requires a unit (valuation 0)");
    std::int64_t p = a.prime();
    if (p == 2) throw NoSquareRootError("hensel_sqrt requires an odd prime");
    BigInt m = a.precision_modulus();
    BigInt u = a.unit();

    // seed: smallest root of x^2 = u mod p
    BigInt u0 = mod_reduce(u, p);
    BigInt seed = 0;
    for (BigInt x = 1; x < p; ++x) {
        if (mod_reduce(x * x, p) == u0) {
            seed = x;
            break;
        }
    }
    if (seed == 0)
        throw NoSquareRootError("not a quadratic residue mod " + std::to_string(p));

    // Newton lift r <- (r + u/r)/2, doubling the modulus each step
    BigInt r = seed;
    BigInt mod = p;
    BigInt inv2 = mod_inverse(2, m);
    while (mod < m) {
        mod = mod * mod;
        if (mod > m) mod = m;
        BigInt rinv = mod_inverse(r, mod);
        r = mod_reduce((r + u * rinv) * inv2, mod);
    }
    // keep the branch through the chosen seed
    if (mod_reduce(r, p) != seed) r = mod_reduce(m - r, m);
    return from_unit(a.prime(), a.precision(), 0, r);
}

bool PadicScalar::operator==(const PadicScalar& o) const {
    if (p_ != o.p_) return false;
    if (zero_ || o.zero_) return zero_ == o.zero_;
    if (val_ != o.val_) return false;
    BigInt m = pow_big(p_, std::min(prec_, o.prec_));
    // num/den == o.num/o.den mod p^N, cross-multiplied to avoid inverses
    return mod_reduce(num_ * o.den_ - o.num_ * den_, m) == 0;
}

bool PadicScalar::canonical_less(const PadicScalar& a, const PadicScalar& b) {
    if (a.is_zero()) return false;  // zero sorts last
    if (b.is_zero()) return true;
    if (a.valuation() != b.valuation()) return a.valuation() < b.valuation();
    return a.unit() < b.unit();
}

std::string PadicScalar::label() const {
    if (zero_) return "0";
    std::string u = unit().str();
    if (val_ == 0) return u;
    return u + "*" + std::to_string(p_) + "^" + std::to_string(val_);
}

}  // namespace padspec
