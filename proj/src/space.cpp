#include "padspec/space.hpp"

#include <algorithm>

#include "padspec/rng.hpp"

namespace padspec {

WeightedSpace::WeightedSpace(std::int64_t p, std::int32_t precision,
                             std::vector<PadicScalar> omega)
    : p_(p), prec_(precision), omega_(std::move(omega)) {
    if (omega_.empty()) throw InputError("space dimension must be positive");
    for (const auto& w : omega_) {
        if (w.prime() != p_) throw InputError("weight prime mismatch");
        if (w.is_zero()) throw InputError("weights must be nonzero");
    }
}

SpacePtr WeightedSpace::orthonormal(std::int64_t p, std::int32_t precision,
                                    std::size_t dim) {
    std::vector<PadicScalar> omega(dim, PadicScalar::one(p, precision));
    return std::make_shared<const WeightedSpace>(p, precision, std::move(omega));
}

SpacePtr WeightedSpace::make(std::int64_t p, std::int32_t precision,
                             std::vector<PadicScalar> omega) {
    return std::make_shared<const WeightedSpace>(p, precision, std::move(omega));
}

bool WeightedSpace::operator==(const WeightedSpace& o) const {
    if (p_ != o.p_ || prec_ != o.prec_ || dim() != o.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (omega_[i] != o.omega_[i]) return false;
    return true;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) throw InputError("space mismatch");
}

Vector::Vector(SpacePtr space, std::vector<PadicScalar> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
    if (coords_.size() != space_->dim())
        throw InputError("coordinate count does not match space dimension");
    for (const auto& c : coords_)
        if (c.prime() != space_->prime()) throw InputError("coordinate prime mismatch");
}

Vector Vector::zero(SpacePtr space) {
    std::vector<PadicScalar> c(space->dim(), space->scalar_zero());
    return Vector(std::move(space), std::move(c));
}

Vector Vector::basis(SpacePtr space, std::size_t i) {
    std::vector<PadicScalar> c(space->dim(), space->scalar_zero());
    c.at(i) = space->scalar_one();
    return Vector(std::move(space), std::move(c));
}

bool Vector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const PadicScalar& c) { return c.is_zero(); });
}

Vector Vector::operator+(const Vector& o) const {
    require_same_space(space_, o.space_);
    std::vector<PadicScalar> c;
    c.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) c.push_back(coords_[i] + o.coords_[i]);
    return Vector(space_, std::move(c));
}

Vector Vector::operator-(const Vector& o) const {
    require_same_space(space_, o.space_);
    std::vector<PadicScalar> c;
    c.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) c.push_back(coords_[i] - o.coords_[i]);
    return Vector(space_, std::move(c));
}

Vector Vector::scaled(const PadicScalar& s) const {
    std::vector<PadicScalar> c;
    c.reserve(coords_.size());
    for (const auto& x : coords_) c.push_back(x * s);
    return Vector(space_, std::move(c));
}

bool Vector::operator==(const Vector& o) const {
    if (*space_ != *o.space_) return false;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != o.coords_[i]) return false;
    return true;
}

LogNorm vector_norm(const Vector& x) {
    LogNorm n = LogNorm::zero();
    for (std::size_t i = 0; i < x.dim(); ++i)
        n = LogNorm::max(n, x[i].abs() * x.space()->basis_norm(i));
    return n;
}

PadicScalar f_omega(const Vector& x, const Vector& y) {
    require_same_space(x.space(), y.space());
    PadicScalar s = x.space()->scalar_zero();
    for (std::size_t i = 0; i < x.dim(); ++i)
        s = s + x.space()->omega(i) * x[i] * y[i];
    return s;
}

bool is_isotropic(const Vector& x) {
    return !x.is_zero() && f_omega(x, x).is_zero();
}

PiStructure::PiStructure(SpacePtr space, PadicScalar pi)
    : space_(std::move(space)), pi_(std::move(pi)) {
    if (pi_.prime() != space_->prime()) throw InputError("pi prime mismatch");
    if (pi_.is_zero() || pi_.valuation() < 1)
        throw InputError("pi must satisfy 0 < |pi| < 1");
    // |pi|^(n+1) < ||e_i|| <= |pi|^n, solved in (twice-)exponents:
    // n = floor(v(omega_i) / (2 v(pi))).
    std::int64_t vp = pi_.valuation();
    exponents_.reserve(space_->dim());
    for (std::size_t i = 0; i < space_->dim(); ++i) {
        std::int64_t e2 = space_->omega(i).valuation();
        std::int64_t q = e2 / (2 * vp);
        if (e2 < 0 && e2 % (2 * vp) != 0) --q;  // floor for negatives
        exponents_.push_back(q);
    }
}

PadicScalar PiStructure::pi_power(std::int64_t k) const {
    PadicScalar base = k >= 0 ? pi_ : pi_.inv();
    std::int64_t n = k >= 0 ? k : -k;
    PadicScalar r = space_->scalar_one();
    for (std::int64_t i = 0; i < n; ++i) r = r * base;
    return r;
}

LogNorm PiStructure::pi_norm(const Vector& x) const {
    require_same_space(space_, x.space());
    std::int64_t vp = pi_.valuation();
    LogNorm n = LogNorm::zero();
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i].is_zero()) continue;
        n = LogNorm::max(n, LogNorm::from_exponent(x[i].valuation() + exponents_[i] * vp));
    }
    return n;
}

PadicScalar PiStructure::f_pi(const Vector& x, const Vector& y) const {
    require_same_space(space_, x.space());
    require_same_space(space_, y.space());
    PadicScalar s = space_->scalar_zero();
    for (std::size_t i = 0; i < x.dim(); ++i)
        s = s + pi_power(2 * exponents_[i]) * x[i] * y[i];
    return s;
}

namespace {

bool tuple_satisfies_orthogonality(const std::vector<Vector>& vs,
                                   const std::vector<PadicScalar>& coeffs) {
    Vector sum = Vector::zero(vs[0].space());
    LogNorm expected = LogNorm::zero();
    for (std::size_t j = 0; j < vs.size(); ++j) {
        sum = sum + vs[j].scaled(coeffs[j]);
        expected = LogNorm::max(expected, coeffs[j].abs() * vector_norm(vs[j]));
    }
    return vector_norm(sum) == expected;
}

}  // namespace

bool is_orthogonal_family(const std::vector<Vector>& vectors, std::uint64_t seed,
                          std::size_t random_tuples) {
    if (vectors.empty()) return true;
    const SpacePtr& sp = vectors[0].space();
    for (const auto& v : vectors) require_same_space(sp, v.space());

    const std::size_t k = vectors.size();
    PadicScalar p_scalar = PadicScalar::from_integer(sp->prime(), sp->precision(), sp->prime());
    const std::vector<PadicScalar> alphabet = {sp->scalar_zero(), sp->scalar_one(),
                                               p_scalar, p_scalar.inv()};

    // exhaustive over the 4-letter alphabet while 4^k stays small
    constexpr std::size_t kMaxExhaustive = 1 << 16;
    std::size_t total = 1;
    bool exhaustive = true;
    for (std::size_t j = 0; j < k; ++j) {
        total *= alphabet.size();
        if (total > kMaxExhaustive) {
            exhaustive = false;
            break;
        }
    }
    if (exhaustive) {
        std::vector<PadicScalar> coeffs(k, sp->scalar_zero());
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t t = idx;
            for (std::size_t j = 0; j < k; ++j) {
                coeffs[j] = alphabet[t % alphabet.size()];
                t /= alphabet.size();
            }
            if (!tuple_satisfies_orthogonality(vectors, coeffs)) return false;
        }
    }

    Rng rng(seed);
    for (std::size_t s = 0; s < random_tuples; ++s) {
        std::vector<PadicScalar> coeffs;
        coeffs.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (rng.chance(0.2)) {
                coeffs.push_back(sp->scalar_zero());
                continue;
            }
            std::int64_t v = rng.uniform(-2, 2);
            std::int64_t u = rng.uniform(1, sp->prime() - 1) +
                             sp->prime() * rng.uniform(0, sp->prime() - 1);
            coeffs.push_back(PadicScalar::from_unit(sp->prime(), sp->precision(), v, u));
        }
        if (!tuple_satisfies_orthogonality(vectors, coeffs)) return false;
    }
    return true;
}

}  // namespace padspec
