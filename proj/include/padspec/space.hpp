#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "padspec/scalar.hpp"

namespace padspec {

class WeightedSpace;
using SpacePtr = std::shared_ptr<const WeightedSpace>;

/// Finite-dimensional free Banach space over Q_p with an orthogonal basis
/// weighted by nonzero scalars omega_i; the basis norms are |omega_i|^(1/2).
class WeightedSpace {
public:
    WeightedSpace(std::int64_t p, std::int32_t precision,
                  std::vector<PadicScalar> omega);

    /// Orthonormal space: all weights 1.
    static SpacePtr orthonormal(std::int64_t p, std::int32_t precision, std::size_t dim);
    static SpacePtr make(std::int64_t p, std::int32_t precision,
                         std::vector<PadicScalar> omega);

    std::size_t dim() const { return omega_.size(); }
    std::int64_t prime() const { return p_; }
    std::int32_t precision() const { return prec_; }
    const PadicScalar& omega(std::size_t i) const { return omega_[i]; }
    const std::vector<PadicScalar>& omega() const { return omega_; }

    /// ||e_i|| = |omega_i|^(1/2), a half-integer-exponent norm.
    LogNorm basis_norm(std::size_t i) const {
        return LogNorm::from_half_exponent(omega_[i].valuation());
    }

    PadicScalar scalar_zero() const { return PadicScalar::zero(p_, prec_); }
    PadicScalar scalar_one() const { return PadicScalar::one(p_, prec_); }

    bool operator==(const WeightedSpace& o) const;
    bool operator!=(const WeightedSpace& o) const { return !(*this == o); }

private:
    std::int64_t p_;
    std::int32_t prec_;
    std::vector<PadicScalar> omega_;
};

void require_same_space(const SpacePtr& a, const SpacePtr& b);

/// Element of a WeightedSpace, given by its basis coordinates.
class Vector {
public:
    Vector(SpacePtr space, std::vector<PadicScalar> coords);

    static Vector zero(SpacePtr space);
    static Vector basis(SpacePtr space, std::size_t i);

    const SpacePtr& space() const { return space_; }
    std::size_t dim() const { return coords_.size(); }
    const PadicScalar& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<PadicScalar>& coords() const { return coords_; }

    bool is_zero() const;

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector scaled(const PadicScalar& c) const;

    bool operator==(const Vector& o) const;
    bool operator!=(const Vector& o) const { return !(*this == o); }

private:
    SpacePtr space_;
    std::vector<PadicScalar> coords_;
};

/// ||x|| = max_i |x_i| ||e_i||, exact in the value group.
LogNorm vector_norm(const Vector& x);

/// f_omega(x, y) = sum_i omega_i x_i y_i.
PadicScalar f_omega(const Vector& x, const Vector& y);

/// True iff x != 0 and f_omega(x, x) = 0 at working precision.
bool is_isotropic(const Vector& x);

/// Renorming structure from a fixed pi with 0 < |pi| < 1: integer exponents
/// n_i with |pi|^(n_i+1) < ||e_i|| <= |pi|^(n_i), the equivalent norm
/// ||x||_pi = max |x_i| |pi|^(n_i) and the bilinear form
/// f_pi(x, y) = sum pi^(2 n_i) x_i y_i.
class PiStructure {
public:
    PiStructure(SpacePtr space, PadicScalar pi);

    const SpacePtr& space() const { return space_; }
    const PadicScalar& pi() const { return pi_; }
    std::int64_t exponent(std::size_t i) const { return exponents_[i]; }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }

    LogNorm pi_norm(const Vector& x) const;
    PadicScalar f_pi(const Vector& x, const Vector& y) const;

    /// pi^k as a scalar, k possibly negative.
    PadicScalar pi_power(std::int64_t k) const;

private:
    SpacePtr space_;
    PadicScalar pi_;
    std::vector<std::int64_t> exponents_;
};

inline PiStructure make_pi_structure(SpacePtr space, PadicScalar pi) {
    return PiStructure(std::move(space), std::move(pi));
}

/// Checks the defining norm equality ||sum a_j x_j|| = max ||a_j x_j|| over
/// all coefficient tuples from {0, 1, p, p^-1} (capped) plus seeded random
/// tuples. A false result is definitive; a true result is sampled evidence.
bool is_orthogonal_family(const std::vector<Vector>& vectors,
                          std::uint64_t seed = 0x5eed, std::size_t random_tuples = 64);

}  // namespace padspec
