#pragma once

#include <optional>
#include <vector>

#include "padspec/space.hpp"

namespace padspec {

/// Matrix operator on a WeightedSpace, column-action convention:
/// u(e_j) = sum_i entries(i, j) e_i, so (u x)_i = sum_j entries(i, j) x_j.
class Operator {
public:
    Operator(SpacePtr space, std::vector<PadicScalar> entries_row_major);

    static Operator zero(SpacePtr space);
    static Operator identity(SpacePtr space);
    static Operator diagonal(SpacePtr space, std::vector<PadicScalar> diag);
    static Operator scalar(SpacePtr space, const PadicScalar& c);

    const SpacePtr& space() const { return space_; }
    std::size_t dim() const { return n_; }
    const PadicScalar& entry(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }
    const std::vector<PadicScalar>& entries() const { return entries_; }

    Vector apply(const Vector& x) const;

    Operator compose(const Operator& o) const;  // this after o: (this*o)(x) = this(o(x))
    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator scaled(const PadicScalar& c) const;
    Operator transpose() const;

    Operator pow(std::size_t k) const;

    bool is_zero() const;
    bool is_diagonal() const;
    std::vector<PadicScalar> diagonal_entries() const;

    bool operator==(const Operator& o) const;
    bool operator!=(const Operator& o) const { return !(*this == o); }

private:
    SpacePtr space_;
    std::size_t n_;
    std::vector<PadicScalar> entries_;
};

/// ||u|| = max_{i,j} |entry(i,j)| ||e_i|| / ||e_j||, exact.
LogNorm op_norm(const Operator& u);

/// Operator norm for the renormed space: basis norms |pi|^(n_i).
LogNorm op_norm_pi(const Operator& u, const PiStructure& ps);

/// Adjoint for f_omega: entry(i,j) of u* is omega_i^(-1) omega_j entry(j,i) of u.
Operator adjoint_omega(const Operator& u);

/// Adjoint for f_pi: entry(i,j) of u* is pi^(n_j - n_i) entry(j,i) of u.
Operator adjoint_pi(const Operator& u, const PiStructure& ps);

/// u = u* for f_omega, checked entrywise at working precision.
bool is_self_adjoint(const Operator& u);

/// u = u* for f_pi: pi^(n_i) entry(i,j) = pi^(n_j) entry(j,i) for all i, j.
bool is_self_adjoint_pi(const Operator& u, const PiStructure& ps);

/// Exact inverse by elimination; empty when the matrix is singular.
std::optional<Operator> try_inverse(const Operator& u);

/// Result of sampling a generated operator algebra for the transposition
/// axioms. T-axioms ((a+b)^t, (lambda a)^t, (ab)^t, a^tt) are verified on the
/// samples; E is ||a^t a|| = ||a||^2 and S is ||a^t a|| = ||a^2||. A true flag
/// means every sample passed, never a universal proof; a false flag comes with
/// the first failing element.
struct AlgebraAxiomReport {
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    bool t_holds = true;
    bool s_holds = true;
    bool e_holds = true;
    std::optional<Operator> t_witness;
    std::optional<Operator> s_witness;
    std::optional<Operator> e_witness;
};

/// Samples random K-linear words in the generators and their transposes
/// (the generators themselves are always the first samples) and tests the
/// T/S/E axioms on each.
AlgebraAxiomReport check_algebra_axioms(const std::vector<Operator>& generators,
                                        std::uint64_t samples, std::uint64_t seed);

}  // namespace padspec
