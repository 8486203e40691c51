#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padspec/operator.hpp"
#include "padspec/subsets.hpp"

namespace padspec {

/// Coordinate projector p_J: the diagonal 0/1 operator with 1 exactly on J.
class Projector {
public:
    Projector(SpacePtr space, IndexSubset subset);

    const SpacePtr& space() const { return space_; }
    const IndexSubset& subset() const { return subset_; }

    Operator to_operator() const;
    Projector intersect(const Projector& o) const;  // p_J p_L = p_{J cap L}
    Projector complement() const;

private:
    SpacePtr space_;
    IndexSubset subset_;
};

/// Classification of a candidate idempotent in the diagonal algebra.
struct IdempotentCheck {
    enum class Status { not_diagonal, not_idempotent, idempotent };
    Status status;
    IndexSubset subset;  // J with u = p_J, when status == idempotent

    bool is_projector() const { return status == Status::idempotent; }
};

/// A diagonal u is an idempotent iff it is p_J for some J; non-diagonal input
/// yields not_diagonal, a diagonal entry outside {0, 1} yields not_idempotent.
IdempotentCheck is_idempotent_diagonal(const Operator& u);

/// Element alpha_0 * id + sum_nu alpha_nu p_{J_nu} of the unital algebra
/// generated by projectors over pairwise-disjoint blocks J_nu. The blocks must
/// leave a nonempty complement so that {id, p_nu} stays an orthonormal family
/// in finite dimension (with a covering partition the identity would be a
/// combination of the p_nu and the norm formula would break).
class BElement {
public:
    BElement(SpacePtr space, std::vector<IndexSubset> partition, PadicScalar alpha0,
             std::vector<PadicScalar> alphas);

    const SpacePtr& space() const { return space_; }
    const std::vector<IndexSubset>& partition() const { return partition_; }
    std::size_t blocks() const { return partition_.size(); }
    const PadicScalar& alpha0() const { return alpha0_; }
    const PadicScalar& alpha(std::size_t nu) const { return alphas_[nu]; }
    const std::vector<PadicScalar>& alphas() const { return alphas_; }

    Operator to_operator() const;

    /// Same-partition algebra operations.
    BElement mul(const BElement& o) const;
    BElement add(const BElement& o) const;
    BElement scaled(const PadicScalar& c) const;

    bool operator==(const BElement& o) const;
    bool operator!=(const BElement& o) const { return !(*this == o); }

private:
    void require_same_partition(const BElement& o) const;

    SpacePtr space_;
    std::vector<IndexSubset> partition_;
    PadicScalar alpha0_;
    std::vector<PadicScalar> alphas_;
};

/// ||u|| by the two closed forms max(|a0|, max |a0+a_nu|) and max over
/// Lambda_0 of |a_nu|; both are evaluated and must agree (a mismatch is a bug,
/// not an input error).
LogNorm b_norm(const BElement& u);

/// Character of the projector algebra: chi_0 (u -> alpha_0) or chi_nu
/// (u -> alpha_0 + alpha_nu) for a block index nu.
struct Character {
    static constexpr std::size_t kChi0 = static_cast<std::size_t>(-1);
    std::size_t tag = kChi0;  // kChi0 or a block index

    bool is_chi0() const { return tag == kChi0; }
    PadicScalar eval(const BElement& u) const {
        return is_chi0() ? u.alpha0() : u.alpha0() + u.alpha(tag);
    }
};

/// All characters with their values on u. Each character is re-verified to be
/// multiplicative and unital on a seeded sample of algebra pairs.
std::vector<std::pair<Character, PadicScalar>> characters(
    const BElement& u, std::uint64_t seed = 0x5eed, std::size_t verify_samples = 8);

/// Value table of the Gelfand transform over Lambda_0, indexed
/// [chi_0, chi_1, ..., chi_Lambda].
struct GelfandTable {
    std::vector<IndexSubset> partition;
    std::vector<PadicScalar> values;

    LogNorm sup_norm() const {
        LogNorm n = LogNorm::zero();
        for (const auto& v : values) n = LogNorm::max(n, v.abs());
        return n;
    }
};

GelfandTable gelfand(const BElement& u);

/// u = f(chi_0) id + sum (f(chi_nu) - f(chi_0)) p_nu; exact inverse of gelfand.
BElement gelfand_inverse(SpacePtr space, const GelfandTable& table);

/// Evaluation character of the diagonal algebra at a coordinate.
struct DiagonalCharacter {
    std::size_t index;

    /// Value on a diagonal operator; throws on non-diagonal input.
    PadicScalar eval(const Operator& u) const;
};

/// The characters of the diagonal algebra on a finite-dimensional space: one
/// coordinate evaluation per basis index, each verified multiplicative on a
/// seeded sample of diagonal pairs.
std::vector<DiagonalCharacter> d_spectrum_finite(const SpacePtr& space,
                                                 std::uint64_t seed = 0x5eed,
                                                 std::size_t verify_samples = 8);

}  // namespace padspec
