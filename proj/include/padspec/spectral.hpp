#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padspec/measure.hpp"

namespace padspec {

/// Representation of the step-function algebra of a finite clopen algebra on a
/// space H, determined by an operator per atom and extended linearly:
/// T_f = sum f(atom) T(Ch_atom). Valid when the atom operators are mutually
/// orthogonal idempotents summing to the identity (multiplicative + unital).
class FiniteRepresentation {
public:
    FiniteRepresentation(AlgebraPtr algebra, SpacePtr space,
                         std::vector<Operator> atom_operators);

    const AlgebraPtr& algebra() const { return algebra_; }
    const SpacePtr& space() const { return space_; }
    const Operator& atom_operator(std::size_t i) const { return atom_operators_[i]; }

    /// T_f for a step function f.
    Operator apply(const StepFunction& f) const;

    /// Multiplicative + unital, i.e. the atom table validates as a
    /// projection-valued measure. Returns a witness message when not.
    std::optional<std::string> violation() const;

    bool operator==(const FiniteRepresentation& o) const;
    bool operator!=(const FiniteRepresentation& o) const { return !(*this == o); }

private:
    AlgebraPtr algebra_;
    SpacePtr space_;
    std::vector<Operator> atom_operators_;
};

/// T(Ch_atom) := P(atom); always a valid representation.
FiniteRepresentation rep_from_pvm(const ProjectionValuedMeasure& p);

/// P(atom) := T(Ch_atom) after validating the representation; the two
/// directions are mutually inverse. Throws ValidationError with the witness on
/// a non-multiplicative or non-unital table.
ProjectionValuedMeasure pvm_from_rep(const FiniteRepresentation& t);

/// ker T is trivial (off P-null sets) iff the support of the induced measure
/// is all of X. Both sides are computed independently and must agree.
bool faithfulness(const FiniteRepresentation& t);

/// Spectral decomposition of a diagonal operator: the atoms are the distinct
/// diagonal values (equality at working precision, sorted by (valuation,
/// unit) with zero last) and each projector is the coordinate projector onto
/// the matching level set. Integrating the identity function against the
/// measure reconstructs the operator exactly.
struct SpectralDecomposition {
    std::vector<PadicScalar> support;
    ProjectionValuedMeasure pvm;

    /// The identity-function step function on the support atoms.
    StepFunction identity_function() const;

    /// integral of x P(dx): reconstructs the decomposed operator.
    Operator reconstruct() const;
};

SpectralDecomposition spectral_decompose_diagonal(const Operator& b);

/// Decomposition of basis * diagonal * basis^(-1): conjugates the level-set
/// projectors back through the basis. Throws when basis is singular or the
/// conjugated operator is not diagonal.
SpectralDecomposition spectral_decompose_in_basis(const Operator& b, const Operator& basis);

/// Checks that for every support atom lambda in omega, the range of
/// P({lambda}) is exactly the lambda-eigenspace of b: b acts as lambda on the
/// range and the complementary projector meets no lambda-eigenvector.
bool eigenrange_check(const Operator& b, const SpectralDecomposition& dec,
                      const ClopenSet& omega);

/// Joint decomposition of commuting diagonal operators: the atoms are the
/// distinct joint diagonal tuples, and each input operator is reconstructed by
/// integrating its coordinate function.
struct SimultaneousDecomposition {
    std::vector<std::vector<PadicScalar>> points;  // one tuple per atom
    ProjectionValuedMeasure pvm;

    /// Coordinate function of the k-th operator on the joint point set.
    StepFunction coordinate_function(std::size_t k) const;
};

SimultaneousDecomposition simultaneous_decompose(const std::vector<Operator>& family);

/// Multiplication representation on the weighted function space built from a
/// measure: H carries the norm max |f(x)| N_mu(x) over the non-null atoms,
/// a acts by pointwise multiplication and the spectral measure is
/// multiplication by characteristic functions. Null atoms are dropped so the
/// weight is a norm rather than a seminorm; they are recorded.
struct MultiplicationRep {
    AlgebraPtr algebra;       // the original algebra of the measure
    KMeasure mu;
    std::vector<std::size_t> kept_atoms;     // atoms with nonzero weight
    std::vector<std::size_t> dropped_atoms;  // mu-null atoms
    SpacePtr h;               // weights omega_x = mu(x)^2, so ||e_x|| = N_mu(x)
    FiniteRepresentation rep;  // on the full algebra; acts on h

    LogNorm weight(std::size_t kept_pos) const {
        return h->basis_norm(kept_pos);
    }
};

MultiplicationRep multiplication_rep(const KMeasure& mu);

/// Diagonal part of u as a vector of entries.
std::vector<PadicScalar> diagonal_part(const Operator& u);

}  // namespace padspec
