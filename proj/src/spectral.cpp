#include "padspec/spectral.hpp"

#include <algorithm>

namespace padspec {

FiniteRepresentation::FiniteRepresentation(AlgebraPtr algebra, SpacePtr space,
                                           std::vector<Operator> atom_operators)
    : algebra_(std::move(algebra)),
      space_(std::move(space)),
      atom_operators_(std::move(atom_operators)) {
    if (atom_operators_.size() != algebra_->atom_count())
        throw InputError("one operator per atom required");
    for (const auto& t : atom_operators_) require_same_space(space_, t.space());
}

Operator FiniteRepresentation::apply(const StepFunction& f) const {
    require_same_algebra(algebra_, f.algebra());
    Operator r = Operator::zero(space_);
    for (std::size_t i = 0; i < atom_operators_.size(); ++i)
        r = r + atom_operators_[i].scaled(f.value(i));
    return r;
}

std::optional<std::string> FiniteRepresentation::violation() const {
    try {
        ProjectionValuedMeasure::make(algebra_, space_, atom_operators_);
    } catch (const ValidationError& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

bool FiniteRepresentation::operator==(const FiniteRepresentation& o) const {
    if (*algebra_ != *o.algebra_ || *space_ != *o.space_) return false;
    for (std::size_t i = 0; i < atom_operators_.size(); ++i)
        if (atom_operators_[i] != o.atom_operators_[i]) return false;
    return true;
}

FiniteRepresentation rep_from_pvm(const ProjectionValuedMeasure& p) {
    std::vector<Operator> table;
    table.reserve(p.algebra()->atom_count());
    for (std::size_t i = 0; i < p.algebra()->atom_count(); ++i)
        table.push_back(p.atom_projector(i));
    return FiniteRepresentation(p.algebra(), p.space(), std::move(table));
}

ProjectionValuedMeasure pvm_from_rep(const FiniteRepresentation& t) {
    std::vector<Operator> projectors;
    projectors.reserve(t.algebra()->atom_count());
    for (std::size_t i = 0; i < t.algebra()->atom_count(); ++i)
        projectors.push_back(t.atom_operator(i));
    // make() validates multiplicativity/unitality and names the witness atoms
    return ProjectionValuedMeasure::make(t.algebra(), t.space(), std::move(projectors));
}

bool faithfulness(const FiniteRepresentation& t) {
    // side one: the kernel, directly. T_f = 0 forces f = 0 off null atoms, so
    // ker T is nontrivial iff some atom operator vanishes.
    bool kernel_trivial = true;
    for (std::size_t i = 0; i < t.algebra()->atom_count(); ++i)
        if (t.atom_operator(i).is_zero()) kernel_trivial = false;

    // side two: full support of the induced measure.
    bool full_support = pvm_from_rep(t).support().is_full();

    if (kernel_trivial != full_support)
        throw Error("faithfulness: kernel and support computations disagree (bug)");
    return kernel_trivial;
}

StepFunction SpectralDecomposition::identity_function() const {
    return StepFunction(pvm.algebra(), support);
}

Operator SpectralDecomposition::reconstruct() const {
    return spectral_integral(identity_function(), pvm);
}

SpectralDecomposition spectral_decompose_diagonal(const Operator& b) {
    if (!b.is_diagonal())
        throw InputError(
            "spectral decomposition supports diagonal operators; conjugate through "
            "a basis first");
    std::vector<PadicScalar> diag = b.diagonal_entries();

    // distinct values at working precision, deterministic order
    std::vector<PadicScalar> values;
    for (const auto& d : diag) {
        bool seen = false;
        for (const auto& v : values)
            if (v == d) seen = true;
        if (!seen) values.push_back(d);
    }
    std::sort(values.begin(), values.end(), PadicScalar::canonical_less);

    std::vector<std::string> labels;
    labels.reserve(values.size());
    for (const auto& v : values) labels.push_back(v.label());
    AlgebraPtr algebra = ClopenAlgebra::finite(std::move(labels));

    std::vector<Operator> projectors;
    projectors.reserve(values.size());
    for (const auto& v : values) {
        std::vector<PadicScalar> sel(b.dim(), b.space()->scalar_zero());
        for (std::size_t i = 0; i < diag.size(); ++i)
            if (diag[i] == v) sel[i] = b.space()->scalar_one();
        projectors.push_back(Operator::diagonal(b.space(), std::move(sel)));
    }
    return SpectralDecomposition{
        std::move(values),
        ProjectionValuedMeasure::make(std::move(algebra), b.space(), std::move(projectors))};
}

SpectralDecomposition spectral_decompose_in_basis(const Operator& b,
                                                  const Operator& basis) {
    require_same_space(b.space(), basis.space());
    auto inv = try_inverse(basis);
    if (!inv) throw InputError("basis is singular");
    Operator diag = inv->compose(b).compose(basis);
    SpectralDecomposition plain = spectral_decompose_diagonal(diag);

    std::vector<Operator> conjugated;
    for (std::size_t i = 0; i < plain.pvm.algebra()->atom_count(); ++i)
        conjugated.push_back(basis.compose(plain.pvm.atom_projector(i)).compose(*inv));
    return SpectralDecomposition{
        plain.support, ProjectionValuedMeasure::make(plain.pvm.algebra(), b.space(),
                                                     std::move(conjugated))};
}

bool eigenrange_check(const Operator& b, const SpectralDecomposition& dec,
                      const ClopenSet& omega) {
    require_same_algebra(dec.pvm.algebra(), omega.algebra());
    for (auto atom : omega.atoms()) {
        const PadicScalar& lambda = dec.support[atom];
        const Operator& proj = dec.pvm.atom_projector(atom);
        // b acts as lambda on the range of the atom projector
        if (b.compose(proj) != proj.scaled(lambda)) return false;
        // no lambda-eigenvector survives in the complementary range: on it,
        // b - lambda restricts to an invertible map (its kernel there is 0)
        Operator rest = Operator::identity(b.space()) - proj;
        Operator shifted = (b - Operator::scalar(b.space(), lambda)).compose(rest);
        // shifted + proj is invertible iff ker(b - lambda) stays inside range(proj)
        if (!try_inverse(shifted + proj)) return false;
    }
    return true;
}

StepFunction SimultaneousDecomposition::coordinate_function(std::size_t k) const {
    std::vector<PadicScalar> values;
    values.reserve(points.size());
    for (const auto& tuple : points) values.push_back(tuple.at(k));
    return StepFunction(pvm.algebra(), std::move(values));
}

SimultaneousDecomposition simultaneous_decompose(const std::vector<Operator>& family) {
    if (family.empty()) throw InputError("empty family");
    const SpacePtr& sp = family[0].space();
    for (const auto& b : family) require_same_space(sp, b.space());
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
            if (family[a].compose(family[b]) != family[b].compose(family[a]))
                throw InputError("operators " + std::to_string(a) + " and " +
                                 std::to_string(b) + " do not commute");
    for (std::size_t a = 0; a < family.size(); ++a)
        if (!family[a].is_diagonal())
            throw InputError("operator " + std::to_string(a) +
                             " is not diagonal; conjugate the family first");

    const std::size_t n = sp->dim();
    std::vector<std::vector<PadicScalar>> columns;  // joint tuple per coordinate
    columns.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PadicScalar> tuple;
        tuple.reserve(family.size());
        for (const auto& b : family) tuple.push_back(b.entry(i, i));
        columns.push_back(std::move(tuple));
    }

    auto tuple_eq = [](const std::vector<PadicScalar>& a,
                       const std::vector<PadicScalar>& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return false;
        return true;
    };
    auto tuple_less = [](const std::vector<PadicScalar>& a,
                         const std::vector<PadicScalar>& b) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (PadicScalar::canonical_less(a[k], b[k])) return true;
            if (PadicScalar::canonical_less(b[k], a[k])) return false;
        }
        return false;
    };

    std::vector<std::vector<PadicScalar>> points;
    for (const auto& tuple : columns) {
        bool seen = false;
        for (const auto& q : points)
            if (tuple_eq(q, tuple)) seen = true;
        if (!seen) points.push_back(tuple);
    }
    std::sort(points.begin(), points.end(), tuple_less);

    std::vector<std::string> labels;
    for (const auto& tuple : points) {
        std::string l = "(";
        for (std::size_t k = 0; k < tuple.size(); ++k) {
            if (k) l += ",";
            l += tuple[k].label();
        }
        l += ")";
        labels.push_back(std::move(l));
    }
    AlgebraPtr algebra = ClopenAlgebra::finite(std::move(labels));

    std::vector<Operator> projectors;
    for (const auto& tuple : points) {
        std::vector<PadicScalar> sel(n, sp->scalar_zero());
        for (std::size_t i = 0; i < n; ++i)
            if (tuple_eq(columns[i], tuple)) sel[i] = sp->scalar_one();
        projectors.push_back(Operator::diagonal(sp, std::move(sel)));
    }
    return SimultaneousDecomposition{
        std::move(points),
        ProjectionValuedMeasure::make(std::move(algebra), sp, std::move(projectors))};
}

MultiplicationRep multiplication_rep(const KMeasure& mu) {
    const AlgebraPtr& algebra = mu.algebra();
    std::vector<std::size_t> kept, dropped;
    for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
        if (mu.atom_value(i).is_zero()) {
            dropped.push_back(i);
        } else {
            kept.push_back(i);
        }
    }
    if (kept.empty())
        throw InputError("the measure vanishes on every atom; the function space is empty");

    // ||e_x|| must equal N_mu(x) = |mu(x)|, so omega_x = mu(x)^2
    std::vector<PadicScalar> omega;
    omega.reserve(kept.size());
    for (auto i : kept) omega.push_back(mu.atom_value(i) * mu.atom_value(i));
    const auto& probe = mu.atom_value(kept[0]);
    SpacePtr h = WeightedSpace::make(probe.prime(), probe.precision(), std::move(omega));

    // multiplication by Ch_atom = coordinate projector on the kept positions
    std::vector<Operator> table;
    table.reserve(algebra->atom_count());
    for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
        std::vector<PadicScalar> sel(kept.size(), h->scalar_zero());
        for (std::size_t pos = 0; pos < kept.size(); ++pos)
            if (kept[pos] == i) sel[pos] = h->scalar_one();
        table.push_back(Operator::diagonal(h, std::move(sel)));
    }
    // dropping null atoms keeps the table unital: the kept coordinates cover h
    FiniteRepresentation rep(algebra, h, std::move(table));
    if (auto why = rep.violation())
        throw Error("multiplication table failed validation (bug): " + *why);

    return MultiplicationRep{algebra, mu, std::move(kept), std::move(dropped), h,
                             std::move(rep)};
}

std::vector<PadicScalar> diagonal_part(const Operator& u) {
    return u.diagonal_entries();
}

}  // namespace padspec
