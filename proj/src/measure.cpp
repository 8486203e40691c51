#include "padspec/measure.hpp"

#include <algorithm>
#include <set>

namespace padspec {

AlgebraPtr ClopenAlgebra::finite(std::vector<std::string> atom_labels) {
    if (atom_labels.empty()) throw InputError("algebra needs at least one atom");
    std::set<std::string> seen(atom_labels.begin(), atom_labels.end());
    if (seen.size() != atom_labels.size())
        throw InputError("duplicate atom labels");
    return AlgebraPtr(new ClopenAlgebra(Kind::finite, std::move(atom_labels), 0, 0));
}

AlgebraPtr ClopenAlgebra::zp(std::int64_t p, std::int32_t resolution) {
    if (p < 2) throw InputError("zp algebra needs a prime p >= 2");
    if (resolution < 1) throw InputError("resolution must be positive");
    std::int64_t count = 1;
    for (std::int32_t i = 0; i < resolution; ++i) {
        count *= p;
        if (count > 10000)
            throw InputError("resolution too fine for exhaustive desk-scale checks");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(count));
    for (std::int64_t r = 0; r < count; ++r) labels.push_back(std::to_string(r));
    return AlgebraPtr(new ClopenAlgebra(Kind::zp, std::move(labels), p, resolution));
}

std::optional<std::size_t> ClopenAlgebra::atom_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool ClopenAlgebra::operator==(const ClopenAlgebra& o) const {
    return kind_ == o.kind_ && labels_ == o.labels_ && p_ == o.p_ &&
           resolution_ == o.resolution_;
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) throw InputError("algebra mismatch");
}

ClopenSet::ClopenSet(AlgebraPtr algebra, IndexSubset atoms)
    : algebra_(std::move(algebra)), atoms_(normalize_subset(std::move(atoms))) {
    require_subset_range(atoms_, algebra_->atom_count());
}

ClopenSet ClopenSet::full(AlgebraPtr algebra) {
    IndexSubset all(algebra->atom_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return ClopenSet(std::move(algebra), std::move(all));
}

ClopenSet ClopenSet::of_labels(const AlgebraPtr& algebra,
                               const std::vector<std::string>& labels) {
    IndexSubset atoms;
    for (const auto& l : labels) {
        auto idx = algebra->atom_index(l);
        if (!idx) throw InputError("unknown atom label: " + l);
        atoms.push_back(*idx);
    }
    return ClopenSet(algebra, std::move(atoms));
}

ClopenSet ClopenSet::set_union(const ClopenSet& o) const {
    require_same_algebra(algebra_, o.algebra_);
    return ClopenSet(algebra_, subset_union(atoms_, o.atoms_));
}

ClopenSet ClopenSet::set_intersect(const ClopenSet& o) const {
    require_same_algebra(algebra_, o.algebra_);
    return ClopenSet(algebra_, subset_intersect(atoms_, o.atoms_));
}

ClopenSet ClopenSet::set_complement() const {
    return ClopenSet(algebra_, subset_complement(atoms_, algebra_->atom_count()));
}

std::vector<std::string> ClopenSet::labels() const {
    std::vector<std::string> out;
    out.reserve(atoms_.size());
    for (auto i : atoms_) out.push_back(algebra_->atom_label(i));
    return out;
}

bool ClopenSet::operator==(const ClopenSet& o) const {
    return *algebra_ == *o.algebra_ && atoms_ == o.atoms_;
}

ProjectionValuedMeasure ProjectionValuedMeasure::make(
    AlgebraPtr algebra, SpacePtr space, std::vector<Operator> atom_projectors) {
    if (atom_projectors.size() != algebra->atom_count())
        throw InputError("one projector per atom required");
    for (const auto& q : atom_projectors) require_same_space(space, q.space());

    std::string violations;
    auto complain = [&violations](const std::string& msg) {
        if (!violations.empty()) violations += "; ";
        violations += msg;
    };
    for (std::size_t i = 0; i < atom_projectors.size(); ++i) {
        if (atom_projectors[i].compose(atom_projectors[i]) != atom_projectors[i])
            complain("atom '" + algebra->atom_label(i) + "' image is not idempotent");
    }
    for (std::size_t i = 0; i < atom_projectors.size(); ++i)
        for (std::size_t j = i + 1; j < atom_projectors.size(); ++j) {
            if (!atom_projectors[i].compose(atom_projectors[j]).is_zero() ||
                !atom_projectors[j].compose(atom_projectors[i]).is_zero())
                complain("atoms '" + algebra->atom_label(i) + "' and '" +
                         algebra->atom_label(j) + "' are not orthogonal");
        }
    Operator total = Operator::zero(space);
    for (const auto& q : atom_projectors) total = total + q;
    if (total != Operator::identity(space))
        complain("atom projectors do not sum to the identity");
    if (!violations.empty()) throw ValidationError(violations);

    return ProjectionValuedMeasure(std::move(algebra), std::move(space),
                                   std::move(atom_projectors));
}

ProjectionValuedMeasure ProjectionValuedMeasure::make_labeled(
    AlgebraPtr algebra, SpacePtr space,
    const std::vector<std::pair<std::string, Operator>>& projectors) {
    if (projectors.size() != algebra->atom_count())
        throw InputError("one projector per atom required");
    std::vector<Operator> ordered;
    ordered.reserve(projectors.size());
    for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
        const Operator* found = nullptr;
        for (const auto& [label, op] : projectors)
            if (label == algebra->atom_label(i)) found = &op;
        if (!found)
            throw InputError("missing projector for atom '" + algebra->atom_label(i) + "'");
        ordered.push_back(*found);
    }
    return make(std::move(algebra), std::move(space), std::move(ordered));
}

Operator ProjectionValuedMeasure::eval(const ClopenSet& a) const {
    require_same_algebra(algebra_, a.algebra());
    Operator r = Operator::zero(space_);
    for (auto i : a.atoms()) r = r + atom_projectors_[i];
    return r;
}

ClopenSet ProjectionValuedMeasure::support() const {
    IndexSubset atoms;
    for (std::size_t i = 0; i < atom_projectors_.size(); ++i)
        if (!atom_projectors_[i].is_zero()) atoms.push_back(i);
    return ClopenSet(algebra_, std::move(atoms));
}

bool ProjectionValuedMeasure::operator==(const ProjectionValuedMeasure& o) const {
    if (*algebra_ != *o.algebra_ || *space_ != *o.space_) return false;
    for (std::size_t i = 0; i < atom_projectors_.size(); ++i)
        if (atom_projectors_[i] != o.atom_projectors_[i]) return false;
    return true;
}

StepFunction::StepFunction(AlgebraPtr algebra,
                           const std::vector<std::pair<ClopenSet, PadicScalar>>& pieces,
                           std::int64_t p, std::int32_t precision)
    : algebra_(std::move(algebra)),
      atom_values_(algebra_->atom_count(), PadicScalar::zero(p, precision)) {
    IndexSubset covered;
    for (const auto& [set, value] : pieces) {
        require_same_algebra(algebra_, set.algebra());
        if (!subsets_disjoint(covered, set.atoms()))
            throw InputError("step function pieces must be pairwise disjoint");
        covered = subset_union(covered, set.atoms());
        for (auto i : set.atoms()) atom_values_[i] = value;
    }
}

StepFunction::StepFunction(AlgebraPtr algebra, std::vector<PadicScalar> atom_values)
    : algebra_(std::move(algebra)), atom_values_(std::move(atom_values)) {
    if (atom_values_.size() != algebra_->atom_count())
        throw InputError("one value per atom required");
}

StepFunction StepFunction::characteristic(const ClopenSet& set, std::int64_t p,
                                          std::int32_t precision) {
    std::vector<PadicScalar> values(set.algebra()->atom_count(),
                                    PadicScalar::zero(p, precision));
    for (auto i : set.atoms()) values[i] = PadicScalar::one(p, precision);
    return StepFunction(set.algebra(), std::move(values));
}

StepFunction StepFunction::zero(AlgebraPtr algebra, std::int64_t p,
                                std::int32_t precision) {
    std::vector<PadicScalar> values(algebra->atom_count(), PadicScalar::zero(p, precision));
    return StepFunction(std::move(algebra), std::move(values));
}

StepFunction StepFunction::constant(AlgebraPtr algebra, const PadicScalar& c) {
    std::vector<PadicScalar> values(algebra->atom_count(), c);
    return StepFunction(std::move(algebra), std::move(values));
}

StepFunction StepFunction::operator+(const StepFunction& o) const {
    require_same_algebra(algebra_, o.algebra_);
    std::vector<PadicScalar> values;
    values.reserve(atom_values_.size());
    for (std::size_t i = 0; i < atom_values_.size(); ++i)
        values.push_back(atom_values_[i] + o.atom_values_[i]);
    return StepFunction(algebra_, std::move(values));
}

StepFunction StepFunction::operator-(const StepFunction& o) const {
    require_same_algebra(algebra_, o.algebra_);
    std::vector<PadicScalar> values;
    values.reserve(atom_values_.size());
    for (std::size_t i = 0; i < atom_values_.size(); ++i)
        values.push_back(atom_values_[i] - o.atom_values_[i]);
    return StepFunction(algebra_, std::move(values));
}

StepFunction StepFunction::operator*(const StepFunction& o) const {
    require_same_algebra(algebra_, o.algebra_);
    std::vector<PadicScalar> values;
    values.reserve(atom_values_.size());
    for (std::size_t i = 0; i < atom_values_.size(); ++i)
        values.push_back(atom_values_[i] * o.atom_values_[i]);
    return StepFunction(algebra_, std::move(values));
}

StepFunction StepFunction::scaled(const PadicScalar& c) const {
    std::vector<PadicScalar> values;
    values.reserve(atom_values_.size());
    for (const auto& v : atom_values_) values.push_back(v * c);
    return StepFunction(algebra_, std::move(values));
}

LogNorm StepFunction::sup_norm() const {
    LogNorm n = LogNorm::zero();
    for (const auto& v : atom_values_) n = LogNorm::max(n, v.abs());
    return n;
}

LogNorm StepFunction::ess_sup_norm(const ProjectionValuedMeasure& p) const {
    require_same_algebra(algebra_, p.algebra());
    LogNorm n = LogNorm::zero();
    for (std::size_t i = 0; i < atom_values_.size(); ++i)
        if (!p.atom_projector(i).is_zero()) n = LogNorm::max(n, atom_values_[i].abs());
    return n;
}

bool StepFunction::equal_essentially(const StepFunction& o,
                                     const ProjectionValuedMeasure& p) const {
    require_same_algebra(algebra_, o.algebra_);
    require_same_algebra(algebra_, p.algebra());
    for (std::size_t i = 0; i < atom_values_.size(); ++i)
        if (!p.atom_projector(i).is_zero() && atom_values_[i] != o.atom_values_[i])
            return false;
    return true;
}

bool StepFunction::operator==(const StepFunction& o) const {
    if (*algebra_ != *o.algebra_) return false;
    for (std::size_t i = 0; i < atom_values_.size(); ++i)
        if (atom_values_[i] != o.atom_values_[i]) return false;
    return true;
}

Operator spectral_integral(const StepFunction& f, const ProjectionValuedMeasure& p) {
    require_same_algebra(f.algebra(), p.algebra());
    Operator r = Operator::zero(p.space());
    for (std::size_t i = 0; i < f.algebra()->atom_count(); ++i)
        r = r + p.atom_projector(i).scaled(f.value(i));
    return r;
}

KMeasure::KMeasure(AlgebraPtr algebra, std::vector<PadicScalar> atom_values)
    : algebra_(std::move(algebra)), atom_values_(std::move(atom_values)) {
    if (atom_values_.size() != algebra_->atom_count())
        throw InputError("one value per atom required");
}

PadicScalar KMeasure::eval(const ClopenSet& a) const {
    require_same_algebra(algebra_, a.algebra());
    if (a.is_empty() || atom_values_.empty())
        throw InputError("cannot evaluate on an algebra without atoms");
    PadicScalar s = PadicScalar::zero(atom_values_[0].prime(), atom_values_[0].precision());
    for (auto i : a.atoms()) s = s + atom_values_[i];
    return s;
}

bool KMeasure::is_zero() const {
    return std::all_of(atom_values_.begin(), atom_values_.end(),
                       [](const PadicScalar& v) { return v.is_zero(); });
}

LogNorm measure_norm(const KMeasure& mu, const ClopenSet& a) {
    require_same_algebra(mu.algebra(), a.algebra());
    LogNorm n = LogNorm::zero();
    for (auto i : a.atoms()) n = LogNorm::max(n, mu.atom_value(i).abs());
    return n;
}

LogNorm n_mu_weight(const KMeasure& mu, std::size_t atom) {
    if (atom >= mu.algebra()->atom_count()) throw InputError("atom index out of range");
    return mu.atom_value(atom).abs();
}

KMeasure scalar_measure(const ProjectionValuedMeasure& p, const Vector& xi,
                        std::size_t eta_index) {
    require_same_space(p.space(), xi.space());
    if (eta_index >= p.space()->dim()) throw InputError("basis index out of range");
    std::vector<PadicScalar> values;
    values.reserve(p.algebra()->atom_count());
    for (std::size_t i = 0; i < p.algebra()->atom_count(); ++i)
        values.push_back(p.atom_projector(i).apply(xi)[eta_index]);
    return KMeasure(p.algebra(), std::move(values));
}

KMeasure scalar_measure(const ProjectionValuedMeasure& p, const Vector& xi,
                        const Vector& eta) {
    require_same_space(p.space(), xi.space());
    require_same_space(p.space(), eta.space());
    std::vector<PadicScalar> values;
    values.reserve(p.algebra()->atom_count());
    for (std::size_t i = 0; i < p.algebra()->atom_count(); ++i) {
        Vector im = p.atom_projector(i).apply(xi);
        PadicScalar s = p.space()->scalar_zero();
        for (std::size_t k = 0; k < eta.dim(); ++k) s = s + eta[k] * im[k];
        values.push_back(std::move(s));
    }
    return KMeasure(p.algebra(), std::move(values));
}

}  // namespace padspec
