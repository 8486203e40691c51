#include "padspec/projector.hpp"

#include "padspec/rng.hpp"

namespace padspec {

Projector::Projector(SpacePtr space, IndexSubset subset)
    : space_(std::move(space)), subset_(normalize_subset(std::move(subset))) {
    require_subset_range(subset_, space_->dim());
}

Operator Projector::to_operator() const {
    std::vector<PadicScalar> diag(space_->dim(), space_->scalar_zero());
    for (auto i : subset_) diag[i] = space_->scalar_one();
    return Operator::diagonal(space_, std::move(diag));
}

Projector Projector::intersect(const Projector& o) const {
    require_same_space(space_, o.space_);
    return Projector(space_, subset_intersect(subset_, o.subset_));
}

Projector Projector::complement() const {
    return Projector(space_, subset_complement(subset_, space_->dim()));
}

IdempotentCheck is_idempotent_diagonal(const Operator& u) {
    if (!u.is_diagonal()) return {IdempotentCheck::Status::not_diagonal, {}};
    IndexSubset j;
    const PadicScalar one = u.space()->scalar_one();
    for (std::size_t i = 0; i < u.dim(); ++i) {
        const auto& d = u.entry(i, i);
        if (d.is_zero()) continue;
        if (d == one) {
            j.push_back(i);
        } else {
            return {IdempotentCheck::Status::not_idempotent, {}};
        }
    }
    return {IdempotentCheck::Status::idempotent, std::move(j)};
}

BElement::BElement(SpacePtr space, std::vector<IndexSubset> partition,
                   PadicScalar alpha0, std::vector<PadicScalar> alphas)
    : space_(std::move(space)),
      partition_(std::move(partition)),
      alpha0_(std::move(alpha0)),
      alphas_(std::move(alphas)) {
    if (partition_.size() != alphas_.size())
        throw InputError("one coefficient per block required");
    IndexSubset covered;
    for (auto& block : partition_) {
        block = normalize_subset(std::move(block));
        require_subset_range(block, space_->dim());
        if (block.empty()) throw InputError("empty block in partition");
        if (!subsets_disjoint(covered, block))
            throw InputError("partition blocks must be pairwise disjoint");
        covered = subset_union(covered, block);
    }
    if (covered.size() == space_->dim())
        throw InputError(
            "partition must leave a nonempty complement of the blocks");
}

Operator BElement::to_operator() const {
    std::vector<PadicScalar> diag(space_->dim(), alpha0_);
    for (std::size_t nu = 0; nu < partition_.size(); ++nu)
        for (auto i : partition_[nu]) diag[i] = alpha0_ + alphas_[nu];
    return Operator::diagonal(space_, std::move(diag));
}

void BElement::require_same_partition(const BElement& o) const {
    require_same_space(space_, o.space_);
    if (partition_ != o.partition_) throw InputError("partition mismatch");
}

BElement BElement::mul(const BElement& o) const {
    require_same_partition(o);
    // (a0 id + sum a_nu p_nu)(b0 id + sum b_nu p_nu):
    // coefficient of p_nu is a0 b_nu + a_nu b0 + a_nu b_nu
    std::vector<PadicScalar> c;
    c.reserve(alphas_.size());
    for (std::size_t nu = 0; nu < alphas_.size(); ++nu)
        c.push_back(alpha0_ * o.alphas_[nu] + alphas_[nu] * o.alpha0_ +
                    alphas_[nu] * o.alphas_[nu]);
    return BElement(space_, partition_, alpha0_ * o.alpha0_, std::move(c));
}

BElement BElement::add(const BElement& o) const {
    require_same_partition(o);
    std::vector<PadicScalar> c;
    c.reserve(alphas_.size());
    for (std::size_t nu = 0; nu < alphas_.size(); ++nu)
        c.push_back(alphas_[nu] + o.alphas_[nu]);
    return BElement(space_, partition_, alpha0_ + o.alpha0_, std::move(c));
}

BElement BElement::scaled(const PadicScalar& s) const {
    std::vector<PadicScalar> c;
    c.reserve(alphas_.size());
    for (const auto& a : alphas_) c.push_back(a * s);
    return BElement(space_, partition_, alpha0_ * s, std::move(c));
}

bool BElement::operator==(const BElement& o) const {
    if (*space_ != *o.space_ || partition_ != o.partition_) return false;
    if (alpha0_ != o.alpha0_) return false;
    for (std::size_t nu = 0; nu < alphas_.size(); ++nu)
        if (alphas_[nu] != o.alphas_[nu]) return false;
    return true;
}

LogNorm b_norm(const BElement& u) {
    LogNorm by_diagonal = u.alpha0().abs();
    for (std::size_t nu = 0; nu < u.blocks(); ++nu)
        by_diagonal = LogNorm::max(by_diagonal, (u.alpha0() + u.alpha(nu)).abs());

    LogNorm by_family = u.alpha0().abs();
    for (std::size_t nu = 0; nu < u.blocks(); ++nu)
        by_family = LogNorm::max(by_family, u.alpha(nu).abs());

    if (by_diagonal != by_family)
        throw Error("b_norm: the two closed forms disagree (bug)");
    return by_family;
}

namespace {

BElement random_b_element(Rng& rng, const BElement& like) {
    const auto& sp = like.space();
    auto rand_scalar = [&]() {
        if (rng.chance(0.15)) return sp->scalar_zero();
        std::int64_t p = sp->prime();
        std::int64_t u = rng.uniform(1, p - 1) + p * rng.uniform(0, p - 1);
        return PadicScalar::from_unit(p, sp->precision(), rng.uniform(-2, 2), u);
    };
    std::vector<PadicScalar> alphas;
    for (std::size_t nu = 0; nu < like.blocks(); ++nu) alphas.push_back(rand_scalar());
    return BElement(sp, like.partition(), rand_scalar(), std::move(alphas));
}

}  // namespace

std::vector<std::pair<Character, PadicScalar>> characters(const BElement& u,
                                                          std::uint64_t seed,
                                                          std::size_t verify_samples) {
    std::vector<std::pair<Character, PadicScalar>> out;
    out.push_back({Character{Character::kChi0}, u.alpha0()});
    for (std::size_t nu = 0; nu < u.blocks(); ++nu)
        out.push_back({Character{nu}, u.alpha0() + u.alpha(nu)});

    // spot-check multiplicativity and unitality on sampled pairs
    Rng rng(seed);
    const PadicScalar one = u.space()->scalar_one();
    std::vector<PadicScalar> zeros(u.blocks(), u.space()->scalar_zero());
    BElement id(u.space(), u.partition(), one, zeros);
    for (const auto& [chi, _] : out) {
        if (chi.eval(id) != one) throw Error("character not unital (bug)");
        for (std::size_t s = 0; s < verify_samples; ++s) {
            BElement a = random_b_element(rng, u);
            BElement b = random_b_element(rng, u);
            if (chi.eval(a.mul(b)) != chi.eval(a) * chi.eval(b))
                throw Error("character not multiplicative (bug)");
        }
    }
    return out;
}

GelfandTable gelfand(const BElement& u) {
    GelfandTable t;
    t.partition = u.partition();
    for (const auto& [chi, value] : characters(u, 0x5eed, 0)) t.values.push_back(value);
    return t;
}

BElement gelfand_inverse(SpacePtr space, const GelfandTable& table) {
    if (table.values.size() != table.partition.size() + 1)
        throw InputError("table must have one value per character");
    PadicScalar a0 = table.values[0];
    std::vector<PadicScalar> alphas;
    for (std::size_t nu = 0; nu < table.partition.size(); ++nu)
        alphas.push_back(table.values[nu + 1] - a0);
    return BElement(std::move(space), table.partition, std::move(a0), std::move(alphas));
}

PadicScalar DiagonalCharacter::eval(const Operator& u) const {
    if (!u.is_diagonal())
        throw InputError("diagonal character applied to a non-diagonal operator");
    return u.entry(index, index);
}

std::vector<DiagonalCharacter> d_spectrum_finite(const SpacePtr& space,
                                                 std::uint64_t seed,
                                                 std::size_t verify_samples) {
    std::vector<DiagonalCharacter> chars;
    for (std::size_t i = 0; i < space->dim(); ++i) chars.push_back({i});

    Rng rng(seed);
    auto random_diag = [&]() {
        std::vector<PadicScalar> d;
        for (std::size_t i = 0; i < space->dim(); ++i) {
            if (rng.chance(0.2)) {
                d.push_back(space->scalar_zero());
                continue;
            }
            std::int64_t p = space->prime();
            std::int64_t u = rng.uniform(1, p - 1) + p * rng.uniform(0, p - 1);
            d.push_back(PadicScalar::from_unit(p, space->precision(), rng.uniform(-2, 2), u));
        }
        return Operator::diagonal(space, std::move(d));
    };
    for (const auto& chi : chars) {
        for (std::size_t s = 0; s < verify_samples; ++s) {
            Operator a = random_diag();
            Operator b = random_diag();
            if (chi.eval(a.compose(b)) != chi.eval(a) * chi.eval(b))
                throw Error("diagonal character not multiplicative (bug)");
        }
    }
    return chars;
}

}  // namespace padspec
