#include "padspec/sampling.hpp"

namespace padspec::sampling {

PadicScalar random_nonzero(Rng& rng, std::int64_t p, std::int32_t precision,
                           std::int64_t vmin, std::int64_t vmax) {
    std::int64_t unit = rng.uniform(1, p - 1) + p * rng.uniform(0, p * p - 1);
    return PadicScalar::from_unit(p, precision, rng.uniform(vmin, vmax), unit);
}

PadicScalar random_scalar(Rng& rng, std::int64_t p, std::int32_t precision,
                          std::int64_t vmin, std::int64_t vmax, double zero_prob) {
    if (rng.chance(zero_prob)) return PadicScalar::zero(p, precision);
    return random_nonzero(rng, p, precision, vmin, vmax);
}

PadicScalar random_unit(Rng& rng, std::int64_t p, std::int32_t precision) {
    std::int64_t unit = rng.uniform(1, p - 1) + p * rng.uniform(0, p * p - 1);
    return PadicScalar::from_unit(p, precision, 0, unit);
}

PadicScalar random_pi(Rng& rng, std::int64_t p, std::int32_t precision) {
    std::int64_t unit = rng.uniform(1, p - 1);
    return PadicScalar::from_unit(p, precision, rng.uniform(1, 2), unit);
}

SpacePtr random_space(Rng& rng, std::int64_t p, std::int32_t precision,
                      std::size_t dim_min, std::size_t dim_max) {
    std::size_t dim = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(dim_min), static_cast<std::int64_t>(dim_max)));
    std::vector<PadicScalar> omega;
    omega.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
        omega.push_back(random_nonzero(rng, p, precision, -2, 2));
    return WeightedSpace::make(p, precision, std::move(omega));
}

Vector random_vector(Rng& rng, const SpacePtr& space) {
    std::vector<PadicScalar> coords;
    coords.reserve(space->dim());
    for (std::size_t i = 0; i < space->dim(); ++i)
        coords.push_back(random_scalar(rng, space->prime(), space->precision()));
    return Vector(space, std::move(coords));
}

Operator random_operator(Rng& rng, const SpacePtr& space) {
    std::vector<PadicScalar> entries;
    entries.reserve(space->dim() * space->dim());
    for (std::size_t t = 0; t < space->dim() * space->dim(); ++t)
        entries.push_back(random_scalar(rng, space->prime(), space->precision(), -2, 2, 0.3));
    return Operator(space, std::move(entries));
}

Operator random_diagonal(Rng& rng, const SpacePtr& space, bool force_repeats) {
    std::size_t n = space->dim();
    std::vector<PadicScalar> pool;
    std::size_t pool_size = force_repeats && n > 1
                                ? static_cast<std::size_t>(rng.uniform(
                                      1, static_cast<std::int64_t>((n + 1) / 2)))
                                : n;
    for (std::size_t i = 0; i < pool_size; ++i)
        pool.push_back(random_scalar(rng, space->prime(), space->precision()));
    std::vector<PadicScalar> diag;
    diag.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        diag.push_back(pool[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))]);
    return Operator::diagonal(space, std::move(diag));
}

std::pair<Operator, Operator> random_unimodular(Rng& rng, const SpacePtr& space) {
    std::size_t n = space->dim();
    auto small_int = [&]() {
        return PadicScalar::from_integer(space->prime(), space->precision(),
                                         rng.uniform(0, space->prime() * 2));
    };
    // unit lower and unit upper triangular integral factors
    Operator lower = Operator::identity(space);
    Operator upper = Operator::identity(space);
    std::vector<PadicScalar> le = lower.entries(), ue = upper.entries();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) le[i * n + j] = small_int();
            if (i < j) ue[i * n + j] = small_int();
        }
    lower = Operator(space, std::move(le));
    upper = Operator(space, std::move(ue));
    Operator s = lower.compose(upper);
    auto inv = try_inverse(s);
    if (!inv) throw Error("unimodular sample not invertible (bug)");
    return {std::move(s), std::move(*inv)};
}

BElement random_b_element(Rng& rng, const SpacePtr& space) {
    std::size_t n = space->dim();
    if (n < 2) throw InputError("b-elements need dimension >= 2");
    // random assignment of indices to blocks 1..B, label 0 = complement;
    // index 0 of a shuffled order is forced into the complement
    std::size_t max_blocks = n - 1;
    std::size_t blocks = static_cast<std::size_t>(
        rng.uniform(1, static_cast<std::int64_t>(std::min<std::size_t>(max_blocks, 4))));
    std::vector<IndexSubset> partition(blocks);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1],
                  order[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
    for (std::size_t k = 1; k < n; ++k) {
        std::int64_t slot = rng.uniform(0, static_cast<std::int64_t>(blocks));
        if (slot > 0) partition[static_cast<std::size_t>(slot - 1)].push_back(order[k]);
    }
    // drop empty blocks
    std::vector<IndexSubset> nonempty;
    for (auto& b : partition)
        if (!b.empty()) nonempty.push_back(std::move(b));
    if (nonempty.empty()) nonempty.push_back({order[1 % n]});

    PadicScalar a0 = random_scalar(rng, space->prime(), space->precision());
    std::vector<PadicScalar> alphas;
    for (std::size_t nu = 0; nu < nonempty.size(); ++nu)
        alphas.push_back(random_scalar(rng, space->prime(), space->precision()));
    return BElement(space, std::move(nonempty), std::move(a0), std::move(alphas));
}

AlgebraPtr random_algebra(Rng& rng, std::size_t atoms_min, std::size_t atoms_max) {
    std::size_t count = static_cast<std::size_t>(rng.uniform(
        static_cast<std::int64_t>(atoms_min), static_cast<std::int64_t>(atoms_max)));
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) labels.push_back("a" + std::to_string(i));
    return ClopenAlgebra::finite(std::move(labels));
}

ProjectionValuedMeasure random_pvm(Rng& rng, const AlgebraPtr& algebra,
                                   const SpacePtr& space, bool conjugate) {
    std::size_t k = algebra->atom_count();
    std::size_t n = space->dim();
    // random assignment of coordinates to atoms; empty atoms give P(atom) = 0
    std::vector<std::size_t> owner(n);
    for (std::size_t i = 0; i < n; ++i)
        owner[i] = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1));

    std::vector<Operator> projectors;
    projectors.reserve(k);
    for (std::size_t a = 0; a < k; ++a) {
        std::vector<PadicScalar> sel(n, space->scalar_zero());
        for (std::size_t i = 0; i < n; ++i)
            if (owner[i] == a) sel[i] = space->scalar_one();
        projectors.push_back(Operator::diagonal(space, std::move(sel)));
    }
    if (conjugate) {
        auto [s, s_inv] = random_unimodular(rng, space);
        for (auto& q : projectors) q = s.compose(q).compose(s_inv);
    }
    return ProjectionValuedMeasure::make(algebra, space, std::move(projectors));
}

StepFunction random_step(Rng& rng, const AlgebraPtr& algebra, std::int64_t p,
                         std::int32_t precision) {
    std::vector<PadicScalar> values;
    values.reserve(algebra->atom_count());
    for (std::size_t i = 0; i < algebra->atom_count(); ++i)
        values.push_back(random_scalar(rng, p, precision, -2, 2, 0.25));
    return StepFunction(algebra, std::move(values));
}

KMeasure random_kmeasure(Rng& rng, const AlgebraPtr& algebra, std::int64_t p,
                         std::int32_t precision, double null_prob) {
    std::vector<PadicScalar> values;
    values.reserve(algebra->atom_count());
    for (std::size_t i = 0; i < algebra->atom_count(); ++i)
        values.push_back(random_scalar(rng, p, precision, -2, 2, null_prob));
    return KMeasure(algebra, std::move(values));
}

}  // namespace padspec::sampling
