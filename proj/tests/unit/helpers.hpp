#pragma once

#include "padspec/json_io.hpp"
#include "padspec/rng.hpp"
#include "padspec/sampling.hpp"
#include "padspec/suites.hpp"

namespace testutil {

using namespace padspec;

constexpr std::int64_t kP = 5;
constexpr std::int32_t kPrec = 16;

inline PadicScalar sc(long long v) { return PadicScalar::from_integer(kP, kPrec, v); }
inline PadicScalar zero() { return PadicScalar::zero(kP, kPrec); }

inline SpacePtr orthonormal(std::size_t dim) {
    return WeightedSpace::orthonormal(kP, kPrec, dim);
}

inline SpacePtr weighted(std::vector<long long> omega) {
    std::vector<PadicScalar> w;
    for (auto v : omega) w.push_back(sc(v));
    return WeightedSpace::make(kP, kPrec, std::move(w));
}

inline Vector vec(const SpacePtr& sp, std::vector<long long> coords) {
    std::vector<PadicScalar> c;
    for (auto v : coords) c.push_back(sc(v));
    return Vector(sp, std::move(c));
}

inline Operator op(const SpacePtr& sp, std::vector<long long> entries) {
    std::vector<PadicScalar> e;
    for (auto v : entries) e.push_back(sc(v));
    return Operator(sp, std::move(e));
}

inline Operator diag(const SpacePtr& sp, std::vector<long long> d) {
    std::vector<PadicScalar> e;
    for (auto v : d) e.push_back(sc(v));
    return Operator::diagonal(sp, std::move(e));
}

inline LogNorm norm_exp(std::int64_t e) { return LogNorm::from_exponent(e); }
inline LogNorm norm_half(std::int64_t e2) { return LogNorm::from_half_exponent(e2); }

}  // namespace testutil
