#include "padspec/operator.hpp"

#include <algorithm>

#include "padspec/rng.hpp"

namespace padspec {

Operator::Operator(SpacePtr space, std::vector<PadicScalar> entries_row_major)
    : space_(std::move(space)), n_(space_->dim()), entries_(std::move(entries_row_major)) {
    if (entries_.size() != n_ * n_)
        throw InputError("entry count does not match space dimension");
    for (const auto& e : entries_)
        if (e.prime() != space_->prime()) throw InputError("entry prime mismatch");
}

Operator Operator::zero(SpacePtr space) {
    std::vector<PadicScalar> e(space->dim() * space->dim(), space->scalar_zero());
    return Operator(std::move(space), std::move(e));
}

Operator Operator::identity(SpacePtr space) {
    Operator u = zero(space);
    for (std::size_t i = 0; i < u.n_; ++i) u.entries_[i * u.n_ + i] = space->scalar_one();
    return u;
}

Operator Operator::diagonal(SpacePtr space, std::vector<PadicScalar> diag) {
    if (diag.size() != space->dim()) throw InputError("diagonal length mismatch");
    Operator u = zero(space);
    for (std::size_t i = 0; i < u.n_; ++i) u.entries_[i * u.n_ + i] = std::move(diag[i]);
    return u;
}

Operator Operator::scalar(SpacePtr space, const PadicScalar& c) {
    std::vector<PadicScalar> diag(space->dim(), c);
    return diagonal(std::move(space), std::move(diag));
}

Vector Operator::apply(const Vector& x) const {
    require_same_space(space_, x.space());
    std::vector<PadicScalar> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        PadicScalar s = space_->scalar_zero();
        for (std::size_t j = 0; j < n_; ++j) s = s + entry(i, j) * x[j];
        out.push_back(std::move(s));
    }
    return Vector(space_, std::move(out));
}

Operator Operator::compose(const Operator& o) const {
    require_same_space(space_, o.space_);
    Operator r = zero(space_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            PadicScalar s = space_->scalar_zero();
            for (std::size_t k = 0; k < n_; ++k) s = s + entry(i, k) * o.entry(k, j);
            r.entries_[i * n_ + j] = std::move(s);
        }
    return r;
}

Operator Operator::operator+(const Operator& o) const {
    require_same_space(space_, o.space_);
    Operator r = *this;
    for (std::size_t t = 0; t < entries_.size(); ++t)
        r.entries_[t] = entries_[t] + o.entries_[t];
    return r;
}

Operator Operator::operator-(const Operator& o) const {
    require_same_space(space_, o.space_);
    Operator r = *this;
    for (std::size_t t = 0; t < entries_.size(); ++t)
        r.entries_[t] = entries_[t] - o.entries_[t];
    return r;
}

Operator Operator::scaled(const PadicScalar& c) const {
    Operator r = *this;
    for (auto& e : r.entries_) e = e * c;
    return r;
}

Operator Operator::transpose() const {
    Operator r = zero(space_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.entries_[i * n_ + j] = entry(j, i);
    return r;
}

Operator Operator::pow(std::size_t k) const {
    Operator r = identity(space_);
    for (std::size_t t = 0; t < k; ++t) r = r.compose(*this);
    return r;
}

bool Operator::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const PadicScalar& e) { return e.is_zero(); });
}

bool Operator::is_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && !entry(i, j).is_zero()) return false;
    return true;
}

std::vector<PadicScalar> Operator::diagonal_entries() const {
    std::vector<PadicScalar> d;
    d.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) d.push_back(entry(i, i));
    return d;
}

bool Operator::operator==(const Operator& o) const {
    if (*space_ != *o.space_) return false;
    for (std::size_t t = 0; t < entries_.size(); ++t)
        if (entries_[t] != o.entries_[t]) return false;
    return true;
}

LogNorm op_norm(const Operator& u) {
    LogNorm n = LogNorm::zero();
    const auto& sp = *u.space();
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < u.dim(); ++j) {
            const auto& e = u.entry(i, j);
            if (e.is_zero()) continue;
            n = LogNorm::max(n, e.abs() * sp.basis_norm(i).div(sp.basis_norm(j)));
        }
    return n;
}

LogNorm op_norm_pi(const Operator& u, const PiStructure& ps) {
    require_same_space(u.space(), ps.space());
    std::int64_t vp = ps.pi().valuation();
    LogNorm n = LogNorm::zero();
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < u.dim(); ++j) {
            const auto& e = u.entry(i, j);
            if (e.is_zero()) continue;
            n = LogNorm::max(n, LogNorm::from_exponent(
                                    e.valuation() + (ps.exponent(i) - ps.exponent(j)) * vp));
        }
    return n;
}

Operator adjoint_omega(const Operator& u) {
    const auto& sp = u.space();
    std::vector<PadicScalar> entries;
    entries.reserve(u.dim() * u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        PadicScalar wi_inv = sp->omega(i).inv();
        for (std::size_t j = 0; j < u.dim(); ++j)
            entries.push_back(wi_inv * sp->omega(j) * u.entry(j, i));
    }
    return Operator(sp, std::move(entries));
}

Operator adjoint_pi(const Operator& u, const PiStructure& ps) {
    require_same_space(u.space(), ps.space());
    // f_pi has weights pi^(2 n_i), so the adjoint entry carries the doubled
    // exponent; that is what makes f_pi(u x, y) = f_pi(x, u* y) an identity.
    std::vector<PadicScalar> entries;
    entries.reserve(u.dim() * u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < u.dim(); ++j)
            entries.push_back(ps.pi_power(2 * (ps.exponent(j) - ps.exponent(i))) *
                              u.entry(j, i));
    return Operator(u.space(), std::move(entries));
}

bool is_self_adjoint(const Operator& u) {
    const auto& sp = u.space();
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            // alpha_ji = omega_i omega_j^(-1) alpha_ij
            if (u.entry(j, i) != sp->omega(i) * sp->omega(j).inv() * u.entry(i, j))
                return false;
        }
    return true;
}

bool is_self_adjoint_pi(const Operator& u, const PiStructure& ps) {
    require_same_space(u.space(), ps.space());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (ps.pi_power(2 * ps.exponent(i)) * u.entry(i, j) !=
                ps.pi_power(2 * ps.exponent(j)) * u.entry(j, i))
                return false;
        }
    return true;
}

std::optional<Operator> try_inverse(const Operator& u) {
    const std::size_t n = u.dim();
    const SpacePtr& sp = u.space();
    // augmented elimination [A | I], exact field arithmetic
    std::vector<std::vector<PadicScalar>> a(n), inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i].push_back(u.entry(i, j));
            inv[i].push_back(i == j ? sp->scalar_one() : sp->scalar_zero());
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        PadicScalar d = a[col][col].inv();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * d;
            inv[col][j] = inv[col][j] * d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            PadicScalar f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] = a[row][j] - f * a[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    std::vector<PadicScalar> flat;
    flat.reserve(n * n);
    for (auto& row : inv)
        for (auto& e : row) flat.push_back(std::move(e));
    return Operator(sp, std::move(flat));
}

namespace {

PadicScalar random_scalar(Rng& rng, const SpacePtr& sp, std::int64_t vmin,
                          std::int64_t vmax) {
    std::int64_t p = sp->prime();
    std::int64_t u = rng.uniform(1, p - 1) + p * rng.uniform(0, p * p - 1);
    return PadicScalar::from_unit(p, sp->precision(), rng.uniform(vmin, vmax), u);
}

}  // namespace

AlgebraAxiomReport check_algebra_axioms(const std::vector<Operator>& generators,
                                        std::uint64_t samples, std::uint64_t seed) {
    if (generators.empty()) throw InputError("need at least one generator");
    const SpacePtr& sp = generators[0].space();
    for (const auto& g : generators) require_same_space(sp, g.space());

    std::vector<Operator> closure = generators;
    for (const auto& g : generators) closure.push_back(g.transpose());

    AlgebraAxiomReport report;
    report.seed = seed;
    report.samples = samples;
    Rng rng(seed);

    auto random_word = [&]() {
        Operator w = closure[static_cast<std::size_t>(rng.uniform(
            0, static_cast<std::int64_t>(closure.size()) - 1))];
        std::int64_t len = rng.uniform(0, 2);
        for (std::int64_t t = 0; t < len; ++t)
            w = w.compose(closure[static_cast<std::size_t>(rng.uniform(
                0, static_cast<std::int64_t>(closure.size()) - 1))]);
        return w;
    };
    auto random_element = [&]() {
        Operator a = random_word().scaled(random_scalar(rng, sp, -1, 1));
        std::int64_t extra = rng.uniform(0, 1);
        for (std::int64_t t = 0; t < extra; ++t)
            a = a + random_word().scaled(random_scalar(rng, sp, -1, 1));
        return a;
    };

    for (std::uint64_t s = 0; s < samples; ++s) {
        // generators first, then random words and combinations
        Operator a = s < generators.size() ? generators[s] : random_element();

        if (report.t_holds) {
            Operator b = s < generators.size() ? generators[0] : random_element();
            PadicScalar lam = random_scalar(rng, sp, -1, 1);
            bool ok = (a + b).transpose() == a.transpose() + b.transpose() &&
                      a.scaled(lam).transpose() == a.transpose().scaled(lam) &&
                      a.compose(b).transpose() == b.transpose().compose(a.transpose()) &&
                      a.transpose().transpose() == a;
            if (!ok) {
                report.t_holds = false;
                report.t_witness = a;
            }
        }

        LogNorm ata = op_norm(a.transpose().compose(a));
        if (report.e_holds && ata != op_norm(a).pow(2)) {
            report.e_holds = false;
            report.e_witness = a;
        }
        if (report.s_holds && ata != op_norm(a.compose(a))) {
            report.s_holds = false;
            report.s_witness = a;
        }
        if (!report.t_holds && !report.e_holds && !report.s_holds) break;
    }
    return report;
}

}  // namespace padspec
