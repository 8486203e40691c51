#include "padspec/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "padspec/sampling.hpp"

namespace padspec {

namespace {

using sampling::random_algebra;
using sampling::random_b_element;
using sampling::random_diagonal;
using sampling::random_kmeasure;
using sampling::random_nonzero;
using sampling::random_operator;
using sampling::random_pi;
using sampling::random_pvm;
using sampling::random_scalar;
using sampling::random_space;
using sampling::random_step;
using sampling::random_unimodular;
using sampling::random_unit;
using sampling::random_vector;

struct Ctx {
    const SuiteParams& P;
    SuiteReport& R;
    Rng rng;

    Ctx(const SuiteParams& p, SuiteReport& r) : P(p), R(r), rng(p.seed) {}

    bool ok() const { return R.pass; }

    void fail(const std::string& check, Json witness) {
        if (!R.pass) return;
        witness["check"] = check;
        R.pass = false;
        R.counterexample = std::move(witness);
    }

    void expect(bool cond, const std::string& check,
                const std::function<Json()>& witness) {
        if (R.pass && !cond) fail(check, witness());
    }
    void expect(bool cond, const std::string& check) {
        expect(cond, check, [] { return Json::object(); });
    }

    std::size_t dim(std::size_t lo, std::size_t hi) const {
        hi = std::min(hi, P.dim_max);
        if (hi < lo) hi = lo;
        return lo + (const_cast<Ctx*>(this)->rng.next_u64() % (hi - lo + 1));
    }
};

Json op_witness(const Operator& u) { return Json{{"operator", operator_to_json(u)}}; }

// ---------------------------------------------------------------- scalars

void suite_valuation(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        PadicScalar x = random_scalar(c.rng, c.P.p, c.P.precision, -4, 4, 0.1);
        PadicScalar y = random_scalar(c.rng, c.P.p, c.P.precision, -4, 4, 0.1);
        auto wit = [&] {
            return Json{{"x", scalar_to_json(x)}, {"y", scalar_to_json(y)}};
        };
        c.expect(x.abs().is_zero() == x.is_zero(), "definiteness", wit);
        LogNorm sum = (x + y).abs();
        LogNorm bound = LogNorm::max(x.abs(), y.abs());
        c.expect(sum <= bound, "strong-triangle", wit);
        if (x.abs() != y.abs())
            c.expect(sum == bound, "strong-triangle-equality", wit);
        c.expect((x * y).abs() == x.abs() * y.abs(), "multiplicativity", wit);
        if (!x.is_zero())
            c.expect(x * x.inv() == PadicScalar::one(c.P.p, c.P.precision),
                     "inverse-roundtrip", wit);
    }
    c.R.samples = c.P.samples;
}

void suite_hensel(Ctx& c) {
    std::int64_t p = c.P.p;
    if (p == 2) {
        // lifting is defined for odd p only; nothing to sample
        c.expect(false, "hensel-needs-odd-prime");
        return;
    }
    std::vector<bool> residue(static_cast<std::size_t>(p), false);
    for (std::int64_t r = 1; r < p; ++r) residue[static_cast<std::size_t>(r * r % p)] = true;

    PadicScalar one = PadicScalar::one(p, c.P.precision);
    c.expect(PadicScalar::hensel_sqrt(one) == one, "sqrt-of-one-is-one");

    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        PadicScalar a = random_unit(c.rng, p, c.P.precision);
        auto wit = [&] { return Json{{"a", scalar_to_json(a)}}; };
        bool expect_root = residue[static_cast<std::size_t>(a.unit() % p)];
        try {
            PadicScalar r = PadicScalar::hensel_sqrt(a);
            c.expect(expect_root, "root-for-non-residue", wit);
            c.expect(r * r == a, "square-of-root", wit);
            c.expect(r.valuation() == 0, "root-is-unit", wit);
        } catch (const NoSquareRootError&) {
            c.expect(!expect_root, "no-root-for-residue", wit);
        }
    }
    c.R.samples = c.P.samples;
}

// ----------------------------------------------------------------- spaces

void suite_fomega(Ctx& c) {
    // strictness witness: omega = (1, -1), x = (1, 1) is isotropic over any p
    {
        auto minus_one = -PadicScalar::one(c.P.p, c.P.precision);
        SpacePtr sp = WeightedSpace::make(
            c.P.p, c.P.precision, {PadicScalar::one(c.P.p, c.P.precision), minus_one});
        Vector x(sp, {sp->scalar_one(), sp->scalar_one()});
        c.expect(is_isotropic(x), "isotropic-witness");
        c.expect(f_omega(x, x).abs() < vector_norm(x).pow(2),
                 "cauchy-schwarz-strict-witness");
    }
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 1, c.dim(1, 8));
        Vector x = random_vector(c.rng, sp);
        Vector y = random_vector(c.rng, sp);
        Vector z = random_vector(c.rng, sp);
        PadicScalar lam = random_scalar(c.rng, c.P.p, c.P.precision);
        auto wit = [&] {
            return Json{{"x", vector_to_json(x)}, {"y", vector_to_json(y)}};
        };
        c.expect(f_omega(x, y).abs() <= vector_norm(x) * vector_norm(y),
                 "continuity-bound", wit);
        c.expect(f_omega(x, y) == f_omega(y, x), "symmetry", wit);
        c.expect(f_omega(x + z, y) == f_omega(x, y) + f_omega(z, y), "additivity", wit);
        c.expect(f_omega(x.scaled(lam), y) == lam * f_omega(x, y), "homogeneity", wit);
        c.expect(f_omega(x, x).abs() <= vector_norm(x).pow(2), "diagonal-bound", wit);
        if (!x.is_zero()) {
            bool hit = false;
            for (std::size_t j = 0; j < sp->dim(); ++j)
                if (!f_omega(x, Vector::basis(sp, j)).is_zero()) hit = true;
            c.expect(hit, "nondegeneracy", wit);
        }
    }
    c.R.samples = c.P.samples;
}

void suite_pi_structure(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 1, c.dim(1, 6));
        PadicScalar pi = random_pi(c.rng, c.P.p, c.P.precision);
        PiStructure ps(sp, pi);
        auto wit = [&] {
            return Json{{"space", space_to_json(*sp)}, {"pi", scalar_to_json(pi)}};
        };
        for (std::size_t i = 0; i < sp->dim(); ++i) {
            LogNorm e = sp->basis_norm(i);
            LogNorm lo = pi.abs().pow(ps.exponent(i) + 1);
            LogNorm hi = pi.abs().pow(ps.exponent(i));
            c.expect(lo < e && e <= hi, "exponent-bracket", wit);
        }
        Vector x = random_vector(c.rng, sp);
        Vector y = random_vector(c.rng, sp);
        LogNorm n = vector_norm(x), npi = ps.pi_norm(x);
        c.expect(pi.abs() * npi <= n && n <= npi, "norm-equivalence", wit);
        c.expect(ps.f_pi(x, y).abs() <= ps.pi_norm(x) * ps.pi_norm(y), "f-pi-bound", wit);
        c.expect(ps.pi_norm(x) * ps.pi_norm(y) <=
                     pi.abs().pow(-2) * vector_norm(x) * vector_norm(y),
                 "f-pi-vs-omega-bound", wit);

        Operator u = random_operator(c.rng, sp);
        Operator ustar = adjoint_pi(u, ps);
        bool identity_ok = true;
        for (std::size_t i = 0; i < sp->dim() && identity_ok; ++i)
            for (std::size_t j = 0; j < sp->dim() && identity_ok; ++j) {
                Vector ei = Vector::basis(sp, i), ej = Vector::basis(sp, j);
                if (ps.f_pi(u.apply(ei), ej) != ps.f_pi(ei, ustar.apply(ej)))
                    identity_ok = false;
            }
        c.expect(identity_ok, "adjoint-defining-identity",
                 [&] { return op_witness(u); });

        // coordinate projectors are self-adjoint with norm one in both norms
        IndexSubset j;
        for (std::size_t i = 0; i < sp->dim(); ++i)
            if (c.rng.chance(0.5)) j.push_back(i);
        if (!j.empty()) {
            Operator pj = Projector(sp, j).to_operator();
            c.expect(adjoint_pi(pj, ps) == pj, "projector-self-adjoint", wit);
            c.expect(op_norm(pj) == LogNorm::one() && op_norm_pi(pj, ps) == LogNorm::one(),
                     "projector-norm-one", wit);
        }
    }
    c.R.samples = c.P.samples;
}

void suite_opnorm(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 1, c.dim(1, 8));
        Operator u = random_operator(c.rng, sp);
        Operator v = random_operator(c.rng, sp);
        Vector x = random_vector(c.rng, sp);
        auto wit = [&] {
            return Json{{"u", operator_to_json(u)}, {"v", operator_to_json(v)}};
        };
        c.expect(vector_norm(u.apply(x)) <= op_norm(u) * vector_norm(x),
                 "apply-bound", wit);
        c.expect(op_norm(u.compose(v)) <= op_norm(u) * op_norm(v),
                 "submultiplicative", wit);
        c.expect(op_norm(u + v) <= LogNorm::max(op_norm(u), op_norm(v)),
                 "ultrametric-sum", wit);
        c.expect(op_norm(Operator::identity(sp)) == LogNorm::one(), "identity-norm");
        c.expect(op_norm(Operator::zero(sp)).is_zero(), "zero-norm");

        SpacePtr on = WeightedSpace::orthonormal(c.P.p, c.P.precision, sp->dim());
        Operator w = random_operator(c.rng, on);
        c.expect(op_norm(w.transpose()) == op_norm(w), "transpose-isometry-orthonormal",
                 [&] { return op_witness(w); });
    }
    c.R.samples = c.P.samples;
}

void suite_adjoint_identity(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 1, c.dim(1, 8));
        Operator u = random_operator(c.rng, sp);
        Operator ustar = adjoint_omega(u);
        for (std::size_t i = 0; i < sp->dim() && c.ok(); ++i)
            for (std::size_t j = 0; j < sp->dim() && c.ok(); ++j) {
                Vector ei = Vector::basis(sp, i), ej = Vector::basis(sp, j);
                c.expect(f_omega(u.apply(ei), ej) == f_omega(ei, ustar.apply(ej)),
                         "bilinear-identity", [&] { return op_witness(u); });
            }
    }
    c.R.samples = c.P.samples;
}

void suite_adjoint_algebra(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 1, c.dim(1, 8));
        Operator u = random_operator(c.rng, sp);
        Operator v = random_operator(c.rng, sp);
        PadicScalar lam = random_scalar(c.rng, c.P.p, c.P.precision);
        auto wit = [&] {
            return Json{{"u", operator_to_json(u)},
                        {"v", operator_to_json(v)},
                        {"lambda", scalar_to_json(lam)}};
        };
        c.expect(op_norm(adjoint_omega(u)) == op_norm(u), "adjoint-isometry", wit);
        c.expect(adjoint_omega(adjoint_omega(u)) == u, "involution", wit);
        c.expect(adjoint_omega(u.compose(v)) ==
                     adjoint_omega(v).compose(adjoint_omega(u)),
                 "antihomomorphism", wit);
        c.expect(adjoint_omega(u + v.scaled(lam)) ==
                     adjoint_omega(u) + adjoint_omega(v).scaled(lam),
                 "linearity", wit);
    }
    c.R.samples = c.P.samples;
}

void suite_counterexample(Ctx& c) {
    // the fixed 4x4 witness needs sqrt(-1), so it lives over Q_5
    const std::int64_t p = 5;
    const std::int32_t prec = c.P.precision;
    PadicScalar one = PadicScalar::one(p, prec);
    PadicScalar i = PadicScalar::hensel_sqrt(-one);
    PadicScalar cc = PadicScalar::from_integer(p, prec, 5);
    SpacePtr sp = WeightedSpace::orthonormal(p, prec, 4);
    PadicScalar z = sp->scalar_zero();
    // columns: u(e1) = e1 + i e2, u(e2) = i e1 - e2, u(e3) = 5 e3, u(e4) = 0
    Operator u(sp, {one, i, z, z,
                    i, -one, z, z,
                    z, z, cc, z,
                    z, z, z, z});
    auto wit = [&] { return op_witness(u); };

    c.expect(is_self_adjoint(u), "witness-self-adjoint", wit);
    c.expect(op_norm(u) == LogNorm::one(), "witness-norm-one", wit);
    c.expect(op_norm(u.compose(u)) == LogNorm::from_exponent(2),
             "witness-square-norm", wit);
    c.expect(op_norm(u.compose(u)) < op_norm(u).pow(2), "square-norm-collapse", wit);
    c.expect(op_norm(u.transpose().compose(u)) == LogNorm::from_exponent(2),
             "witness-ata-norm", wit);

    AlgebraAxiomReport rep = check_algebra_axioms({u}, c.P.samples, c.P.seed);
    c.expect(!rep.e_holds, "e-axiom-fails", wit);
    c.expect(rep.e_witness.has_value() && *rep.e_witness == u, "e-witness-is-generator",
             wit);
    c.expect(rep.t_holds, "t-axioms-hold", wit);
    c.expect(rep.s_holds, "s-axiom-holds-for-symmetric-words", wit);

    // contrast: diagonal generators over an orthonormal space satisfy E
    Rng drng(c.P.seed);
    SpacePtr dsp = WeightedSpace::orthonormal(p, prec, 4);
    AlgebraAxiomReport diag_rep = check_algebra_axioms(
        {random_diagonal(drng, dsp), random_diagonal(drng, dsp)}, 200, c.P.seed);
    c.expect(diag_rep.e_holds && diag_rep.s_holds && diag_rep.t_holds,
             "diagonal-algebra-is-e-algebra");
    c.R.samples = c.P.samples;
}

// ------------------------------------------------------------- projectors

void suite_projectors(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = WeightedSpace::orthonormal(c.P.p, c.P.precision, c.dim(1, 8));
        IndexSubset j, l;
        for (std::size_t i = 0; i < sp->dim(); ++i) {
            if (c.rng.chance(0.5)) j.push_back(i);
            if (c.rng.chance(0.5)) l.push_back(i);
        }
        Projector pj(sp, j), pl(sp, l);
        auto wit = [&] {
            return Json{{"J", j}, {"L", l}, {"space", space_to_json(*sp)}};
        };
        c.expect(pj.to_operator().compose(pl.to_operator()) ==
                     pj.intersect(pl).to_operator(),
                 "product-is-intersection", wit);
        c.expect(pj.to_operator() + pj.complement().to_operator() ==
                     Operator::identity(sp),
                 "complement-sums-to-identity", wit);

        auto check = is_idempotent_diagonal(pj.to_operator());
        c.expect(check.is_projector() && check.subset == pj.subset(),
                 "idempotent-recovers-subset", wit);

        Operator d = random_diagonal(c.rng, sp);
        auto dc = is_idempotent_diagonal(d);
        bool all01 = true;
        for (const auto& e : d.diagonal_entries())
            if (!e.is_zero() && e != sp->scalar_one()) all01 = false;
        c.expect(dc.is_projector() == all01, "idempotent-iff-01-diagonal",
                 [&] { return op_witness(d); });

        if (sp->dim() >= 2) {
            Operator nd = Operator::zero(sp);
            std::vector<PadicScalar> entries = nd.entries();
            entries[1] = sp->scalar_one();  // entry (0,1)
            nd = Operator(sp, std::move(entries));
            c.expect(is_idempotent_diagonal(nd).status ==
                         IdempotentCheck::Status::not_diagonal,
                     "non-diagonal-not-applicable");
        }

        // the diagonal spectrum is the coordinate evaluations
        if (s % 64 == 0) {
            auto chars = d_spectrum_finite(sp, c.P.seed, 4);
            c.expect(chars.size() == sp->dim(), "character-count-is-dim");
            Operator diag = random_diagonal(c.rng, sp);
            for (const auto& chi : chars) {
                c.expect(chi.eval(diag) == diag.entry(chi.index, chi.index),
                         "character-is-coordinate", [&] { return op_witness(diag); });
                c.expect(chi.eval(pj.to_operator()) ==
                             (subset_contains(j, chi.index) ? sp->scalar_one()
                                                            : sp->scalar_zero()),
                         "character-on-projector", wit);
            }
        }
    }
    c.R.samples = c.P.samples;
}

void suite_b_norm(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 2, c.dim(2, 8));
        BElement u = random_b_element(c.rng, sp);
        auto wit = [&] { return Json{{"u", belement_to_json(u)}}; };
        // b_norm itself asserts the two closed forms agree
        c.expect(b_norm(u) == op_norm(u.to_operator()), "b-norm-is-operator-norm", wit);
    }
    c.R.samples = c.P.samples;
}

void suite_b_square(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = WeightedSpace::orthonormal(c.P.p, c.P.precision, c.dim(2, 8));
        BElement u = random_b_element(c.rng, sp);
        Operator op = u.to_operator();
        auto wit = [&] { return Json{{"u", belement_to_json(u)}}; };
        c.expect(is_self_adjoint(op), "self-adjoint-orthonormal", wit);
        c.expect(op_norm(op.compose(op)) == op_norm(op).pow(2), "square-norm", wit);
        c.expect(b_norm(u.mul(u)) == b_norm(u).pow(2), "square-norm-closed-form", wit);
    }
    c.R.samples = c.P.samples;
}

void suite_diagonal_square(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 1, c.dim(1, 8));
        Operator d = random_diagonal(c.rng, sp);
        c.expect(op_norm(d.compose(d)) == op_norm(d).pow(2), "square-norm",
                 [&] { return op_witness(d); });
    }
    c.R.samples = c.P.samples;
}

void suite_b_pi_adjoint(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 2, c.dim(2, 8));
        BElement u = random_b_element(c.rng, sp);
        PiStructure ps(sp, random_pi(c.rng, c.P.p, c.P.precision));
        Operator op = u.to_operator();
        auto wit = [&] {
            return Json{{"u", belement_to_json(u)}, {"pi", scalar_to_json(ps.pi())}};
        };
        c.expect(adjoint_pi(op, ps) == op, "fixed-by-pi-adjoint", wit);
        c.expect(is_self_adjoint_pi(op, ps), "self-adjoint-pi", wit);
        c.expect(op_norm(op.compose(op)) == op_norm(op).pow(2), "square-norm", wit);
    }
    c.R.samples = c.P.samples;
}

void suite_characters(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 2, c.dim(2, 8));
        BElement u = random_b_element(c.rng, sp);
        BElement v = random_b_element(c.rng, sp);
        // align coefficients of v onto u's partition
        std::vector<PadicScalar> valphas;
        for (std::size_t nu = 0; nu < u.blocks(); ++nu)
            valphas.push_back(random_scalar(c.rng, c.P.p, c.P.precision));
        v = BElement(sp, u.partition(), random_scalar(c.rng, c.P.p, c.P.precision),
                     valphas);
        auto wit = [&] {
            return Json{{"u", belement_to_json(u)}, {"v", belement_to_json(v)}};
        };
        auto chars = characters(u, c.P.seed, 2);
        c.expect(chars.size() == u.blocks() + 1, "character-count", wit);
        c.expect(chars[0].second == u.alpha0(), "chi0-value", wit);
        for (std::size_t nu = 0; nu < u.blocks(); ++nu)
            c.expect(chars[nu + 1].second == u.alpha0() + u.alpha(nu), "chi-nu-value",
                     wit);
        for (const auto& [chi, _] : chars)
            c.expect(chi.eval(u.mul(v)) == chi.eval(u) * chi.eval(v),
                     "multiplicative", wit);

        // chi_nu(p_mu) = delta, chi_0(p_mu) = 0
        for (std::size_t mu = 0; mu < u.blocks() && c.ok(); ++mu) {
            std::vector<PadicScalar> sel(u.blocks(), sp->scalar_zero());
            sel[mu] = sp->scalar_one();
            BElement p_mu(sp, u.partition(), sp->scalar_zero(), sel);
            c.expect(Character{Character::kChi0}.eval(p_mu).is_zero(),
                     "chi0-kills-projectors", wit);
            for (std::size_t nu = 0; nu < u.blocks(); ++nu) {
                PadicScalar expected =
                    nu == mu ? sp->scalar_one() : sp->scalar_zero();
                c.expect(Character{nu}.eval(p_mu) == expected,
                         "chi-nu-on-projector", wit);
            }
        }
    }
    c.R.samples = c.P.samples;
}

void suite_gelfand(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 2, c.dim(2, 8));
        BElement u = random_b_element(c.rng, sp);
        std::vector<PadicScalar> valphas;
        for (std::size_t nu = 0; nu < u.blocks(); ++nu)
            valphas.push_back(random_scalar(c.rng, c.P.p, c.P.precision));
        BElement v(sp, u.partition(), random_scalar(c.rng, c.P.p, c.P.precision),
                   valphas);
        auto wit = [&] { return Json{{"u", belement_to_json(u)}}; };

        GelfandTable gu = gelfand(u), gv = gelfand(v);
        c.expect(gelfand_inverse(sp, gu) == u, "round-trip", wit);
        c.expect(gu.sup_norm() == b_norm(u), "isometry", wit);

        GelfandTable gprod = gelfand(u.mul(v));
        GelfandTable gsum = gelfand(u.add(v));
        for (std::size_t k = 0; k < gu.values.size() && c.ok(); ++k) {
            c.expect(gprod.values[k] == gu.values[k] * gv.values[k],
                     "pointwise-multiplicative", wit);
            c.expect(gsum.values[k] == gu.values[k] + gv.values[k],
                     "pointwise-additive", wit);
        }
    }
    c.R.samples = c.P.samples;
}

// ----------------------------------------------------------- measures

struct MeasureFixture {
    AlgebraPtr algebra;                       // {a, b}
    SpacePtr space;                           // Q_p^3 orthonormal
    std::optional<ProjectionValuedMeasure> p;  // diag(1,1,0) / diag(0,0,1)
    AlgebraPtr algebra4;                      // {a, b, c, d} with null atoms b, d
    std::optional<ProjectionValuedMeasure> p4;

    MeasureFixture(std::int64_t prime, std::int32_t prec) {
        algebra = ClopenAlgebra::finite({"a", "b"});
        space = WeightedSpace::orthonormal(prime, prec, 3);
        PadicScalar one = space->scalar_one(), zero = space->scalar_zero();
        p = ProjectionValuedMeasure::make(
            algebra, space,
            {Operator::diagonal(space, {one, one, zero}),
             Operator::diagonal(space, {zero, zero, one})});
        algebra4 = ClopenAlgebra::finite({"a", "b", "c", "d"});
        p4 = ProjectionValuedMeasure::make(
            algebra4, space,
            {Operator::diagonal(space, {one, one, zero}), Operator::zero(space),
             Operator::diagonal(space, {zero, zero, one}), Operator::zero(space)});
    }
};

ProjectionValuedMeasure sample_pvm(Ctx& c, AlgebraPtr* algebra_out = nullptr) {
    AlgebraPtr algebra = random_algebra(c.rng, 2, 4);
    SpacePtr sp = WeightedSpace::orthonormal(c.P.p, c.P.precision,
                                             c.dim(2, std::min<std::size_t>(6, c.P.dim_max)));
    if (algebra_out) *algebra_out = algebra;
    return random_pvm(c.rng, algebra, sp, c.rng.chance(0.5));
}

ClopenSet random_set(Ctx& c, const AlgebraPtr& algebra) {
    IndexSubset atoms;
    for (std::size_t i = 0; i < algebra->atom_count(); ++i)
        if (c.rng.chance(0.5)) atoms.push_back(i);
    return ClopenSet(algebra, std::move(atoms));
}

void for_all_sets(const AlgebraPtr& algebra,
                  const std::function<void(const ClopenSet&)>& fn) {
    std::size_t k = algebra->atom_count();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        IndexSubset atoms;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) atoms.push_back(i);
        fn(ClopenSet(algebra, std::move(atoms)));
    }
}

void suite_integral_nullsets(Ctx& c) {
    MeasureFixture fx(c.P.p, c.P.precision);
    // exhaustive on the 4-atom fixture with null atoms, values from {0, 1, p}
    std::vector<PadicScalar> pool = {fx.space->scalar_zero(), fx.space->scalar_one(),
                                     PadicScalar::from_integer(c.P.p, c.P.precision, c.P.p)};
    std::size_t k = fx.algebra4->atom_count();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= pool.size();
    for (std::size_t fi = 0; fi < total && c.ok(); ++fi)
        for (std::size_t gi = 0; gi < total && c.ok(); ++gi) {
            std::vector<PadicScalar> fv, gv;
            std::size_t a = fi, b = gi;
            for (std::size_t i = 0; i < k; ++i) {
                fv.push_back(pool[a % pool.size()]);
                gv.push_back(pool[b % pool.size()]);
                a /= pool.size();
                b /= pool.size();
            }
            StepFunction f(fx.algebra4, fv), g(fx.algebra4, gv);
            bool integrals_equal =
                spectral_integral(f, *fx.p4) == spectral_integral(g, *fx.p4);
            c.expect(integrals_equal == f.equal_essentially(g, *fx.p4),
                     "equal-integrals-iff-equal-off-null", [&] {
                         return Json{{"f", step_to_json(f)}, {"g", step_to_json(g)}};
                     });
        }

    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        StepFunction f = random_step(c.rng, algebra, c.P.p, c.P.precision);
        StepFunction g = f;
        if (c.rng.chance(0.5)) {
            // tweak some atom; equality of integrals must track essential equality
            std::size_t atom = static_cast<std::size_t>(
                c.rng.uniform(0, static_cast<std::int64_t>(algebra->atom_count()) - 1));
            std::vector<PadicScalar> values = g.atom_values();
            values[atom] = random_scalar(c.rng, c.P.p, c.P.precision);
            g = StepFunction(algebra, values);
        }
        bool integrals_equal = spectral_integral(f, p) == spectral_integral(g, p);
        c.expect(integrals_equal == f.equal_essentially(g, p),
                 "equal-integrals-iff-equal-off-null", [&] {
                     return Json{{"f", step_to_json(f)},
                                 {"g", step_to_json(g)},
                                 {"pvm", pvm_to_json(p)}};
                 });
    }
    c.R.samples = c.P.samples;
}

void suite_integral_linear(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        StepFunction f = random_step(c.rng, algebra, c.P.p, c.P.precision);
        StepFunction g = random_step(c.rng, algebra, c.P.p, c.P.precision);
        PadicScalar lam = random_scalar(c.rng, c.P.p, c.P.precision);
        auto wit = [&] {
            return Json{{"f", step_to_json(f)}, {"g", step_to_json(g)},
                        {"pvm", pvm_to_json(p)}};
        };
        c.expect(spectral_integral(f + g, p) ==
                     spectral_integral(f, p) + spectral_integral(g, p),
                 "additive", wit);
        c.expect(spectral_integral(f.scaled(lam), p) ==
                     spectral_integral(f, p).scaled(lam),
                 "homogeneous", wit);
    }
    c.R.samples = c.P.samples;
}

void suite_integral_multiplicative(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        StepFunction f = random_step(c.rng, algebra, c.P.p, c.P.precision);
        StepFunction g = random_step(c.rng, algebra, c.P.p, c.P.precision);
        c.expect(spectral_integral(f * g, p) ==
                     spectral_integral(f, p).compose(spectral_integral(g, p)),
                 "multiplicative", [&] {
                     return Json{{"f", step_to_json(f)}, {"g", step_to_json(g)},
                                 {"pvm", pvm_to_json(p)}};
                 });
    }
    c.R.samples = c.P.samples;
}

void suite_integral_isometry(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        StepFunction f = random_step(c.rng, algebra, c.P.p, c.P.precision);
        c.expect(op_norm(spectral_integral(f, p)) == f.ess_sup_norm(p), "isometry",
                 [&] {
                     return Json{{"f", step_to_json(f)}, {"pvm", pvm_to_json(p)}};
                 });
    }
    c.R.samples = c.P.samples;
}

void suite_integral_characteristic(Ctx& c) {
    MeasureFixture fx(c.P.p, c.P.precision);
    for_all_sets(fx.algebra4, [&](const ClopenSet& a) {
        StepFunction ch = StepFunction::characteristic(a, c.P.p, c.P.precision);
        c.expect(spectral_integral(ch, *fx.p4) == fx.p4->eval(a),
                 "characteristic-integrates-to-projector",
                 [&] { return Json{{"set", clopen_set_to_json(a)}}; });
        c.expect(fx.p4->eval(a) + fx.p4->eval(a.set_complement()) ==
                     Operator::identity(fx.space),
                 "complement-sums-to-identity",
                 [&] { return Json{{"set", clopen_set_to_json(a)}}; });
    });
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        ClopenSet a = random_set(c, algebra);
        StepFunction ch = StepFunction::characteristic(a, c.P.p, c.P.precision);
        c.expect(spectral_integral(ch, p) == p.eval(a),
                 "characteristic-integrates-to-projector", [&] {
                     return Json{{"set", clopen_set_to_json(a)}, {"pvm", pvm_to_json(p)}};
                 });
        c.expect(p.eval(ClopenSet::empty(algebra)).is_zero(), "empty-set-is-zero");
        c.expect(p.eval(ClopenSet::full(algebra)) == Operator::identity(p.space()),
                 "full-set-is-identity");
    }
    c.R.samples = c.P.samples;
}

void suite_scalar_measure(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        StepFunction f = random_step(c.rng, algebra, c.P.p, c.P.precision);
        Vector xi = random_vector(c.rng, p.space());
        std::size_t eta = static_cast<std::size_t>(
            c.rng.uniform(0, static_cast<std::int64_t>(p.space()->dim()) - 1));
        KMeasure mu = scalar_measure(p, xi, eta);
        auto wit = [&] {
            return Json{{"f", step_to_json(f)}, {"xi", vector_to_json(xi)},
                        {"eta_index", eta}, {"pvm", pvm_to_json(p)}};
        };
        // eta*(I(f) xi) = sum f(atom) mu(atom)
        PadicScalar lhs = spectral_integral(f, p).apply(xi)[eta];
        PadicScalar rhs = p.space()->scalar_zero();
        for (std::size_t a = 0; a < algebra->atom_count(); ++a)
            rhs = rhs + f.value(a) * mu.atom_value(a);
        c.expect(lhs == rhs, "integral-pairing", wit);

        // additivity over a random disjoint split
        ClopenSet a = random_set(c, algebra);
        ClopenSet b = random_set(c, algebra).set_intersect(a.set_complement());
        c.expect(mu.eval(a.set_union(b)) == mu.eval(a) + mu.eval(b), "additivity", wit);

        // total-mass bound: |mu(A)| <= ||A||_mu <= ||xi|| ||eta*||
        LogNorm eta_norm = LogNorm::one().div(p.space()->basis_norm(eta));
        c.expect(measure_norm(mu, ClopenSet::full(algebra)) <=
                     vector_norm(xi) * eta_norm,
                 "mass-bound", wit);
    }
    c.R.samples = c.P.samples;
}

void suite_integral_commutes(Ctx& c) {
    MeasureFixture fx(c.P.p, c.P.precision);
    {
        StepFunction f(fx.algebra4,
                       {fx.space->scalar_one(),
                        PadicScalar::from_integer(c.P.p, c.P.precision, c.P.p),
                        fx.space->scalar_zero(),
                        PadicScalar::from_integer(c.P.p, c.P.precision, 1 + c.P.p)});
        Operator integral = spectral_integral(f, *fx.p4);
        for_all_sets(fx.algebra4, [&](const ClopenSet& a) {
            Operator pa = fx.p4->eval(a);
            c.expect(pa.compose(integral) == integral.compose(pa), "commutes",
                     [&] { return Json{{"set", clopen_set_to_json(a)}}; });
        });
    }
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        StepFunction f = random_step(c.rng, algebra, c.P.p, c.P.precision);
        ClopenSet a = random_set(c, algebra);
        Operator integral = spectral_integral(f, p);
        Operator pa = p.eval(a);
        c.expect(pa.compose(integral) == integral.compose(pa), "commutes", [&] {
            return Json{{"f", step_to_json(f)}, {"set", clopen_set_to_json(a)},
                        {"pvm", pvm_to_json(p)}};
        });
    }
    c.R.samples = c.P.samples;
}

void suite_intersection_product(Ctx& c) {
    MeasureFixture fx(c.P.p, c.P.precision);
    for_all_sets(fx.algebra, [&](const ClopenSet& a) {
        for_all_sets(fx.algebra, [&](const ClopenSet& b) {
            Operator pa = fx.p->eval(a), pb = fx.p->eval(b);
            Operator pint = fx.p->eval(a.set_intersect(b));
            c.expect(pint == pa.compose(pb) && pint == pb.compose(pa),
                     "intersection-is-product", [&] {
                         return Json{{"A", clopen_set_to_json(a)},
                                     {"B", clopen_set_to_json(b)}};
                     });
        });
    });
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        ClopenSet a = random_set(c, algebra), b = random_set(c, algebra);
        Operator pa = p.eval(a), pb = p.eval(b);
        Operator pint = p.eval(a.set_intersect(b));
        c.expect(pint == pa.compose(pb) && pint == pb.compose(pa),
                 "intersection-is-product", [&] {
                     return Json{{"A", clopen_set_to_json(a)},
                                 {"B", clopen_set_to_json(b)}, {"pvm", pvm_to_json(p)}};
                 });
    }
    c.R.samples = c.P.samples;
}

void suite_projection_idempotent(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        ClopenSet a = random_set(c, algebra);
        ClopenSet b = random_set(c, algebra).set_intersect(a.set_complement());
        Operator pa = p.eval(a), pb = p.eval(b);
        auto wit = [&] {
            return Json{{"A", clopen_set_to_json(a)}, {"B", clopen_set_to_json(b)},
                        {"pvm", pvm_to_json(p)}};
        };
        c.expect(pa.compose(pa) == pa, "idempotent", wit);
        c.expect(pa.compose(pb).is_zero() && pb.compose(pa).is_zero(),
                 "disjoint-orthogonal", wit);
    }
    c.R.samples = c.P.samples;
}

void suite_polarization(Ctx& c) {
    PadicScalar two = PadicScalar::from_integer(c.P.p, c.P.precision, 2);
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        Vector xi = random_vector(c.rng, p.space());
        Vector eta = random_vector(c.rng, p.space());
        KMeasure cross = scalar_measure(p, xi, eta);
        KMeasure diag_sum = scalar_measure(p, xi + eta, xi + eta);
        KMeasure diag_xi = scalar_measure(p, xi, xi);
        KMeasure diag_eta = scalar_measure(p, eta, eta);
        for (std::size_t a = 0; a < algebra->atom_count() && c.ok(); ++a) {
            c.expect(two * cross.atom_value(a) ==
                         diag_sum.atom_value(a) - diag_xi.atom_value(a) -
                             diag_eta.atom_value(a),
                     "polarization", [&] {
                         return Json{{"xi", vector_to_json(xi)},
                                     {"eta", vector_to_json(eta)},
                                     {"pvm", pvm_to_json(p)}};
                     });
        }
    }
    c.R.samples = c.P.samples;
}

void suite_measure_norms(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra = random_algebra(c.rng, 2, 4);
        KMeasure mu = random_kmeasure(c.rng, algebra, c.P.p, c.P.precision);
        auto wit = [&] { return Json{{"mu", kmeasure_to_json(mu)}}; };

        // brute-force oracle: sup over all subsets, computed from sums
        auto brute_norm = [&](const ClopenSet& a) {
            LogNorm best = LogNorm::zero();
            std::size_t k = a.atoms().size();
            for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
                IndexSubset sub;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (std::size_t{1} << i)) sub.push_back(a.atoms()[i]);
                best = LogNorm::max(best, mu.eval(ClopenSet(algebra, sub)).abs());
            }
            return best;
        };

        ClopenSet a = random_set(c, algebra);
        if (!a.is_empty())
            c.expect(measure_norm(mu, a) == brute_norm(a), "subset-sup-shortcut", wit);
        c.expect(measure_norm(mu, a) <= measure_norm(mu, ClopenSet::full(algebra)),
                 "monotone", wit);

        // N_mu(x): enumerate every clopen superset of the atom
        std::size_t x = static_cast<std::size_t>(
            c.rng.uniform(0, static_cast<std::int64_t>(algebra->atom_count()) - 1));
        LogNorm inf = LogNorm::one();
        bool first = true;
        std::size_t k = algebra->atom_count();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            if (!(mask & (std::size_t{1} << x))) continue;
            IndexSubset sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t{1} << i)) sub.push_back(i);
            LogNorm nrm = brute_norm(ClopenSet(algebra, sub));
            inf = first ? nrm : LogNorm::min(inf, nrm);
            first = false;
        }
        c.expect(n_mu_weight(mu, x) == inf, "weight-is-infimum", wit);
    }
    c.R.samples = c.P.samples;
}

// ----------------------------------------------------------- theorems

void suite_stone_roundtrip(Ctx& c) {
    // enumeration oracle: all 0/1 projector pairs over Q_5^2 on two atoms
    {
        SpacePtr sp = WeightedSpace::orthonormal(5, c.P.precision, 2);
        AlgebraPtr algebra = ClopenAlgebra::finite({"a", "b"});
        std::vector<Operator> all01;
        for (std::size_t mask = 0; mask < 16; ++mask) {
            std::vector<PadicScalar> e;
            for (std::size_t bit = 0; bit < 4; ++bit)
                e.push_back((mask >> bit) & 1 ? sp->scalar_one() : sp->scalar_zero());
            all01.emplace_back(sp, std::move(e));
        }
        std::vector<ProjectionValuedMeasure> valid;
        for (const auto& a : all01)
            for (const auto& b : all01) {
                try {
                    valid.push_back(ProjectionValuedMeasure::make(algebra, sp, {a, b}));
                } catch (const ValidationError&) {
                }
            }
        c.expect(valid.size() == 4, "enumeration-count", [&] {
            return Json{{"found", valid.size()}};
        });
        for (const auto& p : valid) {
            c.expect(pvm_from_rep(rep_from_pvm(p)) == p, "enumerated-round-trip");
        }
        for (std::size_t i = 0; i < valid.size(); ++i)
            for (std::size_t j = i + 1; j < valid.size(); ++j)
                c.expect(!(rep_from_pvm(valid[i]) == rep_from_pvm(valid[j])),
                         "uniqueness-distinct-measures-distinct-reps");
    }

    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        FiniteRepresentation t = rep_from_pvm(p);
        auto wit = [&] { return Json{{"pvm", pvm_to_json(p)}}; };
        c.expect(pvm_from_rep(t) == p, "pvm-to-rep-to-pvm", wit);
        c.expect(rep_from_pvm(pvm_from_rep(t)) == t, "rep-to-pvm-to-rep", wit);
        c.expect(!t.violation().has_value(), "valid-representation", wit);

        // multiplicativity of the extended map on random step functions
        StepFunction f = random_step(c.rng, algebra, c.P.p, c.P.precision);
        StepFunction g = random_step(c.rng, algebra, c.P.p, c.P.precision);
        c.expect(t.apply(f * g) == t.apply(f).compose(t.apply(g)),
                 "extension-multiplicative", wit);
        c.expect(t.apply(StepFunction::constant(algebra, p.space()->scalar_one())) ==
                     Operator::identity(p.space()),
                 "extension-unital", wit);

        // a broken table must be rejected with a witness
        if (s % 16 == 0 && algebra->atom_count() >= 2) {
            std::vector<Operator> table;
            for (std::size_t i = 0; i < algebra->atom_count(); ++i)
                table.push_back(p.atom_projector(i));
            table[0] = table[0].scaled(
                PadicScalar::from_integer(c.P.p, c.P.precision, 1 + c.P.p));
            FiniteRepresentation broken(algebra, p.space(), table);
            bool rejected = false;
            try {
                pvm_from_rep(broken);
            } catch (const ValidationError&) {
                rejected = true;
            }
            c.expect(rejected, "invalid-table-rejected", wit);
        }
    }
    c.R.samples = c.P.samples;
}

std::size_t matrix_rank(const Operator& u) {
    std::size_t n = u.dim();
    std::vector<std::vector<PadicScalar>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i].push_back(u.entry(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[pivot], rows[rank]);
        PadicScalar d = rows[rank][col].inv();
        for (std::size_t j = 0; j < n; ++j) rows[rank][j] = rows[rank][j] * d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            PadicScalar f = rows[i][col];
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] = rows[i][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

void suite_eigenrange(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = WeightedSpace::orthonormal(c.P.p, c.P.precision, c.dim(1, 8));
        Operator b = random_diagonal(c.rng, sp, c.rng.chance(0.6));
        bool conjugated = c.rng.chance(0.3);
        Operator probe = b;
        SpectralDecomposition dec = spectral_decompose_diagonal(b);
        if (conjugated) {
            auto [u, u_inv] = random_unimodular(c.rng, sp);
            probe = u.compose(b).compose(u_inv);
            dec = spectral_decompose_in_basis(probe, u);
        }
        auto wit = [&] { return op_witness(probe); };

        c.expect(eigenrange_check(probe, dec, ClopenSet::full(dec.pvm.algebra())),
                 "eigenrange-all-atoms", wit);
        c.expect(eigenrange_check(probe, dec, random_set(c, dec.pvm.algebra())),
                 "eigenrange-random-subset", wit);
        c.expect(eigenrange_check(probe, dec, ClopenSet::empty(dec.pvm.algebra())),
                 "eigenrange-empty", wit);

        // independent oracle: rank of each projector equals the nullity of b - lambda
        for (std::size_t a = 0; a < dec.support.size() && c.ok(); ++a) {
            Operator shifted = probe - Operator::scalar(sp, dec.support[a]);
            std::size_t nullity = sp->dim() - matrix_rank(shifted);
            c.expect(matrix_rank(dec.pvm.atom_projector(a)) == nullity,
                     "projector-rank-is-eigenspace-dim", wit);
        }
    }
    c.R.samples = c.P.samples;
}

void suite_spectral_theorem(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = WeightedSpace::orthonormal(c.P.p, c.P.precision, c.dim(1, 8));
        Operator b = random_diagonal(c.rng, sp, c.rng.chance(0.5));
        SpectralDecomposition dec = spectral_decompose_diagonal(b);
        auto wit = [&] { return op_witness(b); };
        c.expect(dec.reconstruct() == b, "decompose-then-integrate", wit);

        for (std::size_t i = 0; i + 1 < dec.support.size(); ++i)
            c.expect(PadicScalar::canonical_less(dec.support[i], dec.support[i + 1]),
                     "support-sorted", wit);
        for (std::size_t i = 0; i < dec.support.size(); ++i)
            c.expect(!dec.pvm.atom_projector(i).is_zero(), "support-atoms-nonnull", wit);

        if (c.rng.chance(0.3)) {
            auto [u, u_inv] = random_unimodular(c.rng, sp);
            Operator conj = u.compose(b).compose(u_inv);
            SpectralDecomposition dec2 = spectral_decompose_in_basis(conj, u);
            c.expect(dec2.reconstruct() == conj, "conjugated-reconstruction", wit);
        }

        if (s % 5 == 0 && sp->dim() >= 1) {
            // commuting family through the joint decomposition
            Operator b2 = random_diagonal(c.rng, sp, c.rng.chance(0.5));
            Operator prod = b.compose(b2), sum = b + b2;
            SimultaneousDecomposition joint = simultaneous_decompose({b, b2, prod, sum});
            auto jwit = [&] {
                return Json{{"b", operator_to_json(b)}, {"c", operator_to_json(b2)}};
            };
            for (std::size_t k = 0; k < 4; ++k) {
                Operator expected = k == 0 ? b : k == 1 ? b2 : k == 2 ? prod : sum;
                c.expect(spectral_integral(joint.coordinate_function(k), joint.pvm) ==
                             expected,
                         "joint-reconstruction", jwit);
            }
            for (const auto& tuple : joint.points) {
                c.expect(tuple[2] == tuple[0] * tuple[1], "f-bc-is-f-b-times-f-c", jwit);
                c.expect(tuple[3] == tuple[0] + tuple[1], "f-b-plus-c-additive", jwit);
            }
            // the reconstructed integrals commute pairwise
            Operator ia = spectral_integral(joint.coordinate_function(0), joint.pvm);
            Operator ib = spectral_integral(joint.coordinate_function(1), joint.pvm);
            c.expect(ia.compose(ib) == ib.compose(ia), "integrals-commute", jwit);
        }
    }
    c.R.samples = c.P.samples;
}

void suite_multiplication_rep(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra = random_algebra(c.rng, 2, 4);
        KMeasure mu = random_kmeasure(c.rng, algebra, c.P.p, c.P.precision, 0.25);
        if (mu.is_zero()) {
            bool rejected = false;
            try {
                multiplication_rep(mu);
            } catch (const InputError&) {
                rejected = true;
            }
            c.expect(rejected, "zero-measure-rejected");
            continue;
        }
        MultiplicationRep m = multiplication_rep(mu);
        auto wit = [&] { return Json{{"mu", kmeasure_to_json(mu)}}; };

        for (std::size_t pos = 0; pos < m.kept_atoms.size(); ++pos)
            c.expect(m.weight(pos) == n_mu_weight(mu, m.kept_atoms[pos]),
                     "weights-are-n-mu", wit);
        for (auto dropped : m.dropped_atoms)
            c.expect(mu.atom_value(dropped).is_zero(), "dropped-atoms-are-null", wit);

        // spectral measure of the representation is multiplication by Ch_W
        ProjectionValuedMeasure p = pvm_from_rep(m.rep);
        for (std::size_t a = 0; a < algebra->atom_count() && c.ok(); ++a) {
            std::vector<PadicScalar> sel(m.kept_atoms.size(), m.h->scalar_zero());
            for (std::size_t pos = 0; pos < m.kept_atoms.size(); ++pos)
                if (m.kept_atoms[pos] == a) sel[pos] = m.h->scalar_one();
            c.expect(p.atom_projector(a) == Operator::diagonal(m.h, sel),
                     "spectral-measure-is-char-multiplication", wit);
        }
        Vector f = random_vector(c.rng, m.h);
        StepFunction a_hat = random_step(c.rng, algebra, c.P.p, c.P.precision);
        Operator t_a = m.rep.apply(a_hat);
        c.expect(vector_norm(t_a.apply(f)) <= a_hat.sup_norm() * vector_norm(f),
                 "multiplication-bound", wit);
        // P(W) f = Ch_W f on a random set and vector
        ClopenSet w = random_set(c, algebra);
        Vector pf = p.eval(w).apply(f);
        for (std::size_t pos = 0; pos < m.kept_atoms.size() && c.ok(); ++pos) {
            PadicScalar expected = w.contains_atom(m.kept_atoms[pos])
                                       ? f[pos]
                                       : m.h->scalar_zero();
            c.expect(pf[pos] == expected, "char-action", wit);
        }
    }
    c.R.samples = c.P.samples;
}

void suite_faithfulness(Ctx& c) {
    // exhaustive over the nonempty keep-patterns of three atoms
    AlgebraPtr algebra3 = ClopenAlgebra::finite({"a", "b", "c"});
    for (std::size_t pattern = 1; pattern < 8 && c.ok(); ++pattern) {
        IndexSubset kept;
        for (std::size_t i = 0; i < 3; ++i)
            if (pattern & (std::size_t{1} << i)) kept.push_back(i);
        SpacePtr h = WeightedSpace::orthonormal(c.P.p, c.P.precision, kept.size());
        std::vector<Operator> table;
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<PadicScalar> sel(kept.size(), h->scalar_zero());
            for (std::size_t pos = 0; pos < kept.size(); ++pos)
                if (kept[pos] == i) sel[pos] = h->scalar_one();
            table.push_back(Operator::diagonal(h, sel));
        }
        FiniteRepresentation t(algebra3, h, table);
        auto wit = [&] { return Json{{"kept", kept}}; };
        c.expect(faithfulness(t) == (kept.size() == 3), "faithful-iff-full-support",
                 wit);
        c.expect(pvm_from_rep(t).support() == ClopenSet(algebra3, kept),
                 "support-is-kept-atoms", wit);
        // zeroed atoms are genuine kernel elements
        for (std::size_t i = 0; i < 3; ++i) {
            if (subset_contains(kept, i)) continue;
            StepFunction ch = StepFunction::characteristic(
                ClopenSet(algebra3, {i}), c.P.p, c.P.precision);
            c.expect(t.apply(ch).is_zero(), "zeroed-atom-in-kernel", wit);
        }
    }

    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        AlgebraPtr algebra;
        ProjectionValuedMeasure p = sample_pvm(c, &algebra);
        FiniteRepresentation t = rep_from_pvm(p);
        bool no_null_atom = true;
        for (std::size_t i = 0; i < algebra->atom_count(); ++i)
            if (p.atom_projector(i).is_zero()) no_null_atom = false;
        c.expect(faithfulness(t) == no_null_atom, "faithful-iff-full-support",
                 [&] { return Json{{"pvm", pvm_to_json(p)}}; });
    }
    c.R.samples = c.P.samples;
}

void suite_nilpotent(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = WeightedSpace::orthonormal(c.P.p, c.P.precision, c.dim(2, 8));
        std::size_t n = sp->dim();
        std::vector<PadicScalar> entries(n * n, sp->scalar_zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                entries[i * n + j] = random_scalar(c.rng, c.P.p, c.P.precision, -1, 1, 0.3);
        Operator u(sp, std::move(entries));
        auto wit = [&] { return op_witness(u); };

        Operator power = u;
        for (std::size_t k = 1; k <= n && c.ok(); ++k) {
            for (const auto& d : power.diagonal_entries())
                c.expect(d.is_zero(), "diagonal-image-vanishes", wit);
            if (k == n) c.expect(power.is_zero(), "nilpotent-at-dimension", wit);
            power = power.compose(u);
        }
    }
    c.R.samples = c.P.samples;
}

void suite_orthogonal_family(Ctx& c) {
    // (1,0) and (1,1) are orthonormal in K^2
    {
        SpacePtr k2 = WeightedSpace::orthonormal(c.P.p, c.P.precision, 2);
        Vector v1(k2, {k2->scalar_one(), k2->scalar_zero()});
        Vector v2(k2, {k2->scalar_one(), k2->scalar_one()});
        c.expect(vector_norm(v1) == LogNorm::one() && vector_norm(v2) == LogNorm::one(),
                 "unit-vectors");
        c.expect(is_orthogonal_family({v1, v2}, c.P.seed), "pair-is-orthogonal");
    }
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 2, c.dim(2, 6));
        // scaled sub-basis stays orthogonal
        std::vector<Vector> family;
        for (std::size_t i = 0; i < sp->dim(); ++i)
            if (c.rng.chance(0.7))
                family.push_back(Vector::basis(sp, i).scaled(
                    random_nonzero(c.rng, c.P.p, c.P.precision)));
        if (!family.empty())
            c.expect(is_orthogonal_family(family, c.P.seed ^ s),
                     "scaled-basis-orthogonal",
                     [&] { return Json{{"space", space_to_json(*sp)}}; });

        Vector x = random_vector(c.rng, sp);
        if (!x.is_zero())
            c.expect(!is_orthogonal_family({x, x}, c.P.seed ^ s),
                     "repeated-vector-not-orthogonal",
                     [&] { return Json{{"x", vector_to_json(x)}}; });
    }
    c.R.samples = c.P.samples;
}

void suite_json_roundtrip(Ctx& c) {
    for (std::uint64_t s = 0; s < c.P.samples && c.ok(); ++s) {
        SpacePtr sp = random_space(c.rng, c.P.p, c.P.precision, 2, c.dim(2, 6));
        auto check = [&](const char* what, const Json& j, auto parse, auto serialize) {
            auto obj = parse(j);
            Json again = serialize(obj);
            c.expect(again.dump() == j.dump(), std::string("byte-stable-") + what,
                     [&] { return Json{{"json", j}}; });
        };

        PadicScalar x = random_scalar(c.rng, c.P.p, c.P.precision);
        c.expect(scalar_from_json(scalar_to_json(x)) == x, "scalar-identity");
        check("scalar", scalar_to_json(x), scalar_from_json, scalar_to_json);

        Vector v = random_vector(c.rng, sp);
        c.expect(vector_from_json(vector_to_json(v)) == v, "vector-identity");

        Operator u = random_operator(c.rng, sp);
        c.expect(operator_from_json(operator_to_json(u)) == u, "operator-identity");
        check("operator", operator_to_json(u), operator_from_json, operator_to_json);

        BElement b = random_b_element(c.rng, sp);
        c.expect(belement_from_json(belement_to_json(b)) == b, "belement-identity");

        AlgebraPtr algebra = random_algebra(c.rng, 2, 4);
        c.expect(*algebra_from_json(algebra_to_json(*algebra)) == *algebra,
                 "algebra-identity");

        SpacePtr on = WeightedSpace::orthonormal(c.P.p, c.P.precision, c.dim(2, 4));
        ProjectionValuedMeasure p =
            random_pvm(c.rng, algebra, on, c.rng.chance(0.5));
        c.expect(pvm_from_json(pvm_to_json(p)) == p, "pvm-identity");
        check("pvm", pvm_to_json(p), pvm_from_json, pvm_to_json);

        StepFunction f = random_step(c.rng, algebra, c.P.p, c.P.precision);
        c.expect(step_from_json(step_to_json(f)) == f, "step-identity");

        KMeasure mu = random_kmeasure(c.rng, algebra, c.P.p, c.P.precision);
        bool mu_ok = true;
        KMeasure mu2 = kmeasure_from_json(kmeasure_to_json(mu));
        for (std::size_t i = 0; i < algebra->atom_count(); ++i)
            if (mu2.atom_value(i) != mu.atom_value(i)) mu_ok = false;
        c.expect(mu_ok, "kmeasure-identity");

        FiniteRepresentation t = rep_from_pvm(p);
        c.expect(rep_from_json(rep_to_json(t)) == t, "rep-identity");

        Operator d = random_diagonal(c.rng, on, true);
        SpectralDecomposition dec = spectral_decompose_diagonal(d);
        SpectralDecomposition dec2 = decomposition_from_json(decomposition_to_json(dec));
        c.expect(dec2.pvm == dec.pvm && dec2.support.size() == dec.support.size(),
                 "decomposition-identity");
    }
    c.R.samples = c.P.samples;
}

struct SuiteDef {
    const char* id;
    void (*fn)(Ctx&);
};

const SuiteDef kSuites[] = {
    {"cor-3.6", suite_adjoint_algebra},
    {"cor-4.11.1", suite_gelfand},
    {"cor-5.8", suite_projection_idempotent},
    {"hensel-sqrt", suite_hensel},
    {"json-roundtrip", suite_json_roundtrip},
    {"lemma-4.4", suite_b_norm},
    {"lemma-4.5", suite_b_square},
    {"lemma-4.8", suite_b_pi_adjoint},
    {"lemma-5.7", suite_intersection_product},
    {"note-2.3-counterexample", suite_counterexample},
    {"note-4.6-diag", suite_diagonal_square},
    {"note-4.6-pi", suite_pi_structure},
    {"note-5.19-orthogonal", suite_orthogonal_family},
    {"polarization", suite_polarization},
    {"prop-4.1.1", suite_projectors},
    {"prop-4.10", suite_characters},
    {"prop-5.1-I", suite_integral_nullsets},
    {"prop-5.1-II", suite_integral_linear},
    {"prop-5.1-III", suite_integral_multiplicative},
    {"prop-5.1-V", suite_integral_isometry},
    {"prop-5.1-VI", suite_integral_characteristic},
    {"prop-5.1-VII", suite_scalar_measure},
    {"prop-5.1-VIII", suite_integral_commutes},
    {"prop-5.14", suite_eigenrange},
    {"prop-5.16.1", suite_faithfulness},
    {"sect-1-valuation", suite_valuation},
    {"sect-3.1-fomega", suite_fomega},
    {"sect-3.4-opnorm", suite_opnorm},
    {"sect-5.14-mu-norms", suite_measure_norms},
    {"sect-5.18-nilpotent", suite_nilpotent},
    {"thm-3.5-adjoint", suite_adjoint_identity},
    {"thm-5.12-roundtrip", suite_stone_roundtrip},
    {"thm-5.15.1", suite_multiplication_rep},
    {"thm-5.17.1-diag", suite_spectral_theorem},
};

}  // namespace

Json suite_report_to_json(const SuiteReport& r, bool include_timing) {
    Json j{{"suite", r.suite}, {"seed", r.seed}, {"samples", r.samples},
           {"pass", r.pass}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (include_timing) j["millis"] = r.millis;
    return j;
}

std::vector<std::string> suite_ids() {
    std::vector<std::string> ids;
    for (const auto& s : kSuites) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool has_suite(const std::string& id) {
    for (const auto& s : kSuites)
        if (id == s.id) return true;
    return false;
}

SuiteReport run_suite(const std::string& id, const SuiteParams& params) {
    for (const auto& s : kSuites) {
        if (id != s.id) continue;
        SuiteReport report;
        report.suite = id;
        report.seed = params.seed;
        report.samples = params.samples;
        Ctx ctx(params, report);
        auto start = std::chrono::steady_clock::now();
        s.fn(ctx);
        report.millis = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        return report;
    }
    throw InputError("unknown suite: " + id);
}

std::vector<SuiteReport> run_all_suites(const SuiteParams& params) {
    std::vector<SuiteReport> reports;
    for (const auto& id : suite_ids()) reports.push_back(run_suite(id, params));
    return reports;
}

}  // namespace padspec
