#include "qmstab/feasibility.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace qmstab {
namespace {

Rational q(long long p, long long d = 1) { return Rational(BigInt(p), BigInt(d)); }

std::vector<Rational> row(std::initializer_list<long long> xs) {
    std::vector<Rational> r;
    for (auto x : xs) r.push_back(q(x));
    return r;
}

// ---------------------------------------------------------------------------
// Oracles, independent of the simplex kernel.

// Solves the square system A x = b by Gauss-Jordan; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Vertex enumeration for {a.x >= b rows, x >= 0}: the polyhedron is pointed,
// so it is nonempty iff some n tight constraints meet in a feasible point.
bool vertex_oracle_feasible(const LinearSystem& sys) {
    const std::size_t n = sys.nvars();
    std::vector<std::pair<std::vector<Rational>, Rational>> cons;
    for (const auto& r : sys.rows) cons.emplace_back(r.coeffs, r.rhs);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        cons.emplace_back(e, Rational(0));
    }
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (pick.size() == n) {
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            for (auto k : pick) {
                a.push_back(cons[k].first);
                b.push_back(cons[k].second);
            }
            auto x = solve_square(a, b);
            if (!x) return false;
            for (const auto& [c, rhs] : cons) {
                Rational lhs = 0;
                for (std::size_t i = 0; i < n; ++i) lhs += c[i] * (*x)[i];
                if (lhs < rhs) return false;
            }
            return true;
        }
        for (std::size_t k = start; k < cons.size(); ++k) {
            pick.push_back(k);
            if (rec(k + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

// Fourier-Motzkin elimination, tracking strictness.
bool fm_oracle_feasible(const LinearSystem& sys, bool nonneg) {
    struct Ineq {
        std::vector<Rational> a;
        bool strict;
        Rational b;
    };
    const std::size_t n = sys.nvars();
    std::vector<Ineq> cur;
    for (const auto& r : sys.rows) cur.push_back({r.coeffs, r.rel == Relation::Greater, r.rhs});
    if (nonneg)
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> e(n, Rational(0));
            e[i] = 1;
            cur.push_back({e, false, Rational(0)});
        }
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Ineq> pos, neg, next;
        for (auto& in : cur) {
            if (in.a[v] > 0)
                pos.push_back(in);
            else if (in.a[v] < 0)
                neg.push_back(in);
            else
                next.push_back(in);
        }
        for (const auto& p : pos)
            for (const auto& m : neg) {
                const Rational lp = -m.a[v], lm = p.a[v];
                Ineq c{std::vector<Rational>(n), p.strict || m.strict, lp * p.b + lm * m.b};
                for (std::size_t i = 0; i < n; ++i) c.a[i] = lp * p.a[i] + lm * m.a[i];
                next.push_back(std::move(c));
            }
        cur = std::move(next);
    }
    for (const auto& in : cur)
        if (in.strict ? !(0 > in.b) : !(0 >= in.b)) return false;
    return true;
}

// |delta|_inf <= bound, delta != 0, delta.z <= 0 for all z.
std::optional<std::vector<std::int64_t>> brute_force_farkas(const std::vector<std::vector<std::int64_t>>& zs,
                                                            std::int64_t bound) {
    const std::size_t n = zs.front().size();
    std::vector<std::int64_t> d(n, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < n && d[i] == bound) d[i++] = 0;
        if (i == n) return std::nullopt;
        ++d[i];
        bool ok = true;
        for (const auto& z : zs) {
            std::int64_t dot = 0;
            for (std::size_t k = 0; k < n; ++k) dot += d[k] * z[k];
            if (dot > 0) {
                ok = false;
                break;
            }
        }
        if (ok) return d;
    }
}

// ---------------------------------------------------------------------------

TEST(RationalFeasible, Examples) {
    LinearSystem a;
    a.add(row({1, 0}), Relation::GreaterEqual, 0);
    a.add(row({0, 1}), Relation::GreaterEqual, 0);
    a.add(row({-1, 1}), Relation::GreaterEqual, 1);
    a.add(row({2, -1}), Relation::GreaterEqual, 1);
    EXPECT_TRUE(a.satisfied_by(row({2, 3})));
    auto x = rational_feasible(a, false);
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(a.satisfied_by(*x));

    LinearSystem b;
    b.add(row({1}), Relation::GreaterEqual, 1);
    b.add(row({-1}), Relation::GreaterEqual, 0);
    EXPECT_FALSE(rational_feasible(b, false).has_value());

    LinearSystem c;
    c.add(row({1}), Relation::Greater, 0);
    auto y = rational_feasible(c, false);
    ASSERT_TRUE(y.has_value());
    EXPECT_GT((*y)[0], 0);

    EXPECT_THROW(rational_feasible(LinearSystem{}, false), DomainError);
}

TEST(RationalFeasible, StrictVersusNonStrict) {
    // x >= 0, -x >= 0 is feasible (x = 0) but x > 0, -x >= 0 is not.
    LinearSystem weak;
    weak.add(row({1}), Relation::GreaterEqual, 0);
    weak.add(row({-1}), Relation::GreaterEqual, 0);
    EXPECT_TRUE(rational_feasible(weak, false).has_value());
    LinearSystem strict;
    strict.add(row({1}), Relation::Greater, 0);
    strict.add(row({-1}), Relation::GreaterEqual, 0);
    EXPECT_FALSE(rational_feasible(strict, false).has_value());
    // Free variables may go negative.
    LinearSystem neg;
    neg.add(row({-1}), Relation::GreaterEqual, 3);
    EXPECT_TRUE(rational_feasible(neg, false).has_value());
    EXPECT_FALSE(rational_feasible(neg, true).has_value());
}

TEST(RationalFeasible, AgreesWithVertexEnumeration) {
    testing::Gen gen(31);
    int feasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        const std::size_t m = static_cast<std::size_t>(gen.integer(1, 4));
        LinearSystem sys;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> a;
            for (std::size_t j = 0; j < n; ++j) a.push_back(q(gen.integer(-3, 3)));
            sys.add(std::move(a), Relation::GreaterEqual, q(gen.integer(-3, 3)));
        }
        auto x = rational_feasible(sys, true);
        const bool oracle = vertex_oracle_feasible(sys);
        EXPECT_EQ(x.has_value(), oracle) << "trial " << trial;
        if (x) {
            ++feasible;
            EXPECT_TRUE(sys.satisfied_by(*x));
        }
    }
    EXPECT_GT(feasible, 30);
    EXPECT_LT(feasible, 290);
}

TEST(RationalFeasible, AgreesWithFourierMotzkinIncludingStrictRows) {
    testing::Gen gen(32);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        const std::size_t m = static_cast<std::size_t>(gen.integer(1, 5));
        const bool nonneg = gen.integer(0, 1) == 1;
        LinearSystem sys;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> a;
            for (std::size_t j = 0; j < n; ++j) a.push_back(q(gen.integer(-2, 2)));
            sys.add(std::move(a), gen.integer(0, 1) ? Relation::Greater : Relation::GreaterEqual,
                    q(gen.integer(-2, 2)));
        }
        auto x = rational_feasible(sys, nonneg);
        EXPECT_EQ(x.has_value(), fm_oracle_feasible(sys, nonneg)) << "trial " << trial;
        if (x) {
            EXPECT_TRUE(sys.satisfied_by(*x));
        }
    }
}

TEST(PositiveCombination, Examples) {
    auto a = positive_combination({ZVector{-1, 2}, ZVector{1, -1}});
    ASSERT_TRUE(std::holds_alternative<Multipliers>(a));
    const auto& r = std::get<Multipliers>(a).r;
    EXPECT_TRUE(verify_multipliers({ZVector{-1, 2}, ZVector{1, -1}}, r));
    EXPECT_TRUE(verify_multipliers({ZVector{-1, 2}, ZVector{1, -1}}, {BigInt(2), BigInt(3)}));

    auto b = positive_combination({ZVector{1, 0}, ZVector{0, 1}});
    ASSERT_TRUE(std::holds_alternative<Multipliers>(b));
    EXPECT_EQ(std::get<Multipliers>(b).r, (std::vector<BigInt>{1, 1}));

    auto c = positive_combination({ZVector{1, -1}, ZVector{-1, 1}});
    ASSERT_TRUE(std::holds_alternative<FarkasWitness>(c));
    EXPECT_EQ(std::get<FarkasWitness>(c).delta, (ExponentVector{1, 1}));

    auto d = positive_combination({ZVector{1, 0}});
    ASSERT_TRUE(std::holds_alternative<FarkasWitness>(d));
    EXPECT_EQ(std::get<FarkasWitness>(d).delta, (ExponentVector{0, 1}));

    EXPECT_THROW(positive_combination({ZVector{1, 0}, ZVector{1}}), DimensionError);
    EXPECT_THROW(positive_combination({}), DomainError);
}

TEST(PositiveCombination, ExclusivityAgainstBruteForce) {
    testing::Gen gen(33);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
        const std::size_t m = static_cast<std::size_t>(gen.integer(1, 4));
        std::vector<ZVector> zs;
        std::vector<std::vector<std::int64_t>> raw;
        for (std::size_t j = 0; j < m; ++j) {
            raw.push_back(gen.int_vector(n, -5, 5));
            zs.emplace_back(raw.back());
        }
        auto outcome = positive_combination(zs);
        auto brute = brute_force_farkas(raw, 10);
        if (auto* mult = std::get_if<Multipliers>(&outcome)) {
            EXPECT_TRUE(verify_multipliers(zs, mult->r));
            EXPECT_FALSE(brute.has_value()) << "trial " << trial;
        } else {
            EXPECT_TRUE(verify_farkas(zs, std::get<FarkasWitness>(outcome).delta));
            EXPECT_TRUE(brute.has_value()) << "trial " << trial;
        }
    }
}

TEST(PositiveCombination, ScalingSoundness) {
    // Any rational solution of sum r_j z_j >= 1, r >= 0 stays strictly
    // positive after scaling to the primitive integer vector.
    testing::Gen gen(34);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ZVector> zs{ZVector(gen.int_vector(2, -4, 4)), ZVector(gen.int_vector(2, -4, 4))};
        std::vector<Rational> r{gen.rational(6, 7), gen.rational(6, 7)};
        for (auto& x : r) x = x < 0 ? Rational(-x) : x;
        bool at_least_one = true;
        for (std::size_t i = 0; i < 2; ++i) {
            Rational s = r[0] * zs[0][i] + r[1] * zs[1][i];
            at_least_one = at_least_one && s >= 1;
        }
        if (!at_least_one) continue;
        EXPECT_TRUE(verify_multipliers(zs, primitive_integer_vector(r)));
    }
}

TEST(BoundedMonomials, Examples) {
    EXPECT_TRUE(std::holds_alternative<OnlyConstants>(bounded_monomials({ZVector{-1, 2}, ZVector{1, -1}})));
    auto w = bounded_monomials({ZVector{1, -1}, ZVector{-1, 1}});
    ASSERT_TRUE(std::holds_alternative<BoundedMonomial>(w));
    EXPECT_EQ(std::get<BoundedMonomial>(w).delta, (ExponentVector{1, 1}));
    auto c = bounded_monomials({ZVector{1, 1}});
    ASSERT_TRUE(std::holds_alternative<OnlyConstants>(c));
    EXPECT_EQ(std::get<OnlyConstants>(c).r, (std::vector<BigInt>{1}));
}

TEST(Covering, Examples) {
    auto a = covering_check(ZVector{1, 1}, {ZVector{1, 0}, ZVector{0, 1}}, 16);
    ASSERT_EQ(a.status, CoveringResult::Status::Covered);
    EXPECT_EQ(a.certificate->r, (std::vector<std::int64_t>{1, 1}));
    EXPECT_EQ(a.certificate->t, (std::vector<std::int64_t>{1, 1}));

    auto b = covering_check(ZVector{1, 1}, {ZVector{0, 1}, ZVector{1, -1}}, 16);
    ASSERT_EQ(b.status, CoveringResult::Status::Covered);
    EXPECT_EQ(b.certificate->r, (std::vector<std::int64_t>{2, 1}));
    EXPECT_EQ(b.certificate->t, (std::vector<std::int64_t>{1, 1}));

    auto c = covering_check(ZVector{2, 2}, {ZVector{1, 0}}, 16);
    EXPECT_EQ(c.status, CoveringResult::Status::NotCovered);
    EXPECT_FALSE(c.certificate.has_value());

    EXPECT_THROW(covering_check(ZVector{1, 1}, {ZVector{1, 0}}, 0), DomainError);
    EXPECT_THROW(covering_check(ZVector{1, 1, 1}, {ZVector{1, 0}}, 3), DimensionError);
}

TEST(Covering, UnknownWhenBoundTooSmall) {
    // r = (3) is needed but the bound is 2; the relaxation is feasible.
    auto r = covering_check(ZVector{3, 3}, {ZVector{1, 1}}, 2);
    EXPECT_EQ(r.status, CoveringResult::Status::Unknown);
    // t must be 2 here: 2*(1,1) >= (2,1).
    auto t = covering_check(ZVector{1, 1}, {ZVector{2, 1}}, 1);
    EXPECT_EQ(t.status, CoveringResult::Status::Unknown);
    EXPECT_EQ(covering_check(ZVector{1, 1}, {ZVector{2, 1}}, 2).status, CoveringResult::Status::Covered);
    // t z >= z^(j) with z = (1,-1) and z^(j) = (1,1) has no solution at all.
    EXPECT_EQ(covering_check(ZVector{1, -1}, {ZVector{1, 1}}, 5).status, CoveringResult::Status::NotCovered);
}

TEST(Covering, LexicographicallySmallestAgainstBruteForce) {
    testing::Gen gen(35);
    const std::int64_t bound = 4;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.integer(1, 3));
        ZVector z(gen.int_vector(2, -2, 3));
        std::vector<ZVector> zs;
        for (std::size_t j = 0; j < m; ++j) zs.emplace_back(gen.int_vector(2, -3, 3));
        auto result = covering_check(z, zs, bound);

        // Brute force: first r in lexicographic order with sum r_j z_j >= z.
        std::optional<std::vector<std::int64_t>> first;
        std::vector<std::int64_t> r(m, 0);
        for (;;) {
            bool ok = true;
            for (std::size_t i = 0; i < 2; ++i) {
                std::int64_t s = 0;
                for (std::size_t j = 0; j < m; ++j) s += r[j] * zs[j][i];
                ok = ok && s >= z[i];
            }
            if (ok) {
                first = r;
                break;
            }
            std::size_t k = m;
            while (k > 0 && r[k - 1] == bound) r[--k] = 0;
            if (k == 0) break;
            ++r[k - 1];
        }
        bool every_t = true;
        for (const auto& zj : zs) {
            bool some = false;
            for (std::int64_t t = 0; t <= bound && !some; ++t) some = t * z[0] >= zj[0] && t * z[1] >= zj[1];
            every_t = every_t && some;
        }
        if (result.status == CoveringResult::Status::Covered) {
            ASSERT_TRUE(first.has_value());
            EXPECT_TRUE(every_t);
            EXPECT_EQ(result.certificate->r, *first);
            EXPECT_TRUE(verify_covering(z, zs, *result.certificate));
        } else if (result.status == CoveringResult::Status::NotCovered) {
            EXPECT_FALSE(first.has_value() && every_t);
        }
    }
}

TEST(Covering, VerifierRejectsBrokenCertificates) {
    CoveringCertificate good{{2, 1}, {1, 1}};
    std::vector<ZVector> zs{ZVector{0, 1}, ZVector{1, -1}};
    EXPECT_TRUE(verify_covering(ZVector{1, 1}, zs, good));
    EXPECT_FALSE(verify_covering(ZVector{1, 1}, zs, {{1, 1}, {1, 1}}));
    EXPECT_FALSE(verify_covering(ZVector{1, 1}, zs, {{2, 1}, {0, 1}}));
    EXPECT_FALSE(verify_covering(ZVector{1, 1}, zs, {{2, 1}, {1}}));
}

}  // namespace
}  // namespace qmstab
