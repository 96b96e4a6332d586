#include "qmstab/grading.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace qmstab {
namespace {

const VariableContext xy({"x", "y"});
Polynomial P(const char* s) { return parse_polynomial(s, xy); }

// Independent oracle: max of z.delta over the support, by plain loops.
std::int64_t oracle_degree(const Polynomial& f, const std::vector<std::int64_t>& z) {
    std::int64_t best = INT64_MIN;
    for (const auto& [e, c] : f.terms()) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < z.size(); ++i) d += z[i] * static_cast<std::int64_t>(e[i]);
        best = std::max(best, d);
    }
    return best;
}

TEST(ZDegree, Examples) {
    EXPECT_EQ(z_degree(P("y - x^2"), ZVector{1, 2}).value(), 2);
    EXPECT_EQ(z_degree(P("1"), ZVector{3, -7}).value(), 0);
    EXPECT_EQ(z_degree(P("1 - x^2*y"), ZVector{-1, 2}).value(), 0);
    EXPECT_EQ(oracle_degree(P("1 - x^2*y"), {-1, 2}), 0);
    EXPECT_TRUE(z_degree(Polynomial(2), ZVector{1, 1}).is_bottom());
    EXPECT_THROW(z_degree(P("x"), ZVector{1, 1, 1}), DimensionError);
}

TEST(ZDegree, BottomIsAbsorbing) {
    ZDegree three(3), bottom;
    EXPECT_TRUE((three + bottom).is_bottom());
    EXPECT_EQ((three + three).value(), 6);
}

TEST(ZVector, RejectsZeroAndParses) {
    EXPECT_THROW(ZVector({0, 0}), DomainError);
    EXPECT_EQ(parse_zvector("1,-1"), (ZVector{1, -1}));
    EXPECT_EQ(parse_zvector(" -1 , 2"), (ZVector{-1, 2}));
    EXPECT_THROW(parse_zvector("1,,2"), DomainError);
    EXPECT_THROW(parse_zvector("1,a"), DomainError);
    EXPECT_THROW(parse_zvector("0,0"), DomainError);
}

TEST(ZMaxPart, Examples) {
    EXPECT_EQ(z_max_part(P("y - x^2"), ZVector{1, 2}), P("y - x^2"));
    EXPECT_EQ(z_max_part(P("1 - x*y"), ZVector{1, 1}), P("-x*y"));
    EXPECT_EQ(z_max_part(P("x"), ZVector{1, 0}), P("x"));
    EXPECT_THROW(z_max_part(Polynomial(2), ZVector{1, 0}), DomainError);
}

TEST(ZDecomposition, Examples) {
    auto d = z_homogeneous_decomposition(P("1 - x^2*y"), ZVector{1, 1});
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0].degree, 0);
    EXPECT_EQ(d[0].part, P("1"));
    EXPECT_EQ(d[1].degree, 3);
    EXPECT_EQ(d[1].part, P("-x^2*y"));

    auto single = z_homogeneous_decomposition(P("y - x^2"), ZVector{1, 2});
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].degree, 2);

    auto two = z_homogeneous_decomposition(P("x + 1"), ZVector{1, 0});
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].part, P("1"));
    EXPECT_EQ(two[1].part, P("x"));
}

TEST(ZGradingProperties, DegreeLawsOnRandomPairs) {
    testing::Gen gen(21);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        ZVector z(gen.int_vector(n, -3, 3));
        auto f = gen.nonzero_polynomial(n), g = gen.nonzero_polynomial(n);
        const auto df = z_degree(f, z).value(), dg = z_degree(g, z).value();
        EXPECT_EQ(df, oracle_degree(f, z.entries()));
        EXPECT_EQ(z_degree(f * g, z).value(), df + dg);
        EXPECT_EQ(z_max_part(f * g, z), z_max_part(f, z) * z_max_part(g, z));
        EXPECT_EQ(z_degree(f * f + g * g, z).value(), 2 * std::max(df, dg));
    }
}

TEST(ZGradingProperties, DecompositionRoundTrip) {
    testing::Gen gen(22);
    for (int i = 0; i < 200; ++i) {
        ZVector z(gen.int_vector(2, -2, 2));
        auto f = gen.nonzero_polynomial(2, 6, 4);
        auto parts = z_homogeneous_decomposition(f, z);
        Polynomial sum(2);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k > 0) {
                EXPECT_LT(parts[k - 1].degree, parts[k].degree);
            }
            EXPECT_FALSE(parts[k].part.is_zero());
            EXPECT_EQ(z_max_part(parts[k].part, z), parts[k].part);
            sum += parts[k].part;
        }
        EXPECT_EQ(sum, f);
        EXPECT_EQ(parts.back().part, z_max_part(f, z));
    }
}

TEST(TermOrder, LeadingTermExamples) {
    auto deglex = parse_term_order("deglex:x,y", xy);
    auto lex = parse_term_order("lex:x,y", xy);
    auto lt = term_order_leading(P("1 - x*y"), deglex);
    EXPECT_EQ(lt.exponent, (ExponentVector{1, 1}));
    EXPECT_EQ(lt.coefficient, -1);
    lt = term_order_leading(P("x"), deglex);
    EXPECT_EQ(lt.exponent, (ExponentVector{1, 0}));
    EXPECT_EQ(lt.coefficient, 1);
    EXPECT_EQ(term_order_leading(P("x^2 + x*y^2"), lex).exponent, (ExponentVector{2, 0}));
    EXPECT_EQ(term_order_leading(P("x^2 + x*y^2"), deglex).exponent, (ExponentVector{1, 2}));
    EXPECT_THROW(term_order_leading(Polynomial(2), deglex), DomainError);
}

TEST(TermOrder, CompareExamples) {
    auto deglex = TermOrder::deglex(2);
    auto lex = TermOrder::lex(2);
    EXPECT_EQ(compare_exponents(deglex, {1, 1}, {2, 0}), std::strong_ordering::less);
    EXPECT_EQ(compare_exponents(deglex, {0, 0}, {0, 0}), std::strong_ordering::equal);
    EXPECT_EQ(compare_exponents(lex, {1, 0}, {0, 5}), std::strong_ordering::greater);
    EXPECT_EQ(compare_exponents(deglex, {1, 0}, {0, 5}), std::strong_ordering::less);
    // Priority y > x flips the tie-break.
    auto yx = parse_term_order("lex:y,x", xy);
    EXPECT_EQ(compare_exponents(yx, {1, 0}, {0, 5}), std::strong_ordering::less);
    EXPECT_THROW(compare_exponents(lex, {1, 0}, {1, 0, 0}), DimensionError);
}

TEST(TermOrder, ParseErrors) {
    EXPECT_THROW(parse_term_order("deglex:x", xy), DomainError);
    EXPECT_THROW(parse_term_order("grevlex:x,y", xy), DomainError);
    EXPECT_THROW(parse_term_order("lex:x,z", xy), DomainError);
    EXPECT_THROW(parse_term_order("lex:x,x", xy), DomainError);
    EXPECT_EQ(to_string(parse_term_order("lex:y,x", xy), xy), "lex:y,x");
}

TEST(TermOrder, TranslationInvarianceAndTotality) {
    testing::Gen gen(23);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 3;
        std::vector<std::size_t> prio{0, 1, 2};
        std::shuffle(prio.begin(), prio.end(), gen.engine());
        TermOrder ord(i % 2 ? TermOrder::Kind::Lex : TermOrder::Kind::DegLex, prio);
        auto a = gen.exponent(n, 4), b = gen.exponent(n, 4), c = gen.exponent(n, 4);
        EXPECT_EQ(compare_exponents(ord, a, b), compare_exponents(ord, a + c, b + c));
        EXPECT_EQ(compare_exponents(ord, a, b) == 0, a == b);
        EXPECT_EQ(compare_exponents(ord, a, b), 0 <=> compare_exponents(ord, b, a));
    }
}

TEST(TermOrder, LeadingTermIsMultiplicative) {
    testing::Gen gen(24);
    auto ord = TermOrder::deglex(2);
    for (int i = 0; i < 200; ++i) {
        auto f = gen.nonzero_polynomial(2), g = gen.nonzero_polynomial(2);
        auto lf = term_order_leading(f, ord), lg = term_order_leading(g, ord), lfg = term_order_leading(f * g, ord);
        EXPECT_EQ(lfg.exponent, lf.exponent + lg.exponent);
        EXPECT_EQ(lfg.coefficient, lf.coefficient * lg.coefficient);
        EXPECT_EQ(term_order_degree(f * g, ord), term_order_degree(f, ord) + term_order_degree(g, ord));
    }
}

TEST(Residues, ModTwo) {
    EXPECT_EQ(residue_mod_two(std::int64_t{-3}), (Residue{1}));
    EXPECT_EQ(residue_mod_two(std::int64_t{4}), (Residue{0}));
    EXPECT_EQ(residue_mod_two(ExponentVector{3, 2}), (Residue{1, 0}));
    EXPECT_EQ(degree_residue(P("1 - x*y"), TermOrder::deglex(2)), (Residue{1, 1}));
    EXPECT_EQ(degree_residue(P("1 - x*y"), ZVector{1, 1}), (Residue{0}));
    EXPECT_EQ(max_part(P("1 - x*y"), TermOrder::deglex(2)), P("-x*y"));
}

}  // namespace
}  // namespace qmstab
