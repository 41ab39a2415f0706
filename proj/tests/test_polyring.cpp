#include <superdual/polyring.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace superdual;

namespace {

Vars xyu() { return make_vars({{"x", 2}, {"y", 1}, {"u", 1}, {"z", 1, true}}); }

LaurentSeries var(const Vars &v, int family, int index, int power = 1) { return LaurentSeries::variable(v, {family, index}, power); }

LaurentSeries random_series(const Vars &vars, std::mt19937 &rng, int terms, bool laurent)
{
    std::uniform_int_distribution<int> expo(laurent ? -2 : 0, 3), coef(-5, 5), den(1, 3);
    LaurentSeries p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(vars->size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = vars->graded(i) ? std::abs(expo(rng)) : expo(rng);
        }
        p.add_term(e, make_rational(coef(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST(Polyring, MultiplicationExamples)
{
    const Vars v = xyu();
    const LaurentSeries one = LaurentSeries::one(v);
    const LaurentSeries x1 = var(v, 0, 0);
    EXPECT_EQ((one + x1) * (one - x1), one - x1 * x1);
    EXPECT_EQ(x1 * one, x1);
    const LaurentSeries yu = var(v, 1, 0) * var(v, 2, 0);
    EXPECT_EQ(mul(one + yu, one + yu, 2), one + yu * Rational(2));
}

TEST(Polyring, Rendering)
{
    const Vars v = xyu();
    const LaurentSeries p = var(v, 0, 0, 2) * var(v, 1, 0) * Rational(3) - var(v, 2, 0) * make_rational(1, 2);
    EXPECT_EQ(p.to_string(), "3*x1^2*y1 - 1/2*u1");
    EXPECT_EQ(var(v, 3, 0, -1).to_string(), "z1^-1");
    EXPECT_EQ((var(v, 0, 0) + var(v, 0, 1) * var(v, 0, 0) * var(v, 0, 0)).to_string(), "x1^2*x2 + x1");
}

TEST(Polyring, GeometricInverse)
{
    const Vars v = xyu();
    const LaurentSeries one = LaurentSeries::one(v);
    const LaurentSeries x1 = var(v, 0, 0);
    EXPECT_EQ(geometric_inverse(one - x1, 3), one + x1 + x1 * x1 + x1 * x1 * x1);
    const LaurentSeries xy = x1 * var(v, 1, 0);
    EXPECT_EQ(geometric_inverse(one - xy, 2), one + xy);
    EXPECT_EQ(geometric_inverse(one - x1, 0), one);
    EXPECT_THROW(geometric_inverse(one - var(v, 3, 0), 2), std::invalid_argument);
    EXPECT_THROW(geometric_inverse(x1, 2), std::invalid_argument);
}

TEST(Polyring, GeometricInverseIsTwoSided)
{
    const Vars v = xyu();
    const LaurentSeries one = LaurentSeries::one(v);
    const LaurentSeries factor = one - var(v, 0, 0) * var(v, 3, 0) - var(v, 1, 0) * var(v, 2, 0) * Rational(3);
    for (int cutoff = 0; cutoff <= 6; ++cutoff) {
        const LaurentSeries inv = geometric_inverse(factor, cutoff);
        EXPECT_EQ(mul(inv, factor, cutoff), one.truncated(cutoff));
        EXPECT_EQ(mul(factor, inv, cutoff), one.truncated(cutoff));
    }
}

TEST(Polyring, Specialize)
{
    const Vars v = make_vars({{"x", 1}, {"y", 1}});
    const LaurentSeries x1 = var(v, 0, 0), y1 = var(v, 1, 0);
    const LaurentSeries p = x1 * x1 + x1 * y1;
    EXPECT_EQ(evaluate_families(p, {0, 1}, 1), LaurentSeries::constant(v, 2));
    EXPECT_EQ(specialize(p, Substitution::identity(*v, *v)), p);
    const LaurentSeries inv = var(v, 0, 0, -1);
    Substitution s;
    s.set_value(0, 2);
    EXPECT_EQ(specialize(inv, s), LaurentSeries::constant(v, make_rational(1, 2)));
    Substitution zero;
    zero.set_value(0, 0);
    EXPECT_THROW(specialize(inv, zero), std::domain_error);
    EXPECT_THROW(specialize(p, Substitution()), std::invalid_argument);
}

TEST(Polyring, RenameIntoAnotherSet)
{
    const Vars src = make_vars({{"x", 2}});
    const Vars dst = make_vars({{"x", 2}, {"y", 1}});
    const LaurentSeries p = var(src, 0, 0) * var(src, 0, 1, 2);
    Substitution s = Substitution::identity(*src, *dst);
    s.rename(1, {1, 0});
    EXPECT_EQ(specialize(p, s, dst), var(dst, 0, 0) * var(dst, 1, 0, 2));
}

TEST(Polyring, RingAxiomsOnRandomOperands)
{
    std::mt19937 rng(20261017);
    const Vars v = xyu();
    std::uniform_int_distribution<int> size(0, 50);
    for (int trial = 0; trial < 25; ++trial) {
        const LaurentSeries a = random_series(v, rng, size(rng), true);
        const LaurentSeries b = random_series(v, rng, size(rng), true);
        const LaurentSeries c = random_series(v, rng, size(rng) / 5, true);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b - b, a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Polyring, TruncatedProductIsTruncationOfExactProduct)
{
    std::mt19937 rng(11);
    const Vars v = xyu();
    for (int trial = 0; trial < 25; ++trial) {
        const LaurentSeries a = random_series(v, rng, 12, true);
        const LaurentSeries b = random_series(v, rng, 12, true);
        for (int cutoff : {0, 2, 4, 7}) {
            const LaurentSeries exact = (a * b).truncated(cutoff);
            EXPECT_EQ(mul(a, b, cutoff), exact);
            EXPECT_EQ(mul(a.truncated(cutoff), b.truncated(cutoff), cutoff), exact);
        }
    }
}

TEST(Polyring, ExactDivision)
{
    std::mt19937 rng(3);
    const Vars v = make_vars({{"x", 2}, {"z", 1, true}});
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentSeries a = random_series(v, rng, 6, true);
        LaurentSeries b = random_series(v, rng, 4, true);
        if (b.is_zero()) {
            continue;
        }
        EXPECT_EQ(exact_divide(a * b, b), a);
    }
    const LaurentSeries x1 = var(v, 0, 0);
    EXPECT_THROW(exact_divide(x1 + LaurentSeries::one(v), x1 * Rational(2) + var(v, 0, 1)), std::domain_error);
    EXPECT_THROW(exact_divide(x1, LaurentSeries(v)), std::domain_error);
}

TEST(Polyring, DegreeIgnoresLaurentFamilies)
{
    const Vars v = xyu();
    const LaurentSeries p = var(v, 0, 0) * var(v, 3, 0, 5) + var(v, 0, 0, 3);
    EXPECT_EQ(p.truncated(2), var(v, 0, 0) * var(v, 3, 0, 5));
}

TEST(Polyring, VariableSetValidation)
{
    EXPECT_THROW(make_vars({{"x", 1}, {"x", 2}}), std::invalid_argument);
    EXPECT_THROW(make_vars({{"x", -1}}), std::invalid_argument);
    const Vars a = make_vars({{"x", 1}});
    const Vars b = make_vars({{"y", 1}});
    EXPECT_THROW(LaurentSeries::one(a) + LaurentSeries::one(b), std::invalid_argument);
}

TEST(Polyring, JsonRoundTrip)
{
    std::mt19937 rng(5);
    const Vars v = xyu();
    const LaurentSeries p = random_series(v, rng, 20, true);
    const nlohmann::json j = {{"variables", variables_to_json(*v)}, {"terms", to_json(p)}};
    const nlohmann::json back = nlohmann::json::parse(j.dump());
    const Vars v2 = variables_from_json(back.at("variables"));
    EXPECT_EQ(*v2, *v);
    EXPECT_EQ(series_from_json(back.at("terms"), v2), series_from_json(to_json(p), v2));
    EXPECT_EQ(series_from_json(back.at("terms"), v), p);
}
