#include <superdual/superweyl.hpp>

#include <gtest/gtest.h>

#include <string>
#include <vector>

using namespace superdual;
using namespace superdual::weyl;

namespace {

const NamedOperator &find_op(const std::vector<NamedOperator> &family, const std::string &name)
{
    for (const auto &op : family) {
        if (op.name == name) {
            return op;
        }
    }
    throw std::out_of_range("no operator named " + name);
}

bool has_prefix(const std::vector<NamedOperator> &family, const std::string &prefix)
{
    for (const auto &op : family) {
        if (op.name.rfind(prefix, 0) == 0) {
            return true;
        }
    }
    return false;
}

// Every supercommutator of the two families vanishes on all monomials of
// bounded degree.
bool families_commute(const std::vector<NamedOperator> &a, const std::vector<NamedOperator> &b,
                      const std::vector<SuperElement> &probes)
{
    for (const auto &p : probes) {
        for (const auto &f : a) {
            for (const auto &g : b) {
                if (!supercommutator_apply(f.op, g.op, p).is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

TEST(SuperWeyl, EvenDerivative)
{
    const Dims dims{1, 0, 2};
    const SuperElement x11 = SuperElement::x(dims, 1, 1);
    const SuperElement v = x11 * x11 * SuperElement::x(dims, 1, 2);
    EXPECT_EQ(derivative(v, Generator::x(1, 1)), Rational(2) * x11 * SuperElement::x(dims, 1, 2));
    EXPECT_EQ(derivative(v, Generator::x(1, 2)), x11 * x11);
}

TEST(SuperWeyl, OddDerivativeSigns)
{
    const Dims dims{0, 1, 2};
    const SuperElement e1 = SuperElement::eta(dims, 1, 1);
    const SuperElement e2 = SuperElement::eta(dims, 1, 2);
    EXPECT_EQ(derivative(e1, Generator::eta(1, 1)), SuperElement::one(dims));
    EXPECT_EQ(derivative(e1 * e2, Generator::eta(1, 1)), e2);
    EXPECT_EQ(derivative(e2 * e1, Generator::eta(1, 1)), e2 * Rational(-1));
    EXPECT_EQ(derivative(e1 * e2, Generator::eta(1, 2)), e1 * Rational(-1));
    EXPECT_TRUE((e1 * e1).is_zero());
    EXPECT_EQ(e1 * e2, e2 * e1 * Rational(-1));
}

TEST(SuperWeyl, Rendering)
{
    const Dims dims{1, 1, 2};
    const SuperElement x = SuperElement::x(dims, 1, 1);
    const SuperElement v = x * x * SuperElement::eta(dims, 1, 1) * SuperElement::eta(dims, 1, 2);
    EXPECT_EQ(v.to_string(), "x1_1^2*eta1_1*eta1_2");
    EXPECT_EQ(SuperElement(dims).to_string(), "0");
    EXPECT_EQ((SuperElement::one(dims) * Rational(-3, 2)).to_string(), "-3/2");
}

TEST(SuperWeyl, GlDUnitActsOnGenerators)
{
    const Dims dims{1, 1, 2};
    const auto gl = dual_pair_generators(GeneratorKind::gl_d, dims);
    ASSERT_EQ(gl.size(), 4u);
    const SuperElement x11 = SuperElement::x(dims, 1, 1);
    EXPECT_EQ(find_op(gl, "E[1,1]").op.apply(x11), x11);
    EXPECT_EQ(find_op(gl, "E[2,1]").op.apply(x11), SuperElement::x(dims, 1, 2));
    EXPECT_EQ(find_op(gl, "E[2,1]").op.apply(SuperElement::eta(dims, 1, 1)), SuperElement::eta(dims, 1, 2));
    EXPECT_TRUE(find_op(gl, "E[1,2]").op.apply(x11).is_zero());
}

TEST(SuperWeyl, FamilySizes)
{
    for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n <= 2; ++n) {
            for (int d = 1; d <= 4 && m + n > 0; ++d) {
                const Dims dims{m, n, d};
                EXPECT_EQ(dual_pair_generators(GeneratorKind::gl_d, dims).size(), static_cast<std::size_t>(d * d));
                EXPECT_EQ(dual_pair_generators(GeneratorKind::gl_mn, dims).size(),
                          static_cast<std::size_t>((m + n) * (m + n)));
                const auto raise = raising_operators(dims);
                EXPECT_EQ(raise.gl_d.size(), static_cast<std::size_t>(d - 1));
                EXPECT_EQ(raise.gl_mn.size(), static_cast<std::size_t>(std::max(m + n - 1, 0)));
                if (d % 2 == 0) {
                    const int ell = d / 2;
                    EXPECT_EQ(dual_pair_generators(GeneratorKind::sp_d, dims).size(),
                              static_cast<std::size_t>(ell * (2 * ell + 1)));
                }
            }
        }
    }
}

TEST(SuperWeyl, OspExtraForGl11)
{
    const auto extra = dual_pair_generators(GeneratorKind::osp_extra, Dims{1, 1, 2});
    EXPECT_FALSE(has_prefix(extra, "Ixx"));
    EXPECT_FALSE(has_prefix(extra, "Dxx"));
    EXPECT_TRUE(has_prefix(extra, "Ixe"));
    EXPECT_TRUE(has_prefix(extra, "Iee"));
    EXPECT_TRUE(has_prefix(extra, "Dee"));
}

TEST(SuperWeyl, OddDRejectedBySymplecticFamilies)
{
    EXPECT_THROW(dual_pair_generators(GeneratorKind::osp_extra, Dims{1, 1, 3}), std::invalid_argument);
    EXPECT_THROW(dual_pair_generators(GeneratorKind::sp_d, Dims{1, 1, 3}), std::invalid_argument);
}

TEST(SuperWeyl, OddRaiserMovesEtaToX)
{
    const Dims dims{1, 1, 1};
    const auto raise = raising_operators(dims);
    ASSERT_EQ(raise.gl_mn.size(), 1u);
    EXPECT_EQ(raise.gl_mn[0].op.parity(), 1);
    EXPECT_EQ(raise.gl_mn[0].op.apply(SuperElement::eta(dims, 1, 1)), SuperElement::x(dims, 1, 1));
}

TEST(SuperWeyl, GlDRelation)
{
    // [E^{12}, E^{21}] = E^{11} - E^{22} on every probe.
    const Dims dims{1, 1, 2};
    const auto gl = dual_pair_generators(GeneratorKind::gl_d, dims);
    for (const auto &p : monomials_up_to(dims, 3)) {
        const SuperElement lhs = supercommutator_apply(find_op(gl, "E[1,2]").op, find_op(gl, "E[2,1]").op, p);
        const SuperElement rhs = find_op(gl, "E[1,1]").op.apply(p) - find_op(gl, "E[2,2]").op.apply(p);
        EXPECT_EQ(lhs, rhs) << p.to_string();
    }
}

TEST(SuperWeyl, DiamondSmallCases)
{
    const Dims dims{2, 0, 2};
    EXPECT_EQ(diamond(1, dims), SuperElement::x(dims, 1, 1));
    const SuperElement expected =
        SuperElement::x(dims, 1, 1) * SuperElement::x(dims, 2, 2) - SuperElement::x(dims, 2, 1) * SuperElement::x(dims, 1, 2);
    EXPECT_EQ(diamond(2, dims), expected);
    EXPECT_THROW(diamond(3, dims), std::invalid_argument);

    const auto gl_d = dual_pair_generators(GeneratorKind::gl_d, dims);
    const auto gl_mn = dual_pair_generators(GeneratorKind::gl_mn, dims);
    EXPECT_EQ(eigenvalue(find_op(gl_d, "E[1,1]").op, expected), Rational(1));
    EXPECT_EQ(eigenvalue(find_op(gl_d, "E[2,2]").op, expected), Rational(1));
    EXPECT_EQ(eigenvalue(find_op(gl_mn, "Exx[1,1]").op, expected), Rational(1));
    EXPECT_EQ(eigenvalue(find_op(gl_mn, "Exx[2,2]").op, expected), Rational(1));
}

TEST(SuperWeyl, DiamondKrReducesToDiamond)
{
    for (int r = 1; r <= 3; ++r) {
        const Dims dims{r, 1, 3};
        EXPECT_EQ(diamond_kr(1, r, dims), diamond(r, dims)) << r;
    }
}

TEST(SuperWeyl, DiamondKrWithoutEvenRows)
{
    // All rows equal to eta_1: the determinant is r! times eta_1^1 ... eta_1^r.
    const Dims dims{0, 1, 3};
    for (int r = 1; r <= 3; ++r) {
        SuperElement prod = SuperElement::one(dims);
        Rational fact = 1;
        for (int i = 1; i <= r; ++i) {
            prod = prod * SuperElement::eta(dims, 1, i);
            fact *= i;
        }
        EXPECT_EQ(diamond_kr(1, r, dims), prod * fact) << r;
    }
}

TEST(SuperWeyl, DiamondKrNonzero)
{
    for (int m = 0; m <= 2; ++m) {
        for (int n = 1; n <= 2; ++n) {
            for (int d = std::max(m, 1); d <= 4; ++d) {
                const Dims dims{m, n, d};
                for (int r = std::max(m, 1); r <= d; ++r) {
                    for (int k = 1; k <= n; ++k) {
                        EXPECT_FALSE(diamond_kr(k, r, dims).is_zero()) << m << n << d << r << k;
                    }
                }
            }
        }
    }
}

TEST(SuperWeyl, HighestWeightVectorExamples)
{
    const Dims d1{1, 1, 1};
    EXPECT_EQ(highest_weight_vector(Partition({1}), d1), SuperElement::x(d1, 1, 1));
    const Dims d2{1, 1, 2};
    EXPECT_EQ(highest_weight_vector(Partition({1, 1}), d2), diamond_kr(1, 2, d2));
    const SuperElement x = SuperElement::x(d1, 1, 1);
    EXPECT_EQ(highest_weight_vector(Partition({2}), d1), x * x);
    EXPECT_THROW(highest_weight_vector(Partition({1, 1}), d1), std::invalid_argument);
    EXPECT_THROW(highest_weight_vector(Partition({2, 2}), d2), std::invalid_argument);
}

TEST(SuperWeyl, HighestWeightVectorsAreJointlyHighest)
{
    for (const Dims dims : {Dims{1, 1, 2}, Dims{2, 1, 2}, Dims{1, 2, 2}, Dims{1, 1, 3}}) {
        const HookContext ctx{dims.m, dims.n};
        const auto raise = raising_operators(dims);
        const auto gl_d = dual_pair_generators(GeneratorKind::gl_d, dims);
        const auto gl_mn = dual_pair_generators(GeneratorKind::gl_mn, dims);
        for (const auto &lambda : partitions_up_to(4)) {
            if (lambda.size() == 0 || static_cast<int>(lambda.length()) > dims.d || !is_hook(lambda, ctx)) {
                continue;
            }
            const SuperElement v = highest_weight_vector(lambda, dims);
            ASSERT_FALSE(v.is_zero());
            for (const auto &r : raise.gl_d) {
                EXPECT_TRUE(r.op.apply(v).is_zero()) << lambda.to_string() << " " << r.name;
            }
            for (const auto &r : raise.gl_mn) {
                EXPECT_TRUE(r.op.apply(v).is_zero()) << lambda.to_string() << " " << r.name;
            }
            for (int i = 1; i <= dims.d; ++i) {
                const Rational expected = i <= static_cast<int>(lambda.length()) ? lambda[static_cast<std::size_t>(i - 1)] : 0;
                EXPECT_EQ(eigenvalue(find_op(gl_d, "E[" + std::to_string(i) + "," + std::to_string(i) + "]").op, v),
                          expected);
            }
            const Weight w = natural_weight(lambda, ctx);
            for (int s = 1; s <= dims.m; ++s) {
                const std::string name = "Exx[" + std::to_string(s) + "," + std::to_string(s) + "]";
                EXPECT_EQ(eigenvalue(find_op(gl_mn, name).op, v), w.delta()[static_cast<std::size_t>(s - 1)]);
            }
            for (int k = 1; k <= dims.n; ++k) {
                const std::string name = "Eee[" + std::to_string(k) + "," + std::to_string(k) + "]";
                EXPECT_EQ(eigenvalue(find_op(gl_mn, name).op, v), w.epsilon()[static_cast<std::size_t>(k - 1)]);
            }
        }
    }
}

TEST(SuperWeyl, ShiftedEigenvalues)
{
    const Dims dims{1, 1, 2};
    const auto shifted = dual_pair_generators(GeneratorKind::gl_mn_shifted, dims);
    for (const auto &lambda : {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})}) {
        const SuperElement v = highest_weight_vector(lambda, dims);
        const Weight w = natural_weight(lambda, {1, 1});
        EXPECT_EQ(eigenvalue(find_op(shifted, "Exx[1,1]").op, v), w.delta()[0] + 1);
        EXPECT_EQ(eigenvalue(find_op(shifted, "Eee[1,1]").op, v), w.epsilon()[0] - 1);
    }
}

TEST(SuperWeyl, HarmonicHighestWeightVectors)
{
    for (const Dims dims : {Dims{1, 1, 2}, Dims{1, 1, 4}, Dims{2, 1, 4}}) {
        const auto extra = dual_pair_generators(GeneratorKind::osp_extra, dims);
        for (const auto &lambda : partitions_up_to(4)) {
            if (lambda.size() == 0 || 2 * static_cast<int>(lambda.length()) > dims.d ||
                !is_hook(lambda, {dims.m, dims.n})) {
                continue;
            }
            const SuperElement v = highest_weight_vector(lambda, dims);
            for (const auto &op : extra) {
                if (op.name[0] == 'D') {
                    EXPECT_TRUE(op.op.apply(v).is_zero()) << lambda.to_string() << " " << op.name;
                }
            }
        }
    }
}

TEST(SuperWeyl, TooManyRowsIsNotHarmonic)
{
    const Dims dims{1, 1, 2};
    const auto extra = dual_pair_generators(GeneratorKind::osp_extra, dims);
    const SuperElement v = highest_weight_vector(Partition({1, 1}), dims);
    EXPECT_EQ(find_op(extra, "Dxe[1,1]").op.apply(v), SuperElement::constant(dims, 2));
}

TEST(SuperWeyl, GlActionsCommute)
{
    for (const Dims dims : {Dims{1, 1, 2}, Dims{2, 1, 2}, Dims{1, 2, 2}}) {
        EXPECT_TRUE(families_commute(dual_pair_generators(GeneratorKind::gl_d, dims),
                                     dual_pair_generators(GeneratorKind::gl_mn, dims), monomials_up_to(dims, 4)))
            << dims.m << dims.n << dims.d;
    }
}

TEST(SuperWeyl, SymplecticCommutesWithOrthosymplectic)
{
    const Dims dims{1, 1, 2};
    auto osp = dual_pair_generators(GeneratorKind::osp_extra, dims);
    for (auto &op : dual_pair_generators(GeneratorKind::gl_mn_shifted, dims)) {
        osp.push_back(std::move(op));
    }
    const auto probes = monomials_up_to(dims, 4);
    EXPECT_TRUE(families_commute(dual_pair_generators(GeneratorKind::sp_d, dims), osp, probes));
    // gl(d) as a whole does not commute with the quadratic multiplications.
    EXPECT_FALSE(families_commute(dual_pair_generators(GeneratorKind::gl_d, dims), osp, probes));
}

TEST(SuperWeyl, OrthosymplecticBracketClosure)
{
    const Dims dims{1, 1, 2};
    auto osp = dual_pair_generators(GeneratorKind::osp_extra, dims);
    for (auto &op : dual_pair_generators(GeneratorKind::gl_mn_shifted, dims)) {
        osp.push_back(std::move(op));
    }
    EXPECT_EQ(bracket_closure_failure(osp, monomials_up_to(dims, 3)), std::nullopt);
    // Without the shift the brackets of I and D leave the span.
    auto unshifted = dual_pair_generators(GeneratorKind::osp_extra, dims);
    for (auto &op : dual_pair_generators(GeneratorKind::gl_mn, dims)) {
        unshifted.push_back(std::move(op));
    }
    EXPECT_NE(bracket_closure_failure(unshifted, monomials_up_to(dims, 3)), std::nullopt);
}

TEST(SuperWeyl, MonomialCount)
{
    // Degree <= 2 in two even and two odd generators: 1 + 4 + (3 + 4 + 1).
    EXPECT_EQ(monomials_up_to(Dims{1, 1, 2}, 2).size(), 13u);
}
