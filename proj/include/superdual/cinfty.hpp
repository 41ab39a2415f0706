#pragma once

#include <superdual/partition.hpp>
#include <superdual/polyring.hpp>
#include <superdual/signed_permutation.hpp>
#include <superdual/symfunc.hpp>

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Characters of the infinite rank algebra c_infinity and the identities that
// pair them with Sp(d) and osp characters.
//
// Conventions: the Weyl group is generated by s_0 (alpha_0 = -2 e_1) and
// s_i (alpha_i = e_i - e_{i+1}); rho has level 0 and coordinates rho_j = -j.
// On a level-l weight, s_0 sends the first coordinate c to 2l - c, so after
// subtracting l from every coordinate the group acts by signed permutations.
namespace superdual::cinf {

struct CWeight {
    Rational level;
    std::vector<int> coords;
};

inline void check_level(const Partition &lambda, int d)
{
    if (d < 0 || d % 2 != 0) {
        throw std::invalid_argument("c_infinity weights need an even nonnegative d");
    }
    if (static_cast<int>(lambda.length()) > d / 2) {
        throw std::invalid_argument("c_infinity weights need at most d/2 rows");
    }
}

// (d/2) Lambda_0 + sum_k lambda'_k e_k.
inline CWeight lambda_c(const Partition &lambda, int d)
{
    check_level(lambda, d);
    return {make_rational(d, 2), lambda.conjugate().parts()};
}

struct CosetRep {
    SignedPermutation w;
    Partition lambda_w;
    int length = 0;
};

class RankInsufficient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Coordinates of Lambda + rho, shifted by the level: lambda'_j - j - l.
inline std::vector<long> shifted_vector(const Partition &lambda, int d, int rank)
{
    const Partition conj = lambda.conjugate();
    std::vector<long> v(static_cast<std::size_t>(rank));
    for (int j = 1; j <= rank; ++j) {
        v[static_cast<std::size_t>(j - 1)] = conj[static_cast<std::size_t>(j - 1)] - j - d / 2;
    }
    return v;
}

inline bool strictly_decreasing(const std::vector<long> &u)
{
    for (std::size_t j = 1; j < u.size(); ++j) {
        if (u[j] >= u[j - 1]) {
            return false;
        }
    }
    return true;
}

inline Partition dot_partition(const std::vector<long> &u, int d)
{
    std::vector<int> parts(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        parts[j] = static_cast<int>(u[j] + d / 2 + static_cast<long>(j) + 1);
    }
    return Partition(std::move(parts));
}

} // namespace detail

// Minimal coset representatives w (w(Lambda + rho) - rho dominant for the
// finite part) grouped by length 0..k_max, found breadth-first: each level is
// generated from the previous one by right multiplication with a simple
// reflection. Throws RankInsufficient if some representative moves the last
// basis vector, since the answer could then depend on the rank.
inline std::vector<std::vector<CosetRep>> coset_levels(int k_max, int rank, const Partition &lambda, int d)
{
    check_level(lambda, d);
    if (k_max < 0 || rank < 1) {
        throw std::invalid_argument("coset enumeration needs k_max >= 0 and rank >= 1");
    }
    if (static_cast<int>(lambda.conjugate().length()) > rank) {
        throw std::invalid_argument("rank smaller than the number of columns");
    }
    const auto v = detail::shifted_vector(lambda, d, rank);
    std::vector<std::vector<CosetRep>> levels;
    const auto id = SignedPermutation::identity(rank);
    levels.push_back({{id, detail::dot_partition(v, d), 0}});
    for (int k = 1; k <= k_max; ++k) {
        std::set<SignedPermutation> next;
        for (const auto &rep : levels.back()) {
            for (int s = 0; s < rank; ++s) {
                auto w = rep.w.times_simple(s);
                if (w.length() == k && detail::strictly_decreasing(w.apply(v))) {
                    next.insert(std::move(w));
                }
            }
        }
        std::vector<CosetRep> level;
        for (const auto &w : next) {
            level.push_back({w, detail::dot_partition(w.apply(v), d), k});
        }
        levels.push_back(std::move(level));
    }
    for (const auto &level : levels) {
        for (const auto &rep : level) {
            if (rep.w.moves_last()) {
                throw RankInsufficient("rank " + std::to_string(rank) + " too small for length " +
                                       std::to_string(rep.length));
            }
        }
    }
    return levels;
}

inline std::vector<CosetRep> coset_reps(int k, int rank, const Partition &lambda, int d)
{
    return coset_levels(k, rank, lambda, d).at(static_cast<std::size_t>(k));
}

inline int default_rank(int k_max, const Partition &lambda, int cutoff)
{
    return k_max + std::max(static_cast<int>(lambda.conjugate().length()), cutoff) + 2;
}

// Levels up to k_max at a rank large enough to pass the boundary check.
inline std::vector<std::vector<CosetRep>> stable_levels(int k_max, const Partition &lambda, int d, int cutoff,
                                                        int *rank_used = nullptr)
{
    int rank = default_rank(k_max, lambda, cutoff);
    for (int attempt = 0; attempt < 8; ++attempt, rank *= 2) {
        try {
            auto levels = coset_levels(k_max, rank, lambda, d);
            if (rank_used) {
                *rank_used = rank;
            }
            return levels;
        } catch (const RankInsufficient &) {
        }
    }
    throw RankInsufficient("no stable rank found");
}

// Once every representative of length k_max + 1 has |lambda_w| > cutoff, so
// has every longer one: along the breadth-first chains the size of lambda_w
// never decreases. Returns the smallest such k_max.
inline int sufficient_kmax(const Partition &lambda, int d, int cutoff, int limit = 64)
{
    for (int k = 0; k <= limit; ++k) {
        const auto levels = stable_levels(k + 1, lambda, d, cutoff);
        bool clear = true;
        for (const auto &rep : levels.back()) {
            if (rep.lambda_w.size() <= cutoff) {
                clear = false;
                break;
            }
        }
        if (clear) {
            return k;
        }
    }
    throw std::runtime_error("no sufficient k_max below the search limit");
}

namespace detail {

inline void check_kmax(const std::vector<std::vector<CosetRep>> &levels, int cutoff)
{
    for (const auto &rep : levels.back()) {
        if (rep.lambda_w.size() <= cutoff) {
            throw std::invalid_argument("k_max too small: a representative of length " + std::to_string(rep.length) +
                                        " contributes in degree " + std::to_string(rep.lambda_w.size()));
        }
    }
}

inline LaurentSeries pair_product_inverse(const Vars &vars, int family, bool include_diagonal, int cutoff)
{
    const int count = vars->family(family).count;
    LaurentSeries out = LaurentSeries::one(vars).truncated(cutoff);
    for (int i = 0; i < count; ++i) {
        for (int j = include_diagonal ? i : i + 1; j < count; ++j) {
            const LaurentSeries xx = LaurentSeries::variable(vars, {family, i}) * LaurentSeries::variable(vars, {family, j});
            out = mul(out, geometric_inverse(LaurentSeries::one(vars) - xx, cutoff), cutoff);
        }
    }
    return out;
}

} // namespace detail

// ch L(c_infinity, Lambda^c(lambda)) in the variables of `family`, truncated
// at total degree `cutoff`: the alternating sum of s_{lambda_w} over
// representatives of length <= k_max divided by prod_{i<=j} (1 - x_i x_j).
inline LaurentSeries cinf_character(const Partition &lambda, int d, int cutoff, int k_max, const Vars &vars, int family)
{
    const auto levels = stable_levels(k_max + 1, lambda, d, cutoff);
    detail::check_kmax(levels, cutoff);
    LaurentSeries sum(vars);
    for (int k = 0; k <= k_max; ++k) {
        for (const auto &rep : levels[static_cast<std::size_t>(k)]) {
            if (rep.lambda_w.size() <= cutoff) {
                sum += schur(rep.lambda_w, vars, family) * Rational(k % 2 == 0 ? 1 : -1);
            }
        }
    }
    return mul(detail::pair_product_inverse(vars, family, true, cutoff), sum, cutoff);
}

struct VerificationReport {
    std::string identity;
    nlohmann::json dims;
    int cutoff = 0;
    int k_max = 0;
    int rank = 0;
    bool status = false;
    std::optional<std::string> first_discrepancy;
};

inline nlohmann::json to_json(const VerificationReport &r)
{
    nlohmann::json j = {{"identity", r.identity}, {"dims", r.dims},   {"cutoff", r.cutoff},
                        {"k_max", r.k_max},       {"rank", r.rank},   {"status", r.status}};
    if (r.first_discrepancy) {
        j["first_discrepancy"] = *r.first_discrepancy;
    }
    return j;
}

inline std::optional<std::string> first_difference(const LaurentSeries &lhs, const LaurentSeries &rhs)
{
    const LaurentSeries diff = lhs - rhs;
    if (diff.is_zero()) {
        return std::nullopt;
    }
    const auto &[e, c] = *diff.terms().begin();
    const LaurentSeries mono = LaurentSeries::monomial(lhs.vars(), e);
    return "coefficient of " + mono.to_string() + ": lhs " + lhs.coefficient(e).get_str() + ", rhs " +
           rhs.coefficient(e).get_str();
}

// prod_{i<=l} prod_{n<=cutoff} (1 + x_n z_i)(1 + x_n / z_i)
//   = sum_{l(lambda)<=l} sp_lambda(z) ch L(c_infinity, Lambda^c(lambda)).
inline VerificationReport verify_dual_c(int ell, int cutoff)
{
    if (ell < 1 || cutoff < 0) {
        throw std::invalid_argument("verify_dual_c needs l >= 1 and cutoff >= 0");
    }
    const Vars vars = make_vars({{"x", std::max(cutoff, 1)}, {"z", ell, true}});
    VerificationReport rep;
    rep.identity = "dual_c";
    rep.dims = {{"ell", ell}, {"x_vars", std::max(cutoff, 1)}};
    rep.cutoff = cutoff;
    LaurentSeries lhs = LaurentSeries::one(vars).truncated(cutoff);
    for (int i = 0; i < ell; ++i) {
        for (int n = 0; n < vars->family(0).count; ++n) {
            const LaurentSeries x = LaurentSeries::variable(vars, {0, n});
            for (int power : {1, -1}) {
                lhs = mul(lhs, LaurentSeries::one(vars) + x * LaurentSeries::variable(vars, {1, i}, power), cutoff);
            }
        }
    }
    LaurentSeries rhs = LaurentSeries(vars).truncated(cutoff);
    for (int size = 0; size <= cutoff; ++size) {
        for (const auto &lambda : partitions_of(size)) {
            if (static_cast<int>(lambda.length()) > ell) {
                continue;
            }
            const int k_max = sufficient_kmax(lambda, 2 * ell, cutoff);
            int rank = 0;
            stable_levels(k_max + 1, lambda, 2 * ell, cutoff, &rank);
            rep.k_max = std::max(rep.k_max, k_max);
            rep.rank = std::max(rep.rank, rank);
            rhs += mul(symplectic_character(lambda, vars, 1), cinf_character(lambda, 2 * ell, cutoff, k_max, vars, 0),
                       cutoff);
        }
    }
    rep.first_discrepancy = first_difference(lhs, rhs);
    rep.status = !rep.first_discrepancy;
    return rep;
}

// ch L(osp, lambda^natural + l * one) for the (m|n)-hook partition lambda:
//   (y_1..y_m / x_1..x_n)^l prod(1 + y_i x_s)
//     / (prod_{i<j} (1 - y_i y_j) prod_{s<=t} (1 - x_s x_t))
//     * sum_k (-1)^k sum_{w of length k} hs_{lambda_w}(x; y).
// y (m variables) carries the even side and x (n variables) the odd side;
// everything but the leading monomial is truncated at `cutoff`.
inline LaurentSeries osp_character(const Partition &lambda, HookContext ctx, int ell, int cutoff, int k_max,
                                   const Vars &vars, int x_family, int y_family)
{
    check_context(ctx);
    if (ctx.m + ctx.n == 0) {
        throw std::invalid_argument("osp_character needs m + n >= 1");
    }
    if (vars->family(x_family).count != ctx.n || vars->family(y_family).count != ctx.m) {
        throw std::invalid_argument("osp_character: x needs n variables and y needs m variables");
    }
    if (!is_hook(lambda, ctx)) {
        throw std::invalid_argument("osp_character needs an (m|n)-hook partition");
    }
    const auto levels = stable_levels(k_max + 1, lambda, 2 * ell, cutoff);
    detail::check_kmax(levels, cutoff);
    LaurentSeries sum(vars);
    for (int k = 0; k <= k_max; ++k) {
        for (const auto &rep : levels[static_cast<std::size_t>(k)]) {
            if (rep.lambda_w.size() <= cutoff) {
                sum += hook_schur(rep.lambda_w, vars, x_family, y_family).value * Rational(k % 2 == 0 ? 1 : -1);
            }
        }
    }
    LaurentSeries pref = detail::pair_product_inverse(vars, y_family, false, cutoff);
    pref = mul(pref, detail::pair_product_inverse(vars, x_family, true, cutoff), cutoff);
    for (int i = 0; i < ctx.m; ++i) {
        for (int s = 0; s < ctx.n; ++s) {
            pref = mul(pref,
                       LaurentSeries::one(vars) +
                           LaurentSeries::variable(vars, {y_family, i}) * LaurentSeries::variable(vars, {x_family, s}),
                       cutoff);
        }
    }
    Exponents shift(vars->size(), 0);
    for (int i = 0; i < ctx.m; ++i) {
        shift[vars->flat({y_family, i})] = ell;
    }
    for (int s = 0; s < ctx.n; ++s) {
        shift[vars->flat({x_family, s})] = -ell;
    }
    return mul(pref, sum, cutoff).without_cutoff() * LaurentSeries::monomial(vars, shift);
}

// prod_k prod_{i<=n} prod_{j<=m} (1 + x_i z_k^{+-1}) / (1 - y_j z_k^{+-1})
//   = (y/x)^{-l} sum_lambda sp_lambda(z) ch L(osp, lambda^natural + l * one).
inline VerificationReport verify_sp_osp(int m, int n, int ell, int cutoff)
{
    if (m < 0 || n < 0 || m + n < 1 || ell < 1 || cutoff < 0) {
        throw std::invalid_argument("verify_sp_osp needs m + n >= 1, l >= 1 and cutoff >= 0");
    }
    const Vars vars = make_vars({{"x", n}, {"y", m}, {"z", ell, true}});
    const HookContext ctx{m, n};
    VerificationReport rep;
    rep.identity = "sp_osp";
    rep.dims = {{"m", m}, {"n", n}, {"ell", ell}};
    rep.cutoff = cutoff;
    LaurentSeries lhs = LaurentSeries::one(vars).truncated(cutoff);
    for (int k = 0; k < ell; ++k) {
        for (int power : {1, -1}) {
            const LaurentSeries z = LaurentSeries::variable(vars, {2, k}, power);
            for (int i = 0; i < n; ++i) {
                lhs = mul(lhs, LaurentSeries::one(vars) + LaurentSeries::variable(vars, {0, i}) * z, cutoff);
            }
            for (int j = 0; j < m; ++j) {
                lhs = mul(lhs, geometric_inverse(LaurentSeries::one(vars) - LaurentSeries::variable(vars, {1, j}) * z, cutoff),
                          cutoff);
            }
        }
    }
    Exponents unshift(vars->size(), 0);
    for (int i = 0; i < n; ++i) {
        unshift[vars->flat({0, i})] = ell;
    }
    for (int j = 0; j < m; ++j) {
        unshift[vars->flat({1, j})] = -ell;
    }
    const LaurentSeries unshift_mono = LaurentSeries::monomial(vars, unshift);
    LaurentSeries rhs = LaurentSeries(vars).truncated(cutoff);
    for (int size = 0; size <= cutoff; ++size) {
        for (const auto &lambda : hook_partitions(size, ctx)) {
            if (static_cast<int>(lambda.length()) > ell) {
                continue;
            }
            const int k_max = sufficient_kmax(lambda, 2 * ell, cutoff);
            int rank = 0;
            stable_levels(k_max + 1, lambda, 2 * ell, cutoff, &rank);
            rep.k_max = std::max(rep.k_max, k_max);
            rep.rank = std::max(rep.rank, rank);
            const LaurentSeries ch = osp_character(lambda, ctx, ell, cutoff, k_max, vars, 0, 1) * unshift_mono;
            rhs += mul(symplectic_character(lambda, vars, 2), ch, cutoff);
        }
    }
    rep.first_discrepancy = first_difference(lhs, rhs);
    rep.status = !rep.first_discrepancy;
    return rep;
}

} // namespace superdual::cinf
