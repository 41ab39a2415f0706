#pragma once

#include <superdual/partition.hpp>
#include <superdual/polyring.hpp>
#include <superdual/signed_permutation.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace superdual {

namespace detail {

inline int family_size(const Vars &vars, int family) { return vars->family(family).count; }

inline LaurentSeries monomial_in(const Vars &vars, int family, const std::vector<int> &exps, const Rational &c = 1)
{
    Exponents e(vars->size(), 0);
    const std::size_t off = vars->offset(family);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        e[off + i] = exps[i];
    }
    return LaurentSeries::monomial(vars, std::move(e), c);
}

inline int permutation_sign(const std::vector<int> &perm)
{
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) {
                ++inversions;
            }
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// det(x_j^{exps_i}) over the family, expanded by Leibniz.
inline LaurentSeries alternant(const Vars &vars, int family, const std::vector<int> &exps)
{
    const int m = family_size(vars, family);
    LaurentSeries out(vars);
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> mono(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            mono[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = exps[static_cast<std::size_t>(i)];
        }
        out += monomial_in(vars, family, mono, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace detail

// m_nu over the given family: sum of distinct permutations of x^nu.
inline LaurentSeries monomial_symmetric(const Partition &nu, const Vars &vars, int family)
{
    const int m = detail::family_size(vars, family);
    if (static_cast<int>(nu.length()) > m) {
        throw std::invalid_argument("monomial_symmetric: partition longer than the variable family");
    }
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < nu.length(); ++i) {
        exps[i] = nu[i];
    }
    std::sort(exps.begin(), exps.end());
    LaurentSeries out(vars);
    do {
        out += detail::monomial_in(vars, family, exps);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

// Visits the content vector of every semistandard tableau of skew shape
// outer/inner with entries 1..max_entry.
template <typename Visit>
void for_each_ssyt_content(const Partition &outer, const Partition &inner, int max_entry, Visit &&visit)
{
    if (!outer.contains(inner)) {
        throw std::invalid_argument("skew shape: inner partition not contained in outer");
    }
    struct Cell {
        std::size_t row;
        int col;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < outer.length(); ++r) {
        for (int c = inner[r]; c < outer[r]; ++c) {
            cells.push_back({r, c});
        }
    }
    std::vector<std::vector<int>> grid(outer.length());
    for (std::size_t r = 0; r < outer.length(); ++r) {
        grid[r].assign(static_cast<std::size_t>(outer[r]), 0);
    }
    std::vector<int> content(static_cast<std::size_t>(std::max(max_entry, 0)), 0);
    auto rec = [&](auto &&self, std::size_t k) -> void {
        if (k == cells.size()) {
            visit(static_cast<const std::vector<int> &>(content));
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 1;
        if (c > inner[r]) {
            lo = std::max(lo, grid[r][static_cast<std::size_t>(c - 1)]);
        }
        if (r > 0 && c >= inner[r - 1]) {
            lo = std::max(lo, grid[r - 1][static_cast<std::size_t>(c)] + 1);
        }
        for (int v = lo; v <= max_entry; ++v) {
            grid[r][static_cast<std::size_t>(c)] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, k + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
        grid[r][static_cast<std::size_t>(c)] = 0;
    };
    rec(rec, 0);
}

inline LaurentSeries skew_schur(const Partition &outer, const Partition &inner, const Vars &vars, int family)
{
    const int m = detail::family_size(vars, family);
    std::map<std::vector<int>, long> tally;
    for_each_ssyt_content(outer, inner, m, [&](const std::vector<int> &content) { ++tally[content]; });
    LaurentSeries out(vars);
    for (const auto &[content, count] : tally) {
        out += detail::monomial_in(vars, family, content, Rational(count));
    }
    return out;
}

// Schur polynomial by tableau enumeration; zero when the partition is longer
// than the family.
inline LaurentSeries schur(const Partition &lambda, const Vars &vars, int family)
{
    return skew_schur(lambda, Partition{}, vars, family);
}

// Character of the irreducible gl(m)-module with highest weight `highest`
// (weakly decreasing, entries may be negative), as a ratio of alternants.
inline LaurentSeries gl_character(const std::vector<int> &highest, const Vars &vars, int family)
{
    const int m = detail::family_size(vars, family);
    if (static_cast<int>(highest.size()) != m) {
        throw std::invalid_argument("gl_character: weight length differs from the family size");
    }
    for (std::size_t i = 1; i < highest.size(); ++i) {
        if (highest[i] > highest[i - 1]) {
            throw std::invalid_argument("gl_character: weight is not dominant");
        }
    }
    std::vector<int> num(highest.size()), den(highest.size());
    for (int i = 0; i < m; ++i) {
        den[static_cast<std::size_t>(i)] = m - 1 - i;
        num[static_cast<std::size_t>(i)] = highest[static_cast<std::size_t>(i)] + m - 1 - i;
    }
    return exact_divide(detail::alternant(vars, family, num), detail::alternant(vars, family, den));
}

// Schur polynomial through the bialternant formula.
inline LaurentSeries schur_bialternant(const Partition &lambda, const Vars &vars, int family)
{
    const int m = detail::family_size(vars, family);
    if (static_cast<int>(lambda.length()) > m) {
        return LaurentSeries(vars);
    }
    std::vector<int> padded(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        padded[i] = lambda[i];
    }
    return gl_character(padded, vars, family);
}

// All partitions contained in lambda.
inline std::vector<Partition> subpartitions(const Partition &lambda)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, std::size_t row, int bound) -> void {
        if (row == lambda.length() || bound == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(bound, lambda[row]); v >= 0; --v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, lambda.empty() ? 0 : lambda[0]);
    return out;
}

struct HookSchur {
    LaurentSeries value;
    // Set when lambda is not an (m|n)-hook, so the polynomial vanishes.
    bool structurally_zero = false;
};

// hs_lambda(x; y) = sum over mu in lambda of s_mu(x) s_{lambda'/mu'}(y).
inline HookSchur hook_schur(const Partition &lambda, const Vars &vars, int x_family, int y_family)
{
    const HookContext ctx{detail::family_size(vars, x_family), detail::family_size(vars, y_family)};
    if (!is_hook(lambda, ctx)) {
        return {LaurentSeries(vars), true};
    }
    const Partition conj = lambda.conjugate();
    LaurentSeries out(vars);
    for (const auto &mu : subpartitions(lambda)) {
        if (static_cast<int>(mu.length()) > ctx.m) {
            continue;
        }
        LaurentSeries sx = schur(mu, vars, x_family);
        if (sx.is_zero()) {
            continue;
        }
        LaurentSeries sy = skew_schur(conj, mu.conjugate(), vars, y_family);
        if (sy.is_zero()) {
            continue;
        }
        out += sx * sy;
    }
    return {std::move(out), false};
}

// Character of the irreducible Sp(2l)-module of highest weight lambda, with
// l the size of the Laurent family z: a Weyl alternant ratio over the
// hyperoctahedral group.
inline LaurentSeries symplectic_character(const Partition &lambda, const Vars &vars, int z_family)
{
    const int l = detail::family_size(vars, z_family);
    if (static_cast<int>(lambda.length()) > l) {
        throw std::invalid_argument("symplectic_character: partition longer than the rank");
    }
    std::vector<int> shifted(static_cast<std::size_t>(l)), rho(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        rho[static_cast<std::size_t>(i)] = l - i;
        shifted[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + l - i;
    }
    LaurentSeries num(vars), den(vars);
    for (const auto &w : SignedPermutation::all(l)) {
        const int sgn = w.sign();
        num += detail::monomial_in(vars, z_family, w.apply(shifted), sgn);
        den += detail::monomial_in(vars, z_family, w.apply(rho), sgn);
    }
    return exact_divide(num, den);
}

} // namespace superdual
