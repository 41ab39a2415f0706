#pragma once

#include <superdual/partition.hpp>
#include <superdual/polyring.hpp>
#include <superdual/symfunc.hpp>
#include <superdual/weight.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superdual {

// Invariant form on weights: (d_i, d_i) = 1, (e_j, e_j) = -1, others vanish.
inline Rational form(const Weight &a, const Weight &b)
{
    if (!(a.context() == b.context())) {
        throw std::invalid_argument("form: weights of different gl(m|n)");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.delta().size(); ++i) {
        s += a.delta()[i] * b.delta()[i];
    }
    for (std::size_t j = 0; j < a.epsilon().size(); ++j) {
        s -= a.epsilon()[j] * b.epsilon()[j];
    }
    return s;
}

// The root u - v for two distinct basis labels.
struct Root {
    SuperIndex plus;
    SuperIndex minus;

    bool is_odd() const { return plus.is_odd() != minus.is_odd(); }
    Root negated() const { return {minus, plus}; }

    Weight to_weight(HookContext ctx) const
    {
        Weight w(ctx);
        w[plus] += 1;
        w[minus] -= 1;
        return w;
    }

    friend auto operator<=>(const Root &, const Root &) = default;

    std::string to_string() const { return plus.to_string() + "-" + minus.to_string(); }
};

inline Root root_from_weight(const Weight &w)
{
    std::optional<SuperIndex> plus, minus;
    const HookContext ctx = w.context();
    auto scan = [&](SuperIndex s) {
        const Rational &c = w[s];
        if (c == 1 && !plus) {
            plus = s;
        } else if (c == -1 && !minus) {
            minus = s;
        } else if (c != 0) {
            throw std::invalid_argument("weight " + w.to_string() + " is not a root");
        }
    };
    for (int i = 1; i <= ctx.m; ++i) {
        scan(SuperIndex::delta(i));
    }
    for (int j = 1; j <= ctx.n; ++j) {
        scan(SuperIndex::epsilon(j));
    }
    if (!plus || !minus) {
        throw std::invalid_argument("weight " + w.to_string() + " is not a root");
    }
    return {*plus, *minus};
}

inline std::vector<SuperIndex> standard_basis(HookContext ctx)
{
    check_context(ctx);
    std::vector<SuperIndex> out;
    for (int i = 1; i <= ctx.m; ++i) {
        out.push_back(SuperIndex::delta(i));
    }
    for (int j = 1; j <= ctx.n; ++j) {
        out.push_back(SuperIndex::epsilon(j));
    }
    return out;
}

// Positive roots with respect to the standard ordering d1 < .. < dm < e1 < .. < en.
inline std::vector<Root> positive_roots(HookContext ctx)
{
    const auto basis = standard_basis(ctx);
    std::vector<Root> out;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            out.push_back({basis[a], basis[b]});
        }
    }
    return out;
}

struct RhoTriple {
    Weight even;  // half-sum of even positive roots
    Weight odd;   // half-sum of odd positive roots
    Weight total; // even - odd
};

inline RhoTriple rho_triple(HookContext ctx)
{
    RhoTriple r{Weight(ctx), Weight(ctx), Weight(ctx)};
    for (const auto &root : positive_roots(ctx)) {
        (root.is_odd() ? r.odd : r.even) += root.to_weight(ctx) * Rational(1, 2);
    }
    r.total = r.even - r.odd;
    return r;
}

// The ordered basis encoded as a word in d and e: the i-th d stands for d_i,
// the j-th e for e_j.
class BorelWord {
public:
    explicit BorelWord(std::string letters) : letters_(std::move(letters))
    {
        for (char c : letters_) {
            if (c != 'd' && c != 'e') {
                throw std::invalid_argument("Borel words use only the letters d and e");
            }
        }
    }

    const std::string &letters() const { return letters_; }

    HookContext context() const
    {
        const int m = static_cast<int>(std::count(letters_.begin(), letters_.end(), 'd'));
        return {m, static_cast<int>(letters_.size()) - m};
    }

    std::vector<SuperIndex> basis() const
    {
        std::vector<SuperIndex> out;
        int i = 0, j = 0;
        for (char c : letters_) {
            out.push_back(c == 'd' ? SuperIndex::delta(++i) : SuperIndex::epsilon(++j));
        }
        return out;
    }

    static BorelWord standard(HookContext ctx)
    {
        return BorelWord(std::string(static_cast<std::size_t>(ctx.m), 'd') + std::string(static_cast<std::size_t>(ctx.n), 'e'));
    }

    friend auto operator<=>(const BorelWord &, const BorelWord &) = default;

private:
    std::string letters_;
};

// All C(m+n, m) words, in lexicographic order.
inline std::vector<BorelWord> all_borel_words(HookContext ctx)
{
    check_context(ctx);
    std::string s = std::string(static_cast<std::size_t>(ctx.m), 'd') + std::string(static_cast<std::size_t>(ctx.n), 'e');
    std::vector<BorelWord> out;
    do {
        out.emplace_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

// Consecutive differences of an ordered basis.
inline std::vector<Root> simple_roots(const std::vector<SuperIndex> &ordered_basis)
{
    std::vector<Root> out;
    for (std::size_t t = 0; t + 1 < ordered_basis.size(); ++t) {
        out.push_back({ordered_basis[t], ordered_basis[t + 1]});
    }
    return out;
}

namespace detail {

inline HookContext context_of(const std::vector<Root> &roots)
{
    HookContext ctx;
    for (const auto &r : roots) {
        for (const auto &s : {r.plus, r.minus}) {
            (s.is_delta() ? ctx.m : ctx.n) = std::max(s.is_delta() ? ctx.m : ctx.n, s.index);
        }
    }
    return ctx;
}

inline void require_member(const std::vector<Root> &simple, const Root &alpha)
{
    if (std::find(simple.begin(), simple.end(), alpha) == simple.end()) {
        throw std::invalid_argument("root " + alpha.to_string() + " is not in the simple system");
    }
}

} // namespace detail

// Odd reflection of a simple system along an odd simple root alpha:
// beta stays when orthogonal to alpha, becomes beta + alpha otherwise, and
// alpha itself becomes -alpha.
inline std::vector<Root> odd_reflect_roots(const std::vector<Root> &simple, const Root &alpha)
{
    if (!alpha.is_odd()) {
        throw std::invalid_argument("odd reflection needs an odd root");
    }
    detail::require_member(simple, alpha);
    const HookContext ctx = detail::context_of(simple);
    const Weight a = alpha.to_weight(ctx);
    std::vector<Root> out;
    for (const auto &beta : simple) {
        if (beta == alpha) {
            out.push_back(alpha.negated());
            continue;
        }
        const Weight b = beta.to_weight(ctx);
        out.push_back(form(b, a) == 0 ? beta : root_from_weight(b + a));
    }
    return out;
}

// Reflection of a simple system in an even simple root: swaps its two labels
// in every root.
inline std::vector<Root> real_reflect_roots(const std::vector<Root> &simple, const Root &beta)
{
    if (beta.is_odd()) {
        throw std::invalid_argument("real reflection needs an even root");
    }
    detail::require_member(simple, beta);
    auto swap = [&](SuperIndex s) { return s == beta.plus ? beta.minus : (s == beta.minus ? beta.plus : s); };
    std::vector<Root> out;
    for (const auto &r : simple) {
        out.push_back({swap(r.plus), swap(r.minus)});
    }
    return out;
}

inline Weight odd_reflect_weight(const Weight &lambda, const Root &alpha)
{
    if (!alpha.is_odd()) {
        throw std::invalid_argument("odd reflection needs an odd root");
    }
    const Weight a = alpha.to_weight(lambda.context());
    return form(lambda, a) == 0 ? lambda : lambda - a;
}

// Highest weight of the module with natural label lambda relative to the
// Borel subalgebra of `word`: each d takes the length of the current first
// row, each e the length of the current first column, which is then removed.
inline Weight extremal_weight(const Partition &lambda, const BorelWord &word)
{
    const HookContext ctx = word.context();
    if (!is_hook(lambda, ctx)) {
        throw std::invalid_argument("extremal_weight needs an (m|n)-hook partition");
    }
    std::vector<int> rows(lambda.parts());
    Weight w(ctx);
    int i = 0, j = 0;
    for (char c : word.letters()) {
        if (c == 'd') {
            w[SuperIndex::delta(++i)] = rows.empty() ? 0 : rows.front();
            if (!rows.empty()) {
                rows.erase(rows.begin());
            }
        } else {
            w[SuperIndex::epsilon(++j)] = static_cast<int>(rows.size());
            for (int &r : rows) {
                --r;
            }
            while (!rows.empty() && rows.back() == 0) {
                rows.pop_back();
            }
        }
    }
    return w;
}

struct Typicality {
    bool typical = true;
    int degree = 0;
};

inline constexpr int default_typicality_search_limit = 16;

// Degree of atypicality: the largest set of mutually orthogonal odd positive
// roots alpha with (lambda + rho, alpha) = 0, found by exhaustive search.
inline Typicality typicality(const Weight &lambda, int search_limit = default_typicality_search_limit)
{
    const HookContext ctx = lambda.context();
    if (ctx.m * ctx.n > search_limit) {
        throw std::invalid_argument("typicality search limited to mn <= " + std::to_string(search_limit));
    }
    const Weight shifted = lambda + rho_triple(ctx).total;
    std::vector<Root> vanishing;
    for (const auto &r : positive_roots(ctx)) {
        if (r.is_odd() && form(shifted, r.to_weight(ctx)) == 0) {
            vanishing.push_back(r);
        }
    }
    int best = 0;
    const std::size_t k = vanishing.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best) {
            continue;
        }
        bool orthogonal = true;
        for (std::size_t a = 0; a < k && orthogonal; ++a) {
            if (!(mask & (1u << a))) {
                continue;
            }
            for (std::size_t b = a + 1; b < k; ++b) {
                if ((mask & (1u << b)) &&
                    form(vanishing[a].to_weight(ctx), vanishing[b].to_weight(ctx)) != 0) {
                    orthogonal = false;
                    break;
                }
            }
        }
        if (orthogonal) {
            best = size;
        }
    }
    return {best == 0, best};
}

// ch L0(lambda) times the product over odd positive roots of (1 + e^{-alpha}),
// with e^{d_i} -> x_i and e^{e_j} -> y_j.
inline LaurentSeries kac_character(const Weight &lambda, const Vars &vars, int x_family, int y_family)
{
    const HookContext ctx = lambda.context();
    if (vars->family(x_family).count != ctx.m || vars->family(y_family).count != ctx.n) {
        throw std::invalid_argument("variable families do not match gl(m|n)");
    }
    if (!lambda.is_integral()) {
        throw std::invalid_argument("kac_character needs an integral weight");
    }
    std::vector<int> dpart, epart;
    for (const auto &c : lambda.delta()) {
        dpart.push_back(static_cast<int>(c.get_num().get_si()));
    }
    for (const auto &c : lambda.epsilon()) {
        epart.push_back(static_cast<int>(c.get_num().get_si()));
    }
    LaurentSeries out = gl_character(dpart, vars, x_family) * gl_character(epart, vars, y_family);
    for (int i = 0; i < ctx.m; ++i) {
        for (int j = 0; j < ctx.n; ++j) {
            Exponents e(vars->size(), 0);
            e[vars->flat({x_family, i})] = -1;
            e[vars->flat({y_family, j})] = 1;
            out = out * (LaurentSeries::one(vars) + LaurentSeries::monomial(vars, e));
        }
    }
    return out;
}

inline nlohmann::json to_json(const Weight &w)
{
    nlohmann::json d = nlohmann::json::array(), e = nlohmann::json::array();
    for (const auto &c : w.delta()) {
        d.push_back(c.get_str());
    }
    for (const auto &c : w.epsilon()) {
        e.push_back(c.get_str());
    }
    return {{"delta", d}, {"epsilon", e}};
}

inline Weight weight_from_json(const nlohmann::json &j)
{
    std::vector<Rational> d, e;
    for (const auto &c : j.at("delta")) {
        d.push_back(parse_rational(c.get<std::string>()));
    }
    for (const auto &c : j.at("epsilon")) {
        e.push_back(parse_rational(c.get<std::string>()));
    }
    return Weight(std::move(d), std::move(e));
}

} // namespace superdual
