#pragma once

#include <superdual/cinfty.hpp>
#include <superdual/glroots.hpp>
#include <superdual/partition.hpp>
#include <superdual/polyring.hpp>
#include <superdual/superweyl.hpp>
#include <superdual/symfunc.hpp>
#include <superdual/tableaux.hpp>
#include <superdual/tail_weight.hpp>
#include <superdual/tensor.hpp>

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

// Self-checking suites shared by the command line tool and the acceptance
// runner. Each one evaluates an identity case by case and keeps the first
// case that disagrees.
namespace superdual::verify {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;
    std::optional<std::string> first_discrepancy;
    nlohmann::json details = nlohmann::json::object();

    // Records one case; `describe` only runs on failure.
    bool check(bool ok, const std::function<std::string()> &describe)
    {
        ++checks;
        if (!ok) {
            if (passed) {
                first_discrepancy = describe();
            }
            passed = false;
        }
        return ok;
    }

    void absorb(const SuiteResult &other)
    {
        checks += other.checks;
        if (!other.passed && passed) {
            first_discrepancy = other.name + ": " + other.first_discrepancy.value_or("failed");
        }
        passed = passed && other.passed;
    }
};

inline nlohmann::json to_json(const SuiteResult &r)
{
    nlohmann::json j = {{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}};
    if (r.first_discrepancy) {
        j["first_discrepancy"] = *r.first_discrepancy;
    }
    if (!r.details.empty()) {
        j["details"] = r.details;
    }
    return j;
}

namespace detail {

inline Vars hook_vars(HookContext ctx) { return make_vars({{"x", ctx.m}, {"y", ctx.n}}); }

inline std::string ctx_label(HookContext ctx)
{
    return "gl(" + std::to_string(ctx.m) + "|" + std::to_string(ctx.n) + ")";
}

inline std::vector<Partition> hooks_up_to(HookContext ctx, int max_size)
{
    std::vector<Partition> out;
    for (int k = 0; k <= max_size; ++k) {
        for (auto &p : hook_partitions(k, ctx)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace detail

// Tableau sum against the sum over subpartitions.
inline SuiteResult hook_schur_suite(HookContext ctx, int max_size)
{
    SuiteResult r{"hook-schur"};
    const Vars vars = detail::hook_vars(ctx);
    for (const auto &lambda : detail::hooks_up_to(ctx, max_size)) {
        const LaurentSeries lhs = character_via_tableaux(lambda, ctx, vars, 0, 1);
        const LaurentSeries rhs = hook_schur(lambda, vars, 0, 1).value;
        r.check(lhs == rhs, [&] {
            return detail::ctx_label(ctx) + " lambda=" + lambda.to_string() + ": tableaux " + lhs.to_string() +
                   " vs hook Schur " + rhs.to_string();
        });
    }
    return r;
}

// hs(x, 0) = s(x), hs(0, y) = s'(y) and hs_lambda(y, x) = hs_lambda'(x, y).
inline SuiteResult specialization_suite(HookContext ctx, int max_size)
{
    SuiteResult r{"specializations"};
    const Vars vars = detail::hook_vars(ctx);
    for (int k = 0; k <= max_size; ++k) {
        for (const auto &lambda : partitions_of(k)) {
            const std::string tag = detail::ctx_label(ctx) + " lambda=" + lambda.to_string();
            const LaurentSeries hs = hook_schur(lambda, vars, 0, 1).value;
            const LaurentSeries no_y = evaluate_families(hs, {1}, 0);
            const LaurentSeries no_x = evaluate_families(hs, {0}, 0);
            r.check(no_y == schur(lambda, vars, 0), [&] { return tag + ": hs(x, 0) != s(x)"; });
            r.check(no_x == schur(lambda.conjugate(), vars, 1), [&] { return tag + ": hs(0, y) != s'(y)"; });
            const LaurentSeries swapped = hook_schur(lambda, vars, 1, 0).value;
            const LaurentSeries conj = hook_schur(lambda.conjugate(), vars, 0, 1).value;
            r.check(swapped == conj, [&] { return tag + ": hs(y, x) != hs'(x, y)"; });
        }
    }
    return r;
}

inline SuiteResult sergeev_suite(int m, int n, int d)
{
    SuiteResult r{"sergeev"};
    const tensor::DecompositionReport rep = tensor::decompose(m, n, d);
    const std::string tag = "(m,n,d)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
    r.check(rep.commuting, [&] { return tag + ": gl(m|n) and S_d actions do not supercommute"; });
    r.check(rep.dimension_identity, [&] { return tag + ": dimension identity fails"; });
    for (const auto &e : rep.entries) {
        r.check(!e.hook || e.singular_dim == e.specht_dim, [&] {
            return tag + " lambda=" + e.lambda.to_string() + ": singular dim " + std::to_string(e.singular_dim) +
                   " != f = " + std::to_string(e.specht_dim);
        });
    }
    r.check(rep.singular_matches_specht, [&] { return tag + ": hook set and nonzero hs_lambda(1,1) disagree"; });
    r.check(rep.character_identity, [&] { return tag + ": character identity fails"; });
    r.details = tensor::to_json(rep);
    return r;
}

// Kac character against hs for typical hooks; atypical ones must differ.
inline SuiteResult typical_suite(HookContext ctx, int max_size)
{
    SuiteResult r{"typical"};
    const Vars vars = detail::hook_vars(ctx);
    int typical = 0, atypical_differ = 0;
    for (const auto &lambda : detail::hooks_up_to(ctx, max_size)) {
        const Weight nat = natural_weight(lambda, ctx);
        const bool is_typical = typicality(nat).typical;
        const LaurentSeries kac = kac_character(nat, vars, 0, 1);
        const LaurentSeries hs = hook_schur(lambda, vars, 0, 1).value;
        const bool criterion = ctx.m == 0 || lambda[static_cast<std::size_t>(ctx.m - 1)] >= ctx.n;
        const std::string tag = detail::ctx_label(ctx) + " lambda=" + lambda.to_string();
        r.check(criterion == is_typical, [&] { return tag + ": typicality disagrees with lambda_m >= n"; });
        if (is_typical) {
            ++typical;
            r.check(kac == hs, [&] { return tag + ": Kac character " + kac.to_string() + " != hs " + hs.to_string(); });
        } else {
            atypical_differ += kac == hs ? 0 : 1;
            r.check(kac != hs, [&] { return tag + ": atypical but Kac character equals hs"; });
        }
    }
    r.details = {{"typical", typical}, {"atypical_differing", atypical_differ}};
    return r;
}

inline SuiteResult atypicality_suite(HookContext ctx, int max_size)
{
    SuiteResult r{"atypicality"};
    for (const auto &lambda : detail::hooks_up_to(ctx, max_size)) {
        const int brute = typicality(natural_weight(lambda, ctx)).degree;
        const int rect = rectangle_atypicality(lambda, ctx);
        r.check(brute == rect, [&] {
            return detail::ctx_label(ctx) + " lambda=" + lambda.to_string() + ": orthogonal-set degree " +
                   std::to_string(brute) + " vs rectangle count " + std::to_string(rect);
        });
    }
    return r;
}

// Highest weights reached from the standard Borel by chains of odd
// reflections, one entry per shuffle path from the standard word to `target`
// (only the first path unless `all_paths`).
inline std::vector<Weight> odd_reflection_folds(const Partition &lambda, const BorelWord &target, bool all_paths)
{
    const HookContext ctx = target.context();
    const std::string &goal = target.letters();
    // Position of the i-th d and j-th e in the target word.
    std::vector<int> dpos, epos;
    for (int t = 0; t < static_cast<int>(goal.size()); ++t) {
        (goal[static_cast<std::size_t>(t)] == 'd' ? dpos : epos).push_back(t);
    }
    std::vector<Weight> out;
    auto walk = [&](auto &&self, std::string word, const Weight &mu) -> void {
        if (word == goal) {
            out.push_back(mu);
            return;
        }
        int di = 0, ej = 0;
        for (std::size_t t = 0; t + 1 < word.size(); ++t) {
            if (word[t] == 'd') {
                ++di;
            } else {
                ++ej;
            }
            if (word[t] != 'd' || word[t + 1] != 'e') {
                continue;
            }
            // Swapping moves e_{ej+1} ahead of d_di; only allowed if the target agrees.
            if (epos[static_cast<std::size_t>(ej)] > dpos[static_cast<std::size_t>(di - 1)]) {
                continue;
            }
            const Root alpha{SuperIndex::delta(di), SuperIndex::epsilon(ej + 1)};
            std::string next = word;
            std::swap(next[t], next[t + 1]);
            self(self, next, odd_reflect_weight(mu, alpha));
            if (!all_paths && !out.empty()) {
                return;
            }
        }
    };
    walk(walk, BorelWord::standard(ctx).letters(), natural_weight(lambda, ctx));
    return out;
}

inline SuiteResult extremal_suite(HookContext ctx, int max_size, const std::vector<Partition> &extra = {})
{
    SuiteResult r{"extremal"};
    const bool all_paths = ctx.m + ctx.n <= 4;
    std::vector<Partition> shapes = detail::hooks_up_to(ctx, max_size);
    for (const auto &p : extra) {
        if (is_hook(p, ctx)) {
            shapes.push_back(p);
        }
    }
    for (const auto &word : all_borel_words(ctx)) {
        for (const auto &lambda : shapes) {
            const Weight direct = extremal_weight(lambda, word);
            const std::vector<Weight> folds = odd_reflection_folds(lambda, word, all_paths);
            const std::string tag =
                detail::ctx_label(ctx) + " word=" + word.letters() + " lambda=" + lambda.to_string();
            r.check(!folds.empty(), [&] { return tag + ": no shuffle path reaches the word"; });
            for (const auto &f : folds) {
                r.check(f == direct, [&] {
                    return tag + ": peeled weight " + direct.to_string() + " vs odd reflection fold " + f.to_string();
                });
            }
        }
    }
    return r;
}

inline SuiteResult frobenius_suite(int max_size)
{
    SuiteResult r{"frobenius"};
    const Partition golden{7, 5, 4, 3, 1};
    const FrobeniusCoordinates expected{{7, 4, 2}, {4, 2, 1}};
    const FrobeniusCoordinates got = modified_frobenius(golden);
    r.check(got == expected, [&] { return "7,5,4,3,1 gives " + got.to_string(); });
    for (int k = 0; k <= max_size; ++k) {
        for (const auto &lambda : partitions_of(k)) {
            const FrobeniusCoordinates fc = modified_frobenius(lambda);
            r.check(from_frobenius(fc) == lambda, [&] { return lambda.to_string() + ": round trip fails"; });
        }
    }
    return r;
}

// Joint highest weight vectors: killed by raising operators, correct weights,
// and harmonic when the symplectic partner exists.
inline SuiteResult hwv_suite(int m, int n, int d, int max_size)
{
    using namespace weyl;
    SuiteResult r{"hwv"};
    const Dims dims{m, n, d};
    const HookContext ctx{m, n};
    const RaisingOperators raising = raising_operators(dims);
    const auto gl_d = dual_pair_generators(GeneratorKind::gl_d, dims);
    const auto gl_mn = dual_pair_generators(GeneratorKind::gl_mn, dims);
    std::vector<NamedOperator> deltas;
    if (d % 2 == 0) {
        for (auto &op : dual_pair_generators(GeneratorKind::osp_extra, dims)) {
            if (op.name.front() == 'D') {
                deltas.push_back(std::move(op));
            }
        }
    }
    auto find = [](const std::vector<NamedOperator> &ops, const std::string &name) -> const DiffOperator & {
        for (const auto &op : ops) {
            if (op.name == name) {
                return op.op;
            }
        }
        throw std::logic_error("missing operator " + name);
    };
    int harmonic_cases = 0;
    for (const auto &lambda : detail::hooks_up_to(ctx, max_size)) {
        if (static_cast<int>(lambda.length()) > d) {
            continue;
        }
        const SuperElement v = highest_weight_vector(lambda, dims);
        const std::string tag = "(m,n,d)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) +
                                ") lambda=" + lambda.to_string();
        r.check(!v.is_zero(), [&] { return tag + ": vector vanishes"; });
        for (const auto *family : {&raising.gl_d, &raising.gl_mn}) {
            for (const auto &op : *family) {
                r.check(op.op.apply(v).is_zero(), [&] { return tag + ": not killed by " + op.name; });
            }
        }
        for (int i = 1; i <= d; ++i) {
            const auto ev = eigenvalue(find(gl_d, weyl::detail::label("E", i, i)), v);
            const int want = lambda[static_cast<std::size_t>(i - 1)];
            r.check(ev && *ev == want, [&] { return tag + ": gl(d) weight at " + std::to_string(i) + " is not " + std::to_string(want); });
        }
        const Weight nat = natural_weight(lambda, ctx);
        for (int s = 1; s <= m; ++s) {
            const auto ev = eigenvalue(find(gl_mn, weyl::detail::label("Exx", s, s)), v);
            r.check(ev && *ev == nat[SuperIndex::delta(s)], [&] { return tag + ": gl(m|n) weight at d" + std::to_string(s); });
        }
        for (int k = 1; k <= n; ++k) {
            const auto ev = eigenvalue(find(gl_mn, weyl::detail::label("Eee", k, k)), v);
            r.check(ev && *ev == nat[SuperIndex::epsilon(k)], [&] { return tag + ": gl(m|n) weight at e" + std::to_string(k); });
        }
        if (d % 2 == 0 && 2 * static_cast<int>(lambda.length()) <= d) {
            ++harmonic_cases;
            for (const auto &op : deltas) {
                r.check(op.op.apply(v).is_zero(), [&] { return tag + ": not harmonic, " + op.name + " survives"; });
            }
        }
    }
    r.details = {{"harmonic_cases", harmonic_cases}};
    return r;
}

// sum_lambda s_lambda(u) hs_lambda(x, y) = prod (1 - x_i u_k)^-1 (1 + y_j u_k)
// and its n = 0 case sum s_lambda(u) s_lambda(x) = prod (1 - x_i u_k)^-1, both
// up to total degree `cutoff`.
inline SuiteResult howe_gl_suite(int m, int n, int d, int cutoff)
{
    SuiteResult r{"howe-gl"};
    const Vars vars = make_vars({{"x", m}, {"y", n}, {"u", d}});
    const std::string tag = "(m,n,d)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
    LaurentSeries bosonic = LaurentSeries::one(vars).truncated(cutoff);
    LaurentSeries product = bosonic;
    for (int k = 0; k < d; ++k) {
        const LaurentSeries u = LaurentSeries::variable(vars, {2, k});
        for (int i = 0; i < m; ++i) {
            bosonic = mul(bosonic, geometric_inverse(LaurentSeries::one(vars) - LaurentSeries::variable(vars, {0, i}) * u, cutoff), cutoff);
        }
    }
    product = bosonic;
    for (int k = 0; k < d; ++k) {
        const LaurentSeries u = LaurentSeries::variable(vars, {2, k});
        for (int j = 0; j < n; ++j) {
            product = mul(product, LaurentSeries::one(vars) + LaurentSeries::variable(vars, {1, j}) * u, cutoff);
        }
    }
    LaurentSeries hook_sum = LaurentSeries(vars).truncated(cutoff);
    LaurentSeries schur_sum = hook_sum;
    for (int size = 0; 2 * size <= cutoff; ++size) {
        for (const auto &lambda : partitions_of(size)) {
            if (static_cast<int>(lambda.length()) > d) {
                continue;
            }
            const LaurentSeries su = schur(lambda, vars, 2);
            hook_sum += mul(su, hook_schur(lambda, vars, 0, 1).value, cutoff);
            schur_sum += mul(su, schur(lambda, vars, 0), cutoff);
        }
    }
    const auto a = cinf::first_difference(hook_sum, product);
    r.check(!a, [&] { return tag + " identity A: " + *a; });
    const auto c = cinf::first_difference(schur_sum, bosonic);
    r.check(!c, [&] { return tag + " Cauchy: " + *c; });
    return r;
}

// Every sp(d) generator supercommutes with the shifted gl(m|n) and the extra
// osp generators on all monomials up to `max_degree`; sp(d) closes under the
// bracket.
inline SuiteResult sp_osp_commute_suite(int m, int n, int d, int max_degree)
{
    using namespace weyl;
    SuiteResult r{"sp-osp-commute"};
    const Dims dims{m, n, d};
    const auto sp = dual_pair_generators(GeneratorKind::sp_d, dims);
    const int half = d / 2;
    r.check(static_cast<int>(sp.size()) == half * (2 * half + 1), [&] {
        return "sp(d) has " + std::to_string(sp.size()) + " generators, expected " + std::to_string(half * (2 * half + 1));
    });
    std::vector<NamedOperator> partners = dual_pair_generators(GeneratorKind::gl_mn_shifted, dims);
    for (auto &op : dual_pair_generators(GeneratorKind::osp_extra, dims)) {
        partners.push_back(std::move(op));
    }
    const auto probes = monomials_up_to(dims, max_degree);
    for (const auto &a : sp) {
        for (const auto &b : partners) {
            for (const auto &v : probes) {
                if (!r.check(supercommutator_apply(a.op, b.op, v).is_zero(), [&] {
                        return "[" + a.name + ", " + b.name + "] acts nontrivially on " + v.to_string();
                    })) {
                    break;
                }
            }
        }
    }
    const auto closure = bracket_closure_failure(sp, probes);
    r.check(!closure, [&] { return "sp(d) bracket " + *closure + " leaves the span"; });
    r.details = {{"sp_generators", sp.size()}, {"partners", partners.size()}, {"probes", probes.size()}};
    return r;
}

inline SuiteResult from_report(const std::string &name, const cinf::VerificationReport &rep)
{
    SuiteResult r{name};
    r.check(rep.status, [&] { return rep.dims.dump() + ": " + rep.first_discrepancy.value_or("mismatch"); });
    r.details = cinf::to_json(rep);
    return r;
}

inline SuiteResult dual_c_suite(int ell, int cutoff) { return from_report("dual-c", cinf::verify_dual_c(ell, cutoff)); }

inline SuiteResult sp_osp_suite(int m, int n, int ell, int cutoff)
{
    return from_report("sp-osp", cinf::verify_sp_osp(m, n, ell, cutoff));
}

inline std::vector<std::vector<int>> sample_heads(int m)
{
    switch (m) {
    case 0:
        return {{}};
    case 1:
        return {{0}, {3}, {-2}};
    default: {
        std::vector<std::vector<int>> out{std::vector<int>(static_cast<std::size_t>(m), 0)};
        std::vector<int> h;
        for (int i = 0; i < m; ++i) {
            h.push_back(2 - 3 * i);
        }
        out.push_back(h);
        return out;
    }
    }
}

// The natural and theta maps and the truncation case split on every tail of
// size up to max_size, level in [-2, 2] and the sample heads of rank <= max_m.
inline SuiteResult superdual_suite(int max_size, int max_m)
{
    using namespace tail;
    SuiteResult r{"superdual"};
    for (int m = 0; m <= max_m; ++m) {
        for (const auto &head : sample_heads(m)) {
            for (int d = -2; d <= 2; ++d) {
                std::set<std::vector<int>> theta_images;
                int count = 0;
                for (int k = 0; k <= max_size; ++k) {
                    for (const auto &plus : partitions_of(k)) {
                        ++count;
                        const std::string tag = "m=" + std::to_string(m) + " d=" + std::to_string(d) + " plus=" + plus.to_string();
                        const TailWeight y = TailWeight::make_y(head, plus, d);
                        const TailWeight bar = natural_map(y);
                        r.check(bar.head() == head && bar.level() == d, [&] { return tag + ": natural map moved the head"; });
                        r.check(bar.tail_partition() == plus.conjugate(), [&] { return tag + ": natural tail is not the conjugate"; });
                        r.check(natural_map_inverse(bar) == y, [&] { return tag + ": natural round trip fails"; });
                        r.check(bar.tail_partition().size() == k, [&] { return tag + ": natural map changes the size"; });

                        const TailWeight th = theta_map(y);
                        theta_images.insert(th.tail_prefix());
                        r.check(th.head() == head, [&] { return tag + ": theta moved the head"; });
                        r.check(theta_inverse(th) == y, [&] { return tag + ": theta round trip fails"; });
                        const FrobeniusCoordinates fc = th.tail_frobenius();
                        int total = 0;
                        for (std::size_t i = 0; i < fc.p.size(); ++i) {
                            total += (th.coefficient(2 * static_cast<int>(i) + 1) + d) + (th.coefficient(2 * static_cast<int>(i) + 2) - d);
                        }
                        r.check(total == k, [&] { return tag + ": theta coefficients do not add up to the size"; });
                        r.check(from_frobenius(fc) == bar.tail_partition(), [&] { return tag + ": compatibility triangle fails"; });

                        // The conjugate has plus[0] rows, so truncation survives exactly from n = plus[0] on.
                        std::optional<Weight> previous;
                        for (int n = 1; n <= plus[0] + 2; ++n) {
                            const auto t = truncate_weight(bar, n);
                            const bool nonzero = std::holds_alternative<Weight>(t);
                            r.check(nonzero == (n >= plus[0]), [&] { return tag + " n=" + std::to_string(n) + ": truncation case split"; });
                            if (!nonzero) {
                                r.check(!previous, [&] { return tag + " n=" + std::to_string(n) + ": truncation not monotone"; });
                                continue;
                            }
                            const Weight &w = std::get<Weight>(t);
                            std::vector<int> eps;
                            const Partition conj = plus.conjugate();
                            for (int j = 0; j < n; ++j) {
                                eps.push_back(conj[static_cast<std::size_t>(j)] - d);
                            }
                            r.check(w == Weight::from_integers(head, eps), [&] { return tag + " n=" + std::to_string(n) + ": truncated weight " + w.to_string(); });
                            if (previous) {
                                bool extends = true;
                                for (int j = 1; j < n; ++j) {
                                    extends = extends && (*previous)[SuperIndex::epsilon(j)] == w[SuperIndex::epsilon(j)];
                                }
                                r.check(extends, [&] { return tag + " n=" + std::to_string(n) + ": truncation does not extend"; });
                            }
                            previous = w;
                        }
                    }
                }
                r.check(static_cast<int>(theta_images.size()) == count, [&] {
                    return "m=" + std::to_string(m) + " d=" + std::to_string(d) + ": theta is not injective";
                });
            }
        }
    }
    return r;
}

// C(m+n, m) Borel words; for every rank, the simple systems reachable from
// the standard one by odd and real reflections.
inline std::set<std::vector<Root>> reachable_simple_systems(HookContext ctx)
{
    std::set<std::vector<Root>> seen;
    std::vector<std::vector<Root>> queue{simple_roots(standard_basis(ctx))};
    while (!queue.empty()) {
        std::vector<Root> cur = std::move(queue.back());
        queue.pop_back();
        std::vector<Root> key = cur;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) {
            continue;
        }
        for (const auto &alpha : cur) {
            queue.push_back(alpha.is_odd() ? odd_reflect_roots(cur, alpha) : real_reflect_roots(cur, alpha));
        }
    }
    return seen;
}

inline SuiteResult borel_suite(HookContext ctx)
{
    SuiteResult r{"borel"};
    const auto words = all_borel_words(ctx);
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(ctx.m + ctx.n), static_cast<unsigned long>(ctx.m));
    const std::set<BorelWord> distinct(words.begin(), words.end());
    r.check(Integer(static_cast<unsigned long>(distinct.size())) == binom && distinct.size() == words.size(), [&] {
        return detail::ctx_label(ctx) + ": " + std::to_string(distinct.size()) + " words, expected " + binom.get_str();
    });
    const auto systems = reachable_simple_systems(ctx);
    Integer expected = binom;
    for (int k = 2; k <= ctx.m; ++k) {
        expected *= k;
    }
    for (int k = 2; k <= ctx.n; ++k) {
        expected *= k;
    }
    r.check(Integer(static_cast<unsigned long>(systems.size())) == expected, [&] {
        return detail::ctx_label(ctx) + ": " + std::to_string(systems.size()) + " simple systems, expected " + expected.get_str();
    });
    r.details = {{"words", words.size()}, {"simple_systems", systems.size()}};
    return r;
}

} // namespace superdual::verify
