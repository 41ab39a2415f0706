#pragma once

#include <superdual/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

// Command line front end. `run` takes the arguments without the program name
// and returns the exit status: 0 on success, 1 when a verification fails, 2
// on usage errors.
namespace superdual::cli {

enum class Format { text, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

// Thrown for bad flag values that only the module layer can detect.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string partition;
    std::optional<std::string> lambda;
    std::optional<int> m, n, d, ell, cutoff, kmax, max_size;
    std::optional<std::string> word;
    std::string suite;
    std::string format = "text";
};

namespace detail {

inline int require(const std::optional<int> &v, const char *flag, int fallback, int lo, int hi)
{
    const int x = v.value_or(fallback);
    if (x < lo || x > hi) {
        throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + std::to_string(x));
    }
    return x;
}

inline Partition partition_arg(const Options &o)
{
    const std::string text = o.lambda.value_or(o.partition);
    try {
        return Partition::parse(text);
    } catch (const std::exception &e) {
        throw UsageError("bad partition '" + text + "': " + e.what());
    }
}

inline HookContext context_arg(const Options &o, int default_m = 1, int default_n = 1)
{
    return {require(o.m, "--m", default_m, 0, 8), require(o.n, "--n", default_n, 0, 8)};
}

inline nlohmann::json series_json(const LaurentSeries &p)
{
    return {{"variables", variables_to_json(*p.vars())}, {"terms", to_json(p)}};
}

inline void emit(std::ostream &out, Format f, const std::string &text, const nlohmann::json &j)
{
    if (f == Format::json) {
        out << j.dump(2) << '\n';
    } else {
        out << text << '\n';
    }
}

inline std::string series_text(const LaurentSeries &p) { return p.is_zero() ? "0" : p.to_string(); }

} // namespace detail

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"hook-schur", "specializations", "sergeev", "typical",
                                                "atypicality", "extremal", "frobenius", "hwv",
                                                "howe-gl", "sp-osp-commute", "dual-c", "sp-osp",
                                                "superdual", "borel"};
    return names;
}

// Runs one suite with its defaults overridden by whichever flags were given.
inline verify::SuiteResult run_suite(const std::string &name, const Options &o)
{
    using namespace verify;
    using detail::require;
    auto ctx = [&](int dm, int dn) { return detail::context_arg(o, dm, dn); };
    if (name == "hook-schur") {
        return hook_schur_suite(ctx(2, 2), require(o.max_size, "--max-size", 6, 0, 10));
    }
    if (name == "specializations") {
        return specialization_suite(ctx(2, 2), require(o.max_size, "--max-size", 6, 0, 10));
    }
    if (name == "sergeev") {
        const HookContext c = ctx(1, 1);
        return sergeev_suite(c.m, c.n, require(o.d, "--d", 2, 1, 8));
    }
    if (name == "typical") {
        return typical_suite(ctx(2, 2), require(o.max_size, "--max-size", 6, 0, 8));
    }
    if (name == "atypicality") {
        return atypicality_suite(ctx(2, 2), require(o.max_size, "--max-size", 8, 0, 12));
    }
    if (name == "extremal") {
        return extremal_suite(ctx(2, 2), require(o.max_size, "--max-size", 13, 0, 16), {Partition{7, 2, 2, 1, 1}});
    }
    if (name == "frobenius") {
        return frobenius_suite(require(o.max_size, "--max-size", 10, 0, 20));
    }
    if (name == "hwv") {
        const HookContext c = ctx(1, 1);
        return hwv_suite(c.m, c.n, require(o.d, "--d", 2, 1, 4), require(o.max_size, "--max-size", 4, 0, 6));
    }
    if (name == "howe-gl") {
        const HookContext c = ctx(2, 2);
        return howe_gl_suite(c.m, c.n, require(o.d, "--d", 2, 1, 4), require(o.cutoff, "--cutoff", 6, 0, 8));
    }
    if (name == "sp-osp-commute") {
        const HookContext c = ctx(1, 1);
        const int d = require(o.d, "--d", 2, 2, 4);
        if (d % 2 != 0) {
            throw UsageError("--d must be even for the symplectic pair");
        }
        return sp_osp_commute_suite(c.m, c.n, d, require(o.cutoff, "--cutoff", 4, 0, 5));
    }
    if (name == "dual-c") {
        return dual_c_suite(require(o.ell, "--ell", 1, 1, 3), require(o.cutoff, "--cutoff", 5, 0, 7));
    }
    if (name == "sp-osp") {
        const HookContext c = ctx(1, 1);
        if (c.m + c.n < 1) {
            throw UsageError("sp-osp needs m + n >= 1");
        }
        return sp_osp_suite(c.m, c.n, require(o.ell, "--ell", 1, 1, 2), require(o.cutoff, "--cutoff", 4, 0, 6));
    }
    if (name == "superdual") {
        return superdual_suite(require(o.max_size, "--max-size", 8, 0, 10), require(o.m, "--m", 2, 0, 4));
    }
    if (name == "borel") {
        return borel_suite(ctx(1, 2));
    }
    throw UsageError("unknown suite " + name);
}

namespace detail {

inline int command(const std::string &name, const Options &o, Format fmt, std::ostream &out)
{
    if (name == "conjugate") {
        const Partition p = partition_arg(o);
        const Partition c = p.conjugate();
        emit(out, fmt, c.to_string(), {{"partition", p.parts()}, {"conjugate", c.parts()}});
        return exit_ok;
    }
    if (name == "frobenius") {
        const Partition p = partition_arg(o);
        const FrobeniusCoordinates fc = modified_frobenius(p);
        emit(out, fmt, fc.to_string(), {{"partition", p.parts()}, {"p", fc.p}, {"q", fc.q}});
        return exit_ok;
    }
    if (name == "hook-check") {
        const Partition p = partition_arg(o);
        const HookContext c = context_arg(o);
        const bool hook = is_hook(p, c);
        nlohmann::json j = {{"partition", p.parts()}, {"m", c.m}, {"n", c.n}, {"hook", hook}};
        std::string text = hook ? "hook" : "not a hook";
        if (hook) {
            const int atyp = rectangle_atypicality(p, c);
            j["atypicality"] = atyp;
            text += ", atypicality " + std::to_string(atyp);
        }
        emit(out, fmt, text, j);
        return exit_ok;
    }
    if (name == "hs") {
        const Partition p = partition_arg(o);
        const HookContext c = context_arg(o);
        const Vars vars = verify::detail::hook_vars(c);
        const LaurentSeries hs = hook_schur(p, vars, 0, 1).value;
        nlohmann::json j = series_json(hs);
        j["partition"] = p.parts();
        emit(out, fmt, series_text(hs), j);
        return exit_ok;
    }
    if (name == "char-tableaux") {
        const Partition p = partition_arg(o);
        const HookContext c = context_arg(o);
        if (p.size() > default_tableau_size_limit) {
            throw UsageError("char-tableaux is limited to |lambda| <= " + std::to_string(default_tableau_size_limit));
        }
        const Vars vars = verify::detail::hook_vars(c);
        const LaurentSeries ch = character_via_tableaux(p, c, vars, 0, 1);
        nlohmann::json j = series_json(ch);
        j["partition"] = p.parts();
        emit(out, fmt, series_text(ch), j);
        return exit_ok;
    }
    if (name == "kac-char") {
        const Partition p = partition_arg(o);
        const HookContext c = context_arg(o);
        if (!is_hook(p, c)) {
            throw UsageError("kac-char needs an (m|n)-hook partition");
        }
        const Vars vars = verify::detail::hook_vars(c);
        const Weight w = natural_weight(p, c);
        const LaurentSeries ch = kac_character(w, vars, 0, 1);
        nlohmann::json j = series_json(ch);
        j["highest_weight"] = to_json(w);
        emit(out, fmt, series_text(ch), j);
        return exit_ok;
    }
    if (name == "typicality") {
        const Partition p = partition_arg(o);
        const HookContext c = context_arg(o);
        if (!is_hook(p, c)) {
            throw UsageError("typicality needs an (m|n)-hook partition");
        }
        const Weight w = natural_weight(p, c);
        const Typicality t = typicality(w);
        emit(out, fmt, t.typical ? "typical" : "atypical, degree " + std::to_string(t.degree),
             {{"highest_weight", to_json(w)}, {"typical", t.typical}, {"degree", t.degree}});
        return exit_ok;
    }
    if (name == "extremal") {
        const Partition p = partition_arg(o);
        std::vector<BorelWord> words;
        if (o.word) {
            BorelWord b(*o.word);
            if (o.m || o.n) {
                const HookContext c = context_arg(o);
                if (!(c == b.context())) {
                    throw UsageError("--word does not match --m/--n");
                }
            }
            words.push_back(std::move(b));
        } else {
            words = all_borel_words(context_arg(o));
        }
        if (!is_hook(p, words.front().context())) {
            throw UsageError("extremal needs an (m|n)-hook partition");
        }
        std::string text;
        nlohmann::json j = nlohmann::json::array();
        for (const auto &b : words) {
            const Weight w = extremal_weight(p, b);
            text += (text.empty() ? "" : "\n") + (words.size() > 1 ? b.letters() + ": " : "") + w.to_string();
            j.push_back({{"word", b.letters()}, {"weight", to_json(w)}});
        }
        emit(out, fmt, text, o.word ? j.front() : j);
        return exit_ok;
    }
    if (name == "osp-labels") {
        const Partition p = partition_arg(o);
        const HookContext c = context_arg(o);
        if (!is_hook(p, c)) {
            throw UsageError("osp-labels needs an (m|n)-hook partition");
        }
        const OspLabels l = osp_labels(p, c);
        emit(out, fmt, "natural: " + l.natural.to_string() + "\nnatural-minus: " + l.natural_minus.to_string(),
             {{"natural", to_json(l.natural)}, {"natural_minus", to_json(l.natural_minus)}});
        return exit_ok;
    }
    if (name == "hwv") {
        const Partition p = partition_arg(o);
        const HookContext c = context_arg(o);
        const weyl::Dims dims{c.m, c.n, require(o.d, "--d", 2, 1, 6)};
        const weyl::SuperElement v = weyl::highest_weight_vector(p, dims);
        emit(out, fmt, v.to_string(), {{"partition", p.parts()}, {"vector", v.to_string()}});
        return exit_ok;
    }
    if (name == "decompose") {
        const HookContext c = context_arg(o);
        const tensor::DecompositionReport rep = tensor::decompose(c.m, c.n, require(o.d, "--d", 2, 1, 8));
        std::string text = "dim " + rep.total_dim.get_str();
        for (const auto &e : rep.entries) {
            if (e.hook) {
                text += "\n" + e.lambda.to_string() + ": hs(1,1)=" + e.hs_dim.get_str() +
                        " f=" + std::to_string(e.specht_dim) + " singular=" + std::to_string(e.singular_dim);
            }
        }
        text += std::string("\nidentities: ") + (rep.ok() ? "hold" : "FAIL");
        emit(out, fmt, text, tensor::to_json(rep));
        return rep.ok() ? exit_ok : exit_failed;
    }
    if (name == "cinf-char") {
        const Partition p = partition_arg(o);
        const int d = require(o.d, "--d", 2, 0, 8);
        const int cutoff = require(o.cutoff, "--cutoff", 4, 0, 8);
        const int k = o.kmax ? require(o.kmax, "--kmax", 0, 0, 16) : cinf::sufficient_kmax(p, d, cutoff);
        const Vars vars = make_vars({{"x", std::max(cutoff, 1)}});
        const LaurentSeries ch = cinf::cinf_character(p, d, cutoff, k, vars, 0);
        nlohmann::json j = series_json(ch);
        j["k_max"] = k;
        j["cutoff"] = cutoff;
        emit(out, fmt, series_text(ch), j);
        return exit_ok;
    }
    if (name == "osp-char") {
        const Partition p = partition_arg(o);
        const HookContext c = context_arg(o);
        const int ell = require(o.ell, "--ell", 1, 1, 3);
        const int cutoff = require(o.cutoff, "--cutoff", 3, 0, 6);
        const int k = o.kmax ? require(o.kmax, "--kmax", 0, 0, 16) : cinf::sufficient_kmax(p, 2 * ell, cutoff);
        const Vars vars = make_vars({{"x", c.n}, {"y", c.m}});
        const LaurentSeries ch = cinf::osp_character(p, c, ell, cutoff, k, vars, 0, 1);
        nlohmann::json j = series_json(ch);
        j["k_max"] = k;
        j["cutoff"] = cutoff;
        emit(out, fmt, series_text(ch), j);
        return exit_ok;
    }
    if (name == "verify") {
        const verify::SuiteResult r = run_suite(o.suite, o);
        std::string text = (r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checks) + " checks)";
        if (r.first_discrepancy) {
            text += "\nfirst discrepancy: " + *r.first_discrepancy;
        }
        emit(out, fmt, text, verify::to_json(r));
        return r.passed ? exit_ok : exit_failed;
    }
    throw UsageError("unknown command " + name);
}

} // namespace detail

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Hook Schur functions, Howe dualities and super duality weight combinatorics", "superdual"};
    app.require_subcommand(1);
    Options o;

    struct Spec {
        const char *name;
        const char *help;
        bool partition;
        std::vector<const char *> flags;
    };
    const std::vector<Spec> specs{
        {"conjugate", "conjugate partition", true, {}},
        {"frobenius", "modified Frobenius coordinates", true, {}},
        {"hook-check", "(m|n)-hook test and atypicality", true, {"m", "n"}},
        {"hs", "hook Schur polynomial", true, {"m", "n", "lambda"}},
        {"char-tableaux", "character as a sum over hook tableaux", true, {"m", "n"}},
        {"kac-char", "Kac module character of the natural weight", true, {"m", "n"}},
        {"typicality", "typicality and degree of atypicality", true, {"m", "n"}},
        {"extremal", "highest weight for a Borel word", true, {"m", "n", "word"}},
        {"osp-labels", "osp highest weight labels", true, {"m", "n"}},
        {"hwv", "joint highest weight vector", true, {"m", "n", "d"}},
        {"decompose", "Schur-Sergeev decomposition of the tensor space", false, {"m", "n", "d"}},
        {"verify", "run a verification suite", false, {"m", "n", "d", "ell", "cutoff", "max-size"}},
        {"cinf-char", "c_infinity character", true, {"d", "cutoff", "kmax"}},
        {"osp-char", "osp character", true, {"m", "n", "ell", "cutoff", "kmax"}},
    };
    std::map<std::string, CLI::App *> subs;
    for (const auto &s : specs) {
        CLI::App *sub = app.add_subcommand(s.name, s.help);
        subs[s.name] = sub;
        if (s.partition) {
            sub->add_option("partition", o.partition, "comma separated parts, empty or 0 for the empty partition");
        }
        if (std::string(s.name) == "verify") {
            sub->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
        }
        for (const std::string f : s.flags) {
            if (f == "lambda") {
                sub->add_option("--lambda", o.lambda, "partition (alternative to the positional)");
            } else if (f == "word") {
                sub->add_option("--word", o.word, "Borel word over d and e");
            } else {
                std::optional<int> *target = f == "m"        ? &o.m
                                             : f == "n"      ? &o.n
                                             : f == "d"      ? &o.d
                                             : f == "ell"    ? &o.ell
                                             : f == "cutoff" ? &o.cutoff
                                             : f == "kmax"   ? &o.kmax
                                                             : &o.max_size;
                sub->add_option("--" + f, *target);
            }
        }
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    const Format fmt = o.format == "json" ? Format::json : Format::text;
    std::string chosen;
    for (const auto &[name, sub] : subs) {
        if (sub->parsed()) {
            chosen = name;
        }
    }
    try {
        return detail::command(chosen, o, fmt, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    }
}

} // namespace superdual::cli
