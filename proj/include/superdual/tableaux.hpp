#pragma once

#include <superdual/partition.hpp>
#include <superdual/polyring.hpp>
#include <superdual/symfunc.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace superdual {

// Multiplicities of d1..dm and e1..en in a filling.
struct Content {
    std::vector<int> nu;
    std::vector<int> mu;

    friend auto operator<=>(const Content &, const Content &) = default;
};

struct HookTableau {
    Partition shape;
    std::vector<std::vector<SuperIndex>> rows;

    Content content(HookContext ctx) const
    {
        Content c{std::vector<int>(static_cast<std::size_t>(ctx.m), 0), std::vector<int>(static_cast<std::size_t>(ctx.n), 0)};
        for (const auto &row : rows) {
            for (const auto &s : row) {
                auto &slot = s.is_delta() ? c.nu : c.mu;
                if (s.index < 1 || static_cast<std::size_t>(s.index) > slot.size()) {
                    throw std::out_of_range("tableau entry outside gl(m|n)");
                }
                ++slot[static_cast<std::size_t>(s.index - 1)];
            }
        }
        return c;
    }

    friend bool operator==(const HookTableau &, const HookTableau &) = default;
};

// Rows and columns weakly increase, delta entries strictly increase down
// columns and epsilon entries strictly increase along rows.
inline bool is_hook_tableau(const HookTableau &t, HookContext ctx)
{
    if (t.rows.size() != t.shape.length()) {
        return false;
    }
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (static_cast<int>(t.rows[r].size()) != t.shape[r]) {
            return false;
        }
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            const SuperIndex v = t.rows[r][c];
            const int bound = v.is_delta() ? ctx.m : ctx.n;
            if (v.index < 1 || v.index > bound) {
                return false;
            }
            if (c > 0) {
                const SuperIndex left = t.rows[r][c - 1];
                if (left > v || (left == v && v.is_odd())) {
                    return false;
                }
            }
            if (r > 0) {
                const SuperIndex up = t.rows[r - 1][c];
                if (up > v || (up == v && v.is_delta())) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline constexpr int default_tableau_size_limit = 12;

namespace detail {

inline std::vector<SuperIndex> alphabet(HookContext ctx)
{
    std::vector<SuperIndex> out;
    for (int i = 1; i <= ctx.m; ++i) {
        out.push_back(SuperIndex::delta(i));
    }
    for (int j = 1; j <= ctx.n; ++j) {
        out.push_back(SuperIndex::epsilon(j));
    }
    return out;
}

// Column-major backtracking over hook tableaux. With a budget, each symbol
// may be used at most as often as the budget allows.
template <typename Visit>
void hook_tableau_search(const Partition &lambda, HookContext ctx, const Content *budget, Visit &&visit)
{
    check_context(ctx);
    const auto symbols = alphabet(ctx);
    std::vector<int> remaining;
    if (budget) {
        remaining.insert(remaining.end(), budget->nu.begin(), budget->nu.end());
        remaining.insert(remaining.end(), budget->mu.begin(), budget->mu.end());
    }
    const Partition conj = lambda.conjugate();
    struct Cell {
        std::size_t row;
        std::size_t col;
    };
    std::vector<Cell> cells;
    for (std::size_t c = 0; c < conj.length(); ++c) {
        for (int r = 0; r < conj[c]; ++r) {
            cells.push_back({static_cast<std::size_t>(r), c});
        }
    }
    std::vector<std::vector<int>> grid(lambda.length());
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        grid[r].assign(static_cast<std::size_t>(lambda[r]), -1);
    }
    const int m = ctx.m;
    auto rec = [&](auto &&self, std::size_t k) -> void {
        if (k == cells.size()) {
            visit(static_cast<const std::vector<std::vector<int>> &>(grid));
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 0;
        if (c > 0) {
            lo = std::max(lo, grid[r][c - 1]);
        }
        if (r > 0) {
            lo = std::max(lo, grid[r - 1][c]);
        }
        for (int s = lo; s < static_cast<int>(symbols.size()); ++s) {
            const bool odd = s >= m;
            if (c > 0 && odd && grid[r][c - 1] == s) {
                continue;
            }
            if (r > 0 && !odd && grid[r - 1][c] == s) {
                continue;
            }
            if (budget && remaining[static_cast<std::size_t>(s)] == 0) {
                continue;
            }
            if (budget) {
                --remaining[static_cast<std::size_t>(s)];
            }
            grid[r][c] = s;
            self(self, k + 1);
            if (budget) {
                ++remaining[static_cast<std::size_t>(s)];
            }
        }
        grid[r][c] = -1;
    };
    rec(rec, 0);
}

inline HookTableau grid_to_tableau(const Partition &lambda, HookContext ctx, const std::vector<std::vector<int>> &grid)
{
    HookTableau t{lambda, {}};
    for (const auto &row : grid) {
        std::vector<SuperIndex> out;
        for (int s : row) {
            out.push_back(s < ctx.m ? SuperIndex::delta(s + 1) : SuperIndex::epsilon(s - ctx.m + 1));
        }
        t.rows.push_back(std::move(out));
    }
    return t;
}

} // namespace detail

// Streams every (m|n) hook tableau of shape lambda to `visit`.
template <typename Visit>
void for_each_hook_tableau(const Partition &lambda, HookContext ctx, Visit &&visit,
                           int size_limit = default_tableau_size_limit)
{
    if (lambda.size() > size_limit) {
        throw std::invalid_argument("tableau enumeration limited to |lambda| <= " + std::to_string(size_limit));
    }
    detail::hook_tableau_search(lambda, ctx, nullptr, [&](const std::vector<std::vector<int>> &grid) {
        visit(detail::grid_to_tableau(lambda, ctx, grid));
    });
}

inline std::vector<HookTableau> enumerate_hook_tableaux(const Partition &lambda, HookContext ctx,
                                                        int size_limit = default_tableau_size_limit)
{
    std::vector<HookTableau> out;
    for_each_hook_tableau(lambda, ctx, [&](const HookTableau &t) { out.push_back(t); }, size_limit);
    return out;
}

// Number of hook tableaux of shape lambda with the given content.
inline std::int64_t count_content(const Partition &lambda, const Content &content, HookContext ctx)
{
    check_context(ctx);
    if (static_cast<int>(content.nu.size()) > ctx.m || static_cast<int>(content.mu.size()) > ctx.n) {
        throw std::invalid_argument("content has more entries than gl(m|n) allows");
    }
    Content padded = content;
    padded.nu.resize(static_cast<std::size_t>(ctx.m), 0);
    padded.mu.resize(static_cast<std::size_t>(ctx.n), 0);
    int total = 0;
    for (int v : padded.nu) {
        total += v;
        if (v < 0) {
            throw std::invalid_argument("negative content entry");
        }
    }
    for (int v : padded.mu) {
        total += v;
        if (v < 0) {
            throw std::invalid_argument("negative content entry");
        }
    }
    if (total != lambda.size()) {
        throw std::invalid_argument("content size differs from |lambda|");
    }
    std::int64_t count = 0;
    detail::hook_tableau_search(lambda, ctx, &padded, [&](const std::vector<std::vector<int>> &) { ++count; });
    return count;
}

// First m rows filled with d_i on row i; the rows below filled column by
// column, column j with e_j. Its content is the natural gl(m|n) label.
inline HookTableau distinguished_tableau(const Partition &lambda, HookContext ctx)
{
    if (!is_hook(lambda, ctx)) {
        throw std::invalid_argument("distinguished tableau needs an (m|n)-hook partition");
    }
    HookTableau t{lambda, {}};
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        std::vector<SuperIndex> row;
        for (int c = 0; c < lambda[r]; ++c) {
            row.push_back(static_cast<int>(r) < ctx.m ? SuperIndex::delta(static_cast<int>(r) + 1)
                                                      : SuperIndex::epsilon(c + 1));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Sum over partition contents of K_{lambda,(nu|mu)} m_nu(x) m_mu(y).
inline LaurentSeries character_via_tableaux(const Partition &lambda, HookContext ctx, const Vars &vars,
                                            int x_family, int y_family)
{
    if (vars->family(x_family).count != ctx.m || vars->family(y_family).count != ctx.n) {
        throw std::invalid_argument("variable families do not match gl(m|n)");
    }
    if (!is_hook(lambda, ctx)) {
        throw std::invalid_argument("character_via_tableaux needs an (m|n)-hook partition");
    }
    std::map<Content, std::int64_t> tally;
    detail::hook_tableau_search(lambda, ctx, nullptr, [&](const std::vector<std::vector<int>> &grid) {
        Content c{std::vector<int>(static_cast<std::size_t>(ctx.m), 0), std::vector<int>(static_cast<std::size_t>(ctx.n), 0)};
        for (const auto &row : grid) {
            for (int s : row) {
                if (s < ctx.m) {
                    ++c.nu[static_cast<std::size_t>(s)];
                } else {
                    ++c.mu[static_cast<std::size_t>(s - ctx.m)];
                }
            }
        }
        ++tally[c];
    });
    auto decreasing = [](const std::vector<int> &v) { return std::is_sorted(v.rbegin(), v.rend()); };
    LaurentSeries out(vars);
    for (const auto &[c, k] : tally) {
        if (!decreasing(c.nu) || !decreasing(c.mu)) {
            continue;
        }
        out += monomial_symmetric(Partition(c.nu), vars, x_family) * monomial_symmetric(Partition(c.mu), vars, y_family) *
               Rational(static_cast<long>(k));
    }
    return out;
}

inline nlohmann::json to_json(const HookTableau &t)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto &s : row) {
            r.push_back(s.to_string());
        }
        rows.push_back(std::move(r));
    }
    return {{"shape", t.shape.parts()}, {"rows", rows}};
}

inline HookTableau tableau_from_json(const nlohmann::json &j)
{
    HookTableau t{Partition(j.at("shape").get<std::vector<int>>()), {}};
    for (const auto &r : j.at("rows")) {
        std::vector<SuperIndex> row;
        for (const auto &s : r) {
            row.push_back(SuperIndex::parse(s.get<std::string>()));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace superdual
