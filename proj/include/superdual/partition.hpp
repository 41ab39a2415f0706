#pragma once

#include <superdual/weight.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superdual {

// A weakly decreasing sequence of positive integers. Trailing zeros are
// stripped on construction, so equal partitions compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) {
            parts_.pop_back();
        }
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) {
                throw std::invalid_argument("partition has a negative part");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
    }

    const std::vector<int> &parts() const { return parts_; }

    // Zero-based row access; rows past the length are empty.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::size_t length() const { return parts_.size(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const
    {
        std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
        for (int row : parts_) {
            for (int j = 0; j < row; ++j) {
                ++c[static_cast<std::size_t>(j)];
            }
        }
        return Partition(std::move(c));
    }

    bool contains(const Partition &mu) const
    {
        if (mu.length() > length()) {
            return false;
        }
        for (std::size_t i = 0; i < mu.length(); ++i) {
            if (mu.parts_[i] > parts_[i]) {
                return false;
            }
        }
        return true;
    }

    // Rows from index `from` onwards (zero-based).
    Partition tail(std::size_t from) const
    {
        if (from >= parts_.size()) {
            return {};
        }
        return Partition(std::vector<int>(parts_.begin() + static_cast<std::ptrdiff_t>(from), parts_.end()));
    }

    friend auto operator<=>(const Partition &, const Partition &) = default;

    // "7,5,4,3,1"; the empty partition renders as "".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    // Accepts "7,5,4,3,1"; "" and "0" denote the empty partition.
    static Partition parse(std::string_view text)
    {
        std::vector<int> parts;
        if (text.empty()) {
            return {};
        }
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (tok.empty()) {
                throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
            }
            int value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') {
                    throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
                }
                value = value * 10 + (c - '0');
                if (value > 1000000) {
                    throw std::invalid_argument("partition part too large");
                }
            }
            parts.push_back(value);
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition &lambda) { return lambda.conjugate(); }

// lambda is an (m|n)-hook partition when its (m+1)-st row is at most n.
inline bool is_hook(const Partition &lambda, HookContext ctx)
{
    check_context(ctx);
    return lambda[static_cast<std::size_t>(ctx.m)] <= ctx.n;
}

// Modified Frobenius coordinates: p_i = lambda_i - i + 1 and
// q_i = lambda'_i - i over the diagonal, so sum(p) + sum(q) = |lambda|.
struct FrobeniusCoordinates {
    std::vector<int> p;
    std::vector<int> q;

    friend bool operator==(const FrobeniusCoordinates &, const FrobeniusCoordinates &) = default;

    std::string to_string() const
    {
        auto join = [](const std::vector<int> &v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                s += (i ? "," : "") + std::to_string(v[i]);
            }
            return s;
        };
        return "p=" + join(p) + " q=" + join(q);
    }
};

inline FrobeniusCoordinates modified_frobenius(const Partition &lambda)
{
    const Partition conj = lambda.conjugate();
    FrobeniusCoordinates fc;
    for (std::size_t i = 0;; ++i) {
        const int p = lambda[i] - static_cast<int>(i);
        if (p <= 0) {
            break;
        }
        fc.p.push_back(p);
        fc.q.push_back(std::max(conj[i] - static_cast<int>(i) - 1, 0));
    }
    return fc;
}

inline Partition from_frobenius(const FrobeniusCoordinates &fc)
{
    const std::size_t r = fc.p.size();
    if (fc.q.size() != r) {
        throw std::invalid_argument("Frobenius coordinates of unequal length");
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (fc.p[i] < 1 || fc.q[i] < 0 || (i > 0 && (fc.p[i] >= fc.p[i - 1] || fc.q[i] >= fc.q[i - 1]))) {
            throw std::invalid_argument("Frobenius coordinates must be strictly decreasing with p > 0, q >= 0");
        }
    }
    std::vector<int> rows;
    for (std::size_t i = 0; i < r; ++i) {
        rows.push_back(fc.p[i] + static_cast<int>(i));
    }
    // Below the diagonal block, row i counts the diagonal columns reaching it.
    for (int i = static_cast<int>(r) + 1;; ++i) {
        int count = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (fc.q[j] + static_cast<int>(j) + 1 >= i) {
                ++count;
            }
        }
        if (count == 0) {
            break;
        }
        rows.push_back(count);
    }
    return Partition(std::move(rows));
}

// Smallest i such that the rectangle of m-i rows of length n-i fits inside
// lambda. For hook partitions this equals the degree of atypicality of the
// associated gl(m|n) weight.
inline int rectangle_atypicality(const Partition &lambda, HookContext ctx)
{
    if (!is_hook(lambda, ctx)) {
        throw std::invalid_argument("rectangle atypicality needs an (m|n)-hook partition");
    }
    const int top = std::min(ctx.m, ctx.n);
    for (int i = 0; i <= top; ++i) {
        const int rows = ctx.m - i;
        const int cols = ctx.n - i;
        if (rows == 0 || cols == 0 || lambda[static_cast<std::size_t>(rows - 1)] >= cols) {
            return i;
        }
    }
    return top;
}

// The gl(m|n) highest weights attached to a hook partition: the natural label
// sum(mu_i d_i) + sum(nu_j e_j) with nu the conjugate of the rows below m,
// and its twin with the last epsilon coefficient negated.
struct OspLabels {
    Weight natural;
    Weight natural_minus;
};

inline Weight natural_weight(const Partition &mu, HookContext ctx)
{
    if (!is_hook(mu, ctx)) {
        throw std::invalid_argument("partition " + mu.to_string() + " is not an (" +
                                    std::to_string(ctx.m) + "|" + std::to_string(ctx.n) + ")-hook");
    }
    Weight w(ctx);
    for (int i = 1; i <= ctx.m; ++i) {
        w[SuperIndex::delta(i)] = mu[static_cast<std::size_t>(i - 1)];
    }
    const Partition nu = mu.tail(static_cast<std::size_t>(ctx.m)).conjugate();
    for (int j = 1; j <= ctx.n; ++j) {
        w[SuperIndex::epsilon(j)] = nu[static_cast<std::size_t>(j - 1)];
    }
    return w;
}

inline OspLabels osp_labels(const Partition &mu, HookContext ctx)
{
    OspLabels labels{natural_weight(mu, ctx), natural_weight(mu, ctx)};
    if (ctx.n > 0) {
        auto &last = labels.natural_minus[SuperIndex::epsilon(ctx.n)];
        last = -last;
    }
    return labels;
}

// Number of standard Young tableaux, by the hook length formula.
inline std::int64_t specht_dimension(const Partition &lambda)
{
    const int d = lambda.size();
    if (d > 20) {
        throw std::invalid_argument("specht_dimension supports |lambda| <= 20");
    }
    const Partition conj = lambda.conjugate();
    Integer num = 1, den = 1;
    for (int k = 2; k <= d; ++k) {
        num *= k;
    }
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            den *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
        }
    }
    Integer q = num / den;
    return q.get_si();
}

// All partitions of d in reverse lexicographic order, (d) first.
inline std::vector<Partition> partitions_of(int d)
{
    if (d < 0) {
        throw std::invalid_argument("negative partition size");
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

inline std::vector<Partition> partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    for (int d = 0; d <= max_size; ++d) {
        auto level = partitions_of(d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<Partition> hook_partitions(int d, HookContext ctx)
{
    std::vector<Partition> out;
    for (auto &p : partitions_of(d)) {
        if (is_hook(p, ctx)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace superdual
