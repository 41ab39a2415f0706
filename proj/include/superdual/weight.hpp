#pragma once

#include <superdual/rational.hpp>

#include <compare>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superdual {

// Rank data of gl(m|n): m even (delta) and n odd (epsilon) basis vectors.
struct HookContext {
    int m = 0;
    int n = 0;

    friend bool operator==(const HookContext &, const HookContext &) = default;
};

inline void check_context(const HookContext &ctx)
{
    if (ctx.m < 0 || ctx.n < 0) {
        throw std::invalid_argument("negative rank in hook context");
    }
}

// A basis label of C^{m|n}. Deltas sort before epsilons, so the defaulted
// ordering is 1bar < ... < mbar < 1 < ... < n.
struct SuperIndex {
    enum class Kind : unsigned char { delta, epsilon };

    Kind kind = Kind::delta;
    int index = 1;

    static SuperIndex delta(int i) { return {Kind::delta, i}; }
    static SuperIndex epsilon(int j) { return {Kind::epsilon, j}; }

    bool is_delta() const { return kind == Kind::delta; }
    bool is_odd() const { return kind == Kind::epsilon; }

    friend auto operator<=>(const SuperIndex &, const SuperIndex &) = default;

    std::string to_string() const
    {
        return (is_delta() ? "d" : "e") + std::to_string(index);
    }

    static SuperIndex parse(std::string_view text)
    {
        if (text.size() < 2 || (text[0] != 'd' && text[0] != 'e')) {
            throw std::invalid_argument("malformed basis label: '" + std::string(text) + "'");
        }
        int idx = 0;
        for (char c : text.substr(1)) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("malformed basis label: '" + std::string(text) + "'");
            }
            idx = idx * 10 + (c - '0');
        }
        if (idx < 1) {
            throw std::invalid_argument("basis labels are 1-based");
        }
        return {text[0] == 'd' ? Kind::delta : Kind::epsilon, idx};
    }
};

// An element of the weight lattice of gl(m|n) with rational coefficients.
class Weight {
public:
    Weight() = default;
    explicit Weight(HookContext ctx)
        : delta_(static_cast<std::size_t>(ctx.m)), epsilon_(static_cast<std::size_t>(ctx.n))
    {
        check_context(ctx);
    }
    Weight(std::vector<Rational> delta, std::vector<Rational> epsilon)
        : delta_(std::move(delta)), epsilon_(std::move(epsilon))
    {
    }

    static Weight from_integers(const std::vector<int> &delta, const std::vector<int> &epsilon)
    {
        Weight w(HookContext{static_cast<int>(delta.size()), static_cast<int>(epsilon.size())});
        for (std::size_t i = 0; i < delta.size(); ++i) {
            w.delta_[i] = delta[i];
        }
        for (std::size_t j = 0; j < epsilon.size(); ++j) {
            w.epsilon_[j] = epsilon[j];
        }
        return w;
    }

    static Weight basis(HookContext ctx, SuperIndex s)
    {
        Weight w(ctx);
        w[s] = 1;
        return w;
    }

    // The sum of all deltas minus the sum of all epsilons.
    static Weight one(HookContext ctx)
    {
        Weight w(ctx);
        for (auto &c : w.delta_) {
            c = 1;
        }
        for (auto &c : w.epsilon_) {
            c = -1;
        }
        return w;
    }

    HookContext context() const
    {
        return {static_cast<int>(delta_.size()), static_cast<int>(epsilon_.size())};
    }

    const std::vector<Rational> &delta() const { return delta_; }
    const std::vector<Rational> &epsilon() const { return epsilon_; }

    Rational &operator[](SuperIndex s) { return slot(s); }
    const Rational &operator[](SuperIndex s) const { return const_cast<Weight *>(this)->slot(s); }

    Weight &operator+=(const Weight &o)
    {
        same_shape(o);
        for (std::size_t i = 0; i < delta_.size(); ++i) {
            delta_[i] += o.delta_[i];
        }
        for (std::size_t j = 0; j < epsilon_.size(); ++j) {
            epsilon_[j] += o.epsilon_[j];
        }
        return *this;
    }
    Weight &operator-=(const Weight &o) { return *this += o * Rational(-1); }
    Weight &operator*=(const Rational &c)
    {
        for (auto &x : delta_) {
            x *= c;
        }
        for (auto &x : epsilon_) {
            x *= c;
        }
        return *this;
    }
    friend Weight operator+(Weight a, const Weight &b) { return a += b; }
    friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
    friend Weight operator*(Weight a, const Rational &c) { return a *= c; }
    friend Weight operator-(Weight a) { return a *= Rational(-1); }

    friend bool operator==(const Weight &, const Weight &) = default;

    bool is_integral() const
    {
        for (const auto &x : delta_) {
            if (!is_integer(x)) {
                return false;
            }
        }
        for (const auto &x : epsilon_) {
            if (!is_integer(x)) {
                return false;
            }
        }
        return true;
    }

    // "7*d1 + 4*e1 - 1/2*e2"; the zero weight renders as "0".
    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const Rational &c, const std::string &label) {
            if (c == 0) {
                return;
            }
            Rational a = abs(c);
            if (first) {
                os << (c < 0 ? "-" : "");
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1) {
                os << a.get_str() << "*";
            }
            os << label;
            first = false;
        };
        for (std::size_t i = 0; i < delta_.size(); ++i) {
            emit(delta_[i], "d" + std::to_string(i + 1));
        }
        for (std::size_t j = 0; j < epsilon_.size(); ++j) {
            emit(epsilon_[j], "e" + std::to_string(j + 1));
        }
        return first ? "0" : os.str();
    }

private:
    Rational &slot(SuperIndex s)
    {
        auto &v = s.is_delta() ? delta_ : epsilon_;
        if (s.index < 1 || static_cast<std::size_t>(s.index) > v.size()) {
            throw std::out_of_range("basis label " + s.to_string() + " outside weight");
        }
        return v[static_cast<std::size_t>(s.index - 1)];
    }

    void same_shape(const Weight &o) const
    {
        if (delta_.size() != o.delta_.size() || epsilon_.size() != o.epsilon_.size()) {
            throw std::invalid_argument("weights of different gl(m|n)");
        }
    }

    std::vector<Rational> delta_;
    std::vector<Rational> epsilon_;
};

} // namespace superdual
