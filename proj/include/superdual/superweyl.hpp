#pragma once

#include <superdual/linalg.hpp>
#include <superdual/partition.hpp>
#include <superdual/rational.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Polynomial superalgebra C[x_a^i, eta_b^i] (a <= m, b <= n, i <= d) with
// even x and odd eta, and the first and second order differential operators
// acting on it.
namespace superdual::weyl {

struct Dims {
    int m = 0;
    int n = 0;
    int d = 0;

    friend bool operator==(const Dims &, const Dims &) = default;
};

inline void check_dims(const Dims &dims)
{
    if (dims.m < 0 || dims.n < 0 || dims.d < 1) {
        throw std::invalid_argument("dimensions need m, n >= 0 and d >= 1");
    }
    if (dims.n * dims.d > 64) {
        throw std::invalid_argument("at most 64 odd generators are supported");
    }
}

// x_a^i (even) or eta_a^i (odd); indices are 1-based.
struct Generator {
    bool odd = false;
    int a = 1;
    int i = 1;

    static Generator x(int a, int i) { return {false, a, i}; }
    static Generator eta(int b, int i) { return {true, b, i}; }
};

// x exponents row-major in (a, i); odd generators as a bitmask, bit
// (b-1)*d + (i-1), always read in increasing bit order.
struct SuperMonomial {
    std::vector<int> x;
    std::uint64_t eta = 0;

    int degree() const { return std::accumulate(x.begin(), x.end(), 0) + std::popcount(eta); }
    friend auto operator<=>(const SuperMonomial &, const SuperMonomial &) = default;
};

namespace detail {

inline std::size_t x_slot(const Dims &dims, int a, int i)
{
    if (a < 1 || a > dims.m || i < 1 || i > dims.d) {
        throw std::out_of_range("x generator index out of range");
    }
    return static_cast<std::size_t>((a - 1) * dims.d + (i - 1));
}

inline int eta_bit(const Dims &dims, int b, int i)
{
    if (b < 1 || b > dims.n || i < 1 || i > dims.d) {
        throw std::out_of_range("eta generator index out of range");
    }
    return (b - 1) * dims.d + (i - 1);
}

inline std::uint64_t bits_above(int bit) { return bit >= 63 ? 0 : ~((std::uint64_t{1} << (bit + 1)) - 1); }
inline std::uint64_t bits_below(int bit) { return (std::uint64_t{1} << bit) - 1; }

// Sign of reordering (left odd part)(right odd part) into increasing order.
inline int merge_sign(std::uint64_t left, std::uint64_t right)
{
    int swaps = 0;
    for (std::uint64_t r = right; r; r &= r - 1) {
        const int q = std::countr_zero(r);
        swaps += std::popcount(left & bits_above(q));
    }
    return swaps % 2 == 0 ? 1 : -1;
}

} // namespace detail

class SuperElement {
public:
    using TermMap = std::map<SuperMonomial, Rational>;

    explicit SuperElement(Dims dims) : dims_(dims) { check_dims(dims_); }

    static SuperElement constant(Dims dims, const Rational &c)
    {
        SuperElement e(dims);
        e.add(SuperMonomial{std::vector<int>(static_cast<std::size_t>(dims.m * dims.d), 0), 0}, c);
        return e;
    }
    static SuperElement one(Dims dims) { return constant(dims, 1); }

    static SuperElement generator(Dims dims, Generator g)
    {
        SuperElement e(dims);
        SuperMonomial mono{std::vector<int>(static_cast<std::size_t>(dims.m * dims.d), 0), 0};
        if (g.odd) {
            mono.eta = std::uint64_t{1} << detail::eta_bit(dims, g.a, g.i);
        } else {
            mono.x[detail::x_slot(dims, g.a, g.i)] = 1;
        }
        e.add(std::move(mono), 1);
        return e;
    }
    static SuperElement x(Dims dims, int a, int i) { return generator(dims, Generator::x(a, i)); }
    static SuperElement eta(Dims dims, int b, int i) { return generator(dims, Generator::eta(b, i)); }

    const Dims &dims() const { return dims_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(SuperMonomial mono, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(mono), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    SuperElement &operator+=(const SuperElement &o)
    {
        same_dims(o);
        for (const auto &[mono, c] : o.terms_) {
            add(mono, c);
        }
        return *this;
    }
    SuperElement &operator-=(const SuperElement &o)
    {
        same_dims(o);
        for (const auto &[mono, c] : o.terms_) {
            add(mono, -c);
        }
        return *this;
    }
    SuperElement &operator*=(const Rational &c)
    {
        if (c == 0) {
            terms_.clear();
        }
        for (auto &[mono, v] : terms_) {
            v *= c;
        }
        return *this;
    }
    friend SuperElement operator+(SuperElement a, const SuperElement &b) { return a += b; }
    friend SuperElement operator-(SuperElement a, const SuperElement &b) { return a -= b; }
    friend SuperElement operator*(SuperElement a, const Rational &c) { return a *= c; }
    friend SuperElement operator*(const Rational &c, SuperElement a) { return a *= c; }

    friend SuperElement operator*(const SuperElement &a, const SuperElement &b)
    {
        a.same_dims(b);
        SuperElement out(a.dims_);
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                if (ma.eta & mb.eta) {
                    continue;
                }
                SuperMonomial prod{ma.x, ma.eta | mb.eta};
                for (std::size_t k = 0; k < prod.x.size(); ++k) {
                    prod.x[k] += mb.x[k];
                }
                out.add(std::move(prod), ca * cb * detail::merge_sign(ma.eta, mb.eta));
            }
        }
        return out;
    }

    friend bool operator==(const SuperElement &a, const SuperElement &b)
    {
        return a.dims_ == b.dims_ && a.terms_ == b.terms_;
    }

    // "x1_2^2*eta1_1" stands for (x_1^2)^2 eta_1^1.
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[mono, c] : terms_) {
            std::string word;
            for (int a = 1; a <= dims_.m; ++a) {
                for (int i = 1; i <= dims_.d; ++i) {
                    const int e = mono.x[detail::x_slot(dims_, a, i)];
                    if (e == 0) {
                        continue;
                    }
                    word += (word.empty() ? "" : "*") + ("x" + std::to_string(a) + "_" + std::to_string(i));
                    if (e != 1) {
                        word += "^" + std::to_string(e);
                    }
                }
            }
            for (std::uint64_t r = mono.eta; r; r &= r - 1) {
                const int bit = std::countr_zero(r);
                word += (word.empty() ? "" : "*") + ("eta" + std::to_string(bit / dims_.d + 1) + "_" +
                                                     std::to_string(bit % dims_.d + 1));
            }
            const Rational a = abs(c);
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            if (word.empty()) {
                os << a.get_str();
            } else if (a == 1) {
                os << word;
            } else {
                os << a.get_str() << "*" << word;
            }
            first = false;
        }
        return os.str();
    }

private:
    void same_dims(const SuperElement &o) const
    {
        if (!(dims_ == o.dims_)) {
            throw std::invalid_argument("super elements of different dimensions");
        }
    }

    Dims dims_;
    TermMap terms_;
};

// Left derivative with respect to one generator; the odd derivative picks up
// the sign of moving past the odd generators to its left.
inline SuperElement derivative(const SuperElement &v, Generator g)
{
    const Dims &dims = v.dims();
    SuperElement out(dims);
    if (g.odd) {
        const int bit = detail::eta_bit(dims, g.a, g.i);
        const std::uint64_t mask = std::uint64_t{1} << bit;
        for (const auto &[mono, c] : v.terms()) {
            if (!(mono.eta & mask)) {
                continue;
            }
            const int sign = std::popcount(mono.eta & detail::bits_below(bit)) % 2 == 0 ? 1 : -1;
            out.add(SuperMonomial{mono.x, mono.eta & ~mask}, c * sign);
        }
    } else {
        const std::size_t slot = detail::x_slot(dims, g.a, g.i);
        for (const auto &[mono, c] : v.terms()) {
            if (mono.x[slot] == 0) {
                continue;
            }
            SuperMonomial lowered = mono;
            --lowered.x[slot];
            out.add(std::move(lowered), c * mono.x[slot]);
        }
    }
    return out;
}

// c * M * D_1 ... D_k: derivations applied right to left, then left
// multiplication by the monomial M.
struct OpTerm {
    Rational coeff;
    SuperMonomial multiplier;
    std::vector<Generator> derivations;

    int parity() const
    {
        int p = std::popcount(multiplier.eta);
        for (const auto &g : derivations) {
            p += g.odd ? 1 : 0;
        }
        return p % 2;
    }
};

class DiffOperator {
public:
    explicit DiffOperator(Dims dims) : dims_(dims) { check_dims(dims_); }

    const Dims &dims() const { return dims_; }
    const std::vector<OpTerm> &terms() const { return terms_; }

    // Adds coeff * (multiplier element) * derivations, one term per monomial.
    DiffOperator &add(const SuperElement &multiplier, std::vector<Generator> derivations, const Rational &coeff = 1)
    {
        for (const auto &[mono, c] : multiplier.terms()) {
            OpTerm t{coeff * c, mono, derivations};
            if (!terms_.empty() && t.parity() != terms_.front().parity()) {
                throw std::invalid_argument("operator terms of mixed parity");
            }
            terms_.push_back(std::move(t));
        }
        return *this;
    }

    int parity() const { return terms_.empty() ? 0 : terms_.front().parity(); }

    SuperElement apply(const SuperElement &v) const
    {
        SuperElement out(dims_);
        for (const auto &t : terms_) {
            SuperElement w = v;
            for (auto it = t.derivations.rbegin(); it != t.derivations.rend() && !w.is_zero(); ++it) {
                w = derivative(w, *it);
            }
            if (w.is_zero()) {
                continue;
            }
            SuperElement mult(dims_);
            mult.add(t.multiplier, t.coeff);
            out += mult * w;
        }
        return out;
    }

private:
    Dims dims_;
    std::vector<OpTerm> terms_;
};

// [A, B] v = A(Bv) - (-1)^{|A||B|} B(Av).
inline SuperElement supercommutator_apply(const DiffOperator &a, const DiffOperator &b, const SuperElement &v)
{
    SuperElement out = a.apply(b.apply(v));
    const SuperElement back = b.apply(a.apply(v));
    if (a.parity() * b.parity() == 1) {
        out += back;
    } else {
        out -= back;
    }
    return out;
}

struct NamedOperator {
    std::string name;
    DiffOperator op;
};

enum class GeneratorKind { gl_d, gl_mn, gl_mn_shifted, osp_extra, sp_d };

namespace detail {

inline std::string label(const std::string &stem, int p, int q)
{
    return stem + "[" + std::to_string(p) + "," + std::to_string(q) + "]";
}

// E^{ii'} = sum_j x_j^i d/dx_j^{i'} + sum_j eta_j^i d/deta_j^{i'}.
inline DiffOperator gl_d_unit(const Dims &dims, int i, int ip)
{
    DiffOperator op(dims);
    for (int j = 1; j <= dims.m; ++j) {
        op.add(SuperElement::x(dims, j, i), {Generator::x(j, ip)});
    }
    for (int j = 1; j <= dims.n; ++j) {
        op.add(SuperElement::eta(dims, j, i), {Generator::eta(j, ip)});
    }
    return op;
}

inline DiffOperator gl_mn_unit(const Dims &dims, Generator row, Generator col, const Rational &shift = 0)
{
    DiffOperator op(dims);
    for (int j = 1; j <= dims.d; ++j) {
        op.add(SuperElement::generator(dims, {row.odd, row.a, j}), {Generator{col.odd, col.a, j}});
    }
    if (shift != 0) {
        op.add(SuperElement::one(dims), {}, shift);
    }
    return op;
}

inline void require_even_d(const Dims &dims)
{
    if (dims.d % 2 != 0) {
        throw std::invalid_argument("this family needs an even d");
    }
}

} // namespace detail

// Generator families of the dual pairs acting on C[x, eta].
inline std::vector<NamedOperator> dual_pair_generators(GeneratorKind kind, const Dims &dims)
{
    check_dims(dims);
    std::vector<NamedOperator> out;
    const int d = dims.d;
    switch (kind) {
    case GeneratorKind::gl_d:
        for (int i = 1; i <= d; ++i) {
            for (int ip = 1; ip <= d; ++ip) {
                out.push_back({detail::label("E", i, ip), detail::gl_d_unit(dims, i, ip)});
            }
        }
        break;
    case GeneratorKind::gl_mn:
    case GeneratorKind::gl_mn_shifted: {
        const bool shifted = kind == GeneratorKind::gl_mn_shifted;
        const Rational half_d = make_rational(d, 2);
        for (int s = 1; s <= dims.m; ++s) {
            for (int sp = 1; sp <= dims.m; ++sp) {
                out.push_back({detail::label("Exx", s, sp),
                               detail::gl_mn_unit(dims, Generator::x(s, 1), Generator::x(sp, 1),
                                                  shifted && s == sp ? half_d : Rational(0))});
            }
        }
        for (int k = 1; k <= dims.n; ++k) {
            for (int kp = 1; kp <= dims.n; ++kp) {
                out.push_back({detail::label("Eee", k, kp),
                               detail::gl_mn_unit(dims, Generator::eta(k, 1), Generator::eta(kp, 1),
                                                  shifted && k == kp ? Rational(-half_d) : Rational(0))});
            }
        }
        for (int s = 1; s <= dims.m; ++s) {
            for (int k = 1; k <= dims.n; ++k) {
                out.push_back({detail::label("Exe", s, k),
                               detail::gl_mn_unit(dims, Generator::x(s, 1), Generator::eta(k, 1))});
            }
        }
        for (int k = 1; k <= dims.n; ++k) {
            for (int s = 1; s <= dims.m; ++s) {
                out.push_back({detail::label("Eex", k, s),
                               detail::gl_mn_unit(dims, Generator::eta(k, 1), Generator::x(s, 1))});
            }
        }
        break;
    }
    case GeneratorKind::osp_extra: {
        detail::require_even_d(dims);
        const int half = d / 2;
        auto X = [&](int a, int i) { return SuperElement::x(dims, a, i); };
        auto H = [&](int b, int i) { return SuperElement::eta(dims, b, i); };
        // Quadratic multiplications pairing slot j with slot d+1-j.
        for (int i = 1; i <= dims.m; ++i) {
            for (int s = i + 1; s <= dims.m; ++s) {
                SuperElement q(dims);
                for (int j = 1; j <= half; ++j) {
                    q += X(i, j) * X(s, d + 1 - j) - X(i, d + 1 - j) * X(s, j);
                }
                out.push_back({detail::label("Ixx", i, s), DiffOperator(dims).add(q, {})});
            }
        }
        for (int i = 1; i <= dims.m; ++i) {
            for (int k = 1; k <= dims.n; ++k) {
                SuperElement q(dims);
                for (int j = 1; j <= half; ++j) {
                    q += X(i, j) * H(k, d + 1 - j) - X(i, d + 1 - j) * H(k, j);
                }
                out.push_back({detail::label("Ixe", i, k), DiffOperator(dims).add(q, {})});
            }
        }
        for (int k = 1; k <= dims.n; ++k) {
            for (int t = k; t <= dims.n; ++t) {
                SuperElement q(dims);
                for (int j = 1; j <= half; ++j) {
                    q += H(k, j) * H(t, d + 1 - j) - H(k, d + 1 - j) * H(t, j);
                }
                out.push_back({detail::label("Iee", k, t), DiffOperator(dims).add(q, {})});
            }
        }
        // Their second order counterparts.
        const SuperElement one = SuperElement::one(dims);
        for (int i = 1; i <= dims.m; ++i) {
            for (int s = i + 1; s <= dims.m; ++s) {
                DiffOperator op(dims);
                for (int j = 1; j <= half; ++j) {
                    op.add(one, {Generator::x(i, j), Generator::x(s, d + 1 - j)});
                    op.add(one, {Generator::x(i, d + 1 - j), Generator::x(s, j)}, -1);
                }
                out.push_back({detail::label("Dxx", i, s), std::move(op)});
            }
        }
        for (int i = 1; i <= dims.m; ++i) {
            for (int k = 1; k <= dims.n; ++k) {
                DiffOperator op(dims);
                for (int j = 1; j <= half; ++j) {
                    op.add(one, {Generator::x(i, j), Generator::eta(k, d + 1 - j)});
                    op.add(one, {Generator::x(i, d + 1 - j), Generator::eta(k, j)}, -1);
                }
                out.push_back({detail::label("Dxe", i, k), std::move(op)});
            }
        }
        for (int k = 1; k <= dims.n; ++k) {
            for (int t = k; t <= dims.n; ++t) {
                DiffOperator op(dims);
                for (int j = 1; j <= half; ++j) {
                    op.add(one, {Generator::eta(k, j), Generator::eta(t, d + 1 - j)});
                    op.add(one, {Generator::eta(k, d + 1 - j), Generator::eta(t, j)}, -1);
                }
                out.push_back({detail::label("Dee", k, t), std::move(op)});
            }
        }
        break;
    }
    case GeneratorKind::sp_d: {
        // E^{ij} - s_i s_j E^{j' i'} with i' = d+1-i and s_i = +1 on the first
        // half, -1 on the second: the unit combinations preserving the
        // symplectic pairing of slot j with slot d+1-j.
        detail::require_even_d(dims);
        auto sgn = [&](int i) { return i <= d / 2 ? 1 : -1; };
        for (int i = 1; i <= d; ++i) {
            for (int j = 1; j <= d; ++j) {
                const int ib = d + 1 - i, jb = d + 1 - j;
                if (std::pair(i, j) > std::pair(jb, ib)) {
                    continue;
                }
                DiffOperator op = detail::gl_d_unit(dims, i, j);
                const DiffOperator partner = detail::gl_d_unit(dims, jb, ib);
                const Rational c = -sgn(i) * sgn(j);
                for (const auto &t : partner.terms()) {
                    SuperElement mult(dims);
                    mult.add(t.multiplier, t.coeff);
                    op.add(mult, t.derivations, c);
                }
                out.push_back({detail::label("Sp", i, j), std::move(op)});
            }
        }
        break;
    }
    }
    return out;
}

struct RaisingOperators {
    std::vector<NamedOperator> gl_d;
    std::vector<NamedOperator> gl_mn;
};

// Simple root vectors of the two commuting actions: E^{i-1,i} for gl(d);
// the even x and eta shifts plus the odd x_m <- eta_1 operator for gl(m|n).
inline RaisingOperators raising_operators(const Dims &dims)
{
    check_dims(dims);
    RaisingOperators out;
    for (int i = 2; i <= dims.d; ++i) {
        out.gl_d.push_back({detail::label("E", i - 1, i), detail::gl_d_unit(dims, i - 1, i)});
    }
    for (int s = 2; s <= dims.m; ++s) {
        out.gl_mn.push_back({detail::label("Exx", s - 1, s),
                             detail::gl_mn_unit(dims, Generator::x(s - 1, 1), Generator::x(s, 1))});
    }
    if (dims.m >= 1 && dims.n >= 1) {
        out.gl_mn.push_back({detail::label("Exe", dims.m, 1),
                             detail::gl_mn_unit(dims, Generator::x(dims.m, 1), Generator::eta(1, 1))});
    }
    for (int k = 2; k <= dims.n; ++k) {
        out.gl_mn.push_back({detail::label("Eee", k - 1, k),
                             detail::gl_mn_unit(dims, Generator::eta(k - 1, 1), Generator::eta(k, 1))});
    }
    return out;
}

namespace detail {

inline int perm_sign(const std::vector<int> &perm)
{
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            inv += perm[i] > perm[j] ? 1 : 0;
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

// Row-ordered determinant: sum over sigma of sgn(sigma) times the entries
// (t, sigma(t)) multiplied in increasing row order.
template <typename Entry>
SuperElement rdet(const Dims &dims, int r, Entry &&entry)
{
    SuperElement out(dims);
    std::vector<int> sigma(static_cast<std::size_t>(r));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        SuperElement term = SuperElement::one(dims);
        for (int t = 1; t <= r && !term.is_zero(); ++t) {
            term = term * entry(t, sigma[static_cast<std::size_t>(t - 1)]);
        }
        out += term * Rational(perm_sign(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

} // namespace detail

// det[x_a^i] for rows i and columns a in 1..r.
inline SuperElement diamond(int r, const Dims &dims)
{
    check_dims(dims);
    if (r < 1 || r > std::min(dims.m, dims.d)) {
        throw std::invalid_argument("diamond(r) needs 1 <= r <= min(m, d)");
    }
    return detail::rdet(dims, r, [&](int row, int col) { return SuperElement::x(dims, col, row); });
}

// rdet of the r x r matrix whose first m rows are x_a^1..x_a^r and whose
// remaining r - m rows all equal eta_k^1..eta_k^r.
inline SuperElement diamond_kr(int k, int r, const Dims &dims)
{
    check_dims(dims);
    if (k < 1 || k > dims.n || r < dims.m || r > dims.d || r < 1) {
        throw std::invalid_argument("diamond_kr(k, r) needs 1 <= k <= n and m <= r <= d");
    }
    return detail::rdet(dims, r, [&](int row, int col) {
        return row <= dims.m ? SuperElement::x(dims, row, col) : SuperElement::eta(dims, k, col);
    });
}

// Joint highest weight vector for the (gl(d), gl(m|n)) action attached to the
// hook partition lambda with at most d rows.
inline SuperElement highest_weight_vector(const Partition &lambda, const Dims &dims)
{
    check_dims(dims);
    if (static_cast<int>(lambda.length()) > dims.d) {
        throw std::invalid_argument("highest weight vector needs at most d rows");
    }
    if (!is_hook(lambda, HookContext{dims.m, dims.n})) {
        throw std::invalid_argument("highest weight vector needs an (m|n)-hook partition");
    }
    const Partition conj = lambda.conjugate();
    SuperElement v = SuperElement::one(dims);
    int r = 0;
    while (r < static_cast<int>(conj.length()) && conj[static_cast<std::size_t>(r)] > dims.m) {
        ++r;
    }
    for (int k = 1; k <= r; ++k) {
        v = v * diamond_kr(k, conj[static_cast<std::size_t>(k - 1)], dims);
    }
    for (int j = r + 1; j <= lambda[0]; ++j) {
        v = v * diamond(conj[static_cast<std::size_t>(j - 1)], dims);
    }
    return v;
}

// Every monomial of total degree at most max_degree, as basis elements.
inline std::vector<SuperElement> monomials_up_to(const Dims &dims, int max_degree)
{
    check_dims(dims);
    const std::size_t nx = static_cast<std::size_t>(dims.m * dims.d);
    const int neta = dims.n * dims.d;
    std::vector<SuperElement> out;
    std::vector<int> x(nx, 0);
    auto rec = [&](auto &&self, std::size_t slot, int remaining) -> void {
        if (slot == nx) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << neta); ++mask) {
                if (std::popcount(mask) <= remaining) {
                    SuperElement e(dims);
                    e.add(SuperMonomial{x, mask}, 1);
                    out.push_back(std::move(e));
                }
            }
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            x[slot] = k;
            self(self, slot + 1, remaining - k);
        }
        x[slot] = 0;
    };
    rec(rec, 0, max_degree);
    return out;
}

// The scalar c with op(v) = c v, if v is an eigenvector.
inline std::optional<Rational> eigenvalue(const DiffOperator &op, const SuperElement &v)
{
    if (v.is_zero()) {
        return std::nullopt;
    }
    const SuperElement image = op.apply(v);
    const auto &[mono, c] = *v.terms().begin();
    auto it = image.terms().find(mono);
    const Rational lambda = it == image.terms().end() ? Rational(0) : it->second / c;
    if (!(image == v * lambda)) {
        return std::nullopt;
    }
    return lambda;
}

// Whether every pairwise supercommutator of `family`, evaluated on `probes`,
// agrees with some linear combination of the family evaluated on the same
// probes. Returns the names of the first failing pair, if any.
inline std::optional<std::string> bracket_closure_failure(const std::vector<NamedOperator> &family,
                                                          const std::vector<SuperElement> &probes)
{
    using Key = std::pair<std::size_t, SuperMonomial>;
    auto image = [&](auto &&eval) {
        std::map<Key, Rational> coords;
        for (std::size_t p = 0; p < probes.size(); ++p) {
            const SuperElement img = eval(probes[p]);
            for (const auto &[mono, c] : img.terms()) {
                coords[{p, mono}] += c;
            }
        }
        return coords;
    };
    std::vector<std::map<Key, Rational>> columns;
    for (const auto &f : family) {
        columns.push_back(image([&](const SuperElement &v) { return f.op.apply(v); }));
    }
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = a; b < family.size(); ++b) {
            auto target = image([&](const SuperElement &v) { return supercommutator_apply(family[a].op, family[b].op, v); });
            std::map<Key, std::size_t> rows;
            for (const auto &col : columns) {
                for (const auto &[k, c] : col) {
                    rows.try_emplace(k, rows.size());
                }
            }
            for (const auto &[k, c] : target) {
                rows.try_emplace(k, rows.size());
            }
            Matrix m(rows.size(), std::vector<Rational>(family.size()));
            std::vector<Rational> rhs(rows.size());
            for (std::size_t j = 0; j < columns.size(); ++j) {
                for (const auto &[k, c] : columns[j]) {
                    m[rows[k]][j] = c;
                }
            }
            for (const auto &[k, c] : target) {
                rhs[rows[k]] = c;
            }
            if (!solve(m, rhs, family.size())) {
                return "[" + family[a].name + ", " + family[b].name + "]";
            }
        }
    }
    return std::nullopt;
}

} // namespace superdual::weyl
