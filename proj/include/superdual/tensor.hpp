#pragma once

#include <superdual/linalg.hpp>
#include <superdual/partition.hpp>
#include <superdual/polyring.hpp>
#include <superdual/symfunc.hpp>
#include <superdual/weight.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// The tensor power (C^{m|n})^{(x) d} with the commuting actions of gl(m|n)
// and the symmetric group.
namespace superdual::tensor {

inline constexpr std::size_t max_tensor_dimension = 4096;

class Space {
public:
    Space(int m, int n, int d) : m_(m), n_(n), d_(d)
    {
        if (m < 0 || n < 0 || m + n < 1 || d < 0) {
            throw std::invalid_argument("tensor space needs m, n >= 0, m + n >= 1, d >= 0");
        }
        dim_ = 1;
        for (int k = 0; k < d; ++k) {
            dim_ *= static_cast<std::size_t>(m + n);
            if (dim_ > max_tensor_dimension) {
                throw std::invalid_argument("tensor space dimension exceeds " + std::to_string(max_tensor_dimension));
            }
        }
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t dimension() const { return dim_; }

    // Symbols 0..m-1 are d1..dm, m..m+n-1 are e1..en.
    int symbol(SuperIndex s) const
    {
        const int bound = s.is_delta() ? m_ : n_;
        if (s.index < 1 || s.index > bound) {
            throw std::out_of_range("basis label " + s.to_string() + " outside C^{m|n}");
        }
        return s.is_delta() ? s.index - 1 : m_ + s.index - 1;
    }
    SuperIndex label(int sym) const { return sym < m_ ? SuperIndex::delta(sym + 1) : SuperIndex::epsilon(sym - m_ + 1); }
    int parity(int sym) const { return sym < m_ ? 0 : 1; }

    // Slot 0 is the most significant digit.
    std::vector<int> decode(std::uint32_t code) const
    {
        std::vector<int> w(static_cast<std::size_t>(d_));
        for (int k = d_ - 1; k >= 0; --k) {
            w[static_cast<std::size_t>(k)] = static_cast<int>(code % static_cast<std::uint32_t>(m_ + n_));
            code /= static_cast<std::uint32_t>(m_ + n_);
        }
        return w;
    }
    std::uint32_t encode(const std::vector<int> &w) const
    {
        std::uint32_t code = 0;
        for (int s : w) {
            code = code * static_cast<std::uint32_t>(m_ + n_) + static_cast<std::uint32_t>(s);
        }
        return code;
    }

    friend bool operator==(const Space &, const Space &) = default;

private:
    int m_, n_, d_;
    std::size_t dim_ = 1;
};

// Sparse vector over the basis words of a tensor space.
struct TensorVector {
    Space space;
    std::map<std::uint32_t, Rational> coeffs;

    explicit TensorVector(Space s) : space(s) {}

    static TensorVector basis(Space s, const std::vector<SuperIndex> &word)
    {
        if (static_cast<int>(word.size()) != s.d()) {
            throw std::invalid_argument("word length differs from the tensor degree");
        }
        std::vector<int> syms;
        for (const auto &l : word) {
            syms.push_back(s.symbol(l));
        }
        TensorVector v(s);
        v.coeffs[s.encode(syms)] = 1;
        return v;
    }

    void add(std::uint32_t code, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = coeffs.try_emplace(code, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                coeffs.erase(it);
            }
        }
    }

    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const TensorVector &a, const TensorVector &b)
    {
        return a.space == b.space && a.coeffs == b.coeffs;
    }

    std::string to_string() const
    {
        if (coeffs.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto &[code, c] : coeffs) {
            std::string word;
            for (int s : space.decode(code)) {
                word += (word.empty() ? "" : "(x)") + space.label(s).to_string();
            }
            const Rational a = abs(c);
            out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            out += a == 1 ? word : a.get_str() + "*" + word;
            first = false;
        }
        return out;
    }
};

// The matrix unit E_{row,col}: sends e_col to e_row, parity |row| + |col|.
struct MatrixUnit {
    SuperIndex row;
    SuperIndex col;

    int parity() const { return (row.is_odd() ? 1 : 0) ^ (col.is_odd() ? 1 : 0); }
};

// E acts slot by slot, picking up (-1)^{|E| * (parities of earlier slots)}.
inline TensorVector act_gl(const MatrixUnit &e, const TensorVector &v)
{
    const Space &sp = v.space;
    const int from = sp.symbol(e.col), to = sp.symbol(e.row);
    const int pe = e.parity();
    TensorVector out(sp);
    for (const auto &[code, c] : v.coeffs) {
        auto w = sp.decode(code);
        int before = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == from) {
                auto moved = w;
                moved[k] = to;
                out.add(sp.encode(moved), (pe * before) % 2 == 0 ? c : Rational(-c));
            }
            before += sp.parity(w[k]);
        }
    }
    return out;
}

// The adjacent transposition of slots i and i+1 (1-based) with the sign
// (-1)^{|v_i||v_{i+1}|}.
inline TensorVector act_sym(int i, const TensorVector &v)
{
    const Space &sp = v.space;
    if (i < 1 || i >= sp.d()) {
        throw std::out_of_range("transposition index outside 1..d-1");
    }
    TensorVector out(sp);
    const std::size_t a = static_cast<std::size_t>(i - 1);
    for (const auto &[code, c] : v.coeffs) {
        auto w = sp.decode(code);
        const bool both_odd = sp.parity(w[a]) && sp.parity(w[a + 1]);
        std::swap(w[a], w[a + 1]);
        out.add(sp.encode(w), both_odd ? Rational(-c) : c);
    }
    return out;
}

inline std::vector<MatrixUnit> all_matrix_units(int m, int n)
{
    std::vector<SuperIndex> labels;
    for (int i = 1; i <= m; ++i) {
        labels.push_back(SuperIndex::delta(i));
    }
    for (int j = 1; j <= n; ++j) {
        labels.push_back(SuperIndex::epsilon(j));
    }
    std::vector<MatrixUnit> out;
    for (const auto &r : labels) {
        for (const auto &c : labels) {
            out.push_back({r, c});
        }
    }
    return out;
}

inline TensorVector basis_vector(const Space &sp, std::uint32_t code)
{
    TensorVector v(sp);
    v.coeffs[code] = 1;
    return v;
}

// Every matrix unit commutes with every adjacent transposition on every
// basis word.
inline bool verify_commuting(int m, int n, int d)
{
    const Space sp(m, n, d);
    const auto units = all_matrix_units(m, n);
    for (std::uint32_t code = 0; code < sp.dimension(); ++code) {
        const TensorVector v = basis_vector(sp, code);
        for (int i = 1; i < d; ++i) {
            const TensorVector sv = act_sym(i, v);
            for (const auto &e : units) {
                if (!(act_gl(e, sv) == act_sym(i, act_gl(e, v)))) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Simple root vectors of gl(m|n) for the standard Borel.
inline std::vector<MatrixUnit> raising_units(int m, int n)
{
    std::vector<MatrixUnit> out;
    for (int i = 1; i < m; ++i) {
        out.push_back({SuperIndex::delta(i), SuperIndex::delta(i + 1)});
    }
    if (m >= 1 && n >= 1) {
        out.push_back({SuperIndex::delta(m), SuperIndex::epsilon(1)});
    }
    for (int j = 1; j < n; ++j) {
        out.push_back({SuperIndex::epsilon(j), SuperIndex::epsilon(j + 1)});
    }
    return out;
}

// Basis words whose content equals the given weight (integral, nonnegative).
inline std::vector<std::uint32_t> weight_space(const Space &sp, const std::vector<int> &content)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t code = 0; code < sp.dimension(); ++code) {
        std::vector<int> c(static_cast<std::size_t>(sp.m() + sp.n()), 0);
        for (int s : sp.decode(code)) {
            ++c[static_cast<std::size_t>(s)];
        }
        if (c == content) {
            out.push_back(code);
        }
    }
    return out;
}

// Vectors of the given weight killed by every raising operator, expressed in
// the returned word basis.
struct SingularSpace {
    std::vector<std::uint32_t> words;
    std::vector<std::vector<Rational>> basis;
};

inline SingularSpace singular_space(const Space &sp, const Partition &lambda)
{
    const HookContext ctx{sp.m(), sp.n()};
    SingularSpace out;
    if (!is_hook(lambda, ctx) || lambda.size() != sp.d()) {
        return out;
    }
    const Weight w = natural_weight(lambda, ctx);
    std::vector<int> content;
    for (const auto &c : w.delta()) {
        content.push_back(static_cast<int>(c.get_num().get_si()));
    }
    for (const auto &c : w.epsilon()) {
        content.push_back(static_cast<int>(c.get_num().get_si()));
    }
    out.words = weight_space(sp, content);
    Matrix rows;
    for (const auto &e : raising_units(sp.m(), sp.n())) {
        std::map<std::uint32_t, std::vector<Rational>> image_rows;
        for (std::size_t k = 0; k < out.words.size(); ++k) {
            const TensorVector image = act_gl(e, basis_vector(sp, out.words[k]));
            for (const auto &[code, c] : image.coeffs) {
                auto &row = image_rows[code];
                row.resize(out.words.size());
                row[k] += c;
            }
        }
        for (auto &[code, row] : image_rows) {
            rows.push_back(std::move(row));
        }
    }
    out.basis = nullspace(rows, out.words.size());
    return out;
}

// Trace of the transposition (1 2) on the singular space of weight lambda;
// equals the symmetric group character of lambda at a transposition when the
// singular space is the Specht module.
inline Rational singular_transposition_trace(const Space &sp, const Partition &lambda)
{
    if (sp.d() < 2) {
        throw std::invalid_argument("transposition trace needs d >= 2");
    }
    const SingularSpace ss = singular_space(sp, lambda);
    const std::size_t r = ss.basis.size();
    if (r == 0) {
        return 0;
    }
    std::map<std::uint32_t, std::size_t> position;
    for (std::size_t k = 0; k < ss.words.size(); ++k) {
        position[ss.words[k]] = k;
    }
    Matrix basis_columns(ss.words.size(), std::vector<Rational>(r));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < ss.words.size(); ++k) {
            basis_columns[k][j] = ss.basis[j][k];
        }
    }
    Rational trace = 0;
    for (std::size_t j = 0; j < r; ++j) {
        TensorVector v(sp);
        for (std::size_t k = 0; k < ss.words.size(); ++k) {
            v.add(ss.words[k], ss.basis[j][k]);
        }
        const TensorVector sv = act_sym(1, v);
        std::vector<Rational> rhs(ss.words.size());
        for (const auto &[code, c] : sv.coeffs) {
            rhs[position.at(code)] = c;
        }
        const auto coords = solve(basis_columns, rhs, r);
        if (!coords) {
            throw std::logic_error("singular space is not stable under the symmetric group");
        }
        trace += (*coords)[j];
    }
    return trace;
}

struct DecompositionEntry {
    Partition lambda;
    bool hook = false;
    Integer hs_dim;
    std::int64_t specht_dim = 0;
    std::int64_t singular_dim = 0;
};

struct DecompositionReport {
    int m = 0, n = 0, d = 0;
    Integer total_dim;
    std::vector<DecompositionEntry> entries;
    bool commuting = false;
    bool dimension_identity = false;
    bool singular_matches_specht = false;
    bool character_identity = false;

    bool ok() const { return commuting && dimension_identity && singular_matches_specht && character_identity; }
};

// Character of the tensor space, (x_1 + .. + x_m + y_1 + .. + y_n)^d, against
// the sum of f^lambda hs_lambda(x; y).
inline bool tensor_character_identity(int m, int n, int d)
{
    const Vars vars = make_vars({{"x", m}, {"y", n}});
    LaurentSeries linear(vars);
    for (int i = 0; i < m; ++i) {
        linear += LaurentSeries::variable(vars, {0, i});
    }
    for (int j = 0; j < n; ++j) {
        linear += LaurentSeries::variable(vars, {1, j});
    }
    const LaurentSeries lhs = linear.pow(d);
    LaurentSeries rhs(vars);
    for (const auto &lambda : partitions_of(d)) {
        rhs += hook_schur(lambda, vars, 0, 1).value * Rational(specht_dimension(lambda));
    }
    return lhs == rhs;
}

inline DecompositionReport decompose(int m, int n, int d)
{
    const Space sp(m, n, d);
    DecompositionReport rep;
    rep.m = m;
    rep.n = n;
    rep.d = d;
    rep.total_dim = static_cast<unsigned long>(sp.dimension());
    const Vars vars = make_vars({{"x", m}, {"y", n}});
    Integer dim_sum = 0;
    rep.singular_matches_specht = true;
    for (const auto &lambda : partitions_of(d)) {
        DecompositionEntry e;
        e.lambda = lambda;
        e.hook = is_hook(lambda, {m, n});
        e.specht_dim = specht_dimension(lambda);
        const LaurentSeries hs = hook_schur(lambda, vars, 0, 1).value;
        const LaurentSeries at_one = evaluate_families(hs, {0, 1}, 1);
        const Rational value = at_one.coefficient(Exponents(vars->size(), 0));
        e.hs_dim = value.get_num();
        e.singular_dim = e.hook ? static_cast<std::int64_t>(singular_space(sp, lambda).basis.size()) : 0;
        if (e.hook && e.singular_dim != e.specht_dim) {
            rep.singular_matches_specht = false;
        }
        if (e.hook != (e.hs_dim != 0)) {
            rep.singular_matches_specht = false;
        }
        dim_sum += e.hs_dim * e.specht_dim;
        rep.entries.push_back(std::move(e));
    }
    rep.dimension_identity = dim_sum == rep.total_dim;
    rep.commuting = verify_commuting(m, n, d);
    rep.character_identity = tensor_character_identity(m, n, d);
    return rep;
}

inline nlohmann::json to_json(const DecompositionReport &rep)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &e : rep.entries) {
        entries.push_back({{"lambda", e.lambda.parts()},
                           {"hook", e.hook},
                           {"hs_dim", e.hs_dim.get_si()},
                           {"specht_dim", e.specht_dim},
                           {"singular_dim", e.singular_dim}});
    }
    return {{"m", rep.m},
            {"n", rep.n},
            {"d", rep.d},
            {"total_dim", rep.total_dim.get_si()},
            {"entries", entries},
            {"checks",
             {{"commuting", rep.commuting},
              {"dimension_identity", rep.dimension_identity},
              {"singular_dim_equals_specht_dim", rep.singular_matches_specht},
              {"character_identity", rep.character_identity}}}};
}

} // namespace superdual::tensor
