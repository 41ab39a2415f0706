#pragma once

#include <superdual/rational.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace superdual {

// A named block of variables such as x1..x3. Laurent families are left out
// of the truncation degree.
struct Family {
    std::string name;
    int count = 0;
    bool laurent = false;

    friend bool operator==(const Family &, const Family &) = default;
};

// Position of a variable: family number and zero-based index inside it.
struct VarRef {
    int family = 0;
    int index = 0;
};

class VariableSet {
public:
    explicit VariableSet(std::vector<Family> families) : families_(std::move(families))
    {
        std::size_t off = 0;
        for (const auto &f : families_) {
            if (f.count < 0 || f.name.empty()) {
                throw std::invalid_argument("bad variable family");
            }
            offsets_.push_back(off);
            off += static_cast<std::size_t>(f.count);
            graded_.insert(graded_.end(), static_cast<std::size_t>(f.count), !f.laurent);
        }
        size_ = off;
        for (std::size_t a = 0; a < families_.size(); ++a) {
            for (std::size_t b = a + 1; b < families_.size(); ++b) {
                if (families_[a].name == families_[b].name) {
                    throw std::invalid_argument("duplicate family name " + families_[a].name);
                }
            }
        }
    }

    std::size_t size() const { return size_; }
    std::size_t family_count() const { return families_.size(); }
    const Family &family(int f) const { return families_.at(static_cast<std::size_t>(f)); }
    const std::vector<Family> &families() const { return families_; }

    int family_index(const std::string &name) const
    {
        for (std::size_t f = 0; f < families_.size(); ++f) {
            if (families_[f].name == name) {
                return static_cast<int>(f);
            }
        }
        throw std::invalid_argument("unknown variable family " + name);
    }

    std::size_t flat(VarRef v) const
    {
        const Family &f = family(v.family);
        if (v.index < 0 || v.index >= f.count) {
            throw std::out_of_range("variable index outside family " + f.name);
        }
        return offsets_[static_cast<std::size_t>(v.family)] + static_cast<std::size_t>(v.index);
    }

    VarRef ref(std::size_t flat_index) const
    {
        for (std::size_t f = families_.size(); f-- > 0;) {
            if (flat_index >= offsets_[f] && families_[f].count > 0) {
                return {static_cast<int>(f), static_cast<int>(flat_index - offsets_[f])};
            }
        }
        throw std::out_of_range("flat variable index");
    }

    std::size_t offset(int f) const { return offsets_.at(static_cast<std::size_t>(f)); }

    std::string name(std::size_t flat_index) const
    {
        VarRef v = ref(flat_index);
        return family(v.family).name + std::to_string(v.index + 1);
    }

    bool graded(std::size_t flat_index) const { return graded_.at(flat_index); }

    friend bool operator==(const VariableSet &a, const VariableSet &b) { return a.families_ == b.families_; }

private:
    std::vector<Family> families_;
    std::vector<std::size_t> offsets_;
    std::vector<bool> graded_;
    std::size_t size_ = 0;
};

using Vars = std::shared_ptr<const VariableSet>;

inline Vars make_vars(std::vector<Family> families)
{
    return std::make_shared<const VariableSet>(std::move(families));
}

using Exponents = std::vector<int>;

// Canonical term order: larger total degree first, then lexicographically
// larger exponent vectors first (variables ordered by family, then index).
struct GradedLexDescending {
    bool operator()(const Exponents &a, const Exponents &b) const
    {
        long da = 0, db = 0;
        for (int e : a) {
            da += e;
        }
        for (int e : b) {
            db += e;
        }
        if (da != db) {
            return da > db;
        }
        return b < a;
    }
};

class LaurentSeries {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

    explicit LaurentSeries(Vars vars) : vars_(std::move(vars))
    {
        if (!vars_) {
            throw std::invalid_argument("null variable set");
        }
    }

    static LaurentSeries constant(Vars vars, const Rational &c)
    {
        LaurentSeries s(std::move(vars));
        s.add_term(Exponents(s.vars_->size(), 0), c);
        return s;
    }

    static LaurentSeries one(Vars vars) { return constant(std::move(vars), 1); }

    static LaurentSeries variable(Vars vars, VarRef v, int power = 1)
    {
        LaurentSeries s(std::move(vars));
        Exponents e(s.vars_->size(), 0);
        e[s.vars_->flat(v)] = power;
        s.add_term(std::move(e), 1);
        return s;
    }

    static LaurentSeries monomial(Vars vars, Exponents e, const Rational &c = 1)
    {
        LaurentSeries s(std::move(vars));
        s.add_term(std::move(e), c);
        return s;
    }

    const Vars &vars() const { return vars_; }
    const TermMap &terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::optional<int> &cutoff() const { return cutoff_; }

    // Degree used for truncation: Laurent families do not count.
    int degree(const Exponents &e) const
    {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (vars_->graded(i)) {
                d += e[i];
            }
        }
        return d;
    }

    Rational coefficient(const Exponents &e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Exponents e, const Rational &c)
    {
        if (e.size() != vars_->size()) {
            throw std::invalid_argument("exponent vector has the wrong length");
        }
        if (c == 0 || (cutoff_ && degree(e) > *cutoff_)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    LaurentSeries truncated(int cutoff) const
    {
        LaurentSeries out(vars_);
        out.cutoff_ = cutoff_ ? std::min(*cutoff_, cutoff) : cutoff;
        for (const auto &[e, c] : terms_) {
            if (degree(e) <= *out.cutoff_) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    // Drops the truncation marker; used once a series has been shifted by a
    // monomial and the original degree bound no longer lines up.
    LaurentSeries without_cutoff() const
    {
        LaurentSeries out(*this);
        out.cutoff_.reset();
        return out;
    }

    LaurentSeries &operator+=(const LaurentSeries &o)
    {
        check_vars(o);
        merge_cutoff(o.cutoff_);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    LaurentSeries &operator-=(const LaurentSeries &o)
    {
        check_vars(o);
        merge_cutoff(o.cutoff_);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    LaurentSeries &operator*=(const Rational &c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, v] : terms_) {
            v *= c;
        }
        return *this;
    }

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries &b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries &b) { return a -= b; }
    friend LaurentSeries operator-(LaurentSeries a) { return a *= Rational(-1); }
    friend LaurentSeries operator*(LaurentSeries a, const Rational &c) { return a *= c; }
    friend LaurentSeries operator*(const Rational &c, LaurentSeries a) { return a *= c; }

    friend LaurentSeries mul(const LaurentSeries &a, const LaurentSeries &b, std::optional<int> cutoff)
    {
        a.check_vars(b);
        std::optional<int> bound = cutoff;
        for (const auto &inherited : {a.cutoff_, b.cutoff_}) {
            if (inherited) {
                bound = bound ? std::min(*bound, *inherited) : *inherited;
            }
        }
        LaurentSeries out(a.vars_);
        out.cutoff_ = bound;
        std::vector<int> db;
        db.reserve(b.terms_.size());
        for (const auto &[e, c] : b.terms_) {
            db.push_back(b.degree(e));
        }
        Exponents prod(a.vars_->size());
        for (const auto &[ea, ca] : a.terms_) {
            const int da = a.degree(ea);
            std::size_t k = 0;
            for (const auto &[eb, cb] : b.terms_) {
                const int dsum = da + db[k++];
                if (bound && dsum > *bound) {
                    continue;
                }
                for (std::size_t i = 0; i < prod.size(); ++i) {
                    prod[i] = ea[i] + eb[i];
                }
                out.add_term(prod, ca * cb);
            }
        }
        return out;
    }

    // Exact product, except that truncation markers of the operands carry over.
    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b) { return mul(a, b, std::nullopt); }

    LaurentSeries pow(int k, std::optional<int> cutoff = std::nullopt) const
    {
        if (k < 0) {
            throw std::invalid_argument("negative power of a series");
        }
        LaurentSeries out = one(vars_);
        for (int i = 0; i < k; ++i) {
            out = mul(out, *this, cutoff);
        }
        return out;
    }

    // Equality of the polynomial content; truncation markers are ignored.
    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b)
    {
        return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
    }

    // Text such as "3*x1^2*y2 - 1/2*u1"; the zero series renders as "0".
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[e, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += '*';
                }
                mono += vars_->name(i);
                if (e[i] != 1) {
                    mono += '^' + std::to_string(e[i]);
                }
            }
            const Rational a = abs(c);
            if (first) {
                os << (c < 0 ? "-" : "");
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mono.empty()) {
                os << a.get_str();
            } else if (a == 1) {
                os << mono;
            } else {
                os << a.get_str() << '*' << mono;
            }
            first = false;
        }
        return os.str();
    }

private:
    void check_vars(const LaurentSeries &o) const
    {
        if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) {
            throw std::invalid_argument("series over different variable sets");
        }
    }

    void merge_cutoff(const std::optional<int> &other)
    {
        if (other && (!cutoff_ || *other < *cutoff_)) {
            cutoff_ = other;
            for (auto it = terms_.begin(); it != terms_.end();) {
                it = degree(it->first) > *cutoff_ ? terms_.erase(it) : std::next(it);
            }
        }
    }

    Vars vars_;
    TermMap terms_;
    std::optional<int> cutoff_;
};

// Sum of M^k for k <= cutoff, where factor = 1 - M. Every monomial of M must
// have positive degree, otherwise the series does not converge formally.
inline LaurentSeries geometric_inverse(const LaurentSeries &factor, int cutoff)
{
    const Exponents zero(factor.vars()->size(), 0);
    if (factor.coefficient(zero) != 1) {
        throw std::invalid_argument("geometric_inverse expects a factor with constant term 1");
    }
    LaurentSeries m = LaurentSeries::one(factor.vars()) - factor.without_cutoff();
    for (const auto &[e, c] : m.terms()) {
        if (m.degree(e) <= 0) {
            throw std::invalid_argument("geometric_inverse: 1 - factor has a monomial of degree <= 0");
        }
    }
    LaurentSeries sum = LaurentSeries::one(factor.vars()).truncated(cutoff);
    LaurentSeries power = sum;
    for (int k = 1; k <= cutoff; ++k) {
        power = mul(power, m, cutoff);
        if (power.is_zero()) {
            break;
        }
        sum += power;
    }
    return sum;
}

// Per-variable substitution: a rational value or another variable of the
// target set. Every variable occurring in the input must be assigned.
class Substitution {
public:
    using Image = std::variant<Rational, VarRef>;

    Substitution &set_value(std::size_t flat_source, const Rational &value)
    {
        images_[flat_source] = value;
        return *this;
    }
    Substitution &rename(std::size_t flat_source, VarRef target)
    {
        images_[flat_source] = target;
        return *this;
    }
    const Image *find(std::size_t flat_source) const
    {
        auto it = images_.find(flat_source);
        return it == images_.end() ? nullptr : &it->second;
    }

    // Every variable of `source` that also exists by name in `target` maps to
    // its namesake; callers then override the ones they want to change.
    static Substitution identity(const VariableSet &source, const VariableSet &target)
    {
        Substitution s;
        for (std::size_t f = 0; f < source.family_count(); ++f) {
            const Family &fam = source.family(static_cast<int>(f));
            for (std::size_t g = 0; g < target.family_count(); ++g) {
                const Family &tf = target.family(static_cast<int>(g));
                if (tf.name != fam.name) {
                    continue;
                }
                for (int i = 0; i < std::min(fam.count, tf.count); ++i) {
                    s.rename(source.flat({static_cast<int>(f), i}), {static_cast<int>(g), i});
                }
            }
        }
        return s;
    }

private:
    std::map<std::size_t, Image> images_;
};

inline LaurentSeries specialize(const LaurentSeries &p, const Substitution &subst, Vars target)
{
    LaurentSeries out(target);
    Exponents img(target->size());
    for (const auto &[e, c] : p.terms()) {
        std::fill(img.begin(), img.end(), 0);
        Rational coeff = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            const auto *image = subst.find(i);
            if (!image) {
                throw std::invalid_argument("specialize: variable " + p.vars()->name(i) + " is unassigned");
            }
            if (const auto *value = std::get_if<Rational>(image)) {
                if (*value == 0 && e[i] < 0) {
                    throw std::domain_error("specialize: zero substituted into a negative exponent of " +
                                            p.vars()->name(i));
                }
                coeff *= power(*value, e[i]);
            } else {
                img[target->flat(std::get<VarRef>(*image))] += e[i];
            }
        }
        out.add_term(img, coeff);
    }
    return out;
}

inline LaurentSeries specialize(const LaurentSeries &p, const Substitution &subst)
{
    return specialize(p, subst, p.vars());
}

// Sets every variable of the given families to `value`.
inline LaurentSeries evaluate_families(const LaurentSeries &p, const std::vector<int> &families, const Rational &value)
{
    Substitution s = Substitution::identity(*p.vars(), *p.vars());
    for (int f : families) {
        for (int i = 0; i < p.vars()->family(f).count; ++i) {
            s.set_value(p.vars()->flat({f, i}), value);
        }
    }
    return specialize(p, s);
}

// Exact quotient a / b in the Laurent polynomial ring; throws when b does not
// divide a. Quotient exponents are confined to the box allowed by the Newton
// polytopes, which guarantees termination.
inline LaurentSeries exact_divide(const LaurentSeries &a, const LaurentSeries &b)
{
    if (b.is_zero()) {
        throw std::domain_error("division by the zero series");
    }
    const std::size_t nv = a.vars()->size();
    LaurentSeries q(a.vars());
    if (a.is_zero()) {
        return q;
    }
    auto bounds = [nv](const LaurentSeries &s) {
        std::vector<int> lo(nv, 0), hi(nv, 0);
        bool first = true;
        for (const auto &[e, c] : s.terms()) {
            for (std::size_t i = 0; i < nv; ++i) {
                lo[i] = first ? e[i] : std::min(lo[i], e[i]);
                hi[i] = first ? e[i] : std::max(hi[i], e[i]);
            }
            first = false;
        }
        return std::pair{lo, hi};
    };
    const auto [alo, ahi] = bounds(a);
    const auto [blo, bhi] = bounds(b);
    // Pure lexicographic leading terms; the map order is graded, so search.
    auto lex_lead = [](const LaurentSeries &s) {
        auto best = s.terms().begin();
        for (auto it = s.terms().begin(); it != s.terms().end(); ++it) {
            if (it->first > best->first) {
                best = it;
            }
        }
        return best;
    };
    const auto lb = lex_lead(b);
    LaurentSeries rem = a.without_cutoff();
    const LaurentSeries divisor = b.without_cutoff();
    while (!rem.is_zero()) {
        const auto la = lex_lead(rem);
        Exponents qe(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            qe[i] = la->first[i] - lb->first[i];
            if (qe[i] < alo[i] - blo[i] || qe[i] > ahi[i] - bhi[i]) {
                throw std::domain_error("exact_divide: divisor does not divide dividend");
            }
        }
        const Rational qc = la->second / lb->second;
        LaurentSeries step = LaurentSeries::monomial(a.vars(), qe, qc);
        q += step;
        rem -= step * divisor;
    }
    return q;
}

// True when p is invariant under every transposition of variables inside the
// given family.
inline bool is_symmetric_in(const LaurentSeries &p, int family)
{
    const VariableSet &vs = *p.vars();
    const int count = vs.family(family).count;
    for (int i = 0; i + 1 < count; ++i) {
        Substitution s = Substitution::identity(vs, vs);
        s.rename(vs.flat({family, i}), {family, i + 1});
        s.rename(vs.flat({family, i + 1}), {family, i});
        if (!(specialize(p, s) == p)) {
            return false;
        }
    }
    return true;
}

inline nlohmann::json to_json(const LaurentSeries &p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[e, c] : p.terms()) {
        terms.push_back({{"exponents", e}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
    }
    return terms;
}

inline nlohmann::json variables_to_json(const VariableSet &vs)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto &f : vs.families()) {
        out.push_back({{"name", f.name}, {"count", f.count}, {"laurent", f.laurent}});
    }
    return out;
}

inline Vars variables_from_json(const nlohmann::json &j)
{
    std::vector<Family> fams;
    for (const auto &f : j) {
        fams.push_back({f.at("name").get<std::string>(), f.at("count").get<int>(), f.value("laurent", false)});
    }
    return make_vars(std::move(fams));
}

inline LaurentSeries series_from_json(const nlohmann::json &terms, Vars vars)
{
    if (!terms.is_array()) {
        throw std::invalid_argument("series JSON must be an array of terms");
    }
    LaurentSeries out(vars);
    for (const auto &t : terms) {
        Exponents e = t.at("exponents").get<Exponents>();
        Integer num(t.at("numerator").get<std::string>());
        Integer den(t.at("denominator").get<std::string>());
        if (den == 0) {
            throw std::invalid_argument("zero denominator in series JSON");
        }
        Rational c(num, den);
        c.canonicalize();
        out.add_term(std::move(e), c);
    }
    return out;
}

} // namespace superdual
