#pragma once

#include <superdual/partition.hpp>
#include <superdual/weight.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Weights of the three infinite rank algebras linked by super duality. All
// three share a finite even head; they differ in the tail:
//   Y      indices 1, 2, 3, ...          tail eventually  d
//   Ybar   indices 1/2, 3/2, 5/2, ...    tail eventually -d
//   Ytilde indices 1/2, 1, 3/2, 2, ...   tail eventually -d, d, -d, d, ...
// Half-integer indices are stored doubled.
namespace superdual::tail {

enum class TailKind { Y, Ybar, Ytilde };

inline std::string kind_name(TailKind k)
{
    switch (k) {
    case TailKind::Y:
        return "Y";
    case TailKind::Ybar:
        return "Ybar";
    case TailKind::Ytilde:
        return "Ytilde";
    }
    return "?";
}

inline TailKind kind_from_name(const std::string &s)
{
    if (s == "Y") {
        return TailKind::Y;
    }
    if (s == "Ybar") {
        return TailKind::Ybar;
    }
    if (s == "Ytilde") {
        return TailKind::Ytilde;
    }
    throw std::invalid_argument("unknown tail kind " + s);
}

class TailWeight {
public:
    TailWeight(std::vector<int> head, TailKind kind, int level, std::vector<int> tail_prefix)
        : head_(std::move(head)), kind_(kind), level_(level), prefix_(std::move(tail_prefix))
    {
        while (!prefix_.empty() && prefix_.back() == eventual(static_cast<int>(prefix_.size()) - 1)) {
            prefix_.pop_back();
        }
        validate();
    }

    // lambda_i = lambda+_i + d.
    static TailWeight make_y(std::vector<int> head, const Partition &plus, int level)
    {
        std::vector<int> tail;
        for (int v : plus.parts()) {
            tail.push_back(v + level);
        }
        return TailWeight(std::move(head), TailKind::Y, level, std::move(tail));
    }

    // lambda_{j-1/2} = lambda+_j - d.
    static TailWeight make_ybar(std::vector<int> head, const Partition &plus, int level)
    {
        std::vector<int> tail;
        for (int v : plus.parts()) {
            tail.push_back(v - level);
        }
        return TailWeight(std::move(head), TailKind::Ybar, level, std::move(tail));
    }

    const std::vector<int> &head() const { return head_; }
    TailKind kind() const { return kind_; }
    int level() const { return level_; }
    const std::vector<int> &tail_prefix() const { return prefix_; }

    // Tail coefficient at the doubled index 2i.
    int coefficient(int doubled) const
    {
        const int pos = position(doubled);
        return pos < static_cast<int>(prefix_.size()) ? prefix_[static_cast<std::size_t>(pos)] : eventual(pos);
    }

    // The partition carried by the tail of a Y or Ybar weight.
    Partition tail_partition() const
    {
        std::vector<int> parts;
        for (std::size_t k = 0; k < prefix_.size(); ++k) {
            parts.push_back(kind_ == TailKind::Y ? prefix_[k] - level_ : prefix_[k] + level_);
        }
        if (kind_ == TailKind::Ytilde) {
            throw std::logic_error("Ytilde weights carry Frobenius data, not a tail partition");
        }
        return Partition(std::move(parts));
    }

    // p_i = lambda_{i-1/2} + d and q_i = lambda_i - d of a Ytilde weight.
    FrobeniusCoordinates tail_frobenius() const
    {
        if (kind_ != TailKind::Ytilde) {
            throw std::logic_error("Frobenius data only lives on Ytilde weights");
        }
        FrobeniusCoordinates fc;
        for (int i = 1; 2 * i - 2 < static_cast<int>(prefix_.size()); ++i) {
            const int p = coefficient(2 * i - 1) + level_;
            const int q = coefficient(2 * i) - level_;
            if (p == 0 && q == 0) {
                break;
            }
            fc.p.push_back(p);
            fc.q.push_back(q);
        }
        return fc;
    }

    friend bool operator==(const TailWeight &, const TailWeight &) = default;

private:
    // Position of a doubled index inside the prefix for this kind.
    int position(int doubled) const
    {
        switch (kind_) {
        case TailKind::Y:
            if (doubled < 2 || doubled % 2 != 0) {
                throw std::out_of_range("Y weights are indexed by positive integers");
            }
            return doubled / 2 - 1;
        case TailKind::Ybar:
            if (doubled < 1 || doubled % 2 != 1) {
                throw std::out_of_range("Ybar weights are indexed by positive half-odd integers");
            }
            return (doubled - 1) / 2;
        case TailKind::Ytilde:
            if (doubled < 1) {
                throw std::out_of_range("Ytilde weights are indexed by positive half-integers");
            }
            return doubled - 1;
        }
        return 0;
    }

    int eventual(int pos) const
    {
        switch (kind_) {
        case TailKind::Y:
            return level_;
        case TailKind::Ybar:
            return -level_;
        case TailKind::Ytilde:
            return pos % 2 == 0 ? -level_ : level_;
        }
        return 0;
    }

    void validate() const
    {
        if (kind_ == TailKind::Ytilde) {
            (void)from_frobenius(tail_frobenius());
            for (std::size_t k = 0; k < prefix_.size(); ++k) {
                if (k % 2 == 1 && prefix_[k] - level_ < 0) {
                    throw std::invalid_argument("Ytilde tail has a negative Frobenius coordinate");
                }
            }
        } else {
            (void)tail_partition();
        }
    }

    std::vector<int> head_;
    TailKind kind_;
    int level_;
    std::vector<int> prefix_;
};

// Y -> Ybar: the tail partition is conjugated.
inline TailWeight natural_map(const TailWeight &w)
{
    if (w.kind() != TailKind::Y) {
        throw std::invalid_argument("natural_map is defined on Y weights");
    }
    return TailWeight::make_ybar(w.head(), w.tail_partition().conjugate(), w.level());
}

inline TailWeight natural_map_inverse(const TailWeight &w)
{
    if (w.kind() != TailKind::Ybar) {
        throw std::invalid_argument("natural_map_inverse is defined on Ybar weights");
    }
    return TailWeight::make_y(w.head(), w.tail_partition().conjugate(), w.level());
}

// Y -> Ytilde: with (p|q) the modified Frobenius coordinates of the
// conjugated tail partition, slot i-1/2 gets p_i - d and slot i gets q_i + d.
inline TailWeight theta_map(const TailWeight &w)
{
    if (w.kind() != TailKind::Y) {
        throw std::invalid_argument("theta_map is defined on Y weights");
    }
    const FrobeniusCoordinates fc = modified_frobenius(w.tail_partition().conjugate());
    std::vector<int> tail;
    for (std::size_t i = 0; i < fc.p.size(); ++i) {
        tail.push_back(fc.p[i] - w.level());
        tail.push_back(fc.q[i] + w.level());
    }
    return TailWeight(w.head(), TailKind::Ytilde, w.level(), std::move(tail));
}

inline TailWeight theta_inverse(const TailWeight &w)
{
    if (w.kind() != TailKind::Ytilde) {
        throw std::invalid_argument("theta_inverse is defined on Ytilde weights");
    }
    return TailWeight::make_y(w.head(), from_frobenius(w.tail_frobenius()).conjugate(), w.level());
}

// The truncation functor sends the module to zero.
struct ZeroModule {
    friend bool operator==(const ZeroModule &, const ZeroModule &) = default;
};

// Finite gl(m|n) truncation of a Ybar weight: zero unless the tail value at
// n + 1/2 equals -d; otherwise the head together with the tail values at
// 1/2, ..., n - 1/2.
inline std::variant<ZeroModule, Weight> truncate_weight(const TailWeight &w, int n)
{
    if (w.kind() != TailKind::Ybar) {
        throw std::invalid_argument("truncation is defined on Ybar weights");
    }
    if (n < 0) {
        throw std::invalid_argument("truncation rank must be nonnegative");
    }
    if (w.coefficient(2 * n + 1) != -w.level()) {
        return ZeroModule{};
    }
    std::vector<int> eps;
    for (int j = 1; j <= n; ++j) {
        eps.push_back(w.coefficient(2 * j - 1));
    }
    return Weight::from_integers(w.head(), eps);
}

inline nlohmann::json to_json(const TailWeight &w)
{
    return {{"head", w.head()},
            {"tail_prefix", w.tail_prefix()},
            {"tail_constant", w.level()},
            {"kind", kind_name(w.kind())},
            {"index_base", w.kind() == TailKind::Y ? "1" : "1/2"}};
}

inline TailWeight tail_weight_from_json(const nlohmann::json &j)
{
    return TailWeight(j.at("head").get<std::vector<int>>(), kind_from_name(j.at("kind").get<std::string>()),
                      j.at("tail_constant").get<int>(), j.at("tail_prefix").get<std::vector<int>>());
}

} // namespace superdual::tail
