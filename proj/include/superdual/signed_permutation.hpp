#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace superdual {

// Element of the hyperoctahedral group, the Weyl group of type C_N (and B_N).
// image()[i] = +-(j+1) means e_{i+1} is sent to +-e_{j+1}.
//
// Simple reflections: s_0 negates e_1, s_i swaps e_i and e_{i+1}. Positive
// roots are e_i - e_j, -e_i - e_j (i < j) and -2e_i, so (-1, -2, ..., -N) is
// dominant regular.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> image) : image_(std::move(image))
    {
        std::vector<bool> seen(image_.size(), false);
        for (int v : image_) {
            const int a = std::abs(v);
            if (a < 1 || static_cast<std::size_t>(a) > image_.size() || seen[static_cast<std::size_t>(a - 1)]) {
                throw std::invalid_argument("not a signed permutation");
            }
            seen[static_cast<std::size_t>(a - 1)] = true;
        }
    }

    static SignedPermutation identity(int rank)
    {
        std::vector<int> img(static_cast<std::size_t>(rank));
        std::iota(img.begin(), img.end(), 1);
        return SignedPermutation(std::move(img));
    }

    int rank() const { return static_cast<int>(image_.size()); }
    const std::vector<int> &image() const { return image_; }

    // w * s_k (s_k applied first).
    SignedPermutation times_simple(int k) const
    {
        check_simple(k);
        SignedPermutation out(*this);
        if (k == 0) {
            out.image_[0] = -out.image_[0];
        } else {
            std::swap(out.image_[static_cast<std::size_t>(k - 1)], out.image_[static_cast<std::size_t>(k)]);
        }
        return out;
    }

    // s_k * w.
    SignedPermutation simple_times(int k) const
    {
        check_simple(k);
        SignedPermutation out(*this);
        for (int &v : out.image_) {
            if (k == 0) {
                if (std::abs(v) == 1) {
                    v = -v;
                }
            } else if (std::abs(v) == k) {
                v = v > 0 ? k + 1 : -(k + 1);
            } else if (std::abs(v) == k + 1) {
                v = v > 0 ? k : -k;
            }
        }
        return out;
    }

    template <typename T>
    std::vector<T> apply(const std::vector<T> &v) const
    {
        if (v.size() != image_.size()) {
            throw std::invalid_argument("vector length differs from rank");
        }
        std::vector<T> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const int target = std::abs(image_[i]) - 1;
            out[static_cast<std::size_t>(target)] = image_[i] > 0 ? v[i] : -v[i];
        }
        return out;
    }

    // Coxeter length: positive roots made negative, read off from w applied
    // to the dominant regular vector.
    int length() const
    {
        std::vector<long> base(image_.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            base[i] = -static_cast<long>(i + 1);
        }
        const auto u = apply(base);
        int len = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] > 0) {
                ++len;
            }
            for (std::size_t j = i + 1; j < u.size(); ++j) {
                if (u[i] < u[j]) {
                    ++len;
                }
                if (u[i] + u[j] > 0) {
                    ++len;
                }
            }
        }
        return len;
    }

    int sign() const { return length() % 2 == 0 ? 1 : -1; }

    // True when the last basis vector is moved, i.e. the element may not be
    // faithfully represented at this rank.
    bool moves_last() const { return !image_.empty() && image_.back() != rank(); }

    friend auto operator<=>(const SignedPermutation &, const SignedPermutation &) = default;

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < image_.size(); ++i) {
            s += (i ? "," : "") + std::to_string(image_[i]);
        }
        return s + "]";
    }

    // All 2^N N! elements.
    static std::vector<SignedPermutation> all(int rank)
    {
        std::vector<SignedPermutation> out;
        std::vector<int> perm(static_cast<std::size_t>(rank));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            for (unsigned mask = 0; mask < (1u << rank); ++mask) {
                std::vector<int> img(perm);
                for (int i = 0; i < rank; ++i) {
                    if (mask & (1u << i)) {
                        img[static_cast<std::size_t>(i)] = -img[static_cast<std::size_t>(i)];
                    }
                }
                out.emplace_back(std::move(img));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }

private:
    void check_simple(int k) const
    {
        if (k < 0 || k >= rank()) {
            throw std::out_of_range("simple reflection index outside rank");
        }
    }

    std::vector<int> image_;
};

} // namespace superdual
