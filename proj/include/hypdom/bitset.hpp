#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hypdom {

// Fixed-size set of item indices backed by 64-bit words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), std::uint64_t{0}); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool full() const {
        if (size_ == 0) return true;
        for (std::size_t i = 0; i + 1 < words_.size(); ++i)
            if (words_[i] != ~std::uint64_t{0}) return false;
        return words_.back() == tail_mask();
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset&) const = default;

    /// First set index, or size() if empty.
    std::size_t first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) {
                std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
                return i < size_ ? i : size_;
            }
        return size_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    /// True iff (a | b) contains every index; avoids a temporary.
    friend bool union_full(const Bitset& a, const Bitset& b) {
        if (a.size_ == 0) return true;
        for (std::size_t i = 0; i + 1 < a.words_.size(); ++i)
            if ((a.words_[i] | b.words_[i]) != ~std::uint64_t{0}) return false;
        return (a.words_.back() | b.words_.back()) == a.tail_mask();
    }

private:
    std::uint64_t tail_mask() const {
        std::size_t tail = size_ & 63;
        return tail ? (std::uint64_t{1} << tail) - 1 : ~std::uint64_t{0};
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hypdom
