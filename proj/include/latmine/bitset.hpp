#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace latmine {

/// Fixed-size bit vector used for the vertical (tidset) and horizontal (row)
/// views of a context. Bits past size() are always zero.
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size, bool value = false)
        : size_(size), words_((size + word_bits - 1) / word_bits, value ? ~word_type{0} : 0) {
        trim();
    }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }

    void set_all() noexcept {
        for (auto& w : words_) w = ~word_type{0};
        trim();
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }

    Bitset flipped() const {
        Bitset out = *this;
        for (auto& w : out.words_) w = ~w;
        out.trim();
        return out;
    }

    /// |this & other| without materializing the intersection.
    std::size_t intersection_count(const Bitset& other) const noexcept {
        std::size_t n = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            n += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        return n;
    }

    bool is_subset_of(const Bitset& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & ~other.words_[k]) != 0) return false;
        return true;
    }

    /// Calls f(i) for every set bit, in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            word_type w = words_[k];
            while (w != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(k * word_bits + bit);
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const noexcept {
        std::size_t h = size_;
        for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }

private:
    void trim() noexcept {
        if (size_ % word_bits != 0 && !words_.empty())
            words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

} // namespace latmine
