#ifndef QUANTALIB_BITSET_HPP
#define QUANTALIB_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace quantalib {

/// Growable-at-construction bitset used for order rows, sieves and cribles.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return n_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

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

    bool is_subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }

    friend bool operator==(const DynBitset&, const DynBitset&) = default;
    friend auto operator<=>(const DynBitset& a, const DynBitset& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

    /// Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size()) return n_;
            w = words_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = next(0); i < n_; i = next(i + 1)) f(i);
    }

    std::size_t hash() const noexcept {
        std::size_t h = n_;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DynBitsetHash {
    std::size_t operator()(const DynBitset& b) const noexcept { return b.hash(); }
};

} // namespace quantalib

#endif
