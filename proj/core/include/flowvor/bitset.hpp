#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace flowvor {

/// Fixed-width bit array sized at construction.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(std::size_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1u;
    }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
    void clear() { words_.assign(words_.size(), 0); }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) {
            n += static_cast<std::size_t>(std::popcount(w));
        }
        return n;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

  private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace flowvor
