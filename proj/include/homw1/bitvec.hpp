#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace homw1::gf2alg {

// Fixed-length vector over the two-element field, packed 64 bits per word.
class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static GF2Vector from_indices(std::size_t n, std::span<const std::int32_t> idx) {
        GF2Vector v(n);
        for (std::int32_t i : idx) v.flip(static_cast<std::size_t>(i));
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const GF2Vector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }
    void xor_indices(std::span<const std::int32_t> idx) {
        for (std::int32_t i : idx) flip(static_cast<std::size_t>(i));
    }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::optional<std::size_t> lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return std::nullopt;
    }

    std::vector<std::int32_t> to_indices() const {
        std::vector<std::int32_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back(static_cast<std::int32_t>(w * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    bool operator==(const GF2Vector&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace homw1::gf2alg
