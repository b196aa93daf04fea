#pragma once

#include "weylcheck/finite_group.hpp"

#include <cstring>

namespace weylcheck::detail {

inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

inline std::uint64_t hash_key(KeyView k) noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.size();
    std::size_t i = 0;
    for (; i + 8 <= k.size(); i += 8) {
        std::uint64_t w;
        std::memcpy(&w, k.data() + i, 8);
        h = mix64(h ^ w);
    }
    if (i < k.size()) {
        std::uint64_t w = 0;
        std::memcpy(&w, k.data() + i, k.size() - i);
        h = mix64(h ^ w);
    }
    return h;
}

inline void store_be32(std::uint8_t* p, std::uint32_t v) noexcept {
    p[0] = static_cast<std::uint8_t>(v >> 24);
    p[1] = static_cast<std::uint8_t>(v >> 16);
    p[2] = static_cast<std::uint8_t>(v >> 8);
    p[3] = static_cast<std::uint8_t>(v);
}

inline std::uint32_t load_be32(const std::uint8_t* p) noexcept {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) | (std::uint32_t(p[2]) << 8) |
           std::uint32_t(p[3]);
}

inline void store_be64(std::uint8_t* p, std::uint64_t v) noexcept {
    store_be32(p, static_cast<std::uint32_t>(v >> 32));
    store_be32(p + 4, static_cast<std::uint32_t>(v));
}

inline std::uint64_t load_be64(const std::uint8_t* p) noexcept {
    return (std::uint64_t(load_be32(p)) << 32) | load_be32(p + 4);
}

// Flat fixed-width key store with an open-addressing index.
class KeyTable {
public:
    static constexpr Index kEmpty = 0xFFFFFFFFu;

    explicit KeyTable(std::size_t width) : width_(width) { rehash(16); }

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return count_; }
    KeyView key(Index i) const noexcept { return {keys_.data() + std::size_t(i) * width_, width_}; }
    const std::vector<std::uint8_t>& keys() const noexcept { return keys_; }

    void reserve(std::size_t n) {
        keys_.reserve(n * width_);
        if (2 * n > slots_.size()) rehash(2 * n);
    }

    std::optional<Index> find(KeyView k) const noexcept {
        std::size_t s = hash_key(k) & mask_;
        while (true) {
            const Index v = slots_[s];
            if (v == kEmpty) return std::nullopt;
            if (std::memcmp(keys_.data() + std::size_t(v) * width_, k.data(), width_) == 0) return v;
            s = (s + 1) & mask_;
        }
    }

    std::pair<Index, bool> insert(KeyView k) {
        if (2 * (count_ + 1) > slots_.size()) rehash(2 * slots_.size());
        std::size_t s = hash_key(k) & mask_;
        while (true) {
            const Index v = slots_[s];
            if (v == kEmpty) break;
            if (std::memcmp(keys_.data() + std::size_t(v) * width_, k.data(), width_) == 0) return {v, false};
            s = (s + 1) & mask_;
        }
        if (count_ >= kEmpty) throw std::length_error("key table full");
        const Index id = static_cast<Index>(count_++);
        keys_.insert(keys_.end(), k.begin(), k.end());
        slots_[s] = id;
        return {id, true};
    }

    // Adopts keys that are already unique.
    static KeyTable from_keys(std::size_t width, std::vector<std::uint8_t> keys) {
        KeyTable t(width);
        t.count_ = keys.size() / width;
        t.keys_ = std::move(keys);
        t.rehash(2 * t.count_);
        return t;
    }

    std::vector<std::uint8_t> release() {
        std::vector<std::uint8_t> out = std::move(keys_);
        keys_.clear();
        slots_.assign(16, kEmpty);
        mask_ = 15;
        count_ = 0;
        return out;
    }

private:
    void rehash(std::size_t want) {
        std::size_t cap = 16;
        while (cap < want) cap <<= 1;
        slots_.assign(cap, kEmpty);
        mask_ = cap - 1;
        for (std::size_t i = 0; i < count_; ++i) {
            std::size_t s = hash_key(key(static_cast<Index>(i))) & mask_;
            while (slots_[s] != kEmpty) s = (s + 1) & mask_;
            slots_[s] = static_cast<Index>(i);
        }
    }

    std::size_t width_;
    std::size_t count_ = 0;
    std::size_t mask_ = 0;
    std::vector<std::uint8_t> keys_;
    std::vector<Index> slots_;
};

} // namespace weylcheck::detail
