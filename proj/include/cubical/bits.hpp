#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace cubical {

// Fixed-width bitset sized at runtime; rows of relation matrices.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    std::size_t count() const {
        return std::accumulate(w_.begin(), w_.end(), std::size_t{0},
                               [](std::size_t s, std::uint64_t x) { return s + std::popcount(x); });
    }
    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    bool is_subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                const int t = std::countr_zero(x);
                f(k * 64 + static_cast<std::size_t>(t));
                x &= x - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bits&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Plain union-find with path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0) : p_(n) { std::iota(p_.begin(), p_.end(), std::size_t{0}); }
    std::size_t add() {
        p_.push_back(p_.size());
        return p_.size() - 1;
    }
    std::size_t find(std::size_t x) {
        while (p_[x] != x) x = p_[x] = p_[p_[x]];
        return x;
    }
    // keeps the smaller index as the root so representatives are stable
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        p_[b] = a;
    }
    std::size_t size() const { return p_.size(); }

private:
    std::vector<std::size_t> p_;
};

}  // namespace cubical
