#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace powg {

using Vertex = std::uint32_t;

/// Fixed-capacity bit set over vertex indices [0, capacity).
///
/// Used both as adjacency rows of a Graph and as the memo key of the
/// matching engine, so equality and hashing look only at the words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : words_((capacity + 63) / 64, 0), capacity_(capacity) {}

    static VertexSet full(std::size_t capacity)
    {
        VertexSet s(capacity);
        for (std::size_t v = 0; v < capacity; ++v)
            s.insert(static_cast<Vertex>(v));
        return s;
    }

    std::size_t capacity() const { return capacity_; }

    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Size of the intersection with `other` without materializing it.
    std::size_t count_common(const VertexSet& other) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    VertexSet& operator&=(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// Removes every element of `other`.
    VertexSet& subtract(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    /// Smallest element, or capacity() if empty.
    Vertex first() const { return next(0); }

    /// Smallest element >= from, or capacity() if none.
    Vertex next(Vertex from) const
    {
        std::size_t wi = from >> 6;
        if (wi >= words_.size())
            return static_cast<Vertex>(capacity_);
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            if (++wi >= words_.size())
                return static_cast<Vertex>(capacity_);
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::size_t hash() const
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    std::vector<std::uint64_t> words_;
    std::size_t capacity_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace powg
