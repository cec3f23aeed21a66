#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace compat {

using Vertex = int;

/// Fixed-capacity set of vertex ids backed by 64-bit words.
class VertexSet
{
public:
    VertexSet() = default;

    explicit VertexSet(int capacity) :
        _capacity(capacity), _words((capacity + 63) / 64, 0)
    {
    }

    VertexSet(int capacity, std::initializer_list<Vertex> members) :
        VertexSet(capacity)
    {
        for (auto v : members)
            insert(v);
    }

    template <typename Range>
    static auto from_range(int capacity, const Range & members) -> VertexSet
    {
        VertexSet result(capacity);
        for (auto v : members)
            result.insert(static_cast<Vertex>(v));
        return result;
    }

    static auto full(int capacity) -> VertexSet
    {
        VertexSet result(capacity);
        for (Vertex v = 0; v < capacity; ++v)
            result.insert(v);
        return result;
    }

    auto capacity() const -> int { return _capacity; }

    auto contains(Vertex v) const -> bool
    {
        if (v < 0 || v >= _capacity)
            return false;
        return (_words[v / 64] >> (v % 64)) & 1U;
    }

    auto insert(Vertex v) -> void { _words[v / 64] |= (std::uint64_t{1} << (v % 64)); }
    auto erase(Vertex v) -> void { _words[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

    auto count() const -> int
    {
        int total = 0;
        for (auto w : _words)
            total += std::popcount(w);
        return total;
    }

    auto empty() const -> bool
    {
        for (auto w : _words)
            if (w != 0)
                return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    auto first() const -> Vertex
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] != 0)
                return static_cast<Vertex>(i * 64 + std::countr_zero(_words[i]));
        return -1;
    }

    template <typename Fn>
    auto for_each(Fn && fn) const -> void
    {
        for (std::size_t i = 0; i < _words.size(); ++i) {
            auto w = _words[i];
            while (w != 0) {
                fn(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    auto to_vector() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for_each([&](Vertex v) { result.push_back(v); });
        return result;
    }

    auto complement() const -> VertexSet
    {
        VertexSet result(_capacity);
        for (Vertex v = 0; v < _capacity; ++v)
            if (! contains(v))
                result.insert(v);
        return result;
    }

    auto intersect_count(const VertexSet & other) const -> int
    {
        int total = 0;
        for (std::size_t i = 0; i < _words.size() && i < other._words.size(); ++i)
            total += std::popcount(_words[i] & other._words[i]);
        return total;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size() && i < other._words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= i < other._words.size() ? other._words[i] : 0;
        return *this;
    }

    auto operator-=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size() && i < other._words.size(); ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

private:
    int _capacity = 0;
    std::vector<std::uint64_t> _words;
};

} // namespace compat
