#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bes {

using Vertex = std::uint32_t;

/// Subset of the dense label range [0, universe) stored as a bitset.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    /// Throws InputError on labels >= universe or repeated labels.
    static VertexSubset from_members(std::size_t universe, std::span<const Vertex> members);
    static VertexSubset full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool empty() const noexcept {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    /// Members in ascending order.
    std::vector<Vertex> members() const;

    bool is_subset_of(const VertexSubset& other) const noexcept;
    bool intersects(const VertexSubset& other) const noexcept;

    VertexSubset& operator|=(const VertexSubset& other);
    VertexSubset& operator&=(const VertexSubset& other);
    VertexSubset& operator-=(const VertexSubset& other);

    friend VertexSubset operator|(VertexSubset a, const VertexSubset& b) { return a |= b; }
    friend VertexSubset operator&(VertexSubset a, const VertexSubset& b) { return a &= b; }
    friend VertexSubset operator-(VertexSubset a, const VertexSubset& b) { return a -= b; }

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace bes
