#include "bes/vertex_subset.hpp"

#include <algorithm>
#include <string>

#include "bes/error.hpp"

namespace bes {

VertexSubset VertexSubset::from_members(std::size_t universe, std::span<const Vertex> members) {
    VertexSubset s(universe);
    for (auto v : members) {
        if (v >= universe) {
            throw InputError("vertex " + std::to_string(v) + " out of range for " +
                             std::to_string(universe) + " vertices");
        }
        if (s.contains(v)) throw InputError("vertex " + std::to_string(v) + " listed twice");
        s.insert(v);
    }
    return s;
}

VertexSubset VertexSubset::full(std::size_t universe) {
    VertexSubset s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
    return s;
}

std::vector<Vertex> VertexSubset::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const auto theirs = w < other.words_.size() ? other.words_[w] : 0;
        if ((words_[w] & ~theirs) != 0) return false;
    }
    return true;
}

bool VertexSubset::intersects(const VertexSubset& other) const noexcept {
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

namespace {
void require_same_universe(const VertexSubset& a, const VertexSubset& b) {
    if (a.universe() != b.universe()) {
        throw InputError("vertex subsets over different universes (" + std::to_string(a.universe()) +
                         " vs " + std::to_string(b.universe()) + ")");
    }
}
}  // namespace

VertexSubset& VertexSubset::operator|=(const VertexSubset& other) {
    require_same_universe(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSubset& VertexSubset::operator&=(const VertexSubset& other) {
    require_same_universe(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSubset& VertexSubset::operator-=(const VertexSubset& other) {
    require_same_universe(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

}  // namespace bes
