#include "bes/erdos_rado.hpp"

#include <algorithm>
#include <map>

#include "bes/error.hpp"

namespace bes {

namespace {

using Family = std::vector<std::vector<Vertex>>;

std::vector<Vertex> meet(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i;
        else ++j;
    }
    return true;
}

std::vector<Vertex> without(const std::vector<Vertex>& a, const std::vector<Vertex>& core) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), core.begin(), core.end(), std::back_inserter(out));
    return out;
}

// `ids` index into `sets`; every set contains `core`.
std::optional<std::vector<std::size_t>> greedy(const Family& sets, const std::vector<std::size_t>& ids,
                                               const std::vector<Vertex>& core, std::size_t r) {
    if (ids.size() < r) return std::nullopt;
    std::vector<std::size_t> chosen;
    std::vector<std::vector<Vertex>> rests;
    for (auto id : ids) {
        auto rest = without(sets[id], core);
        bool ok = std::all_of(rests.begin(), rests.end(), [&](const auto& o) { return disjoint(o, rest); });
        if (!ok) continue;
        chosen.push_back(id);
        rests.push_back(std::move(rest));
        if (chosen.size() == r) return chosen;
    }
    // Recurse on the most frequent element outside the core, smallest label on ties.
    std::map<Vertex, std::size_t> frequency;
    for (auto id : ids) {
        for (auto x : without(sets[id], core)) ++frequency[x];
    }
    Vertex best = 0;
    std::size_t best_count = 0;
    for (const auto& [x, count] : frequency) {
        if (count > best_count) {
            best = x;
            best_count = count;
        }
    }
    if (best_count < r) return std::nullopt;
    std::vector<std::size_t> link;
    for (auto id : ids) {
        if (std::binary_search(sets[id].begin(), sets[id].end(), best)) link.push_back(id);
    }
    auto next_core = core;
    next_core.insert(std::upper_bound(next_core.begin(), next_core.end(), best), best);
    return greedy(sets, link, next_core, r);
}

bool exhaustive(const Family& sets, const std::vector<std::size_t>& ids, std::size_t r, std::size_t from,
                std::vector<std::size_t>& chosen, std::vector<Vertex>& core) {
    if (chosen.size() == r) return true;
    for (std::size_t i = from; i + (r - chosen.size()) <= ids.size(); ++i) {
        const auto& s = sets[ids[i]];
        if (chosen.size() == 1) {
            core = meet(sets[chosen[0]], s);
        } else if (chosen.size() > 1) {
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](auto c) { return meet(sets[c], s) == core; });
            if (!ok) continue;
        }
        chosen.push_back(ids[i]);
        if (exhaustive(sets, ids, r, i + 1, chosen, core)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool is_set_sunflower(const Family& sets, const SetSunflower& s) {
    for (std::size_t i = 0; i < s.indices.size(); ++i) {
        if (s.indices[i] >= sets.size()) return false;
        for (std::size_t j = i + 1; j < s.indices.size(); ++j) {
            const auto& a = sets[s.indices[i]];
            const auto& b = sets[s.indices[j]];
            if (a == b || meet(a, b) != s.core) return false;
        }
    }
    return true;
}

std::optional<SetSunflower> erdos_rado(const Family& sets, std::size_t r, std::size_t exhaustive_limit) {
    if (r < 2) throw InputError("erdos_rado needs r >= 2");
    for (const auto& s : sets) {
        if (s.size() != sets.front().size()) throw InputError("erdos_rado needs sets of equal size");
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw InputError("erdos_rado needs sorted sets without repeats");
        }
    }
    std::vector<std::size_t> ids;
    {
        std::map<std::vector<Vertex>, std::size_t> first;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (first.emplace(sets[i], i).second) ids.push_back(i);
        }
    }
    std::optional<SetSunflower> out;
    if (auto chosen = greedy(sets, ids, {}, r)) {
        SetSunflower s;
        s.indices = std::move(*chosen);
        std::sort(s.indices.begin(), s.indices.end());
        s.core = meet(sets[s.indices[0]], sets[s.indices[1]]);
        out = std::move(s);
    } else if (ids.size() <= exhaustive_limit) {
        std::vector<std::size_t> chosen;
        std::vector<Vertex> core;
        if (exhaustive(sets, ids, r, 0, chosen, core)) out = SetSunflower{core, chosen};
    }
    if (out && !is_set_sunflower(sets, *out)) throw InternalError("erdos_rado produced a non-sunflower");
    return out;
}

}  // namespace bes
