#include "bes/lower_bounds.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "bes/error.hpp"

namespace bes {

bool is_ap3_free(std::span<const std::int64_t> sorted) {
    std::unordered_set<std::int64_t> in(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t k = i + 1; k < sorted.size(); ++k) {
            const auto sum = sorted[i] + sorted[k];
            if (sum % 2 == 0 && in.count(sum / 2)) return false;
        }
    }
    return true;
}

namespace {

// Values below `limit` whose base-d digits all lie in [0, top], grouped by
// the squared norm of the digit vector.
void digit_vectors(std::int64_t base, std::int64_t top, std::int64_t dims, std::int64_t limit, std::int64_t place,
                   std::int64_t value, std::int64_t norm, std::map<std::int64_t, std::vector<std::int64_t>>& out) {
    if (dims == 0) {
        out[norm].push_back(value);
        return;
    }
    for (std::int64_t digit = 0; digit <= top; ++digit) {
        const auto next = value + digit * place;
        if (next >= limit) break;
        digit_vectors(base, top, dims - 1, limit, place * base, next, norm + digit * digit, out);
    }
}

std::vector<std::int64_t> base_three(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 0; v < limit; ++v) {
        std::int64_t x = v;
        bool ok = true;
        while (x > 0 && ok) {
            ok = x % 3 != 2;
            x /= 3;
        }
        if (ok) out.push_back(v);
    }
    return out;
}

}  // namespace

AP3FreeSet behrend_set(std::int64_t n) {
    if (n < 1) throw InputError("behrend_set needs N >= 1");
    AP3FreeSet best;
    best.n = n;
    best.members = base_three(n);
    best.base = 3;
    best.dimension = 0;
    for (std::int64_t base = 3; base <= std::min<std::int64_t>(n, 64); ++base) {
        const auto top = (base - 1) / 2;
        std::int64_t span = 1;
        for (std::int64_t dims = 1; dims <= 24; ++dims) {
            std::map<std::int64_t, std::vector<std::int64_t>> shells;
            digit_vectors(base, top, dims, n, 1, 0, 0, shells);
            for (auto& [norm, values] : shells) {
                if (values.size() > best.members.size()) {
                    std::sort(values.begin(), values.end());
                    best.members = values;
                    best.base = base;
                    best.dimension = dims;
                }
            }
            if (span > n / base) break;
            span *= base;
        }
    }
    for (auto& x : best.members) ++x;
    if (!is_ap3_free(best.members)) throw InternalError("behrend_set produced a progression");
    return best;
}

Hypergraph3 rs_hypergraph(std::int64_t n, std::span<const std::int64_t> b, bool check_progressions) {
    if (n < 1) throw InputError("rs_hypergraph needs N >= 1");
    std::vector<std::int64_t> sorted(b.begin(), b.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("rs_hypergraph: B has repeated members");
    }
    if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > n)) {
        throw InputError("rs_hypergraph: B must lie in [1, " + std::to_string(n) + "]");
    }
    if (check_progressions && !is_ap3_free(sorted)) {
        throw PreconditionError("rs_hypergraph: B contains a three-term progression");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * sorted.size());
    for (std::int64_t x = 1; x <= n; ++x) {
        for (auto d : sorted) {
            edges.push_back({static_cast<Vertex>(x - 1), static_cast<Vertex>(n + x + d - 1),
                             static_cast<Vertex>(3 * n + x + 2 * d - 1)});
        }
    }
    return Hypergraph3::from_edges(static_cast<std::size_t>(6 * n), std::move(edges));
}

}  // namespace bes
