#include "bes/sunflower.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <unordered_map>

#include "bes/error.hpp"

namespace bes {

namespace {

Edge image(const Embedding& phi, const Edge& e) {
    Edge out{phi[e[0]], phi[e[1]], phi[e[2]]};
    std::sort(out.begin(), out.end());
    return out;
}

void require_well_formed(const Hypergraph3& host, const SunflowerCertificate& cert) {
    if (cert.embeddings.empty()) throw InputError("sunflower certificate has no embeddings");
    if (cert.core.universe() != cert.pattern.vertex_count()) {
        throw InputError("sunflower core does not range over the pattern's vertices");
    }
    for (std::size_t i = 0; i < cert.embeddings.size(); ++i) {
        const auto& phi = cert.embeddings[i];
        if (phi.size() != cert.pattern.vertex_count()) {
            throw InputError("embedding " + std::to_string(i) + " has " + std::to_string(phi.size()) +
                             " entries, expected " + std::to_string(cert.pattern.vertex_count()));
        }
        for (auto x : phi) {
            if (x >= host.vertex_count()) {
                throw InputError("embedding " + std::to_string(i) + " uses host vertex " + std::to_string(x) +
                                 " out of range");
            }
        }
    }
}

struct TrimOutcome {
    VertexSubset vertices;
    std::vector<Vertex> removed;
    std::size_t edges_left = 0;
};

// Removes degree-1 vertices of the hypergraph (W, edges), smallest label
// first, until `target` edges remain or no degree-1 vertex is left.
TrimOutcome trim_edge_list(VertexSubset w, const std::vector<Edge>& edges, std::size_t target, bool debug) {
    const auto n = w.universe();
    std::vector<std::vector<std::uint32_t>> incident(n);
    std::vector<std::uint32_t> degree(n, 0);
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        for (auto x : edges[i]) {
            incident[x].push_back(i);
            ++degree[x];
        }
    }
    std::vector<bool> live(edges.size(), true);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ones;
    for (auto x : w.members()) {
        if (degree[x] == 1) ones.push(x);
    }
    TrimOutcome out;
    out.edges_left = edges.size();
    while (out.edges_left > target && !ones.empty()) {
        const auto x = ones.top();
        ones.pop();
        if (!w.contains(x) || degree[x] != 1) continue;
        std::uint32_t gone = 0;
        for (auto id : incident[x]) {
            if (live[id]) gone = id;
        }
        live[gone] = false;
        --out.edges_left;
        for (auto y : edges[gone]) {
            if (--degree[y] == 1 && y != x) ones.push(y);
        }
        w.erase(x);
        out.removed.push_back(x);
        if (debug) {
            std::vector<std::uint32_t> fresh(n, 0);
            std::size_t count = 0;
            for (std::uint32_t i = 0; i < edges.size(); ++i) {
                if (!live[i]) continue;
                ++count;
                for (auto y : edges[i]) ++fresh[y];
            }
            if (fresh != degree || count != out.edges_left) {
                throw InternalError("incremental degree bookkeeping diverged from a full recount");
            }
        }
    }
    out.vertices = std::move(w);
    return out;
}

}  // namespace

SunflowerReport verify_sunflower(const Hypergraph3& host, const SunflowerCertificate& cert) {
    require_well_formed(host, cert);
    auto fail = [](std::string why) { return SunflowerReport{false, std::move(why)}; };
    const auto& f = cert.pattern;
    if (cert.core.size() >= f.vertex_count()) return fail("core is not a proper subset of the pattern");
    if (induced_deficiency(f, cert.core) < deficiency(f)) return fail("core deficiency is below the pattern's");

    for (std::size_t i = 0; i < cert.r(); ++i) {
        const auto& phi = cert.embeddings[i];
        auto sorted = phi;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return fail("embedding " + std::to_string(i) + " is not injective");
        }
        for (const auto& e : f.edges()) {
            const auto im = image(phi, e);
            if (!host.has_edge(im[0], im[1], im[2])) {
                return fail("embedding " + std::to_string(i) + " misses host edge {" + std::to_string(im[0]) + "," +
                            std::to_string(im[1]) + "," + std::to_string(im[2]) + "}");
            }
        }
    }

    const auto core = cert.core.members();
    const auto& first = cert.embeddings.front();
    std::unordered_map<Vertex, std::size_t> owner;
    for (auto x : core) owner.emplace(first[x], cert.r());
    for (std::size_t i = 0; i < cert.r(); ++i) {
        const auto& phi = cert.embeddings[i];
        for (auto x : core) {
            if (phi[x] != first[x]) {
                return fail("embeddings 0 and " + std::to_string(i) + " disagree on core vertex " + std::to_string(x));
            }
        }
        for (Vertex x = 0; x < f.vertex_count(); ++x) {
            if (cert.core.contains(x)) continue;
            auto [it, fresh] = owner.emplace(phi[x], i);
            if (!fresh) {
                return fail("petal vertex " + std::to_string(x) + " of embedding " + std::to_string(i) +
                            " meets another copy at host vertex " + std::to_string(phi[x]));
            }
        }
    }
    return {};
}

std::int64_t sunflower_deficiency(const SunflowerCertificate& cert) {
    const auto d = deficiency(cert.pattern);
    const auto r = static_cast<std::int64_t>(cert.r());
    return d + (r - 1) * (d - induced_deficiency(cert.pattern, cert.core));
}

SunflowerUnion sunflower_union(const SunflowerCertificate& cert, std::size_t host_vertices,
                               std::optional<std::size_t> count) {
    const auto used = std::min(count.value_or(cert.r()), cert.r());
    SunflowerUnion out{VertexSubset(host_vertices), {}};
    for (std::size_t i = 0; i < used; ++i) {
        const auto& phi = cert.embeddings[i];
        for (auto x : phi) {
            if (x >= host_vertices) throw InputError("embedding label out of range");
            out.vertices.insert(x);
        }
        for (const auto& e : cert.pattern.edges()) out.edges.push_back(image(phi, e));
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

BuiltSunflower build_sunflower(const Hypergraph3& f, const VertexSubset& u, std::size_t r) {
    require_subset_of(f, u, "build_sunflower");
    if (r < 1) throw InputError("build_sunflower needs r >= 1");
    if (u.size() >= f.vertex_count()) throw PreconditionError("build_sunflower: core must be a proper subset");
    if (induced_deficiency(f, u) < deficiency(f)) {
        throw PreconditionError("build_sunflower: core deficiency " + std::to_string(induced_deficiency(f, u)) +
                                " is below the pattern deficiency " + std::to_string(deficiency(f)));
    }
    const auto n = f.vertex_count();
    const auto petal = n - u.size();
    SunflowerCertificate cert{f, u, {}};
    cert.embeddings.reserve(r);
    for (std::size_t c = 0; c < r; ++c) {
        Embedding phi(n);
        std::size_t rank = 0;
        for (Vertex x = 0; x < n; ++x) {
            if (c == 0 || u.contains(x)) {
                phi[x] = x;
            } else {
                phi[x] = static_cast<Vertex>(n + (c - 1) * petal + rank++);
            }
        }
        cert.embeddings.push_back(std::move(phi));
    }
    const std::size_t total = n + (r - 1) * petal;
    auto un = sunflower_union(cert, total);
    auto host = Hypergraph3::from_edges(total, std::move(un.edges));
    return {std::move(host), std::move(cert)};
}

bool verify_configuration(const Hypergraph3& host, const ConfigurationCertificate& cert) {
    if (cert.host_hash != host.content_hash()) return false;
    if (cert.vertices.universe() != host.vertex_count()) return false;
    if (static_cast<std::int64_t>(cert.vertices.size()) > cert.v) return false;
    return static_cast<std::int64_t>(induced_edge_count(host, cert.vertices)) >= cert.e;
}

CleaningResult clean_sunflower(const Hypergraph3& host, const SunflowerCertificate& cert, std::int64_t e,
                               const CleaningOptions& options) {
    if (auto report = verify_sunflower(host, cert); !report.valid) {
        throw PreconditionError("clean_sunflower: invalid sunflower: " + report.violation);
    }
    const auto& f = cert.pattern;
    const auto ef = static_cast<std::int64_t>(f.edge_count());
    const auto df = deficiency(f);
    if (e < 1 || 2 * ef > e) {
        throw PreconditionError("clean_sunflower: needs e(F) <= e/2 (e(F)=" + std::to_string(ef) +
                                ", e=" + std::to_string(e) + ")");
    }
    CleaningPlan plan;
    plan.e_u = static_cast<std::int64_t>(induced_edge_count(f, cert.core));
    plan.e_p = ef - plan.e_u;
    plan.petal_size = static_cast<std::int64_t>(f.vertex_count() - cert.core.size());
    const auto r = static_cast<std::int64_t>(cert.r());
    if (r * plan.e_p + plan.e_u < e) {
        throw PreconditionError("clean_sunflower: sunflower has " + std::to_string(r * plan.e_p + plan.e_u) +
                                " edges, fewer than e=" + std::to_string(e));
    }

    const auto profile = degree_profile(f);
    bool degree_ok = true;
    const auto high = static_cast<std::int64_t>(profile.count_with_degree_above(1));
    if (!options.relaxed_degree_conditions && 4 * high > ef) {
        throw PreconditionError("clean_sunflower: " + std::to_string(high) +
                                " pattern vertices of degree > 1 exceed e(F)/4");
    }
    degree_ok = 4 * high <= ef;
    for (const auto& edge : f.edges()) {
        int ones = 0;
        for (auto x : edge) ones += profile.degree[x] == 1;
        if (ones > 1) {
            throw PreconditionError("clean_sunflower: a pattern edge has two vertices of degree 1");
        }
    }
    if (profile.count_with_degree(0) > 0) throw PreconditionError("clean_sunflower: pattern has an isolated vertex");

    plan.p = (e - plan.e_u + plan.e_p - 1) / plan.e_p;
    const auto core_size = static_cast<std::int64_t>(cert.core.size());
    const auto vertices_p = plan.p * plan.petal_size + core_size;
    if (vertices_p > e + df + plan.petal_size) {
        throw InternalError("clean_sunflower: p|P| + |U| = " + std::to_string(vertices_p) + " exceeds e + Δ(F) + |P|");
    }

    // v_U: core vertices of degree 1 whose edge avoids the petal; v_P: petal
    // vertices of degree 1.
    std::int64_t v_u = 0;
    std::int64_t v_p = 0;
    for (Vertex x = 0; x < f.vertex_count(); ++x) {
        if (profile.degree[x] != 1) continue;
        if (!cert.core.contains(x)) {
            ++v_p;
            continue;
        }
        const auto& edge = f.edge(f.incident_edges(x).front());
        if (cert.core.contains(edge[0]) && cert.core.contains(edge[1]) && cert.core.contains(edge[2])) ++v_u;
    }
    plan.degree_one_supply = v_u + plan.p * v_p;
    plan.vertex_removals = std::max<std::int64_t>(0, vertices_p - (e + df));
    if (degree_ok && plan.p >= 3 && plan.vertex_removals > 0 && plan.degree_one_supply < plan.petal_size) {
        throw InternalError("clean_sunflower: only " + std::to_string(plan.degree_one_supply) +
                            " degree-1 vertices for a petal of size " + std::to_string(plan.petal_size));
    }

    auto un = sunflower_union(cert, host.vertex_count(), static_cast<std::size_t>(plan.p));
    const auto trimmed = trim_edge_list(un.vertices, un.edges, static_cast<std::size_t>(e), options.debug_recount);
    if (trimmed.edges_left != static_cast<std::size_t>(e)) {
        throw InternalError("clean_sunflower: ran out of degree-1 vertices with " +
                            std::to_string(trimmed.edges_left) + " edges left, target " + std::to_string(e));
    }
    plan.removals = trimmed.removed;

    ConfigurationCertificate out;
    out.host_hash = host.content_hash();
    out.vertices = trimmed.vertices;
    out.v = e + df;
    out.e = e;

    // Independent recount of the result.
    std::int64_t own = 0;
    for (const auto& edge : un.edges) {
        own += out.vertices.contains(edge[0]) && out.vertices.contains(edge[1]) && out.vertices.contains(edge[2]);
    }
    const auto size = static_cast<std::int64_t>(out.vertices.size());
    if (own != e || size > out.v || size - own != un.deficiency() ||
        static_cast<std::int64_t>(induced_edge_count(host, out.vertices)) < e) {
        throw InternalError("clean_sunflower: result failed its recount");
    }
    return {std::move(out), std::move(plan)};
}

ConfigurationCertificate trim_to_edges(const VertexSubset& host_subset, const Hypergraph3& host, std::int64_t e) {
    require_subset_of(host, host_subset, "trim_to_edges");
    if (e < 0) throw InputError("trim_to_edges: negative edge target");
    std::vector<Edge> edges;
    for (auto x : host_subset.members()) {
        for (auto id : host.incident_edges(x)) {
            const auto& edge = host.edge(id);
            if (edge[0] == x && host_subset.contains(edge[1]) && host_subset.contains(edge[2])) edges.push_back(edge);
        }
    }
    if (static_cast<std::int64_t>(edges.size()) < e) {
        throw PreconditionError("trim_to_edges: subset spans " + std::to_string(edges.size()) +
                                " edges, fewer than " + std::to_string(e));
    }
    const auto trimmed = trim_edge_list(host_subset, edges, static_cast<std::size_t>(e), false);
    if (trimmed.edges_left != static_cast<std::size_t>(e)) {
        throw PreconditionError("trim_to_edges: no degree-1 vertex left with " + std::to_string(trimmed.edges_left) +
                                " edges; " + std::to_string(trimmed.edges_left - static_cast<std::size_t>(e)) +
                                " more removals needed");
    }
    ConfigurationCertificate out;
    out.host_hash = host.content_hash();
    out.vertices = trimmed.vertices;
    out.v = static_cast<std::int64_t>(out.vertices.size());
    out.e = e;
    return out;
}

}  // namespace bes
