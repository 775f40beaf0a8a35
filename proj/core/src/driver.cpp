#include "bes/driver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <variant>

#include "bes/constructors.hpp"
#include "bes/embedding.hpp"
#include "bes/error.hpp"
#include "bes/iteration.hpp"
#include "bes/rng.hpp"
#include "bes/seeding.hpp"

namespace bes {

std::int64_t bes_deficiency_bound(std::int64_t e) {
    if (e < 1) throw InputError("bes_deficiency_bound needs e >= 1");
    return static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(e))) - 1 + 38;
}

namespace {

constexpr std::uint32_t kUnassigned = static_cast<std::uint32_t>(-1);

std::string count_text(const char* what, std::size_t n) { return std::string(what) + "=" + std::to_string(n); }

void append_unique(std::vector<Embedding>& into, std::set<Embedding>& seen, std::vector<Embedding> more) {
    for (auto& phi : more) {
        if (seen.insert(phi).second) into.push_back(std::move(phi));
    }
}

class Driver {
public:
    Driver(const Hypergraph3& host, std::int64_t e, const DriverConfig& cfg, DriverResult& out)
        : host_(host), e_(e), cfg_(cfg), out_(out) {}

    void run() {
        StageTimer timer(out_.trace, "linearize", cfg_.seed);
        timer.param("e", e_).param("edges", static_cast<std::int64_t>(host_.edge_count()));
        auto lin = reduce_to_linear(host_, e_);
        if (lin.heavy_pair) {
            timer.finish("heavy pair");
            accept(std::move(*lin.heavy_pair), "heavy-pair");
            return;
        }
        linear_ = std::move(lin.linear);
        timer.finish(count_text("kept", linear_.edge_count()));
        const bool tower = cfg_.seed_s || cfg_.seed_t || e_ >= cfg_.direct_threshold;
        if (tower) {
            tower_path();
        } else {
            direct_path();
        }
    }

private:
    void accept(ConfigurationCertificate cert, const char* route) {
        const auto induced = static_cast<std::int64_t>(induced_edge_count(host_, cert.vertices));
        const auto size = static_cast<std::int64_t>(cert.vertices.size());
        if (cert.host_hash != host_.content_hash() || induced < e_ || size - induced > bes_deficiency_bound(e_) ||
            !verify_configuration(host_, cert)) {
            throw InternalError("find_bes: certificate failed its recount (" + std::to_string(size) +
                                " vertices, " + std::to_string(induced) + " induced edges)");
        }
        out_.certificate = std::move(cert);
        out_.route = route;
    }

    void exhaust(const char* stage, const std::string& why) {
        out_.route = stage;
        StageTimer(out_.trace, "result", cfg_.seed).param("stage", std::string(stage)).finish("none: " + why);
    }

    std::vector<Embedding> seed_copies(std::uint32_t s, std::uint32_t t, const Hypergraph3& pattern,
                                       std::size_t limit) {
        std::vector<Embedding> out;
        std::set<Embedding> seen;
        {
            StageTimer timer(out_.trace, "seed-rainbow", cfg_.seed);
            timer.param("s", std::int64_t{s}).param("t", std::int64_t{t});
            if (linear_.vertex_count() < 12) {
                timer.finish("skipped: fewer than 12 vertices");
            } else {
                try {
                    auto tri = tripartition(linear_, cfg_.tripartition_trials, cfg_.seed);
                    auto g = colored_link_graph(tri.crossing, tri.x, tri.y, tri.z);
                    std::vector<Embedding> lifted;
                    for (const auto& copy : find_rainbow_kst(g, s, t, std::min(limit, cfg_.rainbow_limit))) {
                        lifted.push_back(lift_rainbow(copy, g, linear_));
                    }
                    append_unique(out, seen, std::move(lifted));
                    timer.param("crossing", static_cast<std::int64_t>(tri.crossing.edge_count()));
                    timer.finish(count_text("copies", out.size()));
                } catch (const PreconditionError& err) {
                    timer.finish(std::string("skipped: ") + err.what());
                }
            }
        }
        if (out.size() >= limit) return out;
        StageTimer timer(out_.trace, "seed-enumerate", cfg_.seed);
        timer.param("limit", static_cast<std::int64_t>(limit));
        auto list = enumerate_embeddings(linear_, pattern, nullptr, limit, cfg_.threads, per_root(limit));
        append_unique(out, seen, std::move(list.embeddings));
        timer.finish(count_text("copies", out.size()) + (list.truncated ? " truncated" : ""));
        return out;
    }

    // Share of `limit` per root vertex, so a capped enumeration reaches every
    // root.
    std::size_t per_root(std::size_t limit) const {
        const auto n = std::max<std::size_t>(linear_.vertex_count(), 1);
        return std::max<std::size_t>(1, std::min(cfg_.per_root_limit, limit / n));
    }

    void direct_path() {
        std::uint32_t c = 1;
        while (static_cast<std::int64_t>(c) * c < e_) ++c;
        const auto pattern = kst_plus_hypergraph(c, c);
        auto copies = seed_copies(c, c, pattern, 1);
        if (copies.empty()) {
            exhaust("direct", "no K_{" + std::to_string(c) + "," + std::to_string(c) + "}^+ copies");
            return;
        }
        if (!trim_and_accept(copies.front(), "direct")) exhaust("trim", fail_reason_);
    }

    bool trim_and_accept(const Embedding& phi, const char* route) {
        StageTimer timer(out_.trace, "trim", cfg_.seed);
        VertexSubset w(host_.vertex_count());
        for (auto x : phi) w.insert(x);
        timer.param("vertices", static_cast<std::int64_t>(w.size()));
        try {
            auto cert = trim_to_edges(w, host_, e_);
            timer.finish(count_text("kept", cert.vertices.size()));
            accept(std::move(cert), route);
            return true;
        } catch (const PreconditionError& err) {
            timer.finish(std::string("failed: ") + err.what());
            fail("trim", err.what());
            return false;
        }
    }

    // Candidate schemes, best first. Copies are grouped by their A-image
    // tuple; each candidate hands out roles group by group (in a different
    // group order per candidate), skipping copies that clash with roles
    // already given. Leftover vertices get random classes.
    std::vector<PartitionScheme> candidate_schemes(const GluedHypergraph& pattern,
                                                   const std::vector<Embedding>& copies, std::size_t level) {
        const auto n = linear_.vertex_count();
        const auto classes = static_cast<std::uint32_t>(pattern.hypergraph.vertex_count());
        const auto a = pattern.witness->a.members();

        std::map<std::vector<Vertex>, std::vector<std::size_t>> by_key;
        for (std::size_t i = 0; i < copies.size(); ++i) {
            std::vector<Vertex> key;
            for (auto x : a) key.push_back(copies[i][x]);
            by_key[std::move(key)].push_back(i);
        }
        struct Group {
            std::size_t images;
            const std::vector<std::size_t>* members;
        };
        std::vector<Group> shared;
        std::vector<Group> single;
        for (const auto& [key, members] : by_key) {
            std::set<std::vector<Vertex>> images;
            for (auto i : members) images.insert(image_set(copies[i]));
            (images.size() >= 2 ? shared : single).push_back({images.size(), &members});
        }
        std::stable_sort(shared.begin(), shared.end(),
                         [](const Group& l, const Group& r) { return l.images > r.images; });

        std::vector<PartitionScheme> out;
        std::set<std::vector<std::uint32_t>> seen;
        StageTimer timer(out_.trace, "scheme", cfg_.seed);
        timer.param("level", static_cast<std::int64_t>(level))
            .param("copies", static_cast<std::int64_t>(copies.size()))
            .param("shared_groups", static_cast<std::int64_t>(shared.size()));
        for (std::size_t trial = 0; trial < cfg_.trial_count && out.size() < cfg_.scheme_attempts; ++trial) {
            const auto seed = derive_seed(cfg_.seed, (level << 20) + trial);
            Rng rng(seed);
            auto order = shared;
            if (trial == 1) {
                std::reverse(order.begin(), order.end());
            } else if (trial > 1) {
                rng.shuffle(order);
            }
            order.insert(order.end(), single.begin(), single.end());

            PartitionScheme scheme;
            scheme.classes = classes;
            scheme.seed = seed;
            scheme.klass.assign(n, kUnassigned);
            for (const auto& group : order) {
                for (auto i : *group.members) {
                    const auto& phi = copies[i];
                    bool fits = true;
                    for (std::uint32_t x = 0; x < phi.size() && fits; ++x) {
                        fits = scheme.klass[phi[x]] == kUnassigned || scheme.klass[phi[x]] == x;
                    }
                    if (!fits) continue;
                    for (std::uint32_t x = 0; x < phi.size(); ++x) scheme.klass[phi[x]] = x;
                }
            }
            if (!seen.insert(scheme.klass).second) continue;
            for (auto& k : scheme.klass) {
                if (k == kUnassigned) k = static_cast<std::uint32_t>(rng.below(classes));
            }
            out.push_back(std::move(scheme));
        }
        timer.finish(count_text("candidates", out.size()));
        return out;
    }

    void tower_path() {
        const std::uint32_t s = cfg_.seed_s.value_or(cfg_.seed_t.value_or(16));
        const std::uint32_t t = cfg_.seed_t.value_or(s);
        TowerConfig tower{s, t, static_cast<std::uint64_t>(e_)};
        if (s > t) throw InputError("find_bes needs seed_s <= seed_t");
        ell_ = tower.ell();
        if (tower.k0() + ell_ + 3 > bes_deficiency_bound(e_)) {
            throw InputError("seed K_{" + std::to_string(s) + "," + std::to_string(t) +
                             "}^+ cannot meet the deficiency bound for e = " + std::to_string(e_));
        }
        r_ = cfg_.r.value_or(static_cast<std::size_t>(e_));
        GluedHypergraph pattern = build_kst_plus(s, t);
        auto copies = seed_copies(s, t, pattern.hypergraph, cfg_.embedding_limit);
        if (copies.empty()) {
            exhaust("seed", "no F0 copies");
            return;
        }
        for (std::uint32_t level = 0;; ++level) {
            auto next = run_level(level, pattern, copies);
            if (out_.certificate) return;
            if (level == ell_ || next.embeddings.empty()) break;
            pattern = std::move(next.glued);
            copies = std::move(next.embeddings);
        }
        exhaust(fail_stage_.c_str(), fail_reason_);
    }

    void fail(const char* stage, std::string why) {
        fail_stage_ = stage;
        fail_reason_ = std::move(why);
    }

    // Runs the iteration under each candidate scheme. Stops at the first
    // accepted certificate; otherwise returns the glued copies of every
    // scheme, which seed the next level.
    GluedCopies run_level(std::uint32_t level, const GluedHypergraph& pattern, const std::vector<Embedding>& copies) {
        const std::uint32_t m = level < ell_ ? 2 : 4;
        const auto schemes = candidate_schemes(pattern, copies, level);
        GluedCopies next;
        std::set<Embedding> next_seen;
        for (std::size_t attempt = 0; attempt < schemes.size(); ++attempt) {
            const auto& scheme = schemes[attempt];
            std::vector<Embedding> proper;
            std::set<Embedding> seen;
            {
                std::vector<Embedding> kept;
                for (const auto& phi : copies) {
                    if (is_proper(phi, scheme)) kept.push_back(phi);
                }
                append_unique(proper, seen, std::move(kept));
                StageTimer timer(out_.trace, "proper-enumerate", scheme.seed);
                timer.param("level", std::int64_t{level}).param("attempt", static_cast<std::int64_t>(attempt));
                auto list = enumerate_embeddings(linear_, pattern.hypergraph, &scheme, cfg_.embedding_limit,
                                                 cfg_.threads, per_root(cfg_.embedding_limit));
                append_unique(proper, seen, std::move(list.embeddings));
                timer.finish(count_text("copies", proper.size()) + (list.truncated ? " truncated" : ""));
            }

            SearchConfig sc;
            sc.r = r_;
            sc.m = m;
            sc.copy_limit = cfg_.copy_limit;
            sc.trial_count = cfg_.trial_count;
            sc.seed = derive_seed(cfg_.seed, (std::uint64_t{level} << 20) + attempt);
            sc.threads = cfg_.threads;
            StageTimer timer(out_.trace, "iteration", sc.seed);
            timer.param("level", std::int64_t{level})
                .param("attempt", static_cast<std::int64_t>(attempt))
                .param("m", std::int64_t{m})
                .param("r", static_cast<std::int64_t>(r_))
                .param("copies", static_cast<std::int64_t>(proper.size()));
            auto result = iteration_step(linear_, proper, pattern, sc);

            if (auto* sun = std::get_if<SunflowerCertificate>(&result)) {
                timer.finish("sunflower r=" + std::to_string(sun->r()));
                StageTimer clean(out_.trace, "clean", cfg_.seed);
                clean.param("level", std::int64_t{level});
                try {
                    CleaningOptions options;
                    options.relaxed_degree_conditions = cfg_.relaxed_degree_conditions;
                    auto cleaned = clean_sunflower(host_, *sun, e_, options);
                    clean.param("petals", cleaned.plan.p);
                    clean.finish(count_text("vertices", cleaned.certificate.vertices.size()));
                    accept(std::move(cleaned.certificate), "sunflower");
                    return next;
                } catch (const PreconditionError& err) {
                    clean.finish(std::string("failed: ") + err.what());
                    fail("clean", err.what());
                    continue;
                }
            }
            if (auto* glued = std::get_if<GluedCopies>(&result)) {
                timer.finish(count_text("glued", glued->embeddings.size()));
                if (level == ell_) {
                    if (trim_and_accept(glued->embeddings.front(), "glue")) return next;
                    continue;
                }
                if (next.embeddings.empty()) next.glued = std::move(glued->glued);
                append_unique(next.embeddings, next_seen, std::move(glued->embeddings));
                continue;
            }
            const auto& ex = std::get<IterationExhausted>(result);
            std::string histogram;
            for (const auto& [size, count] : ex.bucket_histogram) {
                histogram += (histogram.empty() ? "" : ",") + std::to_string(size) + ":" + std::to_string(count);
            }
            timer.param("buckets", histogram).param("max_degree", static_cast<std::int64_t>(ex.max_degree));
            timer.finish("exhausted: " + ex.reason);
            fail("iteration", ex.reason);
        }
        return next;
    }

    const Hypergraph3& host_;
    std::int64_t e_;
    const DriverConfig& cfg_;
    DriverResult& out_;
    Hypergraph3 linear_;
    std::uint32_t ell_ = 0;
    std::size_t r_ = 0;
    std::string fail_stage_ = "iteration";
    std::string fail_reason_ = "no candidate schemes";
};

}  // namespace

DriverResult find_bes(const Hypergraph3& h, std::int64_t e, const DriverConfig& cfg) {
    if (e < 3) throw InputError("find_bes needs e >= 3");
    DriverResult out;
    Driver(h, e, cfg, out).run();
    return out;
}

}  // namespace bes
