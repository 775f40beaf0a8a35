#include "bes/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "bes/error.hpp"

namespace bes {

namespace {

using Json = nlohmann::ordered_json;

struct Line {
    std::string_view text;
    std::size_t number = 0;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t pos = 0;
    std::size_t number = 1;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        out.push_back({text.substr(pos, end - pos), number++});
        pos = end + 1;
    }
    return out;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
    if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto end = s.find(sep, pos);
        if (end == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, end - pos));
        pos = end + 1;
    }
}

struct Block {
    Hypergraph3 hypergraph;
    std::size_t next = 0;  // index of the first unread line
};

Block parse_block(const std::vector<Line>& lines) {
    std::size_t i = 0;
    while (i < lines.size() && !lines[i].text.empty() && lines[i].text[0] == '#') ++i;
    if (i == lines.size()) throw ParseError(ParseErrorCode::malformed_header, i + 1, "missing header");

    const auto& head = lines[i];
    auto fields = split(head.text, ' ');
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    if (fields.size() != 3 || fields[0] != "h3" || !parse_u64(fields[1], n) || !parse_u64(fields[2], m)) {
        throw ParseError(ParseErrorCode::malformed_header, head.number,
                         "expected \"h3 <n> <m>\", got \"" + std::string(head.text) + "\"");
    }
    if (n > (std::uint64_t{1} << 31)) {
        throw ParseError(ParseErrorCode::malformed_header, head.number, "vertex count too large");
    }
    ++i;

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, lines.size())));
    for (std::uint64_t k = 0; k < m; ++k, ++i) {
        if (i == lines.size()) {
            throw ParseError(ParseErrorCode::edge_count_mismatch, lines.empty() ? 1 : lines.back().number + 1,
                             "header promises " + std::to_string(m) + " edges, found " + std::to_string(k));
        }
        const auto& line = lines[i];
        auto parts = split(line.text, ' ');
        std::uint64_t v[3] = {0, 0, 0};
        if (parts.size() != 3 || !parse_u64(parts[0], v[0]) || !parse_u64(parts[1], v[1]) ||
            !parse_u64(parts[2], v[2])) {
            throw ParseError(ParseErrorCode::bad_triple, line.number,
                             "expected \"a b c\", got \"" + std::string(line.text) + "\"");
        }
        if (!(v[0] < v[1] && v[1] < v[2])) {
            throw ParseError(ParseErrorCode::unsorted_triple, line.number, "need a < b < c");
        }
        if (v[2] >= n) {
            throw ParseError(ParseErrorCode::out_of_range, line.number,
                             "label " + std::to_string(v[2]) + " >= " + std::to_string(n));
        }
        Edge e{static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]), static_cast<Vertex>(v[2])};
        if (!edges.empty()) {
            if (e == edges.back()) throw ParseError(ParseErrorCode::duplicate_edge, line.number, "repeats the previous edge");
            if (e < edges.back()) throw ParseError(ParseErrorCode::unsorted_edges, line.number, "edges out of order");
        }
        edges.push_back(e);
    }
    return {Hypergraph3::from_edges(static_cast<std::size_t>(n), std::move(edges)), i};
}

void reject_trailing(const std::vector<Line>& lines, std::size_t from) {
    if (from < lines.size()) {
        throw ParseError(ParseErrorCode::trailing_content, lines[from].number,
                         "unexpected \"" + std::string(lines[from].text) + "\"");
    }
}

std::string join(const std::vector<Vertex>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

template <class T>
T field(const Json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("certificate is missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(std::string("certificate field \"") + key + "\" has the wrong type");
    }
}

}  // namespace

std::string serialize_hypergraph(const Hypergraph3& h) {
    std::string out = "h3 " + std::to_string(h.vertex_count()) + " " + std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges()) {
        out += std::to_string(e[0]);
        out += ' ';
        out += std::to_string(e[1]);
        out += ' ';
        out += std::to_string(e[2]);
        out += '\n';
    }
    return out;
}

Hypergraph3 parse_hypergraph(std::string_view text) {
    auto lines = split_lines(text);
    auto block = parse_block(lines);
    reject_trailing(lines, block.next);
    return std::move(block.hypergraph);
}

std::string serialize_witness(const EligibilityWitness& w) {
    return "witness A=" + join(w.a.members()) + " B=" + join(w.b.members()) + " u=" + std::to_string(w.u) +
           " v=" + std::to_string(w.v) + " k=" + std::to_string(w.k) + "\n";
}

EligibilityWitness parse_witness(std::string_view line, std::size_t universe, std::size_t line_number) {
    auto bad = [&](const std::string& why) { return ParseError(ParseErrorCode::bad_witness, line_number, why); };
    auto parts = split(line, ' ');
    static constexpr std::string_view keys[] = {"A=", "B=", "u=", "v=", "k="};
    if (parts.size() != 6 || parts[0] != "witness") throw bad("expected \"witness A=.. B=.. u=.. v=.. k=..\"");
    for (std::size_t i = 0; i < 5; ++i) {
        if (!parts[i + 1].starts_with(keys[i])) throw bad("expected field " + std::string(keys[i]));
        parts[i + 1].remove_prefix(2);
    }
    auto label = [&](std::string_view s) {
        std::uint64_t x = 0;
        if (!parse_u64(s, x)) throw bad("bad label \"" + std::string(s) + "\"");
        if (x >= universe) throw bad("label " + std::to_string(x) + " out of range");
        return static_cast<Vertex>(x);
    };
    auto set = [&](std::string_view s) {
        std::vector<Vertex> xs;
        if (!s.empty()) {
            for (auto p : split(s, ',')) xs.push_back(label(p));
        }
        try {
            return VertexSubset::from_members(universe, xs);
        } catch (const InputError& e) {
            throw bad(e.what());
        }
    };
    EligibilityWitness w;
    w.a = set(parts[1]);
    w.b = set(parts[2]);
    w.u = label(parts[3]);
    w.v = label(parts[4]);
    auto k = parts[5];
    bool negative = !k.empty() && k[0] == '-';
    if (negative) k.remove_prefix(1);
    std::uint64_t magnitude = 0;
    if (!parse_u64(k, magnitude) || magnitude > (std::uint64_t{1} << 62)) throw bad("bad k");
    w.k = negative ? -static_cast<std::int64_t>(magnitude) : static_cast<std::int64_t>(magnitude);
    return w;
}

HypergraphFile parse_hypergraph_file(std::string_view text) {
    auto lines = split_lines(text);
    auto block = parse_block(lines);
    HypergraphFile out{std::move(block.hypergraph), std::nullopt};
    auto next = block.next;
    if (next < lines.size() && lines[next].text.starts_with("witness")) {
        out.witness = parse_witness(lines[next].text, out.hypergraph.vertex_count(), lines[next].number);
        ++next;
    }
    reject_trailing(lines, next);
    return out;
}

std::string serialize_hypergraph_file(const Hypergraph3& h, const std::optional<EligibilityWitness>& w) {
    auto out = serialize_hypergraph(h);
    if (w) out += serialize_witness(*w);
    return out;
}

std::string provenance_json(const GluedHypergraph& g) {
    Json steps = Json::array();
    for (const auto& step : g.provenance) {
        Json s;
        s["copies"] = step->copies;
        s["copy_maps"] = step->copy_maps;
        steps.push_back(std::move(s));
    }
    Json out;
    out["n"] = g.hypergraph.vertex_count();
    out["m"] = g.hypergraph.edge_count();
    out["steps"] = std::move(steps);
    return out.dump() + "\n";
}

std::string format_hash(std::uint64_t hash) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, hash >>= 4) out[static_cast<std::size_t>(i)] = digits[hash & 15];
    return out;
}

std::string sunflower_certificate_json(const SunflowerCertificate& cert, const std::string& host_name,
                                       std::uint64_t host_hash) {
    Json out;
    out["type"] = "sunflower";
    out["host"] = host_name;
    out["host_hash"] = format_hash(host_hash);
    Json edges = Json::array();
    for (const auto& e : cert.pattern.edges()) edges.push_back({e[0], e[1], e[2]});
    out["pattern"] = {{"n", cert.pattern.vertex_count()}, {"edges", std::move(edges)}};
    out["core"] = cert.core.members();
    out["embeddings"] = cert.embeddings;
    return out.dump() + "\n";
}

std::string configuration_certificate_json(const ConfigurationCertificate& cert, const std::string& host_name) {
    Json out;
    out["type"] = "configuration";
    out["host"] = host_name;
    out["host_hash"] = format_hash(cert.host_hash);
    out["vertices"] = cert.vertices.members();
    out["v"] = cert.v;
    out["e"] = cert.e;
    return out.dump() + "\n";
}

CertificateFile parse_certificate_json(std::string_view text, std::size_t host_vertices) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("certificate must be a JSON object");

    CertificateFile out;
    auto type = field<std::string>(j, "type");
    out.host = field<std::string>(j, "host");
    auto hash = field<std::string>(j, "host_hash");
    auto [p, ec] = std::from_chars(hash.data(), hash.data() + hash.size(), out.host_hash, 16);
    if (hash.size() != 16 || ec != std::errc{} || p != hash.data() + hash.size()) {
        throw InputError("host_hash must be 16 hex digits");
    }

    if (type == "configuration") {
        out.kind = CertificateFile::Kind::configuration;
        ConfigurationCertificate c;
        c.host_hash = out.host_hash;
        auto members = field<std::vector<Vertex>>(j, "vertices");
        c.vertices = VertexSubset::from_members(host_vertices, members);
        c.v = field<std::int64_t>(j, "v");
        c.e = field<std::int64_t>(j, "e");
        out.configuration = std::move(c);
    } else if (type == "sunflower") {
        out.kind = CertificateFile::Kind::sunflower;
        auto pattern = field<Json>(j, "pattern");
        auto n = field<std::size_t>(pattern, "n");
        auto raw = field<std::vector<std::vector<Vertex>>>(pattern, "edges");
        std::vector<Edge> edges;
        for (const auto& e : raw) {
            if (e.size() != 3) throw InputError("pattern edges must be triples");
            edges.push_back({e[0], e[1], e[2]});
        }
        SunflowerCertificate s;
        s.pattern = Hypergraph3::from_edges(n, std::move(edges));
        auto core = field<std::vector<Vertex>>(j, "core");
        s.core = VertexSubset::from_members(n, core);
        s.embeddings = field<std::vector<Embedding>>(j, "embeddings");
        out.sunflower = std::move(s);
    } else {
        throw InputError("unknown certificate type \"" + type + "\"");
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace bes
