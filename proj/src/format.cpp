#include "bpoly/format.hpp"

#include "bpoly/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bpoly {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> logical_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        auto hash = cur.find('#');
        if (hash != std::string::npos) cur.erase(hash);
        cur = trim(cur);
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (c == '\n' || c == ';')
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return out;
}

std::vector<std::string> tokens(std::string line) {
    for (const char* op : {"->", "--"}) {
        std::size_t at = 0;
        while ((at = line.find(op, at)) != std::string::npos) {
            line.replace(at, 2, std::string(" ") + op + " ");
            at += 4;
        }
    }
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& s, const std::string& line) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        s.size() > 9)
        throw ParseError("expected a nonnegative integer in '" + line + "'");
    return std::stoi(s);
}

struct Parsed {
    std::string kind;  // digraph | mixed | graph
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<int> partner;
    bool has_mixed_lines = false;
};

Parsed parse_text(const std::string& text) {
    auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError("empty input");
    auto head = tokens(lines[0]);
    if (head.size() != 2 || (head[0] != "digraph" && head[0] != "mixed" && head[0] != "graph"))
        throw ParseError("first line must be 'digraph n', 'mixed n' or 'graph n', got '" + lines[0] + "'");
    Parsed p;
    p.kind = head[0];
    p.n = parse_int(head[1], lines[0]);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto t = tokens(lines[i]);
        std::string op;
        int u, v;
        if (t.size() == 2) {
            u = parse_int(t[0], lines[i]);
            v = parse_int(t[1], lines[i]);
        } else if (t.size() == 3 && (t[1] == "->" || t[1] == "--")) {
            op = t[1];
            u = parse_int(t[0], lines[i]);
            v = parse_int(t[2], lines[i]);
        } else {
            throw ParseError("cannot parse line '" + lines[i] + "'");
        }
        if (u < 1 || u > p.n || v < 1 || v > p.n) throw ParseError("vertex out of range in '" + lines[i] + "'");
        if (op == "--" && p.kind != "graph") {
            p.has_mixed_lines = true;
            int base = static_cast<int>(p.arcs.size());
            p.arcs.push_back({u, v});
            p.arcs.push_back({v, u});
            p.partner.push_back(base + 1);
            p.partner.push_back(base);
        } else {
            if (op == "->") {
                if (p.kind == "graph") throw ParseError("oriented edge in a graph: '" + lines[i] + "'");
                p.has_mixed_lines = true;
            }
            p.arcs.push_back({u, v});
            p.partner.push_back(-1);
        }
    }
    return p;
}

Input parse_json_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        int n = j.at("n").get<int>();
        if (n < 0) throw ParseError("negative vertex count");
        if (j.contains("edges")) {
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            return Graph(n, std::move(edges));
        }
        std::vector<Arc> arcs;
        for (const auto& a : j.at("arcs")) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
        Digraph d(n, std::move(arcs));
        if (!j.contains("pairs")) return d;
        std::vector<int> partner(d.num_arcs(), -1);
        for (const auto& pr : j.at("pairs")) {
            int a = pr.at(0).get<int>(), b = pr.at(1).get<int>();
            if (a < 0 || b < 0 || a >= d.num_arcs() || b >= d.num_arcs()) throw ParseError("pair index out of range");
            partner[a] = b;
            partner[b] = a;
        }
        return MixedGraph(std::move(d), std::move(partner));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed digraph JSON: ") + e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

}  // namespace

Input parse_input(const std::string& text) {
    if (looks_like_json(text)) return parse_json_input(text);
    Parsed p = parse_text(text);
    if (p.kind == "graph") {
        std::vector<std::pair<int, int>> edges;
        for (const auto& a : p.arcs) edges.emplace_back(a.tail, a.head);
        return Graph(p.n, std::move(edges));
    }
    Digraph d(p.n, std::move(p.arcs));
    if (p.kind == "mixed" || p.has_mixed_lines) return MixedGraph(std::move(d), std::move(p.partner));
    return d;
}

Digraph parse_digraph(const std::string& text) {
    Input in = parse_input(text);
    if (auto* d = std::get_if<Digraph>(&in)) return *d;
    if (auto* m = std::get_if<MixedGraph>(&in)) {
        if (m->num_edges() == m->num_arcs()) return m->digraph();
    }
    throw ParseError("input is not a plain digraph");
}

MixedGraph parse_mixed(const std::string& text) {
    Input in = parse_input(text);
    if (auto* m = std::get_if<MixedGraph>(&in)) return *m;
    if (auto* d = std::get_if<Digraph>(&in)) return MixedGraph::oriented(*d);
    return MixedGraph::from_graph(std::get<Graph>(in));
}

Graph parse_graph(const std::string& text) {
    Input in = parse_input(text);
    if (auto* g = std::get_if<Graph>(&in)) return *g;
    throw ParseError("input is not a graph (expected a 'graph n' header)");
}

namespace {

std::vector<std::string> digraph_lines(const Digraph& d) {
    std::vector<std::string> out{"digraph " + std::to_string(d.num_vertices())};
    for (const auto& a : d.arcs()) out.push_back(std::to_string(a.tail) + " " + std::to_string(a.head));
    return out;
}

std::vector<std::string> mixed_lines(const MixedGraph& m) {
    MixedGraph nm = m.normalized();
    std::vector<std::string> out{"mixed " + std::to_string(nm.num_vertices())};
    for (const auto& b : nm.blocks()) {
        const Arc& a = nm.digraph().arc(b[0]);
        out.push_back(std::to_string(a.tail) + (b.size() == 2 ? " -- " : " -> ") + std::to_string(a.head));
    }
    return out;
}

std::vector<std::string> graph_lines(const Graph& g) {
    std::vector<std::string> out{"graph " + std::to_string(g.num_vertices())};
    for (auto [u, v] : g.edges()) out.push_back(std::to_string(u) + " " + std::to_string(v));
    return out;
}

std::string join(const std::vector<std::string>& lines, const std::string& sep, bool trailing) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out += lines[i];
        if (trailing || i + 1 < lines.size()) out += sep;
    }
    return out;
}

}  // namespace

std::string render(const Digraph& d) { return join(digraph_lines(d), "\n", true); }
std::string render(const MixedGraph& m) { return join(mixed_lines(m), "\n", true); }
std::string render(const Graph& g) { return join(graph_lines(g), "\n", true); }
std::string render_inline(const Digraph& d) { return join(digraph_lines(d), "; ", false); }
std::string render_inline(const MixedGraph& m) { return join(mixed_lines(m), "; ", false); }
std::string render_inline(const Graph& g) { return join(graph_lines(g), "; ", false); }

json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"c", rational_to_string(c)}, {"e", e}});
    return {{"vars", p.vars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j) {
    try {
        auto names = j.at("vars").get<std::vector<std::string>>();
        MultiPoly out(names);
        if (out.vars().size() != names.size()) throw ParseError("duplicate variable names");
        std::vector<int> pos;
        for (const auto& v : names) pos.push_back(out.var_index(v));
        for (const auto& t : j.at("terms")) {
            auto e = t.at("e").get<std::vector<int>>();
            if (e.size() != names.size()) throw ParseError("exponent vector length differs from variable count");
            Exponents f(names.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0) throw ParseError("negative exponent");
                f[pos[i]] = e[i];
            }
            out.add_term(f, parse_rational(t.at("c").get<std::string>()));
        }
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

json to_json(const Digraph& d) {
    json arcs = json::array();
    for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head});
    return {{"n", d.num_vertices()}, {"arcs", arcs}};
}

json to_json(const RotationSystem& r) {
    json rot = json::array();
    for (const auto& ends : r.rotation()) {
        json row = json::array();
        for (const auto& e : ends) row.push_back({e.arc, e.end == End::Tail ? "tail" : "head"});
        rot.push_back(row);
    }
    return {{"rotation", rot}};
}

RotationSystem rotation_from_json(const json& j) {
    try {
        const json& rot = j.is_object() ? j.at("rotation") : j;
        std::vector<std::vector<ArcEnd>> out;
        for (const auto& row : rot) {
            std::vector<ArcEnd> ends;
            for (const auto& e : row) {
                auto side = e.at(1).get<std::string>();
                if (side != "tail" && side != "head") throw ParseError("arc end must be 'tail' or 'head'");
                ends.push_back({e.at(0).get<int>(), side == "tail" ? End::Tail : End::Head});
            }
            out.push_back(std::move(ends));
        }
        return RotationSystem(std::move(out));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed rotation JSON: ") + e.what());
    }
}

std::string render_inline(const RotationSystem& r) {
    std::string out;
    for (int v = 1; v <= r.num_vertices(); ++v) {
        if (v > 1) out += " | ";
        out += std::to_string(v) + ":";
        for (const auto& e : r.ends_at(v)) out += " " + std::to_string(e.arc) + (e.end == End::Tail ? "t" : "h");
    }
    return out;
}

}  // namespace bpoly
