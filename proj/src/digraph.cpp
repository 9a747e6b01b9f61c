#include "pathhom/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pathhom {

int Digraph::add_vertex(const std::string& label) {
    if (label.empty()) throw ParseError("empty vertex label");
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(labels_.size());
    labels_.push_back(label);
    index_.emplace(label, id);
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

int Digraph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

bool Digraph::add_arc(int u, int v) {
    if (u == v) throw SelfLoopError(label(u));
    auto& outs = out_[static_cast<size_t>(u)];
    auto pos = std::lower_bound(outs.begin(), outs.end(), v);
    if (pos != outs.end() && *pos == v) return false;
    outs.insert(pos, v);
    auto& ins = in_[static_cast<size_t>(v)];
    ins.insert(std::lower_bound(ins.begin(), ins.end(), u), u);
    arc_order_.emplace_back(u, v);
    ++num_arcs_;
    return true;
}

bool Digraph::add_arc(const std::string& u, const std::string& v) {
    int ui = add_vertex(u);
    int vi = add_vertex(v);
    return add_arc(ui, vi);
}

bool Digraph::has_arc(int u, int v) const {
    const auto& outs = out_[static_cast<size_t>(u)];
    return std::binary_search(outs.begin(), outs.end(), v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<size_t>(num_arcs_));
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : out_[static_cast<size_t>(u)]) result.emplace_back(u, v);
    return result;
}

std::string Digraph::to_edge_list() const {
    // Insertion order keeps parse -> serialize -> parse a fixpoint: the
    // serialized stream mentions vertices in index order, so reparsing
    // reproduces both the labeling and the arc sequence.
    std::ostringstream os;
    for (const auto& [u, v] : arc_order_) os << label(u) << ' ' << label(v) << '\n';
    return os.str();
}

namespace {

void record_arc(ParseResult& r, const std::string& u, const std::string& v, bool permit_loops,
                int line_no) {
    if (u == v) {
        if (!permit_loops) {
            throw SelfLoopError(u + (line_no > 0 ? " (line " + std::to_string(line_no) + ")" : ""));
        }
        r.self_loops.push_back(r.graph.add_vertex(u));
        return;
    }
    if (!r.graph.add_arc(u, v)) ++r.duplicate_arcs;
}

}  // namespace

ParseResult parse_edge_list_ex(std::string_view text, bool permit_loops) {
    ParseResult result;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            tokens.push_back(tok);
        }
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v', got " +
                             std::to_string(tokens.size()) + " token(s)");
        }
        record_arc(result, tokens[0], tokens[1], permit_loops, line_no);
    }
    return result;
}

Digraph parse_edge_list(std::string_view text) {
    return parse_edge_list_ex(text, false).graph;
}

namespace {

struct DotLexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("DOT parse error at offset " + std::to_string(pos) + ": " + what);
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (pos == start) fail("expected identifier");
        return std::string(text.substr(start, pos - start));
    }

    void skip_attrs() {
        skip_ws();
        if (pos < text.size() && text[pos] == '[') {
            while (pos < text.size() && text[pos] != ']') ++pos;
            if (pos >= text.size()) fail("unterminated attribute list");
            ++pos;
        }
    }
};

}  // namespace

ParseResult parse_dot_ex(std::string_view text, bool permit_loops) {
    DotLexer lex{text};
    std::string kw = lex.ident();
    if (kw == "graph") throw ParseError("undirected 'graph' not supported; use 'digraph'");
    if (kw != "digraph") lex.fail("expected 'digraph'");
    if (lex.peek() != '{') lex.ident();  // optional graph name
    lex.expect('{');
    ParseResult result;
    while (lex.peek() != '}') {
        if (lex.at_end()) lex.fail("unterminated digraph body");
        std::string u = lex.ident();
        lex.skip_ws();
        if (lex.pos + 1 < lex.text.size() && lex.text[lex.pos] == '-' &&
            lex.text[lex.pos + 1] == '-') {
            lex.fail("undirected edge '--' not supported");
        }
        if (!(lex.pos + 1 < lex.text.size() && lex.text[lex.pos] == '-' &&
              lex.text[lex.pos + 1] == '>')) {
            lex.fail("expected '->'");
        }
        lex.pos += 2;
        std::string v = lex.ident();
        lex.skip_attrs();
        lex.expect(';');
        record_arc(result, u, v, permit_loops, 0);
    }
    lex.expect('}');
    if (!lex.at_end()) lex.fail("trailing input after '}'");
    return result;
}

Digraph parse_dot(std::string_view text) { return parse_dot_ex(text, false).graph; }

Digraph loop_transform(const ParseResult& parsed) {
    Digraph result = parsed.graph;
    for (int v : parsed.self_loops) {
        const std::string base = result.label(v) + "__loop";
        int k = 0;
        while (result.has_vertex(base + std::to_string(k))) ++k;
        int fresh = result.add_vertex(base + std::to_string(k));
        result.add_arc(v, fresh);
        result.add_arc(fresh, v);
    }
    return result;
}

std::vector<std::vector<int>> weak_components(const Digraph& d) {
    int n = d.num_vertices();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<size_t>(start)] != -1) continue;
        int id = static_cast<int>(components.size());
        components.emplace_back();
        std::vector<int> stack{start};
        comp[static_cast<size_t>(start)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            components[static_cast<size_t>(id)].push_back(v);
            for (const auto& nbrs : {d.out_neighbors(v), d.in_neighbors(v)}) {
                for (int w : nbrs) {
                    if (comp[static_cast<size_t>(w)] == -1) {
                        comp[static_cast<size_t>(w)] = id;
                        stack.push_back(w);
                    }
                }
            }
        }
        std::sort(components[static_cast<size_t>(id)].begin(),
                  components[static_cast<size_t>(id)].end());
    }
    return components;
}

namespace {

int reachable_count(const Digraph& d, int start, bool reverse) {
    std::vector<char> seen(static_cast<size_t>(d.num_vertices()), 0);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : reverse ? d.in_neighbors(v) : d.out_neighbors(v)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return count;
}

}  // namespace

bool strongly_connected(const Digraph& d) {
    int n = d.num_vertices();
    if (n == 0) return false;
    if (n == 1) return true;
    return reachable_count(d, 0, false) == n && reachable_count(d, 0, true) == n;
}

Digraph suspension(const Digraph& d, int k) {
    if (k < 1) throw std::invalid_argument("suspension: k must be >= 1");
    if (d.empty()) throw std::invalid_argument("suspension: empty digraph");
    Digraph result = d;
    for (int step = 1; step <= k; ++step) {
        int before = result.num_vertices();
        for (const char* side : {"_N", "_S"}) {
            std::string pole = "pole" + std::to_string(step) + side;
            if (result.has_vertex(pole)) {
                throw std::invalid_argument("suspension: label collision on " + pole);
            }
            int p = result.add_vertex(pole);
            for (int v = 0; v < before; ++v) result.add_arc(v, p);
        }
    }
    return result;
}

Digraph k_partite_tower(const std::vector<int>& layer_sizes) {
    if (layer_sizes.empty()) throw std::invalid_argument("tower: need at least one layer");
    for (int n : layer_sizes) {
        if (n < 1) throw std::invalid_argument("tower: layer sizes must be positive");
    }
    Digraph d;
    int total = 0;
    std::vector<std::pair<int, int>> layer_ranges;  // [first, last] vertex index
    for (int n : layer_sizes) {
        layer_ranges.emplace_back(total, total + n - 1);
        for (int i = 0; i < n; ++i) d.add_vertex(std::to_string(++total));
    }
    for (size_t l = 0; l + 1 < layer_ranges.size(); ++l) {
        for (int u = layer_ranges[l].first; u <= layer_ranges[l].second; ++u)
            for (int v = layer_ranges[l + 1].first; v <= layer_ranges[l + 1].second; ++v)
                d.add_arc(u, v);
    }
    return d;
}

Digraph two_cycle() {
    Digraph d;
    d.add_arc("a", "b");
    d.add_arc("b", "a");
    return d;
}

Digraph nontrivial_flow_example() {
    return parse_edge_list(
        "v1 v2\n"
        "v2 v4\nv2 v5\n"
        "v3 v4\nv3 v5\n"
        "v4 v6\nv4 v7\n"
        "v5 v6\nv5 v7\n"
        "v6 v8\n"
        "v7 v3\n");
}

}  // namespace pathhom
