#include "tamcy/json_io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "tamcy/errors.hpp"
#include "tamcy/interval_poset.hpp"

namespace tamcy {

namespace {

nlohmann::json subtree_json(const BinaryTree& t, int v) {
    if (v == 0) return nullptr;
    return nlohmann::json::array({subtree_json(t, t.left[v]), subtree_json(t, t.right[v])});
}

int count_nodes(const nlohmann::json& j) {
    if (j.is_null()) return 0;
    if (!j.is_array() || j.size() != 2)
        throw parse_error("tree nodes must be null or two-element arrays");
    return 1 + count_nodes(j[0]) + count_nodes(j[1]);
}

std::vector<std::pair<int, int>> pair_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + " must be an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw parse_error(std::string(what) + " entries must be integer pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

} // namespace

nlohmann::json tree_json(const BinaryTree& t) { return subtree_json(t, t.root); }

BinaryTree tree_from_json(const nlohmann::json& j) {
    const int n = count_nodes(j);
    BinaryTree t;
    t.n = n;
    t.left.assign(n + 1, 0);
    t.right.assign(n + 1, 0);
    int next = 0;
    std::function<int(const nlohmann::json&)> build = [&](const nlohmann::json& node) -> int {
        if (node.is_null()) return 0;
        const int l = build(node[0]);
        const int v = ++next; // in-order position
        const int r = build(node[1]);
        t.left[v] = l;
        t.right[v] = r;
        return v;
    };
    t.root = build(j);
    return t;
}

nlohmann::json ip_json(const IntervalPoset& ip) {
    nlohmann::json rels = nlohmann::json::array();
    for (auto [a, b] : ip.relations()) rels.push_back({a, b});
    return {{"n", ip.n()}, {"relations", rels}};
}

IntervalPoset ip_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("relations"))
        throw parse_error("interval-poset files need \"n\" and \"relations\"");
    return IntervalPoset(j["n"].get<int>(), pair_list(j["relations"], "relations"));
}

nlohmann::json nc_json(const NoncrossingTree& t) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : t.edges()) edges.push_back({a, b});
    return {{"n", t.n()}, {"edges", edges}};
}

NoncrossingTree nc_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error("noncrossing-tree files need \"n\" and \"edges\"");
    return NoncrossingTree(j["n"].get<int>(), pair_list(j["edges"], "edges"));
}

nlohmann::json poset_json(const FinitePoset& p) {
    nlohmann::json names = nlohmann::json::array();
    for (int i = 0; i < p.size(); ++i) names.push_back(p.name(i));
    nlohmann::json covers = nlohmann::json::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    return {{"elements", names}, {"covers", covers}};
}

FinitePoset poset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elements"))
        throw parse_error("poset files need an \"elements\" list");
    std::vector<std::string> names;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw parse_error("poset element names must be strings");
        names.push_back(e.get<std::string>());
    }
    const bool has_covers = j.contains("covers");
    const bool has_leq = j.contains("leq");
    if (has_covers == has_leq)
        throw parse_error("poset files need exactly one of \"covers\" or \"leq\"");
    const nlohmann::json& rel = has_covers ? j["covers"] : j["leq"];
    if (!rel.is_array()) throw parse_error("poset relations must be an array of pairs");
    auto resolve = [&](const nlohmann::json& e) -> int {
        if (e.is_number_integer()) {
            const int v = e.get<int>();
            if (v < 0 || v >= int(names.size()))
                throw parse_error("poset relation index out of range");
            return v;
        }
        if (e.is_string()) {
            for (int i = 0; i < int(names.size()); ++i)
                if (names[i] == e.get<std::string>()) return i;
            throw parse_error("poset relation names an unknown element");
        }
        throw parse_error("poset relation entries must be indices or names");
    };
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : rel) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("poset relations must be pairs");
        pairs.emplace_back(resolve(e[0]), resolve(e[1]));
    }
    return has_covers ? FinitePoset::from_covers(std::move(names), pairs)
                      : FinitePoset::from_leq(std::move(names), pairs);
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    return j;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string poset_dot(const FinitePoset& p) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < p.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(p.name(i)) << "\"];\n";
    for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string ip_dot(const IntervalPoset& ip) {
    std::ostringstream os;
    os << "digraph relation {\n  node [shape=circle];\n";
    for (int v = 1; v <= ip.n(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    const HasseSplit h = hasse_split(ip);
    for (auto [from, to] : h.increasing) os << "  v" << from << " -> v" << to << ";\n";
    for (auto [from, to] : h.decreasing)
        os << "  v" << from << " -> v" << to << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

} // namespace tamcy
