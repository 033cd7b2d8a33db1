#include "cdcrit/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cdcrit/criticality.hpp"

namespace cdcrit {

const VertexSet& FamilyTag::role(const std::string& name) const {
    auto it = roles.find(name);
    if (it == roles.end()) throw InvalidParams("tag has no role " + name);
    return it->second;
}

int FamilyTag::single(const std::string& name) const {
    const auto& r = role(name);
    if (r.size() != 1) throw InvalidParams("role " + name + " is not a single vertex");
    return r[0];
}

namespace {

void validate_b1(const B1Params& p) {
    if (p.star_sizes.size() < 2)
        throw InvalidParams("B1 requires at least 2 stars, got " +
                            std::to_string(p.star_sizes.size()));
    for (int s : p.star_sizes)
        if (s < 1) throw InvalidParams("star sizes must be >= 1");
    if (p.isolated < 0) throw InvalidParams("isolated count must be >= 0");
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

// Builds the B1 graph with labels offset by `base`; appends roles into `tag`
// (role vertex ids are absolute). Returns the edge list and vertex count used.
struct B1Layout {
    std::vector<std::pair<int, int>> edges;
    int count = 0;
    int b = 0;
    VertexSet centers, leaves, isolated_set;
    std::vector<VertexSet> leaves_per_star;
};

B1Layout b1_layout(const B1Params& p, int base) {
    validate_b1(p);
    B1Layout lay;
    lay.b = base;
    int next = base + 1;
    std::vector<int> star_center(p.star_sizes.size());
    for (std::size_t i = 0; i < p.star_sizes.size(); ++i) {
        star_center[i] = next;
        lay.centers.push_back(next);
        ++next;
        VertexSet ls;
        for (int j = 0; j < p.star_sizes[i]; ++j) ls.push_back(next++);
        lay.leaves.insert(lay.leaves.end(), ls.begin(), ls.end());
        lay.leaves_per_star.push_back(std::move(ls));
    }
    for (int j = 0; j < p.isolated; ++j) lay.isolated_set.push_back(next++);
    lay.count = next - base;

    // b adjacent to exactly the leaves.
    for (int u : lay.leaves) lay.edges.emplace_back(lay.b, u);
    // Complete graph on centers + leaves + isolated minus the star (center-leaf) edges.
    VertexSet body;
    body.insert(body.end(), lay.centers.begin(), lay.centers.end());
    body.insert(body.end(), lay.leaves.begin(), lay.leaves.end());
    body.insert(body.end(), lay.isolated_set.begin(), lay.isolated_set.end());
    std::sort(body.begin(), body.end());
    auto star_of = [&](int v) -> int {
        for (std::size_t i = 0; i < p.star_sizes.size(); ++i) {
            if (v == star_center[i]) return static_cast<int>(i);
            const auto& ls = lay.leaves_per_star[i];
            if (std::binary_search(ls.begin(), ls.end(), v)) return static_cast<int>(i);
        }
        return -1;
    };
    auto is_center = [&](int v) {
        return std::find(star_center.begin(), star_center.end(), v) != star_center.end();
    };
    for (std::size_t i = 0; i < body.size(); ++i)
        for (std::size_t j = i + 1; j < body.size(); ++j) {
            int u = body[i], v = body[j];
            bool star_edge = star_of(u) >= 0 && star_of(u) == star_of(v) &&
                             (is_center(u) != is_center(v));
            if (!star_edge) lay.edges.emplace_back(u, v);
        }
    return lay;
}

void b1_roles(FamilyTag& tag, const B1Layout& lay) {
    tag.roles["b"] = {lay.b};
    tag.roles["S"] = lay.centers;
    for (std::size_t i = 0; i < lay.leaves_per_star.size(); ++i)
        tag.roles["Sprime." + std::to_string(i + 1)] = lay.leaves_per_star[i];
    if (!lay.isolated_set.empty()) tag.roles["Ssecond"] = lay.isolated_set;
}

} // namespace

FamilyInstance build_B1(const B1Params& params) {
    B1Layout lay = b1_layout(params, 0);
    FamilyInstance inst;
    inst.graph = build_graph(lay.count, lay.edges);
    inst.tag.family = "B1";
    inst.tag.params["stars"] = join_ints(params.star_sizes);
    inst.tag.params["isolated"] = std::to_string(params.isolated);
    b1_roles(inst.tag, lay);
    return inst;
}

FamilyInstance build_Uk(int k, const B1Params& params, bool allow_small_k) {
    if (k < 4 && !allow_small_k)
        throw InvalidParams("Uk requires k >= 4 (pass allow_small_k for degenerate paths)");
    if (k < 2) throw InvalidParams("Uk requires k >= 2");
    int path_len = k - 2;
    B1Layout lay = b1_layout(params, path_len);
    std::vector<std::pair<int, int>> es = lay.edges;
    for (int i = 0; i + 1 < path_len; ++i) es.emplace_back(i, i + 1);
    // k = 2 has an empty path: the graph degenerates to the bare B1 instance.
    if (path_len > 0) es.emplace_back(path_len - 1, lay.b); // c_{k-3} b

    FamilyInstance inst;
    inst.graph = build_graph(path_len + lay.count, es);
    inst.tag.family = "Uk";
    inst.tag.params["k"] = std::to_string(k);
    inst.tag.params["stars"] = join_ints(params.star_sizes);
    inst.tag.params["isolated"] = std::to_string(params.isolated);
    VertexSet c(path_len);
    std::iota(c.begin(), c.end(), 0);
    inst.tag.roles["c"] = c;
    b1_roles(inst.tag, lay);
    return inst;
}

FamilyInstance build_G1(int k, int ell, int n_ell, const B1Params& params) {
    if (k < 4) throw InvalidParams("G1 requires k >= 4");
    if (ell < 1 || ell > k - 3)
        throw InvalidParams("G1 requires 1 <= ell <= k-3, got ell=" + std::to_string(ell));
    if (n_ell < 1) throw InvalidParams("G1 requires n_ell >= 1");

    int path_len = k - 3; // c_0..c_{k-4}
    int clique_base = path_len;
    B1Layout lay = b1_layout(params, clique_base + n_ell);
    std::vector<std::pair<int, int>> es = lay.edges;
    for (int i = 0; i < n_ell; ++i)
        for (int j = i + 1; j < n_ell; ++j) es.emplace_back(clique_base + i, clique_base + j);

    if (ell <= k - 4) {
        // Disjoint paths c_0..c_{ell-1} and c_ell..c_{k-4}; clique between them.
        for (int i = 0; i + 1 < ell; ++i) es.emplace_back(i, i + 1);
        for (int i = ell; i + 1 < path_len; ++i) es.emplace_back(i, i + 1);
        for (int i = 0; i < n_ell; ++i) {
            es.emplace_back(ell - 1, clique_base + i);
            es.emplace_back(ell, clique_base + i);
        }
        es.emplace_back(path_len - 1, lay.b); // c_{k-4} b
    } else {
        // ell = k-3: single path, clique between c_{k-4} and b, no c_{k-4}b edge.
        for (int i = 0; i + 1 < path_len; ++i) es.emplace_back(i, i + 1);
        for (int i = 0; i < n_ell; ++i) {
            es.emplace_back(path_len - 1, clique_base + i);
            es.emplace_back(lay.b, clique_base + i);
        }
    }

    FamilyInstance inst;
    inst.graph = build_graph(clique_base + n_ell + lay.count, es);
    inst.tag.family = "G1";
    inst.tag.params["k"] = std::to_string(k);
    inst.tag.params["ell"] = std::to_string(ell);
    inst.tag.params["nell"] = std::to_string(n_ell);
    inst.tag.params["stars"] = join_ints(params.star_sizes);
    inst.tag.params["isolated"] = std::to_string(params.isolated);
    VertexSet c(path_len);
    std::iota(c.begin(), c.end(), 0);
    inst.tag.roles["c"] = c;
    VertexSet q(n_ell);
    std::iota(q.begin(), q.end(), clique_base);
    inst.tag.roles["Q"] = q;
    b1_roles(inst.tag, lay);
    return inst;
}

FamilyInstance build_G2(int k, const Graph& h, int b) {
    if (k < 5) throw InvalidParams("G2 requires k >= 5");
    auto rep = check_class_B2(h, b);
    if (!rep.verdict)
        throw NotB2Member("block fails the end-block conditions: " + rep.failure);

    int path_len = k - 3; // c_0..c_{k-4}
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < path_len; ++i) es.emplace_back(i, i + 1);
    for (auto [u, v] : h.edges()) es.emplace_back(path_len + u, path_len + v);
    es.emplace_back(path_len + b, path_len - 1); // b c_{k-4}

    FamilyInstance inst;
    inst.graph = build_graph(path_len + h.n, es);
    inst.tag.family = "G2";
    inst.tag.params["k"] = std::to_string(k);
    VertexSet c(path_len);
    std::iota(c.begin(), c.end(), 0);
    inst.tag.roles["c"] = c;
    inst.tag.roles["b"] = {path_len + b};
    VertexSet rest;
    for (int v = 0; v < h.n; ++v)
        if (v != b) rest.push_back(path_len + v);
    inst.tag.roles["H"] = rest;
    VertexSet full(h.n);
    std::iota(full.begin(), full.end(), path_len);
    inst.tag.groups["Hfull"] = full;
    return inst;
}

FamilyInstance build_Ns(int s) {
    if (s < 6) throw InvalidParams("Ns requires s >= 6");
    int n = 1 + 2 * s + s * (s - 1) / 2;
    auto a = [&](int i) { return i; };         // 1-based
    auto bb = [&](int i) { return s + i; };    // 1-based
    std::vector<std::vector<int>> zid(s + 1, std::vector<int>(s + 1, -1));
    int next = 2 * s + 1;
    VertexSet b3;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) {
            zid[i][j] = next;
            b3.push_back(next);
            ++next;
        }
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) {
            es.emplace_back(a(i), a(j));
            es.emplace_back(bb(i), bb(j));
        }
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j)
            if (i != j) es.emplace_back(a(i), bb(j));
    for (int v : b3) es.emplace_back(0, v); // x to B3
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) {
            es.emplace_back(a(i), zid[i][j]);
            es.emplace_back(a(j), zid[i][j]);
            for (int l = 1; l <= s; ++l)
                if (l != i && l != j) es.emplace_back(bb(l), zid[i][j]);
        }

    FamilyInstance inst;
    inst.graph = build_graph(n, es);
    inst.tag.family = "Ns";
    inst.tag.params["s"] = std::to_string(s);
    inst.tag.roles["x"] = {0};
    VertexSet b1(s), b2(s);
    std::iota(b1.begin(), b1.end(), 1);
    std::iota(b2.begin(), b2.end(), s + 1);
    inst.tag.roles["B1"] = b1;
    inst.tag.roles["B2"] = b2;
    inst.tag.roles["B3"] = b3;
    inst.tag.groups["H"] = b2; // designated maximal complete subgraph
    return inst;
}

FamilyInstance build_Pkl(const FamilyInstance& base, const std::vector<int>& clique_sizes) {
    if (clique_sizes.empty()) throw InvalidParams("Pkl requires at least one clique");
    for (int c : clique_sizes)
        if (c < 1) throw InvalidParams("clique sizes must be >= 1");
    VertexSet h;
    if (auto it = base.tag.groups.find("H"); it != base.tag.groups.end()) h = it->second;
    else if (base.tag.has_role("H")) h = base.tag.role("H");
    else throw InvalidParams("base tag lacks an H designation");

    int l = static_cast<int>(clique_sizes.size());
    std::vector<std::pair<int, int>> cliq(l); // vertex ranges
    int next = 1;
    for (int i = 0; i < l; ++i) {
        cliq[i] = {next, next + clique_sizes[i]};
        next += clique_sizes[i];
    }
    int shift = next;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : base.graph.edges()) es.emplace_back(shift + u, shift + v);
    for (int i = 0; i < l; ++i)
        for (int u = cliq[i].first; u < cliq[i].second; ++u)
            for (int v = u + 1; v < cliq[i].second; ++v) es.emplace_back(u, v);
    for (int u = cliq[0].first; u < cliq[0].second; ++u) es.emplace_back(0, u); // x_0 join
    for (int i = 0; i + 1 < l; ++i)
        for (int u = cliq[i].first; u < cliq[i].second; ++u)
            for (int v = cliq[i + 1].first; v < cliq[i + 1].second; ++v) es.emplace_back(u, v);
    for (int u = cliq[l - 1].first; u < cliq[l - 1].second; ++u)
        for (int v : h) es.emplace_back(u, shift + v);

    FamilyInstance inst;
    inst.graph = build_graph(shift + base.graph.n, es);
    inst.tag.family = "Pkl";
    inst.tag.params["l"] = std::to_string(l);
    for (int i = 0; i < l; ++i)
        inst.tag.params["n." + std::to_string(i + 1)] = std::to_string(clique_sizes[i]);
    inst.tag.params["base"] = base.tag.family;
    for (const auto& [key, value] : base.tag.params)
        inst.tag.params["base." + key] = value;
    inst.tag.roles["x0"] = {0};
    for (int i = 0; i < l; ++i) {
        VertexSet q(clique_sizes[static_cast<std::size_t>(i)]);
        std::iota(q.begin(), q.end(), cliq[i].first);
        inst.tag.roles["X." + std::to_string(i + 1)] = q;
    }
    for (const auto& [name, vs] : base.tag.roles) {
        VertexSet shifted;
        for (int v : vs) shifted.push_back(shift + v);
        inst.tag.roles[name] = shifted;
    }
    for (const auto& [name, vs] : base.tag.groups) {
        VertexSet shifted;
        for (int v : vs) shifted.push_back(shift + v);
        inst.tag.groups[name] = shifted;
    }
    return inst;
}

std::string compress_vertex_list(const VertexSet& vs) {
    std::string out;
    std::size_t i = 0;
    while (i < vs.size()) {
        std::size_t j = i;
        while (j + 1 < vs.size() && vs[j + 1] == vs[j] + 1) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(vs[i]);
        if (j > i) out += '-' + std::to_string(vs[j]);
        i = j + 1;
    }
    return out;
}

VertexSet parse_vertex_list(const std::string& text) {
    VertexSet out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-', 1); // allow leading digit; ids are non-negative
        if (dash == std::string::npos) {
            out.push_back(std::stoi(item));
        } else {
            int lo = std::stoi(item.substr(0, dash));
            int hi = std::stoi(item.substr(dash + 1));
            if (hi < lo) throw ParseError("bad vertex range: " + item);
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    return out;
}

std::string tag_to_text(const FamilyTag& tag) {
    std::ostringstream os;
    os << "family=" << tag.family << '\n';
    for (const auto& [key, value] : tag.params) os << key << '=' << value << '\n';
    for (const auto& [name, vs] : tag.roles)
        os << "roles." << name << '=' << compress_vertex_list(vs) << '\n';
    for (const auto& [name, vs] : tag.groups)
        os << "group." << name << '=' << compress_vertex_list(vs) << '\n';
    return os.str();
}

FamilyTag tag_from_text(const std::string& text) {
    FamilyTag tag;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("bad sidecar line: " + line);
        std::string key = line.substr(pos, eq - pos);
        std::string value = line.substr(eq + 1);
        if (key == "family") tag.family = value;
        else if (key.rfind("roles.", 0) == 0) tag.roles[key.substr(6)] = parse_vertex_list(value);
        else if (key.rfind("group.", 0) == 0) tag.groups[key.substr(6)] = parse_vertex_list(value);
        else tag.params[key] = value;
    }
    if (tag.family.empty()) throw ParseError("sidecar lacks family=");
    return tag;
}

} // namespace cdcrit
