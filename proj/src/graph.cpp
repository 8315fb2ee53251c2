#include "metembed/graph.hpp"

#include "metembed/errors.hpp"

#include <algorithm>
#include <string>

namespace metembed {

namespace {

constexpr std::array<Branch, 6> kLaaksoBranches{Branch::Y, Branch::C, Branch::D,
                                                Branch::E, Branch::F, Branch::Z};
constexpr std::array<Branch, 4> kDiamondBranches{Branch::P1a, Branch::P1b, Branch::P2a,
                                                 Branch::P2b};
constexpr std::array<Anchor, 6> kLaaksoAnchors{Anchor::A, Anchor::T, Anchor::L,
                                               Anchor::R, Anchor::B, Anchor::U};
constexpr std::array<Anchor, 4> kDiamondAnchors{Anchor::S, Anchor::P, Anchor::Q, Anchor::T};

// Position of a role in the family's anchor list, or -1.
int anchor_slot(Family f, Anchor a) {
    auto list = anchors_of(f);
    auto it = std::find(list.begin(), list.end(), a);
    return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

int branch_slot(Family f, Branch b) {
    auto list = branches(f);
    auto it = std::find(list.begin(), list.end(), b);
    return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

bool is_end(Family f, Anchor a) { return a == source_anchor(f) || a == sink_anchor(f); }

}  // namespace

std::string_view family_name(Family f) { return f == Family::laakso ? "laakso" : "diamond"; }

Family parse_family(std::string_view s) {
    if (s == "laakso") return Family::laakso;
    if (s == "diamond") return Family::diamond;
    throw ValidationError("unknown graph family '" + std::string(s) + "'");
}

std::string_view branch_name(Branch b) {
    switch (b) {
        case Branch::Y: return "Y";
        case Branch::C: return "C";
        case Branch::D: return "D";
        case Branch::E: return "E";
        case Branch::F: return "F";
        case Branch::Z: return "Z";
        case Branch::P1a: return "P1a";
        case Branch::P1b: return "P1b";
        case Branch::P2a: return "P2a";
        case Branch::P2b: return "P2b";
    }
    return "?";
}

std::string_view anchor_name(Anchor a) {
    switch (a) {
        case Anchor::A: return "A";
        case Anchor::T: return "T";
        case Anchor::L: return "L";
        case Anchor::R: return "R";
        case Anchor::B: return "B";
        case Anchor::U: return "U";
        case Anchor::S: return "S";
        case Anchor::P: return "P";
        case Anchor::Q: return "Q";
    }
    return "?";
}

std::span<const Branch> branches(Family f) {
    if (f == Family::laakso) return kLaaksoBranches;
    return kDiamondBranches;
}

std::span<const Anchor> anchors_of(Family f) {
    if (f == Family::laakso) return kLaaksoAnchors;
    return kDiamondAnchors;
}

Anchor source_anchor(Family f) { return f == Family::laakso ? Anchor::A : Anchor::S; }
Anchor sink_anchor(Family f) { return f == Family::laakso ? Anchor::U : Anchor::T; }

bool address_less(Family f, const VertexAddress& x, const VertexAddress& y) {
    if (x.path.size() != y.path.size()) return x.path.size() < y.path.size();
    for (std::size_t i = 0; i < x.path.size(); ++i) {
        int a = branch_slot(f, x.path[i]);
        int b = branch_slot(f, y.path[i]);
        if (a != b) return a < b;
    }
    return anchor_slot(f, x.terminal) < anchor_slot(f, y.terminal);
}

std::string format_address(const VertexAddress& addr) {
    std::string out;
    for (std::size_t i = 0; i < addr.path.size(); ++i) {
        if (i) out += '.';
        out += branch_name(addr.path[i]);
    }
    if (!addr.path.empty()) out += ':';
    out += anchor_name(addr.terminal);
    return out;
}

VertexAddress parse_address(Family f, std::string_view text) {
    VertexAddress addr;
    std::string_view term = text;
    if (auto colon = text.rfind(':'); colon != std::string_view::npos) {
        std::string_view path = text.substr(0, colon);
        term = text.substr(colon + 1);
        while (!path.empty()) {
            auto dot = path.find('.');
            std::string_view label = path.substr(0, dot);
            if (label.empty()) throw ValidationError("empty branch label in '" + std::string(text) + "'");
            bool found = false;
            for (Branch b : branches(f)) {
                if (branch_name(b) == label) {
                    addr.path.push_back(b);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw ValidationError("unknown branch label '" + std::string(label) + "' for " +
                                      std::string(family_name(f)));
            if (dot == std::string_view::npos) break;
            path = path.substr(dot + 1);
            if (path.empty()) throw ValidationError("empty branch label in '" + std::string(text) + "'");
        }
        if (addr.path.empty()) throw ValidationError("empty path before ':' in address");
    }
    for (Anchor a : anchors_of(f)) {
        if (anchor_name(a) == term) {
            addr.terminal = a;
            return addr;
        }
    }
    throw ValidationError("unknown anchor '" + std::string(term) + "' for " +
                          std::string(family_name(f)));
}

std::int64_t expected_vertex_count(Family family, int level) {
    std::int64_t p = 1;
    if (family == Family::laakso) {
        for (int i = 0; i < level; ++i) p *= 6;
        return 2 + 4 * (p - 1) / 5;
    }
    for (int i = 0; i < level; ++i) p *= 4;
    return 2 + 2 * (p - 1) / 3;
}

std::int64_t expected_edge_count(Family family, int level) {
    std::int64_t p = 1;
    for (int i = 0; i < level; ++i) p *= family == Family::laakso ? 6 : 4;
    return p;
}

VertexId LevelGraph::anchor(Anchor role) const {
    int slot = anchor_slot(family_, role);
    if (slot < 0 || (level_ == 0 && !is_end(family_, role)))
        throw ValidationError("anchor " + std::string(anchor_name(role)) + " does not exist in " +
                              std::string(family_name(family_)) + " level " +
                              std::to_string(level_));
    return copies_.front().anchor[slot];
}

std::vector<std::pair<Anchor, VertexId>> LevelGraph::anchors() const {
    std::vector<std::pair<Anchor, VertexId>> out;
    for (Anchor a : anchors_of(family_)) {
        if (level_ == 0 && !is_end(family_, a)) continue;
        out.emplace_back(a, anchor(a));
    }
    return out;
}

std::int32_t LevelGraph::find_copy(std::span<const Branch> path) const {
    if (static_cast<int>(path.size()) > level_)
        throw ValidationError("address path of length " + std::to_string(path.size()) +
                              " exceeds level " + std::to_string(level_));
    std::int32_t node = 0;
    for (Branch b : path) {
        int slot = branch_slot(family_, b);
        if (slot < 0)
            throw ValidationError("branch " + std::string(branch_name(b)) + " is not a " +
                                  std::string(family_name(family_)) + " branch");
        node = copies_[node].child[slot];
    }
    return node;
}

VertexId LevelGraph::resolve(const VertexAddress& addr) const {
    const Copy& c = copies_[find_copy(addr.path)];
    int slot = anchor_slot(family_, addr.terminal);
    if (slot < 0)
        throw ValidationError("anchor " + std::string(anchor_name(addr.terminal)) +
                              " is not a " + std::string(family_name(family_)) + " anchor");
    if (c.level == 0 && !is_end(family_, addr.terminal))
        throw ValidationError("level-0 copy at '" + format_address(addr) +
                              "' has only its two end anchors");
    return c.anchor[slot];
}

std::vector<VertexAddress> LevelGraph::aliases(VertexId v) const {
    std::vector<VertexAddress> out;
    std::vector<Branch> path;
    auto walk = [&](auto&& self, std::int32_t node) -> void {
        const Copy& c = copies_[node];
        auto roles = anchors_of(family_);
        for (std::size_t s = 0; s < roles.size(); ++s)
            if (c.anchor[s] == v) out.push_back({path, roles[s]});
        if (c.level == 0) return;
        auto labels = branches(family_);
        for (std::size_t s = 0; s < labels.size(); ++s) {
            path.push_back(labels[s]);
            self(self, c.child[s]);
            path.pop_back();
        }
    };
    walk(walk, 0);
    std::sort(out.begin(), out.end(),
              [&](const auto& x, const auto& y) { return address_less(family_, x, y); });
    return out;
}

void LevelGraph::collect(std::int32_t node, std::vector<VertexId>& out) const {
    const Copy& c = copies_[node];
    for (VertexId id : c.anchor)
        if (id >= 0) out.push_back(id);
    if (c.level == 0) return;
    for (std::int32_t child : c.child)
        if (child >= 0) collect(child, out);
}

std::vector<VertexId> LevelGraph::copy_members(std::span<const Branch> path) const {
    std::vector<VertexId> out;
    collect(find_copy(path), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<VertexId>> LevelGraph::adjacency() const {
    std::vector<std::vector<VertexId>> adj(vertex_count());
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

LevelGraph build_graph(Family family, int level, const BuildOptions& options) {
    if (level < 0) throw ValidationError("level must be nonnegative");
    if (level > options.max_level)
        throw CapacityError("level " + std::to_string(level) + " exceeds the maximum level " +
                            std::to_string(options.max_level));

    LevelGraph g;
    g.family_ = family;
    g.level_ = level;
    g.copies_.reserve(static_cast<std::size_t>(expected_edge_count(family, level)) * 2);

    const auto roles = anchors_of(family);
    const int source = 0;
    const int sink = static_cast<int>(roles.size()) - 1;

    auto new_vertex = [&](const std::vector<Branch>& path, Anchor role) {
        g.canonical_.push_back({path, role});
        return static_cast<VertexId>(g.canonical_.size() - 1);
    };

    std::vector<Branch> path;
    auto build = [&](auto&& self, int lvl, VertexId a, VertexId u) -> std::int32_t {
        auto node = static_cast<std::int32_t>(g.copies_.size());
        g.copies_.emplace_back();
        g.copies_[node].level = lvl;
        g.copies_[node].anchor[source] = a;
        g.copies_[node].anchor[sink] = u;
        if (lvl == 0) {
            g.edges_.emplace_back(std::min(a, u), std::max(a, u));
            return node;
        }
        std::array<VertexId, 6> id{};
        id[source] = a;
        id[sink] = u;
        for (int s = source + 1; s < sink; ++s) {
            id[s] = new_vertex(path, roles[s]);
            g.copies_[node].anchor[s] = id[s];
        }
        // (start, end) slots of each child copy, in branch order.
        static constexpr std::array<std::pair<int, int>, 6> kLaaksoSpans{
            {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}}};
        static constexpr std::array<std::pair<int, int>, 4> kDiamondSpans{
            {{0, 1}, {1, 3}, {0, 2}, {2, 3}}};
        auto labels = branches(family);
        for (std::size_t b = 0; b < labels.size(); ++b) {
            auto [from, to] = family == Family::laakso ? kLaaksoSpans[b] : kDiamondSpans[b];
            path.push_back(labels[b]);
            std::int32_t child = self(self, lvl - 1, id[from], id[to]);
            path.pop_back();
            g.copies_[node].child[b] = child;
        }
        return node;
    };

    VertexId a = new_vertex({}, roles[source]);
    VertexId u = new_vertex({}, roles[sink]);
    build(build, level, a, u);

    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    return g;
}

}  // namespace metembed
