#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metembed {

enum class Family : std::uint8_t { laakso, diamond };

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

// Child copies of the next-lower level. Laakso: Y spans A-T, C spans T-L,
// D spans T-R, E spans L-B, F spans R-B, Z spans B-U. Diamond: two parallel
// two-edge paths S-P-T (P1a, P1b) and S-Q-T (P2a, P2b).
enum class Branch : std::uint8_t { Y, C, D, E, F, Z, P1a, P1b, P2a, P2b };

// Anchor roles inside one copy. Laakso uses A,T,L,R,B,U; diamond uses S,P,Q,T
// where T is the far end. A level-0 copy only has its two ends.
enum class Anchor : std::uint8_t { A, T, L, R, B, U, S, P, Q };

struct VertexAddress {
    std::vector<Branch> path;
    Anchor terminal = Anchor::A;

    friend bool operator==(const VertexAddress&, const VertexAddress&) = default;
};

std::string_view family_name(Family f);
Family parse_family(std::string_view s);
std::string_view branch_name(Branch b);
std::string_view anchor_name(Anchor a);

std::span<const Branch> branches(Family f);
std::span<const Anchor> anchors_of(Family f);
Anchor source_anchor(Family f);
Anchor sink_anchor(Family f);

/// Orders addresses for canonicalization: shorter path first, then labels
/// (Y<C<D<E<F<Z, P1a<P1b<P2a<P2b), then terminal in anchor order.
bool address_less(Family f, const VertexAddress& x, const VertexAddress& y);

/// "A" for a top-level anchor, "C.E:U" for terminal U of copy E inside copy C.
std::string format_address(const VertexAddress& addr);
VertexAddress parse_address(Family f, std::string_view text);

struct BuildOptions {
    int max_level = 6;
};

class LevelGraph {
public:
    Family family() const { return family_; }
    int level() const { return level_; }
    std::size_t vertex_count() const { return canonical_.size(); }
    std::span<const Edge> edges() const { return edges_; }

    const VertexAddress& canonical_address(VertexId v) const { return canonical_.at(v); }

    /// Top-level anchor; throws ValidationError when the role does not exist at this level.
    VertexId anchor(Anchor role) const;
    std::vector<std::pair<Anchor, VertexId>> anchors() const;

    /// Walks the copy tree; every alias of a glued vertex lands on the same id.
    VertexId resolve(const VertexAddress& addr) const;

    /// Every address naming v, sorted canonical-first.
    std::vector<VertexAddress> aliases(VertexId v) const;

    /// Sorted ids of all vertices inside the copy reached by `path`.
    std::vector<VertexId> copy_members(std::span<const Branch> path) const;

    std::vector<std::vector<VertexId>> adjacency() const;

private:
    friend LevelGraph build_graph(Family, int, const BuildOptions&);

    struct Copy {
        int level = 0;
        std::array<VertexId, 6> anchor{-1, -1, -1, -1, -1, -1};
        std::array<std::int32_t, 6> child{-1, -1, -1, -1, -1, -1};
    };

    std::int32_t find_copy(std::span<const Branch> path) const;
    void collect(std::int32_t node, std::vector<VertexId>& out) const;

    Family family_ = Family::laakso;
    int level_ = 0;
    std::vector<VertexAddress> canonical_;
    std::vector<Edge> edges_;
    std::vector<Copy> copies_;
};

/// Deterministic recursive construction. Ids follow a pre-order descent:
/// top ends first, then each copy's inner anchors, then children in branch order.
LevelGraph build_graph(Family family, int level, const BuildOptions& options = {});

/// Closed forms for the generated graphs.
std::int64_t expected_vertex_count(Family family, int level);
std::int64_t expected_edge_count(Family family, int level);

}  // namespace metembed
