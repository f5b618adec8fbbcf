#pragma once

#include <optional>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

enum class Owner { I, F };
enum class ComponentKind { EvenPath, OddPath, Cycle };

const char* component_kind_name(ComponentKind kind);

struct Component {
    std::vector<EdgeIndex> edges; // traversal order e1..es; consecutive edges intersect
    std::vector<Owner> owners;    // aligned with edges; alternates along the component
    ComponentKind kind;
    Vertex min_vertex; // min of V(Q)
};

struct ComponentDecomposition {
    std::vector<Component> components;  // ordered by min_vertex ascending
    std::vector<EdgeIndex> difference;  // I xor F, sorted
};

// Partitions I xor F into loose paths and cycles per the structure theorem for
// comb-free hypergraphs. DegreeViolation when an edge of I xor F meets >= 3
// others (a 3-comb is present).
ComponentDecomposition decompose(const Hypergraph& h, const Matching& i_matching,
                                 const Matching& f_matching);

// Ownerless variant over an arbitrary edge set, used by the encoding decoder.
// nullopt when the set is not a disjoint union of loose paths and even cycles
// (so it cannot equal I xor F for any pair of matchings).
struct RawComponent {
    std::vector<EdgeIndex> edges;
    ComponentKind kind;
    Vertex min_vertex;
};

std::optional<std::vector<RawComponent>> decompose_edge_set(const Hypergraph& h,
                                                            std::vector<EdgeIndex> difference);

} // namespace hypermatch
