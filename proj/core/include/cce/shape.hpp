#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cce/graph.hpp"

namespace cce {

// Cycles sort before paths so canonical text reads like "C3 + 6xP1".
enum class ComponentKind { Cycle, Path };

struct ComponentItem {
    ComponentKind kind = ComponentKind::Path;
    int size = 1;  // vertex count: P_m has m vertices, C_m has m >= 3 vertices

    friend auto operator<=>(const ComponentItem&, const ComponentItem&) = default;
};

/// Multiset of path and cycle components, kept in canonical (kind, size) order.
class ComponentSpec {
public:
    ComponentSpec() = default;
    /// Throws BadParameters for path size < 1 or cycle size < 3.
    explicit ComponentSpec(std::vector<ComponentItem> items);

    static ComponentSpec parse(std::string_view text);

    const std::vector<ComponentItem>& items() const noexcept { return items_; }
    bool empty() const noexcept { return items_.empty(); }

    int total_vertices() const;
    int component_count() const { return static_cast<int>(items_.size()); }
    int path_count() const;
    int cycle_count() const;
    /// Sizes of the path items, ascending.
    std::vector<int> path_sizes() const;
    /// Sizes of the cycle items, ascending.
    std::vector<int> cycle_sizes() const;

    /// Canonical text, e.g. "C3 + 6xP1". The empty spec prints as "".
    std::string str() const;

    friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;

private:
    std::vector<ComponentItem> items_;
};

std::ostream& operator<<(std::ostream& out, const ComponentSpec& spec);

/// Every nonempty spec with total_vertices() <= max_total, each exactly once,
/// ordered by total then by item list.
std::vector<ComponentSpec> all_component_specs(int max_total);

enum class ShapeKind { Path, Cycle, Other };

struct ClassifiedComponent {
    std::vector<Vertex> vertices;  // traversal order for Path/Cycle, ascending for Other
    ShapeKind kind = ShapeKind::Other;
};

/// Components ordered by smallest vertex. A path is listed from its smaller
/// end; a cycle starts at its smallest vertex and continues toward the smaller
/// of that vertex's two neighbors.
std::vector<ClassifiedComponent> classify_components(const UndirectedGraph& g);

/// Throws NotPathsAndCycles carrying the first offending component.
ComponentSpec to_spec(const UndirectedGraph& g);

/// Isomorphism test within the class of disjoint unions of paths and cycles.
bool spec_equal(const UndirectedGraph& g, const ComponentSpec& spec);

/// Max degree must be <= 2 (DegreeTooHigh otherwise). Interval iff every
/// component is a path or a triangle.
bool is_interval_bounded_degree(const UndirectedGraph& g);

/// Max degree must be <= 2. True iff some component is a cycle of length >= 4.
bool has_hole_bounded_degree(const UndirectedGraph& g);

}  // namespace cce
