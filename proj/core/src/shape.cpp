#include "cce/shape.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cce/errors.hpp"

namespace cce {

ComponentSpec::ComponentSpec(std::vector<ComponentItem> items) : items_(std::move(items)) {
    for (const ComponentItem& item : items_) {
        if (item.kind == ComponentKind::Path && item.size < 1)
            throw BadParameters("path size must be at least 1");
        if (item.kind == ComponentKind::Cycle && item.size < 3)
            throw BadParameters("cycle size must be at least 3");
    }
    std::sort(items_.begin(), items_.end());
}

int ComponentSpec::total_vertices() const {
    int total = 0;
    for (const ComponentItem& item : items_) total += item.size;
    return total;
}

int ComponentSpec::path_count() const {
    return static_cast<int>(std::count_if(items_.begin(), items_.end(), [](const auto& item) {
        return item.kind == ComponentKind::Path;
    }));
}

int ComponentSpec::cycle_count() const { return component_count() - path_count(); }

std::vector<int> ComponentSpec::path_sizes() const {
    std::vector<int> sizes;
    for (const ComponentItem& item : items_)
        if (item.kind == ComponentKind::Path) sizes.push_back(item.size);
    return sizes;
}

std::vector<int> ComponentSpec::cycle_sizes() const {
    std::vector<int> sizes;
    for (const ComponentItem& item : items_)
        if (item.kind == ComponentKind::Cycle) sizes.push_back(item.size);
    return sizes;
}

std::string ComponentSpec::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < items_.size();) {
        std::size_t j = i;
        while (j < items_.size() && items_[j] == items_[i]) ++j;
        if (i > 0) out << " + ";
        if (j - i > 1) out << (j - i) << 'x';
        out << (items_[i].kind == ComponentKind::Cycle ? 'C' : 'P') << items_[i].size;
        i = j;
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& out, const ComponentSpec& spec) { return out << spec.str(); }

std::vector<ClassifiedComponent> classify_components(const UndirectedGraph& g) {
    const int n = g.order();
    std::vector<int> comp(n + 1, -1);
    std::vector<ClassifiedComponent> result;
    for (Vertex root = 1; root <= n; ++root) {
        if (comp[root] >= 0) continue;
        const int id = static_cast<int>(result.size());
        std::vector<Vertex> members{root};
        comp[root] = id;
        for (std::size_t k = 0; k < members.size(); ++k)
            for (Vertex w : g.neighbors(members[k]))
                if (comp[w] < 0) {
                    comp[w] = id;
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());

        std::size_t degree_sum = 0;
        bool low_degree = true;
        for (Vertex v : members) {
            degree_sum += g.neighbors(v).size();
            low_degree = low_degree && g.degree(v) <= 2;
        }
        const std::size_t edges = degree_sum / 2;

        ClassifiedComponent c;
        if (!low_degree || (edges != members.size() - 1 && edges != members.size())) {
            c.kind = ShapeKind::Other;
            c.vertices = std::move(members);
            result.push_back(std::move(c));
            continue;
        }

        const bool cycle = edges == members.size();
        Vertex start = members.front();
        if (!cycle)
            start = *std::find_if(members.begin(), members.end(),
                                  [&](Vertex v) { return g.degree(v) <= 1; });
        c.kind = cycle ? ShapeKind::Cycle : ShapeKind::Path;
        c.vertices.push_back(start);
        Vertex prev = 0;
        Vertex cur = start;
        while (c.vertices.size() < members.size()) {
            // Neighbors are ascending, so from the start of a cycle this takes
            // the smaller neighbor first.
            Vertex next = 0;
            for (Vertex w : g.neighbors(cur))
                if (w != prev) {
                    next = w;
                    break;
                }
            c.vertices.push_back(next);
            prev = cur;
            cur = next;
        }
        result.push_back(std::move(c));
    }
    return result;
}

ComponentSpec to_spec(const UndirectedGraph& g) {
    std::vector<ComponentItem> items;
    for (const ClassifiedComponent& c : classify_components(g)) {
        const int size = static_cast<int>(c.vertices.size());
        switch (c.kind) {
            case ShapeKind::Path:
                items.push_back({ComponentKind::Path, size});
                break;
            case ShapeKind::Cycle:
                items.push_back({ComponentKind::Cycle, size});
                break;
            case ShapeKind::Other:
                throw NotPathsAndCycles("component containing vertex " +
                                            std::to_string(c.vertices.front()) +
                                            " is neither a path nor a cycle",
                                        c.vertices);
        }
    }
    return ComponentSpec(std::move(items));
}

bool spec_equal(const UndirectedGraph& g, const ComponentSpec& spec) {
    try {
        return to_spec(g) == spec;
    } catch (const NotPathsAndCycles&) {
        return false;
    }
}

namespace {

void require_degree_two(const UndirectedGraph& g) {
    for (Vertex v = 1; v <= g.order(); ++v)
        if (g.degree(v) > 2)
            throw DegreeTooHigh("vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v)));
}

}  // namespace

bool has_hole_bounded_degree(const UndirectedGraph& g) {
    require_degree_two(g);
    for (const ClassifiedComponent& c : classify_components(g))
        if (c.kind == ShapeKind::Cycle && c.vertices.size() >= 4) return true;
    return false;
}

bool is_interval_bounded_degree(const UndirectedGraph& g) { return !has_hole_bounded_degree(g); }

std::vector<ComponentSpec> all_component_specs(int max_total) {
    // Kinds in canonical order: C3..C_max, then P1..P_max; items are chosen
    // in nondecreasing kind order so each multiset appears once.
    std::vector<ComponentItem> kinds;
    for (int m = 3; m <= max_total; ++m) kinds.push_back({ComponentKind::Cycle, m});
    for (int m = 1; m <= max_total; ++m) kinds.push_back({ComponentKind::Path, m});

    std::vector<std::vector<ComponentSpec>> by_total(std::max(max_total, 0) + 1);
    std::vector<ComponentItem> items;
    auto extend = [&](auto&& self, std::size_t first_kind, int total) -> void {
        if (!items.empty()) by_total[total].push_back(ComponentSpec(items));
        for (std::size_t k = first_kind; k < kinds.size(); ++k) {
            if (total + kinds[k].size > max_total) continue;
            items.push_back(kinds[k]);
            self(self, k, total + kinds[k].size);
            items.pop_back();
        }
    };
    extend(extend, 0, 0);

    std::vector<ComponentSpec> specs;
    for (auto& group : by_total) {
        std::sort(group.begin(), group.end(),
                  [](const ComponentSpec& a, const ComponentSpec& b) { return a.items() < b.items(); });
        for (auto& spec : group) specs.push_back(std::move(spec));
    }
    return specs;
}

}  // namespace cce
