#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flowvor/bitset.hpp"
#include "flowvor/geometry.hpp"

namespace flowvor {

struct GraphVerifyReport {
    bool ok = true;
    std::string detail;
};

/// Incrementally maintained dominance relation over a pool of generators,
/// kept as parent/child bit flags per vertex. A vertex is a neighbor
/// candidate exactly when it has no parent (in-degree zero), so the
/// candidate set of the base generator is read off a flag vector without
/// recomputation.
///
/// Capacity is fixed at construction. Slot indices double as external IDs;
/// an ID stays valid until its vertex is erased, after which the slot is
/// free for reuse. Inserting costs exactly two dominance tests per occupied
/// vertex; erasing costs none.
class DominanceGraph {
  public:
    DominanceGraph(Point base, std::size_t capacity);

    /// Inserts into the lowest free slot and returns its ID.
    std::size_t insert(Point p);

    /// Inserts into the designated free slot.
    void insert_at(std::size_t id, Point p);

    void erase(std::size_t id);

    Point base() const { return base_; }
    std::size_t capacity() const { return vertices_.size(); }
    std::size_t size() const { return occupied_count_; }
    bool occupied(std::size_t id) const;
    Point point(std::size_t id) const;

    bool is_neighbor(std::size_t id) const;
    /// IDs of all zero-in-degree vertices, ascending.
    std::vector<std::size_t> neighbors() const;
    std::vector<std::size_t> occupied_ids() const;

    /// Cumulative dominance tests spent by insertions.
    std::uint64_t dominance_tests() const { return dominance_tests_; }

    /// Full consistency audit: every flag pair against a fresh dominance
    /// evaluation, parent/child mirroring, in-degree counters, the neighbor
    /// flag criterion, no references to free slots, and acyclicity. Reports
    /// the first violation found.
    GraphVerifyReport verify() const;

    struct TestAccess;

  private:
    struct Vertex {
        Point pos;
        Bitset parents;   // parents.test(i): vertex i dominates this vertex
        Bitset children;  // children.test(i): this vertex dominates vertex i
        std::size_t parent_count = 0;
        bool occupied = false;
    };

    void require_occupied(std::size_t id) const;

    Point base_;
    std::vector<Vertex> vertices_;
    Bitset neighbor_flags_;
    std::vector<std::size_t> free_slots_;  // kept sorted descending
    std::size_t occupied_count_ = 0;
    std::uint64_t dominance_tests_ = 0;
};

/// Test-only backdoor for corrupting internal state to exercise verify().
struct DominanceGraph::TestAccess {
    static void flip_child_flag(DominanceGraph& g, std::size_t id, std::size_t child);
    static void flip_parent_flag(DominanceGraph& g, std::size_t id, std::size_t parent);
    static void set_parent_count(DominanceGraph& g, std::size_t id, std::size_t value);
};

}  // namespace flowvor
