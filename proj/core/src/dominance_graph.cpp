#include "flowvor/dominance_graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "flowvor/dominance.hpp"

namespace flowvor {

DominanceGraph::DominanceGraph(Point base, std::size_t capacity)
    : base_(base), neighbor_flags_(capacity) {
    if (capacity == 0) {
        throw std::invalid_argument("capacity must be positive");
    }
    vertices_.resize(capacity);
    for (Vertex& v : vertices_) {
        v.parents = Bitset(capacity);
        v.children = Bitset(capacity);
    }
    free_slots_.reserve(capacity);
    for (std::size_t id = capacity; id-- > 0;) {
        free_slots_.push_back(id);
    }
}

void DominanceGraph::require_occupied(std::size_t id) const {
    if (id >= vertices_.size() || !vertices_[id].occupied) {
        throw std::out_of_range("no vertex with this id");
    }
}

bool DominanceGraph::occupied(std::size_t id) const {
    return id < vertices_.size() && vertices_[id].occupied;
}

Point DominanceGraph::point(std::size_t id) const {
    require_occupied(id);
    return vertices_[id].pos;
}

bool DominanceGraph::is_neighbor(std::size_t id) const {
    require_occupied(id);
    return neighbor_flags_.test(id);
}

std::size_t DominanceGraph::insert(Point p) {
    if (free_slots_.empty()) {
        throw std::length_error("capacity exceeded");
    }
    const std::size_t id = free_slots_.back();
    insert_at(id, p);
    return id;
}

void DominanceGraph::insert_at(std::size_t id, Point p) {
    if (id >= vertices_.size()) {
        throw std::out_of_range("id beyond capacity");
    }
    if (vertices_[id].occupied) {
        throw std::invalid_argument("slot already occupied");
    }
    if (!is_finite(p)) {
        throw std::invalid_argument("non-finite point");
    }
    // Validate fully before touching any state.
    if (p == base_ || (p.y == base_.y && p.x <= base_.x)) {
        throw AssumptionError("point on or upstream of the base streamline");
    }
    for (const Vertex& v : vertices_) {
        if (v.occupied && v.pos == p) {
            throw AssumptionError("duplicate point");
        }
    }

    Vertex& fresh = vertices_[id];
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        Vertex& other = vertices_[i];
        if (!other.occupied) {
            continue;
        }
        const bool other_dominates = dominates(base_, other.pos, p);
        const bool fresh_dominates = dominates(base_, p, other.pos);
        dominance_tests_ += 2;
        if (other_dominates) {
            fresh.parents.set(i);
            other.children.set(id);
            ++fresh.parent_count;
        }
        if (fresh_dominates) {
            other.parents.set(id);
            fresh.children.set(i);
            ++other.parent_count;
            neighbor_flags_.reset(i);
        }
    }
    fresh.pos = p;
    fresh.occupied = true;
    neighbor_flags_.assign(id, fresh.parent_count == 0);
    ++occupied_count_;

    const auto it = std::find(free_slots_.begin(), free_slots_.end(), id);
    if (it != free_slots_.end()) {
        free_slots_.erase(it);
    }
}

void DominanceGraph::erase(std::size_t id) {
    require_occupied(id);
    Vertex& gone = vertices_[id];
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i == id || !vertices_[i].occupied) {
            continue;
        }
        Vertex& other = vertices_[i];
        if (gone.parents.test(i)) {
            other.children.reset(id);
        }
        if (gone.children.test(i)) {
            other.parents.reset(id);
            --other.parent_count;
        }
        if (other.parent_count == 0) {
            neighbor_flags_.set(i);
        }
    }
    gone.parents.clear();
    gone.children.clear();
    gone.parent_count = 0;
    gone.occupied = false;
    neighbor_flags_.reset(id);
    --occupied_count_;

    free_slots_.push_back(id);
    std::sort(free_slots_.begin(), free_slots_.end(), std::greater<>());
}

std::vector<std::size_t> DominanceGraph::neighbors() const {
    std::vector<std::size_t> out;
    for (std::size_t id = 0; id < vertices_.size(); ++id) {
        if (vertices_[id].occupied && neighbor_flags_.test(id)) {
            out.push_back(id);
        }
    }
    return out;
}

std::vector<std::size_t> DominanceGraph::occupied_ids() const {
    std::vector<std::size_t> out;
    for (std::size_t id = 0; id < vertices_.size(); ++id) {
        if (vertices_[id].occupied) {
            out.push_back(id);
        }
    }
    return out;
}

GraphVerifyReport DominanceGraph::verify() const {
    std::ostringstream msg;
    const auto fail = [&msg](auto&&... parts) {
        (msg << ... << parts);
        return GraphVerifyReport{false, msg.str()};
    };

    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vertex& v = vertices_[i];
        if (!v.occupied) {
            if (v.parents.count() != 0 || v.children.count() != 0 ||
                v.parent_count != 0) {
                return fail("free slot ", i, " carries stale flags");
            }
            if (neighbor_flags_.test(i)) {
                return fail("free slot ", i, " flagged as neighbor");
            }
            continue;
        }
        std::size_t in_degree = 0;
        for (std::size_t j = 0; j < vertices_.size(); ++j) {
            const bool parent_bit = v.parents.test(j);
            const bool child_bit = v.children.test(j);
            if (j == i) {
                if (parent_bit || child_bit) {
                    return fail("vertex ", i, " linked to itself");
                }
                continue;
            }
            if (!vertices_[j].occupied) {
                if (parent_bit || child_bit) {
                    return fail("vertex ", i, " references free slot ", j);
                }
                continue;
            }
            if (parent_bit != vertices_[j].children.test(i)) {
                return fail("parent/child mirror broken between ", j, " and ", i);
            }
            const bool expected = dominates(base_, vertices_[j].pos, v.pos);
            if (parent_bit != expected) {
                return fail("edge flag ", j, " -> ", i,
                            " disagrees with the dominance test");
            }
            if (parent_bit) {
                ++in_degree;
            }
        }
        if (in_degree != v.parent_count) {
            return fail("vertex ", i, " in-degree counter is ", v.parent_count,
                        ", flags say ", in_degree);
        }
        if (neighbor_flags_.test(i) != (v.parent_count == 0)) {
            return fail("vertex ", i, " neighbor flag disagrees with in-degree");
        }
    }

    // Kahn peeling; leftovers mean a cycle.
    std::vector<std::size_t> degree(vertices_.size(), 0);
    std::vector<std::size_t> queue;
    std::size_t seen = 0;
    std::size_t total = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertices_[i].occupied) {
            continue;
        }
        ++total;
        degree[i] = vertices_[i].parent_count;
        if (degree[i] == 0) {
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const std::size_t i = queue.back();
        queue.pop_back();
        ++seen;
        for (std::size_t j = 0; j < vertices_.size(); ++j) {
            if (vertices_[i].children.test(j) && --degree[j] == 0) {
                queue.push_back(j);
            }
        }
    }
    if (seen != total) {
        return fail("dominance relation contains a cycle");
    }
    return {};
}

void DominanceGraph::TestAccess::flip_child_flag(DominanceGraph& g, std::size_t id,
                                                 std::size_t child) {
    g.vertices_[id].children.assign(child, !g.vertices_[id].children.test(child));
}

void DominanceGraph::TestAccess::flip_parent_flag(DominanceGraph& g, std::size_t id,
                                                  std::size_t parent) {
    g.vertices_[id].parents.assign(parent, !g.vertices_[id].parents.test(parent));
}

void DominanceGraph::TestAccess::set_parent_count(DominanceGraph& g, std::size_t id,
                                                  std::size_t value) {
    g.vertices_[id].parent_count = value;
}

}  // namespace flowvor
