#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "sle/graph.hpp"

namespace sle {

class SpineOrder {
  public:
    SpineOrder() = default;
    explicit SpineOrder(std::vector<VertexId> seq);

    const std::vector<VertexId>& sequence() const { return seq_; }
    std::size_t size() const { return seq_.size(); }
    bool contains(VertexId v) const;
    // position in the sequence; throws InputError for vertices not on the spine
    int rank(VertexId v) const;
    VertexId at(std::size_t pos) const { return seq_[pos]; }

  private:
    std::vector<VertexId> seq_;
    std::vector<int> rank_;
};

using PageAssignment = std::unordered_map<Edge, int, EdgeHash>;

struct Layout {
    SpineOrder spine;
    PageAssignment pages;  // page indices are 1-based
    int ell = 1;

    int page_of(const Edge& e) const;  // throws InputError if unassigned
};

}  // namespace sle
