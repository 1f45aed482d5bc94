#include "vcne/engine.hpp"

namespace vcne {

void PartialAccumulator::reset(std::size_t num_vertices, std::size_t width) {
  if (slot_of_.size() == num_vertices) {
    for (VertexId t : targets_) slot_of_[t] = npos;
  } else {
    slot_of_.assign(num_vertices, npos);
  }
  width_ = width;
  targets_.clear();
  sums_.clear();
  counts_.clear();
}

}  // namespace vcne
