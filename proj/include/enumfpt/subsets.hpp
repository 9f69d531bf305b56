#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace enumfpt {

// Walks the subsets of {0, ..., n-1} with at most `max_size` elements in
// lexicographic (depth-first) order: {}, {0}, {0,1}, {0,1,2}, ..., {0,2}, ...
// Constant amortized work per subset, O(max_size) worst case.
class SubsetCursor {
 public:
  SubsetCursor(std::size_t n, std::size_t max_size) : n_(n), max_size_(max_size) {}

  // Index set of the next subset, or nullopt when done.
  std::optional<std::vector<std::size_t>> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      return current_;
    }
    std::size_t after = current_.empty() ? 0 : current_.back() + 1;
    if (current_.size() < max_size_ && after < n_) {
      current_.push_back(after);
      return current_;
    }
    while (!current_.empty()) {
      std::size_t last = current_.back();
      current_.pop_back();
      if (last + 1 < n_) {
        current_.push_back(last + 1);
        return current_;
      }
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  std::size_t n_;
  std::size_t max_size_;
  std::vector<std::size_t> current_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace enumfpt
