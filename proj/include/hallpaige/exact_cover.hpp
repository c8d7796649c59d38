#pragma once

// Dancing-links exact cover (Knuth's Algorithm X) with index-based links.
// Column choice is minimum remaining candidates, ties to the lowest column
// index; rows are tried in insertion order, so runs are deterministic.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "hallpaige/error.hpp"

namespace hallpaige {

enum class CoverStatus { Found, NotFound, BudgetExhausted };

class ExactCover {
 public:
  using Index = std::uint32_t;

  explicit ExactCover(std::size_t columns) : columns_(columns) {
    // node 0 is the root, nodes 1..columns are column headers
    const std::size_t h = columns + 1;
    left_.resize(h);
    right_.resize(h);
    up_.resize(h);
    down_.resize(h);
    col_.resize(h);
    row_.assign(h, 0);
    size_.assign(h, 0);
    for (Index i = 0; i < h; ++i) {
      left_[i] = i == 0 ? static_cast<Index>(columns) : i - 1;
      right_[i] = i == columns ? 0 : i + 1;
      up_[i] = down_[i] = i;
      col_[i] = i;
    }
  }

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rows() const noexcept { return rows_; }

  /// Adds a row covering the given (0-based, distinct) columns; returns its id.
  std::size_t add_row(std::span<const Index> cols) {
    const auto r = static_cast<Index>(rows_++);
    Index first = 0;
    for (Index c : cols) {
      if (c >= columns_) fail(Errc::Internal, "column out of range");
      const Index head = c + 1;
      const auto x = static_cast<Index>(col_.size());
      col_.push_back(head);
      row_.push_back(r);
      up_.push_back(up_[head]);
      down_.push_back(head);
      down_[up_[head]] = x;
      up_[head] = x;
      ++size_[head];
      if (first == 0) {
        first = x;
        left_.push_back(x);
        right_.push_back(x);
      } else {
        left_.push_back(left_[first]);
        right_.push_back(first);
        right_[left_[first]] = x;
        left_[first] = x;
      }
      size_.push_back(0);
    }
    return r;
  }

  std::size_t add_row(std::initializer_list<Index> cols) {
    return add_row(std::span<const Index>(cols.begin(), cols.size()));
  }

  /// Visits exact covers until `visit` returns false, the search space is
  /// exhausted, or more than `budget` rows have been tried.
  CoverStatus search(const std::function<bool(const std::vector<std::size_t>&)>& visit,
                     std::uint64_t budget = std::numeric_limits<std::uint64_t>::max()) {
    nodes_ = 0;
    budget_ = budget;
    stopped_ = false;
    found_ = false;
    exhausted_ = false;
    solution_.clear();
    recurse(visit);
    if (exhausted_) return CoverStatus::BudgetExhausted;
    return found_ ? CoverStatus::Found : CoverStatus::NotFound;
  }

  /// First cover in search order, if any.
  CoverStatus first(std::vector<std::size_t>& out,
                    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max()) {
    return search(
        [&](const std::vector<std::size_t>& s) {
          out = s;
          return false;
        },
        budget);
  }

  /// Rows tried by the last search.
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void cover(Index c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (Index i = down_[c]; i != c; i = down_[i])
      for (Index j = right_[i]; j != i; j = right_[j]) {
        up_[down_[j]] = up_[j];
        down_[up_[j]] = down_[j];
        --size_[col_[j]];
      }
  }

  void uncover(Index c) {
    for (Index i = up_[c]; i != c; i = up_[i])
      for (Index j = left_[i]; j != i; j = left_[j]) {
        ++size_[col_[j]];
        up_[down_[j]] = j;
        down_[up_[j]] = j;
      }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  void recurse(const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (right_[0] == 0) {
      found_ = true;
      if (!visit(solution_)) stopped_ = true;
      return;
    }
    Index best = right_[0];
    for (Index c = right_[best]; c != 0; c = right_[c])
      if (size_[c] < size_[best]) best = c;
    if (size_[best] == 0) return;
    cover(best);
    for (Index r = down_[best]; r != best && !stopped_; r = down_[r]) {
      if (nodes_ == budget_) {
        exhausted_ = true;
        stopped_ = true;
        break;
      }
      ++nodes_;
      solution_.push_back(row_[r]);
      for (Index j = right_[r]; j != r; j = right_[j]) cover(col_[j]);
      recurse(visit);
      for (Index j = left_[r]; j != r; j = left_[j]) uncover(col_[j]);
      solution_.pop_back();
    }
    uncover(best);
  }

  std::size_t columns_;
  std::size_t rows_ = 0;
  std::vector<Index> left_, right_, up_, down_, col_, row_, size_;
  std::vector<std::size_t> solution_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;
  bool stopped_ = false;
  bool found_ = false;
  bool exhausted_ = false;
};

}  // namespace hallpaige
