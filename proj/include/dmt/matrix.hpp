#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dmt/integer.hpp"

namespace dmt {

/// Dense exact-integer matrix whose rows and columns carry unique labels
/// (simplex names such as "[0,2]" or fixture names such as "eta_8").
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::vector<std::string> rows, std::vector<std::string> cols);
  IntegerMatrix(std::vector<std::string> rows, std::vector<std::string> cols,
                std::vector<Integer> entries);

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::vector<std::string>& row_labels() const { return rows_; }
  const std::vector<std::string>& col_labels() const { return cols_; }
  const std::vector<Integer>& entries() const { return entries_; }

  Integer& at(std::size_t row, std::size_t col) { return entries_[row * cols_.size() + col]; }
  const Integer& at(std::size_t row, std::size_t col) const {
    return entries_[row * cols_.size() + col];
  }

  std::optional<std::size_t> find_row(const std::string& label) const;
  std::optional<std::size_t> find_col(const std::string& label) const;
  /// Throws UnknownLabel when absent.
  std::size_t row_index(const std::string& label) const;
  std::size_t col_index(const std::string& label) const;

  IntegerMatrix transpose() const;
  IntegerMatrix without_row(std::size_t row) const;
  IntegerMatrix without_col(std::size_t col) const;

  bool is_zero() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<Integer> entries_;
};

/// Product a·b. Requires a.num_cols() == b.num_rows(); the result takes a's row
/// labels and b's column labels.
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace dmt
