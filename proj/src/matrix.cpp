#include "dmt/matrix.hpp"

#include <algorithm>
#include <unordered_set>

#include "dmt/error.hpp"

namespace dmt {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw DomainError(std::string("duplicate ") + axis + " label '" + label + "'");
    }
  }
}

std::optional<std::size_t> find_label(const std::vector<std::string>& labels,
                                      const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::vector<std::string> rows, std::vector<std::string> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(rows_.size() * cols_.size()) {
  require_unique(rows_, "row");
  require_unique(cols_, "column");
}

IntegerMatrix::IntegerMatrix(std::vector<std::string> rows, std::vector<std::string> cols,
                             std::vector<Integer> entries)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)) {
  require_unique(rows_, "row");
  require_unique(cols_, "column");
  if (entries_.size() != rows_.size() * cols_.size()) {
    throw DomainError("matrix entry count " + std::to_string(entries_.size()) + " != " +
                      std::to_string(rows_.size()) + "x" + std::to_string(cols_.size()));
  }
}

std::optional<std::size_t> IntegerMatrix::find_row(const std::string& label) const {
  return find_label(rows_, label);
}

std::optional<std::size_t> IntegerMatrix::find_col(const std::string& label) const {
  return find_label(cols_, label);
}

std::size_t IntegerMatrix::row_index(const std::string& label) const {
  if (auto i = find_row(label)) return *i;
  throw UnknownLabel("no row labeled '" + label + "'");
}

std::size_t IntegerMatrix::col_index(const std::string& label) const {
  if (auto j = find_col(label)) return *j;
  throw UnknownLabel("no column labeled '" + label + "'");
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < num_rows(); ++i) {
    for (std::size_t j = 0; j < num_cols(); ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

IntegerMatrix IntegerMatrix::without_row(std::size_t row) const {
  auto rows = rows_;
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(row));
  IntegerMatrix out(std::move(rows), cols_);
  for (std::size_t i = 0, r = 0; i < num_rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0; j < num_cols(); ++j) out.at(r, j) = at(i, j);
    ++r;
  }
  return out;
}

IntegerMatrix IntegerMatrix::without_col(std::size_t col) const {
  auto cols = cols_;
  cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(col));
  IntegerMatrix out(rows_, std::move(cols));
  for (std::size_t i = 0; i < num_rows(); ++i) {
    for (std::size_t j = 0, c = 0; j < num_cols(); ++j) {
      if (j == col) continue;
      out.at(i, c++) = at(i, j);
    }
  }
  return out;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.num_cols() != b.num_rows()) {
    throw DomainError("cannot multiply " + std::to_string(a.num_rows()) + "x" +
                      std::to_string(a.num_cols()) + " by " + std::to_string(b.num_rows()) +
                      "x" + std::to_string(b.num_cols()));
  }
  IntegerMatrix c(a.row_labels(), b.col_labels());
  for (std::size_t i = 0; i < a.num_rows(); ++i) {
    for (std::size_t k = 0; k < a.num_cols(); ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.num_cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

}  // namespace dmt
