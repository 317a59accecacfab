#pragma once

#include <cstdint>
#include <vector>

namespace cxb {

// Dense integer matrix, row-major. Smith normal form is computed over
// arbitrary-precision integers internally; entries at the API are int64.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& at(int i, int j) { return a_[(size_t)i * cols_ + j]; }
  long long at(int i, int j) const { return a_[(size_t)i * cols_ + j]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<long long> a_;
};

// Smith normal form: diagonal, entries nonnegative, each dividing the next,
// equivalent to the input under unimodular row/column operations.
IntMatrix smith_normal_form(const IntMatrix& m);

// Diagonal of the Smith form, without trailing zeros stripped.
std::vector<long long> smith_diagonal(const IntMatrix& m);

}  // namespace cxb
