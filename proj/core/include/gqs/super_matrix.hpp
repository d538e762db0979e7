#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gqs/exact_scalar.hpp"

namespace gqs {

enum class Parity { Even, Odd, Mixed, Zero };

std::string to_string(Parity p);

// theta[j-1] is the Z2 degree of row/column j.
using ParityLayout = std::vector<int>;

// Square sparse matrix over Q(sqrt2). Indices are 1-based, matching the
// e_{jk} notation of the matrix realizations. Zero entries are never stored.
class SuperMatrix {
 public:
  using Key = std::pair<int, int>;
  using Entries = std::map<Key, ExactScalar>;

  SuperMatrix() = default;
  explicit SuperMatrix(int size);

  static SuperMatrix unit(int size, int row, int col, const ExactScalar& coeff = 1);
  static SuperMatrix identity(int size);

  int size() const { return size_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  ExactScalar at(int row, int col) const;

  void set(int row, int col, const ExactScalar& value);
  void add_to(int row, int col, const ExactScalar& value);

  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  SuperMatrix& operator*=(const ExactScalar& c);
  SuperMatrix operator-() const;

  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(SuperMatrix a, const ExactScalar& c) { return a *= c; }
  friend SuperMatrix operator*(const ExactScalar& c, SuperMatrix a) { return a *= c; }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

  SuperMatrix transpose() const;
  ExactScalar supertrace(const ParityLayout& theta) const;
  Parity parity(const ParityLayout& theta) const;

  std::string str() const;

 private:
  void check_index(int row, int col) const;

  int size_ = 0;
  Entries entries_;
};

// xy - (-1)^{deg_x deg_y} yx.
SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y, int deg_x, int deg_y);
// Degrees read from the layout; throws on mixed parity. Zero inputs give zero.
SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y, const ParityLayout& theta);

}  // namespace gqs
