#include "gqs/super_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gqs {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
    case Parity::Zero: return "zero";
  }
  return "?";
}

SuperMatrix::SuperMatrix(int size) : size_(size) {
  if (size <= 0) throw std::invalid_argument("matrix size must be positive");
}

SuperMatrix SuperMatrix::unit(int size, int row, int col, const ExactScalar& coeff) {
  SuperMatrix m(size);
  m.set(row, col, coeff);
  return m;
}

SuperMatrix SuperMatrix::identity(int size) {
  SuperMatrix m(size);
  for (int j = 1; j <= size; ++j) m.set(j, j, 1);
  return m;
}

void SuperMatrix::check_index(int row, int col) const {
  if (row < 1 || row > size_ || col < 1 || col > size_)
    throw std::out_of_range("matrix index (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside size " + std::to_string(size_));
}

ExactScalar SuperMatrix::at(int row, int col) const {
  check_index(row, col);
  auto it = entries_.find({row, col});
  return it == entries_.end() ? ExactScalar() : it->second;
}

void SuperMatrix::set(int row, int col, const ExactScalar& value) {
  check_index(row, col);
  if (value.is_zero())
    entries_.erase({row, col});
  else
    entries_[{row, col}] = value;
}

void SuperMatrix::add_to(int row, int col, const ExactScalar& value) {
  if (value.is_zero()) return;
  check_index(row, col);
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  if (o.size_ != size_) throw std::invalid_argument("size mismatch in matrix sum");
  for (const auto& [k, v] : o.entries_) add_to(k.first, k.second, v);
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  if (o.size_ != size_) throw std::invalid_argument("size mismatch in matrix difference");
  for (const auto& [k, v] : o.entries_) add_to(k.first, k.second, -v);
  return *this;
}

SuperMatrix& SuperMatrix::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

SuperMatrix SuperMatrix::operator-() const {
  SuperMatrix r = *this;
  for (auto& [k, v] : r.entries_) v = -v;
  return r;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("size mismatch in matrix product");
  // Row index of b's entries, so each entry of a meets only the matching row.
  std::map<int, std::vector<std::pair<int, const ExactScalar*>>> rows;
  for (const auto& [k, v] : b.entries_) rows[k.first].emplace_back(k.second, &v);
  SuperMatrix r(a.size_);
  for (const auto& [k, v] : a.entries_) {
    auto it = rows.find(k.second);
    if (it == rows.end()) continue;
    for (const auto& [col, w] : it->second) r.add_to(k.first, col, v * *w);
  }
  return r;
}

SuperMatrix SuperMatrix::transpose() const {
  SuperMatrix r(size_);
  for (const auto& [k, v] : entries_) r.entries_.emplace(Key{k.second, k.first}, v);
  return r;
}

ExactScalar SuperMatrix::supertrace(const ParityLayout& theta) const {
  ExactScalar s;
  for (const auto& [k, v] : entries_) {
    if (k.first != k.second) continue;
    if (theta.at(k.first - 1) == 0)
      s += v;
    else
      s -= v;
  }
  return s;
}

Parity SuperMatrix::parity(const ParityLayout& theta) const {
  if (static_cast<int>(theta.size()) != size_) throw std::invalid_argument("parity layout size mismatch");
  if (entries_.empty()) return Parity::Zero;
  int first = -1;
  for (const auto& [k, v] : entries_) {
    int d = (theta[k.first - 1] + theta[k.second - 1]) % 2;
    if (first < 0)
      first = d;
    else if (d != first)
      return Parity::Mixed;
  }
  return first == 0 ? Parity::Even : Parity::Odd;
}

std::string SuperMatrix::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : entries_) {
    std::string c = v.str();
    bool neg = !c.empty() && c[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    std::string mag = neg ? c.substr(1) : c;
    bool compound = mag.find_first_of("+-", 1) != std::string::npos;
    if (compound) mag = "(" + mag + ")";
    if (mag != "1") os << mag << "*";
    os << "e" << k.first << "," << k.second;
    first = false;
  }
  return os.str();
}

SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y, int deg_x, int deg_y) {
  if (x.size() != y.size()) throw std::invalid_argument("size mismatch in superbracket");
  SuperMatrix r = x * y;
  if ((deg_x & 1) && (deg_y & 1))
    r += y * x;
  else
    r -= y * x;
  return r;
}

SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y, const ParityLayout& theta) {
  if (x.size() != y.size()) throw std::invalid_argument("size mismatch in superbracket");
  Parity px = x.parity(theta);
  Parity py = y.parity(theta);
  if (px == Parity::Mixed || py == Parity::Mixed)
    throw std::invalid_argument("superbracket of a non-homogeneous element");
  if (px == Parity::Zero || py == Parity::Zero) return SuperMatrix(x.size());
  return superbracket(x, y, px == Parity::Odd ? 1 : 0, py == Parity::Odd ? 1 : 0);
}

}  // namespace gqs
