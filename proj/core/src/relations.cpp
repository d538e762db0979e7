#include "gqs/relations.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gqs {

namespace {

std::string latex_base(const std::string& label) {
  auto pos = label.find('_');
  if (pos == std::string::npos) return label;
  return label.substr(0, pos) + "_{" + label.substr(pos + 1) + "}";
}

// Appends "c·symbol" to a running sum; `first` tracks the leading sign.
void append_term(std::ostringstream& out, const ExactScalar& c, const std::string& symbol, bool& first, bool latex) {
  ExactScalar mag = c;
  bool negative = false;
  // Sign by the rational part, or the surd part when the rational part is 0.
  if (c.rat() < 0 || (c.rat() == 0 && c.surd() < 0)) {
    negative = true;
    mag = -c;
  }
  if (first)
    out << (negative ? "-" : "");
  else
    out << (negative ? " - " : " + ");
  first = false;
  if (!(mag == ExactScalar(1))) {
    std::string s = latex ? mag.latex() : mag.str();
    if (!mag.is_rational() && mag.rat() != 0) s = "(" + s + ")";
    out << s << (latex ? "\\," : " ");
  }
  out << symbol;
}

}  // namespace

std::string CaoSet::op_name(int a) const { return pairs[a / 2].label + (a % 2 ? "^+" : "^-"); }

std::string CaoSet::op_latex(int a) const { return latex_base(pairs[a / 2].label) + (a % 2 ? "^{+}" : "^{-}"); }

bool CaoSet::all_odd() const {
  for (const auto& p : pairs)
    if (p.parity != 1) return false;
  return true;
}

CaoSet cao_set(const AlgebraModel& model, const Grading& grading) {
  CaoSet caos;
  int k = 0;
  for (int i : grading.subspace(-1)) {
    ScaledBasis w = model.omega(i);
    CaoPair p;
    p.label = "x_" + std::to_string(++k);
    p.minus = model.basis_matrix(i);
    p.plus = model.basis_matrix(w.index) * w.scale;
    p.parity = model.basis_parity(i);
    p.minus_index = i;
    p.plus_index = w.index;
    caos.pairs.push_back(std::move(p));
  }
  return caos;
}

RelationSet generate_relations(const CaoSet& caos) {
  RelationSet r;
  r.N = caos.N();
  const int ops = caos.op_count();
  std::vector<SuperMatrix> brackets;
  for (int a = 0; a < ops; ++a)
    for (int b = a; b < ops; ++b) {
      r.pair_symbols.emplace_back(a, b);
      brackets.push_back(superbracket(caos.op(a), caos.op(b), caos.op_parity(a), caos.op_parity(b)));
    }
  r.quadratic = brackets.empty() ? std::vector<std::vector<ExactScalar>>{} : nullspace(brackets);

  SpanSolver span;
  for (int a = 0; a < ops; ++a)
    if (!span.add(caos.op(a))) throw std::logic_error("CAO operators are linearly dependent");
  for (std::size_t s = 0; s < r.pair_symbols.size(); ++s) {
    auto [a, b] = r.pair_symbols[s];
    const int deg_ab = (caos.op_parity(a) + caos.op_parity(b)) % 2;
    for (int c = 0; c < ops; ++c) {
      SuperMatrix t = superbracket(brackets[s], caos.op(c), deg_ab, caos.op_parity(c));
      BasisExpansion e = span.express(t);
      if (!e.residual_zero)
        throw std::logic_error("triple bracket [[[[" + caos.op_name(a) + "," + caos.op_name(b) + "]]," +
                               caos.op_name(c) + "]] is not a combination of the CAOs");
      r.triple.emplace(TripleKey{a, b, c}, std::move(e));
    }
  }
  return r;
}

bool generation_check(const AlgebraModel& model, const CaoSet& caos) {
  SpanSolver span;
  const int ops = caos.op_count();
  for (int a = 0; a < ops; ++a) span.add(caos.op(a));
  for (int a = 0; a < ops; ++a)
    for (int b = a; b < ops; ++b)
      span.add(superbracket(caos.op(a), caos.op(b), caos.op_parity(a), caos.op_parity(b)));
  return static_cast<int>(span.rank()) == model.dimension();
}

std::uint64_t relation_digest(const RelationSet& relations) {
  std::ostringstream out;
  out << "N=" << relations.N << "\n";
  for (const auto& row : relations.quadratic) {
    out << "Q";
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero()) out << " " << i << ":" << row[i].str();
    out << "\n";
  }
  for (const auto& [key, e] : relations.triple) {
    out << "T " << key.a << " " << key.b << " " << key.c;
    for (const auto& [l, c] : e.coefficients) out << " " << l << ":" << c.str();
    out << "\n";
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : out.str()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

namespace {

std::string render(const RelationSet& r, const CaoSet& caos, bool latex) {
  auto name = [&](int a) { return latex ? caos.op_latex(a) : caos.op_name(a); };
  auto pair = [&](int a, int b) {
    return latex ? "[\\![ " + name(a) + ", " + name(b) + " ]\\!]" : "[[" + name(a) + ", " + name(b) + "]]";
  };
  const std::string eol = latex ? " \\\\\n" : "\n";
  std::ostringstream out;
  if (latex) out << "\\begin{align*}\n";
  for (const auto& row : r.quadratic) {
    bool first = true;
    for (std::size_t s = 0; s < row.size(); ++s)
      if (!row[s].is_zero()) append_term(out, row[s], pair(r.pair_symbols[s].first, r.pair_symbols[s].second), first, latex);
    out << (latex ? " &= 0" : " = 0") << eol;
  }
  for (const auto& [key, e] : r.triple) {
    if (latex)
      out << "[\\![ " << pair(key.a, key.b) << ", " << name(key.c) << " ]\\!] &= ";
    else
      out << "[[" << pair(key.a, key.b) << ", " << name(key.c) << "]] = ";
    bool first = true;
    for (const auto& [l, c] : e.coefficients) append_term(out, c, name(l), first, latex);
    if (first) out << "0";
    out << eol;
  }
  if (latex) out << "\\end{align*}\n";
  return out.str();
}

}  // namespace

std::string relations_text(const RelationSet& relations, const CaoSet& caos) { return render(relations, caos, false); }

std::string relations_latex(const RelationSet& relations, const CaoSet& caos) { return render(relations, caos, true); }

}  // namespace gqs
