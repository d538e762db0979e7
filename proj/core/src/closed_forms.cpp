#include "gqs/closed_forms.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace gqs {

namespace {

int sign_of(long exponent) { return exponent % 2 == 0 ? 1 : -1; }
int delta(long a, long b) { return a == b ? 1 : 0; }

SuperMatrix E(int size, int j, int k, const ExactScalar& c = 1) { return SuperMatrix::unit(size, j, k, c); }

ExactScalar sqrt2() { return ExactScalar::sqrt2(); }

// Collects identities; terms with a zero coefficient are dropped.
class IdentityBuilder {
 public:
  explicit IdentityBuilder(std::vector<Identity>& out) : out_(out) {}

  IdentityBuilder& begin(std::string label) {
    current_ = Identity{std::move(label), {}};
    return *this;
  }
  IdentityBuilder& triple(int a, int b, int c, const ExactScalar& k = 1) {
    return push({k, RelationTerm::Triple, a, b, c});
  }
  IdentityBuilder& pair(int a, int b, const ExactScalar& k = 1) { return push({k, RelationTerm::Pair, a, b, 0}); }
  // Right-hand side terms are moved to the left.
  IdentityBuilder& rhs(int a, const ExactScalar& k) { return push({-k, RelationTerm::Single, a, 0, 0}); }
  void end() { out_.push_back(std::move(current_)); }

 private:
  IdentityBuilder& push(RelationTerm t) {
    if (!t.coef.is_zero()) current_.terms.push_back(std::move(t));
    return *this;
  }
  std::vector<Identity>& out_;
  Identity current_;
};

// Operator numbering inside a CaoSet: x_i^- = 2i, x_i^+ = 2i+1.
int op(int pair_index, int sign) { return 2 * pair_index + (sign > 0 ? 1 : 0); }

CaoPair make_pair(std::string label, SuperMatrix minus, SuperMatrix plus, int parity) {
  CaoPair p;
  p.label = std::move(label);
  p.minus = std::move(minus);
  p.plus = std::move(plus);
  p.parity = parity;
  return p;
}

// theta_j for A(m|n), j = 1..m+n+2.
struct AGrading {
  int m, n;
  int theta(int j) const { return j <= m + 1 ? 0 : 1; }
  int deg(int j, int k) const { return (theta(j) + theta(k)) % 2; }
};

ClosedForm sl1n(int n) {
  if (n < 1) throw std::invalid_argument("sl1n needs n >= 1");
  ClosedForm cf{"sl1n", Family::A(0, n - 1), {}, {}};
  const int size = n + 1;
  for (int i = 1; i <= n; ++i)
    cf.caos.pairs.push_back(make_pair("a_" + std::to_string(i), E(size, 1, i + 1), E(size, i + 1, 1), 1));
  IdentityBuilder b(cf.identities);
  auto m_ = [](int i) { return op(i - 1, -1); };
  auto p_ = [](int i) { return op(i - 1, +1); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      b.begin("{a+,a+}=0").pair(p_(i), p_(j)).end();
      b.begin("{a-,a-}=0").pair(m_(i), m_(j)).end();
      for (int k = 1; k <= n; ++k) {
        b.begin("[{a+,a-},a+]").triple(p_(i), m_(j), p_(k)).rhs(p_(i), delta(j, k)).rhs(p_(k), -delta(i, j)).end();
        b.begin("[{a+,a-},a-]").triple(p_(i), m_(j), m_(k)).rhs(m_(j), -delta(i, k)).rhs(m_(k), delta(i, j)).end();
      }
    }
  return cf;
}

ClosedForm a1(int m, int n) {
  ClosedForm cf{"A1", Family::A(m, n), {}, {}};
  const int size = m + n + 2, N = m + n + 1;
  AGrading g{m, n};
  for (int j = 1; j <= N; ++j)
    cf.caos.pairs.push_back(make_pair("a_" + std::to_string(j), E(size, 1, j + 1), E(size, j + 1, 1), g.deg(1, j + 1)));
  IdentityBuilder b(cf.identities);
  auto m_ = [](int j) { return op(j - 1, -1); };
  auto p_ = [](int j) { return op(j - 1, +1); };
  for (int j = 1; j <= N; ++j)
    for (int k = 1; k <= N; ++k) {
      b.begin("[[a+,a+]]=0").pair(p_(j), p_(k)).end();
      b.begin("[[a-,a-]]=0").pair(m_(j), m_(k)).end();
      for (int l = 1; l <= N; ++l) {
        const int tj = g.theta(j + 1);
        b.begin("[[[[a+,a-]],a+]]")
            .triple(p_(j), m_(k), p_(l))
            .rhs(p_(l), sign_of(tj) * delta(j, k))
            .rhs(p_(j), delta(k, l))
            .end();
        b.begin("[[[[a+,a-]],a-]]")
            .triple(p_(j), m_(k), m_(l))
            .rhs(m_(l), -sign_of(tj) * delta(j, k))
            .rhs(m_(k), -sign_of((g.theta(j + 1) + g.theta(k + 1)) * g.theta(l + 1)) * delta(j, l))
            .end();
      }
    }
  return cf;
}

ClosedForm a2(int m, int n) {
  ClosedForm cf{"A2", Family::A(m, n), {}, {}};
  const int size = m + n + 2, N = m + n + 1;
  AGrading g{m, n};
  for (int j = 1; j <= N; ++j)
    cf.caos.pairs.push_back(
        make_pair("a_" + std::to_string(j), E(size, j, size), E(size, size, j), g.deg(j, size)));
  IdentityBuilder b(cf.identities);
  auto m_ = [](int j) { return op(j - 1, -1); };
  auto p_ = [](int j) { return op(j - 1, +1); };
  for (int j = 1; j <= N; ++j)
    for (int k = 1; k <= N; ++k) {
      b.begin("[[a+,a+]]=0").pair(p_(j), p_(k)).end();
      b.begin("[[a-,a-]]=0").pair(m_(j), m_(k)).end();
      for (int l = 1; l <= N; ++l) {
        b.begin("[[[[a+,a-]],a+]]")
            .triple(p_(j), m_(k), p_(l))
            .rhs(p_(l), delta(j, k))
            .rhs(p_(j), -sign_of(g.theta(k)) * delta(k, l))
            .end();
        b.begin("[[[[a+,a-]],a-]]")
            .triple(p_(j), m_(k), m_(l))
            .rhs(m_(l), -delta(j, k))
            .rhs(m_(k), -sign_of((g.theta(j) + 1) * (g.theta(k) + 1)) * delta(j, l))
            .end();
      }
    }
  return cf;
}

ClosedForm adouble(int m, int n) {
  const int J = m + n;
  if (J < 1) throw std::invalid_argument("Adouble needs m+n >= 1");
  ClosedForm cf{"Adouble", Family::A(m, n), {}, {}};
  const int size = m + n + 2;
  AGrading g{m, n};
  // Pair index 2(j-1) is a_{-j}, 2(j-1)+1 is a_{+j}.
  for (int j = 1; j <= J; ++j) {
    cf.caos.pairs.push_back(make_pair("a_-" + std::to_string(j), E(size, 1, j + 2), E(size, j + 2, 1), g.deg(1, j + 2)));
    cf.caos.pairs.push_back(make_pair("a_+" + std::to_string(j), E(size, 2, j + 2), E(size, j + 2, 2), g.deg(2, j + 2)));
  }
  auto a = [](int xi, int j, int sign) { return op(2 * (j - 1) + (xi > 0 ? 1 : 0), sign); };
  auto deg = [&](int xi, int j) { return g.deg(xi > 0 ? 2 : 1, j + 2); };
  const int theta12 = g.theta(1) + g.theta(2);
  IdentityBuilder b(cf.identities);
  for (int j = 1; j <= J; ++j)
    for (int k = 1; k <= J; ++k) {
      for (int xi : {-1, 1})
        for (int eta : {-1, 1}) {
          b.begin("[[a+,a+]]=0").pair(a(xi, j, 1), a(eta, k, 1)).end();
          b.begin("[[a-,a-]]=0").pair(a(xi, j, -1), a(eta, k, -1)).end();
        }
      if (j != k) {
        for (int xi : {-1, 1}) b.begin("[[a+_{xi j},a-_{-xi k}]]=0").pair(a(xi, j, 1), a(-xi, k, -1)).end();
        b.begin("[[a+_{-j},a-_{-k}]]=[[a+_{+j},a-_{+k}]]").pair(a(-1, j, 1), a(-1, k, -1)).pair(a(1, j, 1), a(1, k, -1), -1).end();
        // The parity condition is on the rows j+2, k+2 that carry the index j, k.
        if (g.theta(j + 2) == g.theta(k + 2)) {
          b.begin("[[a+_{+j},a-_{-j}]]=[[a+_{+k},a-_{-k}]]").pair(a(1, j, 1), a(-1, j, -1)).pair(a(1, k, 1), a(-1, k, -1), -1).end();
          b.begin("[[a+_{-j},a-_{+j}]]=[[a+_{-k},a-_{+k}]]").pair(a(-1, j, 1), a(1, j, -1)).pair(a(-1, k, 1), a(1, k, -1), -1).end();
        }
      }
      for (int l = 1; l <= J; ++l)
        for (int xi : {-1, 1})
          for (int eta : {-1, 1})
            for (int eps : {-1, 1}) {
              const int dd = deg(xi, j) * deg(eta, k);
              b.begin("[[[[a+,a-]],a+]]")
                  .triple(a(xi, j, 1), a(eta, k, -1), a(eps, l, 1))
                  .rhs(a(xi, l, 1), sign_of(dd + delta(xi, -eta) * theta12 * deg(eps, l)) * delta(eta, eps) * delta(j, k))
                  .rhs(a(eps, j, 1), delta(xi, eta) * delta(k, l))
                  .end();
              b.begin("[[[[a+,a-]],a-]]")
                  .triple(a(xi, j, 1), a(eta, k, -1), a(eps, l, -1))
                  .rhs(a(eta, l, -1), -sign_of(dd) * delta(xi, eps) * delta(j, k))
                  .rhs(a(eps, k, -1), -sign_of((g.theta(j + 2) + g.theta(k + 2)) * deg(eps, l)) * delta(xi, eta) * delta(j, l))
                  .end();
            }
    }
  return cf;
}

ClosedForm a21r(int m, int n, int i) {
  const int N = m + n + 1;
  if (i < 1 || i > m + n) throw std::invalid_argument("A21R needs 1 <= position <= m+n");
  ClosedForm cf{"A21R", Family::A(m, n), {}, {}};
  const int size = m + n + 2;
  AGrading g{m, n};
  auto th = [&](int p) { return g.theta(p); };
  auto th2 = [&](int p, int q) { return g.theta(p) + g.theta(q); };
  for (int k = 1; k <= N; ++k) {
    if (k <= i)
      cf.caos.pairs.push_back(make_pair("a_" + std::to_string(k), E(size, k, i + 1), E(size, i + 1, k), g.deg(k, i + 1)));
    else
      cf.caos.pairs.push_back(
          make_pair("a_" + std::to_string(k), E(size, i + 1, k + 1), E(size, k + 1, i + 1), g.deg(i + 1, k + 1)));
  }
  auto kind = [&](int k) { return k <= i ? 0 : 1; };
  auto x = [](int k, int sign) { return op(k - 1, sign); };
  auto deg = [&](int k) { return cf.caos.pairs[k - 1].parity; };
  (void)th;
  IdentityBuilder b(cf.identities);
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l <= N; ++l) {
      const bool same = kind(k) == kind(l);
      if (same) {
        b.begin("[[a+,a+]]=0 (same kind)").pair(x(k, 1), x(l, 1)).end();
        b.begin("[[a-,a-]]=0 (same kind)").pair(x(k, -1), x(l, -1)).end();
      } else if (k <= i) {
        b.begin("[[a-_k,a+_l]]=0").pair(x(k, -1), x(l, 1)).end();
        b.begin("[[a+_k,a-_l]]=0").pair(x(k, 1), x(l, -1)).end();
      }
      for (int p = 1; p <= N; ++p) {
        const int lk = kind(l), pk = kind(p), kk = kind(k);
        if (same) {
          b.begin("[[[[a+,a-]],a+]]")
              .triple(x(k, 1), x(l, -1), x(p, 1))
              .rhs(x(p, 1), sign_of(lk + pk + kk * th2(k + 1, i + 1)) * delta(k, l))
              .rhs(x(k, 1), sign_of(lk + pk + (1 - lk) * th2(l, i + 1) * (th2(l, k) + th2(k, i + 1))) * delta(l, p))
              .end();
          b.begin("[[[[a+,a-]],a-]]")
              .triple(x(k, 1), x(l, -1), x(p, -1))
              .rhs(x(l, -1),
                   -sign_of(lk + pk + deg(k) * (kk * th2(k + 1, l + 1) + (1 - lk) * th2(l, i + 1))) * delta(k, p))
              .rhs(x(p, -1), -sign_of(lk + pk + kk * th2(k + 1, i + 1)) * delta(k, l))
              .end();
        }
        if (k <= i && l > i)
          for (int xi : {-1, 1}) {
            const int e1 = xi > 0 ? th2(p, i + 1) * th2(l + 1, i + 1) : th2(p, i + 1) * th2(k, l + 1);
            const int e2 = xi > 0 ? th2(l + 1, i + 1) * (th2(k, i + 1) + th2(k, l + 1)) : 0;
            b.begin("[[[[a^xi_k,a^xi_l]],a^-xi]]")
                .triple(x(k, xi), x(l, xi), x(p, -xi))
                .rhs(x(l, xi), -sign_of(e1) * delta(k, p))
                .rhs(x(k, xi), sign_of(e2) * delta(l, p))
                .end();
          }
        for (int xi : {-1, 1}) b.begin("[[[[a^xi,a^xi]],a^xi]]=0").triple(x(k, xi), x(l, xi), x(p, xi)).end();
      }
    }
  return cf;
}

// b_j, j = 1..n are B_j (odd); b_{n+j}, j = 1..m are F_j (even).
void add_bose_fermi(ClosedForm& cf, int m, int n, bool bose, bool fermi) {
  const int size = 2 * m + 1 + 2 * n;
  const int o = 2 * m + 1;
  if (bose)
    for (int j = 1; j <= n; ++j)
      cf.caos.pairs.push_back(make_pair("B_" + std::to_string(j),
                                        E(size, o, o + n + j, -sqrt2()) + E(size, o + j, o, -sqrt2()),
                                        E(size, o, o + j, sqrt2()) + E(size, o + n + j, o, -sqrt2()), 1));
  if (fermi)
    for (int j = 1; j <= m; ++j)
      cf.caos.pairs.push_back(make_pair("F_" + std::to_string(j),
                                        E(size, j, o, sqrt2()) + E(size, o, m + j, -sqrt2()),
                                        E(size, o, j, sqrt2()) + E(size, m + j, o, -sqrt2()), 0));
}

Family b_family(int m, int n) { return m == 0 ? Family::B0(n) : Family::B(m, n); }

ClosedForm gb3(int m, int n) {
  ClosedForm cf{"GB3", b_family(m, n), {}, {}};
  cf.family.validate();
  add_bose_fermi(cf, m, n, true, true);
  const int N = m + n;
  auto ang = [&](int j) { return j <= n ? 1 : 0; };
  auto x = [](int j, int s) { return op(j - 1, s); };
  IdentityBuilder b(cf.identities);
  for (int j = 1; j <= N; ++j)
    for (int k = 1; k <= N; ++k)
      for (int l = 1; l <= N; ++l)
        for (int xi : {-1, 1})
          for (int eta : {-1, 1})
            for (int eps : {-1, 1}) {
              const int eps_l = ang(l) ? eps : 1;
              b.begin("[[[[b,b]],b]]")
                  .triple(x(j, xi), x(k, eta), x(l, eps))
                  .rhs(x(k, eta), -2 * delta(j, l) * delta(eps, -xi) * eps_l * sign_of(ang(k) * ang(l)))
                  .rhs(x(j, xi), 2 * eps_l * delta(k, l) * delta(eps, -eta))
                  .end();
            }
  return cf;
}

ClosedForm pbose(int m, int n) {
  ClosedForm cf{"pBose", b_family(m, n), {}, {}};
  cf.family.validate();
  cf.complete_set = m == 0;
  add_bose_fermi(cf, m, n, true, false);
  auto x = [](int j, int s) { return op(j - 1, s); };
  IdentityBuilder b(cf.identities);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        for (int xi : {-1, 1})
          for (int eta : {-1, 1})
            for (int eps : {-1, 1})
              b.begin("[{B,B},B]")
                  .triple(x(j, xi), x(k, eta), x(l, eps))
                  .rhs(x(k, eta), (eps - xi) * delta(j, l))
                  .rhs(x(j, xi), (eps - eta) * delta(k, l))
                  .end();
  return cf;
}

ClosedForm pfermi(int m, int n) {
  if (m < 1) throw std::invalid_argument("pFermi needs m >= 1");
  ClosedForm cf{"pFermi", Family::B(m, n), {}, {}};
  cf.family.validate();
  cf.complete_set = false;
  add_bose_fermi(cf, m, n, false, true);
  auto x = [](int j, int s) { return op(j - 1, s); };
  IdentityBuilder b(cf.identities);
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l)
        for (int xi : {-1, 1})
          for (int eta : {-1, 1})
            for (int eps : {-1, 1})
              b.begin("[[F,F],F]")
                  .triple(x(j, xi), x(k, eta), x(l, eps))
                  .rhs(x(j, xi), ExactScalar::fraction((eps - eta) * (eps - eta), 2) * delta(k, l))
                  .rhs(x(k, eta), -ExactScalar::fraction((eps - xi) * (eps - xi), 2) * delta(j, l))
                  .end();
  return cf;
}

ClosedForm cs1(int n) {
  ClosedForm cf{"CS1", Family::C(n), {}, {}};
  cf.family.validate();
  const int size = 2 * n;
  // Pair index 2(i-1) is c_{-i}, 2(i-1)+1 is c_{+i}.
  for (int i = 1; i < n; ++i) {
    cf.caos.pairs.push_back(make_pair("c_-" + std::to_string(i), E(size, 1, 2 + i) + E(size, n + 1 + i, 2, -1),
                                      E(size, 2, n + 1 + i) + E(size, 2 + i, 1), 1));
    cf.caos.pairs.push_back(make_pair("c_+" + std::to_string(i), E(size, 1, n + 1 + i) + E(size, 2 + i, 2),
                                      E(size, 2, 2 + i) + E(size, n + 1 + i, 1, -1), 1));
  }
  auto c = [](int xi, int i, int sign) { return op(2 * (i - 1) + (xi > 0 ? 1 : 0), sign); };
  IdentityBuilder b(cf.identities);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      for (int xi : {-1, 1})
        for (int eta : {-1, 1}) {
          b.begin("{c-,c-}=0").pair(c(xi, i, -1), c(eta, j, -1)).end();
          b.begin("{c+,c+}=0").pair(c(xi, i, 1), c(eta, j, 1)).end();
          for (int k = 1; k < n; ++k)
            for (int eps : {-1, 1}) {
              b.begin("[{c-,c+},c+]")
                  .triple(c(xi, i, -1), c(eta, j, 1), c(eps, k, 1))
                  .rhs(c(eps, k, 1), xi * delta(xi, eta) * delta(i, j))
                  .rhs(c(eta, j, 1), -eps * delta(xi, eps) * delta(i, k))
                  .rhs(c(-xi, i, 1), eta * delta(-eta, eps) * delta(j, k))
                  .end();
              b.begin("[{c-,c+},c-]")
                  .triple(c(xi, i, -1), c(eta, j, 1), c(eps, k, -1))
                  .rhs(c(eps, k, -1), -xi * delta(xi, eta) * delta(i, j))
                  .rhs(c(xi, i, -1), eta * delta(eta, eps) * delta(j, k))
                  .rhs(c(-eta, j, -1), eps * delta(-xi, eps) * delta(i, k))
                  .end();
            }
        }
      b.begin("{c-_{-i},c+_{+j}}={c-_{-j},c+_{+i}}").pair(c(-1, i, -1), c(1, j, 1)).pair(c(-1, j, -1), c(1, i, 1), -1).end();
      b.begin("{c-_{+i},c+_{-j}}={c-_{+j},c+_{-i}}").pair(c(1, i, -1), c(-1, j, 1)).pair(c(1, j, -1), c(-1, i, 1), -1).end();
    }
  return cf;
}

ClosedForm cs2(int n) {
  ClosedForm cf{"CS2", Family::C(n), {}, {}};
  cf.family.validate();
  const int size = 2 * n;
  for (int k = 1; k < n; ++k) {
    cf.caos.pairs.push_back(make_pair("c_-" + std::to_string(k), E(size, 1, k + 2) + E(size, n + k + 1, 2, -1),
                                      E(size, 2, n + k + 1) + E(size, k + 2, 1), 1));
    cf.caos.pairs.push_back(make_pair("c_+" + std::to_string(k), E(size, 2, k + 2) + E(size, n + k + 1, 1, -1),
                                      E(size, 1, n + k + 1) + E(size, k + 2, 2), 1));
  }
  auto c = [](int xi, int i, int sign) { return op(2 * (i - 1) + (xi > 0 ? 1 : 0), sign); };
  IdentityBuilder b(cf.identities);
  for (int j = 1; j < n; ++j)
    for (int k = 1; k < n; ++k) {
      for (int xi : {-1, 1})
        for (int eta : {-1, 1}) b.begin("{c^eta_{xi j},c^eta_{xi k}}=0").pair(c(xi, j, eta), c(xi, k, eta)).end();
      b.begin("{c-_{-j},c+_{+k}}=0").pair(c(-1, j, -1), c(1, k, 1)).end();
      b.begin("{c-_{+j},c+_{-k}}=0").pair(c(1, j, -1), c(-1, k, 1)).end();
      if (j != k)
        b.begin("{c-_{+j},c+_{+k}}={c-_{-j},c+_{-k}}").pair(c(1, j, -1), c(1, k, 1)).pair(c(-1, j, -1), c(-1, k, 1), -1).end();
      for (int xi : {-1, 1})
        b.begin("{c^xi_{xi j},c^xi_{-xi k}}={c^xi_{xi k},c^xi_{-xi j}}")
            .pair(c(xi, j, xi), c(-xi, k, xi))
            .pair(c(xi, k, xi), c(-xi, j, xi), -1)
            .end();
      for (int l = 1; l < n; ++l) {
        for (int gamma : {-1, 1})
          for (int xi : {-1, 1})
            for (int eta : {-1, 1})
              for (int eps : {-1, 1})
                b.begin("[{c^g,c^g},c^g]=0").triple(c(xi, j, gamma), c(eta, k, gamma), c(eps, l, gamma)).end();
        for (int xi : {-1, 1})
          for (int eps : {-1, 1})
            b.begin("[{c^xi_{xi j},c^xi_{-xi k}},c^-xi]")
                .triple(c(xi, j, xi), c(-xi, k, xi), c(eps, l, -xi))
                .rhs(c(-eps, j, xi), -xi * delta(k, l))
                .rhs(c(-eps, k, xi), -xi * delta(j, l))
                .end();
        for (int xi : {-1, 1})
          for (int eta : {-1, 1}) {
            b.begin("[{c-_{xi j},c+_{xi k}},c-]")
                .triple(c(xi, j, -1), c(xi, k, 1), c(eta, l, -1))
                .rhs(c(eta, j, -1), -delta(k, l))
                .rhs(c(eta, l, -1), -sign_of(delta(xi, eta)) * delta(j, k))
                .end();
            b.begin("[{c-_{xi j},c+_{xi k}},c+]")
                .triple(c(xi, j, -1), c(xi, k, 1), c(eta, l, 1))
                .rhs(c(eta, l, 1), sign_of(delta(xi, eta)) * delta(j, k))
                .rhs(c(eta, k, 1), delta(j, l))
                .end();
          }
      }
    }
  return cf;
}

// Symbol coordinates: x_a, then [[x_a,x_b]], then [[[[x_a,x_b]],x_c]].
struct SymbolSpace {
  int ops;
  int single(int a) const { return a; }
  int pair(int a, int b) const { return ops + a * ops + b; }
  int triple(int a, int b, int c) const { return ops + ops * ops + (a * ops + b) * ops + c; }
};

SparseVector to_vector(const Identity& id, const SymbolSpace& s) {
  SparseVector v;
  for (const auto& t : id.terms) {
    int idx = t.kind == RelationTerm::Single ? s.single(t.a)
              : t.kind == RelationTerm::Pair ? s.pair(t.a, t.b)
                                             : s.triple(t.a, t.b, t.c);
    axpy(v, t.coef, SparseVector{{idx, ExactScalar(1)}});
  }
  return v;
}

// Relations every bracket satisfies: [[x,y]] = -(-1)^{|x||y|}[[y,x]].
void add_supersymmetry(SpanSolver& span, const CaoSet& caos, const SymbolSpace& s) {
  const int ops = caos.op_count();
  for (int a = 0; a < ops; ++a)
    for (int b = a; b < ops; ++b) {
      const ExactScalar sg = sign_of(caos.op_parity(a) * caos.op_parity(b));
      SparseVector v;
      axpy(v, 1, SparseVector{{s.pair(a, b), ExactScalar(1)}});
      axpy(v, sg, SparseVector{{s.pair(b, a), ExactScalar(1)}});
      if (!v.empty()) span.add(v);
      for (int c = 0; c < ops; ++c) {
        SparseVector t;
        axpy(t, 1, SparseVector{{s.triple(a, b, c), ExactScalar(1)}});
        axpy(t, sg, SparseVector{{s.triple(b, a, c), ExactScalar(1)}});
        if (!t.empty()) span.add(t);
      }
    }
}

// A relation among pair symbols implies the same relation bracketed with every x_c.
void add_with_consequences(SpanSolver& span, const SparseVector& v, const SymbolSpace& s) {
  span.add(v);
  bool pure_pair = !v.empty();
  for (const auto& [idx, c] : v)
    if (idx < s.pair(0, 0) || idx >= s.triple(0, 0, 0)) pure_pair = false;
  if (!pure_pair) return;
  for (int c = 0; c < s.ops; ++c) {
    SparseVector t;
    for (const auto& [idx, k] : v) {
      const int a = (idx - s.ops) / s.ops, b = (idx - s.ops) % s.ops;
      t.emplace(s.triple(a, b, c), k);
    }
    span.add(t);
  }
}

// [[P(ab),P(cd)]] expanded through the triple relations in two ways must
// agree in any Lie superalgebra; the difference is a relation among pair
// symbols. Only triple expansions already implied by `span` are used.
void add_jacobi_consequences(SpanSolver& span, const CaoSet& caos, const RelationSet& rel, const SymbolSpace& s) {
  const int ops = caos.op_count();
  auto par = [&](int a) { return caos.op_parity(a); };
  std::map<TripleKey, const BasisExpansion*> known;
  for (const auto& [key, e] : rel.triple) {
    SparseVector v{{s.triple(key.a, key.b, key.c), ExactScalar(1)}};
    for (const auto& [l, c] : e.coefficients) axpy(v, -c, SparseVector{{s.single(l), ExactScalar(1)}});
    if (span.contains(v)) known.emplace(key, &e);
  }
  // [[[[x_a,x_b]],x_c]] for any order of a, b; null if not implied.
  auto triple = [&](int a, int b, int c, ExactScalar& sign) -> const BasisExpansion* {
    sign = 1;
    if (a > b) {
      std::swap(a, b);
      sign = -ExactScalar(sign_of(par(a) * par(b)));
    }
    auto it = known.find(TripleKey{a, b, c});
    return it == known.end() ? nullptr : it->second;
  };
  // sum_e t^{abc}_e [[x_e,x_d]] + (-1)^{|ab||c|} sum_e t^{abd}_e [[x_c,x_e]]
  auto expand = [&](int a, int b, int c, int d, SparseVector& out, const ExactScalar& k) {
    ExactScalar s1, s2;
    const BasisExpansion* t1 = triple(a, b, c, s1);
    const BasisExpansion* t2 = triple(a, b, d, s2);
    if (!t1 || !t2) return false;
    for (const auto& [e, coef] : t1->coefficients) axpy(out, k * s1 * coef, SparseVector{{s.pair(e, d), ExactScalar(1)}});
    const ExactScalar sg = sign_of((par(a) + par(b)) * par(c));
    for (const auto& [e, coef] : t2->coefficients)
      axpy(out, k * sg * s2 * coef, SparseVector{{s.pair(c, e), ExactScalar(1)}});
    return true;
  };
  for (int a = 0; a < ops; ++a)
    for (int b = a; b < ops; ++b)
      for (int c = 0; c < ops; ++c)
        for (int d = c; d < ops; ++d) {
          SparseVector v;
          const ExactScalar sg = sign_of((par(a) + par(b)) * (par(c) + par(d)));
          if (!expand(a, b, c, d, v, 1) || !expand(c, d, a, b, v, sg)) continue;
          if (!v.empty()) add_with_consequences(span, v, s);
        }
}

SuperMatrix evaluate(const Identity& id, const CaoSet& caos) {
  SuperMatrix sum(caos.op(0).size());
  for (const auto& t : id.terms) {
    const SuperMatrix& xa = caos.op(t.a);
    SuperMatrix v;
    if (t.kind == RelationTerm::Single) {
      v = xa;
    } else {
      v = superbracket(xa, caos.op(t.b), caos.op_parity(t.a), caos.op_parity(t.b));
      if (t.kind == RelationTerm::Triple)
        v = superbracket(v, caos.op(t.c), (caos.op_parity(t.a) + caos.op_parity(t.b)) % 2, caos.op_parity(t.c));
    }
    sum += v * t.coef;
  }
  return sum;
}

}  // namespace

const std::vector<std::string>& closed_form_ids() {
  static const std::vector<std::string> ids = {"sl1n", "A1", "A2", "Adouble", "A21R",
                                               "GB3",  "pBose", "pFermi", "CS1", "CS2"};
  return ids;
}

ClosedForm build_closed_form(const std::string& id, int m, int n, int position) {
  auto need_a = [&] {
    if (m < 0 || n < 0) throw std::invalid_argument(id + " needs m, n >= 0");
  };
  if (id == "sl1n") return sl1n(n);
  if (id == "A1") return need_a(), a1(m, n);
  if (id == "A2") return need_a(), a2(m, n);
  if (id == "Adouble") return need_a(), adouble(m, n);
  if (id == "A21R") return need_a(), a21r(m, n, position);
  if (id == "GB3") return gb3(m, n);
  if (id == "pBose") return pbose(m, n);
  if (id == "pFermi") return pfermi(m, n);
  if (id == "CS1") return cs1(n);
  if (id == "CS2") return cs2(n);
  throw std::invalid_argument("unknown closed-form case '" + id + "'");
}

std::string render_identity(const Identity& identity, const CaoSet& caos) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : identity.terms) {
    out << (first ? "" : " + ") << "(" << t.coef.str() << ")";
    first = false;
    if (t.kind == RelationTerm::Single)
      out << caos.op_name(t.a);
    else if (t.kind == RelationTerm::Pair)
      out << "[[" << caos.op_name(t.a) << "," << caos.op_name(t.b) << "]]";
    else
      out << "[[[[" << caos.op_name(t.a) << "," << caos.op_name(t.b) << "]]," << caos.op_name(t.c) << "]]";
  }
  out << " = 0";
  return out.str();
}

ClosedFormReport verify_closed_form(const std::string& id, int m, int n, int position) {
  ClosedForm cf = build_closed_form(id, m, n, position);
  ClosedFormReport r;
  r.id = id;
  r.family = cf.family;
  r.position = id == "A21R" ? position : 0;

  for (const auto& identity : cf.identities) {
    ++r.instances;
    SuperMatrix residual = evaluate(identity, cf.caos);
    if (residual.is_zero()) {
      ++r.holding;
    } else if (r.failures.size() < 5) {
      r.failures.push_back(identity.family_label + ": " + render_identity(identity, cf.caos) + "; residual " +
                           residual.str());
    }
  }

  const SymbolSpace s{cf.caos.op_count()};
  SpanSolver closed, generated;
  add_supersymmetry(closed, cf.caos, s);
  add_supersymmetry(generated, cf.caos, s);
  for (const auto& identity : cf.identities) add_with_consequences(closed, to_vector(identity, s), s);

  RelationSet rel = generate_relations(cf.caos);
  std::vector<SparseVector> gen_vectors;
  for (const auto& row : rel.quadratic) {
    SparseVector v;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (!row[k].is_zero()) v.emplace(s.pair(rel.pair_symbols[k].first, rel.pair_symbols[k].second), row[k]);
    gen_vectors.push_back(v);
  }
  for (const auto& [key, e] : rel.triple) {
    SparseVector v{{s.triple(key.a, key.b, key.c), ExactScalar(1)}};
    for (const auto& [l, c] : e.coefficients) axpy(v, -c, SparseVector{{s.single(l), ExactScalar(1)}});
    gen_vectors.push_back(v);
  }
  for (const auto& v : gen_vectors) add_with_consequences(generated, v, s);

  auto all_in = [](const SpanSolver& span, const std::vector<SparseVector>& vs) {
    for (const auto& v : vs)
      if (!span.contains(v)) return false;
    return true;
  };
  std::vector<SparseVector> closed_vectors;
  for (const auto& identity : cf.identities) closed_vectors.push_back(to_vector(identity, s));
  r.generated_in_closed = all_in(closed, gen_vectors);
  r.closed_in_generated = all_in(generated, closed_vectors);
  r.generated_in_jacobi_closure = r.generated_in_closed;
  if (!r.generated_in_closed) {
    add_jacobi_consequences(closed, cf.caos, rel, s);
    r.generated_in_jacobi_closure = all_in(closed, gen_vectors);
  }

  if (cf.complete_set) r.generation = generation_check(build(cf.family), cf.caos);
  return r;
}

std::vector<ClosedFormReport> verify_closed_form_all(const std::string& id, int m, int n) {
  if (id != "A21R") return {verify_closed_form(id, m, n)};
  std::vector<ClosedFormReport> out;
  for (int i = 1; i <= m + n; ++i) out.push_back(verify_closed_form(id, m, n, i));
  return out;
}

}  // namespace gqs
