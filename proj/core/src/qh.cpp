#include "tevelev/qh.hpp"

#include <algorithm>
#include <sstream>

#include "tevelev/errors.hpp"

namespace tev {
namespace {

void require_rank(int r) {
  if (r < 2) throw Error(ErrorCode::Unsupported, "quantum cohomology of Bl_q(P^r) needs r >= 2");
}

void require_same_rank(int a, int b) {
  if (a != b) throw Error(ErrorCode::RankMismatch, "r = " + std::to_string(a) + " vs r = " + std::to_string(b));
}

const QPoly& q1() {
  static const QPoly v = QPoly::q1();
  return v;
}
const QPoly& q2() {
  static const QPoly v = QPoly::q2();
  return v;
}
const QPoly& q1q2() {
  static const QPoly v = QPoly::monomial({1, 1});
  return v;
}

/// x * u.
QhElement times_u(const QhElement& x) {
  const int r = x.r();
  QhElement out(r);
  for (int i = 0; i + 1 < r; ++i) out.coeff(i + 1) += x.coeff(i);
  // u^{r-1} * u = u^r = q2 E
  out.coeff(r) += q2() * x.coeff(r - 1);
  for (int i = 0; i + 1 < r; ++i) out.coeff(r + i + 1) += x.coeff(r + i);
  // E u^{r-1} * u = q2 E*E = q1 q2 - q2 E u
  const QPoly& top = x.coeff(2 * r - 1);
  out.coeff(0) += q1q2() * top;
  out.coeff(r + 1) -= q2() * top;
  return out;
}

/// x * E.
QhElement times_e(const QhElement& x) {
  const int r = x.r();
  QhElement out(r);
  for (int i = 0; i < r; ++i) out.coeff(r + i) += x.coeff(i);
  // E u^i * E = (q1 - E u) u^i = q1 u^i - E u^{i+1}
  for (int i = 0; i < r; ++i) {
    const QPoly& c = x.coeff(r + i);
    if (c.is_zero()) continue;
    out.coeff(i) += q1() * c;
    if (i + 1 < r) {
      out.coeff(r + i + 1) -= c;
    } else {
      // E u^r = q1 q2 - q2 E u
      out.coeff(0) -= q1q2() * c;
      out.coeff(r + 1) += q2() * c;
    }
  }
  return out;
}

void scale_add(QhElement& acc, const QhElement& x, const QPoly& s) {
  if (s.is_zero()) return;
  for (int i = 0; i < x.rank(); ++i) {
    if (!x.coeff(i).is_zero()) acc.coeff(i) += s * x.coeff(i);
  }
}

std::string basis_label(int r, int index) {
  if (index == 0) return "1";
  if (index < r) return index == 1 ? "u" : "u^" + std::to_string(index);
  const int i = index - r;
  if (i == 0) return "E";
  return i == 1 ? "E*u" : "E*u^" + std::to_string(i);
}

}  // namespace

// --- QhElement --------------------------------------------------------------

QhElement::QhElement(int r) : r_(r) {
  require_rank(r);
  coeffs_.resize(static_cast<std::size_t>(2 * r));
}

QhElement QhElement::one(int r) { return basis(r, 0); }

QhElement QhElement::basis(int r, int index) {
  QhElement out(r);
  if (index < 0 || index >= 2 * r) throw Error(ErrorCode::IndexOutOfRange, "star basis index");
  out.coeff(index) = QPoly(1);
  return out;
}

bool QhElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QPoly& c) { return c.is_zero(); });
}

std::optional<int> QhElement::homogeneous_degree() const {
  std::optional<int> deg;
  for (int i = 0; i < rank(); ++i) {
    for (const auto& [e, c] : coeff(i).terms()) {
      const int d = basis_degree(i) + monomial_degree(e);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  return deg;
}

void QhElement::truncate(int max_a, int max_b) {
  for (auto& c : coeffs_) c.truncate(max_a, max_b);
}

QhElement QhElement::classical_limit() const {
  QhElement out(r_);
  for (int i = 0; i < rank(); ++i) out.coeff(i) = QPoly(coeff(i).constant_term());
  return out;
}

QhElement& QhElement::operator+=(const QhElement& o) {
  require_same_rank(r_, o.r_);
  for (int i = 0; i < rank(); ++i) coeffs_[static_cast<std::size_t>(i)] += o.coeff(i);
  return *this;
}

QhElement& QhElement::operator-=(const QhElement& o) {
  require_same_rank(r_, o.r_);
  for (int i = 0; i < rank(); ++i) coeffs_[static_cast<std::size_t>(i)] -= o.coeff(i);
  return *this;
}

QhElement& QhElement::operator*=(const QPoly& s) {
  for (auto& c : coeffs_) c = s * c;
  return *this;
}

std::string QhElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    if (coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff(i).to_string() << ")*" << basis_label(r_, i);
  }
  return first ? "0" : os.str();
}

QhElement star(const QhElement& a, const QhElement& b) {
  require_same_rank(a.r(), b.r());
  const int r = a.r();
  QhElement out(r);
  QhElement power = a;  // a * u^i
  QhElement e_power = times_e(a);  // a * E * u^i
  for (int i = 0; i < r; ++i) {
    scale_add(out, power, b.coeff(i));
    scale_add(out, e_power, b.coeff(r + i));
    if (i + 1 < r) {
      power = times_u(power);
      e_power = times_u(e_power);
    }
  }
  return out;
}

QhElement star_pow(const QhElement& x, std::int64_t n, std::optional<QExponent> cap) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative star power");
  QhElement out = QhElement::one(x.r());
  for (std::int64_t j = 0; j < n; ++j) {
    out = star(out, x);
    if (cap) out.truncate(cap->a, cap->b);
  }
  return out;
}

// --- ClassicalElement -------------------------------------------------------

ClassicalElement::ClassicalElement(int r) : r_(r) {
  require_rank(r);
  coeffs_.resize(static_cast<std::size_t>(2 * r));
}

ClassicalElement ClassicalElement::basis(int r, int index) {
  ClassicalElement out(r);
  if (index < 0 || index >= 2 * r) throw Error(ErrorCode::IndexOutOfRange, "classical basis index");
  out.coeff(index) = QPoly(1);
  return out;
}

ClassicalElement ClassicalElement::hyperplane_power(int r, int i) {
  if (i < 0 || i > r) throw Error(ErrorCode::IndexOutOfRange, "H power outside 0..r");
  return basis(r, i);
}

ClassicalElement ClassicalElement::exceptional_power(int r, int j) {
  if (j < 1 || j > r) throw Error(ErrorCode::IndexOutOfRange, "E power outside 1..r");
  if (j == r) {
    ClassicalElement out(r);
    out.coeff(r) = QPoly(r % 2 == 1 ? 1 : -1);  // (-1)^{r-1} H^r
    return out;
  }
  return basis(r, r + j);
}

ClassicalElement& ClassicalElement::operator+=(const ClassicalElement& o) {
  require_same_rank(r_, o.r_);
  for (int i = 0; i < rank(); ++i) coeffs_[static_cast<std::size_t>(i)] += o.coeff(i);
  return *this;
}

ClassicalElement& ClassicalElement::operator*=(const QPoly& s) {
  for (auto& c : coeffs_) c = s * c;
  return *this;
}

std::string ClassicalElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    if (coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string label = i == 0 ? "1" : (i <= r_ ? "H^" + std::to_string(i) : "E^" + std::to_string(i - r_));
    os << "(" << coeff(i).to_string() << ")*" << label;
  }
  return first ? "0" : os.str();
}

ClassicalElement classical_product(const ClassicalElement& a, const ClassicalElement& b) {
  require_same_rank(a.r(), b.r());
  const int r = a.r();
  ClassicalElement out(r);
  // Basis element -> (kind, power): kind 0 is H (power 0 is the unit), kind 1 is E.
  const auto decode = [r](int idx) { return idx <= r ? std::pair{0, idx} : std::pair{1, idx - r}; };
  for (int i = 0; i < a.rank(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j < b.rank(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      const QPoly c = a.coeff(i) * b.coeff(j);
      auto [ki, pi] = decode(i);
      auto [kj, pj] = decode(j);
      if (pi == 0 || pj == 0) {
        // unit times anything
        const int kind = pi == 0 ? kj : ki;
        const int power = pi + pj;
        out += c * (kind == 0 ? ClassicalElement::hyperplane_power(r, power) : ClassicalElement::exceptional_power(r, power));
        continue;
      }
      if (ki != kj) continue;  // H * E = 0
      const int power = pi + pj;
      if (power > r) continue;
      out += c * (ki == 0 ? ClassicalElement::hyperplane_power(r, power) : ClassicalElement::exceptional_power(r, power));
    }
  }
  return out;
}

QPoly classical_integral(const ClassicalElement& c) { return c.coeff(c.r()); }

// --- change of basis --------------------------------------------------------

QhElement classical_to_star(const ClassicalElement& c) {
  const int r = c.r();
  QhElement out(r);
  out.coeff(0) += c.coeff(0);
  for (int i = 1; i <= r; ++i) {
    const QPoly& h = c.coeff(i);
    if (h.is_zero()) continue;
    // H^i = u^i + E u^{i-1}, with u^r = q2 E.
    if (i < r) out.coeff(i) += h;
    else out.coeff(r) += q2() * h;
    out.coeff(r + i - 1) += h;
  }
  for (int j = 1; j < r; ++j) {
    const QPoly& e = c.coeff(r + j);
    if (e.is_zero()) continue;
    // E^j = (-1)^{j-1} E u^{j-1}
    if (j % 2 == 1) out.coeff(r + j - 1) += e;
    else out.coeff(r + j - 1) -= e;
  }
  return out;
}

ClassicalElement star_to_classical(const QhElement& x) {
  const int r = x.r();
  ClassicalElement out(r);
  out.coeff(0) += x.coeff(0);
  for (int i = 1; i < r; ++i) {
    const QPoly& c = x.coeff(i);
    if (c.is_zero()) continue;
    // u^i = H^i - (-1)^{i-1} E^i
    out.coeff(i) += c;
    if (i % 2 == 1) out.coeff(r + i) -= c;
    else out.coeff(r + i) += c;
  }
  for (int j = 0; j + 1 < r; ++j) {
    const QPoly& c = x.coeff(r + j);
    if (c.is_zero()) continue;
    // E u^j = (-1)^j E^{j+1}
    if (j % 2 == 0) out.coeff(r + j + 1) += c;
    else out.coeff(r + j + 1) -= c;
  }
  const QPoly& top = x.coeff(2 * r - 1);
  // E u^{r-1} = H^r - q2 E
  out.coeff(r) += top;
  out.coeff(r + 1) -= q2() * top;
  return out;
}

// --- quantum Euler class ----------------------------------------------------

QhElement euler_class_closed(int r) {
  QhElement point = classical_to_star(ClassicalElement::point(r));
  QhElement e = classical_to_star(ClassicalElement::exceptional_power(r, 1));
  QhElement out = QPoly(BigRational(2 * r)) * point;
  out -= QPoly::monomial({0, 1}, BigRational(r - 1)) * e;
  return out;
}

QhElement euler_class_from_definition(int r) {
  require_rank(r);
  const int rank = 2 * r;
  // Gram matrix of the Poincare pairing on the classical basis.
  std::vector<std::vector<BigRational>> gram(static_cast<std::size_t>(rank), std::vector<BigRational>(static_cast<std::size_t>(rank)));
  for (int a = 0; a < rank; ++a) {
    for (int b = 0; b < rank; ++b) {
      const QPoly v = classical_integral(classical_product(ClassicalElement::basis(r, a), ClassicalElement::basis(r, b)));
      gram[a][b] = v.constant_term();
    }
  }
  // Invert by Gauss-Jordan elimination.
  std::vector<std::vector<BigRational>> inv(static_cast<std::size_t>(rank), std::vector<BigRational>(static_cast<std::size_t>(rank)));
  for (int i = 0; i < rank; ++i) inv[i][i] = 1;
  for (int col = 0; col < rank; ++col) {
    int pivot = col;
    while (pivot < rank && gram[pivot][col] == 0) ++pivot;
    if (pivot == rank) throw Error(ErrorCode::NonIntegralResult, "degenerate Poincare pairing");
    std::swap(gram[pivot], gram[col]);
    std::swap(inv[pivot], inv[col]);
    const BigRational scale = 1 / gram[col][col];
    for (int j = 0; j < rank; ++j) {
      gram[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (int row = 0; row < rank; ++row) {
      if (row == col || gram[row][col] == 0) continue;
      const BigRational f = gram[row][col];
      for (int j = 0; j < rank; ++j) {
        gram[row][j] -= f * gram[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  // dual(b_a) = sum_c inv[c][a] b_c, so that <b_a, dual(b_b)> = delta_ab.
  QhElement out(r);
  for (int a = 0; a < rank; ++a) {
    ClassicalElement dual(r);
    for (int c = 0; c < rank; ++c) {
      if (inv[c][a] != 0) dual += QPoly(inv[c][a]) * ClassicalElement::basis(r, c);
    }
    out += star(classical_to_star(ClassicalElement::basis(r, a)), classical_to_star(dual));
  }
  return out;
}

// --- coefficient extraction -------------------------------------------------

namespace {

/// Classical P coefficient of x at q1^a q2^b.
BigRational point_coefficient(const QhElement& x, QExponent at) {
  return classical_integral(star_to_classical(x)).coeff_at(at);
}

}  // namespace

BigRational vtev_qh(const Problem& p) {
  if (p.beta.ell() != 1) throw Error(ErrorCode::RegimeViolation, "qh: requires exactly one blown-up point");
  if (p.r < 2) throw Error(ErrorCode::RegimeViolation, "qh: requires r >= 2");
  if (!p.balanced()) throw Error(ErrorCode::NotBalanced, "qh: problem is not balanced");
  const std::int64_t d = p.beta.d;
  const std::int64_t b = d - p.beta.k.front();
  if (b < 0) return 0;
  const QExponent target{static_cast<int>(d), static_cast<int>(b)};
  const int r = p.r;
  const QhElement point = classical_to_star(ClassicalElement::point(r));
  QhElement product = star_pow(point, p.n, target);
  const QhElement delta = euler_class_closed(r);
  for (int j = 0; j < p.g; ++j) {
    product = star(product, delta);
    product.truncate(target.a, target.b);
  }
  return point_coefficient(product, target);
}

LemmaCheck qh_coeff_lemma_check(int r, std::int64_t ell, std::int64_t m, std::int64_t d, std::int64_t k) {
  const bool ok = m >= 0 && k >= 0 && ell > 0 && d > 0 && ell - d - m > 0 && d >= k &&
                  (r + 1) * d - (r - 1) * k == r * (ell - 1);
  if (!ok) throw Error(ErrorCode::HypothesisViolation, "lemma hypotheses fail");
  LemmaCheck out;
  out.predicted = binom_gen(ell - d - m - 1, k);
  const std::int64_t b = d - k - m;
  if (b < 0) {
    out.computed = 0;
    return out;
  }
  const QExponent target{static_cast<int>(d), static_cast<int>(b)};
  const QhElement point = classical_to_star(ClassicalElement::point(r));
  QhElement product = star_pow(point, ell - m, target);
  product = star(product, star_pow(QhElement::exceptional(r), m, target));
  product.truncate(target.a, target.b);
  out.computed = point_coefficient(product, target);
  return out;
}

}  // namespace tev
