#include "tevelev/cohring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "tevelev/errors.hpp"

namespace tev {
namespace {

std::uint64_t low_bits(int count) {
  return count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
}

/// Parity of the merge permutation placing the sorted odd word `b` after
/// the sorted odd word `a`: the number of pairs (x in a, y in b) with x > y.
int merge_parity(std::uint64_t a, std::uint64_t b) {
  int swaps = 0;
  while (b != 0) {
    const int y = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(y >= 63 ? std::uint64_t{0} : (a >> (y + 1)));
  }
  return swaps & 1;
}

/// Product of two basis monomials; returns 0 when the product vanishes,
/// otherwise the Koszul sign (+1 or -1).
int multiply_monomials(const AlgebraSignature& sig, const Monomial& a, const Monomial& b, Monomial& out) {
  if ((a.odd & b.odd) != 0) return 0;
  const std::uint64_t odd = a.odd | b.odd;
  std::uint64_t eta = 0;
  for (int i = 1; i <= sig.factor_count(); ++i) {
    const int ki = sig.k(i);
    if (ki == 0) continue;
    const int e = a.eta_exponent(i) + b.eta_exponent(i);
    if (2 * e + std::popcount(odd & sig.factor_mask(i)) > 2 * ki) return 0;
    eta |= static_cast<std::uint64_t>(e) << (8 * (i - 1));
  }
  out = Monomial{odd, eta};
  return merge_parity(a.odd, b.odd) ? -1 : 1;
}

bool within_caps(const AlgebraSignature& sig, const Monomial& m) {
  for (int i = 1; i <= sig.factor_count(); ++i) {
    const int ki = sig.k(i);
    const int e = m.eta_exponent(i);
    if (ki == 0) {
      if (e != 0) return false;
      continue;
    }
    if (2 * e + std::popcount(m.odd & sig.factor_mask(i)) > 2 * ki) return false;
  }
  return true;
}

void require_same_signature(const CohElement& a, const CohElement& b) {
  if (a.signature_ptr() != b.signature_ptr() && !(a.signature() == b.signature())) {
    throw Error(ErrorCode::SignatureMismatch, "elements live in different algebras");
  }
}

void require_nilpotent(const CohElement& u) {
  if (u.constant_term() != 0) throw Error(ErrorCode::NonNilpotent, "series argument has a nonzero constant term");
}

void check_factor(const AlgebraSignature& sig, int factor) {
  if (factor < 1 || factor > sig.factor_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "factor index " + std::to_string(factor) + " outside 1.." +
                                                std::to_string(sig.factor_count()));
  }
}

}  // namespace

// --- AlgebraSignature -------------------------------------------------------

AlgebraSignature::AlgebraSignature(int genus, std::vector<int> k) : genus_(genus), k_(std::move(k)) {
  if (genus_ < 0) throw Error(ErrorCode::IndexOutOfRange, "negative genus");
  if (static_cast<int>(k_.size()) > kMaxFactors) {
    throw Error(ErrorCode::Unsupported, "at most " + std::to_string(kMaxFactors) + " symmetric-product factors");
  }
  int next = 2 * genus_;
  jacobian_mask_ = low_bits(2 * genus_);
  for (int ki : k_) {
    if (ki < 0 || ki > kMaxK) throw Error(ErrorCode::Unsupported, "k entries must lie in 0.." + std::to_string(kMaxK));
    if (ki == 0) {
      zeta_base_.push_back(-1);
      factor_masks_.push_back(0);
      continue;
    }
    zeta_base_.push_back(next);
    if (next + 2 * genus_ > kMaxOddGenerators) {
      throw Error(ErrorCode::Unsupported, "more than " + std::to_string(kMaxOddGenerators) + " odd generators");
    }
    factor_masks_.push_back(low_bits(2 * genus_) << next);
    next += 2 * genus_;
  }
  odd_count_ = next;
}

int AlgebraSignature::top_degree() const {
  int sum = 0;
  for (int ki : k_) sum += ki;
  return 2 * genus_ + 2 * sum;
}

int AlgebraSignature::jacobian_bit(int alpha) const {
  if (alpha < 1 || alpha > 2 * genus_) throw Error(ErrorCode::IndexOutOfRange, "Jacobian generator index");
  return alpha - 1;
}

std::optional<int> AlgebraSignature::zeta_bit(int factor, int alpha) const {
  if (factor < 1 || factor > factor_count()) throw Error(ErrorCode::IndexOutOfRange, "factor index");
  if (alpha < 1 || alpha > 2 * genus_) throw Error(ErrorCode::IndexOutOfRange, "zeta generator index");
  const int base = zeta_base_[static_cast<std::size_t>(factor - 1)];
  if (base < 0) return std::nullopt;
  return base + alpha - 1;
}

SignaturePtr make_signature(int genus, std::vector<int> k) {
  return std::make_shared<const AlgebraSignature>(genus, std::move(k));
}

// --- CohElement -------------------------------------------------------------

CohElement CohElement::constant(SignaturePtr sig, const BigRational& c) {
  CohElement out(std::move(sig));
  out.add_term(Monomial{}, c);
  return out;
}

CohElement CohElement::monomial(SignaturePtr sig, const std::vector<int>& odd_bits,
                                const std::vector<int>& eta_exponents, const BigRational& c) {
  CohElement out(sig);
  Monomial m;
  int sign = 1;
  for (int bit : odd_bits) {
    if (bit < 0 || bit >= sig->odd_count()) throw Error(ErrorCode::IndexOutOfRange, "odd generator bit");
    const std::uint64_t single = std::uint64_t{1} << bit;
    if (m.odd & single) return out;
    if (merge_parity(m.odd, single)) sign = -sign;
    m.odd |= single;
  }
  for (std::size_t i = 0; i < eta_exponents.size(); ++i) {
    check_factor(*sig, static_cast<int>(i) + 1);
    if (eta_exponents[i] < 0) throw Error(ErrorCode::IndexOutOfRange, "negative eta exponent");
    if (eta_exponents[i] > 2 * AlgebraSignature::kMaxK) return out;
    m.eta |= static_cast<std::uint64_t>(eta_exponents[i]) << (8 * i);
  }
  if (!within_caps(*sig, m)) return out;
  out.add_term(m, sign > 0 ? c : -c);
  return out;
}

BigRational CohElement::constant_term() const { return coeff(Monomial{}); }

BigRational CohElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

int CohElement::degree(const Monomial& m) {
  int deg = std::popcount(m.odd);
  for (int i = 0; i < AlgebraSignature::kMaxFactors; ++i) deg += 2 * static_cast<int>((m.eta >> (8 * i)) & 0xffu);
  return deg;
}

std::optional<int> CohElement::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    const int d = degree(m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

CohElement CohElement::component(int deg) const {
  CohElement out(sig_);
  for (const auto& [m, c] : terms_) {
    if (degree(m) == deg) out.terms_.emplace(m, c);
  }
  return out;
}

void CohElement::add_term(const Monomial& m, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CohElement& CohElement::operator+=(const CohElement& o) {
  require_same_signature(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CohElement& CohElement::operator-=(const CohElement& o) {
  require_same_signature(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CohElement& CohElement::operator*=(const BigRational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

CohElement operator*(const CohElement& a, const CohElement& b) {
  require_same_signature(a, b);
  const AlgebraSignature& sig = a.signature();
  CohElement out(a.sig_);
  out.terms_.reserve(a.size() + b.size());
  Monomial prod;
  BigRational scratch;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const int sign = multiply_monomials(sig, ma, mb, prod);
      if (sign == 0) continue;
      scratch = ca * cb;
      if (sign < 0) scratch = -scratch;
      auto [it, inserted] = out.terms_.try_emplace(prod, scratch);
      if (!inserted) it->second += scratch;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

CohElement mul(const CohElement& a, const CohElement& b) { return a * b; }

bool operator==(const CohElement& a, const CohElement& b) {
  return a.signature() == b.signature() && a.terms_ == b.terms_;
}

std::string CohElement::to_string() const {
  if (terms_.empty()) return "0";
  const AlgebraSignature& sig = *sig_;
  // Deterministic output: sort monomials.
  std::map<std::pair<std::uint64_t, std::uint64_t>, BigRational> sorted;
  for (const auto& [m, c] : terms_) sorted.emplace(std::make_pair(m.eta, m.odd), c);
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : sorted) {
    if (!first) os << " + ";
    first = false;
    os << to_decimal(c);
    const Monomial m{key.second, key.first};
    for (int bit = 0; bit < sig.odd_count(); ++bit) {
      if (!(m.odd >> bit & 1u)) continue;
      if (bit < 2 * sig.genus()) {
        os << "*e" << bit + 1;
        continue;
      }
      for (int i = 1; i <= sig.factor_count(); ++i) {
        if (sig.factor_mask(i) >> bit & 1u) {
          const int alpha = bit - *sig.zeta_bit(i, 1) + 1;
          os << "*z" << i << "_" << alpha;
        }
      }
    }
    for (int i = 1; i <= sig.factor_count(); ++i) {
      const int e = m.eta_exponent(i);
      if (e > 0) os << "*eta" << i << "^" << e;
    }
  }
  return os.str();
}

// --- tautological classes ---------------------------------------------------

CohElement jacobian_class(const SignaturePtr& sig, int alpha) {
  return CohElement::monomial(sig, {sig->jacobian_bit(alpha)}, {});
}

CohElement zeta(const SignaturePtr& sig, int factor, int alpha) {
  auto bit = sig->zeta_bit(factor, alpha);
  if (!bit) return CohElement(sig);
  return CohElement::monomial(sig, {*bit}, {});
}

CohElement eta(const SignaturePtr& sig, int factor) {
  check_factor(*sig, factor);
  if (sig->k(factor) == 0) return CohElement(sig);
  std::vector<int> exps(static_cast<std::size_t>(factor), 0);
  exps.back() = 1;
  return CohElement::monomial(sig, {}, exps);
}

CohElement theta(const SignaturePtr& sig) {
  CohElement out(sig);
  const int g = sig->genus();
  for (int alpha = 1; alpha <= g; ++alpha) {
    out += CohElement::monomial(sig, {sig->jacobian_bit(alpha), sig->jacobian_bit(alpha + g)}, {});
  }
  return out;
}

CohElement taubar(const SignaturePtr& sig, int factor) {
  check_factor(*sig, factor);
  CohElement out(sig);
  const int g = sig->genus();
  for (int alpha = 1; alpha <= g; ++alpha) {
    for (int j1 = 1; j1 <= sig->factor_count(); ++j1) {
      if (j1 == factor || sig->k(j1) == 0) continue;
      for (int j2 = 1; j2 <= sig->factor_count(); ++j2) {
        if (j2 == factor || sig->k(j2) == 0) continue;
        out += CohElement::monomial(sig, {*sig->zeta_bit(j1, alpha), *sig->zeta_bit(j2, alpha + g)}, {});
      }
    }
  }
  return out;
}

CohElement xbar(const SignaturePtr& sig, int factor) {
  check_factor(*sig, factor);
  CohElement out(sig);
  const int g = sig->genus();
  for (int alpha = 1; alpha <= g; ++alpha) {
    for (int j = 1; j <= sig->factor_count(); ++j) {
      if (j == factor || sig->k(j) == 0) continue;
      out += CohElement::monomial(sig, {sig->jacobian_bit(alpha), *sig->zeta_bit(j, alpha + g)}, {});
      out -= CohElement::monomial(sig, {sig->jacobian_bit(alpha + g), *sig->zeta_bit(j, alpha)}, {});
    }
  }
  return out;
}

// --- series -----------------------------------------------------------------

CohElement geom_inverse_one_plus(const CohElement& u) { return pow_one_plus(u, -1); }

CohElement pow_one_plus(const CohElement& u, std::int64_t exponent) {
  require_nilpotent(u);
  CohElement sum = CohElement::one(u.signature_ptr());
  CohElement power = sum;
  for (std::int64_t j = 1;; ++j) {
    power = power * u;
    if (power.is_zero()) break;
    const BigInt c = binom_gen(exponent, j);
    if (c != 0) sum += BigRational(c) * power;
  }
  return sum;
}

CohElement exp_nilpotent(const CohElement& u) {
  require_nilpotent(u);
  CohElement sum = CohElement::one(u.signature_ptr());
  CohElement term = sum;
  for (std::int64_t j = 1;; ++j) {
    term = term * u;
    if (term.is_zero()) break;
    term *= BigRational(1, static_cast<unsigned long>(j));
    sum += term;
  }
  return sum;
}

// --- integration ------------------------------------------------------------

namespace {

/// ±1 if m is a normal-form top monomial, 0 otherwise.
int integration_sign(const AlgebraSignature& sig, const Monomial& m) {
  const int g = sig.genus();
  if ((m.odd & sig.jacobian_mask()) != sig.jacobian_mask()) return 0;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(sig.odd_count()));
  for (int alpha = 1; alpha <= g; ++alpha) {
    word.push_back(sig.jacobian_bit(alpha));
    word.push_back(sig.jacobian_bit(alpha + g));
  }
  for (int i = 1; i <= sig.factor_count(); ++i) {
    const int ki = sig.k(i);
    if (ki == 0) continue;
    int paired = 0;
    for (int alpha = 1; alpha <= g; ++alpha) {
      const bool lo = (m.odd >> *sig.zeta_bit(i, alpha)) & 1u;
      const bool hi = (m.odd >> *sig.zeta_bit(i, alpha + g)) & 1u;
      if (lo != hi) return 0;
      if (lo) {
        ++paired;
        word.push_back(*sig.zeta_bit(i, alpha));
        word.push_back(*sig.zeta_bit(i, alpha + g));
      }
    }
    if (m.eta_exponent(i) != ki - paired) return 0;
  }
  // The stored monomial is the ascending word; the sign is the parity of
  // the permutation taking it to the normal-form word.
  int inversions = 0;
  for (std::size_t a = 0; a < word.size(); ++a) {
    for (std::size_t b = a + 1; b < word.size(); ++b) inversions += word[a] > word[b];
  }
  return (inversions & 1) ? -1 : 1;
}

}  // namespace

BigRational integrate(const CohElement& x) {
  const AlgebraSignature& sig = x.signature();
  const int top = sig.top_degree();
  BigRational total = 0;
  for (const auto& [m, c] : x.terms()) {
    if (CohElement::degree(m) != top) continue;
    const int sign = integration_sign(sig, m);
    if (sign > 0) total += c;
    else if (sign < 0) total -= c;
  }
  return total;
}

}  // namespace tev
