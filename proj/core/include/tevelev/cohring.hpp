#pragma once

// Free graded-commutative model of H^*(Jac^d(C) x prod_i Sym^{k_i}(C)).
//
// Odd generators, in canonical order:
//   e'_1 < ... < e'_{2g} < zeta_{1,1} < ... < zeta_{1,2g} < zeta_{2,1} < ...
// where a factor i contributes zeta_{i,*} only when k_i > 0. Each factor with
// k_i > 0 also contributes one even generator eta_i. A monomial whose degree
// in some factor exceeds that factor's real dimension (2g for the Jacobian,
// 2 k_i for Sym^{k_i}) is dropped as soon as it is produced.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tevelev/exactmath.hpp"

namespace tev {

class AlgebraSignature {
 public:
  static constexpr int kMaxFactors = 8;
  static constexpr int kMaxOddGenerators = 64;
  static constexpr int kMaxK = 63;

  /// `k` lists one entry per symmetric-product factor (r+1 entries after padding).
  /// Throws Unsupported when the packed monomial encoding cannot hold the algebra.
  AlgebraSignature(int genus, std::vector<int> k);

  int genus() const { return genus_; }
  int factor_count() const { return static_cast<int>(k_.size()); }
  /// 1-based factor index.
  int k(int factor) const { return k_.at(static_cast<std::size_t>(factor - 1)); }
  const std::vector<int>& ks() const { return k_; }
  int odd_count() const { return odd_count_; }
  /// Real dimension 2g + 2 sum k_i: the degree of the fundamental class.
  int top_degree() const;

  /// Bit index of e'_alpha, alpha in 1..2g.
  int jacobian_bit(int alpha) const;
  /// Bit index of zeta_{factor, alpha}; nullopt when k_factor = 0.
  std::optional<int> zeta_bit(int factor, int alpha) const;
  std::uint64_t jacobian_mask() const { return jacobian_mask_; }
  std::uint64_t factor_mask(int factor) const { return factor_masks_.at(static_cast<std::size_t>(factor - 1)); }

  friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
    return a.genus_ == b.genus_ && a.k_ == b.k_;
  }

 private:
  int genus_;
  std::vector<int> k_;
  std::vector<int> zeta_base_;  // -1 for k_i = 0
  std::vector<std::uint64_t> factor_masks_;
  std::uint64_t jacobian_mask_ = 0;
  int odd_count_ = 0;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

SignaturePtr make_signature(int genus, std::vector<int> k);

/// Odd part as a bitmask over canonical generator indices; eta exponents
/// packed eight bits per factor.
struct Monomial {
  std::uint64_t odd = 0;
  std::uint64_t eta = 0;

  int eta_exponent(int factor) const { return static_cast<int>((eta >> (8 * (factor - 1))) & 0xffu); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = m.odd * 0x9e3779b97f4a7c15ull;
    h ^= m.eta + 0x7f4a7c159e3779b9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

class CohElement {
 public:
  using Terms = std::unordered_map<Monomial, BigRational, MonomialHash>;

  explicit CohElement(SignaturePtr sig) : sig_(std::move(sig)) {}

  static CohElement constant(SignaturePtr sig, const BigRational& c);
  static CohElement one(SignaturePtr sig) { return constant(std::move(sig), 1); }
  /// c * g_1 g_2 ... g_m * prod eta_i^{a_i} for odd generator bits listed in
  /// any order; the Koszul sign of sorting them is applied. Repeated odd
  /// generators or cap overflow produce zero.
  static CohElement monomial(SignaturePtr sig, const std::vector<int>& odd_bits,
                             const std::vector<int>& eta_exponents, const BigRational& c = 1);

  const AlgebraSignature& signature() const { return *sig_; }
  const SignaturePtr& signature_ptr() const { return sig_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigRational constant_term() const;
  BigRational coeff(const Monomial& m) const;

  /// Real degree of a monomial: odd generators count 1, eta_i counts 2.
  static int degree(const Monomial& m);
  /// The common degree of all terms, or nullopt for mixed/zero elements.
  std::optional<int> homogeneous_degree() const;
  /// Drops all terms whose real degree differs from `deg`.
  CohElement component(int deg) const;

  void add_term(const Monomial& m, const BigRational& c);

  CohElement& operator+=(const CohElement& o);
  CohElement& operator-=(const CohElement& o);
  CohElement& operator*=(const BigRational& s);

  friend CohElement operator+(CohElement a, const CohElement& b) { return a += b; }
  friend CohElement operator-(CohElement a, const CohElement& b) { return a -= b; }
  friend CohElement operator-(CohElement a) { return a *= BigRational(-1); }
  friend CohElement operator*(const BigRational& s, CohElement a) { return a *= s; }
  friend CohElement operator*(const CohElement& a, const CohElement& b);
  friend bool operator==(const CohElement& a, const CohElement& b);

  std::string to_string() const;

 private:
  SignaturePtr sig_;
  Terms terms_;
};

CohElement mul(const CohElement& a, const CohElement& b);

// Tautological classes. Factor indices are 1-based; sums over j != i skip
// factors with k_j = 0.
CohElement theta(const SignaturePtr& sig);
CohElement eta(const SignaturePtr& sig, int factor);
CohElement taubar(const SignaturePtr& sig, int factor);
CohElement xbar(const SignaturePtr& sig, int factor);
CohElement jacobian_class(const SignaturePtr& sig, int alpha);
CohElement zeta(const SignaturePtr& sig, int factor, int alpha);

// Series of nilpotent elements. All throw NonNilpotent when u has a
// nonzero constant term.
CohElement geom_inverse_one_plus(const CohElement& u);             // (1+u)^{-1}
CohElement pow_one_plus(const CohElement& u, std::int64_t exponent); // (1+u)^N, any integer N
CohElement exp_nilpotent(const CohElement& u);

/// Integration against the fundamental class. Only top-degree monomials in
/// normal form ∏(e'_a e'_{a+g}) ∏_i ∏_{a in I_i}(zeta_{i,a} zeta_{i,a+g}) eta_i^{k_i-|I_i|}
/// contribute, each with value ±1.
BigRational integrate(const CohElement& x);

}  // namespace tev
