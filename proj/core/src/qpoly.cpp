#include "tevelev/qpoly.hpp"

namespace tev {

QPoly QPoly::monomial(QExponent e, const BigRational& c) {
  QPoly p;
  p.add_term(e, c);
  return p;
}

BigRational QPoly::coeff_at(QExponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void QPoly::add_term(QExponent e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void QPoly::truncate(int max_a, int max_b) {
  std::erase_if(terms_, [&](const auto& kv) { return kv.first.a > max_a || kv.first.b > max_b; });
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const BigRational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.a + eb.a, ea.b + eb.b}, ca * cb);
  }
  return out;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string coeff = to_decimal(c);
    if (!out.empty()) out += (coeff.front() == '-') ? " - " : " + ";
    else if (coeff.front() == '-') out += "-";
    if (coeff.front() == '-') coeff.erase(0, 1);
    const bool unit = coeff == "1";
    std::string mono;
    if (e.a > 0) mono += e.a == 1 ? "q1" : "q1^" + std::to_string(e.a);
    if (e.b > 0) mono += std::string(mono.empty() ? "" : "*") + (e.b == 1 ? "q2" : "q2^" + std::to_string(e.b));
    if (mono.empty()) out += coeff;
    else out += unit ? mono : coeff + "*" + mono;
  }
  return out;
}

}  // namespace tev
