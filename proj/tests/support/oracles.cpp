#include "oracles.hpp"

#include <algorithm>
#include <deque>

namespace oracle {
namespace {

int inversion_parity(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j] ? 1 : 0;
  }
  return inv % 2;
}

BigInt binom_small(std::int64_t a, std::int64_t b) { return series_binom(a, b); }

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b, std::size_t order) {
  Poly out(order, 0);
  for (std::size_t i = 0; i < a.size() && i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

BigInt series_binom(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  const auto order = static_cast<std::size_t>(b + 1);
  Poly factor(order, 0);
  if (a >= 0) {
    factor[0] = 1;
    if (order > 1) factor[1] = 1;
  } else {
    for (std::size_t j = 0; j < order; ++j) factor[j] = (j % 2 == 0) ? 1 : -1;
  }
  Poly acc(order, 0);
  acc[0] = 1;
  const std::int64_t reps = a >= 0 ? a : -a;
  for (std::int64_t i = 0; i < reps; ++i) acc = poly_mul(acc, factor, order);
  return acc[static_cast<std::size_t>(b)];
}

BigInt exterior_theta_top(int g) {
  using Word = std::vector<int>;
  std::map<Word, BigInt> theta;
  for (int a = 0; a < g; ++a) theta[{a, a + g}] += 1;

  std::map<Word, BigInt> power{{Word{}, BigInt(1)}};
  for (int step = 0; step < g; ++step) {
    std::map<Word, BigInt> next;
    for (const auto& [w1, c1] : power) {
      for (const auto& [w2, c2] : theta) {
        Word w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        const int sign = inversion_parity(w) ? -1 : 1;
        next[sorted] += sign * c1 * c2;
      }
    }
    power = std::move(next);
  }

  Word top(static_cast<std::size_t>(2 * g));
  for (int i = 0; i < 2 * g; ++i) top[static_cast<std::size_t>(i)] = i;
  auto it = power.find(top);
  if (it == power.end()) return 0;
  // Express against the normal form e_1 e_{1+g} e_2 e_{2+g} ...
  Word normal;
  for (int a = 0; a < g; ++a) {
    normal.push_back(a);
    normal.push_back(a + g);
  }
  return inversion_parity(normal) ? BigInt(-it->second) : it->second;
}

BigInt residue_l1(int r, int g, std::int64_t n, std::int64_t d, std::int64_t k) {
  if (k < 0) return 0;
  const auto order = static_cast<std::size_t>(k + 1);
  Poly acc(order, 0);
  for (std::size_t j = 0; j < order; ++j) acc[j] = series_binom(n - 1 - d, static_cast<std::int64_t>(j));
  const Poly lin{BigInt(r + 1), BigInt(2 * r)};
  for (int i = 0; i < g; ++i) acc = poly_mul(acc, lin, order);
  return acc[static_cast<std::size_t>(k)];
}

BigInt genus0_series(int r, std::int64_t n, std::int64_t d, const std::vector<std::int64_t>& k_in) {
  std::vector<std::int64_t> k = k_in;
  k.resize(static_cast<std::size_t>(r + 1), 0);
  std::int64_t total_k = 0;
  for (auto x : k) total_k += x;
  BigInt total = 0;
  for (std::int64_t m = 0; m <= n; ++m) {
    BigInt term = binom_small(n, m) * ((m % 2 == 0) ? 1 : -1);
    for (auto ki : k) {
      // [eta^{k_i}] (1+eta)^{n-m-1-d+kbar_i} eta^m
      term *= series_binom(n - m - 1 - d + (total_k - ki), ki - m);
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

NaiveQh::Elem NaiveQh::reduce(Elem x) const {
  Elem out;
  std::deque<std::pair<Key, BigRational>> work(x.begin(), x.end());
  while (!work.empty()) {
    auto [key, c] = work.front();
    work.pop_front();
    if (c == 0 || key.a > max_a_ || key.b > max_b_) continue;
    if (key.e >= 2) {
      work.push_back({{key.u, key.e - 2, key.a + 1, key.b}, c});
      work.push_back({{key.u + 1, key.e - 1, key.a, key.b}, -c});
    } else if (key.u >= r_) {
      work.push_back({{key.u - r_, key.e + 1, key.a, key.b + 1}, c});
    } else {
      BigRational& slot = out[key];
      slot += c;
      if (slot == 0) out.erase(key);
    }
  }
  return out;
}

NaiveQh::Elem NaiveQh::mul(const Elem& x, const Elem& y) const {
  Elem raw;
  for (const auto& [k1, c1] : x) {
    for (const auto& [k2, c2] : y) {
      const Key key{k1.u + k2.u, k1.e + k2.e, k1.a + k2.a, k1.b + k2.b};
      if (key.a > max_a_ || key.b > max_b_) continue;
      raw[key] += c1 * c2;
    }
  }
  return reduce(std::move(raw));
}

NaiveQh::Elem NaiveQh::point() const { return reduce({{{r_, 0, 0, 0}, 1}, {{r_ - 1, 1, 0, 0}, 1}}); }

NaiveQh::Elem NaiveQh::exceptional() const { return {{{0, 1, 0, 0}, 1}}; }

NaiveQh::Elem NaiveQh::euler() const {
  Elem out = point();
  for (auto& [key, c] : out) c *= 2 * r_;
  if (max_b_ >= 1) out[{0, 1, 0, 1}] -= r_ - 1;
  return reduce(out);
}

BigRational NaiveQh::point_coeff(const Elem& x, int a, int b) const {
  auto it = x.find({r_ - 1, 1, a, b});
  return it == x.end() ? BigRational(0) : it->second;
}

BigRational vtev_naive(int r, int g, std::int64_t n, std::int64_t d, std::int64_t k) {
  if (d - k < 0) return 0;
  const int a = static_cast<int>(d);
  const int b = static_cast<int>(d - k);
  NaiveQh ring(r, a, b);
  NaiveQh::Elem acc{{{0, 0, 0, 0}, 1}};
  const auto p = ring.point();
  for (std::int64_t i = 0; i < n; ++i) acc = ring.mul(acc, p);
  const auto delta = ring.euler();
  for (int i = 0; i < g; ++i) acc = ring.mul(acc, delta);
  return ring.point_coeff(acc, a, b);
}

}  // namespace oracle
