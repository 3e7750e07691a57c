#pragma once

// Independent ordinary (d = 1, trivial z) mutation, written directly from the
// classical exchange relations and used only as a test oracle. It shares no code
// with the engine beyond GMP: cluster and F-variables are tracked as values at
// fixed rational points, y in the tropical semifield as raw exponent vectors,
// B and C through the extended-matrix rule and g through its recursion.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace gencluster::testing {

class ClassicalOracle {
 public:
  using Vec = std::vector<std::int64_t>;

  /// `x0` and `v` are the values of the initial cluster variables and of the
  /// coefficient generators; `u` the values of the principal generators.
  ClassicalOracle(std::size_t n, Vec b, std::vector<Vec> y, std::vector<mpq_class> x0, std::vector<mpq_class> v,
                  std::vector<mpq_class> u)
      : n_(n), b_(std::move(b)), b0_(b_), y_(std::move(y)), x_(std::move(x0)), v_(std::move(v)), u_(std::move(u)) {
    c_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      c_[i * n + i] = 1;
      g_.push_back(Vec(n, 0));
      g_.back()[i] = 1;
      f_.push_back(1);
    }
  }

  void mutate(std::size_t k) {
    const auto n = n_;
    auto pos = [](std::int64_t a) { return a > 0 ? a : 0; };
    auto sgn = [](std::int64_t a) { return (a > 0) - (a < 0); };

    // Cluster variable: (y_k ∏ x^{[b_ik]+} + ∏ x^{[-b_ik]+}) / ((y_k ⊕ 1) x_k).
    mpq_class plus = monomial_value(y_[k]), minus = 1;
    for (std::size_t i = 0; i < n; ++i) {
      plus *= power(x_[i], pos(b(i, k)));
      minus *= power(x_[i], pos(-b(i, k)));
    }
    Vec oplus(y_[k].size());
    for (std::size_t a = 0; a < oplus.size(); ++a) oplus[a] = std::min<std::int64_t>(y_[k][a], 0);
    const mpq_class new_x = (plus + minus) / (monomial_value(oplus) * x_[k]);

    // F: (∏ u^{[c_jk]+} ∏ F^{[b_ik]+} + ∏ u^{[-c_jk]+} ∏ F^{[-b_ik]+}) / F_k.
    mpq_class fp = 1, fm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      fp *= power(u_[j], pos(c(j, k))) * power(f_[j], pos(b(j, k)));
      fm *= power(u_[j], pos(-c(j, k))) * power(f_[j], pos(-b(j, k)));
    }
    const mpq_class new_f = (fp + fm) / f_[k];

    // g'_k = -g_k + Σ_i [-b_ik]+ g_i - Σ_j [-c_jk]+ b⁰_j.
    Vec new_g(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      new_g[r] = -g_[k][r];
      for (std::size_t i = 0; i < n; ++i) new_g[r] += pos(-b(i, k)) * g_[i][r];
      for (std::size_t j = 0; j < n; ++j) new_g[r] -= pos(-c(j, k)) * b0_[r * n + j];
    }

    // Tropical y: y_k^{-1}, else y_i y_k^{[b_ki]+} (y_k ⊕ 1)^{-b_ki}.
    std::vector<Vec> new_y = y_;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < y_[k].size(); ++a) {
        new_y[i][a] = i == k ? -y_[k][a] : y_[i][a] + pos(b(k, i)) * y_[k][a] - b(k, i) * oplus[a];
      }
    }

    // Extended matrix [B; C]: b'_ij = -b_ij on row/column k, else b_ij + sgn(b_ik)[b_ik b_kj]+.
    const std::size_t rows = 2 * n;
    auto ext = [&](std::size_t i, std::size_t j) { return i < n ? b(i, j) : c(i - n, j); };
    Vec nb(n * n), nc(n * n);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto v = (i == k || j == k) ? -ext(i, j) : ext(i, j) + sgn(ext(i, k)) * pos(ext(i, k) * b(k, j));
        (i < n ? nb[i * n + j] : nc[(i - n) * n + j]) = v;
      }
    }

    x_[k] = new_x;
    f_[k] = new_f;
    g_[k] = std::move(new_g);
    y_ = std::move(new_y);
    b_ = std::move(nb);
    c_ = std::move(nc);
  }

  std::int64_t b(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }
  std::int64_t c(std::size_t j, std::size_t i) const { return c_[j * n_ + i]; }
  const Vec& b_entries() const { return b_; }
  /// Column i of C.
  Vec c_vector(std::size_t i) const {
    Vec out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = c(j, i);
    return out;
  }
  const Vec& g_vector(std::size_t i) const { return g_[i]; }
  const mpq_class& x(std::size_t i) const { return x_[i]; }
  const mpq_class& f(std::size_t i) const { return f_[i]; }
  const Vec& y(std::size_t i) const { return y_[i]; }

 private:
  static mpq_class power(const mpq_class& base, std::int64_t e) {
    mpq_class out = 1;
    const mpq_class b = e < 0 ? mpq_class(1 / base) : base;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out *= b;
    return out;
  }

  mpq_class monomial_value(const Vec& e) const {
    mpq_class out = 1;
    for (std::size_t a = 0; a < e.size(); ++a) out *= power(v_[a], e[a]);
    return out;
  }

  std::size_t n_;
  Vec b_, b0_, c_;
  std::vector<Vec> g_, y_;
  std::vector<mpq_class> x_, v_, u_, f_;
};

}  // namespace gencluster::testing
