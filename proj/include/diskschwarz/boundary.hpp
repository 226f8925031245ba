#pragma once

/**
 * @file boundary.hpp
 * @brief Boundary data on the unit circle, source fields on the disk, and the
 *        Fourier-series form of boundary data.
 */

#include <diskschwarz/core.hpp>
#include <diskschwarz/quadrature.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace diskschwarz {

namespace detail {

/// Table of e^{-2 pi i m / n} for m = 0..n-1; products are indexed mod n.
inline std::vector<complex> twiddles(int n) {
  std::vector<complex> tw(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) tw[static_cast<std::size_t>(m)] = unit(-uniform_angle(m, n));
  return tw;
}

/// DFT c_k = (1/n) sum_j v_j e^{-2 pi i j k / n}, k = 0..n-1.
inline std::vector<complex> dft(std::span<const complex> values) {
  const int n = static_cast<int>(values.size());
  const auto tw = twiddles(n);
  std::vector<complex> c(values.size());
  for (int k = 0; k < n; ++k) {
    complex s{0.0, 0.0};
    for (int j = 0; j < n; ++j)
      s += values[static_cast<std::size_t>(j)] *
           tw[static_cast<std::size_t>((static_cast<long long>(j) * k) % n)];
    c[static_cast<std::size_t>(k)] = s / static_cast<real>(n);
  }
  return c;
}

}  // namespace detail

/**
 * Trigonometric polynomial through n uniform samples (n even).
 *
 * Frequencies |k| < n/2 carry their DFT coefficient; the Nyquist coefficient
 * is split evenly between k = n/2 and k = -n/2, so the interpolant is
 * c_{n/2} cos(n t / 2) at that frequency and reproduces the samples at the nodes.
 */
class FourierSeries {
 public:
  FourierSeries() = default;

  explicit FourierSeries(std::span<const complex> samples) {
    const std::size_t n = samples.size();
    if (n < 2 || n % 2 != 0) throw DomainError("FourierSeries: sample count must be even and >= 2");
    n_ = static_cast<int>(n);
    const auto c = detail::dft(samples);
    const int half = n_ / 2;
    // positive_[k] = c_k, negative_[k] = c_{-k}, k = 0..n/2
    positive_.assign(static_cast<std::size_t>(half) + 1, complex{});
    negative_.assign(static_cast<std::size_t>(half) + 1, complex{});
    for (int k = 0; k < half; ++k) positive_[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)];
    for (int k = 1; k < half; ++k) negative_[static_cast<std::size_t>(k)] = c[n - static_cast<std::size_t>(k)];
    positive_[static_cast<std::size_t>(half)] = 0.5 * c[static_cast<std::size_t>(half)];
    negative_[static_cast<std::size_t>(half)] = 0.5 * c[static_cast<std::size_t>(half)];
  }

  template <AngleFunction F>
  static FourierSeries from_function(const F& fn, int n) {
    std::vector<complex> s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = fn(uniform_angle(j, n));
    return FourierSeries(s);
  }

  int size() const noexcept { return n_; }

  /// Coefficient of e^{ikt}; zero outside |k| <= n/2.
  complex coefficient(int k) const noexcept {
    const int half = n_ / 2;
    if (k > half || -k > half) return {};
    return k >= 0 ? positive_[static_cast<std::size_t>(k)] : negative_[static_cast<std::size_t>(-k)];
  }

  /// Value of the interpolant at angle t.
  complex operator()(real t) const { return harmonic_extension(unit(t)); }

  /**
   * Harmonic extension sum_{k>=0} c_k z^k + sum_{k>0} c_{-k} conj(z)^k,
   * valid on the closed disk. Equals the Poisson integral of the interpolant.
   */
  complex harmonic_extension(complex z) const noexcept {
    return horner(positive_, z, 0) + horner(negative_, std::conj(z), 1);
  }

  /// sum_{k>=1} k c_{-k} conj(z)^k; the Cauchy-type correction integral before the (1-|z|^2) factor.
  complex cauchy_sum(complex z) const noexcept {
    const complex zb = std::conj(z);
    complex acc{0.0, 0.0};
    for (std::size_t k = negative_.size(); k-- > 1;) acc = (acc + static_cast<real>(k) * negative_[k]) * zb;
    return acc;
  }

 private:
  static complex horner(const std::vector<complex>& c, complex z, std::size_t first) noexcept {
    complex acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > first;) acc = acc * z + c[k];
    return first == 0 ? acc : acc * z;
  }

  int n_ = 0;
  std::vector<complex> positive_;
  std::vector<complex> negative_;
};

/**
 * A complex-valued function on the unit circle, parametrized by angle.
 *
 * Either a built-in closed form or uniform samples evaluated by trigonometric
 * interpolation. The `analytic` flag is a user assertion that the function is
 * the boundary trace of a function analytic in the disk.
 */
class BoundaryFunction {
 public:
  enum class Kind { builtin, sampled };

  BoundaryFunction() : BoundaryFunction(zero()) {}

  static BoundaryFunction builtin(std::string name, std::function<complex(real)> fn, bool analytic = false) {
    BoundaryFunction b(Kind::builtin, std::move(name), analytic);
    b.fn_ = std::move(fn);
    return b;
  }

  static BoundaryFunction sampled(std::vector<complex> samples, bool analytic = false) {
    if (samples.size() < 16 || samples.size() % 2 != 0)
      throw DomainError("BoundaryFunction: sample count must be even and >= 16, got " +
                        std::to_string(samples.size()));
    for (const auto& s : samples)
      if (!is_finite(s)) throw DomainError("BoundaryFunction: non-finite sample");
    BoundaryFunction b(Kind::sampled, "samples", analytic);
    auto data = std::make_shared<Sampled>();
    data->series = FourierSeries(samples);
    data->values = std::move(samples);
    b.sampled_ = std::move(data);
    return b;
  }

  static BoundaryFunction zero() {
    return builtin("zero", [](real) { return complex{}; }, true);
  }

  static BoundaryFunction constant(complex c) {
    return builtin("constant", [c](real) { return c; }, true);
  }

  /// coeff * e^{ikt}; analytic iff k >= 0.
  static BoundaryFunction mode(int k, complex coeff = 1.0) {
    return builtin("mode", [k, coeff](real t) { return coeff * unit(k * t); }, k >= 0);
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool analytic() const noexcept { return analytic_; }

  BoundaryFunction with_analytic(bool flag) const {
    BoundaryFunction b = *this;
    b.analytic_ = flag;
    return b;
  }

  BoundaryFunction renamed(std::string name) const {
    BoundaryFunction b = *this;
    b.name_ = std::move(name);
    return b;
  }

  /// Samples of the sampled variant; empty for built-ins.
  std::span<const complex> samples() const noexcept {
    if (!sampled_) return {};
    return sampled_->values;
  }

  complex operator()(real t) const {
    if (kind_ == Kind::builtin) return fn_(t);
    const auto& v = sampled_->values;
    const real n = static_cast<real>(v.size());
    const real pos = std::fmod(t, two_pi) / two_pi * n;
    const real idx = std::round(pos);
    if (std::abs(pos - idx) < 1e-9) {
      auto j = static_cast<long long>(idx) % static_cast<long long>(v.size());
      if (j < 0) j += static_cast<long long>(v.size());
      return v[static_cast<std::size_t>(j)];
    }
    return sampled_->series(t);
  }

  /// Fourier series from n uniform evaluations; n should match the sample count for sampled data.
  FourierSeries series(int n) const {
    if (kind_ == Kind::sampled && static_cast<int>(sampled_->values.size()) == n) return sampled_->series;
    return FourierSeries::from_function(*this, n);
  }

 private:
  struct Sampled {
    std::vector<complex> values;
    FourierSeries series;
  };

  BoundaryFunction(Kind kind, std::string name, bool analytic)
      : kind_(kind), name_(std::move(name)), analytic_(analytic) {}

  Kind kind_ = Kind::builtin;
  std::string name_;
  bool analytic_ = false;
  std::function<complex(real)> fn_;
  std::shared_ptr<const Sampled> sampled_;
};

/// Right-hand side g of the biharmonic equation, defined on the closed disk.
class SourceField {
 public:
  enum class Kind { builtin, zero };

  SourceField() : SourceField(zero()) {}

  static SourceField zero() {
    SourceField s(Kind::zero, "zero", [](complex) { return complex{}; });
    s.sup_norm_hint_ = 0.0;
    return s;
  }

  static SourceField builtin(std::string name, std::function<complex(complex)> fn,
                             std::optional<real> sup_norm_hint = std::nullopt) {
    SourceField s(Kind::builtin, std::move(name), std::move(fn));
    s.sup_norm_hint_ = sup_norm_hint;
    return s;
  }

  static SourceField constant(complex c) {
    return builtin("constant", [c](complex) { return c; }, std::abs(c));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::zero; }
  const std::string& name() const noexcept { return name_; }
  const std::optional<real>& sup_norm_hint() const noexcept { return sup_norm_hint_; }

  complex operator()(complex w) const { return fn_(w); }

 private:
  SourceField(Kind kind, std::string name, std::function<complex(complex)> fn)
      : kind_(kind), name_(std::move(name)), fn_(std::move(fn)) {}

  Kind kind_ = Kind::zero;
  std::string name_;
  std::function<complex(complex)> fn_;
  std::optional<real> sup_norm_hint_;
};

}  // namespace diskschwarz
