#include "hbsum/analytic.hpp"

#include "hbsum/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hbsum {

namespace {

constexpr double kPi = std::numbers::pi;

double ipow(double base, std::int64_t e) {
  double r = 1.0;
  for (std::int64_t k = 0; k < e; ++k) r *= base;
  return r;
}

std::complex<double> ipow_i(std::int64_t e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

double factorial_d(std::int64_t n) {
  double r = 1.0;
  for (std::int64_t k = 2; k <= n; ++k) r *= static_cast<double>(k);
  return r;
}

// e^{2 pi i d x} for rational x, reduced mod 1 to p/q; the phase has period
// q in d, so the reduction (d p) mod q is exact integer arithmetic.
class PhaseGen {
 public:
  explicit PhaseGen(const Rational& x) {
    const Rational fr = floor_frac(x).second;
    const Int den = denominator(fr);
    if (den > Int(std::int64_t{1} << 40)) {
      throw DomainError("phase denominator too large: " + to_string(fr));
    }
    q_ = den.convert_to<std::int64_t>();
    p_ = numerator(fr).convert_to<std::int64_t>();
    if (q_ > 1) {
      sin_pi_x_ = std::abs(std::sin(kPi * static_cast<double>(p_) / static_cast<double>(q_)));
      if (q_ <= 1 << 16) {
        table_.resize(static_cast<std::size_t>(q_));
        for (std::int64_t k = 0; k < q_; ++k) {
          const double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(q_);
          table_[static_cast<std::size_t>(k)] = {std::cos(ang), std::sin(ang)};
        }
      }
    }
  }

  bool trivial() const { return q_ == 1; }
  double sin_pi_x() const { return sin_pi_x_; }

  std::complex<double> at(std::int64_t d) const {
    if (q_ == 1) return {1.0, 0.0};
    auto k = static_cast<std::int64_t>((static_cast<__int128>(d % q_) * p_) % q_);
    if (k < 0) k += q_;
    if (!table_.empty()) return table_[static_cast<std::size_t>(k)];
    const double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(q_);
    return {std::cos(ang), std::sin(ang)};
  }

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
  double sin_pi_x_ = 0.0;
  std::vector<std::complex<double>> table_;
};

struct BilateralOut {
  std::complex<double> value{0.0, 0.0};
  double bound = std::numeric_limits<double>::infinity();
  std::int64_t pairs = 0;
  bool converged = false;
};

// Symmetric sum over d of e^{2 pi i d x} / (d + alpha)^j, pairing d with -d.
// For x in Z the paired terms are monotone and an integral-plus-midpoint
// tail correction is added (remainder bounded by |f'(M)|/12); otherwise the
// tail is bounded through summation by parts against the bounded phase
// partial sums.
BilateralOut bilateral_sum(std::int64_t j, double alpha, const Rational& x,
                           bool skip_zero, const TruncationPlan& plan) {
  PhaseGen phase(x);
  const double sgnj = (j % 2 == 0) ? 1.0 : -1.0;
  const std::int64_t min_valid =
      static_cast<std::int64_t>(std::ceil(std::abs(alpha))) + 8;
  const std::int64_t cap = std::max<std::int64_t>(plan.max_terms, 1);

  std::complex<double> raw{0.0, 0.0};
  double abs_sum = 0.0;
  if (!skip_zero) {
    raw += 1.0 / ipow(alpha, j);
    abs_sum += std::abs(raw);
  }

  BilateralOut out;
  std::int64_t done = 0;
  std::int64_t target = std::clamp<std::int64_t>(plan.initial_terms, 1, cap);
  target = std::min(std::max(target, std::min(min_valid, cap)), cap);

  for (;;) {
    for (std::int64_t d = done + 1; d <= target; ++d) {
      const double pp = ipow(static_cast<double>(d) + alpha, j);
      const double pm = ipow(static_cast<double>(d) - alpha, j);
      if (phase.trivial()) {
        const double t = 1.0 / pp + sgnj / pm;
        raw += t;
        abs_sum += std::abs(t);
      } else {
        const std::complex<double> e = phase.at(d);
        const std::complex<double> t = e / pp + sgnj * std::conj(e) / pm;
        raw += t;
        abs_sum += std::abs(t);
      }
    }
    done = target;

    out.value = raw;
    out.bound = std::numeric_limits<double>::infinity();
    if (done >= min_valid) {
      const double M = static_cast<double>(done) + 1.0;
      const double rnd = 1e-15 * (1.0 + abs_sum);
      if (phase.trivial()) {
        const double f1 = 1.0 / ipow(M + alpha, j);
        const double f2 = 1.0 / ipow(M - alpha, j);
        const double integral =
            (j == 1) ? -std::log((M + alpha) / (M - alpha))
                     : (1.0 / ipow(M + alpha, j - 1) + sgnj / ipow(M - alpha, j - 1)) /
                           static_cast<double>(j - 1);
        out.value = raw + integral + 0.5 * (f1 + sgnj * f2);
        out.bound = static_cast<double>(j) *
                        (1.0 / ipow(M + alpha, j + 1) + 1.0 / ipow(M - alpha, j + 1)) /
                        12.0 +
                    rnd;
      } else {
        out.bound = 4.0 / (phase.sin_pi_x() * ipow(M - std::abs(alpha), j)) + rnd;
      }
    }
    if (out.bound <= plan.tolerance || done >= cap) break;
    const auto grown = static_cast<std::int64_t>(
        static_cast<double>(done) * std::max(plan.growth_factor, 1.5));
    target = std::clamp<std::int64_t>(grown, done + 1, cap);
  }

  out.pairs = done;
  out.converged = out.bound <= plan.tolerance;
  return out;
}

}  // namespace

TruncationPlan TruncationPlan::for_order(std::int64_t j) {
  TruncationPlan plan;
  plan.tolerance = (j <= 1) ? 1e-4 : 1e-6;
  return plan;
}

namespace {

// The plan tolerance speaks about the final value, so the series core runs
// against tolerance / |prefactor|.
TruncationPlan scaled_plan(const TruncationPlan& plan, double pref_mag) {
  TruncationPlan core = plan;
  core.tolerance = plan.tolerance / std::max(pref_mag, 1e-300);
  return core;
}

}  // namespace

ApproxComplex ebar_fourier(std::int64_t n, const Rational& x,
                           const TruncationPlan& plan) {
  if (n < 0) throw DomainError("ebar_fourier: negative order");
  // sum_k e^{2 pi i (k - 1/2) x} / (k - 1/2)^{n+1}
  //   = e^{-pi i x} * bilateral(j = n+1, alpha = -1/2, x)
  const std::complex<double> pref =
      2.0 * factorial_d(n) / (ipow(2.0 * kPi, n + 1) * ipow_i(n + 1));
  const auto core = bilateral_sum(n + 1, -0.5, x, /*skip_zero=*/false,
                                  scaled_plan(plan, std::abs(pref)));
  const Rational x_mod2 = x - Rational(2) * Rational(floor_frac(x / 2).first);
  const double half_ang = -kPi * to_double(x_mod2);
  const std::complex<double> twist{std::cos(half_ang), std::sin(half_ang)};
  const std::complex<double> v = pref * twist * core.value;
  return {v.real(), v.imag(), std::abs(pref) * core.bound};
}

ApproxComplex bbar_fourier(std::int64_t n, const Rational& x,
                           const TruncationPlan& plan) {
  if (n < 1) throw DomainError("bbar_fourier: order must be >= 1");
  const std::complex<double> pref =
      -factorial_d(n) / (ipow(2.0 * kPi, n) * ipow_i(n));
  const auto core = bilateral_sum(n, 0.0, x, /*skip_zero=*/true,
                                  scaled_plan(plan, std::abs(pref)));
  const std::complex<double> v = pref * core.value;
  return {v.real(), v.imag(), std::abs(pref) * core.bound};
}

std::vector<Int> cot_derivative_coeffs(std::int64_t order) {
  if (order < 0) throw DomainError("cot_derivative: negative order");
  std::vector<Int> q = {Int(0), Int(1)};  // q_0(t) = t
  for (std::int64_t k = 0; k < order; ++k) {
    // q_{k+1} = -(1 + t^2) q_k'
    std::vector<Int> deriv(q.size() > 1 ? q.size() - 1 : 1, Int(0));
    for (std::size_t i = 1; i < q.size(); ++i) {
      deriv[i - 1] = Int(i) * q[i];
    }
    std::vector<Int> next(deriv.size() + 2, Int(0));
    for (std::size_t i = 0; i < deriv.size(); ++i) {
      next[i] -= deriv[i];
      next[i + 2] -= deriv[i];
    }
    q = std::move(next);
  }
  return q;
}

double cot_derivative(std::int64_t order, const Rational& a) {
  if (is_integer(a)) {
    throw DomainError("cot_derivative: pole at integer argument " + to_string(a));
  }
  const Rational fr = floor_frac(a).second;  // cot(pi a) has period 1
  const double fd = to_double(fr);
  const double t = std::cos(kPi * fd) / std::sin(kPi * fd);
  const auto coeffs = cot_derivative_coeffs(order);
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * t + it->convert_to<double>();
  }
  return ipow(kPi, order) * acc;
}

ApproxComplex periodic_zeta_closed(std::int64_t r, std::int64_t b,
                                   std::int64_t j) {
  if (b == 0) throw DomainError("periodic_zeta_closed: b must be nonzero");
  if (j < 1) throw DomainError("periodic_zeta_closed: j must be >= 1");
  const std::int64_t ab = std::abs(b);
  std::complex<double> sum{0.0, 0.0};
  double abs_sum = 0.0;
  for (std::int64_t l = 0; l < ab; ++l) {
    // phase exponent -2 pi i l r / b + pi i l / b == 2 pi i * l(1-2r)/(2b)
    const Rational w = make_rational(Int(l) * (1 - 2 * r), Int(2) * b);
    const double ang = 2.0 * kPi * to_double(floor_frac(w).second);
    const double e = to_double(euler_bar(j - 1, Rational(l, ab)));
    sum += std::complex<double>{std::cos(ang) * e, std::sin(ang) * e};
    abs_sum += std::abs(e);
  }
  double scale = ipow(static_cast<double>(ab), j - 1) / 2.0;
  if (j % 2 != 0) scale = -scale;
  std::complex<double> v = scale * sum;
  if (j == 1) v -= 0.5;
  return {v.real(), v.imag(), 1e-14 * (1.0 + std::abs(scale) * abs_sum)};
}

CheckResult lemma24_check(const Rational& point, std::int64_t j,
                          double tolerance) {
  if (j < 1) throw DomainError("lemma24_check: j must be >= 1");
  CheckResult res;
  res.check = "lemma24";
  res.tolerance = tolerance;
  {
    std::ostringstream os;
    os << "j=" << j << " point=" << to_string(point);
    res.params = os.str();
  }
  // point must equal r/b - 1/(2b) = (2r-1)/(2b): even reduced denominator
  const Int den = denominator(point);
  if (den % 2 != 0 || den > Int(std::int64_t{1} << 40) ||
      boost::multiprecision::abs(numerator(point)) > Int(std::int64_t{1} << 40)) {
    res.status = CheckStatus::unsupported_point;
    res.params += " (not of the form r/b - 1/(2b))";
    return res;
  }
  const auto b = (den / 2).convert_to<std::int64_t>();
  const auto r = ((numerator(point) + 1) / 2).convert_to<std::int64_t>();

  const double lhs = cot_derivative(j - 1, point);
  const ApproxComplex zeta = periodic_zeta_closed(r, b, j);
  std::complex<double> rhs = std::pow(2.0, static_cast<double>(j)) *
                             ipow(kPi, j - 1) * ipow_i(j - 2) * zeta.value();
  if (j == 1) rhs += std::complex<double>{0.0, -1.0};

  res.lhs = {lhs, 0.0};
  res.rhs = rhs;
  res.deviation = std::abs(res.lhs - rhs);
  res.bound = 1e-12 * (1.0 + std::abs(lhs) + std::abs(rhs)) +
              std::pow(2.0, static_cast<double>(j)) * ipow(kPi, j - 1) * zeta.tail_bound;
  res.terms_used = std::abs(b);
  res.passed = res.deviation <= std::max(tolerance, res.bound);
  return res;
}

namespace {

CheckResult bilateral_lemma_check(const char* name, std::int64_t j,
                                  std::int64_t b, std::int64_t r,
                                  const Rational& x,
                                  const TruncationPlan& plan,
                                  bool include_x_in_params) {
  if (j < 1) throw DomainError("bilateral check: j must be >= 1");
  if (b == 0) throw DomainError("bilateral check: b must be nonzero");
  CheckResult res;
  res.check = name;
  res.tolerance = plan.tolerance;
  {
    std::ostringstream os;
    os << "j=" << j << " b=" << b << " r=" << r;
    if (include_x_in_params) os << " x=" << to_string(x);
    res.params = os.str();
  }

  // alpha = r/b - 1/(2b) = (2r-1)/(2b); odd numerator over even denominator,
  // so no summand ever hits a pole.
  const Rational alpha_q = make_rational(Int(2) * r - 1, Int(2) * b);
  const auto core = bilateral_sum(j, to_double(alpha_q), x, false, plan);

  const std::int64_t ab = std::abs(b);
  std::complex<double> closed{0.0, 0.0};
  double abs_sum = 0.0;
  for (std::int64_t l = 0; l < ab; ++l) {
    // exponent -2 pi i (l+x) r / b + pi i (l+x) / b = 2 pi i (l+x)(1-2r)/(2b)
    const Rational lx = Rational(l) + x;
    const Rational w = lx * make_rational(Int(1 - 2 * r), Int(2) * b);
    const double ang = 2.0 * kPi * to_double(floor_frac(w).second);
    const double e = to_double(euler_bar(j - 1, lx / Rational(b)));
    closed += std::complex<double>{std::cos(ang) * e, std::sin(ang) * e};
    abs_sum += std::abs(e);
  }
  const std::complex<double> pref = ipow(2.0 * kPi, j) * ipow_i(j) *
                                    static_cast<double>(sgn(b)) *
                                    ipow(static_cast<double>(b), j - 1) /
                                    (2.0 * factorial_d(j - 1));
  const std::complex<double> rhs = pref * closed;

  res.lhs = core.value;
  res.rhs = rhs;
  res.deviation = std::abs(core.value - rhs);
  res.bound = core.bound + 1e-14 * (1.0 + std::abs(pref) * abs_sum);
  res.terms_used = core.pairs;
  if (!core.converged) {
    res.status = CheckStatus::non_convergence;
    res.passed = false;
  } else {
    res.passed = res.deviation <= std::max(plan.tolerance, res.bound);
  }
  return res;
}

}  // namespace

CheckResult lemma25_check(std::int64_t j, std::int64_t b, std::int64_t r,
                          const TruncationPlan& plan) {
  return bilateral_lemma_check("lemma25", j, b, r, Rational(0), plan, false);
}

CheckResult lemma27_check(std::int64_t j, std::int64_t b, std::int64_t r,
                          const Rational& x, const TruncationPlan& plan) {
  return bilateral_lemma_check("lemma27", j, b, r, x, plan, true);
}

}  // namespace hbsum
