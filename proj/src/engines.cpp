#include "agp/engines.hpp"

#include <exception>
#include <string>

#include <omp.h>

namespace agp {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::convolution: return "conv";
    case Engine::linear: return "linear";
    case Engine::binet: return "binet";
    case Engine::matrix: return "matrix";
    case Engine::genfunc: return "genfunc";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  if (name == "conv" || name == "convolution") return Engine::convolution;
  if (name == "linear") return Engine::linear;
  if (name == "binet") return Engine::binet;
  if (name == "matrix") return Engine::matrix;
  if (name == "genfunc") return Engine::genfunc;
  throw Error(ErrorKind::parse, "unknown engine '" + std::string(name) + "'");
}

namespace {

Rat index_rat(std::size_t k) { return Rat(BigInt(static_cast<unsigned long>(k))); }

// (a + k d) r^k for k = 0..count-1, with r^0 = 1 even for r = 0.
std::vector<Rat> coefficient_bank(const AgpParams& p, std::size_t count) {
  std::vector<Rat> coeffs;
  coeffs.reserve(count);
  Rat r_power(1);
  for (std::size_t k = 0; k < count; ++k) {
    coeffs.push_back((p.a + index_rat(k) * p.d) * r_power);
    r_power *= p.r;
  }
  return coeffs;
}

// Parallel section below must not let exceptions escape.
template <typename Fn>
void run_guarded(std::exception_ptr& slot, Fn&& fn) {
  try {
    fn();
  } catch (...) {
    slot = std::current_exception();
  }
}

}  // namespace

TermVector eval_convolution(const AgpParams& p, std::size_t n) {
  const std::vector<Rat> coeffs = coefficient_bank(p, n);
  TermVector x;
  x.reserve(n + 1);
  x.push_back(p.x0);
  for (std::size_t m = 0; m < n; ++m) {
    Rat next;
    for (std::size_t k = 0; k <= m; ++k) {
      next += coeffs[k] * x[m - k];
    }
    x.push_back(std::move(next));
  }
  return x;
}

TermVector eval_convolution_omp(const AgpParams& p, std::size_t n) {
  const std::vector<Rat> coeffs = coefficient_bank(p, n);
  TermVector x(n + 1);
  x[0] = p.x0;
  Rat total;
#pragma omp parallel default(none) shared(coeffs, x, total, n)
  {
    for (std::size_t m = 0; m < n; ++m) {
      Rat local;
#pragma omp for schedule(static)
      for (std::size_t k = 0; k <= m; ++k) {
        local += coeffs[k] * x[m - k];
      }
#pragma omp critical(agp_convolution_sum)
      total += local;
#pragma omp barrier
#pragma omp single
      {
        x[m + 1] = total;
        total = Rat(0);
      }
    }
  }
  return x;
}

TermVector eval_linear(const SecondOrder& s, const Rat& x0, std::size_t n) {
  TermVector x;
  x.reserve(n + 1);
  x.push_back(x0);
  if (n >= 1) x.push_back(s.x1);
  if (n >= 2) x.push_back(s.x2);
  for (std::size_t m = 2; m < n; ++m) {
    x.push_back(s.P * x[m] + s.Q * x[m - 1]);
  }
  return x;
}

TermVector eval_linear(const AgpParams& p, std::size_t n) {
  return eval_linear(reduce(p), p.x0, n);
}

Quad binet_term_quad(const SecondOrder& s, std::size_t m) {
  if (m == 0) {
    throw Error(ErrorKind::arithmetic, "the closed form starts at m = 1");
  }
  const EigenStructure eig = eigenvalues(s);
  const Rat& delta = eig.delta;

  if (eig.root_class == RootClass::repeated) {
    if (m == 1) return Quad::from_rat(s.x1, delta);
    const Rat lambda = s.P / Rat(2);
    const Rat value = pow(lambda, static_cast<std::int64_t>(m - 2)) *
                      (index_rat(m - 1) * s.x2 - index_rat(m - 2) * lambda * s.x1);
    return Quad::from_rat(value, delta);
  }

  const Quad x2 = Quad::from_rat(s.x2, delta);
  const Quad numerator = (x2 - eig.lambda2 * s.x1) * quad_pow(eig.lambda1, m - 1) -
                         (x2 - eig.lambda1 * s.x1) * quad_pow(eig.lambda2, m - 1);
  return numerator / (eig.lambda1 - eig.lambda2);
}

TermVector eval_binet(const SecondOrder& s, const Rat& x0, std::size_t n) {
  const EigenStructure eig = eigenvalues(s);
  const Rat& delta = eig.delta;
  TermVector x;
  x.reserve(n + 1);
  x.push_back(x0);
  if (n == 0) return x;

  if (eig.root_class == RootClass::repeated) {
    for (std::size_t m = 1; m <= n; ++m) {
      x.push_back(quad_extract_rat(binet_term_quad(s, m)));
    }
    return x;
  }

  // Powers are accumulated incrementally; binet_term_quad is the point form.
  const Quad dominant = Quad::from_rat(s.x2, delta) - eig.lambda2 * s.x1;
  const Quad recessive = Quad::from_rat(s.x2, delta) - eig.lambda1 * s.x1;
  const Quad gap = eig.lambda1 - eig.lambda2;
  Quad pow1 = Quad::from_rat(Rat(1), delta);
  Quad pow2 = pow1;
  for (std::size_t m = 1; m <= n; ++m) {
    const Quad value = (dominant * pow1 - recessive * pow2) / gap;
    if (!value.radical_part().is_zero()) {
      throw Error(ErrorKind::internal_consistency,
                  "closed form left a radical residue at m = " + std::to_string(m) + ": " +
                      value.to_string());
    }
    x.push_back(value.rational_part());
    pow1 *= eig.lambda1;
    pow2 *= eig.lambda2;
  }
  return x;
}

TermVector eval_binet(const AgpParams& p, std::size_t n) {
  return eval_binet(reduce(p), p.x0, n);
}

namespace {

struct Mat2 {
  Rat m00, m01, m10, m11;

  static Mat2 identity() { return {Rat(1), Rat(0), Rat(0), Rat(1)}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
};

Mat2 matrix_pow(Mat2 base, std::size_t e) {
  Mat2 result = Mat2::identity();
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace

Rat eval_matrix_at(const SecondOrder& s, const Rat& x0, std::size_t m) {
  if (m == 0) return x0;
  if (m == 1) return s.x1;
  const Mat2 power = matrix_pow(Mat2{s.P, s.Q, Rat(1), Rat(0)}, m - 2);
  return power.m00 * s.x2 + power.m01 * s.x1;
}

Rat eval_matrix_at(const AgpParams& p, std::size_t m) {
  return eval_matrix_at(reduce(p), p.x0, m);
}

TermVector eval_matrix(const SecondOrder& s, const Rat& x0, std::size_t n) {
  TermVector x(n + 1);
  const auto count = static_cast<long>(n + 1);
#pragma omp parallel for schedule(dynamic, 4) default(none) shared(s, x0, x, count)
  for (long m = 0; m < count; ++m) {
    x[static_cast<std::size_t>(m)] = eval_matrix_at(s, x0, static_cast<std::size_t>(m));
  }
  return x;
}

TermVector eval_matrix(const AgpParams& p, std::size_t n) {
  return eval_matrix(reduce(p), p.x0, n);
}

std::vector<Rat> series_divide(std::span<const Rat> num, std::span<const Rat> den,
                               std::size_t count) {
  if (den.empty() || den[0].is_zero()) {
    throw Error(ErrorKind::arithmetic, "series division needs a nonzero constant term");
  }
  std::vector<Rat> c;
  c.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    Rat acc = j < num.size() ? num[j] : Rat(0);
    for (std::size_t i = 1; i < den.size() && i <= j; ++i) {
      acc -= den[i] * c[j - i];
    }
    c.push_back(acc / den[0]);
  }
  return c;
}

TermVector eval_genfunc(const SecondOrder& s, const Rat& x0, std::size_t n) {
  const std::array<Rat, 2> num = {-s.x1, s.P * s.x1 - s.x2};
  const std::array<Rat, 3> den = {Rat(-1), s.P, s.Q};
  const std::vector<Rat> series = series_divide(num, den, n);
  TermVector x;
  x.reserve(n + 1);
  x.push_back(x0);
  x.insert(x.end(), series.begin(), series.end());
  return x;
}

TermVector eval_genfunc(const AgpParams& p, std::size_t n) {
  return eval_genfunc(reduce(p), p.x0, n);
}

TermVector evaluate(Engine e, const AgpParams& p, std::size_t n) {
  switch (e) {
    case Engine::convolution: return eval_convolution(p, n);
    case Engine::linear: return eval_linear(p, n);
    case Engine::binet: return eval_binet(p, n);
    case Engine::matrix: return eval_matrix(p, n);
    case Engine::genfunc: return eval_genfunc(p, n);
  }
  return {};
}

EngineReport cross_check(const AgpParams& p, std::size_t n) {
  return cross_check(p, reduce(p), n);
}

EngineReport cross_check(const AgpParams& p, const SecondOrder& system, std::size_t n) {
  EngineReport report;
  report.runs.resize(kAllEngines.size());
  std::array<std::exception_ptr, kAllEngines.size()> failures{};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < kAllEngines.size(); ++i) {
    const Engine e = kAllEngines[i];
    run_guarded(failures[i], [&] {
      TermVector terms;
      switch (e) {
        case Engine::convolution: terms = eval_convolution(p, n); break;
        case Engine::linear: terms = eval_linear(system, p.x0, n); break;
        case Engine::binet: terms = eval_binet(system, p.x0, n); break;
        case Engine::matrix: terms = eval_matrix(system, p.x0, n); break;
        case Engine::genfunc: terms = eval_genfunc(system, p.x0, n); break;
      }
      report.runs[i] = EngineRun{e, std::move(terms)};
    });
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  const TermVector& oracle = report.runs.front().terms;
  for (std::size_t i = 1; i < report.runs.size(); ++i) {
    const TermVector& terms = report.runs[i].terms;
    for (std::size_t k = 0; k < oracle.size(); ++k) {
      if (k >= terms.size() || terms[k] != oracle[k]) {
        report.agreement = false;
        if (!report.first_divergence || k < *report.first_divergence) {
          report.first_divergence = k;
          report.divergent_engine = report.runs[i].engine;
        }
        break;
      }
    }
  }
  return report;
}

}  // namespace agp
