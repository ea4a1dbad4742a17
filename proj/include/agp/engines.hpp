#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "agp/quad.hpp"
#include "agp/reducer.hpp"

namespace agp {

/// x_0..x_n; position 0 always echoes the input x0.
using TermVector = std::vector<Rat>;

enum class Engine { convolution, linear, binet, matrix, genfunc };

inline constexpr std::array<Engine, 5> kAllEngines = {
    Engine::convolution, Engine::linear, Engine::binet, Engine::matrix, Engine::genfunc};

std::string_view to_string(Engine e);
/// "conv" | "convolution" | "linear" | "binet" | "matrix" | "genfunc".
Engine parse_engine(std::string_view name);

// Direct transcription of the full-history recurrence. O(n^2) exact
// multiplications. This serial loop is the ground-truth oracle; every other
// engine is judged against it.
TermVector eval_convolution(const AgpParams& p, std::size_t n);

/// OpenMP kernel for the same recurrence: each inner convolution sum is split
/// across threads. Exact addition makes the result identical to the serial
/// reference regardless of thread count.
TermVector eval_convolution_omp(const AgpParams& p, std::size_t n);

/// x_{m+1} = P x_m + Q x_{m-1} for m >= 2, seeded with x1 and x2.
TermVector eval_linear(const AgpParams& p, std::size_t n);
TermVector eval_linear(const SecondOrder& s, const Rat& x0, std::size_t n);

/// Closed form over Q(sqrt(delta)):
///   x_m = [(x2 - l2 x1) l1^(m-1) - (x2 - l1 x1) l2^(m-1)] / (l1 - l2),
/// which is the a/B form with x1 = a x0 and x2 = B x0. For delta = 0 the
/// repeated-root form x_m = l^(m-2) [(m-1) x2 - (m-2) l x1] is used.
TermVector eval_binet(const AgpParams& p, std::size_t n);
TermVector eval_binet(const SecondOrder& s, const Rat& x0, std::size_t n);

/// The closed-form value for m >= 1 before rational extraction. Its radical
/// part is zero for every valid system.
Quad binet_term_quad(const SecondOrder& s, std::size_t m);

/// Point query through the companion matrix [[P, Q], [1, 0]]:
/// (x_m, x_{m-1}) = M^(m-2) (x2, x1) for m >= 2. O(log m) 2x2 products.
Rat eval_matrix_at(const AgpParams& p, std::size_t m);
Rat eval_matrix_at(const SecondOrder& s, const Rat& x0, std::size_t m);
/// Independent point queries for every position, filled in parallel.
TermVector eval_matrix(const AgpParams& p, std::size_t n);
TermVector eval_matrix(const SecondOrder& s, const Rat& x0, std::size_t n);

/// Coefficients c_0..c_{count-1} of num(t)/den(t) as a formal power series.
/// den[0] must be nonzero.
std::vector<Rat> series_divide(std::span<const Rat> num, std::span<const Rat> den,
                               std::size_t count);

/// Expands X(t) = ((P x1 - x2) t - x1)/(Q t^2 + P t - 1) = sum_{m>=1} x_m t^(m-1).
TermVector eval_genfunc(const AgpParams& p, std::size_t n);
TermVector eval_genfunc(const SecondOrder& s, const Rat& x0, std::size_t n);

TermVector evaluate(Engine e, const AgpParams& p, std::size_t n);

struct EngineRun {
  Engine engine;
  TermVector terms;
};

struct EngineReport {
  std::vector<EngineRun> runs;  // in kAllEngines order
  bool agreement = true;
  std::optional<std::size_t> first_divergence;
  std::optional<Engine> divergent_engine;  // the engine diverging earliest
};

/// Runs all five engines (concurrently) and compares them to the convolution.
EngineReport cross_check(const AgpParams& p, std::size_t n);

/// As above, but the derived engines use `system` instead of reduce(p). Used
/// for fault injection.
EngineReport cross_check(const AgpParams& p, const SecondOrder& system, std::size_t n);

}  // namespace agp
