#pragma once

#include <optional>
#include <span>

#include "ffmin/riemann_roch.hpp"

namespace ffmin {

struct ReduceResult {
  /// Best approximation in GF(p)[X, Y].
  FFElem y;
  /// deg_S(x - y), S the places above infinity.
  Degree value;
};

/// Exact inner minimum min_{y in O_S} deg_S(x - y) for ramified or inert infinity:
/// y takes the polynomial parts of both components.
/// Throws std::invalid_argument for split infinity.
ReduceResult euclidean_reduce(const FFElem& x);

/// Closed form of the reduced value from the fractional parts.
Degree reduce_formula(const CurveModel& c, const RatFun& frac_a, const RatFun& frac_b);

struct BruteForceOptions {
  std::uint64_t max_candidates = 10'000'000;
};

class EnumerationCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// min over y = c + Y d with deg c, deg d <= degree_bound of deg N(x - y),
/// by exhaustive enumeration of (c, d).
Degree brute_force_min(const FFElem& x, std::int64_t degree_bound, BruteForceOptions options = {});

/// Exhaustive search for y = y0 + c + Y d with deg c <= bound_c, deg d <= bound_d
/// minimizing deg N(x - y); returns the best value found.
Degree brute_force_min_around(const FFElem& x, const FFElem& y0, std::int64_t bound_c, std::int64_t bound_d,
                              BruteForceOptions options = {});

enum class MinimumStatus { Exact, UpperBound };
enum class MinimumMethod { Prop3, Thm10, Thm2Mu };

std::string to_string(MinimumStatus s);
std::string to_string(MinimumMethod m);

struct MinimumResult {
  MinimumStatus status;
  std::int64_t value;
  MinimumMethod method;
  std::optional<FFElem> witness;
  /// Divisor realizing mu(S) for the THM2_MU route.
  std::optional<MuResult> mu;
};

struct MinimumOptions {
  bool with_witness = true;
  std::optional<std::int64_t> height_bound;
};

/// Euclidean minimum M_S(K): exact for a single rational place (largest gap)
/// and for inert infinity (2g); otherwise the mu(S) upper bound.
MinimumResult minimum(const CurveModel& c, std::span<const Place> S, MinimumOptions options = {});

/// An element with a pole of exact order mu at P and no poles outside {P, Q},
/// Q the first rational affine place different from P scanning x0 = 0, 1, ...
FFElem singleton_witness(const CurveModel& c, const Place& P, std::int64_t mu_value);

}  // namespace ffmin
