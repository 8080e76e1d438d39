#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ffmin/element.hpp"

namespace ffmin {

/// Basis of L(D) = {x : v_P(x) + n_P >= 0 for all P}.
struct LBasis {
  Divisor divisor;
  std::vector<FFElem> functions;

  std::int64_t dimension() const { return static_cast<std::int64_t>(functions.size()); }
};

struct LSpaceOptions {
  /// Re-verify every basis function against the valuation routines.
  bool recheck = true;
};

/// Basis of L(D) on a hyperelliptic model, as functions (u + Y v)/h with h
/// clearing the affine poles allowed by D.
LBasis l_space(const CurveModel& c, const Divisor& D, LSpaceOptions options = {});

/// dim L(D), by the same constraint system without materializing the basis.
std::int64_t ell(const CurveModel& c, const Divisor& D);

/// i(D) = l(D) - deg D + g - 1. On odd-degree models it is cross-checked
/// against l(W - D); a mismatch throws InternalError.
std::int64_t speciality_index(const CurveModel& c, const Divisor& D);

struct GapSequence {
  Place place;
  std::vector<std::int64_t> gaps;
};

/// Weierstrass gaps at a rational place: n in [1, 2g-1] with l(nP) = l((n-1)P).
GapSequence gap_sequence(const CurveModel& c, const Place& place);

/// Largest Weierstrass gap at a rational place.
std::int64_t mu_singleton(const CurveModel& c, const Place& place);

struct MuResult {
  std::int64_t value;
  Divisor witness;
  /// True when no divisor outside the enumerated box could have smaller degree.
  bool exhaustive;
};

/// Index of speciality of S: least deg D over D supported on S with i(D) = 0.
/// Enumerates coefficients |n_P| <= height_bound (default 2g + 2) with
/// g - 1 <= deg D <= 2g - 2 + min deg P.
MuResult mu(const CurveModel& c, std::span<const Place> S, std::optional<std::int64_t> height_bound = std::nullopt);

/// Gap sequence differs from (1, ..., g). Requires p > 2g.
bool is_weierstrass_point(const CurveModel& c, const Place& place);

}  // namespace ffmin
