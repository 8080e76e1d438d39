#pragma once

#include <span>

#include "ffmin/element.hpp"
#include "ffmin/laurent.hpp"

namespace ffmin {

/// v_P(x); +inf for x = 0. Throws std::invalid_argument when P is not on x's curve.
///
/// Ramified and inert places use closed forms (no cancellation is possible there);
/// split places expand a + y(t) b in a local parameter with adaptive precision.
Order valuation(const CurveModel& c, const Place& place, const FFElem& x);

/// Expansion of Y at a split place in its local parameter, to the given absolute precision.
LaurentSeries expand_y(const CurveModel& c, const Place& place, std::int64_t precision);

/// Expansion of a function of X at a rational place (t = X - x0, or t = 1/X).
LaurentSeries expand_x_function(const Place& place, const RatFun& r, std::int64_t precision);

/// -sum_{P in S} deg(P) v_P(x).
Degree s_degree(const FFElem& x, std::span<const Place> S);

/// S-degree with S = all places above infinity; cross-checked against deg N(x).
/// Throws InternalError if the two routes disagree.
Degree deg_S(const FFElem& x);

}  // namespace ffmin
