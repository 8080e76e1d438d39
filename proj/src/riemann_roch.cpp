#include "ffmin/riemann_roch.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <stdexcept>

#include "ffmin/fp_matrix.hpp"
#include "ffmin/valuation.hpp"

namespace ffmin {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Column k holds the coefficients of (x0 + t)^k in t, k = 0..degree.
std::vector<std::vector<Residue>> taylor_table(Fp x0, std::int64_t degree) {
  const std::uint64_t p = x0.modulus();
  std::vector<std::vector<Residue>> table;
  std::vector<Residue> cur{1};
  for (std::int64_t k = 0; k <= degree; ++k) {
    table.push_back(cur);
    std::vector<Residue> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] = add_mod(next[i], mul_mod(cur[i], x0.value(), p), p);
      next[i + 1] = add_mod(next[i + 1], cur[i], p);
    }
    cur = std::move(next);
  }
  return table;
}

Residue entry(const std::vector<Residue>& v, std::int64_t i) {
  return i >= 0 && static_cast<std::size_t>(i) < v.size() ? v[static_cast<std::size_t>(i)] : 0;
}

// The linear system whose kernel parametrizes L(D): unknowns are the
// coefficients of u (nu of them) followed by those of v (nv).
struct Constraints {
  Poly h;
  std::int64_t nu = 0;
  std::int64_t nv = 0;
  FpMatrix rows;
  std::vector<Place> checked_places;
};

Constraints build_constraints(const CurveModel& c, const Divisor& D) {
  const std::uint64_t p = c.p();
  const std::int64_t g = c.genus();
  for (const auto& [place, n] : D) validate_place(c, place);

  // Affine fibres touched by D, with the exponent of (X - x0) in h.
  std::map<Residue, std::int64_t> h_exp;
  for (const auto& [place, n] : D) {
    if (place.is_infinite()) continue;
    auto& e = h_exp[place.x0().value()];
    e = std::max(e, ceil_div(n, ramification_index(place)));
  }
  Poly h = Poly::constant(Fp(1, p));
  std::int64_t H = 0;
  for (const auto& [x0, e] : h_exp) {
    h = h * Poly::linear_root(Fp(x0, p)).pow(static_cast<unsigned>(e));
    H += e;
  }

  const auto inf = infinity_places(c);
  std::int64_t du = 0;
  std::int64_t dv = 0;
  switch (inf.kind) {
    case InfinityKind::Ramified: {
      const std::int64_t n = D.coefficient(inf.places[0]);
      du = floor_div(n + 2 * H, 2);
      dv = floor_div(n + 2 * H - (2 * g + 1), 2);
      break;
    }
    case InfinityKind::Inert: {
      const std::int64_t n = D.coefficient(inf.places[0]);
      du = H + n;
      dv = H + n - g - 1;
      break;
    }
    case InfinityKind::Split: {
      const std::int64_t n = std::max(D.coefficient(inf.places[0]), D.coefficient(inf.places[1]));
      du = H + n;
      dv = H + n - g - 1;
      break;
    }
  }

  Constraints out{h, std::max<std::int64_t>(du + 1, 0), std::max<std::int64_t>(dv + 1, 0), FpMatrix(p, 0, 0), {}};
  out.rows = FpMatrix(p, 0, static_cast<std::size_t>(out.nu + out.nv));
  const auto col_u = [](std::int64_t k) { return static_cast<std::size_t>(k); };
  const auto col_v = [&](std::int64_t k) { return static_cast<std::size_t>(out.nu + k); };

  for (const auto& [x0v, e] : h_exp) {
    const Fp x0(x0v, p);
    const auto taylor = taylor_table(x0, std::max(du, dv));
    for (const Place& place : affine_places(c, x0)) {
      out.checked_places.push_back(place);
      // Required order of u + Y v at the place, after clearing h.
      const std::int64_t r = e * ramification_index(place) - D.coefficient(place);
      if (r <= 0) continue;
      switch (place.kind()) {
        case Place::Kind::AffineRamified:
        case Place::Kind::AffineInert: {
          // Ramified: min(2 ord u, 1 + 2 ord v) >= r.  Inert: min(ord u, ord v) >= r.
          const bool ramified = place.kind() == Place::Kind::AffineRamified;
          const std::int64_t ju = ramified ? ceil_div(r, 2) : r;
          const std::int64_t jv = ramified ? floor_div(r, 2) : r;
          for (std::int64_t j = 0; j < ju; ++j) {
            const std::size_t row = out.rows.add_row();
            for (std::int64_t k = 0; k < out.nu; ++k) out.rows.raw(row, col_u(k)) = entry(taylor[k], j);
          }
          for (std::int64_t j = 0; j < jv; ++j) {
            const std::size_t row = out.rows.add_row();
            for (std::int64_t k = 0; k < out.nv; ++k) out.rows.raw(row, col_v(k)) = entry(taylor[k], j);
          }
          break;
        }
        case Place::Kind::AffineSplit: {
          const LaurentSeries y = expand_y(c, place, r);
          for (std::int64_t j = 0; j < r; ++j) {
            const std::size_t row = out.rows.add_row();
            for (std::int64_t k = 0; k < out.nu; ++k) out.rows.raw(row, col_u(k)) = entry(taylor[k], j);
            for (std::int64_t k = 0; k < out.nv; ++k) {
              Residue acc = 0;
              for (std::int64_t i = 0; i <= j; ++i) {
                acc = add_mod(acc, mul_mod(y.coefficient(j - i).value(), entry(taylor[k], i), p), p);
              }
              out.rows.raw(row, col_v(k)) = acc;
            }
          }
          break;
        }
        default:
          throw std::logic_error("affine fibre produced an infinite place");
      }
    }
  }

  // Ramified and inert infinity are fully encoded by the degree bounds above;
  // split infinity needs the low-order cancellation conditions at each sign.
  for (const Place& place : inf.places) out.checked_places.push_back(place);
  if (inf.kind == InfinityKind::Split) {
    const std::int64_t jmin = -std::max(du, dv + g + 1);
    for (const Place& place : inf.places) {
      const std::int64_t jmax = -D.coefficient(place) - H - 1;
      if (jmax < jmin) continue;
      const LaurentSeries y = expand_y(c, place, jmax + std::max<std::int64_t>(dv, 0) + 1);
      for (std::int64_t j = jmin; j <= jmax; ++j) {
        const std::size_t row = out.rows.add_row();
        if (-j >= 0 && -j < out.nu) out.rows.raw(row, col_u(-j)) = 1;
        for (std::int64_t k = 0; k < out.nv; ++k) {
          // X^k Y = sum_e y_e t^(e - k)
          if (j + k >= y.lead_exponent()) out.rows.raw(row, col_v(k)) = y.coefficient(j + k).value();
        }
      }
    }
  }
  for (const auto& [place, n] : D) {
    if (std::find(out.checked_places.begin(), out.checked_places.end(), place) == out.checked_places.end()) {
      out.checked_places.push_back(place);
    }
  }
  return out;
}

std::int64_t window_coefficient_limit(std::int64_t g, int place_degree) {
  return floor_div(2 * g - 2 + place_degree, place_degree);
}

}  // namespace

LBasis l_space(const CurveModel& c, const Divisor& D, LSpaceOptions options) {
  const Constraints sys = build_constraints(c, D);
  LBasis basis{D, {}};
  if (sys.nu + sys.nv == 0) return basis;

  const std::uint64_t p = c.p();
  for (const FpVector& v : kernel(sys.rows)) {
    std::vector<Residue> u_coeffs(v.begin(), v.begin() + sys.nu);
    std::vector<Residue> v_coeffs(v.begin() + sys.nu, v.end());
    basis.functions.emplace_back(c, RatFun(Poly(p, std::move(u_coeffs)), sys.h),
                                 RatFun(Poly(p, std::move(v_coeffs)), sys.h));
  }

  if (options.recheck) {
    for (const FFElem& fn : basis.functions) {
      for (const Place& place : sys.checked_places) {
        const Order v = valuation(c, place, fn);
        if (v < Order(-D.coefficient(place))) {
          throw InternalError("L(" + D.to_string() + ") basis function " + fn.to_string() + " has valuation " +
                              v.to_string() + " at " + place.to_string());
        }
      }
    }
  }
  return basis;
}

std::int64_t ell(const CurveModel& c, const Divisor& D) {
  const Constraints sys = build_constraints(c, D);
  const auto cols = static_cast<std::int64_t>(sys.nu + sys.nv);
  if (cols == 0) return 0;
  return cols - static_cast<std::int64_t>(rank(sys.rows));
}

std::int64_t speciality_index(const CurveModel& c, const Divisor& D) {
  const std::int64_t i = ell(c, D) - D.degree() + c.genus() - 1;
  if (c.infinity_kind() == InfinityKind::Ramified) {
    const std::int64_t dual = ell(c, canonical_divisor(c) - D);
    if (dual != i) {
      throw InternalError("speciality index of " + D.to_string() + ": Riemann-Roch gives " + std::to_string(i) +
                          ", l(W - D) gives " + std::to_string(dual));
    }
  }
  return i;
}

GapSequence gap_sequence(const CurveModel& c, const Place& place) {
  validate_place(c, place);
  if (!place.is_rational()) throw std::invalid_argument("gap sequences need a rational place");
  const std::int64_t g = c.genus();
  GapSequence out{place, {}};
  std::int64_t prev = ell(c, Divisor());
  for (std::int64_t n = 1; n <= 2 * g - 1; ++n) {
    const std::int64_t cur = ell(c, Divisor(place, n));
    if (cur == prev) out.gaps.push_back(n);
    prev = cur;
  }
  if (static_cast<std::int64_t>(out.gaps.size()) != g) {
    throw InternalError("found " + std::to_string(out.gaps.size()) + " gaps at " + place.to_string() + ", genus " +
                        std::to_string(g));
  }
  return out;
}

std::int64_t mu_singleton(const CurveModel& c, const Place& place) { return gap_sequence(c, place).gaps.back(); }

MuResult mu(const CurveModel& c, std::span<const Place> S, std::optional<std::int64_t> height_bound) {
  if (S.empty()) throw std::invalid_argument("mu needs a nonempty set of places");
  std::vector<Place> places(S.begin(), S.end());
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  for (const auto& place : places) validate_place(c, place);

  const std::int64_t g = c.genus();
  const std::int64_t height = height_bound.value_or(2 * g + 2);
  if (height < 0) throw std::invalid_argument("height bound must be nonnegative");

  std::size_t min_index = 0;
  for (std::size_t i = 1; i < places.size(); ++i) {
    if (places[i].degree() < places[min_index].degree()) min_index = i;
  }
  const int d_min = places[min_index].degree();
  const std::int64_t lo = g - 1;
  const std::int64_t hi = 2 * g - 2 + d_min;

  using Coeffs = std::vector<std::int64_t>;
  const auto degree_of = [&](const Coeffs& v) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) d += v[i] * places[i].degree();
    return d;
  };

  const auto height_of = [](const Coeffs& v) {
    std::int64_t h = 0;
    for (auto n : v) h = std::max(h, n < 0 ? -n : n);
    return h;
  };

  // Ordered by (degree, height, coefficient vector).
  std::vector<std::tuple<std::int64_t, std::int64_t, Coeffs>> candidates;
  Coeffs cur(places.size(), -height);
  while (true) {
    const std::int64_t d = degree_of(cur);
    if (d >= lo && d <= hi) candidates.emplace_back(d, height_of(cur), cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == height) cur[i++] = -height;
    if (i == cur.size()) break;
    ++cur[i];
  }
  // The effective divisor on a minimal-degree place with degree in [2g-1, hi] always qualifies.
  Coeffs effective(places.size(), 0);
  effective[min_index] = ceil_div(std::max<std::int64_t>(2 * g - 1, 0), d_min);
  if (effective[min_index] > height) {
    candidates.emplace_back(degree_of(effective), height_of(effective), effective);
  }
  std::sort(candidates.begin(), candidates.end());

  for (const auto& [d, h, coeffs] : candidates) {
    Divisor D;
    for (std::size_t i = 0; i < places.size(); ++i) D.add(places[i], coeffs[i]);
    if (speciality_index(c, D) != 0) continue;
    const bool box_covers_window = places.size() == 1 && height >= window_coefficient_limit(g, d_min);
    return MuResult{d, D, box_covers_window || d == lo};
  }
  throw InternalError("no divisor with vanishing speciality index in the degree window");
}

bool is_weierstrass_point(const CurveModel& c, const Place& place) {
  const std::int64_t g = c.genus();
  if (c.p() <= static_cast<std::uint64_t>(2 * g)) {
    throw std::invalid_argument("Weierstrass test needs p > 2g to rule out non-classical gap sequences");
  }
  const auto gaps = gap_sequence(c, place).gaps;
  for (std::int64_t i = 0; i < g; ++i) {
    if (gaps[static_cast<std::size_t>(i)] != i + 1) return true;
  }
  return false;
}

}  // namespace ffmin
