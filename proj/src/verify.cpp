#include "ffmin/verify.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "ffmin/euclid.hpp"
#include "ffmin/riemann_roch.hpp"
#include "ffmin/rng.hpp"
#include "ffmin/semigroup.hpp"
#include "ffmin/valuation.hpp"

namespace ffmin {

std::string to_string(CheckId id) {
  switch (id) {
    case CheckId::Lemma1:
      return "LEMMA1";
    case CheckId::Thm2:
      return "THM2";
    case CheckId::Prop3:
      return "PROP3";
    case CheckId::Cor4:
      return "COR4";
    case CheckId::Cor5Semigroup:
      return "COR5_SEMIGROUP";
    case CheckId::Cor6:
      return "COR6";
    case CheckId::Thm8:
      return "THM8";
    case CheckId::Thm9:
      return "THM9";
    case CheckId::Thm10:
      return "THM10";
    case CheckId::MuExcessSect4:
      return "MU_EXCESS_SECT4";
  }
  return "?";
}

Json CheckOutcome::to_json() const {
  Json j;
  j["check_id"] = to_string(check_id);
  j["curve"] = curve;
  j["inputs"] = inputs;
  j["observed"] = observed;
  j["bound"] = bound;
  j["passed"] = passed;
  j["witness"] = witness;
  return j;
}

namespace {

Json degree_json(Degree d) {
  if (d.is_neg_inf()) return "-inf";
  return d.value();
}

Json places_json(std::span<const Place> S) {
  Json out = Json::array();
  for (const auto& place : S) out.push_back(place.to_string());
  return out;
}

void require_hyperelliptic(const CurveModel& c, const char* what) {
  if (!c.is_hyperelliptic()) throw CheckNotApplicable(std::string(what) + " needs a hyperelliptic model");
}

std::vector<Place> sorted_places(std::span<const Place> S) {
  std::vector<Place> out(S.begin(), S.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Place> rational_affine_places(const CurveModel& c, std::size_t limit) {
  std::vector<Place> out;
  for (Residue x0 = 0; x0 < c.p() && out.size() < limit; ++x0) {
    for (const auto& place : affine_places(c, Fp(x0, c.p()))) {
      if (place.is_rational() && out.size() < limit) out.push_back(place);
    }
  }
  return out;
}

// Exact Euclidean minimum where a theorem pins it down: S = {infinity} with a single
// place at infinity, or the totally ramified point of a superelliptic model.
struct ExactMinimum {
  std::int64_t value;
  std::string method;
  std::int64_t n;
};

ExactMinimum exact_minimum_at_infinity(const CurveModel& c) {
  if (!c.is_hyperelliptic()) {
    const auto s = semigroup_gaps(c.exponent(), c.degree_f());
    return {s.frobenius, "SEMIGROUP", c.exponent()};
  }
  const auto inf = infinity_places(c);
  if (inf.kind == InfinityKind::Split) throw CheckNotApplicable("minimum is not exactly computable for split infinity");
  const auto res = minimum(c, inf.places, MinimumOptions{false, std::nullopt});
  if (res.status != MinimumStatus::Exact) throw InternalError("expected an exact minimum at infinity");
  return {res.value, to_string(res.method), 2};
}

// THM2 for split infinity. With D = n+ inf+ + n- inf- the mu witness, some y
// makes x - y regular against D at both places. Starting from the polynomial parts
// y0 (poles of x - y0 at most g), the correction has pole order at most
// N = max(g, n+, n-) at both places: deg c <= N and deg d <= N - g - 1.
Degree split_bounded_min(const FFElem& x, const Divisor& witness) {
  const CurveModel& c = x.curve();
  std::int64_t N = c.genus();
  for (const auto& [place, n] : witness) N = std::max(N, n);
  const FFElem y0(c, RatFun(proper_split(x.a()).whole), RatFun(proper_split(x.b()).whole));
  BruteForceOptions unlimited{std::numeric_limits<std::uint64_t>::max()};
  return brute_force_min_around(x, y0, N, N - c.genus() - 1, unlimited);
}

std::string compact(const Json& obj) {
  std::string out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!out.empty()) out += ' ';
    out += it.key() + '=' + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return out;
}

}  // namespace

CheckOutcome check_lemma1(const CurveModel& c, std::span<const Place> S) {
  require_hyperelliptic(c, "LEMMA1");
  const auto places = sorted_places(S);
  if (places.empty()) throw CheckNotApplicable("LEMMA1 needs a nonempty place set");
  for (const auto& place : places) {
    if (!place.is_rational()) throw CheckNotApplicable("LEMMA1 needs rational places; see MU_EXCESS_SECT4");
  }
  const std::int64_t g = c.genus();
  const MuResult m = mu(c, places);
  const std::int64_t i_witness = speciality_index(c, m.witness);

  CheckOutcome out{CheckId::Lemma1, c.describe()};
  out.inputs["S"] = places_json(places);
  out.observed["mu"] = m.value;
  out.observed["exhaustive"] = m.exhaustive;
  out.observed["witness_speciality"] = i_witness;
  out.bound["lower"] = g - 1;
  out.bound["upper"] = 2 * g - 1;
  out.passed = g - 1 <= m.value && m.value <= 2 * g - 1 && i_witness == 0 && m.witness.degree() == m.value;
  out.witness = m.witness.to_string();
  return out;
}

CheckOutcome check_mu_excess(const CurveModel& c) {
  require_hyperelliptic(c, "MU_EXCESS_SECT4");
  if (c.genus() != 1 || c.infinity_kind() != InfinityKind::Inert) {
    throw CheckNotApplicable("MU_EXCESS_SECT4 needs a genus-1 model with inert infinity");
  }
  const std::vector<Place> S{Place::inf_inert(c.p())};
  const MuResult m = mu(c, S);

  CheckOutcome out{CheckId::MuExcessSect4, c.describe()};
  out.inputs["S"] = places_json(S);
  out.observed["mu"] = m.value;
  out.bound["expected"] = 2;
  out.bound["lemma1_upper"] = 2 * c.genus() - 1;
  out.passed = m.value == 2 && m.value > 2 * c.genus() - 1;
  out.witness = m.witness.to_string();
  return out;
}

CheckOutcome check_theorem2(const CurveModel& c, std::span<const Place> S, int sample_count, std::uint64_t seed) {
  require_hyperelliptic(c, "THM2");
  const auto inf = infinity_places(c);
  const auto places = sorted_places(S);
  if (places != sorted_places(inf.places)) throw CheckNotApplicable("THM2 is sampled with S = the places at infinity");
  const std::int64_t g = c.genus();
  const MuResult m = mu(c, places);
  const bool split = inf.kind == InfinityKind::Split;

  Rng rng(seed, "thm2:" + c.describe());
  Degree worst = Degree::neg_inf();
  std::optional<FFElem> worst_x;
  int attained = 0;
  for (int i = 0; i < sample_count; ++i) {
    const FFElem x = i % 8 == 7 ? random_integral_element(rng, c, 2 * g + 3) : random_element(rng, c, 2 * g + 3);
    const Degree value = split ? split_bounded_min(x, m.witness) : euclidean_reduce(x).value;
    if (value == Degree(m.value)) ++attained;
    if (!worst_x || value > worst) {
      worst = value;
      worst_x = x;
    }
  }

  CheckOutcome out{CheckId::Thm2, c.describe()};
  out.inputs["S"] = places_json(places);
  out.inputs["samples"] = sample_count;
  out.inputs["seed"] = seed;
  out.inputs["method"] = split ? "bounded_search" : "euclidean_reduce";
  out.observed["max_value"] = degree_json(worst);
  out.observed["attained_mu"] = attained;
  out.bound["mu"] = m.value;
  out.bound["mu_exhaustive"] = m.exhaustive;
  out.passed = worst <= Degree(m.value);
  if (worst_x) out.witness = worst_x->to_string();
  return out;
}

CheckOutcome check_prop3_cor4_cor6(const CurveModel& c, const Place& P) {
  require_hyperelliptic(c, "PROP3");
  if (!P.is_rational()) throw CheckNotApplicable("PROP3 needs a rational place");
  const std::int64_t g = c.genus();
  const auto gaps = gap_sequence(c, P).gaps;
  const std::int64_t n_g = gaps.back();
  const std::vector<Place> S{P};
  const MinimumResult res = minimum(c, S);

  bool generic = true;
  for (std::int64_t i = 0; i < g; ++i) generic = generic && gaps[static_cast<std::size_t>(i)] == i + 1;
  CheckId id = CheckId::Prop3;
  std::int64_t expected = n_g;
  if (P.is_ramified()) {
    id = CheckId::Cor4;
    expected = 2 * g - 1;
  } else if (generic) {
    id = CheckId::Cor6;
    expected = g;
  }

  CheckOutcome out{id, c.describe()};
  out.inputs["P"] = P.to_string();
  out.observed["M"] = res.value;
  out.observed["status"] = to_string(res.status);
  out.observed["mu_P"] = n_g;
  out.observed["gaps"] = gaps;
  bool witness_ok = res.witness.has_value();
  if (res.witness) {
    const Order v = valuation(c, P, *res.witness);
    out.observed["witness_valuation"] = v.is_pos_inf() ? Json("+inf") : Json(v.value());
    witness_ok = v == Order(-res.value);
    if (P.kind() == Place::Kind::InfRamified) {
      const Degree r = euclidean_reduce(*res.witness).value;
      out.observed["witness_reduce"] = degree_json(r);
      witness_ok = witness_ok && r == Degree(res.value);
    }
    out.witness = res.witness->to_string();
  }
  out.bound["expected"] = expected;
  out.bound["gap_upper"] = 2 * g - 1;
  out.bound["prop3_lower"] = g;
  out.bound["thm9_lower"] = g - 1;
  out.passed = res.status == MinimumStatus::Exact && res.value == n_g && n_g < 2 * g && res.value == expected &&
               static_cast<std::int64_t>(gaps.size()) == g && witness_ok;
  return out;
}

CheckOutcome check_theorem8(const CurveModel& c) {
  if (!is_tame_at_infinity(c)) throw CheckNotApplicable("THM8 needs tame ramification above infinity");
  const ExactMinimum M = exact_minimum_at_infinity(c);
  const std::int64_t d = discriminant_degree(c);

  CheckOutcome out{CheckId::Thm8, c.describe()};
  out.inputs["n"] = M.n;
  out.observed["M"] = M.value;
  out.observed["method"] = M.method;
  out.observed["equality"] = M.value == d - M.n;
  out.bound["disc_degree"] = d;
  out.bound["upper"] = d - M.n;
  out.bound["equality_expected"] = true;
  out.passed = M.value <= d - M.n && M.value == d - M.n;
  return out;
}

CheckOutcome check_theorem9(const CurveModel& c) {
  if (c.is_hyperelliptic() && c.infinity_kind() != InfinityKind::Ramified) {
    throw CheckNotApplicable("THM9 needs total ramification above infinity");
  }
  if (!is_tame_at_infinity(c)) throw CheckNotApplicable("THM9 needs tame ramification above infinity");
  const ExactMinimum M = exact_minimum_at_infinity(c);
  const std::int64_t d = discriminant_degree(c);
  const std::int64_t twice_lower = d - M.n - 1;

  CheckOutcome out{CheckId::Thm9, c.describe()};
  out.inputs["n"] = M.n;
  out.observed["M"] = M.value;
  out.observed["method"] = M.method;
  out.bound["disc_degree"] = d;
  out.bound["lower"] = static_cast<double>(twice_lower) / 2.0;
  out.bound["upper"] = d - M.n;
  out.passed = twice_lower <= 2 * M.value && M.value <= d - M.n;
  return out;
}

CheckOutcome check_theorem10(const CurveModel& c) {
  require_hyperelliptic(c, "THM10");
  if (c.infinity_kind() != InfinityKind::Inert) throw CheckNotApplicable("THM10 needs inert infinity");
  const std::int64_t g = c.genus();
  const std::vector<Place> S{Place::inf_inert(c.p())};
  const MinimumResult res = minimum(c, S);
  const FFElem x = FFElem::y(c) / FFElem::x(c);
  const Degree reduced = euclidean_reduce(x).value;
  Json brute = nullptr;
  bool brute_ok = true;
  try {
    const Degree b = brute_force_min(x, g + 2);
    brute = degree_json(b);
    brute_ok = b == Degree(2 * g);
  } catch (const EnumerationCapExceeded&) {
  }

  CheckOutcome out{CheckId::Thm10, c.describe()};
  out.inputs["S"] = places_json(S);
  out.observed["M"] = res.value;
  out.observed["status"] = to_string(res.status);
  out.observed["witness_reduce"] = degree_json(reduced);
  out.observed["witness_brute_force"] = brute;
  out.bound["expected"] = 2 * g;
  out.passed = res.status == MinimumStatus::Exact && res.value == 2 * g && reduced == Degree(2 * g) && brute_ok;
  out.witness = x.to_string();
  return out;
}

CheckOutcome check_cor5_semigroup(std::int64_t p, std::int64_t r) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw CheckNotApplicable("COR5_SEMIGROUP needs a prime p");
  if (r < 2 || std::gcd(p, r) != 1) throw CheckNotApplicable("COR5_SEMIGROUP needs deg f prime to p");
  const SemigroupGaps s = semigroup_gaps(p, r);
  const std::int64_t g = (p - 1) * (r - 1) / 2;

  CheckOutcome out{CheckId::Cor5Semigroup,
                   "y^" + std::to_string(p) + " - y = f, deg f = " + std::to_string(r) + " over gf(" +
                       std::to_string(p) + ")"};
  out.inputs["m"] = p;
  out.inputs["r"] = r;
  out.observed["frobenius"] = s.frobenius;
  out.observed["gap_count"] = s.gaps.size();
  out.bound["genus"] = g;
  out.bound["expected"] = 2 * g - 1;
  out.passed = s.frobenius == 2 * g - 1 && static_cast<std::int64_t>(s.gaps.size()) == g && s.gaps.back() == s.frobenius;
  return out;
}

std::size_t BoundsReport::passed_count() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; }));
}

std::size_t BoundsReport::failed_count() const { return outcomes.size() - passed_count(); }

std::size_t BoundsReport::skipped_count() const {
  std::size_t n = 0;
  for (const auto& [id, count] : skipped) n += count;
  return n;
}

void BoundsReport::append(BoundsReport other) {
  for (auto& o : other.outcomes) outcomes.push_back(std::move(o));
  for (const auto& [id, count] : other.skipped) skipped[id] += count;
}

void BoundsReport::sort() {
  std::stable_sort(outcomes.begin(), outcomes.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
    const auto ka = to_string(a.check_id);
    const auto kb = to_string(b.check_id);
    if (ka != kb) return ka < kb;
    return a.curve < b.curve;
  });
}

Json BoundsReport::summary() const {
  Json j;
  j["summary"] = true;
  j["config"] = config;
  j["total"] = outcomes.size();
  j["passed"] = passed_count();
  j["failed"] = failed_count();
  Json skips = Json::object();
  for (const auto& [id, count] : skipped) skips[id] = count;
  j["skipped"] = skips;
  return j;
}

std::string BoundsReport::to_jsonl() const {
  std::string out;
  for (const auto& o : outcomes) out += o.to_json().dump() + '\n';
  out += summary().dump() + '\n';
  return out;
}

std::string BoundsReport::to_table() const {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"CHECK", "CURVE", "INPUTS", "OBSERVED", "BOUND", "RESULT"});
  for (const auto& o : outcomes) {
    rows.push_back({to_string(o.check_id), o.curve, compact(o.inputs), compact(o.observed), compact(o.bound),
                    o.passed ? "pass" : "FAIL"});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  os << "total " << outcomes.size() << "  passed " << passed_count() << "  failed " << failed_count() << "  skipped "
     << skipped_count() << '\n';
  return os.str();
}

BoundsReport verify_curve(const CurveModel& c, const VerifyConfig& config) {
  BoundsReport report;
  report.config["curve"] = c.describe();
  report.config["seed"] = config.seed;
  report.config["samples"] = config.samples;

  const auto run = [&](CheckId id, auto&& fn) {
    try {
      report.outcomes.push_back(fn());
    } catch (const CheckNotApplicable&) {
      ++report.skipped[to_string(id)];
    }
  };

  if (c.is_hyperelliptic()) {
    const auto inf = infinity_places(c);
    const auto affine = rational_affine_places(c, 2);

    run(CheckId::Lemma1, [&] {
      if (inf.places.front().is_rational()) return check_lemma1(c, inf.places);
      if (affine.size() < 2) throw CheckNotApplicable("fewer than two rational places");
      return check_lemma1(c, affine);
    });
    run(CheckId::MuExcessSect4, [&] { return check_mu_excess(c); });
    run(CheckId::Thm2, [&] { return check_theorem2(c, inf.places, config.samples, config.seed); });

    std::vector<Place> singletons;
    if (inf.places.front().is_rational()) singletons.push_back(inf.places.front());
    std::optional<Place> first_ramified;
    std::optional<Place> first_split;
    for (Residue x0 = 0; x0 < c.p() && !(first_ramified && first_split); ++x0) {
      const auto fibre = affine_places(c, Fp(x0, c.p()));
      if (fibre.front().kind() == Place::Kind::AffineRamified && !first_ramified) first_ramified = fibre.front();
      if (fibre.front().kind() == Place::Kind::AffineSplit && !first_split) first_split = fibre.front();
    }
    if (first_ramified) singletons.push_back(*first_ramified);
    if (first_split) singletons.push_back(*first_split);
    for (const auto& P : singletons) run(CheckId::Prop3, [&] { return check_prop3_cor4_cor6(c, P); });

    run(CheckId::Thm8, [&] { return check_theorem8(c); });
    run(CheckId::Thm9, [&] { return check_theorem9(c); });
    run(CheckId::Thm10, [&] { return check_theorem10(c); });
  } else {
    run(CheckId::Thm8, [&] { return check_theorem8(c); });
    run(CheckId::Thm9, [&] { return check_theorem9(c); });
  }
  report.sort();
  return report;
}

std::string FamilySpec::to_string() const {
  std::string out = "p=" + std::to_string(p) + ",deg=" + std::to_string(deg_lo) + ".." + std::to_string(deg_hi);
  if (m != 2) out += ",m=" + std::to_string(m);
  return out;
}

std::vector<CurveModel> family_curves(const FamilySpec& family, const VerifyConfig& config) {
  const std::uint64_t p = family.p;
  if (!is_prime(p) || p == 2 || p > kMaxPrime) throw std::invalid_argument("family needs an odd prime p");
  const CurveKind kind = family.m == 2 ? CurveKind(Hyperelliptic{}) : CurveKind(Superelliptic{family.m});

  std::vector<CurveModel> out;
  for (std::int64_t d = std::max<std::int64_t>(family.deg_lo, 1); d <= family.deg_hi; ++d) {
    if (family.m == 2 && d < 3) continue;
    if (std::gcd<std::int64_t, std::int64_t>(family.m, d) != 1 && family.m != 2) continue;

    // Candidates: every coefficient vector with nonzero leading coefficient.
    std::uint64_t total = p - 1;
    bool small = true;
    for (std::int64_t i = 0; i < d && small; ++i) {
      if (total > config.curves_per_degree) small = false;
      total *= p;
    }
    small = small && total <= config.curves_per_degree;

    const auto make = [&](std::vector<Residue> coeffs) -> std::optional<CurveModel> {
      try {
        return CurveModel(p, Poly(p, std::move(coeffs)), kind);
      } catch (const CurveError&) {
        return std::nullopt;
      }
    };

    if (small) {
      for (std::uint64_t index = 0; index < total; ++index) {
        std::vector<Residue> coeffs(static_cast<std::size_t>(d + 1));
        std::uint64_t rest = index;
        for (std::int64_t i = 0; i < d; ++i, rest /= p) coeffs[static_cast<std::size_t>(i)] = rest % p;
        coeffs[static_cast<std::size_t>(d)] = 1 + rest;
        if (auto c = make(std::move(coeffs))) out.push_back(*c);
      }
      continue;
    }

    Rng rng(config.seed, "family:" + std::to_string(p) + ":" + std::to_string(d) + ":" + std::to_string(family.m));
    std::set<std::vector<Residue>> chosen;
    const std::size_t max_attempts = 100 * config.curves_per_degree + 100;
    for (std::size_t attempt = 0; attempt < max_attempts && chosen.size() < config.curves_per_degree; ++attempt) {
      std::vector<Residue> coeffs(static_cast<std::size_t>(d + 1));
      for (std::int64_t i = 0; i < d; ++i) coeffs[static_cast<std::size_t>(i)] = rng.below(p);
      coeffs[static_cast<std::size_t>(d)] = 1 + rng.below(p - 1);
      if (chosen.count(coeffs)) continue;
      if (make(coeffs)) chosen.insert(std::move(coeffs));
    }
    for (const auto& coeffs : chosen) out.push_back(*make(coeffs));
  }
  return out;
}

BoundsReport family_sweep(const FamilySpec& family, const VerifyConfig& config) {
  BoundsReport report;
  const auto curves = family_curves(family, config);
  for (const auto& c : curves) report.append(verify_curve(c, config));
  for (std::int64_t r = std::max<std::int64_t>(family.deg_lo, 2); r <= family.deg_hi; ++r) {
    try {
      report.outcomes.push_back(check_cor5_semigroup(static_cast<std::int64_t>(family.p), r));
    } catch (const CheckNotApplicable&) {
      ++report.skipped[to_string(CheckId::Cor5Semigroup)];
    }
  }
  report.config = Json::object();
  report.config["family"] = family.to_string();
  report.config["seed"] = config.seed;
  report.config["samples"] = config.samples;
  report.config["curves_per_degree"] = config.curves_per_degree;
  report.config["curves"] = curves.size();
  report.sort();
  return report;
}

}  // namespace ffmin
