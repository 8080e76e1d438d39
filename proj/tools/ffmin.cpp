#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffmin/euclid.hpp"
#include "ffmin/parse.hpp"
#include "ffmin/riemann_roch.hpp"
#include "ffmin/semigroup.hpp"
#include "ffmin/verify.hpp"

using namespace ffmin;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// key/value lines with the values aligned.
void print_fields(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::size_t width = 0;
  for (const auto& [k, v] : fields) width = std::max(width, k.size());
  for (const auto& [k, v] : fields) std::cout << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string degree_text(Degree d) { return d.to_string(); }

Json degree_json(Degree d) { return d.is_neg_inf() ? Json("-inf") : Json(d.value()); }

Json places_json(const std::vector<Place>& places) {
  Json out = Json::array();
  for (const auto& p : places) out.push_back(p.to_string());
  return out;
}

std::vector<Place> collect_places(const CurveModel& c, const std::vector<std::string>& specs) {
  std::vector<Place> out;
  for (const auto& s : specs) {
    for (const auto& place : parse_places(c, s)) out.push_back(place);
  }
  return out;
}

CurveModel hyperelliptic_model(const std::string& text) {
  const CurveSpec spec = parse_curve(text);
  if (spec.m != 2) throw UsageError("this subcommand needs a y^2 model");
  return spec.model();
}

FamilySpec parse_family(const std::string& text) {
  FamilySpec family{0, 0, -1, 2};
  bool have_p = false;
  bool have_deg = false;
  std::stringstream ss(text);
  std::string item;
  const auto number = [&](const std::string& s) -> std::int64_t {
    try {
      std::size_t used = 0;
      const auto v = std::stoll(s, &used);
      if (used != s.size()) throw UsageError("");
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad number '" + s + "' in --family");
    }
  };
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value in --family, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "p") {
      const auto p = number(value);
      if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)) || static_cast<std::uint64_t>(p) > kMaxPrime) {
        throw UsageError("--family needs an odd prime p");
      }
      family.p = static_cast<std::uint64_t>(p);
      have_p = true;
    } else if (key == "deg") {
      const auto dots = value.find("..");
      family.deg_lo = number(value.substr(0, dots));
      family.deg_hi = dots == std::string::npos ? family.deg_lo : number(value.substr(dots + 2));
      have_deg = true;
    } else if (key == "m") {
      const auto m = number(value);
      if (m < 2 || m > 1000) throw UsageError("--family m must lie in [2, 1000]");
      family.m = static_cast<int>(m);
    } else {
      throw UsageError("unknown --family key '" + key + "'");
    }
  }
  if (!have_p || !have_deg) throw UsageError("--family needs p=<p>,deg=<a>..<b>");
  return family;
}

int run_gaps(const std::string& curve, const std::string& place_spec, bool json) {
  const CurveModel c = hyperelliptic_model(curve);
  const auto places = parse_places(c, place_spec);
  if (places.size() != 1) throw UsageError("--place names " + std::to_string(places.size()) + " places; give y=<c>");
  const Place& P = places.front();
  if (!P.is_rational()) throw UsageError("gap sequences need a rational place");
  const auto gaps = gap_sequence(c, P).gaps;
  const std::int64_t mu_p = gaps.empty() ? 0 : gaps.back();
  const bool classical_guard = c.p() > static_cast<std::uint64_t>(2 * c.genus());
  if (json) {
    Json j;
    j["curve"] = c.describe();
    j["place"] = P.to_string();
    j["gaps"] = gaps;
    j["mu"] = mu_p;
    j["weierstrass"] = classical_guard ? Json(is_weierstrass_point(c, P)) : Json(nullptr);
    std::cout << j.dump() << '\n';
  } else {
    print_fields({{"curve", c.describe()},
                  {"place", P.to_string()},
                  {"gaps", join(gaps)},
                  {"mu", std::to_string(mu_p)},
                  {"weierstrass", classical_guard ? (is_weierstrass_point(c, P) ? "yes" : "no") : "undecided (p <= 2g)"}});
  }
  return kOk;
}

int run_mu(const std::string& curve, const std::vector<std::string>& place_specs, std::optional<std::int64_t> height,
           bool json) {
  const CurveModel c = hyperelliptic_model(curve);
  const auto S = collect_places(c, place_specs);
  const MuResult m = mu(c, S, height);
  if (json) {
    Json j;
    j["curve"] = c.describe();
    j["S"] = places_json(S);
    j["mu"] = m.value;
    j["witness"] = m.witness.to_string();
    j["exhaustive"] = m.exhaustive;
    std::cout << j.dump() << '\n';
  } else {
    print_fields({{"curve", c.describe()},
                  {"mu", std::to_string(m.value)},
                  {"witness", m.witness.to_string()},
                  {"exhaustive", m.exhaustive ? "yes" : "no"}});
  }
  return kOk;
}

int run_reduce(const std::string& curve, const std::string& element, bool json) {
  const CurveModel c = hyperelliptic_model(curve);
  const FFElem x = parse_element(c, element);
  if (c.infinity_kind() == InfinityKind::Split) throw UsageError("reduce is unavailable for split infinity");
  const ReduceResult r = euclidean_reduce(x);
  if (json) {
    Json j;
    j["curve"] = c.describe();
    j["x"] = x.to_string();
    j["y"] = r.y.to_string();
    j["value"] = degree_json(r.value);
    std::cout << j.dump() << '\n';
  } else {
    print_fields({{"curve", c.describe()}, {"x", x.to_string()}, {"y", r.y.to_string()}, {"value", degree_text(r.value)}});
  }
  return kOk;
}

int run_minimum(const std::string& curve, const std::vector<std::string>& place_specs, bool json) {
  const CurveModel c = hyperelliptic_model(curve);
  const auto S = place_specs.empty() ? infinity_places(c).places : collect_places(c, place_specs);
  const MinimumResult r = minimum(c, S);
  if (json) {
    Json j;
    j["curve"] = c.describe();
    j["S"] = places_json(S);
    j["status"] = to_string(r.status);
    j["value"] = r.value;
    j["method"] = to_string(r.method);
    j["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
    j["mu_witness"] = r.mu ? Json(r.mu->witness.to_string()) : Json(nullptr);
    std::cout << j.dump() << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> fields{{"curve", c.describe()},
                                                            {"status", to_string(r.status)},
                                                            {"value", std::to_string(r.value)},
                                                            {"method", to_string(r.method)}};
    if (r.witness) fields.emplace_back("witness", r.witness->to_string());
    if (r.mu) fields.emplace_back("mu witness", r.mu->witness.to_string());
    print_fields(fields);
  }
  return kOk;
}

int run_semigroup(std::int64_t m, std::int64_t r, bool json) {
  const SemigroupGaps s = semigroup_gaps(m, r);
  if (json) {
    Json j;
    j["m"] = m;
    j["r"] = r;
    j["gaps"] = s.gaps;
    j["genus"] = s.genus;
    j["frobenius"] = s.frobenius;
    std::cout << j.dump() << '\n';
  } else {
    print_fields({{"gaps", join(s.gaps)}, {"genus", std::to_string(s.genus)}, {"frobenius", std::to_string(s.frobenius)}});
  }
  return kOk;
}

int run_verify(const std::string& curve, const std::string& family, const VerifyConfig& config, bool json) {
  if (curve.empty() == family.empty()) throw UsageError("verify needs either a curve or --family");
  BoundsReport report;
  if (!family.empty()) {
    report = family_sweep(parse_family(family), config);
  } else {
    report = verify_curve(parse_curve(curve).model(), config);
  }
  std::cout << (json ? report.to_jsonl() : report.to_table());
  return report.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean minima, gap sequences and Riemann-Roch spaces of y^m = f(x) over GF(p)"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string curve;
  std::string place;
  std::vector<std::string> places;
  std::optional<std::int64_t> height;
  std::string element;
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::string family;
  VerifyConfig config;
  std::optional<int> samples;

  auto* gaps = app.add_subcommand("gaps", "Gap sequence and mu(P) at a rational place");
  gaps->add_option("curve", curve, "Curve, e.g. \"y^2 = x^5 + 2*x + 1 over gf(7)\"")->required();
  gaps->add_option("--place", place, "inf, inf+, inf-, x=<c> or x=<c>,y=<c>")->required();

  auto* mu_cmd = app.add_subcommand("mu", "Index of speciality mu(S)");
  mu_cmd->add_option("curve", curve, "Curve")->required();
  mu_cmd->add_option("--places", places, "';'-separated place specs (repeatable)")->required();
  mu_cmd->add_option("--height", height, "Coefficient bound for the search (default 2g+2)")->check(CLI::NonNegativeNumber);

  auto* reduce = app.add_subcommand("reduce", "Best approximation of x = a + y*b by k[x, y]");
  reduce->add_option("curve", curve, "Curve")->required();
  reduce->add_option("--element", element, "\"<a>;<b>\" rational functions in x")->required();

  auto* minimum_cmd = app.add_subcommand("minimum", "Euclidean minimum, exact or bounded");
  minimum_cmd->add_option("curve", curve, "Curve")->required();
  minimum_cmd->add_option("--places", places, "';'-separated place specs (default: places at infinity)");

  auto* semigroup = app.add_subcommand("semigroup", "Gaps of the numerical semigroup <m, r>");
  semigroup->add_option("m", m, "First generator")->required();
  semigroup->add_option("r", r, "Second generator")->required();

  auto* verify = app.add_subcommand("verify", "Run every applicable bound check");
  verify->add_option("curve", curve, "Curve (or use --family)");
  verify->add_option("--family", family, "p=<p>,deg=<a>..<b>[,m=<m>]");
  verify->add_option("--seed", config.seed, "Random seed")->default_val(0);
  verify->add_option("--samples", samples, "Random elements per THM2 check (default 200)")->check(CLI::PositiveNumber);
  verify->add_option("--curves", config.curves_per_degree, "Curves per degree before sampling kicks in")
      ->default_val(100)
      ->check(CLI::PositiveNumber);

  for (auto* sub : {gaps, mu_cmd, reduce, minimum_cmd, semigroup, verify}) {
    sub->add_flag("--json", json, "Machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (samples) config.samples = *samples;

  try {
    if (*gaps) return run_gaps(curve, place, json);
    if (*mu_cmd) return run_mu(curve, places, height, json);
    if (*reduce) return run_reduce(curve, element, json);
    if (*minimum_cmd) return run_minimum(curve, places, json);
    if (*semigroup) return run_semigroup(m, r, json);
    if (*verify) return run_verify(curve, family, config, json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
