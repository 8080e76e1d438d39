// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ffmin/euclid.hpp"
#include "ffmin/rng.hpp"
#include "ffmin/semigroup.hpp"
#include "ffmin/valuation.hpp"
#include "ffmin/verify.hpp"

using namespace ffmin;

namespace {

struct Verdict {
  std::int64_t failures = 0;
  std::int64_t checked = 0;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      if (failures < 5) std::cerr << "    failed: " << what << "\n";
      ++failures;
    }
  }
};

std::string describe(const CurveModel& c) { return c.describe(); }

// Coefficient vectors c_0..c_{d-1} in base p, with the given leading coefficient.
Poly poly_from_index(std::uint64_t p, std::int64_t degree, std::uint64_t index, Residue lead) {
  std::vector<Residue> c(static_cast<std::size_t>(degree + 1));
  for (std::int64_t i = 0; i < degree; ++i) {
    c[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  c.back() = lead;
  return Poly(p, std::move(c));
}

std::uint64_t ipow(std::uint64_t b, std::int64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Squarefree f of the given degree, leading coefficient filtered by squareness, in a seeded order.
std::vector<CurveModel> pick_models(std::uint64_t p, std::int64_t degree, bool nonsquare_lead, std::size_t count,
                                    const std::string& label) {
  Rng rng(0, label);
  std::vector<CurveModel> out;
  std::set<std::string> seen;
  for (int attempts = 0; out.size() < count && attempts < 100000; ++attempts) {
    const Residue lead = 1 + rng.below(p - 1);
    if (fp_is_square(Fp(lead, p)) == nonsquare_lead) continue;
    const Poly f = poly_from_index(p, degree, rng.below(ipow(p, degree)), lead);
    if (!poly_is_squarefree(f)) continue;
    CurveModel c(p, f, Hyperelliptic{});
    if (seen.insert(describe(c)).second) out.push_back(c);
  }
  return out;
}

std::int64_t max_component_degree(const FFElem& x) {
  std::int64_t m = 0;
  for (const RatFun* r : {&x.a(), &x.b()}) {
    if (!r->is_zero()) m = std::max(m, ratfun_deg(*r).value());
  }
  return m;
}

std::vector<Place> fibre_places(const CurveModel& c) {
  std::vector<Place> out;
  for (Residue x0 = 0; x0 < c.p(); ++x0) {
    for (const auto& place : affine_places(c, Fp(x0, c.p()))) out.push_back(place);
  }
  for (const auto& place : infinity_places(c).places) out.push_back(place);
  return out;
}

Verdict gap_sequences() {
  Verdict v;
  for (std::uint64_t p : {5, 7, 11}) {
    for (std::int64_t g : {1, 2, 3}) {
      for (const auto& c : pick_models(p, 2 * g + 1, false, 3, "c1") ) {
        const auto inf = Place::inf_ramified(p);
        std::vector<std::int64_t> expected;
        for (std::int64_t k = 1; k <= 2 * g - 1; k += 2) expected.push_back(k);
        v.expect(gap_sequence(c, inf).gaps == expected, "gaps on " + describe(c));
        const std::vector<Place> S{inf};
        const auto m = minimum(c, S);
        v.expect(m.status == MinimumStatus::Exact && m.value == 2 * g - 1, "M on " + describe(c));
        v.expect(mu(c, S).value == 2 * g - 1, "mu on " + describe(c));
      }
    }
  }
  return v;
}

Verdict inert_minimum() {
  Verdict v;
  for (std::uint64_t p : {3, 7}) {
    for (std::int64_t g : {1, 2}) {
      const auto models = pick_models(p, 2 * g + 2, true, 3, "c2");
      v.expect(models.size() == 3, "three inert models");
      for (const auto& c : models) {
        v.expect(c.infinity_kind() == InfinityKind::Inert, "inert " + describe(c));
        const std::vector<Place> S = infinity_places(c).places;
        const auto m = minimum(c, S);
        v.expect(m.status == MinimumStatus::Exact && m.value == 2 * g, "M on " + describe(c));
        const FFElem x = FFElem::y(c) / FFElem::x(c);
        const std::uint64_t pairs = ipow(p, 2 * (g + 3));
        v.expect(brute_force_min(x, g + 2, BruteForceOptions{pairs}) == Degree(2 * g), "brute force on " + describe(c));
      }
    }
  }
  return v;
}

Verdict sharpness() {
  Verdict v;
  const std::uint64_t p = 5;
  std::int64_t curves = 0;
  for (std::int64_t degree : {5, 6}) {
    for (Residue lead = 1; lead < p; ++lead) {
      for (std::uint64_t index = 0; index < ipow(p, degree); ++index) {
        const Poly f = poly_from_index(p, degree, index, lead);
        if (!poly_is_squarefree(f)) continue;
        ++curves;
        const CurveModel c(p, f, Hyperelliptic{});
        const auto kind = c.infinity_kind();
        if (kind == InfinityKind::Split) continue;
        const auto t8 = check_theorem8(c);
        v.expect(t8.passed, "THM8 on " + describe(c));
        v.expect(t8.observed["M"] == t8.bound["upper"], "THM8 equality on " + describe(c));
        if (kind == InfinityKind::Ramified) v.expect(check_theorem9(c).passed, "THM9 on " + describe(c));
      }
    }
  }
  v.expect(curves == 60000, "squarefree count");
  v.note = std::to_string(curves) + " curves";
  return v;
}

Verdict section4_excess() {
  Verdict v;
  const CurveModel inert(7, Poly::from_ints(7, {1, 1, 0, 0, 3}), Hyperelliptic{});
  const std::vector<Place> S{Place::inf_inert(7)};
  const auto a = mu(inert, S);
  v.expect(a.value == 2 && a.value > 2 * inert.genus() - 1, "inert mu");
  v.expect(a.exhaustive, "inert mu exhaustive");

  const CurveModel odd(7, Poly::from_ints(7, {0, -1, 0, 1}), Hyperelliptic{});
  const std::vector<Place> W{Place::affine_ramified(Fp(0, 7)), Place::affine_ramified(Fp(1, 7))};
  const auto b = mu(odd, W);
  v.expect(b.value == 0 && b.exhaustive, "two-place mu");
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  for (std::int64_t g : {1, 2, 3}) {
    for (std::uint64_t p : {7, 11}) {
      for (const auto& c : pick_models(p, 2 * g + 1, false, 2, "c5")) {
        v.expect(gap_sequence(c, Place::inf_ramified(p)).gaps == semigroup_gaps(2, 2 * g + 1).gaps,
                 "gaps vs semigroup on " + describe(c));
      }
    }
  }
  std::int64_t pairs = 0;
  for (std::int64_t m = 2; m <= 50; ++m) {
    for (std::int64_t r = 2; m * r <= 100; ++r) {
      if (std::gcd(m, r) != 1) continue;
      ++pairs;
      const auto s = semigroup_gaps(m, r);
      v.expect(static_cast<std::int64_t>(s.gaps.size()) == (m - 1) * (r - 1) / 2, "gap count");
      v.expect(!s.gaps.empty() ? s.gaps.back() == m * r - m - r : m * r - m - r < 0, "largest gap");
    }
  }
  v.note = std::to_string(pairs) + " pairs";
  return v;
}

Verdict riemann_roch() {
  Verdict v;
  const std::vector<CurveModel> models{CurveModel(7, Poly::from_ints(7, {0, -1, 0, 1}), Hyperelliptic{}),
                                       CurveModel(7, Poly::from_ints(7, {1, 2, 0, 0, 0, 1}), Hyperelliptic{})};
  for (const auto& c : models) {
    Rng rng(0, "c6:" + describe(c));
    const auto places = fibre_places(c);
    const auto W = canonical_divisor(c);
    const std::int64_t g = c.genus();
    for (int trial = 0; trial < 200; ++trial) {
      Divisor D;
      for (std::int64_t k = rng.between(1, 3); k > 0; --k) D.add(places[rng.below(places.size())], rng.between(-3, 3));
      const std::string tag = D.to_string() + " on " + describe(c);
      const std::int64_t l = ell(c, D);
      v.expect(l - ell(c, W - D) == D.degree() + 1 - g, "Riemann-Roch " + tag);
      if (D.degree() < 0) v.expect(l == 0, "negative degree " + tag);
      if (D.degree() >= 2 * g - 1) v.expect(speciality_index(c, D) == 0, "non-special " + tag);
      const auto basis = l_space(c, D, LSpaceOptions{false});
      v.expect(basis.dimension() == l, "dimension " + tag);
      for (const auto& fn : basis.functions) {
        for (const auto& place : places) {
          v.expect(valuation(c, place, fn) + D.coefficient(place) >= Order(0), "basis valuation " + tag);
        }
      }
    }
  }
  return v;
}

Verdict reduction_optimality() {
  Verdict v;
  const std::vector<CurveModel> models{CurveModel(3, Poly::from_ints(3, {1, 2, 0, 1}), Hyperelliptic{}),
                                       CurveModel(3, Poly::from_ints(3, {1, 2, 0, 0, 0, 1}), Hyperelliptic{}),
                                       CurveModel(3, Poly::from_ints(3, {2, 1, 0, 0, 2}), Hyperelliptic{}),
                                       CurveModel(3, Poly::from_ints(3, {1, 1, 0, 0, 0, 0, 2}), Hyperelliptic{})};
  Rng rng(0, "c7");
  for (int trial = 0; trial < 100; ++trial) {
    const auto& c = models[static_cast<std::size_t>(trial) % models.size()];
    const FFElem x = random_element(rng, c, 1);
    const std::int64_t bound = max_component_degree(x) + c.genus() + 2;
    const auto reduced = euclidean_reduce(x);
    v.expect(reduced.value == brute_force_min(x, bound, BruteForceOptions{1'000'000'000}),
             x.to_string() + " on " + describe(c));
  }
  return v;
}

Verdict reduce_sampling() {
  Verdict v;
  const std::vector<CurveModel> models{CurveModel(7, Poly::from_ints(7, {0, -1, 0, 1}), Hyperelliptic{}),
                                       CurveModel(7, Poly::from_ints(7, {1, 2, 0, 0, 0, 1}), Hyperelliptic{}),
                                       CurveModel(7, Poly::from_ints(7, {1, 1, 0, 0, 3}), Hyperelliptic{}),
                                       CurveModel(7, Poly::from_ints(7, {1, 0, 0, 0, 0, 0, 3}), Hyperelliptic{}),
                                       CurveModel(3, Poly::from_ints(3, {1, 1, 0, 0, 0, 0, 2}), Hyperelliptic{})};
  for (const auto& c : models) {
    const std::vector<Place> S = infinity_places(c).places;
    const std::int64_t bound = mu(c, S).value;
    Rng rng(0, "c8:" + describe(c));
    for (int trial = 0; trial < 200; ++trial) {
      const FFElem x = random_element(rng, c, 2 * c.genus() + 3);
      v.expect(euclidean_reduce(x).value <= Degree(bound), x.to_string() + " on " + describe(c));
    }
  }
  return v;
}

Verdict degree_axioms() {
  Verdict v;
  const std::vector<CurveModel> models{CurveModel(7, Poly::from_ints(7, {1, 2, 0, 0, 0, 1}), Hyperelliptic{}),
                                       CurveModel(7, Poly::from_ints(7, {1, 0, 0, 0, 0, 0, 3}), Hyperelliptic{}),
                                       CurveModel(7, Poly::from_ints(7, {1, 0, 0, 0, 0, 0, 1}), Hyperelliptic{}),
                                       CurveModel(5, Poly::from_ints(5, {1, 1, 0, 0, 0, 0, 2}), Hyperelliptic{})};
  Rng rng(0, "c9");
  for (int trial = 0; trial < 500; ++trial) {
    const auto& c = models[static_cast<std::size_t>(trial) % models.size()];
    FFElem x = random_element(rng, c, 3);
    FFElem z = random_element(rng, c, 3);
    if (x.is_zero()) x = FFElem::x(c);
    if (z.is_zero()) z = FFElem::y(c);
    v.expect(deg_S(x * z) == deg_S(x) + deg_S(z), "additivity on " + describe(c));
    v.expect(deg_S(x + z) <= std::max(deg_S(x), deg_S(z)), "ultrametric on " + describe(c));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto& c = models[static_cast<std::size_t>(trial) % models.size()];
    const std::uint64_t p = c.p();
    Poly num = Poly::constant(Fp(1 + rng.below(p - 1), p));
    Poly den = Poly::constant(Fp(1, p));
    for (std::int64_t k = rng.between(0, 4); k > 0; --k) num = num * Poly::linear_root(Fp(rng.below(p), p));
    for (std::int64_t k = rng.between(0, 4); k > 0; --k) den = den * Poly::linear_root(Fp(rng.below(p), p));
    const FFElem x = FFElem::from_x(c, RatFun(num, den));
    std::int64_t sum = 0;
    for (const auto& place : fibre_places(c)) sum += valuation(c, place, x).value() * place.degree();
    v.expect(sum == 0, "product formula for " + x.to_string() + " on " + describe(c));
  }
  return v;
}

std::pair<int, std::string> run(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Verdict determinism(const std::string& cli) {
  Verdict v;
  const std::string command = cli + " verify --family p=5,deg=5..6 --seed 1 --json";
  const auto first = run(command);
  const auto second = run(command);
  v.expect(first.first == 0 && second.first == 0, "exit status");
  v.expect(!first.second.empty(), "non-empty output");
  v.expect(first.second == second.second, "byte-identical output");
  v.note = std::to_string(first.second.size()) + " bytes";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "ffmin";
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"gap sequences at a ramified infinity", gap_sequences},
      {"inert infinity minimum 2g", inert_minimum},
      {"discriminant bounds and sharpness over GF(5)", sharpness},
      {"excess of mu for an inert place", section4_excess},
      {"gap sequences match semigroup gaps", oracle_equivalence},
      {"Riemann-Roch property suite", riemann_roch},
      {"reduction optimality over GF(3)", reduction_optimality},
      {"reduced values bounded by mu", reduce_sampling},
      {"degree axioms and product formula", degree_axioms},
      {"determinism of the family report", [&] { return determinism(cli); }},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.failures = 1;
      v.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = v.failures == 0 && v.checked > 0;
    if (!ok) ++failed;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  (" << v.checked << " checks, "
         << v.failures << " failures";
    if (!v.note.empty()) line << ", " << v.note;
    line.precision(2);
    line << std::fixed << ", " << secs << "s)";
    std::cout << line.str() << std::endl;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << criteria.size() << "  passed " << (criteria.size() - static_cast<std::size_t>(failed))
            << "  failed " << failed << "  elapsed " << static_cast<int>(total) << "s" << std::endl;
  return failed == 0 ? 0 : 1;
}
