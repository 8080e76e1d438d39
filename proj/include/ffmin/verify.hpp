#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ffmin/curve.hpp"

namespace ffmin {

using Json = nlohmann::ordered_json;

enum class CheckId { Lemma1, Thm2, Prop3, Cor4, Cor5Semigroup, Cor6, Thm8, Thm9, Thm10, MuExcessSect4 };

std::string to_string(CheckId id);

struct CheckOutcome {
  CheckOutcome(CheckId id, std::string curve_descriptor) : check_id(id), curve(std::move(curve_descriptor)) {}

  CheckId check_id;
  std::string curve;
  Json inputs = Json::object();
  Json observed = Json::object();
  Json bound = Json::object();
  bool passed = false;
  Json witness;  // null when there is none

  Json to_json() const;
};

/// Raised when a check does not apply to the given model or place set.
class CheckNotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VerifyConfig {
  std::uint64_t seed = 0;
  /// Random elements per THM2 check.
  int samples = 200;
  /// Family sweeps enumerate a degree fully when it has at most this many candidate f, else sample this many.
  std::size_t curves_per_degree = 100;
};

struct BoundsReport {
  std::vector<CheckOutcome> outcomes;
  std::map<std::string, std::size_t> skipped;  // check_id -> count
  Json config = Json::object();

  std::size_t passed_count() const;
  std::size_t failed_count() const;
  std::size_t skipped_count() const;
  bool all_passed() const { return failed_count() == 0; }

  void append(BoundsReport other);
  /// Stable sort by (check_id, curve).
  void sort();
  Json summary() const;
  /// One record per line, then the summary record.
  std::string to_jsonl() const;
  std::string to_table() const;
};

CheckOutcome check_lemma1(const CurveModel& c, std::span<const Place> S);
CheckOutcome check_mu_excess(const CurveModel& c);
CheckOutcome check_theorem2(const CurveModel& c, std::span<const Place> S, int sample_count, std::uint64_t seed);
CheckOutcome check_prop3_cor4_cor6(const CurveModel& c, const Place& P);
CheckOutcome check_theorem8(const CurveModel& c);
CheckOutcome check_theorem9(const CurveModel& c);
CheckOutcome check_theorem10(const CurveModel& c);
/// Artin-Schreier descriptor y^p - y = f with deg f = r prime to p.
CheckOutcome check_cor5_semigroup(std::int64_t p, std::int64_t r);

/// Every applicable check for one model.
BoundsReport verify_curve(const CurveModel& c, const VerifyConfig& config);

struct FamilySpec {
  std::uint64_t p;
  std::int64_t deg_lo;
  std::int64_t deg_hi;
  int m = 2;

  std::string to_string() const;
};

/// Squarefree f of each degree in range: enumerated, or sampled above the size threshold.
std::vector<CurveModel> family_curves(const FamilySpec& family, const VerifyConfig& config);
BoundsReport family_sweep(const FamilySpec& family, const VerifyConfig& config);

}  // namespace ffmin
