#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stcalc/deformed.hpp"

namespace stcalc::verify {

using Value = std::variant<BigRat, RatFunc, QuadExt>;
using Items = std::vector<Value>;

std::string value_to_string(const Value& v);

Items items(const Series<RatFunc>& s);
Items items(const Series<QuadExt>& s);
Items items(const std::vector<RatFunc>& v);
Items items(const std::vector<QuadExt>& v);
Items items(const std::vector<BigRat>& v);
void append(Items& dst, const Items& src);

struct Divergence {
  std::size_t index = 0;
  std::string lhs;
  std::string rhs;
};

// Canonical-form equality item by item. Throws RingMismatch when the
// alternatives or quadratic discriminants differ and DomainError when the
// lengths differ.
std::optional<Divergence> compare(const Items& a, const Items& b);

template <CoefficientRing R>
std::optional<Divergence> compare_series(const Series<R>& a, const Series<R>& b) {
  if (a.order() != b.order()) throw DomainError("series orders differ");
  return compare(items(a), items(b));
}

enum class RingReq { integer, ratfunc, quadext };
enum class Expectation { holds, refuted };
enum class Policy { symbolic_and_random, random_only, fixed };

std::string ring_name(RingReq r);

// What a builder sees: the truncation order and a value for every parameter,
// either the symbol itself or a sampled rational.
struct Env {
  int order = 8;
  bool symbolic = true;
  std::map<Var, RatFunc> values;

  RatFunc operator()(Var v) const;
  // (s, t) from the parameter values.
  ContextPtr st() const;
  // s = 1 + q, t = -q.
  ContextPtr qctx() const;
};

using Builder = std::function<Items(const Env&)>;

struct TheoremCase {
  std::string id;
  std::string section;
  std::string citation;
  std::string note;
  RingReq ring = RingReq::ratfunc;
  Expectation expect = Expectation::holds;
  Policy policy = Policy::symbolic_and_random;
  std::vector<Var> params;
  // The symbolic run is skipped above this order.
  int symbolic_max_order = 64;
  int random_count = 5;
  // Extra rejection rule for sampled points.
  std::function<bool(const std::map<Var, BigRat>&)> accept;
  Builder lhs;
  Builder rhs;
};

// Sorted by id.
const std::vector<TheoremCase>& registry();
const TheoremCase* find_case(const std::string& id);

enum class Status { pass, fail, skipped };

struct RunRecord {
  std::string mode;  // "symbolic", "exact" or "s=1/2, t=-3"
  std::string outcome;  // equal | differ | error | skipped
  std::optional<std::size_t> index;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct Witness {
  std::string mode;
  std::size_t index = 0;
  std::string lhs;
  std::string rhs;
};

struct CaseResult {
  std::string id;
  std::string section;
  std::string citation;
  std::string note;
  std::string ring;
  Expectation expect = Expectation::holds;
  Status status = Status::pass;
  std::string reason;
  std::optional<Witness> witness;
  std::optional<std::string> error;
  std::size_t items = 0;
  std::vector<RunRecord> runs;
  double millis = 0;
};

struct VerifyReport {
  int order = 8;
  std::uint64_t seed = 42;
  std::string filter;
  unsigned threads = 1;
  std::vector<CaseResult> cases;
  double total_millis = 0;

  std::size_t count(Status s) const;
  bool all_passed() const;
};

struct Fault {
  std::size_t index = 0;
};

struct RunOptions {
  int order = 8;
  std::uint64_t seed = 42;
  std::string filter;
  // 0 reads ST_CALC_THREADS, defaulting to the hardware concurrency.
  unsigned threads = 0;
};

unsigned thread_budget(unsigned requested);

CaseResult run_case(const TheoremCase& c, int order, std::uint64_t seed,
                    const std::optional<Fault>& fault = std::nullopt);

// Throws DomainError when order < 4.
VerifyReport run_all(const RunOptions& opts);

std::string status_name(Status s);
std::string expectation_name(Expectation e);

std::string render_text(const VerifyReport& r);
std::string to_json_string(const VerifyReport& r, int indent = 2);
VerifyReport from_json_string(const std::string& text);

}  // namespace stcalc::verify
