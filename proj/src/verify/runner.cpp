#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "cases.hpp"

namespace stcalc::verify {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxAttempts = 200;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Uniform on [-9, 9] \ {0}; the modulo keeps the stream platform independent.
long draw_nonzero(std::mt19937_64& rng) {
  long r = static_cast<long>(rng() % 18);
  return r < 9 ? r - 9 : r - 8;
}

BigRat draw_rational(std::mt19937_64& rng) {
  long p = draw_nonzero(rng);
  long q = draw_nonzero(rng);
  return BigRat(p, q);
}

bool admissible(const TheoremCase& c, const std::map<Var, BigRat>& point) {
  auto get = [&](Var v) -> const BigRat* {
    auto it = point.find(v);
    return it == point.end() ? nullptr : &it->second;
  };
  const BigRat* s = get(Var::s);
  const BigRat* t = get(Var::t);
  if (s && t) {
    BigRat disc = *s * *s + BigRat(4) * *t;
    BigRat root;
    if (disc.is_zero()) return false;
    if (c.ring == RingReq::quadext && rational_sqrt(disc, root)) return false;
  }
  if (const BigRat* q = get(Var::q)) {
    if (*q == BigRat(1) || *q == BigRat(-1)) return false;
  }
  return !c.accept || c.accept(point);
}

std::string describe_point(const std::vector<Var>& params, const std::map<Var, BigRat>& point) {
  std::string out;
  for (Var v : params) {
    if (!out.empty()) out += ", ";
    out += std::string(var_name(v)) + "=" + point.at(v).to_string();
  }
  return out;
}

struct Evaluation {
  Items lhs;
  Items rhs;
};

Evaluation evaluate(const TheoremCase& c, const Env& env, const std::optional<Fault>& fault) {
  Evaluation e{c.lhs(env), c.rhs(env)};
  if (fault) {
    if (fault->index >= e.lhs.size()) throw std::out_of_range("fault index out of range");
    Value& v = e.lhs[fault->index];
    std::visit([](auto& x) { x = x + std::decay_t<decltype(x)>(1); }, v);
  }
  return e;
}

RunRecord finish(std::string mode, const Evaluation& e, std::size_t& items) {
  RunRecord r;
  r.mode = std::move(mode);
  items = std::max(items, e.lhs.size());
  try {
    auto d = compare(e.lhs, e.rhs);
    if (d) {
      r.outcome = "differ";
      r.index = d->index;
      r.lhs = d->lhs;
      r.rhs = d->rhs;
    } else {
      r.outcome = "equal";
    }
  } catch (const Error& ex) {
    r.outcome = "error";
    r.detail = ex.what();
  }
  return r;
}

RunRecord error_run(std::string mode, const std::string& what) {
  RunRecord r;
  r.mode = std::move(mode);
  r.outcome = "error";
  r.detail = what;
  return r;
}

Witness witness_from(const RunRecord& r) {
  Witness w;
  w.mode = r.mode;
  w.index = r.index.value_or(0);
  w.lhs = r.lhs;
  w.rhs = r.rhs;
  return w;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

std::string expectation_name(Expectation e) { return e == Expectation::holds ? "holds" : "refuted"; }

std::size_t VerifyReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [&](const CaseResult& c) { return c.status == s; }));
}

bool VerifyReport::all_passed() const { return count(Status::fail) == 0; }

unsigned thread_budget(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ST_CALC_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min(n, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CaseResult run_case(const TheoremCase& c, int order, std::uint64_t seed,
                    const std::optional<Fault>& fault) {
  auto start = Clock::now();
  CaseResult res;
  res.id = c.id;
  res.section = c.section;
  res.citation = c.citation;
  res.note = c.note;
  res.ring = ring_name(c.ring);
  res.expect = c.expect;

  auto attempt = [&](const std::string& mode, const Env& env) {
    try {
      res.runs.push_back(finish(mode, evaluate(c, env, fault), res.items));
    } catch (const std::exception& ex) {
      res.runs.push_back(error_run(mode, ex.what()));
    }
  };

  if (c.policy == Policy::fixed || c.params.empty()) {
    Env env;
    env.order = order;
    attempt("exact", env);
  } else {
    if (c.policy == Policy::symbolic_and_random && order <= c.symbolic_max_order) {
      Env env;
      env.order = order;
      attempt("symbolic", env);
    } else {
      RunRecord skip;
      skip.mode = "symbolic";
      skip.outcome = "skipped";
      skip.detail = c.policy == Policy::random_only
                        ? "specializations only"
                        : "order above symbolic budget " + std::to_string(c.symbolic_max_order);
      res.runs.push_back(skip);
    }
    std::mt19937_64 rng(splitmix64(seed ^ fnv1a(c.id)));
    for (int k = 0; k < c.random_count; ++k) {
      bool done = false;
      for (int tries = 0; tries < kMaxAttempts && !done; ++tries) {
        std::map<Var, BigRat> point;
        for (Var v : c.params) point[v] = draw_rational(rng);
        if (!admissible(c, point)) continue;
        Env env;
        env.order = order;
        env.symbolic = false;
        for (const auto& [v, val] : point) env.values[v] = RatFunc(val);
        std::string mode = describe_point(c.params, point);
        try {
          res.runs.push_back(finish(mode, evaluate(c, env, fault), res.items));
          done = true;
        } catch (const DomainError&) {
        } catch (const NotAUnit&) {
        } catch (const PoleError&) {
        } catch (const DivisionByZero&) {
        } catch (const std::exception& ex) {
          res.runs.push_back(error_run(mode, ex.what()));
          done = true;
        }
      }
      if (!done) {
        res.runs.push_back(error_run("random", "no admissible specialization after " +
                                                   std::to_string(kMaxAttempts) + " draws"));
      }
    }
  }

  auto first = [&](const char* outcome) -> const RunRecord* {
    for (const auto& r : res.runs) {
      if (r.outcome == outcome) return &r;
    }
    return nullptr;
  };
  const RunRecord* differ = first("differ");
  const RunRecord* error = first("error");
  bool any_equal = first("equal") != nullptr;

  if (c.expect == Expectation::holds) {
    if (error) {
      res.status = Status::fail;
      res.error = error->detail;
      res.reason = "builder error in run " + error->mode;
    } else if (differ) {
      res.status = Status::fail;
      res.witness = witness_from(*differ);
      res.reason = "first difference at index " + std::to_string(*differ->index);
    } else if (!any_equal) {
      res.status = Status::skipped;
      res.reason = "no run executed";
    } else {
      res.status = Status::pass;
    }
  } else {
    if (differ) {
      res.status = Status::pass;
      res.witness = witness_from(*differ);
      res.reason = "printed form refuted at index " + std::to_string(*differ->index);
    } else if (error) {
      res.status = Status::fail;
      res.error = error->detail;
      res.reason = "builder error in run " + error->mode;
    } else {
      res.status = Status::fail;
      res.reason = "printed form was expected to fail but holds in every run";
    }
  }
  res.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return res;
}

VerifyReport run_all(const RunOptions& opts) {
  if (opts.order < 4) throw DomainError("verification order must be at least 4");
  auto start = Clock::now();
  std::vector<const TheoremCase*> selected;
  for (const auto& c : registry()) {
    if (opts.filter.empty() || c.id.find(opts.filter) != std::string::npos) selected.push_back(&c);
  }
  VerifyReport rep;
  rep.order = opts.order;
  rep.seed = opts.seed;
  rep.filter = opts.filter;
  rep.threads = std::min<unsigned>(thread_budget(opts.threads),
                                   std::max<unsigned>(1, static_cast<unsigned>(selected.size())));
  rep.cases.resize(selected.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      rep.cases[i] = run_case(*selected[i], opts.order, opts.seed);
    }
  };
  if (rep.threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < rep.threads; ++i) pool.emplace_back(worker);
  }
  rep.total_millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rep;
}

}  // namespace stcalc::verify
