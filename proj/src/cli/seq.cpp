#include <sstream>

#include "common.hpp"
#include "stcalc/qrs.hpp"

namespace stcalc::cli {

using detail::json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw UsageError("unknown format '" + name + "' (text, json, csv)");
}

RatFunc parse_param(const std::string& text, Var symbol) {
  if (text == "symbolic") return RatFunc::var(symbol);
  try {
    return RatFunc(BigRat::parse(text));
  } catch (const Error& ex) {
    throw UsageError(std::string(var_name(symbol)) + ": " + ex.what());
  }
}

const std::vector<PrintedList>& printed_lists() {
  static const std::vector<PrintedList> lists = {
      {"Jacobsthal numbers", "", "fib", 0, 1, 2, 0, {0, 1, 1, 2, 3, 5, 11, 21, 43, 85},
       "the printed list has 2, 3 in place of J_3 = 3, so later terms sit one index late"},
      {"non-negative numbers", "", "polytopic", 1, 2, -1, 0, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, ""},
      {"triangular numbers", "", "polytopic", 2, 2, -1, 0, {0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66}, ""},
      {"tetrahedral numbers", "", "polytopic", 3, 2, -1, 0, {0, 1, 4, 10, 20, 35, 56, 84, 120, 165}, ""},
      {"pentachoron numbers", "", "polytopic", 4, 2, -1, 0, {0, 1, 5, 15, 35, 70, 126, 210, 330, 495, 715}, ""},
      {"hexateron numbers", "", "polytopic", 5, 2, -1, 0, {0, 1, 6, 21, 56, 126, 252, 462, 792, 1287}, ""},
      {"golden rectangle numbers", "A001654", "polytopic", 2, 1, 1, 0, {0, 1, 2, 6, 15, 40, 104, 273}, ""},
      {"Pell triangles", "A084158", "polytopic", 2, 2, 1, 0, {0, 1, 5, 30, 174, 1015, 5915}, ""},
      {"Jacobsthal oblong numbers", "A084175", "polytopic", 2, 1, 2, 0, {0, 1, 2, 6, 15, 55, 231, 903, 3655},
       "the printed list has 2, 6 in place of J_2 J_3 = 3, so later terms sit one index late"},
      {"Gaussian binomials [n,2]_2", "A006095", "polytopic", 2, 3, -2, 0,
       {0, 1, 7, 35, 155, 651, 2667, 10795, 43435, 174251}, ""},
      {"Fibonacci tetrahedral numbers", "A001655", "polytopic", 3, 1, 1, 0, {0, 1, 3, 15, 60, 260, 1092, 4641, 19635},
       ""},
      {"Pell tetrahedral numbers", "A099930", "polytopic", 3, 2, 1, 1, {1, 12, 174, 2436, 34307, 482664},
       "the printed list starts at n = 1"},
      {"Jacobsthal tetrahedral numbers", "", "polytopic", 3, 1, 2, 0, {0, 1, 5, 55, 385, 3311, 25585, 208335}, ""},
      {"Mersenne tetrahedral numbers", "A006096", "polytopic", 3, 3, -2, 0, {0, 1, 15, 155, 1395, 11811, 97155}, ""},
      {"Gaussian binomials [n,2]_2", "A006095", "qbinom-column", 2, 3, -2, 0,
       {0, 1, 7, 35, 155, 651, 2667, 10795, 43435, 174251},
       "the list printed for {n+1,2}_{3,-2} is [n+1,2]_2, one index ahead of [n,2]_2"},
  };
  return lists;
}

namespace {

struct Family {
  std::string canonical;
  long d;
};

Family resolve_family(const std::string& name, const std::optional<long>& d) {
  static const std::vector<std::pair<std::string, long>> fixed = {
      {"triangular", 2}, {"tetrahedral", 3}, {"pentachoron", 4}, {"hexateron", 5}};
  for (const auto& [n, dd] : fixed) {
    if (name == n) {
      if (d && *d != dd) throw UsageError(name + " has d = " + std::to_string(dd));
      return {"polytopic", dd};
    }
  }
  if (name == "fib") {
    if (d) throw UsageError("fib takes no --d");
    return {"fib", 0};
  }
  if (name == "polytopic" || name == "qbinom-column") {
    if (!d) throw UsageError(name + " needs --d");
    return {name, *d};
  }
  throw UsageError("unknown family '" + name +
                   "' (fib, polytopic, triangular, tetrahedral, pentachoron, hexateron, qbinom-column)");
}

std::string rat_label(const RatFunc& r) { return r.to_string(); }

}  // namespace

SeqResult compute_seq(const SeqRequest& req) {
  if (req.d && (*req.d < 0 || *req.d > kMaxD)) {
    throw UsageError("--d must lie in [0, " + std::to_string(kMaxD) + "]");
  }
  if (req.count < 1) throw UsageError("--count must be positive");
  if (req.start < 0) throw UsageError("--start must be non-negative");
  if (req.start + req.count - 1 > kMaxN) throw UsageError("n must stay at most " + std::to_string(kMaxN));
  Family fam = resolve_family(req.family, req.d);

  ContextPtr ctx;
  std::string label;
  if (req.spec) {
    if (req.q) throw UsageError("--spec and --q are exclusive");
    std::string name = *req.spec;
    std::vector<BigRat> params;
    if (auto colon = name.find(':'); colon != std::string::npos) {
      std::stringstream ss(name.substr(colon + 1));
      std::string item;
      while (std::getline(ss, item, ',')) params.push_back(parse_param(item, Var::s).constant_value());
      name = name.substr(0, colon);
    }
    try {
      ctx = specialization_context(name, params);
    } catch (const Error& ex) {
      throw UsageError(ex.what());
    }
    label = *req.spec + " (s=" + rat_label(ctx->s()) + ", t=" + rat_label(ctx->t()) + ")";
  } else if (req.q) {
    RatFunc q = parse_param(*req.q, Var::q);
    ctx = STContext::qnumber(q);
    label = "q=" + rat_label(q) + " (s=" + rat_label(ctx->s()) + ", t=" + rat_label(ctx->t()) + ")";
  } else {
    RatFunc s = parse_param(req.s, Var::s);
    RatFunc t = parse_param(req.t, Var::t);
    ctx = s == RatFunc::var(Var::s) && t == RatFunc::var(Var::t) ? STContext::symbolic() : STContext::custom(s, t);
    label = "s=" + rat_label(s) + ", t=" + rat_label(t);
  }
  if (fam.canonical == "qbinom-column" && !req.q) throw UsageError("qbinom-column needs --q");

  SeqResult r;
  r.family = req.family;
  r.d = fam.d;
  r.context = label;
  r.start = req.start;
  const std::string dd = std::to_string(fam.d);
  if (fam.canonical == "fib") {
    r.formula = "[[n]]";
  } else if (fam.canonical == "polytopic") {
    r.formula = fam.d == 1 ? "{n," + dd + "}" : "{n+" + std::to_string(fam.d - 1) + "," + dd + "}";
  } else {
    r.formula = "[n," + dd + "]_q";
  }
  for (long n = req.start; n < req.start + req.count; ++n) {
    if (fam.canonical == "fib") {
      r.values.push_back(ctx->fib(n));
    } else if (fam.canonical == "polytopic") {
      r.values.push_back(polytopic(*ctx, n, fam.d));
    } else {
      r.values.push_back(ctx->binom(n, fam.d));
    }
  }

  if (ctx->s().is_constant() && ctx->t().is_constant()) {
    BigRat s0 = ctx->s().constant_value(), t0 = ctx->t().constant_value();
    for (const auto& list : printed_lists()) {
      if (list.family != fam.canonical || list.d != fam.d || list.s != s0 || list.t != t0) continue;
      ListCheck c;
      c.list = &list;
      c.first = std::max(req.start, list.start);
      c.last = std::min(req.start + req.count, list.start + static_cast<long>(list.values.size())) - 1;
      for (long n = c.first; n <= c.last; ++n) {
        const RatFunc& v = r.values[static_cast<std::size_t>(n - req.start)];
        long printed = list.values[static_cast<std::size_t>(n - list.start)];
        if (v != RatFunc(BigRat(printed))) c.mismatches.push_back({n, v.to_string(), printed});
      }
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

namespace {

std::string list_name(const PrintedList& l) { return l.oeis.empty() ? l.label : l.oeis + " " + l.label; }

std::string describe_check(const ListCheck& c) {
  std::ostringstream os;
  os << "printed list " << list_name(*c.list) << ": ";
  if (c.last < c.first) {
    os << "no overlap with the requested range (printed from n=" << c.list->start << ")";
  } else if (c.mismatches.empty()) {
    os << "agrees for n=" << c.first << ".." << c.last;
  } else {
    os << "MISMATCH at";
    for (std::size_t i = 0; i < c.mismatches.size(); ++i) {
      const auto& m = c.mismatches[i];
      os << (i ? "; " : " ") << "n=" << m.n << " computed " << m.computed << ", printed " << m.printed;
    }
  }
  return os.str();
}

const ListCheck* check_for(const SeqResult& r, long n) {
  for (const auto& c : r.checks) {
    if (n >= c.first && n <= c.last) return &c;
  }
  return nullptr;
}

}  // namespace

std::string render_seq(const SeqResult& r, Format f) {
  std::ostringstream os;
  const long last = r.start + static_cast<long>(r.values.size()) - 1;
  if (f == Format::json) {
    json j = {{"kind", "seq"},   {"family", r.family},   {"d", r.d},      {"formula", r.formula},
              {"context", r.context}, {"start", r.start}, {"count", r.values.size()}};
    j["values"] = json::array();
    for (const auto& v : r.values) j["values"].push_back(v.to_string());
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
      json m = json::array();
      for (const auto& x : c.mismatches) m.push_back({{"n", x.n}, {"computed", x.computed}, {"printed", x.printed}});
      j["checks"].push_back({{"label", c.list->label},
                             {"oeis", c.list->oeis},
                             {"first", c.first},
                             {"last", c.last},
                             {"agrees", c.mismatches.empty()},
                             {"mismatches", m},
                             {"caveat", c.list->caveat}});
    }
    os << j.dump(2) << "\n";
  } else if (f == Format::csv) {
    os << "n,value,printed,source\n";
    for (long n = r.start; n <= last; ++n) {
      os << n << "," << detail::csv_field(r.values[static_cast<std::size_t>(n - r.start)].to_string()) << ",";
      if (const ListCheck* c = check_for(r, n)) {
        os << c->list->values[static_cast<std::size_t>(n - c->list->start)] << ","
           << detail::csv_field(list_name(*c->list));
      } else {
        os << ",";
      }
      os << "\n";
    }
  } else {
    os << r.family << " " << r.formula << " at " << r.context << ", n=" << r.start << ".." << last << "\n";
    bool constant = std::all_of(r.values.begin(), r.values.end(), [](const RatFunc& v) { return v.is_constant(); });
    if (constant) {
      for (std::size_t i = 0; i < r.values.size(); ++i) os << (i ? "," : "") << r.values[i].to_string();
      os << "\n";
    } else {
      for (std::size_t i = 0; i < r.values.size(); ++i) {
        os << "n=" << r.start + static_cast<long>(i) << ": " << r.values[i].to_string() << "\n";
      }
    }
    for (const auto& c : r.checks) {
      os << describe_check(c) << "\n";
      if (!c.mismatches.empty() && !c.list->caveat.empty()) os << "  note: " << c.list->caveat << "\n";
    }
  }
  return os.str();
}

}  // namespace stcalc::cli
