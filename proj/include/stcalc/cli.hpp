#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stcalc/deformed.hpp"

namespace stcalc::cli {

// Bad flags or values outside the guardrails; maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

inline constexpr long kMaxD = 12;
inline constexpr long kMaxN = 200;
inline constexpr int kMaxOrder = 64;
inline constexpr int kMinVerifyOrder = 4;

enum class Format { text, json, csv };
Format parse_format(const std::string& name);

// "p/q", an integer, or "symbolic" for the variable itself.
RatFunc parse_param(const std::string& text, Var symbol);

// A list printed in the literature for one (family, s, t) choice, indexed
// from `start`.
struct PrintedList {
  std::string label;
  std::string oeis;
  std::string family;
  long d = 0;
  BigRat s;
  BigRat t;
  long start = 0;
  std::vector<long> values;
  std::string caveat;
};

const std::vector<PrintedList>& printed_lists();

struct SeqRequest {
  std::string family;
  std::optional<long> d;
  std::string s = "symbolic";
  std::string t = "symbolic";
  std::optional<std::string> q;
  std::optional<std::string> spec;
  long start = 0;
  long count = 10;
};

struct ListMismatch {
  long n = 0;
  std::string computed;
  long printed = 0;
};

struct ListCheck {
  const PrintedList* list = nullptr;
  long first = 0;
  long last = -1;
  std::vector<ListMismatch> mismatches;
};

struct SeqResult {
  std::string family;
  long d = 0;
  std::string formula;
  std::string context;
  long start = 0;
  std::vector<RatFunc> values;
  std::vector<ListCheck> checks;
};

SeqResult compute_seq(const SeqRequest& req);
std::string render_seq(const SeqResult& r, Format f);

struct EvalRequest {
  std::string expr;
  long arg = 0;
  std::string s = "symbolic";
  std::string t = "symbolic";
  std::string q = "symbolic";
  std::string u = "symbolic";
  std::string v = "symbolic";
  int order = 8;
};

struct EvalResult {
  std::string expr;
  long arg = 0;
  int order = -1;  // -1 for polynomials
  std::string variable;
  std::string text;
  std::vector<std::string> coefficients;
  std::vector<std::pair<std::string, std::string>> extra;
};

EvalResult compute_eval(const EvalRequest& req);
std::string render_eval(const EvalResult& r, Format f);

// Full command line, argv[0] included. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stcalc::cli
