#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "common.hpp"
#include "stcalc/verify.hpp"

namespace stcalc::cli {

using detail::json;

namespace {

std::string verify_csv(const verify::VerifyReport& r) {
  using detail::csv_field;
  std::ostringstream os;
  os << "id,section,expectation,status,witness_mode,witness_index,witness_lhs,witness_rhs,error,millis\n";
  for (const auto& c : r.cases) {
    os << csv_field(c.id) << "," << c.section << "," << verify::expectation_name(c.expect) << ","
       << verify::status_name(c.status) << ",";
    if (c.witness) {
      os << csv_field(c.witness->mode) << "," << c.witness->index << "," << csv_field(c.witness->lhs) << ","
         << csv_field(c.witness->rhs);
    } else {
      os << ",,,";
    }
    os << "," << csv_field(c.error.value_or("")) << "," << c.millis << "\n";
  }
  return os.str();
}

std::string show(const std::string& what, const std::string& id, Format f) {
  std::ostringstream os;
  if (what == "cases") {
    if (f == Format::json) {
      json a = json::array();
      for (const auto& c : verify::registry()) {
        a.push_back({{"id", c.id},
                     {"section", c.section},
                     {"citation", c.citation},
                     {"expectation", verify::expectation_name(c.expect)},
                     {"ring", verify::ring_name(c.ring)}});
      }
      os << json{{"kind", "show"}, {"what", "cases"}, {"cases", a}}.dump(2) << "\n";
    } else if (f == Format::csv) {
      os << "id,section,expectation,ring\n";
      for (const auto& c : verify::registry()) {
        os << c.id << "," << c.section << "," << verify::expectation_name(c.expect) << "," << verify::ring_name(c.ring)
           << "\n";
      }
    } else {
      for (const auto& c : verify::registry()) {
        os << c.id << (c.expect == verify::Expectation::refuted ? "  [printed form]" : "") << "\n";
      }
    }
    return os.str();
  }
  if (what == "case") {
    const verify::TheoremCase* c = verify::find_case(id);
    if (!c) throw UsageError("no case '" + id + "'");
    std::string params;
    for (Var v : c->params) params += (params.empty() ? "" : ",") + std::string(var_name(v));
    if (f == Format::json) {
      os << json{{"kind", "show"},
                 {"what", "case"},
                 {"id", c->id},
                 {"section", c->section},
                 {"citation", c->citation},
                 {"note", c->note},
                 {"ring", verify::ring_name(c->ring)},
                 {"expectation", verify::expectation_name(c->expect)},
                 {"params", params}}
                .dump(2)
         << "\n";
    } else {
      os << c->id << "\n  section " << c->section << "\n  " << c->citation << "\n  ring: " << verify::ring_name(c->ring)
         << "\n  expectation: " << verify::expectation_name(c->expect) << "\n  parameters: " << (params.empty() ? "-" : params)
         << "\n";
      if (!c->note.empty()) os << "  note: " << c->note << "\n";
    }
    return os.str();
  }
  if (what == "specializations") {
    if (f == Format::json) {
      os << json{{"kind", "show"}, {"what", "specializations"}, {"names", specialization_names()}}.dump(2) << "\n";
    } else {
      for (const auto& n : specialization_names()) os << n << "\n";
    }
    return os.str();
  }
  if (what == "lists") {
    if (f == Format::json) {
      json a = json::array();
      for (const auto& l : printed_lists()) {
        a.push_back({{"label", l.label},
                     {"oeis", l.oeis},
                     {"family", l.family},
                     {"d", l.d},
                     {"s", l.s.to_string()},
                     {"t", l.t.to_string()},
                     {"start", l.start},
                     {"values", l.values},
                     {"caveat", l.caveat}});
      }
      os << json{{"kind", "show"}, {"what", "lists"}, {"lists", a}}.dump(2) << "\n";
      return os.str();
    }
    for (const auto& l : printed_lists()) {
      os << l.family << " d=" << l.d << " s=" << l.s << " t=" << l.t << " from n=" << l.start << "  " << l.label;
      if (!l.oeis.empty()) os << " (" << l.oeis << ")";
      os << "\n";
    }
    return os.str();
  }
  throw UsageError("show expects cases, case ID, specializations or lists");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact (s,t)-deformed calculus: sequences, evaluation and identity verification", "st-calc"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", output, "write to a file instead of stdout");
  };

  SeqRequest sr;
  long sd = -1;
  std::string sq, sspec;
  auto* seq = app.add_subcommand("seq", "emit a sequence");
  seq->add_option("family", sr.family, "fib, polytopic, triangular, tetrahedral, pentachoron, hexateron, qbinom-column")
      ->required();
  seq->add_option("--s", sr.s, "rational p/q or 'symbolic'");
  seq->add_option("--t", sr.t, "rational p/q or 'symbolic'");
  seq->add_option("--q", sq, "q-specialization s = 1+q, t = -q");
  seq->add_option("--spec", sspec, "named specialization, e.g. pell or pq:1/2,-3");
  seq->add_option("--d", sd, "dimension for polytopic and qbinom-column");
  seq->add_option("--count", sr.count, "number of terms");
  seq->add_option("--start", sr.start, "first index n");
  add_common(seq);

  verify::RunOptions vo;
  auto* ver = app.add_subcommand("verify", "run the identity registry");
  ver->add_option("--order", vo.order, "truncation order (4..64)");
  ver->add_option("--seed", vo.seed, "seed for the sampled specializations");
  ver->add_option("--filter", vo.filter, "substring of case ids");
  ver->add_option("--threads", vo.threads, "worker threads (0: ST_CALC_THREADS or all cores)");
  add_common(ver);

  EvalRequest er;
  auto* ev = app.add_subcommand("eval", "evaluate an object");
  ev->add_option("expr", er.expr, "theta-deriv, rs-poly, binom-series or polytopic-ogf")->required();
  ev->add_option("arg", er.arg, "n, alpha or d")->required();
  ev->add_option("--s", er.s, "rational p/q or 'symbolic'");
  ev->add_option("--t", er.t, "rational p/q or 'symbolic'");
  ev->add_option("--q", er.q, "rational p/q or 'symbolic'");
  ev->add_option("--u", er.u, "rational p/q or 'symbolic'");
  ev->add_option("--v", er.v, "rational p/q or 'symbolic'");
  ev->add_option("--order", er.order, "truncation order (0..64)");
  add_common(ev);

  std::string what, id;
  auto* sh = app.add_subcommand("show", "list registry cases, specializations or printed lists");
  sh->add_option("what", what, "cases, case, specializations or lists")->required();
  sh->add_option("id", id, "case id for 'show case'");
  add_common(sh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "st-calc: " << e.what() << "\n";
    return 2;
  }

  try {
    Format f = parse_format(format);
    if (seq->parsed()) {
      if (seq->count("--d") > 0) sr.d = sd;
      if (!sq.empty()) sr.q = sq;
      if (!sspec.empty()) sr.spec = sspec;
      emit(render_seq(compute_seq(sr), f), output, out);
      return 0;
    }
    if (ver->parsed()) {
      if (vo.order < kMinVerifyOrder || vo.order > kMaxOrder) {
        throw UsageError("--order must lie in [" + std::to_string(kMinVerifyOrder) + ", " + std::to_string(kMaxOrder) +
                         "]");
      }
      auto rep = verify::run_all(vo);
      std::string text = f == Format::json  ? verify::to_json_string(rep) + "\n"
                         : f == Format::csv ? verify_csv(rep)
                                            : verify::render_text(rep);
      emit(text, output, out);
      return rep.all_passed() ? 0 : 1;
    }
    if (ev->parsed()) {
      emit(render_eval(compute_eval(er), f), output, out);
      return 0;
    }
    emit(show(what, id, f), output, out);
    return 0;
  } catch (const UsageError& e) {
    err << "st-calc: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "st-calc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "st-calc: error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace stcalc::cli
