#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "hookkron/error.hpp"
#include "hookkron/io.hpp"
#include "hookkron/lascoux.hpp"
#include "hookkron/verify.hpp"

using namespace hookkron;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kMismatch = 3;

struct Global {
  std::string format = "text";
  int jobs = 1;
  std::uint64_t seed = 20240601;
  bool json() const { return format == "json"; }
};

SkewShape parse_shape(const std::string& s) {
  return s.find('/') == std::string::npos ? SkewShape(Partition::parse(s)) : SkewShape::parse(s);
}

json shape_json(const SkewShape& s) {
  return s.inner.size() == 0 ? to_json(s.outer) : to_json(s);
}

void print_tableau(const ColoredTableau& t, const char* label) {
  std::cout << label << ":\n" << format_tableau(t) << "\n";
}
void print_tableau(const OrdinaryTableau& t, const char* label) {
  std::cout << label << ":\n" << format_tableau(t) << "\n";
}

int cmd_compute(const Global& g, const std::string& lam_s, int d, const std::string& nu_s, const std::string& method,
                const std::string& strategy, bool witnesses) {
  Partition lam = Partition::parse(lam_s);
  SkewShape nu = parse_shape(nu_s);
  int n = lam.size();
  if (nu.size() != n) throw PreconditionError("|lambda| and |nu| differ");
  if (d < 0 || d > n - 1) throw PreconditionError("d must satisfy 0 <= d <= n-1");
  CytStrategy st = strategy == "backtrack" ? CytStrategy::backtracking : CytStrategy::lr_assembly;
  bool want_rule = method != "oracle", want_oracle = method != "rule";
  json rec{{"lambda", to_json(lam)}, {"d", d}, {"nu", shape_json(nu)}};
  std::int64_t rule = 0, oracle = 0;
  std::vector<ColoredTableau> wit;
  if (want_rule) {
    CytFamily f = enumerate_cyt(lam, d, nu, st);
    for (auto& m : f.members)
      if (m.raisable) wit.push_back(m.tableau);
    rule = static_cast<std::int64_t>(wit.size());
    rec["count_rule"] = rule;
  }
  if (want_oracle) {
    oracle = kronecker_oracle(lam, Partition::hook(n, d), nu);
    rec["count_oracle"] = oracle;
  }
  if (witnesses && want_rule) {
    json w = json::array();
    for (auto& t : wit) w.push_back(to_json(t));
    rec["witnesses"] = w;
  }
  if (g.json()) {
    std::cout << rec.dump() << "\n";
  } else {
    if (want_rule && want_oracle) std::cout << "rule " << rule << "\noracle " << oracle << "\n";
    else std::cout << (want_rule ? rule : oracle) << "\n";
    if (witnesses && want_rule)
      for (auto& t : wit) std::cout << "\n" << format_tableau(t) << "\n";
  }
  if (want_rule && want_oracle && rule != oracle) {
    std::cerr << "mismatch: rule " << rule << " oracle " << oracle << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_table(const Global& g, const std::string& lam_s, std::optional<int> only_d, bool all_cyt, bool witnesses) {
  Partition lam = Partition::parse(lam_s);
  int n = lam.size();
  int dmax = all_cyt ? n : n - 1;
  for (int d = 0; d <= dmax; ++d) {
    if (only_d && *only_d != d) continue;
    std::int64_t total = 0, total_raisable = 0;
    for (const Partition& nu : partitions_of(n)) {
      CytFamily f = enumerate_cyt(lam, d, SkewShape(nu));
      std::int64_t all = static_cast<std::int64_t>(f.members.size()), r = f.raisable_count();
      std::int64_t shown = all_cyt ? all : r;
      if (shown == 0) continue;
      total += all;
      total_raisable += r;
      if (g.json()) {
        json rec{{"lambda", to_json(lam)}, {"d", d}, {"nu", to_json(nu)}, {"count_rule", r}};
        if (all_cyt) rec["cyt"] = all;
        if (witnesses || all_cyt) {
          json w = json::array();
          for (auto& m : f.members)
            if (all_cyt || m.raisable) {
              json t = to_json(m.tableau);
              t["raisable"] = m.raisable;
              w.push_back(t);
            }
          rec["witnesses"] = w;
        }
        std::cout << rec.dump() << "\n";
      } else {
        std::cout << "d=" << d << " nu=" << nu.str() << " raisable=" << r;
        if (all_cyt) std::cout << " cyt=" << all;
        std::cout << "\n";
        if (witnesses || all_cyt)
          for (auto& m : f.members)
            if (all_cyt || m.raisable)
              std::cout << (m.raisable ? "  [raisable]\n" : "  [lowerable]\n") << format_tableau(m.tableau) << "\n";
      }
    }
    if (!g.json()) {
      std::cout << "d=" << d << " total raisable=" << total_raisable;
      if (all_cyt) std::cout << " cyt=" << total;
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_insert(const Global& g, const std::string& word, const std::string& algo, const std::string& order_s,
               const std::string& into) {
  OrderSpec ord = OrderSpec::parse(order_s);
  if (algo == "schensted") {
    bool colored = word.find('\'') != std::string::npos;
    if (colored) {
      auto r = schensted(parse_word(word));
      if (g.json()) std::cout << json{{"P", to_json(r.p)}, {"Q", to_json(r.q)}}.dump() << "\n";
      else print_tableau(r.p, "P"), print_tableau(r.q, "Q");
    } else {
      auto r = schensted(parse_ordinary_word(word));
      if (g.json()) std::cout << json{{"P", to_json(r.p)}, {"Q", to_json(r.q)}}.dump() << "\n";
      else print_tableau(r.p, "P"), print_tableau(r.q, "Q");
    }
  } else if (algo == "mixed") {
    auto r = mixed_insert(parse_word(word), ord);
    if (g.json()) std::cout << json{{"P", to_json(r.p, ord)}, {"Q", to_json(r.q)}}.dump() << "\n";
    else print_tableau(r.p, "P_m"), print_tableau(r.q, "Q_m");
  } else if (algo == "dual-mixed") {
    ColoredTableau t = into.empty() ? ColoredTableau{} : parse_colored_tableau(into);
    if (!is_semistandard(t, ord)) throw PreconditionError("--into is not semistandard for the order");
    ColoredTableau r = dual_mixed_insert(t, parse_word(word), ord);
    if (g.json()) std::cout << json{{"P", to_json(r, ord)}}.dump() << "\n";
    else print_tableau(r, "P");
  } else if (algo == "left-right") {
    auto r = left_right_insert(parse_word(word));
    if (g.json()) std::cout << json{{"P", to_json(r.p)}, {"Q", to_json(r.q)}}.dump() << "\n";
    else print_tableau(r.p, "P_lr"), print_tableau(r.q, "Q_lr");
  } else {
    throw ParseError("unknown algorithm '" + algo + "'");
  }
  return kOk;
}

int cmd_word_op(const Global& g, const std::string& word, const std::string& op, const std::string& order_s) {
  Word w = parse_word(word);
  std::string text;
  json rec{{"op", op}, {"word", format_word(w)}};
  if (op == "blft") text = format_word(blft(w));
  else if (op == "brgt") text = format_word(brgt(w));
  else if (op == "neg") text = format_word(neg(w));
  else if (op == "std") text = format_word(standardize(w, OrderSpec::parse(order_s)).perm);
  else if (op == "erase") text = format_word(erase_bars(w));
  else if (op == "yamanouchi") {
    auto c = yamanouchi_content(w);
    text = c ? "true " + c->str() : "false";
  } else if (op == "tau") text = std::to_string(tau(w));
  else if (op == "sw") text = sw_letter(w).str();
  else if (op == "special-left" || op == "special-right") {
    auto s = special_subword(w, op == "special-left" ? Side::leftmost : Side::rightmost);
    std::ostringstream os;
    os << "tau " << s.tau << " eta " << s.eta.str() << " places";
    for (int k : s.places) os << " " << k;
    text = os.str();
  } else text = format_word(apply_symmetry(w, parse_symmetry(op)));
  rec["result"] = text;
  std::cout << (g.json() ? rec.dump() : text) << "\n";
  return kOk;
}

int cmd_pi(const Global& g, const std::string& word, const std::string& dir) {
  Word w = parse_word(word);
  if (dir != "minus" && dir != "plus") throw ParseError("--dir must be minus or plus");
  Word v = dir == "minus" ? pi_minus(w) : pi_plus(w);
  auto s = special_subword(w, dir == "minus" ? Side::rightmost : Side::leftmost);
  if (g.json()) std::cout << json{{"word", format_word(w)}, {"result", format_word(v)}, {"places", s.places}}.dump() << "\n";
  else std::cout << format_word(v) << "\n";
  return kOk;
}

int cmd_convert(const Global& g, const std::string& tab, const std::string& from_s, const std::string& to_s) {
  OrderSpec from = OrderSpec::parse(from_s), to = OrderSpec::parse(to_s);
  ColoredTableau t = parse_colored_tableau(tab);
  if (!is_semistandard(t, from)) throw PreconditionError("tableau is not semistandard for " + from.str());
  ColoredTableau r = convert(t, from, to);
  if (g.json()) std::cout << to_json(r, to).dump() << "\n";
  else std::cout << format_tableau(r) << "\n";
  return kOk;
}

int cmd_verify(const Global& g, int n, const std::string& suite, int samples) {
  VerifyOptions o;
  o.n = n;
  o.seed = g.seed;
  o.samples = samples;
  o.jobs = g.jobs;
  auto reports = run_suite(suite, o);
  bool ok = true;
  for (auto& r : reports) {
    ok = ok && r.ok();
    if (g.json()) {
      std::cout << to_json(r).dump() << "\n";
      continue;
    }
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (!r.ok()) std::cout << ", " << r.failures << " failed";
    std::cout << ")\n";
    for (auto& c : r.counterexamples) std::cout << "  counterexample: " << c << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

void print_alpha(const Global& g, const AlphaTable& t) {
  static const char* labels[12] = {"{0}",       "(0,.1)",    "[.1,.2)", "[.2,.3)", "[.3,.4)", "[.4,.5)",
                                   "[.5,.6)",   "[.6,.7)",   "[.7,.8)", "[.8,.9)", "[.9,1)",  "{1}"};
  if (g.json()) {
    std::cout << json{{"n", t.n},
                      {"bins", t.bins},
                      {"counted", t.counted},
                      {"total_triples", t.total_triples},
                      {"max_g", t.max_g}}
                     .dump()
              << "\n";
    return;
  }
  std::cout << "alpha table n=" << t.n << "\n";
  for (int i = 0; i < 12; ++i) std::cout << labels[i] << (i < 11 ? "\t" : "\n");
  for (int i = 0; i < 12; ++i) std::cout << t.bins[i] << (i < 11 ? "\t" : "\n");
  std::cout << "counted " << t.counted << " of " << t.total_triples << " ordered triples\n";
  std::cout << "max g " << t.max_g << "\n";
}

int cmd_lascoux(const Global& g, int n, bool alpha, bool conjectures, bool long_run, bool records) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (n > 8 && !long_run) {
    std::cerr << "n > 8 needs --long\n";
    return kUsage;
  }
  if (n > 10) throw PreconditionError("n must be at most 10");
  bool ok = true;
  if (conjectures) {
    for (const CheckReport& r : {check_lascoux_conjecture(n), check_problem(n, true)}) {
      ok = ok && r.ok();
      if (g.json()) {
        std::cout << to_json(r).dump() << "\n";
      } else {
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
        for (auto& c : r.counterexamples) std::cout << "  counterexample: " << c << "\n";
      }
    }
  }
  if (alpha || !conjectures) {
    AlphaTable t = alpha_table(n, g.jobs, Composition::footnote, records);
    if (records)
      for (auto& r : t.records) {
        json rec{{"lambda", to_json(r.lambda)}, {"mu", to_json(r.mu)},   {"nu", to_json(r.nu)},
                 {"g", r.g},                    {"f_nu", r.f_nu},        {"matches", r.matches},
                 {"multiplicities", r.multiplicities}};
        if (g.json()) std::cout << rec.dump() << "\n";
        else
          std::cout << r.lambda.str() << " " << r.mu.str() << " " << r.nu.str() << " g=" << r.g
                    << " alpha=" << r.matches << "/" << r.f_nu << "\n";
      }
    print_alpha(g, t);
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker coefficients for one hook shape"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for sampled checks");

  std::function<int()> run;

  auto* compute = app.add_subcommand("compute", "g(lambda, mu(d), nu) by the rule and/or the oracle");
  std::string lam, nu, method = "rule", strategy = "lr";
  int d = 0;
  bool witnesses = false;
  compute->add_option("--lambda", lam)->required();
  compute->add_option("--d", d)->required();
  compute->add_option("--nu", nu, "partition or outer/inner")->required();
  compute->add_option("--method", method)->check(CLI::IsMember({"rule", "oracle", "both"}));
  compute->add_option("--strategy", strategy)->check(CLI::IsMember({"lr", "backtrack"}));
  compute->add_flag("--witnesses", witnesses);
  compute->callback([&] { run = [&] { return cmd_compute(g, lam, d, nu, method, strategy, witnesses); }; });

  auto* table = app.add_subcommand("table", "counts per (d, nu) for one lambda");
  std::optional<int> table_d;
  bool all_cyt = false;
  table->add_option("--lambda", lam)->required();
  table->add_option("--d", table_d);
  table->add_flag("--all-cyt", all_cyt, "list all colored Yamanouchi tableaux, not only raisable ones");
  table->add_flag("--witnesses", witnesses);
  table->callback([&] { run = [&] { return cmd_table(g, lam, table_d, all_cyt, witnesses); }; });

  auto* insert = app.add_subcommand("insert", "insertion tableaux of a word");
  std::string word, algo = "mixed", order = "natural", into;
  insert->add_option("--word", word)->required();
  insert->add_option("--algo", algo)->check(CLI::IsMember({"schensted", "mixed", "dual-mixed", "left-right"}));
  insert->add_option("--order", order, "natural, smallbar or k:N");
  insert->add_option("--into", into, "tableau for dual-mixed, rows separated by '/'");
  insert->callback([&] { run = [&] { return cmd_insert(g, word, algo, order, into); }; });

  auto* wop = app.add_subcommand("word-op", "apply a word operator");
  std::string op;
  wop->add_option("--word", word)->required();
  wop->add_option("--op", op,
                  "blft brgt neg std erase yamanouchi tau sw special-left special-right rev ud inv star rev-bar "
                  "rev-nobar barud nobarud")
      ->required();
  wop->add_option("--order", order);
  wop->callback([&] { run = [&] { return cmd_word_op(g, word, op, order); }; });

  auto* pi = app.add_subcommand("pi", "color lowering/raising on words");
  std::string dir;
  pi->add_option("--word", word)->required();
  pi->add_option("--dir", dir)->required()->check(CLI::IsMember({"minus", "plus"}));
  pi->callback([&] { run = [&] { return cmd_pi(g, word, dir); }; });

  auto* conv = app.add_subcommand("convert", "convert a colored tableau between orders");
  std::string tab, from = "smallbar", to = "natural";
  conv->add_option("--tableau", tab, "rows separated by '/' or newlines")->required();
  conv->add_option("--from", from);
  conv->add_option("--to", to);
  conv->callback([&] { run = [&] { return cmd_convert(g, tab, from, to); }; });

  auto* ver = app.add_subcommand("verify", "run property suites");
  int n = 5, samples = 10000;
  std::string suite = "all";
  ver->add_option("--n", n);
  ver->add_option("--suite", suite)->check(CLI::IsMember({"all", "insertion", "rules", "symmetries", "lascoux"}));
  ver->add_option("--samples", samples, "random length-8 cases per pool");
  ver->callback([&] { run = [&] { return cmd_verify(g, n, suite, samples); }; });

  auto* las = app.add_subcommand("lascoux", "the products of Gamma sets");
  bool alpha = false, conj = false, long_run = false, records = false;
  las->add_option("--n", n)->required();
  las->add_flag("--alpha-table", alpha);
  las->add_flag("--conjectures", conj);
  las->add_flag("--long", long_run, "allow n up to 10");
  las->add_flag("--records", records, "one line per triple");
  las->callback([&] { run = [&] { return cmd_lascoux(g, n, alpha, conj, long_run, records); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
