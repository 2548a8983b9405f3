#include "parafact/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "parafact/classifier.hpp"
#include "parafact/json_output.hpp"
#include "parafact/verify.hpp"

namespace parafact::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

Int parse_int(const std::string& raw) {
  const std::string token = trim(raw);
  std::size_t digits = (!token.empty() && (token[0] == '+' || token[0] == '-')) ? 1 : 0;
  if (token.size() == digits ||
      token.find_first_not_of("0123456789", digits) != std::string::npos) {
    throw UsageError("not an integer: '" + raw + "'");
  }
  Int value(token.substr(digits));
  return token[0] == '-' ? Int(-value) : value;
}

Sign parse_sign(const std::string& token) {
  const Int v = parse_int(token);
  if (v == 1) return Sign::plus;
  if (v == -1) return Sign::minus;
  throw UsageError("sign must be +1 or -1: '" + token + "'");
}

Mat2 parse_matrix(const std::string& token) {
  const auto parts = split(token, ',');
  if (parts.size() != 4) throw UsageError("matrix needs four entries a,b,c,d: '" + token + "'");
  Mat2 m{parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3])};
  if (!m.is_unimodular()) {
    throw UsageError("matrix is not unimodular (det = " + m.det().str() + "): '" + token + "'");
  }
  return m;
}

std::vector<ParabolicParams> parse_tuple(const std::string& token) {
  std::vector<ParabolicParams> out;
  for (const auto& item : split(token, ';')) {
    const auto fields = split(item, ':');
    if (fields.size() != 3) throw UsageError("parameters must be eps:c:d: '" + item + "'");
    const Sign eps = parse_sign(fields[0]);
    const Int c = parse_int(fields[1]);
    const Int d = parse_int(fields[2]);
    if (gcd(c, d) != 1) throw UsageError("c and d are not coprime: '" + item + "'");
    out.push_back(ParabolicParams::make(eps, c, d));
  }
  if (out.empty()) throw UsageError("empty parameter tuple");
  return out;
}

struct Move {
  std::size_t index;
  bool inverse;
  std::string token;
};

std::vector<Move> parse_moves(const std::string& token) {
  std::vector<Move> out;
  for (const auto& raw : split(token, ',')) {
    const std::string item = trim(raw);
    const bool inverse = !item.empty() && item[0] == '-';
    const std::string digits = (!item.empty() && (item[0] == '-' || item[0] == '+'))
                                   ? item.substr(1) : item;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 9) {
      throw UsageError("bad move token: '" + raw + "'");
    }
    out.push_back({static_cast<std::size_t>(std::stoul(digits)), inverse, item});
  }
  return out;
}

std::string params_text(std::span<const ParabolicParams> params) {
  std::string out;
  for (const auto& p : params) {
    if (!out.empty()) out += ";";
    out += to_string(p);
  }
  return out;
}

std::string factorization_text(const Factorization& f) {
  std::string out;
  for (const auto& m : f.factors) {
    if (!out.empty()) out += " ";
    out += to_string(m);
  }
  return out;
}

struct Globals {
  bool json = false;
  bool quiet = false;
  bool strict = false;
  unsigned workers = 0;
};

// Writes the record as JSON or hands it to the text printer.
class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}
  void emit(const std::string& command, Json inputs, Json results,
            const std::function<void(std::ostream&)>& text) {
    if (g_.json) {
      out_ << make_record(command, std::move(inputs), std::move(results)).dump() << "\n";
    } else if (!g_.quiet) {
      text(out_);
    }
  }

 private:
  const Globals& g_;
  std::ostream& out_;
};

unsigned workers_of(const Globals& g) { return g.workers ? g.workers : default_worker_count(); }

// --- subcommands -------------------------------------------------------------

struct HyperbolaArgs {
  std::string eps;
  std::int64_t bound = 0;
  std::optional<std::int64_t> generate;
};

int cmd_hyperbola(const HyperbolaArgs& a, Emitter& e) {
  const Sign eps = parse_sign(a.eps);
  if (a.bound < 0) throw UsageError("--bound must be non-negative");
  const auto solutions = hyperbola_solutions_in_box(eps, a.bound);
  Json inputs{{"eps", value(eps)}, {"bound", a.bound}};
  Json list = Json::array();
  for (const auto& s : solutions) list.push_back(to_json(s));
  Json results{{"count", solutions.size()}, {"solutions", list}};
  std::vector<HyperbolaSolution> generated;
  if (a.generate) {
    if (*a.generate < 0 || *a.generate > 1000) throw UsageError("--generate must be in [0, 1000]");
    inputs["generate"] = *a.generate;
    for (const auto& s : hyperbola_generate(*a.generate)) {
      generated.push_back(eps == Sign::plus ? s : s_transform(s));
    }
    std::sort(generated.begin(), generated.end());
    Json g = Json::array();
    for (const auto& s : generated) g.push_back(to_json(s));
    results["generated"] = std::move(g);
  }
  e.emit("hyperbola", inputs, results, [&](std::ostream& os) {
    os << "eps " << to_string(eps) << ", |d| <= " << a.bound << ": " << solutions.size()
       << " solutions\n";
    for (const auto& s : solutions) os << "  " << s.d1 << " " << s.d2 << "\n";
    if (a.generate) {
      os << "generated, |n| <= " << *a.generate << ": " << generated.size() << "\n";
      for (const auto& s : generated) os << "  " << s.d1 << " " << s.d2 << "\n";
    }
  });
  return kSuccess;
}

int cmd_markov_brute(std::int64_t max, Emitter& e) {
  if (max < 1) throw UsageError("--max must be at least 1");
  const auto triples = markov_brute_force(max);
  Json list = Json::array();
  for (const auto& t : triples) list.push_back(to_json(t));
  e.emit("markov brute", {{"max", max}}, {{"count", triples.size()}, {"triples", list}},
         [&](std::ostream& os) {
           for (const auto& t : triples) os << t << "\n";
         });
  return kSuccess;
}

int cmd_markov_tree(int depth, std::optional<std::int64_t> max, Emitter& e) {
  if (depth < 0 || (!max && depth > 20) || depth > 1000) {
    throw UsageError("--depth must be in [0, 20], or [0, 1000] with --max");
  }
  const auto nodes = max ? markov_tree(depth, Int(*max)) : markov_tree(depth);
  Json inputs{{"depth", depth}};
  if (max) inputs["max"] = *max;
  Json list = Json::array();
  for (const auto& n : nodes) {
    list.push_back({{"triple", to_json(n.triple)},
                    {"depth", n.depth},
                    {"parent", n.parent ? Json(*n.parent) : Json(nullptr)}});
  }
  e.emit("markov tree", inputs, {{"count", nodes.size()}, {"nodes", list}},
         [&](std::ostream& os) {
           for (const auto& n : nodes) {
             os << std::string(2 * static_cast<std::size_t>(n.depth), ' ') << n.triple << "\n";
           }
         });
  return kSuccess;
}

struct FactorizeArgs {
  std::string target;
  std::size_t length = 0;
  std::int64_t bound = 0;
  std::string eps = "+1";
};

int cmd_factorize(const FactorizeArgs& a, const Globals& g, Emitter& e) {
  const Mat2 target = parse_matrix(a.target);
  SignSector sector;
  if (a.eps == "all") {
    sector = SignSector::any;
  } else {
    sector = parse_sign(a.eps) == Sign::plus ? SignSector::plus : SignSector::minus;
  }
  if (a.bound < 0) throw UsageError("--bound must be non-negative");
  const auto tuples = enumerate_factorizations(target, a.length, a.bound, sector, workers_of(g));
  Json list = Json::array();
  for (const auto& t : tuples) list.push_back(to_json(t));
  e.emit("factorize",
         {{"target", to_json(target)}, {"length", a.length}, {"bound", a.bound}, {"eps", a.eps}},
         {{"count", tuples.size()}, {"tuples", list}}, [&](std::ostream& os) {
           os << tuples.size() << " factorizations of " << to_string(target) << "\n";
           for (const auto& t : tuples) os << "  " << params_text(t) << "\n";
         });
  return kSuccess;
}

int cmd_hurwitz(const std::string& tuple, const std::string& moves_token, Emitter& e) {
  const auto params = parse_tuple(tuple);
  const auto moves = parse_moves(moves_token);
  Factorization f = Factorization::from_params(params);
  Json steps = Json::array();
  std::vector<std::string> step_lines;
  for (const auto& m : moves) {
    if (m.index + 1 >= f.size()) {
      throw UsageError("move index out of range for length " + std::to_string(f.size()) + ": '" +
                       m.token + "'");
    }
    f = m.inverse ? inverse_hurwitz_move(f, m.index) : hurwitz_move(f, m.index);
    steps.push_back({{"move", m.token}, {"params", to_json(f.params())}});
    step_lines.push_back(m.token + " " + params_text(f.params()));
  }
  Json inputs{{"tuple", to_json(params)}, {"moves", moves_token}};
  e.emit("hurwitz", inputs, {{"steps", steps}, {"result", to_json(f)}}, [&](std::ostream& os) {
    os << "start  " << params_text(params) << "\n";
    for (const auto& line : step_lines) os << "move   " << line << "\n";
    os << "result " << params_text(f.params()) << "\n";
    os << "factors " << factorization_text(f) << "\n";
    os << "product " << to_string(f.target) << "\n";
  });
  return kSuccess;
}

int cmd_orbit(const std::string& tuple, const std::vector<std::string>& conj_tokens,
              std::size_t max_nodes, const Globals& g, Emitter& e) {
  const auto params = parse_tuple(tuple);
  std::vector<Mat2> conjugators;
  for (const auto& t : conj_tokens) conjugators.push_back(parse_matrix(t));
  if (max_nodes == 0) throw UsageError("--max-nodes must be positive");
  const auto start = Factorization::from_params(params);
  const auto report = orbit_explore(start, conjugators, max_nodes);
  Json reps = Json::array();
  for (const auto& r : report.representatives) reps.push_back(to_json(r.params()));
  Json conj_json = Json::array();
  for (const auto& m : conjugators) conj_json.push_back(to_json(m));
  e.emit("orbit",
         {{"tuple", to_json(params)}, {"conjugators", conj_json}, {"max_nodes", max_nodes}},
         {{"representatives", reps},
          {"count", report.representatives.size()},
          {"move_count", report.move_count},
          {"truncated", report.truncated},
          {"shift_step", to_json(report.shift_step)}},
         [&](std::ostream& os) {
           os << report.representatives.size() << " representatives"
              << (report.truncated ? " (truncated)" : "") << ", " << report.move_count
              << " moves\n";
           for (const auto& r : report.representatives) os << "  " << params_text(r.params()) << "\n";
         });
  if (report.truncated) {
    if (g.strict) return kLimit;
  }
  return kSuccess;
}

struct VerifyArgs {
  VerifyOptions options;
  std::string report_path;
  std::string corrupt;
};

int cmd_verify(VerifyArgs a, const Globals& g, Emitter& e, std::ostream& err) {
  PaperConstants constants = PaperConstants::reference();
  if (!a.corrupt.empty()) {
    try {
      constants.corrupt(a.corrupt);
    } catch (const InvalidArgument&) {
      throw UsageError("unknown constant: '" + a.corrupt + "'");
    }
  }
  a.options.workers = workers_of(g);
  const auto report = verify_paper(constants, a.options);
  const Json inputs{{"bound_2pt", a.options.bound_2pt},
                    {"bound_3pt", a.options.bound_3pt},
                    {"depth", a.options.symmetry_depth}};
  if (!a.report_path.empty()) {
    std::ofstream file(a.report_path);
    if (!file) throw UsageError("cannot write report: '" + a.report_path + "'");
    file << make_record("verify-paper", inputs, report.to_json()).dump(2) << "\n";
  }
  e.emit("verify-paper", inputs, report.to_json(), [&](std::ostream& os) {
    for (const auto& c : report.checks) {
      os << (c.passed ? "PASS " : "FAIL ") << c.id;
      if (!c.passed) os << ": " << c.message;
      os << "\n";
    }
    os << (report.all_passed() ? "all checks passed" : "verification failed") << "\n";
  });
  if (!report.all_passed() && g.quiet && !g.json) {
    for (const auto& id : report.failed_ids()) err << "failed: " << id << "\n";
  }
  return report.all_passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive parabolic factorizations in SL(2,Z)", "parafact"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON record");
  app.add_flag("--quiet", g.quiet, "Suppress text output");
  app.add_flag("--strict", g.strict, "Exit 3 when a search is truncated");
  app.add_option("--workers", g.workers, "Worker threads (default: all cores)");

  HyperbolaArgs hyp;
  auto* hyperbola = app.add_subcommand("hyperbola", "Integer points on the hyperbola");
  hyperbola->add_option("--eps", hyp.eps, "+1 or -1")->required();
  hyperbola->add_option("--bound", hyp.bound, "Box bound on |d1|, |d2|")->required();
  hyperbola->add_option("--generate", hyp.generate, "Also list +-Z^n base points, |n| <= N");

  auto* markov = app.add_subcommand("markov", "Markov triples");
  markov->require_subcommand(1);
  std::int64_t brute_max = 0;
  auto* brute = markov->add_subcommand("brute", "All triples with max entry <= N");
  brute->add_option("--max", brute_max)->required();
  int tree_depth = 0;
  std::optional<std::int64_t> tree_max;
  auto* tree = markov->add_subcommand("tree", "Breadth-first Markov tree");
  tree->add_option("--depth", tree_depth)->required();
  tree->add_option("--max", tree_max, "Prune triples with max entry above N");

  FactorizeArgs fac;
  auto* factorize = app.add_subcommand("factorize", "Exhaustive factorization search");
  factorize->add_option("--target", fac.target, "Target matrix a,b,c,d")->required();
  factorize->add_option("--length", fac.length)->required()->check(CLI::IsMember({2, 3}));
  factorize->add_option("--bound", fac.bound, "Box bound on |c_i|, |d_i|")->required();
  factorize->add_option("--eps", fac.eps, "+1, -1 or all");

  std::string hur_tuple, hur_moves;
  auto* hurwitz = app.add_subcommand("hurwitz", "Apply Hurwitz moves");
  hurwitz->add_option("--tuple", hur_tuple, "eps:c:d;eps:c:d;...")->required();
  hurwitz->add_option("--moves", hur_moves, "i or -i (inverse), comma separated")->required();

  std::string orb_tuple;
  std::vector<std::string> orb_conj;
  std::size_t orb_max = 0;
  auto* orbit = app.add_subcommand("orbit", "Orbit under moves and conjugation");
  orbit->add_option("--tuple", orb_tuple)->required();
  orbit->add_option("--conjugator", orb_conj, "Matrix a,b,c,d; repeatable")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  orbit->add_option("--max-nodes", orb_max)->required();

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify-paper", "Run the reproduction checks");
  verify->add_option("--bound-2pt", ver.options.bound_2pt);
  verify->add_option("--bound-3pt", ver.options.bound_3pt);
  verify->add_option("--depth", ver.options.symmetry_depth, "Symmetry check depth");
  verify->add_option("--report", ver.report_path, "Also write the JSON record here");
  verify->add_option("--corrupt-constant", ver.corrupt)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Emitter emitter(g, out);
  try {
    if (*hyperbola) return cmd_hyperbola(hyp, emitter);
    if (*brute) return cmd_markov_brute(brute_max, emitter);
    if (*tree) return cmd_markov_tree(tree_depth, tree_max, emitter);
    if (*factorize) return cmd_factorize(fac, g, emitter);
    if (*hurwitz) return cmd_hurwitz(hur_tuple, hur_moves, emitter);
    if (*orbit) return cmd_orbit(orb_tuple, orb_conj, orb_max, g, emitter);
    if (*verify) return cmd_verify(ver, g, emitter, err);
  } catch (const OverflowError& e) {
    err << "limit: " << e.what() << "\n";
    return kLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace parafact::cli
