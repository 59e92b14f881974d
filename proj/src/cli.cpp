#include "fyperm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fyperm/codec.hpp"
#include "fyperm/enumerator.hpp"
#include "fyperm/generator.hpp"
#include "fyperm/gf_lab.hpp"
#include "fyperm/kernels.hpp"
#include "fyperm/permutation.hpp"
#include "fyperm/statistics.hpp"
#include "fyperm/verify.hpp"

namespace fyperm::cli {

namespace {

using nlohmann::json;

struct Common {
  bool json = false;
  bool paper_layout = false;
};

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  const auto v = std::stoull(text, &used, 0);
  if (used != text.size()) throw std::invalid_argument("bad seed: " + text);
  return v;
}

std::string render_perm(const Permutation& p, bool paper_layout) {
  return paper_layout ? to_compact(p) : to_string(p);
}

json perm_json(const Permutation& p) { return json(std::vector<Symbol>(p.word().begin(), p.word().end())); }

Permutation read_perm(const std::string& text, bool paper_layout) {
  return paper_layout ? parse_compact(text) : parse_word(text);
}

Encoding encoding_of(const std::string& s) {
  if (s == "fy") return Encoding::fy;
  if (s == "dual") return Encoding::dual;
  return Encoding::inv;
}

json pgf_json(const Pgf& p) {
  json arr = json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.probability(k);
    arr.push_back({c.get_num().get_str(), c.get_den().get_str()});
  }
  return arr;
}

void print_pgf(std::ostream& out, const Pgf& p) {
  for (int k = 0; k <= p.degree(); ++k) out << "P[X=" << k << "] = " << to_string(p.probability(k)) << '\n';
  out << "mean = " << to_string(p.mean()) << '\n';
}

json terms_json(const ULaurent& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({{"u", e}, {"t", 0}, {"c", c.get_str()}});
  return arr;
}

json terms_json(const BiLaurent& p) {
  json arr = json::array();
  for (const auto& [k, c] : p.terms()) arr.push_back({{"u", k.first}, {"t", k.second}, {"c", c.get_str()}});
  return arr;
}

template <class C>
void emit_series(std::ostream& out, const Common& o, const std::string& name, const Series<C>& s) {
  if (o.json) {
    json coeffs = json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) coeffs.push_back(terms_json(s[n]));
    out << json{{"command", "series"}, {"gf", name}, {"order", s.order()}, {"coefficients", coeffs}}.dump() << '\n';
    return;
  }
  for (std::size_t n = 0; n <= s.order(); ++n) out << "x^" << n << ": " << to_string(s[n]) << '\n';
}

// gen ------------------------------------------------------------------------

struct GenArgs {
  std::size_t n = 0;
  std::string algo = "fy";
  std::size_t m = 0;
  std::size_t count = 1;
  std::string seed = "0xC0FFEE";
  bool entropy = false;
  bool trace = false;
};

int do_gen(const GenArgs& a, const Common& o, std::ostream& out) {
  if (a.algo == "sattolo" && a.n < 1) throw std::invalid_argument("sattolo needs n >= 1");
  const std::uint64_t seed = a.entropy ? (static_cast<std::uint64_t>(std::random_device{}()) << 32 | std::random_device{}())
                                       : parse_seed(a.seed);
  SeededSource rng(seed);
  json items = json::array();
  for (std::size_t i = 0; i < a.count; ++i) {
    Generated g = a.algo == "fy"        ? fisher_yates(a.n, rng)
                  : a.algo == "sattolo" ? sattolo(a.n, rng)
                                        : general_m(a.n, a.m, rng);
    if (o.json) {
      json item{{"perm", perm_json(g.perm)}};
      if (a.trace) {
        json steps = json::array();
        for (const auto& s : g.trace.steps) steps.push_back({s.k, s.j});
        item["trace"] = steps;
      }
      items.push_back(item);
      continue;
    }
    out << render_perm(g.perm, o.paper_layout);
    if (a.trace) {
      out << '\t';
      for (std::size_t k = 0; k < g.trace.steps.size(); ++k)
        out << (k ? " " : "") << g.trace.steps[k].k << ':' << g.trace.steps[k].j;
    }
    out << '\n';
  }
  if (o.json)
    out << json{{"command", "gen"}, {"n", a.n}, {"algo", a.algo}, {"seed", seed}, {"items", items}}.dump() << '\n';
  return kExitOk;
}

// encode / decode / rank / unrank ---------------------------------------------

struct CodecArgs {
  std::size_t n = 0;
  std::string encoding = "fy";
  std::string perm;
  std::string code;
  bool strict = false;
  std::string order = "big";
  Rank rank = 0;
};

std::string render_code(const CodeSpace& space, const Word& w, bool paper_layout) {
  return space.render(w, paper_layout);
}

Word read_code(const CodeSpace& space, const std::string& text, bool strict, bool paper_layout) {
  const auto n = space.degree();
  switch (space.encoding()) {
    case Encoding::fy: {
      const auto code = parse_triangular(text, n, strict, paper_layout);
      Word w;
      for (Symbol j : code.digits()) w.push_back(j - 1);
      return w;
    }
    case Encoding::dual: {
      const auto d = parse_dual(text, n, strict, paper_layout).digits();
      Word w;
      for (std::size_t i = 1; i < d.size(); ++i) w.push_back(d[i] - 1);
      return w;
    }
    case Encoding::inv:
      return parse_inversion(text, n).digits();
  }
  throw std::logic_error("unknown encoding");
}

int do_encode(const CodecArgs& a, const Common& o, std::ostream& out) {
  const Permutation p = read_perm(a.perm, o.paper_layout);
  const CodeSpace space(p.degree(), a.strict ? Family::cycle : Family::perm, encoding_of(a.encoding));
  const Word w = space.encode(p);
  if (o.json) {
    out << json{{"command", "encode"}, {"encoding", a.encoding}, {"perm", perm_json(p)},
                {"code", render_code(space, w, o.paper_layout)}}
               .dump()
        << '\n';
  } else {
    out << render_code(space, w, o.paper_layout) << '\n';
  }
  return kExitOk;
}

int do_decode(const CodecArgs& a, const Common& o, std::ostream& out) {
  const CodeSpace space(a.n, a.strict ? Family::cycle : Family::perm, encoding_of(a.encoding));
  const Permutation p = space.decode(read_code(space, a.code, a.strict, o.paper_layout));
  if (o.json) {
    out << json{{"command", "decode"}, {"encoding", a.encoding}, {"code", a.code}, {"perm", perm_json(p)}}.dump()
        << '\n';
  } else {
    out << render_perm(p, o.paper_layout) << '\n';
  }
  return kExitOk;
}

LexOrder lex_order_of(const std::string& s) { return s == "big" ? LexOrder::big_endian : LexOrder::little_endian; }

int do_rank(const CodecArgs& a, const Common& o, std::ostream& out) {
  const auto code = parse_triangular(a.code, a.n, a.strict, o.paper_layout);
  const Rank r = rank(code, lex_order_of(a.order));
  if (o.json) {
    out << json{{"command", "rank"}, {"n", a.n}, {"order", a.order}, {"code", a.code}, {"rank", r}}.dump() << '\n';
  } else {
    out << r << '\n';
  }
  return kExitOk;
}

int do_unrank(const CodecArgs& a, const Common& o, std::ostream& out) {
  const auto code = unrank(a.rank, a.n, lex_order_of(a.order), a.strict);
  const std::string text = o.paper_layout ? to_table_layout(code) : to_string(code);
  const Permutation p = fy_decode(code);
  if (o.json) {
    out << json{{"command", "unrank"}, {"n", a.n}, {"order", a.order}, {"rank", a.rank}, {"code", text},
                {"perm", perm_json(p)}}
               .dump()
        << '\n';
  } else {
    out << text << '\t' << render_perm(p, o.paper_layout) << '\n';
  }
  return kExitOk;
}

// enum -------------------------------------------------------------------------

struct EnumArgs {
  std::size_t n = 0;
  std::string family = "perm";
  std::string order = "lex";
  std::string encoding = "fy";
  bool deltas = false;
};

int do_enum(const EnumArgs& a, const Common& o, std::ostream& out) {
  const Family family = a.family == "cycle" ? Family::cycle : Family::perm;
  const Encoding encoding = encoding_of(a.encoding);
  json items = json::array();
  std::optional<Permutation> prev;
  std::optional<Permutation> first;
  Word first_word;
  auto emit = [&](const CodeSpace& space, const Word& w, const Permutation& p) {
    std::optional<DeltaClass> cls;
    if (prev) cls = classify_delta(delta(*prev, p, Side::right));
    if (!first) {
      first = p;
      first_word = w;
    }
    if (o.json) {
      json item{{"code", space.render(w, o.paper_layout)}, {"perm", perm_json(p)}};
      if (a.deltas) item["delta"] = cls ? json(std::string(to_string(*cls))) : json(nullptr);
      items.push_back(item);
    } else {
      out << space.render(w, o.paper_layout) << '\t' << render_perm(p, o.paper_layout);
      if (a.deltas) out << '\t' << (cls ? std::string(to_string(*cls)) : std::string("start"));
      out << '\n';
    }
    prev = p;
  };
  json doc{{"command", "enum"}, {"n", a.n}, {"family", a.family}, {"order", a.order}, {"encoding", a.encoding}};
  if (a.order == "lex") {
    LexStream s(a.n, family, encoding);
    while (s.next()) emit(s.space(), s.word(), s.perm());
  } else {
    GrayPermStream s(a.n, family, encoding);
    Word last;
    while (s.next()) {
      emit(s.space(), s.word(), s.perm());
      last = s.word();
    }
    std::size_t changed = 0;
    for (std::size_t i = 0; i < last.size(); ++i) changed += last[i] != first_word[i];
    doc["wrap"] = {{"digits_changed", changed},
                   {"delta", std::string(to_string(classify_delta(delta(*prev, *first, Side::right))))}};
  }
  if (o.json) {
    doc["items"] = items;
    out << doc.dump() << '\n';
  }
  return kExitOk;
}

// stats ------------------------------------------------------------------------

struct StatsArgs {
  std::size_t n = 0;
  std::optional<std::size_t> p;
  std::string stat = "moves";
  std::string mode = "exact";
  std::uint64_t samples = 100000;
  std::string seed = "0xC0FFEE";
  std::size_t bound = kExhaustiveBound;
};

Pgf sample_pgf(std::uint64_t samples, std::uint64_t seed, std::size_t n, const std::string& stat) {
  auto draw = [n, stat](RandomSource& rng) -> std::size_t {
    const Generated g = fisher_yates(n, rng);
    if (stat == "total-dist") return static_cast<std::size_t>(rightward_total(g.trace));
    if (stat == "fixed") return fixed_point_count(g.perm);
    return inversion_count(g.perm);
  };
  return Pgf::from_counts(kernels::parallel_sample_histogram(samples, seed, draw));
}

Pgf compute_stats(const StatsArgs& a) {
  const auto n = a.n;
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const std::uint64_t seed = parse_seed(a.seed);
  if (a.stat == "moves" || a.stat == "dist") {
    const std::size_t p = a.p.value_or(n);
    if (p < 1 || p > n) throw std::invalid_argument("need 1 <= p <= n");
    const StatKind kind = a.stat == "moves" ? StatKind::moves : StatKind::distance;
    const auto sym = static_cast<Symbol>(p);
    if (a.mode == "exact") return exact_distribution(n, sym, kind, StatSource::chi, a.bound);
    if (a.mode == "recurrence") return kind == StatKind::moves ? phi(n, p) : xi(n, p);
    if (a.mode == "closed") {
      if (kind == StatKind::moves) return phi_closed(n, p);
      if (p != n) throw std::invalid_argument("the distance closed form covers p = n only");
      return xi_nn_closed(n);
    }
    return monte_carlo_distribution(n, sym, kind, a.samples, seed);
  }
  if (a.p) throw std::invalid_argument("--p applies to moves and dist only");
  if (a.mode == "mc") return sample_pgf(a.samples, seed, n, a.stat);
  if (a.mode == "recurrence") throw std::invalid_argument("no recurrence mode for " + a.stat);
  const bool closed = a.mode == "closed";
  if (a.stat == "fixed") return closed ? fixed_point_distribution(n) : fixed_point_distribution_enumerated(n, a.bound);
  const Pgf product(mahonian_product(n) / factorial(static_cast<unsigned>(n)));
  if (closed) return product;
  return a.stat == "total-dist" ? rightward_total_distribution(n, a.bound) : inversion_distribution(n, a.bound);
}

int do_stats(const StatsArgs& a, const Common& o, std::ostream& out) {
  const Pgf pgf = compute_stats(a);
  if (o.json) {
    json doc{{"command", "stats"}, {"n", a.n},   {"stat", a.stat},
             {"mode", a.mode},     {"pgf", pgf_json(pgf)}, {"mean", to_string(pgf.mean())}};
    if (a.stat == "moves" || a.stat == "dist") doc["p"] = a.p.value_or(a.n);
    if (a.mode == "mc") doc["samples"] = a.samples;
    out << doc.dump() << '\n';
  } else {
    print_pgf(out, pgf);
  }
  return kExitOk;
}

// series -----------------------------------------------------------------------

int do_series(const std::string& gf, std::size_t order, const Common& o, std::ostream& out) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  if (gf == "F-moves") emit_series(out, o, gf, solve_moves_grand(order));
  if (gf == "G-moves") emit_series(out, o, gf, moves_diagonal(order).reduced());
  if (gf == "F-dist") emit_series(out, o, gf, solve_distance_grand(order));
  if (gf == "G-dist") emit_series(out, o, gf, distance_diagonal(order));
  if (gf == "sigma3-moves") emit_series(out, o, gf, sigma3_moves(order));
  if (gf == "sigma3-dist") emit_series(out, o, gf, sigma3_distance(order));
  if (gf == "fixed-egf") emit_series(out, o, gf, fixed_egf(order));
  return kExitOk;
}

// verify -----------------------------------------------------------------------

int do_verify(const std::string& suite, std::optional<std::size_t> n_max, bool verbose, const Common& o,
              std::ostream& out) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& name : suites) {
    const SuiteReport r = run_suite(name, n_max);
    ok = ok && r.ok();
    if (o.json) {
      reports.push_back({{"suite", r.suite},
                         {"passed", r.passed},
                         {"total", r.total},
                         {"ok", r.ok()},
                         {"summary", r.summary},
                         {"lines", r.lines}});
      continue;
    }
    for (const auto& line : r.lines)
      if (verbose || line.rfind("ok", 0) != 0) out << line << '\n';
    out << r.suite << ": " << r.summary << '\n';
  }
  if (o.json) out << json{{"command", "verify"}, {"ok", ok}, {"suites", reports}}.dump() << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fisher-Yates and Sattolo permutation toolkit", "fyperm"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");
  std::string out_file;
  app.add_option("--out", out_file, "Write output to this file");

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Emit one JSON document");
    sub->add_flag("--paper-layout", common.paper_layout, "0-based compact rendering as in the reference tables");
  };
  const std::vector<std::string> encodings{"fy", "dual", "inv"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random permutations");
  gen_cmd->add_option("--n", gen.n, "Degree")->required();
  gen_cmd->add_option("--algo", gen.algo, "Algorithm")->check(CLI::IsMember({"fy", "sattolo", "general"}));
  gen_cmd->add_option("--m", gen.m, "Offset m for --algo general");
  gen_cmd->add_option("--count", gen.count, "Number of permutations");
  gen_cmd->add_option("--seed", gen.seed, "Seed (decimal or 0x hex)");
  gen_cmd->add_flag("--entropy", gen.entropy, "Seed from the system entropy source");
  gen_cmd->add_flag("--trace", gen.trace, "Append the swap trace as k:j pairs");
  add_common(gen_cmd);

  CodecArgs codec;
  auto* enc_cmd = app.add_subcommand("encode", "Encode a permutation");
  enc_cmd->add_option("--perm", codec.perm, "Permutation word")->required();
  enc_cmd->add_option("--n", codec.n, "Degree (checked against the word)");
  enc_cmd->add_option("--encoding", codec.encoding)->check(CLI::IsMember(encodings));
  enc_cmd->add_flag("--strict", codec.strict, "Sattolo code of an n-cycle");
  add_common(enc_cmd);

  auto* dec_cmd = app.add_subcommand("decode", "Decode a code");
  dec_cmd->add_option("--n", codec.n, "Degree")->required();
  dec_cmd->add_option("--code", codec.code, "Code digits")->required();
  dec_cmd->add_option("--encoding", codec.encoding)->check(CLI::IsMember(encodings));
  dec_cmd->add_flag("--strict", codec.strict, "Sattolo code");
  add_common(dec_cmd);

  auto* rank_cmd = app.add_subcommand("rank", "Rank a Fisher-Yates code");
  rank_cmd->add_option("--n", codec.n, "Degree")->required();
  rank_cmd->add_option("--code", codec.code, "Code digits")->required();
  rank_cmd->add_option("--order", codec.order, "Digit significance")->check(CLI::IsMember({"big", "little"}));
  rank_cmd->add_flag("--strict", codec.strict, "Sattolo code");
  add_common(rank_cmd);

  auto* unrank_cmd = app.add_subcommand("unrank", "Unrank to a Fisher-Yates code and its permutation");
  unrank_cmd->add_option("--n", codec.n, "Degree")->required();
  unrank_cmd->add_option("--rank", codec.rank, "Rank")->required();
  unrank_cmd->add_option("--order", codec.order, "Digit significance")->check(CLI::IsMember({"big", "little"}));
  unrank_cmd->add_flag("--strict", codec.strict, "Sattolo code");
  add_common(unrank_cmd);

  EnumArgs en;
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate a code space");
  enum_cmd->add_option("--n", en.n, "Degree")->required();
  enum_cmd->add_option("--family", en.family)->check(CLI::IsMember({"perm", "cycle"}));
  enum_cmd->add_option("--order", en.order)->check(CLI::IsMember({"lex", "gray"}));
  enum_cmd->add_option("--encoding", en.encoding)->check(CLI::IsMember(encodings));
  enum_cmd->add_flag("--deltas", en.deltas, "Append the class of the step from the previous item");
  add_common(enum_cmd);

  StatsArgs st;
  auto* stats_cmd = app.add_subcommand("stats", "Distribution of a statistic");
  stats_cmd->add_option("--n", st.n, "Degree")->required();
  stats_cmd->add_option("--p", st.p, "Symbol for moves and dist (default n)");
  stats_cmd->add_option("--stat", st.stat)->check(CLI::IsMember({"moves", "dist", "total-dist", "fixed", "inversions"}));
  stats_cmd->add_option("--mode", st.mode)->check(CLI::IsMember({"exact", "recurrence", "closed", "mc"}));
  stats_cmd->add_option("--samples", st.samples, "Monte Carlo sample count");
  stats_cmd->add_option("--seed", st.seed, "Monte Carlo seed");
  stats_cmd->add_option("--bound", st.bound, "Exhaustive enumeration limit on n");
  add_common(stats_cmd);

  std::string gf;
  std::size_t order = 8;
  auto* series_cmd = app.add_subcommand("series", "Expand a generating function");
  series_cmd->add_option("--gf", gf)
      ->required()
      ->check(CLI::IsMember({"F-moves", "G-moves", "F-dist", "G-dist", "sigma3-moves", "sigma3-dist", "fixed-egf"}));
  series_cmd->add_option("--order", order, "Truncation order");
  add_common(series_cmd);

  std::string suite = "all";
  std::optional<std::size_t> n_max;
  bool verbose = false;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--n-max", n_max, "Size override for the suite");
  verify_cmd->add_flag("--verbose", verbose, "Print passing checks too");
  add_common(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) {
      err << "error: cannot open " << out_file << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = out_file.empty() ? out : file;
  std::ostringstream buffer;

  try {
    int code = kExitOk;
    if (*gen_cmd) code = do_gen(gen, common, buffer);
    if (*enc_cmd) {
      if (codec.n != 0 && read_perm(codec.perm, common.paper_layout).degree() != codec.n)
        throw std::invalid_argument("--n does not match the permutation degree");
      code = do_encode(codec, common, buffer);
    }
    if (*dec_cmd) code = do_decode(codec, common, buffer);
    if (*rank_cmd) code = do_rank(codec, common, buffer);
    if (*unrank_cmd) code = do_unrank(codec, common, buffer);
    if (*enum_cmd) code = do_enum(en, common, buffer);
    if (*stats_cmd) code = do_stats(st, common, buffer);
    if (*series_cmd) code = do_series(gf, order, common, buffer);
    if (*verify_cmd) code = do_verify(suite, n_max, verbose, common, buffer);
    sink << buffer.str();
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace fyperm::cli
