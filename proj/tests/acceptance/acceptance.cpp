// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <algorithm>
#include <array>
#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fyperm/codec.hpp"
#include "fyperm/enumerator.hpp"
#include "fyperm/generator.hpp"
#include "fyperm/gf_lab.hpp"
#include "fyperm/statistics.hpp"

using namespace fyperm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
    ok_ = ok_ && ok;
  }
  Outcome outcome(const std::string& summary) const { return {ok_, ok_ ? summary : "first failure: " + first_}; }

 private:
  bool ok_ = true;
  std::string first_;
};

// Reference rows for n = 4: code cells then permutation cells, read column by column.
const std::vector<std::vector<std::string>> kFyRows{
    {"0000", "0100", "0200", "0300", "1230", "3201", "1302", "1203"},
    {"0001", "0101", "0201", "0301", "2130", "2301", "3102", "2103"},
    {"0010", "0110", "0210", "0310", "2310", "2031", "3012", "2013"},
    {"0011", "0111", "0211", "0311", "3210", "0231", "0312", "0213"},
    {"0020", "0120", "0220", "0320", "1320", "3021", "1032", "1023"},
    {"0021", "0121", "0221", "0321", "3120", "0321", "0132", "0123"},
};
const std::vector<std::vector<std::string>> kDualRows{
    {"0000", "0010", "0020", "0100", "0110", "0120", "1230", "2310", "1320", "2130", "3210", "3120"},
    {"0001", "0011", "0021", "0101", "0111", "0121", "3201", "2031", "3021", "2301", "0231", "0321"},
    {"0002", "0012", "0022", "0102", "0112", "0122", "1302", "3012", "1032", "3102", "0312", "0132"},
    {"0003", "0013", "0023", "0103", "0113", "0123", "1203", "2013", "1023", "2103", "0213", "0123"},
};
const std::vector<std::vector<std::string>> kInvRows{
    {"0000", "0010", "0020", "0100", "0110", "0120", "0123", "0213", "2013", "1023", "1203", "2103"},
    {"0001", "0011", "0021", "0101", "0111", "0121", "0132", "0231", "2031", "1032", "1230", "2130"},
    {"0002", "0012", "0022", "0102", "0112", "0122", "0312", "0321", "2301", "1302", "1320", "2310"},
    {"0003", "0013", "0023", "0103", "0113", "0123", "3012", "3021", "3201", "3102", "3120", "3210"},
};

std::vector<std::pair<std::string, std::string>> column_major(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t half = rows.front().size() / 2;
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t col = 0; col < half; ++col)
    for (const auto& row : rows) out.emplace_back(row[col], row[col + half]);
  return out;
}

std::vector<Permutation> brute_all(std::size_t n) {
  std::vector<Symbol> w(n);
  std::iota(w.begin(), w.end(), Symbol{1});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_word(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool brute_is_cycle(const Permutation& p) {
  std::size_t len = 0;
  Symbol s = 1;
  do {
    s = p(s);
    ++len;
  } while (s != 1);
  return len == p.degree();
}

std::vector<Permutation> brute_cycles(std::size_t n) {
  std::vector<Permutation> out;
  for (const auto& p : brute_all(n))
    if (brute_is_cycle(p)) out.push_back(p);
  return out;
}

std::string str(const UPoly& p) { return to_string(p); }

Outcome tables() {
  Failures f;
  std::size_t checked = 0;
  auto run = [&](const std::vector<std::vector<std::string>>& rows, Encoding enc) {
    const CodeSpace space(4, Family::perm, enc);
    const auto entries = column_major(rows);
    LexStream lex(4, Family::perm, enc);
    for (const auto& [code, perm] : entries) {
      if (!lex.next()) {
        f.check(false, "lex stream ended early");
        return;
      }
      Permutation decoded = Permutation::identity(4);
      std::string encoded;
      if (enc == Encoding::fy) {
        decoded = fy_decode(parse_triangular(code, 4, false, true));
        encoded = to_table_layout(fy_encode(parse_compact(perm)));
      } else if (enc == Encoding::dual) {
        decoded = dual_decode(parse_dual(code, 4, false, true));
        encoded = to_table_layout(dual_encode(parse_compact(perm)));
      } else {
        decoded = inv_decode(parse_inversion(code, 4));
        encoded = to_table_layout(inv_encode(parse_compact(perm)));
      }
      f.check(to_compact(decoded) == perm, "decode " + code);
      f.check(encoded == code, "encode " + perm);
      f.check(space.render(lex.word(), true) == code && to_compact(lex.perm()) == perm, "lex position of " + code);
      ++checked;
    }
  };
  run(kFyRows, Encoding::fy);
  run(kDualRows, Encoding::dual);
  run(kInvRows, Encoding::inv);
  f.check(checked == 72, "entry count");
  return f.outcome(std::to_string(checked) + " entries, both directions");
}

Outcome bijection() {
  Failures f;
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto all = brute_all(n);
    std::set<Permutation> seen;
    std::size_t count = 0;
    TriangularCode c = TriangularCode::first(n, false);
    do {
      seen.insert(fy_decode(c));
      ++count;
    } while (c.advance());
    f.check(count == all.size() && seen == std::set<Permutation>(all.begin(), all.end()), "plain n=" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto cycles = brute_cycles(n);
    std::set<Permutation> seen;
    std::size_t count = 0;
    TriangularCode c = TriangularCode::first(n, true);
    do {
      seen.insert(fy_decode(c));
      ++count;
    } while (c.advance());
    f.check(count == cycles.size() && seen == std::set<Permutation>(cycles.begin(), cycles.end()),
            "strict n=" + std::to_string(n));
  }
  return f.outcome("S_1..S_7 and C_2..C_8 hit exactly once");
}

Outcome statistics() {
  Failures f;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (Symbol p = 1; p <= n; ++p)
      for (auto kind : {StatKind::moves, StatKind::distance}) {
        const auto by_chi = exact_distribution(n, p, kind, StatSource::chi);
        const auto by_trace = exact_distribution(n, p, kind, StatSource::trace);
        const auto rec = kind == StatKind::moves ? phi(n, p) : xi(n, p);
        const std::string tag = std::string(kind == StatKind::moves ? "moves" : "distance") + " n=" +
                                std::to_string(n) + " p=" + std::to_string(p);
        f.check(by_chi == by_trace, tag + " chi vs trace");
        f.check(by_chi == rec, tag + " chi vs recurrence");
        ++cases;
      }
  return f.outcome(std::to_string(cases) + " (n,p,kind) cases agree");
}

Outcome closed_forms() {
  Failures f;
  for (std::size_t n = 1; n <= 20; ++n) {
    f.check(xi_nn_closed(n) == xi(n, n), "xi closed n=" + std::to_string(n));
    for (std::size_t p = 1; p <= n; ++p) {
      const auto rec = phi(n, p);
      f.check(phi_closed(n, p) == rec, "phi closed n=" + std::to_string(n) + " p=" + std::to_string(p));
      f.check(rec.poly().derivative().eval(1) == mean_moves(n, p), "mean n=" + std::to_string(n));
    }
  }
  f.check(mean_moves(1, 1) == 1, "mean_moves(1,1)");
  f.check(mean_moves(2, 2) == Rational(3, 2), "mean_moves(2,2)");
  return f.outcome("n <= 20 exact; mean_moves(1,1)=1, mean_moves(2,2)=3/2");
}

Outcome series() {
  Failures f;
  const std::size_t N = 12;
  const auto fm = solve_moves_grand(N);
  const auto fd = solve_distance_grand(N);
  for (std::size_t n = 1; n <= N; ++n) {
    UPoly row;
    for (std::size_t p = 1; p <= n; ++p) {
      const int t = static_cast<int>(p);
      f.check(fm[n].t_coeff(t) == phi(n, p).poly(), "F moves n=" + std::to_string(n) + " p=" + std::to_string(p));
      f.check(fd[n].t_coeff(t) == xi(n, p).poly(), "F dist n=" + std::to_string(n) + " p=" + std::to_string(p));
      row += phi(n, p).poly();
    }
    const auto t1 = moves_grand_t1(N);
    const auto g = moves_diagonal(N);
    f.check(t1.numerator[n] == row * t1.denominator, "F(u,1,x) cleared n=" + std::to_string(n));
    f.check(g.numerator[n] == phi(n, n).poly() * g.denominator, "G cleared n=" + std::to_string(n));
  }
  for (auto kind : {StatKind::moves, StatKind::distance}) {
    const auto report = verify_ode_systems(N, kind);
    for (const auto& c : report.checks) f.check(c.holds, c.name + " " + c.detail);
    f.check(!report.checks.empty(), "ode report empty");
  }
  return f.outcome("order 12: recurrences, closed forms and ODE systems agree");
}

Outcome mahonian() {
  Failures f;
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto r = mahonian_check(n);
    // Independent product and inversion counts.
    UPoly product = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      UPoly block;
      for (std::size_t e = 0; e < i; ++e) block += UPoly::u(static_cast<int>(e));
      product *= block;
    }
    std::vector<std::uint64_t> counts;
    for (const auto& p : brute_all(n)) {
      std::size_t inv = 0;
      for (Symbol a = 1; a <= n; ++a)
        for (Symbol b = a + 1; b <= n; ++b) inv += p(a) > p(b);
      if (inv >= counts.size()) counts.resize(inv + 1, 0);
      ++counts[inv];
    }
    const Pgf expected(product / factorial(static_cast<unsigned>(n)));
    f.check(r.holds(), "report n=" + std::to_string(n));
    f.check(r.rightward == expected && Pgf::from_counts(counts) == expected, "oracle n=" + std::to_string(n));
  }
  return f.outcome("n <= 7 rightward = inversions = product");
}

Outcome fixed_points() {
  Failures f;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& p : brute_all(n)) {
      std::size_t fp = 0;
      for (Symbol i = 1; i <= n; ++i) fp += p(i) == i;
      ++counts[fp];
    }
    const auto from_egf = fixed_egf(n)[n] * factorial(static_cast<unsigned>(n));
    UPoly enumerated;
    for (std::size_t k = 0; k <= n; ++k)
      enumerated += UPoly::monomial(Rational(static_cast<unsigned long>(counts[k])), static_cast<int>(k));
    f.check(from_egf == enumerated, "counting polynomial n=" + std::to_string(n) + ": " + str(from_egf));
    f.check(fixed_point_distribution_enumerated(n, 8) == fixed_point_distribution(n), "library n=" + std::to_string(n));
  }
  for (std::size_t n = 1; n <= 12; ++n) f.check(fixed_point_distribution(n).mean() == 1, "mean n=" + std::to_string(n));
  return f.outcome("EGF = enumeration for n <= 8; mean 1 for n <= 12");
}

struct GrayRun {
  std::vector<Permutation> perms;
  std::vector<DeltaClass> classes;
};

GrayRun gray_run(GrayPermStream s) {
  GrayRun r;
  while (s.next()) {
    r.perms.push_back(s.perm());
    if (s.induced()) r.classes.push_back(s.induced()->cls);
  }
  return r;
}

bool exactly_once(const std::vector<Permutation>& seq, const std::vector<Permutation>& target) {
  return seq.size() == target.size() &&
         std::set<Permutation>(seq.begin(), seq.end()) == std::set<Permutation>(target.begin(), target.end());
}

Outcome gray(std::vector<std::string>& info) {
  Failures f;
  auto is_tr = [](DeltaClass c) { return c == DeltaClass::transposition || c == DeltaClass::adjacent_transposition; };
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto tag = " n=" + std::to_string(n);
    const auto inv = gray_run(gray_perm_stream(n, Encoding::inv));
    f.check(exactly_once(inv.perms, brute_all(n)), "inv coverage" + tag);
    for (auto c : inv.classes) f.check(c == DeltaClass::adjacent_transposition, "inv delta" + tag);
    const auto fy = gray_run(gray_perm_stream(n, Encoding::fy));
    f.check(exactly_once(fy.perms, brute_all(n)), "fy coverage" + tag);
    for (auto c : fy.classes) f.check(is_tr(c) || c == DeltaClass::three_cycle, "fy delta" + tag);
    const auto cyc = gray_run(gray_cycle_stream(n));
    f.check(exactly_once(cyc.perms, brute_cycles(n)), "cycle coverage" + tag);
    for (auto c : cyc.classes) f.check(c == DeltaClass::three_cycle && !is_tr(c), "cycle delta" + tag);
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto w = cycle_gray_wrap(n);
    std::ostringstream line;
    line << "cycle Gray wrap-around n=" << n << ": " << w.items << " items, " << w.digits_changed
         << " digit(s) differ, last->first is " << to_string(w.cls) << (w.closes() ? " (closes)" : " (open)");
    info.push_back(line.str());
  }
  return f.outcome("n <= 7 inv adjacent, fy transposition/3-cycle, cycles 3-cycle only");
}

Outcome selection_sort_prop() {
  Failures f;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& p : brute_all(n)) f.check(selection_sort_check(p), "p=" + to_string(p));
  const auto run = selection_sort(inverse(Permutation::from_word({3, 4, 2, 1})));
  std::vector<std::string> states;
  for (const auto& s : run.states) states.push_back(to_string(s));
  f.check(states == std::vector<std::string>{"4 3 1 2", "2 3 1 4", "2 1 3 4", "1 2 3 4"}, "worked example");
  return f.outcome("n <= 7 exhaustive; 4312 -> 2314 -> 2134 -> 1234");
}

class Recorder final : public RandomSource {
 public:
  explicit Recorder(std::uint64_t seed) : inner_(seed) {}
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) override {
    const auto v = inner_.uniform_int(lo, hi);
    log.push_back({lo, hi, v});
    return v;
  }
  std::vector<std::array<std::uint64_t, 3>> log;

 private:
  SeededSource inner_;
};

Outcome monte_carlo() {
  Failures f;
  const std::uint64_t samples = 1000000;
  std::ostringstream summary;
  for (auto algo : {Algorithm::fisher_yates, Algorithm::sattolo}) {
    const auto r = uniformity_chi_square(6, algo, samples, kDefaultSeed);
    const std::size_t cells = algo == Algorithm::fisher_yates ? 720 : 120;
    const double critical =
        boost::math::quantile(boost::math::chi_squared(static_cast<double>(cells - 1)), 0.9999);
    const char* name = algo == Algorithm::fisher_yates ? "fy" : "sattolo";
    f.check(r.cells == cells, std::string(name) + " cell count");
    f.check(r.statistic < critical, std::string(name) + " statistic " + std::to_string(r.statistic));
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %.1f < %.1f; ", name, r.statistic, critical);
    summary << buf;
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 1 + seed % 12;
    Recorder a(seed), b(seed), c(seed), d(seed);
    const auto fy = fisher_yates(n, a);
    const auto g0 = general_m(n, 0, b);
    const auto sa = sattolo(n, c);
    const auto g1 = general_m(n, 1, d);
    f.check(fy.perm == g0.perm && fy.trace == g0.trace && a.log == b.log, "m=0 seed " + std::to_string(seed));
    f.check(sa.perm == g1.perm && sa.trace == g1.trace && c.log == d.log, "m=1 seed " + std::to_string(seed));
  }
  return f.outcome(summary.str() + "general_m matches at m=0/1");
}

}  // namespace

int main() {
  std::vector<std::string> info;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table fidelity", tables},
      {"bijection", bijection},
      {"statistics cross-validation", statistics},
      {"closed forms", closed_forms},
      {"series engine", series},
      {"mahonian identity", mahonian},
      {"fixed points", fixed_points},
      {"gray codes", [&] { return gray(info); }},
      {"selection sort", selection_sort_prop},
      {"monte carlo smoke test", monte_carlo},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail << " ("
              << timing << ")\n";
  }
  for (const auto& line : info) std::cout << "info: " << line << '\n';
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
