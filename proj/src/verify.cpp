#include "fyperm/verify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "fyperm/codec.hpp"
#include "fyperm/enumerator.hpp"
#include "fyperm/gf_lab.hpp"
#include "fyperm/kernels.hpp"
#include "fyperm/statistics.hpp"

namespace fyperm {

namespace {

// Rows as printed: code columns first, then permutation columns. Entries
// are read column by column.
constexpr std::array<std::array<const char*, 8>, 6> kFisherYatesRows{{
    {"0000", "0100", "0200", "0300", "1230", "3201", "1302", "1203"},
    {"0001", "0101", "0201", "0301", "2130", "2301", "3102", "2103"},
    {"0010", "0110", "0210", "0310", "2310", "2031", "3012", "2013"},
    {"0011", "0111", "0211", "0311", "3210", "0231", "0312", "0213"},
    {"0020", "0120", "0220", "0320", "1320", "3021", "1032", "1023"},
    {"0021", "0121", "0221", "0321", "3120", "0321", "0132", "0123"},
}};

constexpr std::array<std::array<const char*, 12>, 4> kDualRows{{
    {"0000", "0010", "0020", "0100", "0110", "0120", "1230", "2310", "1320", "2130", "3210", "3120"},
    {"0001", "0011", "0021", "0101", "0111", "0121", "3201", "2031", "3021", "2301", "0231", "0321"},
    {"0002", "0012", "0022", "0102", "0112", "0122", "1302", "3012", "1032", "3102", "0312", "0132"},
    {"0003", "0013", "0023", "0103", "0113", "0123", "1203", "2013", "1023", "2103", "0213", "0123"},
}};

constexpr std::array<std::array<const char*, 12>, 4> kInversionRows{{
    {"0000", "0010", "0020", "0100", "0110", "0120", "0123", "0213", "2013", "1023", "1203", "2103"},
    {"0001", "0011", "0021", "0101", "0111", "0121", "0132", "0231", "2031", "1032", "1230", "2130"},
    {"0002", "0012", "0022", "0102", "0112", "0122", "0312", "0321", "2301", "1302", "1320", "2310"},
    {"0003", "0013", "0023", "0103", "0113", "0123", "3012", "3021", "3201", "3102", "3120", "3210"},
}};

template <std::size_t R, std::size_t C>
std::vector<TableEntry> read_columns(const std::array<std::array<const char*, C>, R>& rows) {
  std::vector<TableEntry> out;
  constexpr std::size_t half = C / 2;
  for (std::size_t c = 0; c < half; ++c)
    for (std::size_t r = 0; r < R; ++r) out.push_back({rows[r][c], rows[r][c + half]});
  return out;
}

class Tally {
 public:
  explicit Tally(std::string suite) { report_.suite = std::move(suite); }
  void check(bool ok, const std::string& what) {
    ++report_.total;
    report_.passed += ok;
    report_.lines.push_back((ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { report_.lines.push_back("info " + what); }
  SuiteReport finish(const std::string& unit) {
    report_.summary = std::to_string(report_.passed) + "/" + std::to_string(report_.total) + " " + unit + " OK";
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

std::string n_label(std::size_t n) { return "n=" + std::to_string(n); }

SuiteReport tables_suite() {
  Tally t("tables");
  const std::array<const char*, 3> names{"fisher-yates", "dual", "inversion"};
  const std::array<Encoding, 3> encodings{Encoding::fy, Encoding::dual, Encoding::inv};
  for (int which = 0; which < 3; ++which) {
    const auto& table = reference_table(which);
    const CodeSpace space(4, Family::perm, encodings[which]);
    LexStream lex(4, Family::perm, encodings[which]);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& e = table[i];
      bool ok = lex.next();
      const Permutation expected = parse_compact(e.perm);
      Permutation decoded = Permutation::identity(4);
      std::string encoded;
      if (which == 0) {
        const auto code = parse_triangular(e.code, 4, false, true);
        decoded = fy_decode(code);
        encoded = to_table_layout(fy_encode(expected));
      } else if (which == 1) {
        const auto code = parse_dual(e.code, 4, false, true);
        decoded = dual_decode(code);
        encoded = to_table_layout(dual_encode(expected));
      } else {
        const auto code = parse_inversion(e.code, 4);
        decoded = inv_decode(code);
        encoded = to_table_layout(inv_encode(expected));
      }
      ok = ok && decoded == expected && encoded == e.code && lex.perm() == expected &&
           space.render(lex.word(), true) == e.code;
      t.check(ok, std::string(names[which]) + " #" + std::to_string(i + 1) + " " + e.code + " <-> " + e.perm);
    }
  }
  return t.finish("entries");
}

SuiteReport bijection_suite(std::size_t n_max) {
  Tally t("bijection");
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto h = kernels::parallel_code_histogram(n, false, [](const TriangularCode& c, const Permutation& p) {
      return static_cast<std::size_t>(inversion_rank(p)) * 2 + (fy_encode(p) == c ? 0 : 1);
    });
    const auto total = static_cast<std::size_t>(code_space_size(n, false));
    bool ok = h.size() <= 2 * total;
    for (std::size_t i = 0; ok && i < 2 * total; ++i) ok = (i < h.size() ? h[i] : 0) == (i % 2 == 0 ? 1u : 0u);
    t.check(ok, n_label(n) + ": " + std::to_string(total) + " plain codes hit S_n once each, encode inverts decode");
  }
  for (std::size_t n = 2; n <= n_max + 1; ++n) {
    const auto h = kernels::parallel_code_histogram(n, true, [](const TriangularCode& c, const Permutation& p) {
      const bool good = is_full_cycle(p) && fy_encode(p, true) == c;
      return static_cast<std::size_t>(inversion_rank(p)) * 2 + (good ? 0 : 1);
    });
    const auto cycles = static_cast<std::size_t>(code_space_size(n, true));
    std::size_t hits = 0;
    bool ok = true;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (i % 2 == 1 && h[i] != 0) ok = false;
      if (i % 2 == 0 && h[i] > 1) ok = false;
      if (i % 2 == 0) hits += h[i];
    }
    t.check(ok && hits == cycles,
            n_label(n) + ": " + std::to_string(cycles) + " strict codes hit the n-cycles once each");
  }
  return t.finish("checks");
}

template <class Stream, class Pred>
bool walk_gray(Stream s, std::size_t expected, Pred step_ok, std::size_t& visited) {
  std::vector<bool> seen;
  visited = 0;
  bool ok = true;
  while (s.next()) {
    const auto r = static_cast<std::size_t>(inversion_rank(s.perm()));
    if (r >= seen.size()) seen.resize(r + 1, false);
    if (seen[r]) ok = false;
    seen[r] = true;
    ++visited;
    if (s.induced() && !step_ok(s)) ok = false;
  }
  return ok && visited == expected;
}

SuiteReport gray_suite(std::size_t n_max) {
  Tally t("gray");
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto all = static_cast<std::size_t>(code_space_size(n, false));
    const auto cycles = static_cast<std::size_t>(code_space_size(n, true));
    std::size_t visited = 0;
    bool ok = walk_gray(gray_perm_stream(n, Encoding::inv), all,
                        [](const GrayPermStream& s) { return s.induced()->cls == DeltaClass::adjacent_transposition; },
                        visited);
    t.check(ok, n_label(n) + " inv: " + std::to_string(visited) + " permutations, adjacent transpositions only");

    ok = walk_gray(
        gray_perm_stream(n, Encoding::fy), all,
        [n](const GrayPermStream& s) {
          const auto& st = *s.induced();
          const std::size_t k = n - st.step.position;
          const DeltaClass c = st.cls == DeltaClass::adjacent_transposition ? DeltaClass::transposition : st.cls;
          return (c == DeltaClass::transposition || c == DeltaClass::three_cycle) &&
                 c == predicted_fy_delta(k, st.step.old_digit + 1, st.step.new_digit + 1);
        },
        visited);
    t.check(ok, n_label(n) + " fy: " + std::to_string(visited) +
                    " permutations, transpositions and 3-cycles as predicted per step");

    ok = walk_gray(
        gray_cycle_stream(n), cycles,
        [](const GrayPermStream& s) { return s.induced()->cls == DeltaClass::three_cycle && is_full_cycle(s.perm()); },
        visited);
    t.check(ok, n_label(n) + " cycles: " + std::to_string(visited) + " n-cycles, 3-cycles only");

    const WrapReport w = cycle_gray_wrap(n);
    t.note(n_label(n) + " cycle wrap-around: " + std::to_string(w.digits_changed) + " digit(s) differ, quotient " +
           std::string(to_string(w.cls)) + (w.closes() ? ", closes" : ", open"));
  }
  return t.finish("checks");
}

SuiteReport stats_suite(std::size_t n_max) {
  Tally t("stats");
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (Symbol p = 1; p <= n; ++p) {
      for (StatKind kind : {StatKind::moves, StatKind::distance}) {
        const Pgf a = exact_distribution(n, p, kind, StatSource::chi, n_max);
        const Pgf b = exact_distribution(n, p, kind, StatSource::trace, n_max);
        const Pgf c = kind == StatKind::moves ? phi(n, p) : xi(n, p);
        t.check(a == b && b == c, n_label(n) + " p=" + std::to_string(p) +
                                      (kind == StatKind::moves ? " moves" : " distance") +
                                      ": chi = trace = recurrence");
      }
    }
  }
  constexpr std::size_t kClosedFormMax = 20;
  const auto moves = pgf_table(kClosedFormMax, StatKind::moves);
  const auto dist = pgf_table(kClosedFormMax, StatKind::distance);
  for (std::size_t n = 1; n <= kClosedFormMax; ++n) {
    bool closed = xi_nn_closed(n).poly() == dist[n][n];
    bool means = true;
    Rational total = 0;
    for (std::size_t p = 1; p <= n; ++p) {
      closed = closed && phi_closed(n, p).poly() == moves[n][p];
      means = means && Pgf(moves[n][p]).mean() == mean_moves(n, p);
      total += mean_moves(n, p);
    }
    means = means && total == Rational(static_cast<long>(2 * n)) - harmonic(static_cast<unsigned>(n));
    t.check(closed, n_label(n) + ": closed forms equal the recurrences");
    t.check(means, n_label(n) + ": mean formula equals phi'(1), sum is 2n - H_n");
  }
  return t.finish("checks");
}

SuiteReport gf_suite(std::size_t order) {
  Tally t("gf");
  for (StatKind kind : {StatKind::moves, StatKind::distance}) {
    const OdeReport r = verify_ode_systems(order, kind);
    const std::string label = kind == StatKind::moves ? "moves" : "distance";
    for (const auto& c : r.checks)
      t.check(c.holds, label + " order " + std::to_string(order) + ": " + c.name + (c.holds ? "" : " [" + c.detail + "]"));
  }
  constexpr std::size_t kFixedEnumMax = 8;
  constexpr std::size_t kFixedMeanMax = 12;
  const auto egf = fixed_egf(std::max(kFixedMeanMax, order));
  for (std::size_t n = 1; n <= std::min(kFixedEnumMax, order); ++n)
    t.check(fixed_point_distribution(n) == fixed_point_distribution_enumerated(n, kFixedEnumMax),
            n_label(n) + ": fixed points from the EGF equal enumeration");
  for (std::size_t n = 1; n <= kFixedMeanMax; ++n)
    t.check(Pgf(egf[n]).mean() == 1, n_label(n) + ": expected number of fixed points is 1");
  return t.finish("identities");
}

SuiteReport sort_suite(std::size_t n_max) {
  Tally t("sort");
  const auto run = selection_sort(inverse(parse_word("3 4 2 1")));
  std::vector<std::string> states;
  for (const auto& s : run.states) states.push_back(to_compact(s));
  const std::vector<std::string> expected{"3201", "1203", "1023", "0123"};
  t.check(states == expected && selection_sort_check(parse_word("3 4 2 1")),
          "worked example: 4312 -> 2314 -> 2134 -> 1234");
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto h = kernels::parallel_code_histogram(n, false, [](const TriangularCode&, const Permutation& p) {
      return static_cast<std::size_t>(selection_sort_check(p) ? 0 : 1);
    });
    t.check(h.size() == 1, n_label(n) + ": selection sort applies the reversed triangular factors for all of S_n");
  }
  return t.finish("checks");
}

SuiteReport mahonian_suite(std::size_t n_max) {
  Tally t("mahonian");
  for (std::size_t n = 1; n <= n_max; ++n)
    t.check(mahonian_check(n, n_max).holds(), n_label(n) + ": rightward total = inversions = product formula");
  return t.finish("checks");
}

}  // namespace

const std::vector<TableEntry>& reference_table(int which) {
  static const std::array<std::vector<TableEntry>, 3> tables{read_columns(kFisherYatesRows), read_columns(kDualRows),
                                                              read_columns(kInversionRows)};
  return tables.at(static_cast<std::size_t>(which));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tables", "bijection", "gray", "stats", "gf", "sort", "mahonian"};
  return names;
}

SuiteReport run_suite(std::string_view name, std::optional<std::size_t> n_max) {
  if (name == "tables") return tables_suite();
  if (name == "bijection") return bijection_suite(n_max.value_or(kExhaustiveBound));
  if (name == "gray") return gray_suite(n_max.value_or(kExhaustiveBound));
  if (name == "stats") return stats_suite(n_max.value_or(6));
  if (name == "gf") return gf_suite(n_max.value_or(12));
  if (name == "sort") return sort_suite(n_max.value_or(kExhaustiveBound));
  if (name == "mahonian") return mahonian_suite(n_max.value_or(kExhaustiveBound));
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace fyperm
