#include <gtest/gtest.h>

#include <chrono>
#include <functional>

#include "sip/error.hpp"
#include "sip/help/help.hpp"
#include "sip/numtheory.hpp"

using namespace sip;

namespace {

HelpProblem problem(const std::string& table, long n, MMode mode = MMode::symbolic()) {
  HelpProblem p;
  p.order = n;
  p.table = load_ctab(table);
  p.options.mode = mode;
  return p;
}

// Top-level vectors restricted to the named classes.
std::set<std::vector<long>> tops(const SolutionSet& s, const CharacterTable& t, const std::vector<std::string>& cls) {
  std::set<std::vector<long>> out;
  for (const auto& ch : s.top()) {
    std::vector<long> v;
    for (const auto& c : cls) v.push_back(ch.top()[t.class_index(c)]);
    out.insert(v);
  }
  return out;
}

CharForm constant_form(const CharValue& v) {
  CharForm f;
  f.constant = v;
  return f;
}

}  // namespace

TEST(Forced, Examples) {
  auto t5 = load_ctab("table5.ctab");
  EXPECT_EQ(forced_zero_classes(2, t5), (std::set<std::string>{"1a", "4a", "4b"}));
  auto t4 = load_ctab("table4.ctab");
  EXPECT_EQ(forced_zero_classes(4, t4), (std::set<std::string>{"1a", "2a"}));
  EXPECT_EQ(forced_zero_classes(1, t4), (std::set<std::string>{"2a", "2b", "4a"}));
  EXPECT_EQ(forced_zero_classes(4, t5, {"2a"}), (std::set<std::string>{"1a", "2a"}));
  EXPECT_THROW(forced_zero_classes(4, t5, {"9z"}), InvalidArgument);
}

TEST(Multiplicity, InvolutionInTable1) {
  auto t = load_ctab("table1.ctab");
  const auto& psi = t.rows[t.row_index("psi+")];
  std::map<long, CharForm> pw{{1, constant_form(aggregate(psi, EpsVector::indicator(4, t.class_index("2a"))))},
                              {2, constant_form(psi.at(0))}};
  EXPECT_EQ(lp_multiplicity(pw, 2, 0).constant, OddAffine::m());
  EXPECT_EQ(lp_multiplicity(pw, 2, 1).constant, OddAffine(0, 2));
  std::map<long, CharForm> one{{1, constant_form(psi.at(0))}};
  EXPECT_EQ(lp_multiplicity(one, 1, 0).constant, OddAffine(0, 3));
  EXPECT_THROW(lp_multiplicity(one, 2, 0), InvalidArgument);
}

TEST(Multiplicity, SymbolicFormsForTable5) {
  auto t = load_ctab("table5.ctab");
  const auto& eta = t.rows[t.row_index("eta")];
  std::vector<int> vars{t.class_index("2a"), t.class_index("4a"), t.class_index("4b")};
  std::map<long, EpsVector> lower{{2, EpsVector::indicator(4, t.class_index("2a"))}, {4, EpsVector::indicator(4, 0)}};
  auto mu = row_multiplicities(t, eta, lower, 4, vars);
  ASSERT_EQ(mu.size(), 4u);
  // mu_0 = (4m + 0 + 2 eta(u)) / 4 with eta(u) = -2m eps_4a.
  EXPECT_EQ(mu[0].constant, OddAffine(0, 1));
  EXPECT_EQ(mu[0].coeffs.at(vars[1]), OddAffine(0, -1));
  EXPECT_FALSE(mu[0].coeffs.count(vars[0]));
  EXPECT_EQ(mu[2].coeffs.at(vars[1]), OddAffine(0, 1));
  EXPECT_EQ(mu[1].constant, OddAffine(0, 1));
  EXPECT_TRUE(mu[1].coeffs.empty());
  // A Brauer row in odd characteristic is evaluated only on 2-elements.
  EXPECT_THROW(row_multiplicities(t, eta, {}, 3, {}), InvalidArgument);
}

TEST(Congruences, PaperUsages) {
  auto t4 = load_ctab("table4.ctab");
  auto r = cl_congruences(4, t4);
  ASSERT_FALSE(r.notice);
  std::vector<std::string> text;
  for (const auto& c : r.rules) text.push_back(c.to_string(t4));
  EXPECT_EQ(text, (std::vector<std::string>{"eps_4a = 1 mod 2", "eps_2a = 0 mod 2", "eps_2b = 0 mod 2"}));
  auto t5 = load_ctab("table5.ctab");
  EXPECT_EQ(cl_congruences(4, t5).rules[0].to_string(t5), "eps_4a + eps_4b = 1 mod 2");
  EXPECT_EQ(cl_congruences(2, t5).rules.size(), 1u);
  EXPECT_TRUE(cl_congruences(6, t5).notice.has_value());
  EXPECT_TRUE(cl_congruences(6, t5).rules.empty());
}

TEST(Solve, Table4OrderFour) {
  auto p = problem("table4.ctab", 4);
  auto s = solve_eps(p);
  EXPECT_EQ(tops(s, p.table, {"2a", "2b", "4a"}), (std::set<std::vector<long>>{{0, 0, 1}}));
  for (const auto& ch : s.top()) {
    EXPECT_TRUE(is_trivial_chain(ch));
    EXPECT_EQ(ch.levels.at(2), EpsVector::indicator(4, p.table.class_index("2a")));
  }
  // Order 2: the central involution itself and the non-central class.
  EXPECT_EQ(s.by_order.at(2).size(), 2u);
}

TEST(Solve, Table4WithoutCongruencesKeepsTheSecondCandidate) {
  auto p = problem("table4.ctab", 4);
  p.options.use_cl_congruences = false;
  auto s = solve_eps(p);
  EXPECT_EQ(tops(s, p.table, {"2a", "2b", "4a"}), (std::set<std::vector<long>>{{0, 0, 1}, {0, 1, 0}}));
}

TEST(Solve, Table1And2OrderTwo) {
  for (const char* name : {"table1.ctab", "table2.ctab"}) {
    auto p = problem(name, 2);
    auto s = solve_eps(p);
    EXPECT_EQ(tops(s, p.table, {"2a", "2b"}), (std::set<std::vector<long>>{{1, 0}, {0, 1}})) << name;
  }
}

TEST(Solve, PslOrderFourIsRationallyConjugate) {
  for (const char* name : {"table1.ctab", "table2.ctab"}) {
    auto p = problem(name, 4);
    auto s = solve_eps(p);
    ASSERT_FALSE(s.top().empty()) << name;
    for (const auto& ch : s.top()) EXPECT_TRUE(is_trivial_chain(ch)) << name << " " << ch.top().to_string(p.table);
  }
}

TEST(Solve, Table5OrderFour) {
  auto p = problem("table5.ctab", 4);
  auto s = solve_eps(p);
  EXPECT_EQ(tops(s, p.table, {"2a", "4a", "4b"}), (std::set<std::vector<long>>{{0, 1, 0}, {0, 0, 1}}));
  for (const auto& ch : s.top()) EXPECT_TRUE(is_trivial_chain(ch));
}

TEST(Solve, OrderWithoutClassesHasNoSolutions) {
  auto s = solve_eps(problem("table5.ctab", 8));
  EXPECT_TRUE(s.top().empty());
  auto one = solve_eps(problem("table5.ctab", 1));
  ASSERT_EQ(one.top().size(), 1u);
  EXPECT_EQ(one.top()[0].top(), EpsVector::indicator(4, 0));
}

TEST(Solve, SymbolicMatchesSampled) {
  for (const auto& [name, n] : std::vector<std::pair<std::string, long>>{
           {"table1.ctab", 2}, {"table1.ctab", 4}, {"table2.ctab", 4}, {"table3.ctab", 4}, {"table4.ctab", 4}, {"table5.ctab", 4}}) {
    auto sym = solve_eps(problem(name, n));
    for (const auto& ch : sym.top()) EXPECT_FALSE(ch.conditional);
    for (long m : {1, 3, 5, 7, 9}) {
      auto fixed = solve_eps(problem(name, n, MMode::fixed(m)));
      EXPECT_EQ(fixed.by_order, sym.by_order) << name << " n=" << n << " m=" << m;
    }
  }
}

TEST(Solve, ConditionalSolutionsCarryAWitness) {
  // chi = (3, m): at order 2 the only candidate is delta_2a, and
  // mu_1 = (3 - m)/2 is non-negative only for m <= 3.
  auto t = parse_ctab(
      "GROUP g ORDER ? PARTIAL\n"
      "CLASS 1a REPORDER 1 SIZE 1 POW 2=1a\n"
      "CLASS 2a REPORDER 2 SIZE ? POW 2=1a\n"
      "CHAR x VALUES 3 ; m\n");
  HelpProblem p{2, t, {}};
  auto s = solve_eps(p);
  ASSERT_EQ(s.top().size(), 1u);
  EXPECT_TRUE(s.top()[0].conditional);
  ASSERT_TRUE(s.top()[0].witness_m);
  EXPECT_EQ(*s.top()[0].witness_m, 1);
  p.options.mode = MMode::fixed(5);
  EXPECT_TRUE(solve_eps(p).top().empty());
  p.options.mode = MMode::fixed(3);
  EXPECT_EQ(solve_eps(p).top().size(), 1u);
}

TEST(Solve, Errors) {
  auto p = problem("table5.ctab", 4);
  p.options.use_lp_multiplicities = false;
  EXPECT_THROW(solve_eps(p), Unbounded);
  auto q = problem("table5.ctab", 4);
  q.options.rows = {"nope"};
  EXPECT_THROW(solve_eps(q), InvalidArgument);
  auto t = parse_ctab(
      "GROUP g ORDER 2\n"
      "CLASS 1a REPORDER 1 SIZE 1 POW\n"
      "CLASS 2a REPORDER 2 SIZE 1 POW\n"
      "CHAR a VALUES 1 ; 1\n"
      "CHAR b VALUES 1 ; -1\n");
  EXPECT_THROW(solve_eps(HelpProblem{2, t, {}}), InvalidState);
  EXPECT_THROW(solve_eps(HelpProblem{0, load_ctab("table5.ctab"), {}}), InvalidArgument);
}

TEST(Chain, Triviality) {
  EpsChain c;
  c.order = 4;
  c.levels = {{1, EpsVector{{0, 0, 1, 0}}}, {2, EpsVector{{0, 1, 0, 0}}}, {4, EpsVector{{1, 0, 0, 0}}}};
  EXPECT_TRUE(is_trivial_chain(c));
  c.levels[1] = EpsVector{{0, -1, 1, 1}};
  EXPECT_FALSE(is_trivial_chain(c));
}

// Exhaustive grid oracle on small Dixon tables.
TEST(Solve, AgreesWithGridSearch) {
  for (const auto& spec : {GroupSpec::symmetric(3), GroupSpec::dihedral(8), GroupSpec::quaternion(8), GroupSpec::alternating(4),
                           GroupSpec::symmetric(4), GroupSpec::dihedral(10), GroupSpec::dihedral(12)}) {
    auto G = group_build(spec);
    auto t = dixon_table(G);
    for (long n : {2L, 3L, 4L, 5L, 6L}) {
      if (G.exponent() % n != 0) continue;
      HelpProblem p{n, t, {}};
      p.options.use_cl_congruences = false;
      auto s = solve_eps(p);
      auto forced = forced_zero_classes(n, t);
      std::vector<int> vars;
      for (int c = 0; c < t.num_classes(); ++c)
        if (!forced.count(t.classes[c].name)) vars.push_back(c);
      if (vars.size() > 6) continue;
      const long B = vars.size() <= 3 ? 10 : 4;
      // Oracle per lower chain appearing in the solver's lower levels.
      std::vector<std::map<long, EpsVector>> lowers;
      std::function<void(std::size_t, std::map<long, EpsVector>&)> rec;
      auto primes = nt::prime_factors(n);
      rec = [&](std::size_t i, std::map<long, EpsVector>& acc) {
        if (i == primes.size()) {
          lowers.push_back(acc);
          return;
        }
        for (const auto& low : s.by_order.at(n / primes[i])) {
          auto save = acc;
          bool ok = true;
          for (const auto& [d, v] : low.levels) {
            auto it = acc.find(d * primes[i]);
            if (it != acc.end() && !(it->second == v)) ok = false;
            acc[d * primes[i]] = v;
          }
          if (ok) rec(i + 1, acc);
          acc = save;
        }
      };
      std::map<long, EpsVector> acc;
      rec(0, acc);
      std::set<std::pair<std::map<long, EpsVector>, EpsVector>> oracle, got;
      for (const auto& ch : s.top()) {
        if (!vars.empty() && std::any_of(vars.begin(), vars.end(), [&](int c) { return std::labs(ch.top()[c]) > B; })) continue;
        auto lower = ch.levels;
        lower.erase(1);
        if (!ch.top().is_indicator() || t.classes[*ch.top().indicator_class()].size_int() != 1) got.insert({lower, ch.top()});
      }
      for (const auto& lower : lowers) {
        std::vector<long> x(vars.size(), -B);
        while (true) {
          EpsVector e;
          e.eps.assign(t.num_classes(), 0);
          long sum = 0;
          for (std::size_t i = 0; i < vars.size(); ++i) {
            e.eps[vars[i]] = x[i];
            sum += x[i];
          }
          if (sum == 1) {
            bool ok = true;
            for (const auto& row : t.rows) {
              auto mus = row_multiplicities(t, row, lower, n, vars);
              for (const auto& mu : mus) {
                Rational v = mu.constant.constant();
                for (const auto& [c, co] : mu.coeffs) v += co.constant() * Rational(e[c]);
                Rational deg = row.at(0).eval(1).as_rational().value();
                if (!v.is_integer() || v.sign() < 0 || v > deg) ok = false;
              }
              if (!ok) break;
            }
            if (ok) oracle.insert({lower, e});
          }
          std::size_t i = 0;
          while (i < x.size() && x[i] == B) x[i++] = -B;
          if (i == x.size()) break;
          ++x[i];
        }
      }
      EXPECT_EQ(got, oracle) << spec.to_string() << " n=" << n;
    }
  }
}

TEST(Soundness, GenuineElementsSurviveOnTheCatalogue) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& spec : small_group_catalogue(100)) {
    auto G = group_build(spec);
    auto t = dixon_table(G);
    std::map<long, std::vector<int>> by_order;
    for (int c = 0; c < t.num_classes(); ++c) by_order[t.classes[c].rep_order].push_back(c);
    for (const auto& [n, cls] : by_order) {
      auto s = solve_eps(HelpProblem{n, t, {}});
      for (int c : cls) EXPECT_TRUE(s.contains(genuine_chain(t, c))) << spec.to_string() << " class " << t.classes[c].name;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  RecordProperty("seconds", std::to_string(secs));
}
