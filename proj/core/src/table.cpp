#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "sip/chartab/table.hpp"
#include "sip/embedded.hpp"
#include "sip/error.hpp"
#include "sip/numtheory.hpp"

namespace sip {

std::optional<int> TableClass::power(long p) const {
  for (const auto& [q, c] : powers)
    if (q == p) return c;
  return std::nullopt;
}

std::optional<BigInt> TableClass::size_int() const {
  if (!size || size->depends_on_m()) return std::nullopt;
  auto r = size->constant().as_rational();
  if (!r || !r->is_integer()) return std::nullopt;
  return r->numerator();
}

const CharValue& CharacterRow::at(int c) const {
  if (!values[c]) throw InvalidArgument("character " + name + " is undefined on class " + std::to_string(c + 1));
  return *values[c];
}

bool CharacterRow::admits_order(long n) const {
  if (kind == RowKind::Ordinary) return true;
  if (brauer_p == 0) return (n & (n - 1)) == 0;  // odd characteristic, 2-elements only
  return n % brauer_p != 0;
}

int CharacterTable::class_index(const std::string& n) const {
  for (int i = 0; i < num_classes(); ++i)
    if (classes[i].name == n) return i;
  return -1;
}

int CharacterTable::row_index(const std::string& n) const {
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    if (rows[i].name == n) return i;
  return -1;
}

int CharacterTable::identity_class() const {
  for (int i = 0; i < num_classes(); ++i)
    if (classes[i].rep_order == 1) return i;
  throw InvalidState("table " + name + " has no identity class");
}

std::optional<BigInt> CharacterTable::order_int() const {
  if (!order || order->depends_on_m()) return std::nullopt;
  auto r = order->constant().as_rational();
  if (!r || !r->is_integer()) return std::nullopt;
  return r->numerator();
}

std::optional<int> CharacterTable::power_class(int c, long k) const {
  long o = classes[c].rep_order;
  k = nt::mod(k, o);
  if (k == 0) return identity_class();
  int cur = c;
  for (long p : nt::prime_factors(k)) {
    long e = k;
    while (e % p == 0) {
      e /= p;
      auto next = classes[cur].power(p);
      if (!next) return std::nullopt;
      cur = *next;
    }
  }
  return cur;
}

std::optional<int> CharacterTable::inverse_class(int c) const { return power_class(c, classes[c].rep_order - 1); }

void CharacterTable::validate() const {
  auto fail = [&](const std::string& msg) { throw ParseError("table " + name + ": " + msg); };
  if (classes.empty()) fail("no classes");
  std::set<std::string> names;
  int identities = 0;
  for (const auto& c : classes) {
    if (!names.insert(c.name).second) fail("duplicate class name " + c.name);
    if (c.rep_order < 1) fail("class " + c.name + " has non-positive representative order");
    if (c.rep_order == 1) {
      ++identities;
      if (c.size_int() && *c.size_int() != 1) fail("identity class " + c.name + " must have size 1");
    }
    for (const auto& [p, t] : c.powers) {
      if (!nt::is_prime(p)) fail("class " + c.name + " has a power map for non-prime " + std::to_string(p));
      long want = c.rep_order / std::gcd(c.rep_order, p);
      if (classes[t].rep_order != want)
        fail("power map " + std::to_string(p) + " of class " + c.name + " points to " + classes[t].name + " of order " +
             std::to_string(classes[t].rep_order) + ", expected order " + std::to_string(want));
    }
  }
  if (identities != 1) fail("exactly one class must have representative order 1");
  bool sizes_known = true;
  CharValue total(0);
  for (const auto& c : classes) {
    if (!c.size) sizes_known = false;
    else total += *c.size;
  }
  if (sizes_known && order && !(total == *order))
    fail("class sizes sum to " + total.to_string() + " but the group order is " + order->to_string());
  std::set<std::string> rnames;
  for (const auto& r : rows) {
    if (!rnames.insert(r.name).second) fail("duplicate character name " + r.name);
    if (static_cast<int>(r.values.size()) != num_classes()) fail("character " + r.name + " has the wrong number of values");
    for (int c = 0; c < num_classes(); ++c) {
      if (!r.values[c]) continue;
      if (r.kind == RowKind::Brauer && r.brauer_p && classes[c].rep_order % r.brauer_p == 0)
        fail("Brauer character " + r.name + " has a value on the " + std::to_string(r.brauer_p) + "-singular class " + classes[c].name);
      if (r.real_afforded && !(r.values[c]->conj() == *r.values[c]))
        fail("character " + r.name + " is flagged REAL but is not real on class " + classes[c].name);
    }
  }
}

// ---------------------------------------------------------------------------
// .ctab reader and writer

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

CharValue parse_value_at(const std::string& text, int line, int col) {
  try {
    return parse_char_value(text);
  } catch (const ParseError& e) {
    throw ParseError("bad expression '" + text + "'", line, col + e.column() - 1);
  }
}

long parse_long(const Token& t, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size() || t.text.empty()) throw ParseError("expected an integer, got '" + t.text + "'", line, t.col);
  return v;
}

struct PendingPow {
  int cls;
  long p;
  std::string target;
  int line, col;
};

}  // namespace

CharacterTable parse_ctab(const std::string& text) {
  CharacterTable t;
  bool have_group = false;
  std::vector<PendingPow> pending;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0].text;
    auto need = [&](std::size_t i, const std::string& what) -> const Token& {
      if (i >= tok.size()) throw ParseError("expected " + what, lineno, static_cast<int>(line.size()) + 1);
      return tok[i];
    };
    auto expect_kw = [&](std::size_t i, const std::string& k) {
      const Token& x = need(i, k);
      if (x.text != k) throw ParseError("expected " + k + ", got '" + x.text + "'", lineno, x.col);
    };
    if (kw == "GROUP") {
      if (have_group) throw ParseError("second GROUP line", lineno, tok[0].col);
      have_group = true;
      t.name = need(1, "group name").text;
      expect_kw(2, "ORDER");
      const Token& ord = need(3, "group order");
      if (ord.text != "?") t.order = parse_value_at(ord.text, lineno, ord.col);
      for (std::size_t i = 4; i < tok.size(); ++i) {
        if (tok[i].text == "PARTIAL")
          t.partial = true;
        else
          throw ParseError("unexpected '" + tok[i].text + "'", lineno, tok[i].col);
      }
    } else if (kw == "CLASS") {
      if (!have_group) throw ParseError("CLASS before GROUP", lineno, tok[0].col);
      if (!t.rows.empty()) throw ParseError("CLASS after CHAR", lineno, tok[0].col);
      TableClass c;
      c.name = need(1, "class name").text;
      expect_kw(2, "REPORDER");
      c.rep_order = parse_long(need(3, "representative order"), lineno);
      expect_kw(4, "SIZE");
      const Token& sz = need(5, "class size");
      if (sz.text != "?") c.size = parse_value_at(sz.text, lineno, sz.col);
      std::size_t i = 6;
      if (i < tok.size()) {
        expect_kw(i, "POW");
        for (++i; i < tok.size(); ++i) {
          auto eq = tok[i].text.find('=');
          if (eq == std::string::npos || eq == 0 || eq + 1 == tok[i].text.size())
            throw ParseError("expected <p>=<class>, got '" + tok[i].text + "'", lineno, tok[i].col);
          Token pt{tok[i].text.substr(0, eq), tok[i].col};
          pending.push_back({t.num_classes(), parse_long(pt, lineno), tok[i].text.substr(eq + 1), lineno, tok[i].col});
        }
      }
      t.classes.push_back(std::move(c));
    } else if (kw == "CHAR") {
      if (t.classes.empty()) throw ParseError("CHAR before any CLASS line", lineno, tok[0].col);
      CharacterRow r;
      r.name = need(1, "character name").text;
      std::size_t i = 2;
      for (; i < tok.size() && tok[i].text != "VALUES"; ++i) {
        if (tok[i].text == "REAL") {
          r.real_afforded = true;
        } else if (tok[i].text == "BRAUER") {
          r.kind = RowKind::Brauer;
          const Token& p = need(++i, "Brauer characteristic");
          if (p.text == "odd") {
            r.brauer_p = 0;
          } else {
            r.brauer_p = parse_long(p, lineno);
            if (!nt::is_prime(r.brauer_p)) throw ParseError("Brauer characteristic must be prime", lineno, p.col);
          }
        } else {
          throw ParseError("unexpected '" + tok[i].text + "'", lineno, tok[i].col);
        }
      }
      const Token& vk = need(i, "VALUES");
      std::size_t pos = static_cast<std::size_t>(vk.col - 1) + 6;
      std::string rest = line.substr(pos);
      std::size_t start = 0;
      while (true) {
        std::size_t semi = rest.find(';', start);
        std::string field = rest.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        std::size_t a = field.find_first_not_of(" \t");
        std::size_t b = field.find_last_not_of(" \t");
        int col = static_cast<int>(pos + start + (a == std::string::npos ? 0 : a)) + 1;
        if (a == std::string::npos) throw ParseError("empty value", lineno, col);
        std::string v = field.substr(a, b - a + 1);
        if (v == ".")
          r.values.emplace_back(std::nullopt);
        else
          r.values.emplace_back(parse_value_at(v, lineno, col));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      if (static_cast<int>(r.values.size()) != t.num_classes())
        throw ParseError("character " + r.name + " has " + std::to_string(r.values.size()) + " values for " +
                             std::to_string(t.num_classes()) + " classes",
                         lineno, vk.col);
      t.rows.push_back(std::move(r));
    } else {
      throw ParseError("unknown keyword '" + kw + "'", lineno, tok[0].col);
    }
  }
  if (!have_group) throw ParseError("missing GROUP line", lineno == 0 ? 1 : lineno, 1);
  if (t.classes.empty()) throw ParseError("empty class list", lineno, 1);
  for (const auto& pp : pending) {
    int target = t.class_index(pp.target);
    if (target < 0) throw ParseError("power map target '" + pp.target + "' is not a class", pp.line, pp.col);
    t.classes[pp.cls].powers.emplace_back(pp.p, target);
  }
  t.validate();
  return t;
}

std::string write_ctab(const CharacterTable& t) {
  std::ostringstream out;
  out << "GROUP " << t.name << " ORDER " << (t.order ? t.order->to_string() : "?");
  if (t.partial) out << " PARTIAL";
  out << "\n";
  for (const auto& c : t.classes) {
    out << "CLASS " << c.name << " REPORDER " << c.rep_order << " SIZE " << (c.size ? c.size->to_string() : "?");
    if (!c.powers.empty()) {
      out << " POW";
      for (const auto& [p, target] : c.powers) out << " " << p << "=" << t.classes[target].name;
    }
    out << "\n";
  }
  for (const auto& r : t.rows) {
    out << "CHAR " << r.name;
    if (r.real_afforded) out << " REAL";
    if (r.kind == RowKind::Brauer) out << " BRAUER " << (r.brauer_p ? std::to_string(r.brauer_p) : "odd");
    out << " VALUES";
    for (std::size_t i = 0; i < r.values.size(); ++i) out << (i ? " ; " : " ") << (r.values[i] ? r.values[i]->to_string() : ".");
    out << "\n";
  }
  return out.str();
}

CharacterTable load_ctab(const std::string& name_or_path) {
  if (auto text = embedded_table(name_or_path)) return parse_ctab(*text);
  std::ifstream f(name_or_path);
  if (!f) throw InvalidArgument("cannot read table '" + name_or_path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_ctab(ss.str());
}

}  // namespace sip
