#include "freediv_cli/session.hpp"

#include <cctype>
#include <set>

#include "freediv/error.hpp"
#include "freediv/parse.hpp"

namespace freediv::cli {

std::string check_name(CheckKind k) {
  switch (k) {
    case CheckKind::Derlog: return "derlog";
    case CheckKind::Free: return "free";
    case CheckKind::Pullback: return "pullback";
    case CheckKind::EulerLift: return "euler-lift";
    case CheckKind::Ffstar: return "ffstar";
    case CheckKind::Castling: return "castling";
    case CheckKind::Liftable: return "liftable";
    case CheckKind::T1: return "t1";
    case CheckKind::Invariants: return "invariants";
    case CheckKind::Stabilizer: return "stabilizer";
  }
  return "?";
}

namespace {

struct Pos {
  std::size_t at = 0;
  int line = 1;
  int column = 1;
};

struct Span {
  std::string text;
  Pos pos;
};

class SessionParser {
 public:
  SessionParser(const std::string& text, const SessionOptions& options) : s_(text) { out_.options = options; }

  Session parse() {
    while (true) {
      skip();
      if (cur_.at >= s_.size()) break;
      statement();
    }
    return std::move(out_);
  }

 private:
  // ---- lexing
  [[noreturn]] void fail(const std::string& msg, const Pos& p) const { throw ParseError(msg, p.line, p.column); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, cur_); }

  char peek() const { return cur_.at < s_.size() ? s_[cur_.at] : '\0'; }
  void advance() {
    if (s_[cur_.at] == '\n') {
      ++cur_.line;
      cur_.column = 1;
    } else {
      ++cur_.column;
    }
    ++cur_.at;
  }
  void skip() {
    while (cur_.at < s_.size()) {
      char c = s_[cur_.at];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' || (c == '/' && cur_.at + 1 < s_.size() && s_[cur_.at + 1] == '/')) {
        while (cur_.at < s_.size() && s_[cur_.at] != '\n') advance();
      } else {
        break;
      }
    }
  }
  bool eat(char c) {
    skip();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  void expectArrow() {
    skip();
    if (cur_.at + 1 < s_.size() && s_[cur_.at] == '-' && s_[cur_.at + 1] == '>') {
      advance();
      advance();
      return;
    }
    fail("expected '->'");
  }
  std::string ident(bool allowDash = false) {
    skip();
    Pos p = cur_;
    char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected an identifier");
    std::string r;
    while (true) {
      c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || (allowDash && c == '-')) {
        r += c;
        advance();
      } else {
        break;
      }
    }
    (void)p;
    return r;
  }
  bool atIdent() {
    skip();
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool atInteger() {
    skip();
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
  }
  int integer() {
    skip();
    Pos p = cur_;
    std::string r;
    if (peek() == '-') {
      r += '-';
      advance();
    }
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      r += peek();
      advance();
    }
    if (r.empty() || r == "-") fail("expected an integer", p);
    if (r.size() > 9) fail("integer out of range", p);
    return std::stoi(r);
  }
  std::vector<int> intList() {
    expect('(');
    std::vector<int> v;
    if (eat(')')) return v;
    do v.push_back(integer());
    while (eat(','));
    expect(')');
    return v;
  }
  std::vector<std::string> identList(char open, char close) {
    expect(open);
    std::vector<std::string> v;
    if (eat(close)) return v;
    do v.push_back(ident());
    while (eat(','));
    expect(close);
    return v;
  }
  // Raw text up to a ',' ')' or ';' at parenthesis depth zero.
  Span expr() {
    skip();
    Span sp{"", cur_};
    int depth = 0;
    while (cur_.at < s_.size()) {
      char c = peek();
      if (depth == 0 && (c == ',' || c == ')' || c == ';')) break;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      sp.text += c;
      advance();
    }
    if (sp.text.find_first_not_of(" \t\r\n") == std::string::npos) fail("expected an expression", sp.pos);
    return sp;
  }

  // ---- names
  void declare(const std::string& name, const Pos& p) {
    if (!names_.insert(name).second) fail("duplicate name '" + name + "'", p);
    out_.names.push_back(name);
  }
  template <class M>
  const typename M::mapped_type& lookup(const M& m, const std::string& name, const Pos& p, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) fail(std::string("unresolved ") + what + " '" + name + "'", p);
    return it->second;
  }
  Poly polyIn(const Span& sp, const RingPtr& R) {
    PolyLookup lk = [&](const std::string& n) -> std::optional<Poly> {
      auto it = out_.polys.find(n);
      if (it == out_.polys.end() || !same_ring(it->second.ring(), R)) return std::nullopt;
      return it->second;
    };
    return parse_poly(sp.text, R, lk, sp.pos.line, sp.pos.column);
  }
  std::pair<std::string, Pos> name() {
    skip();
    Pos p = cur_;
    return {ident(), p};
  }

  // ---- statements
  void statement() {
    Pos start = cur_;
    std::string kw = ident();
    if (kw == "ring") ringDecl();
    else if (kw == "map") mapDecl();
    else if (kw == "poly") polyDecl();
    else if (kw == "rep") repDecl();
    else if (kw == "check") checkDecl(start);
    else fail("unknown statement '" + kw + "'", start);
    expect(';');
  }

  void ringDecl() {
    auto [nm, p] = name();
    expect('=');
    skip();
    Pos vp = cur_;
    auto vars = identList('[', ']');
    if (vars.empty()) fail("a ring needs at least one variable", vp);
    if (int(vars.size()) > kMaxVars) fail("too many variables (limit " + std::to_string(kMaxVars) + ")", vp);
    std::set<std::string> seen;
    for (const auto& v : vars)
      if (!seen.insert(v).second) fail("duplicate variable '" + v + "'", vp);
    std::vector<int> weights;
    OrderKind order = out_.options.order;
    while (atIdent()) {
      skip();
      Pos kp = cur_;
      std::string k = ident();
      if (k == "weights") {
        weights = intList();
        if (weights.size() != vars.size()) fail("weights length differs from the number of variables", kp);
        for (int w : weights)
          if (w < 0) fail("weights must be nonnegative", kp);
      } else if (k == "order") {
        expect('(');
        std::string o = ident();
        if (o == "grevlex") order = OrderKind::GRevLex;
        else if (o == "lex") order = OrderKind::Lex;
        else if (o == "weighted") order = OrderKind::Weighted;
        else fail("unknown order '" + o + "'", kp);
        expect(')');
      } else {
        fail("unexpected '" + k + "' in ring declaration", kp);
      }
    }
    declare(nm, p);
    out_.rings[nm] = PolyRing::make(vars, weights, OrderSpec{order, {}});
  }

  void mapDecl() {
    auto [nm, p] = name();
    if (eat('=')) {
      quotientDecl(nm, p);
      return;
    }
    expect(':');
    auto [src, sp] = name();
    const RingPtr& X = lookup(out_.rings, src, sp, "ring");
    expectArrow();
    auto [tgt, tp] = name();
    const RingPtr& S = lookup(out_.rings, tgt, tp, "ring");
    expect('=');
    expect('(');
    skip();
    Pos lp = cur_;
    std::vector<Poly> comps;
    do comps.push_back(polyIn(expr(), X));
    while (eat(','));
    expect(')');
    if (int(comps.size()) != S->arity())
      fail("map has " + std::to_string(comps.size()) + " components but " + tgt + " has " +
               std::to_string(S->arity()) + " variables",
           lp);
    declare(nm, p);
    out_.maps.emplace(nm, PolyMap(X, S, comps));
  }

  void quotientDecl(const std::string& nm, const Pos& p) {
    skip();
    Pos kp = cur_;
    std::string kind = ident();
    QuotientMap q;
    try {
      if (kind == "quotient") {
        expect('(');
        auto [rn, rp] = name();
        const LinearRep& rep = lookup(out_.reps, rn, rp, "rep");
        std::vector<Poly> inv;
        while (eat(',')) inv.push_back(polyIn(expr(), rep.ring));
        expect(')');
        q = explicit_quotient_map(rep, inv);
      } else {
        std::vector<int> args = intList();
        static const std::map<std::string, QuotientKind> kinds = {
            {"castling_minors", QuotientKind::CastlingMinors}, {"sym_matrix", QuotientKind::SymMatrix},
            {"skew_form", QuotientKind::SkewForm},             {"charpoly_coeffs", QuotientKind::CharpolyCoeffs},
            {"sub_pfaffians", QuotientKind::SubPfaffians}};
        auto it = kinds.find(kind);
        if (it == kinds.end()) fail("unknown quotient map kind '" + kind + "'", kp);
        q = build_quotient_map(it->second, args);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what(), kp);
    }
    declare(nm, p);
    declare(nm + "_X", p);
    declare(nm + "_S", p);
    declare(nm + "_rep", p);
    out_.rings[nm + "_X"] = q.map.source;
    out_.rings[nm + "_S"] = q.map.target;
    out_.reps[nm + "_rep"] = q.rep;
    out_.maps.emplace(nm, q.map);
  }

  void polyDecl() {
    auto [nm, p] = name();
    skip();
    Pos op = cur_;
    if (ident() != "on") fail("expected 'on'", op);
    auto [rn, rp] = name();
    const RingPtr& R = lookup(out_.rings, rn, rp, "ring");
    expect('=');
    Poly value = polyIn(expr(), R);
    declare(nm, p);
    out_.polys.emplace(nm, value);
  }

  void repDecl() {
    auto [nm, p] = name();
    expect('=');
    skip();
    Pos kp = cur_;
    std::string kind = ident();
    LinearRep rep;
    try {
      if (kind == "sym_power" || kind == "tensor") {
        expect('(');
        auto [a, ap] = name();
        const LinearRep& ra = lookup(out_.reps, a, ap, "rep");
        expect(',');
        if (kind == "sym_power") {
          rep = sym_power(ra, integer());
        } else {
          auto [b, bp] = name();
          rep = tensor(ra, lookup(out_.reps, b, bp, "rep"));
        }
        expect(')');
      } else {
        std::vector<int> a = intList();
        auto need = [&](std::size_t k) {
          if (a.size() != k) fail(kind + " expects " + std::to_string(k) + " arguments", kp);
        };
        if (kind == "sl2") need(0), rep = sl2_standard();
        else if (kind == "sl_left") need(2), rep = sl_left(a[0], a[1]);
        else if (kind == "so_sym2") need(1), rep = so_sym2(a[0]);
        else if (kind == "o_left") need(2), rep = o_left(a[0], a[1]);
        else if (kind == "sp_left") need(2), rep = sp_left(a[0], a[1]);
        else if (kind == "gl_conj_symm") need(1), rep = gl_conj_symm(a[0]);
        else if (kind == "gl_conj_skew") need(1), rep = gl_conj_skew(a[0]);
        else if (kind == "gl_right") need(2), rep = gl_right(a[0], a[1]);
        else fail("unknown representation '" + kind + "'", kp);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what(), kp);
    }
    declare(nm, p);
    out_.reps[nm] = rep;
  }

  const Poly& polyRef(Check& c) {
    auto [n, np] = name();
    c.polyName = n;
    return lookup(out_.polys, n, np, "poly");
  }
  const PolyMap& mapRef(Check& c) {
    auto [n, np] = name();
    c.mapName = n;
    return lookup(out_.maps, n, np, "map");
  }

  void checkDecl(const Pos& start) {
    Check c;
    c.line = start.line;
    c.column = start.column;
    skip();
    Pos cp = cur_;
    std::string cmd = ident(true);
    if (cmd == "derlog" || cmd == "free") {
      c.kind = cmd == "derlog" ? CheckKind::Derlog : CheckKind::Free;
      polyRef(c);
    } else if (cmd == "pullback") {
      c.kind = CheckKind::Pullback;
      skip();
      Pos mp = cur_;
      std::string mode = ident();
      if (mode == "strong") c.mode = PullbackMode::Strong;
      else if (mode == "weak") c.mode = PullbackMode::Weak;
      else fail("expected 'strong' or 'weak'", mp);
      const PolyMap& phi = mapRef(c);
      skip();
      Pos fp = cur_;
      if (!same_ring(polyRef(c).ring(), phi.target)) fail("polynomial is not on the target ring of the map", fp);
    } else if (cmd == "euler-lift") {
      c.kind = CheckKind::EulerLift;
      const PolyMap& phi = mapRef(c);
      skip();
      Pos fp = cur_;
      if (!same_ring(polyRef(c).ring(), phi.target)) fail("polynomial is not on the target ring of the map", fp);
      skip();
      Pos wp = cur_;
      if (ident() != "weights") fail("expected 'weights'", wp);
      c.ints = intList();
      if (int(c.ints.size()) != phi.targetArity()) fail("one weight per target variable is required", wp);
    } else if (cmd == "ffstar") {
      c.kind = CheckKind::Ffstar;
      const Poly& h = polyRef(c);
      if (atIdent()) {
        skip();
        Pos kp = cur_;
        if (ident() != "canonical") fail("expected 'canonical' or a generator list", kp);
        c.canonical = true;
      } else {
        expect('(');
        do c.polys.push_back(polyIn(expr(), h.ring()));
        while (eat(','));
        expect(')');
        if (atIdent()) {
          skip();
          Pos vp = cur_;
          std::string k = ident();
          if (k == "vars") {
            c.vars = identList('(', ')');
            if (c.vars.size() != c.polys.size()) fail("one new variable per generator is required", vp);
          } else if (k != "expect") {
            fail("expected 'vars'", vp);
          } else {
            c.expect = expectValue();
          }
        }
      }
    } else if (cmd == "castling") {
      c.kind = CheckKind::Castling;
      const Poly& f = polyRef(c);
      if (atInteger()) c.ints = {integer()};
      else c.ints = {f.ring()->arity() - 1};
    } else if (cmd == "liftable") {
      c.kind = CheckKind::Liftable;
      const PolyMap& phi = mapRef(c);
      if (atIdent() && !atKeyword("expect")) {
        skip();
        Pos fp = cur_;
        if (!same_ring(polyRef(c).ring(), phi.target)) fail("polynomial is not on the target ring of the map", fp);
      }
    } else if (cmd == "t1") {
      c.kind = CheckKind::T1;
      mapRef(c);
    } else if (cmd == "invariants" || cmd == "stabilizer") {
      c.kind = cmd == "invariants" ? CheckKind::Invariants : CheckKind::Stabilizer;
      auto [n, np] = name();
      c.repName = n;
      lookup(out_.reps, n, np, "rep");
      if (c.kind == CheckKind::Invariants) {
        skip();
        Pos dp = cur_;
        c.ints = {integer()};
        if (c.ints[0] < 1) fail("degree must be positive", dp);
      }
    } else {
      fail("unknown check '" + cmd + "'", cp);
    }
    if (!c.expect && atKeyword("expect")) {
      ident();
      c.expect = expectValue();
    }
    skip();
    c.text = s_.substr(start.at, cur_.at - start.at);
    out_.checks.push_back(std::move(c));
  }

  bool atKeyword(const std::string& kw) {
    if (!atIdent()) return false;
    return s_.compare(cur_.at, kw.size(), kw) == 0 &&
           (cur_.at + kw.size() >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[cur_.at + kw.size()])));
  }

  std::string expectValue() {
    if (atInteger()) return std::to_string(integer());
    return ident(true);
  }

  const std::string& s_;
  Pos cur_;
  Session out_;
  std::set<std::string> names_;
};

}  // namespace

Session parse_session(const std::string& text, const SessionOptions& options) {
  return SessionParser(text, options).parse();
}

}  // namespace freediv::cli
