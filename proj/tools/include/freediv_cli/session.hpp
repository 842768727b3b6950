#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freediv/construct.hpp"
#include "freediv/rep.hpp"

namespace freediv::cli {

struct SessionOptions {
  OrderKind order = OrderKind::GRevLex;
  bool allowNonhomogeneous = false;
  long budget = 10'000'000;
  double timeoutSeconds = 0;  // 0 means no deadline
  std::uint64_t seed = 1;
};

enum class CheckKind { Derlog, Free, Pullback, EulerLift, Ffstar, Castling, Liftable, T1, Invariants, Stabilizer };
std::string check_name(CheckKind k);

struct Check {
  CheckKind kind = CheckKind::Derlog;
  int line = 0;
  int column = 0;
  // Source text of the statement, for reports.
  std::string text;
  std::string mapName;
  std::string polyName;
  std::string repName;
  PullbackMode mode = PullbackMode::Strong;
  std::vector<int> ints;
  std::vector<Poly> polys;
  std::vector<std::string> vars;
  bool canonical = false;
  std::optional<std::string> expect;
};

struct Session {
  SessionOptions options;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, PolyMap> maps;
  std::map<std::string, Poly> polys;
  std::map<std::string, LinearRep> reps;
  // Declared names in order.
  std::vector<std::string> names;
  std::vector<Check> checks;
};

// Grammar (statements end with ';', '#' and '//' start comments):
//   ring NAME = [v1, ..., vk] [weights(w1, ..., wk)] [order(grevlex|lex|weighted)];
//   map NAME : R1 -> R2 = (p1, ..., pm);
//   map NAME = castling_minors(n) | sym_matrix(n,m) | skew_form(n,m)
//            | charpoly_coeffs(n) | sub_pfaffians(m) | quotient(REP, p1, ..., pk);
//   poly NAME on R = expr;
//   rep NAME = sl2() | sl_left(n,m) | so_sym2(n) | o_left(n,m) | sp_left(n,m)
//            | sym_power(REP,k) | tensor(REP,REP) | gl_conj_symm(m) | gl_conj_skew(m)
//            | gl_right(n,m);
//   check CMD args [expect VALUE];
// Commands:
//   derlog F | free F | pullback strong|weak MAP F | euler-lift MAP F weights(...)
//   ffstar H (g1, ..., gk) [vars(y1, ..., yk)] | ffstar H canonical | castling F [n]
//   liftable MAP [F] | t1 MAP | invariants REP d | stabilizer REP
// A quotient map NAME also declares rings NAME_X, NAME_S and rep NAME_rep.
Session parse_session(const std::string& text, const SessionOptions& options = {});

}  // namespace freediv::cli
