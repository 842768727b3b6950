#include "freediv/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "freediv/error.hpp"

namespace freediv {

MonomialOrder::MonomialOrder(int nvars, const std::vector<int>& weights,
                             const OrderSpec& spec) {
  auto unit = [](int n) { return std::vector<int>(n, 1); };
  bool anyZero = std::any_of(weights.begin(), weights.end(), [](int w) { return w == 0; });
  switch (spec.kind) {
    case OrderKind::GRevLex:
      blocks_.push_back({0, nvars, unit(nvars), false});
      break;
    case OrderKind::Lex:
      for (int i = 0; i < nvars; ++i) blocks_.push_back({i, i + 1, {1}, false});
      break;
    case OrderKind::Weighted:
      blocks_.push_back({0, nvars, weights, anyZero});
      break;
    case OrderKind::Block: {
      int lo = 0;
      for (int size : spec.blocks) {
        std::vector<int> w(weights.begin() + lo, weights.begin() + lo + size);
        bool z = std::any_of(w.begin(), w.end(), [](int x) { return x == 0; });
        blocks_.push_back({lo, lo + size, w, z});
        lo += size;
      }
      break;
    }
  }
}

PolyRing::PolyRing(std::vector<std::string> vars, std::vector<int> weights, OrderSpec order)
    : vars_(std::move(vars)), weights_(std::move(weights)), spec_(std::move(order)) {
  if (int(vars_.size()) > kMaxVars)
    throw Error("ring has more than " + std::to_string(kMaxVars) + " variables");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size()) throw Error("weights length differs from variable count");
  for (int w : weights_)
    if (w < 0) throw Error("negative weight");
  if (spec_.kind == OrderKind::Block) {
    int total = 0;
    for (int b : spec_.blocks) {
      if (b <= 0) throw Error("empty block in block order");
      total += b;
    }
    if (total != int(vars_.size())) throw Error("block order does not partition the variables");
  }
  grading_ = positiveWeights() ? weights_ : std::vector<int>(vars_.size(), 1);
  order_ = MonomialOrder(int(vars_.size()), weights_, spec_);
}

RingPtr PolyRing::make(std::vector<std::string> vars, std::vector<int> weights, OrderSpec order) {
  return std::make_shared<const PolyRing>(std::move(vars), std::move(weights), std::move(order));
}

int PolyRing::indexOf(const std::string& name) const {
  for (int i = 0; i < arity(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

bool PolyRing::positiveWeights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w > 0; });
}

std::string PolyRing::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < arity(); ++i) os << (i ? "," : "") << vars_[i];
  os << "] weights(";
  for (int i = 0; i < arity(); ++i) os << (i ? "," : "") << weights_[i];
  os << ")";
  return os.str();
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b)) throw RingMismatch(std::string("ring mismatch in ") + where);
}

}  // namespace freediv
