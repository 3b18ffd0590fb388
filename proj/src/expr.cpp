#include "ratkit/expr.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace ratkit {

namespace detail {

struct NodeKey {
  Kind kind;
  SemiringTag tag;
  char letter;
  Weight weight;
  const ExprNode* a;
  const ExprNode* b;

  bool operator==(const NodeKey& o) const {
    return kind == o.kind && tag == o.tag && letter == o.letter && weight == o.weight &&
           a == o.a && b == o.b;
  }
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const;
};

struct ExprNode {
  Kind kind;
  SemiringTag tag;
  char letter = 0;
  Weight weight;
  Expr a;
  Expr b;
  std::size_t hash = 0;
  std::weak_ptr<const ExprNode> self;

  ExprNode(Kind k, SemiringTag t, char l, Weight w, Expr x, Expr y)
      : kind(k), tag(t), letter(l), weight(std::move(w)), a(std::move(x)), b(std::move(y)) {}
  ~ExprNode();

  NodeKey key() const;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// Interning table. Heap-allocated and never freed so that it outlives every
// static Expr.
struct Store {
  std::mutex mutex;
  std::unordered_map<NodeKey, const ExprNode*, NodeKeyHash> table;
};

Store& store() {
  static Store* s = new Store;
  return *s;
}

}  // namespace

std::size_t NodeKeyHash::operator()(const NodeKey& k) const {
  std::size_t h = static_cast<std::size_t>(k.kind) * 1000003u + static_cast<std::size_t>(k.tag);
  h = mix(h, static_cast<unsigned char>(k.letter));
  if (k.kind == Kind::LWeight || k.kind == Kind::RWeight) h = mix(h, k.weight.hash());
  if (k.a) h = mix(h, k.a->hash);
  if (k.b) h = mix(h, k.b->hash);
  return h;
}

NodeKey ExprNode::key() const {
  const ExprNode* pa = (kind == Kind::Zero || kind == Kind::One || kind == Kind::Atom) ? nullptr : nodeptr(a);
  const ExprNode* pb = (kind == Kind::Sum || kind == Kind::Prod) ? nodeptr(b) : nullptr;
  return NodeKey{kind, tag, letter, weight, pa, pb};
}

ExprNode::~ExprNode() {
  Store& s = store();
  std::lock_guard<std::mutex> lock(s.mutex);
  auto it = s.table.find(key());
  if (it != s.table.end() && it->second == this) s.table.erase(it);
}

}  // namespace detail

using detail::ExprNode;

namespace {

Expr make_node(Kind kind, SemiringTag tag, char letter, const Weight& weight, const Expr& a,
               const Expr& b) {
  bool unary = kind == Kind::Star || kind == Kind::LWeight || kind == Kind::RWeight;
  bool binary = kind == Kind::Sum || kind == Kind::Prod;
  detail::NodeKey key{kind, tag, letter, weight, (unary || binary) ? detail::nodeptr(a) : nullptr,
                      binary ? detail::nodeptr(b) : nullptr};
  detail::Store& s = detail::store();
  std::size_t h = detail::NodeKeyHash{}(key);
  std::shared_ptr<ExprNode> node;
  {
    std::lock_guard<std::mutex> lock(s.mutex);
    auto it = s.table.find(key);
    if (it != s.table.end()) {
      if (auto live = it->second->self.lock()) return Expr(std::move(live));
      s.table.erase(it);  // expiring node; its destructor will not find itself
    }
    node = std::make_shared<ExprNode>(kind, tag, letter, weight, (unary || binary) ? a : Expr(nullptr),
                                      binary ? b : Expr(nullptr));
    node->hash = h;
    node->self = node;
    s.table.emplace(key, node.get());
  }
  return Expr(std::move(node));
}

const Weight& no_weight() {
  static const Weight* w = new Weight();
  return *w;
}

void check_same_tag(const Expr& x, const Expr& y) {
  if (x.tag() != y.tag())
    throw Error(ErrorKind::TagMismatch, std::string(tag_name(x.tag())) + " vs " +
                                            std::string(tag_name(y.tag())));
}

void check_weight_tag(const Weight& k, const Expr& x) {
  if (k.tag() != x.tag())
    throw Error(ErrorKind::TagMismatch, std::string(tag_name(k.tag())) + " weight on " +
                                            std::string(tag_name(x.tag())) + " expression");
}

}  // namespace

const detail::ExprNode* detail::nodeptr(const Expr& e) { return e.node_.get(); }

Expr::Expr() : Expr(zero(SemiringTag::B)) {}

Kind Expr::kind() const { return node_->kind; }
SemiringTag Expr::tag() const { return node_->tag; }
char Expr::letter() const { return node_->letter; }
const Weight& Expr::weight() const { return node_->weight; }
const Expr& Expr::left() const { return node_->a; }
const Expr& Expr::right() const { return node_->b; }
const Expr& Expr::child() const { return node_->a; }
std::size_t Expr::hash() const { return node_->hash; }

int compare(const Expr& x, const Expr& y) {
  if (x == y) return 0;
  if (x.tag() != y.tag()) return x.tag() < y.tag() ? -1 : 1;
  if (x.kind() != y.kind()) return x.kind() < y.kind() ? -1 : 1;
  switch (x.kind()) {
    case Kind::Zero:
    case Kind::One: return 0;
    case Kind::Atom: return x.letter() < y.letter() ? -1 : 1;
    case Kind::Sum:
    case Kind::Prod: {
      int c = compare(x.left(), y.left());
      return c != 0 ? c : compare(x.right(), y.right());
    }
    case Kind::Star: return compare(x.child(), y.child());
    case Kind::LWeight:
    case Kind::RWeight:
      if (x.weight() != y.weight()) return x.weight() < y.weight() ? -1 : 1;
      return compare(x.child(), y.child());
  }
  return 0;
}

Expr zero(SemiringTag tag) { return make_node(Kind::Zero, tag, 0, no_weight(), Expr(nullptr), Expr(nullptr)); }
Expr one(SemiringTag tag) { return make_node(Kind::One, tag, 0, no_weight(), Expr(nullptr), Expr(nullptr)); }
Expr atom(SemiringTag tag, char letter) {
  return make_node(Kind::Atom, tag, letter, no_weight(), Expr(nullptr), Expr(nullptr));
}

namespace raw {

Expr sum(const Expr& x, const Expr& y) {
  check_same_tag(x, y);
  return make_node(Kind::Sum, x.tag(), 0, no_weight(), x, y);
}
Expr prod(const Expr& x, const Expr& y) {
  check_same_tag(x, y);
  return make_node(Kind::Prod, x.tag(), 0, no_weight(), x, y);
}
Expr star(const Expr& x) { return make_node(Kind::Star, x.tag(), 0, no_weight(), x, Expr(nullptr)); }
Expr lweight(const Weight& k, const Expr& x) {
  check_weight_tag(k, x);
  return make_node(Kind::LWeight, x.tag(), 0, k, x, Expr(nullptr));
}
Expr rweight(const Expr& x, const Weight& k) {
  check_weight_tag(k, x);
  return make_node(Kind::RWeight, x.tag(), 0, k, x, Expr(nullptr));
}

}  // namespace raw

namespace {

bool is_weighted_one(const Expr& e) {
  return e.kind() == Kind::LWeight && e.child().is_one();
}

}  // namespace

Expr sum(const Expr& x, const Expr& y) {
  check_same_tag(x, y);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  return raw::sum(x, y);
}

Expr prod(const Expr& x, const Expr& y) {
  check_same_tag(x, y);
  if (x.is_zero() || y.is_zero()) return zero(x.tag());
  if (x.is_one()) return y;
  if (y.is_one()) return x;
  if (is_weighted_one(x)) return lweight(x.weight(), y);
  if (is_weighted_one(y)) return rweight(x, y.weight());
  return raw::prod(x, y);
}

Expr star(const Expr& x) {
  if (x.is_zero()) return one(x.tag());
  return raw::star(x);
}

Expr lweight(const Weight& k, const Expr& x) {
  check_weight_tag(k, x);
  if (k.is_zero() || x.is_zero()) return zero(x.tag());
  if (k.is_one()) return x;
  if (x.kind() == Kind::LWeight) return lweight(mul(k, x.weight()), x.child());
  return raw::lweight(k, x);
}

Expr rweight(const Expr& x, const Weight& k) {
  check_weight_tag(k, x);
  if (k.is_zero() || x.is_zero()) return zero(x.tag());
  if (k.is_one()) return x;
  if (x.is_one()) return raw::lweight(k, x);
  if (x.kind() == Kind::RWeight) return rweight(x.child(), mul(x.weight(), k));
  if (x.kind() == Kind::LWeight) return lweight(x.weight(), rweight(x.child(), k));
  return raw::rweight(x, k);
}

Expr reduce_trivial(const Expr& e) {
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One:
    case Kind::Atom: return e;
    case Kind::Sum: return sum(reduce_trivial(e.left()), reduce_trivial(e.right()));
    case Kind::Prod: return prod(reduce_trivial(e.left()), reduce_trivial(e.right()));
    case Kind::Star: return star(reduce_trivial(e.child()));
    case Kind::LWeight: return lweight(e.weight(), reduce_trivial(e.child()));
    case Kind::RWeight: return rweight(reduce_trivial(e.child()), e.weight());
  }
  return e;
}

bool is_reduced(const Expr& e) { return reduce_trivial(e) == e; }

namespace {

void collect_letters(const Expr& e, std::set<char>& out) {
  switch (e.kind()) {
    case Kind::Atom: out.insert(e.letter()); break;
    case Kind::Sum:
    case Kind::Prod:
      collect_letters(e.left(), out);
      collect_letters(e.right(), out);
      break;
    case Kind::Star:
    case Kind::LWeight:
    case Kind::RWeight: collect_letters(e.child(), out); break;
    default: break;
  }
}

}  // namespace

std::string letters(const Expr& e) {
  std::set<char> s;
  collect_letters(e, s);
  return std::string(s.begin(), s.end());
}

Weight constant_term(const Expr& e) {
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::Atom: return Weight::zero(e.tag());
    case Kind::One: return Weight::one(e.tag());
    case Kind::Sum: return add(constant_term(e.left()), constant_term(e.right()));
    case Kind::Prod: {
      Weight c = constant_term(e.left());
      if (c.is_zero()) {
        constant_term(e.right());  // validity of the right operand still matters
        return c;
      }
      return mul(c, constant_term(e.right()));
    }
    case Kind::Star: {
      Weight c = constant_term(e.child());
      if (!c.starable())
        throw Error(ErrorKind::InvalidExpression,
                    "constant term " + c.to_string() + " of " + to_string(e) + " has no star");
      return star(c);
    }
    case Kind::LWeight: return mul(e.weight(), constant_term(e.child()));
    case Kind::RWeight: return mul(constant_term(e.child()), e.weight());
  }
  return Weight::zero(e.tag());
}

bool is_valid(const Expr& e) {
  try {
    constant_term(e);
    return true;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::InvalidExpression) throw;
    return false;
  }
}

Metrics metrics(const Expr& e) {
  Metrics m;
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One: break;
    case Kind::Atom: m.literal_length = 1; break;
    case Kind::Sum:
    case Kind::Prod: {
      Metrics l = metrics(e.left());
      Metrics r = metrics(e.right());
      m.literal_length = l.literal_length + r.literal_length;
      m.depth = 1 + std::max(l.depth, r.depth);
      m.star_height = std::max(l.star_height, r.star_height);
      break;
    }
    case Kind::Star:
    case Kind::LWeight:
    case Kind::RWeight: {
      m = metrics(e.child());
      m.depth += 1;
      if (e.kind() == Kind::Star) m.star_height += 1;
      break;
    }
  }
  return m;
}

std::size_t literal_length(const Expr& e) { return metrics(e).literal_length; }
std::size_t star_height(const Expr& e) { return metrics(e).star_height; }

}  // namespace ratkit
