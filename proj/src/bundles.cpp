#include "grflop/bundles.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace grflop {

struct BundleExpr::Node {
  Kind kind;
  int parameter = 0;
  Partition shape{};
  std::vector<BundleExpr> children{};
};

BundleExpr BundleExpr::sub() { return BundleExpr(std::make_shared<Node>(Node{Kind::Sub})); }
BundleExpr BundleExpr::dual_sub() { return BundleExpr(std::make_shared<Node>(Node{Kind::DualSub})); }
BundleExpr BundleExpr::quotient() { return BundleExpr(std::make_shared<Node>(Node{Kind::Quotient})); }
BundleExpr BundleExpr::dual_quotient() {
  return BundleExpr(std::make_shared<Node>(Node{Kind::DualQuotient}));
}
BundleExpr BundleExpr::ambient_trivial() { return BundleExpr(std::make_shared<Node>(Node{Kind::Ambient})); }
BundleExpr BundleExpr::normal() { return BundleExpr(std::make_shared<Node>(Node{Kind::Normal})); }
BundleExpr BundleExpr::conormal() { return dual(normal()); }
BundleExpr BundleExpr::tangent() { return dual_sub() * quotient(); }

BundleExpr BundleExpr::trivial(int rank) {
  if (rank < 1) throw InputError("trivial bundle rank must be at least 1");
  return BundleExpr(std::make_shared<Node>(Node{Kind::Trivial, rank}));
}

BundleExpr BundleExpr::line(int k) { return BundleExpr(std::make_shared<Node>(Node{Kind::Line, k})); }

BundleExpr BundleExpr::sym(int k, const BundleExpr& e) {
  if (k < 0) throw InputError("symmetric power exponent must be nonnegative");
  return schur(Partition(std::vector<int>{k}), e);
}

BundleExpr BundleExpr::schur(const Partition& shape, const BundleExpr& e) {
  return BundleExpr(std::make_shared<Node>(Node{Kind::Schur, 0, shape, {e}}));
}

BundleExpr BundleExpr::dual(const BundleExpr& e) {
  return BundleExpr(std::make_shared<Node>(Node{Kind::Dual, 0, {}, {e}}));
}

BundleExpr BundleExpr::copies(int m, const BundleExpr& e) { return trivial(m) * e; }

BundleExpr operator+(const BundleExpr& a, const BundleExpr& b) {
  return BundleExpr(std::make_shared<BundleExpr::Node>(
      BundleExpr::Node{BundleExpr::Kind::Sum, 0, {}, {a, b}}));
}

BundleExpr operator*(const BundleExpr& a, const BundleExpr& b) {
  return BundleExpr(std::make_shared<BundleExpr::Node>(
      BundleExpr::Node{BundleExpr::Kind::Tensor, 0, {}, {a, b}}));
}

BundleExpr::Kind BundleExpr::kind() const { return node_->kind; }
int BundleExpr::parameter() const { return node_->parameter; }
const Partition& BundleExpr::shape() const { return node_->shape; }
const std::vector<BundleExpr>& BundleExpr::children() const { return node_->children; }

std::string BundleExpr::to_string() const {
  switch (kind()) {
    case Kind::Sub: return "S";
    case Kind::DualSub: return "Sv";
    case Kind::Quotient: return "Q";
    case Kind::DualQuotient: return "Qv";
    case Kind::Ambient: return "V";
    case Kind::Normal: return "N";
    case Kind::Trivial: return parameter() == 1 ? "O" : std::to_string(parameter()) + " O";
    case Kind::Line: return "O(" + std::to_string(parameter()) + ")";
    case Kind::Sum: return "(" + children()[0].to_string() + " + " + children()[1].to_string() + ")";
    case Kind::Tensor: return "(" + children()[0].to_string() + " * " + children()[1].to_string() + ")";
    case Kind::Dual: return "dual(" + children()[0].to_string() + ")";
    case Kind::Schur:
      if (shape().length() <= 1) {
        return "sym " + std::to_string(shape().size()) + "(" + children()[0].to_string() + ")";
      }
      return "schur[" + shape().to_string() + "](" + children()[0].to_string() + ")";
  }
  return "?";
}

// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BundleExpr parse_all() {
    BundleExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("bundle expression: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool at_digit() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return c == '-' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  int integer() {
    if (!at_digit()) fail("expected an integer");
    std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  BundleExpr expr() {
    BundleExpr e = term();
    while (accept("+") || accept("⊕")) e = e + term();
    return e;
  }

  BundleExpr term() {
    BundleExpr e = factor();
    while (accept("*") || accept("⊗")) e = e * factor();
    return e;
  }

  BundleExpr parenthesized() {
    expect("(");
    BundleExpr e = expr();
    expect(")");
    return e;
  }

  BundleExpr factor() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') return parenthesized();
    if (at_digit()) {
      int m = integer();
      if (m < 1) fail("multiplicity must be positive");
      return BundleExpr::copies(m, factor());
    }
    std::string id = identifier();
    if (id == "S") return BundleExpr::sub();
    if (id == "Sv") return BundleExpr::dual_sub();
    if (id == "Q") return BundleExpr::quotient();
    if (id == "Qv") return BundleExpr::dual_quotient();
    if (id == "T") return BundleExpr::tangent();
    if (id == "V") return BundleExpr::ambient_trivial();
    if (id == "N") return BundleExpr::normal();
    if (id == "Nv") return BundleExpr::conormal();
    if (id == "O") {
      std::size_t save = pos_;
      if (accept("(")) {
        if (at_digit()) {
          int k = integer();
          expect(")");
          return BundleExpr::line(k);
        }
        pos_ = save;
      }
      return BundleExpr::trivial(1);
    }
    if (id == "sym" || id == "Sym") {
      int k = integer();
      if (k < 0) fail("negative symmetric power");
      return BundleExpr::sym(k, parenthesized());
    }
    if (id == "dual") return BundleExpr::dual(parenthesized());
    if (id == "schur") {
      expect("[");
      std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated partition");
      Partition shape = Partition::parse(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return BundleExpr::schur(shape, parenthesized());
    }
    if (id.empty()) fail("expected a bundle");
    fail("unknown bundle '" + id + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BundleExpr BundleExpr::parse(std::string_view text) { return Parser(text).parse_all(); }

// Summands

std::string IrreducibleSummand::to_string() const {
  return "alpha=" + alpha.to_string() + " beta=" + beta.to_string() +
         " mult=" + std::to_string(multiplicity);
}

SummandSet SummandSet::single(const Grassmannian& gr, GLWeight alpha, GLWeight beta,
                              std::int64_t multiplicity) {
  SummandSet s(gr);
  s.add(alpha, beta, multiplicity);
  return s;
}

SummandSet SummandSet::trivial(const Grassmannian& gr, std::int64_t rank) {
  return single(gr, GLWeight::zero(gr.r()), GLWeight::zero(gr.quotient_rank()), rank);
}

void SummandSet::add(const GLWeight& alpha, const GLWeight& beta, std::int64_t multiplicity) {
  if (alpha.rank() != gr_.r() || beta.rank() != gr_.quotient_rank()) {
    throw InputError("summand weights " + alpha.to_string() + " " + beta.to_string() +
                     " do not match " + gr_.to_string());
  }
  if (multiplicity < 0) throw InputError("negative multiplicity");
  if (multiplicity == 0) return;
  terms_[{alpha, beta}] += multiplicity;
}

void SummandSet::add(const SummandSet& other) {
  require_same_ambient(gr_, other.gr_);
  for (const auto& [key, m] : other.terms_) terms_[key] += m;
}

std::vector<IrreducibleSummand> SummandSet::summands() const {
  std::vector<IrreducibleSummand> out;
  out.reserve(terms_.size());
  for (const auto& [key, m] : terms_) out.push_back({key.first, key.second, m});
  return out;
}

std::int64_t rank(const Grassmannian& gr, const IrreducibleSummand& s) {
  return s.multiplicity * weyl_dimension(s.alpha, gr.r()) * weyl_dimension(s.beta, gr.quotient_rank());
}

std::int64_t SummandSet::rank() const {
  std::int64_t total = 0;
  for (const auto& s : summands()) total += grflop::rank(gr_, s);
  return total;
}

SummandSet SummandSet::scaled(std::int64_t factor) const {
  SummandSet out(gr_);
  for (const auto& [key, m] : terms_) out.add(key.first, key.second, m * factor);
  return out;
}

SummandSet SummandSet::dual() const {
  SummandSet out(gr_);
  for (const auto& [key, m] : terms_) out.add(key.first.dual(), key.second.dual(), m);
  return out;
}

SummandSet SummandSet::twisted(int d) const {
  SummandSet out(gr_);
  for (const auto& [key, m] : terms_) out.add(key.first.shifted(d), key.second, m);
  return out;
}

// Tensor products

namespace {

// Product of two GL_rank irreducibles, as weights with multiplicities.
std::map<GLWeight, std::int64_t> tensor_weights(const GLWeight& a, const GLWeight& b) {
  const int rank = a.rank();
  int sa = a.last();
  int sb = b.last();
  std::map<GLWeight, std::int64_t> out;
  for (const auto& [nu, c] : lr_coefficients(a.shifted(-sa).to_partition(), b.shifted(-sb).to_partition(), rank)) {
    out.emplace(GLWeight::from_partition(nu, rank).shifted(sa + sb), c);
  }
  return out;
}

}  // namespace

SummandSet tensor_summands(const SummandSet& a, const SummandSet& b) {
  require_same_ambient(a.ambient(), b.ambient());
  SummandSet out(a.ambient());
  for (const auto& x : a.summands()) {
    for (const auto& y : b.summands()) {
      auto alphas = tensor_weights(x.alpha, y.alpha);
      auto betas = tensor_weights(x.beta, y.beta);
      for (const auto& [alpha, ca] : alphas) {
        for (const auto& [beta, cb] : betas) {
          out.add(alpha, beta, x.multiplicity * y.multiplicity * ca * cb);
        }
      }
    }
  }
  return out;
}

SummandSet composition_summands(const Grassmannian& gr, const std::vector<int>& composition,
                                bool use_sub) {
  SummandSet acc = SummandSet::trivial(gr);
  GLWeight zero_beta = GLWeight::zero(gr.quotient_rank());
  for (int l : composition) {
    if (l < 0) throw InputError("negative entry in composition");
    if (l == 0) continue;
    GLWeight sym = GLWeight::from_partition(Partition({l}), gr.r());
    if (use_sub) sym = sym.dual();
    acc = tensor_summands(acc, SummandSet::single(gr, sym, zero_beta));
  }
  return acc;
}

SummandSet sym_of_copies(const Grassmannian& gr, int l, bool use_sub) {
  SummandSet out(gr);
  std::map<std::vector<int>, SummandSet> seen;
  for (auto comp : sym_power_compositions(l, gr.n())) {
    std::sort(comp.begin(), comp.end(), std::greater<>());
    auto it = seen.find(comp);
    if (it == seen.end()) it = seen.emplace(comp, composition_summands(gr, comp, use_sub)).first;
    out.add(it->second);
  }
  return out;
}

SummandSet sym_conormal(const Grassmannian& gr, int l) { return sym_of_copies(gr, l, false); }

// Schur functors

namespace {

enum class Shape { Line, Vector, Covector, Other };

struct Classified {
  Shape shape;
  int shift;
};

// Line: det^c. Vector: defining rep (x) det^c. Covector: its dual (x) det^c.
Classified classify(const GLWeight& w) {
  if (w.is_constant()) return {Shape::Line, w.first()};
  const auto& e = w.entries();
  const int len = w.rank();
  bool tail_const = std::all_of(e.begin() + 1, e.end(), [&](int x) { return x == e[1]; });
  if (tail_const && e[0] == e[1] + 1) return {Shape::Vector, e[1]};
  bool head_const = std::all_of(e.begin(), e.end() - 1, [&](int x) { return x == e[0]; });
  if (head_const && e[len - 1] == e[0] - 1) return {Shape::Covector, e[0]};
  return {Shape::Other, 0};
}

// S_nu of a line / vector / covector type weight; nullopt when it vanishes.
std::optional<GLWeight> schur_of_simple(const Partition& nu, const GLWeight& w) {
  Classified c = classify(w);
  const int rank = w.rank();
  const int k = nu.size();
  switch (c.shape) {
    case Shape::Line:
      if (nu.length() > 1) return std::nullopt;
      return GLWeight(std::vector<int>(rank, c.shift * k));
    case Shape::Vector:
      if (nu.length() > rank) return std::nullopt;
      return GLWeight::from_partition(nu, rank).shifted(c.shift * k);
    case Shape::Covector:
      if (nu.length() > rank) return std::nullopt;
      return GLWeight::from_partition(nu, rank).dual().shifted(c.shift * k);
    case Shape::Other:
      break;
  }
  throw InputError("Schur functor of " + w.to_string() + " is a general plethysm (unsupported)");
}

SummandSet schur_of_irreducible(const Partition& mu, const Grassmannian& gr, const GLWeight& alpha,
                                const GLWeight& beta) {
  SummandSet out(gr);
  if (mu.size() == 0) return SummandSet::trivial(gr);
  if (mu.size() == 1) return SummandSet::single(gr, alpha, beta);
  Classified ca = classify(alpha);
  Classified cb = classify(beta);
  // A line factor takes the power |mu|; the other factor takes S_mu.
  if (ca.shape == Shape::Line) {
    if (auto b = schur_of_simple(mu, beta)) {
      out.add(GLWeight(std::vector<int>(alpha.rank(), ca.shift * mu.size())), *b, 1);
    }
    return out;
  }
  if (cb.shape == Shape::Line) {
    if (auto a = schur_of_simple(mu, alpha)) {
      out.add(*a, GLWeight(std::vector<int>(beta.rank(), cb.shift * mu.size())), 1);
    }
    return out;
  }
  const bool row = mu.length() == 1;
  const bool column = mu[0] == 1;
  if (ca.shape == Shape::Other || cb.shape == Shape::Other || !(row || column)) {
    throw InputError("Schur functor [" + mu.to_string() + "] of " + alpha.to_string() + " " +
                     beta.to_string() + " is a general plethysm (unsupported)");
  }
  // Cauchy: Sym^k(X (x) Y) = sum S_nu X (x) S_nu Y, Lambda^k uses nu' on Y.
  for (const auto& nu : partitions_of(mu.size(), std::min(gr.r(), gr.quotient_rank()))) {
    auto a = schur_of_simple(nu, alpha);
    auto b = schur_of_simple(row ? nu : nu.conjugate(), beta);
    if (a && b) out.add(*a, *b, 1);
  }
  return out;
}

std::vector<Partition> sub_partitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i == lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(cap, lambda[i]); ++v) {
      cur.push_back(v);
      self(self, i + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, lambda.empty() ? 0 : lambda[0]);
  return out;
}

class SchurExpansion {
 public:
  SchurExpansion(const SummandSet& input) : gr_(input.ambient()) {
    for (const auto& s : input.summands()) {
      for (std::int64_t i = 0; i < s.multiplicity; ++i) items_.push_back(s);
    }
    if (items_.size() > 4096) throw InputError("Schur functor input has too many summands");
  }

  SummandSet expand(const Partition& shape, std::size_t idx) {
    if (idx == items_.size()) {
      return shape.empty() ? SummandSet::trivial(gr_) : SummandSet(gr_);
    }
    auto key = std::make_pair(shape, idx);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // S_lambda(A + R) = sum c^lambda_{mu,nu} S_mu(A) (x) S_nu(R)
    SummandSet out(gr_);
    for (const auto& mu : sub_partitions(shape)) {
      SummandSet head = schur_of_irreducible(mu, gr_, items_[idx].alpha, items_[idx].beta);
      if (head.empty()) continue;
      for (const auto& nu : partitions_of(shape.size() - mu.size(), shape.length())) {
        if (!shape.contains(nu)) continue;
        std::int64_t c = lr_coefficient(mu, nu, shape);
        if (c == 0) continue;
        SummandSet tail = expand(nu, idx + 1);
        if (tail.empty()) continue;
        out.add(tensor_summands(head, tail).scaled(c));
      }
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  Grassmannian gr_;
  std::vector<IrreducibleSummand> items_;
  std::map<std::pair<Partition, std::size_t>, SummandSet> memo_;
};

}  // namespace

SummandSet schur_functor(const Partition& shape, const SummandSet& input) {
  return SchurExpansion(input).expand(shape, 0);
}

SummandSet normalize(const BundleExpr& expr, const Grassmannian& gr) {
  using Kind = BundleExpr::Kind;
  const int r = gr.r();
  const int q = gr.quotient_rank();
  auto e1 = [](int len) {
    std::vector<int> v(len, 0);
    v[0] = 1;
    return GLWeight(std::move(v));
  };
  switch (expr.kind()) {
    case Kind::Sub:
      return SummandSet::single(gr, e1(r).dual(), GLWeight::zero(q));
    case Kind::DualSub:
      return SummandSet::single(gr, e1(r), GLWeight::zero(q));
    case Kind::Quotient:
      return SummandSet::single(gr, GLWeight::zero(r), e1(q));
    case Kind::DualQuotient:
      return SummandSet::single(gr, GLWeight::zero(r), e1(q).dual());
    case Kind::Trivial:
      return SummandSet::trivial(gr, expr.parameter());
    case Kind::Ambient:
      return SummandSet::trivial(gr, gr.n());
    case Kind::Normal:
      return SummandSet::single(gr, e1(r).dual(), GLWeight::zero(q), gr.n());
    case Kind::Line:
      return SummandSet::single(gr, GLWeight(std::vector<int>(r, expr.parameter())), GLWeight::zero(q));
    case Kind::Sum: {
      SummandSet out = normalize(expr.children()[0], gr);
      out.add(normalize(expr.children()[1], gr));
      return out;
    }
    case Kind::Tensor:
      return tensor_summands(normalize(expr.children()[0], gr), normalize(expr.children()[1], gr));
    case Kind::Dual:
      return normalize(expr.children()[0], gr).dual();
    case Kind::Schur: {
      const Partition& mu = expr.shape();
      const BundleExpr& inner = expr.children()[0];
      const bool row = mu.length() == 1;
      const bool column = !mu.empty() && mu[0] == 1;
      if (inner.kind() != Kind::Tensor || mu.size() < 2 || !(row || column)) {
        return schur_functor(mu, normalize(inner, gr));
      }
      // Cauchy on the tensor factors: S_nu X (x) S_nu Y, or S_nu' Y for Lambda^k.
      const BundleExpr& x = inner.children()[0];
      const BundleExpr& y = inner.children()[1];
      SummandSet out(gr);
      for (const auto& nu : partitions_of(mu.size(), mu.size())) {
        SummandSet a = normalize(BundleExpr::schur(nu, x), gr);
        if (a.empty()) continue;
        SummandSet b = normalize(BundleExpr::schur(row ? nu : nu.conjugate(), y), gr);
        if (b.empty()) continue;
        out.add(tensor_summands(a, b));
      }
      return out;
    }
  }
  throw InputError("malformed bundle expression");
}

}  // namespace grflop
