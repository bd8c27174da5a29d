#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "grflop/common.hpp"
#include "grflop/weights.hpp"

namespace grflop {

/// Expression tree for homogeneous bundles on a Grassmannian, built from the
/// tautological bundles and trivial/line bundles. Ambient-free: the same
/// expression can be evaluated on any Gr(r, n).
///
/// Text grammar (whitespace-insensitive):
///   expr   := term ('+' term)*           '+' or U+2295 for direct sum
///   term   := factor ('*' factor)*       '*' or U+2297 for tensor product
///   factor := 'S' | 'Sv' | 'Q' | 'Qv' | 'O' | 'O(' int ')' | 'T' | 'V'
///           | 'N' | 'Nv' | 'sym' int '(' expr ')' | 'dual(' expr ')'
///           | 'schur[' partition '](' expr ')' | int factor | '(' expr ')'
/// 'T' is Sv*Q, 'V' the trivial bundle of rank n, 'N' = S^{+n} and
/// 'Nv' = Sv^{+n} are the normal and conormal bundles of the exceptional
/// locus. 'O(k)' is det(Sv)^k and 'm E' is E^{+m}.
class BundleExpr {
 public:
  enum class Kind { Sub, DualSub, Quotient, DualQuotient, Trivial, Ambient, Normal, Line, Sum, Tensor, Schur, Dual };

  static BundleExpr sub();
  static BundleExpr dual_sub();
  static BundleExpr quotient();
  static BundleExpr dual_quotient();
  static BundleExpr trivial(int rank = 1);
  /// The trivial bundle of rank n (the ambient vector space).
  static BundleExpr ambient_trivial();
  /// det(S^v)^k.
  static BundleExpr line(int k);
  static BundleExpr tangent();
  /// S^{+n}; `conormal()` is its dual.
  static BundleExpr normal();
  static BundleExpr conormal();
  static BundleExpr sym(int k, const BundleExpr& e);
  static BundleExpr schur(const Partition& shape, const BundleExpr& e);
  static BundleExpr dual(const BundleExpr& e);
  static BundleExpr copies(int m, const BundleExpr& e);

  static BundleExpr parse(std::string_view text);

  friend BundleExpr operator+(const BundleExpr& a, const BundleExpr& b);
  friend BundleExpr operator*(const BundleExpr& a, const BundleExpr& b);

  Kind kind() const;
  /// Rank for Trivial, exponent for Line.
  int parameter() const;
  const Partition& shape() const;
  const std::vector<BundleExpr>& children() const;

  std::string to_string() const;

 private:
  struct Node;
  explicit BundleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// One isotypic piece S_alpha(S^v) (x) S_beta(Q) with its multiplicity.
struct IrreducibleSummand {
  GLWeight alpha;
  GLWeight beta;
  std::int64_t multiplicity = 1;

  /// "alpha=[a1,...] beta=[b1,...] mult=m"
  std::string to_string() const;
  bool operator==(const IrreducibleSummand&) const = default;
};

/// Multiset of irreducible homogeneous bundles on a fixed Gr(r, n), keyed
/// by (alpha, beta) in lexicographic order.
class SummandSet {
 public:
  explicit SummandSet(const Grassmannian& gr) : gr_(gr) {}

  static SummandSet single(const Grassmannian& gr, GLWeight alpha, GLWeight beta,
                           std::int64_t multiplicity = 1);
  static SummandSet trivial(const Grassmannian& gr, std::int64_t rank = 1);

  const Grassmannian& ambient() const { return gr_; }
  void add(const GLWeight& alpha, const GLWeight& beta, std::int64_t multiplicity);
  void add(const SummandSet& other);

  std::vector<IrreducibleSummand> summands() const;
  std::size_t distinct() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t rank() const;

  SummandSet scaled(std::int64_t factor) const;
  SummandSet dual() const;
  /// Tensor with det(S^v)^d.
  SummandSet twisted(int d) const;

  bool operator==(const SummandSet& other) const = default;

 private:
  using Key = std::pair<GLWeight, GLWeight>;
  Grassmannian gr_;
  std::map<Key, std::int64_t> terms_;
};

std::int64_t rank(const Grassmannian& gr, const IrreducibleSummand& s);

/// Decomposition of an expression into irreducible summands. Schur functors
/// are expanded through Littlewood-Richardson on direct sums, directly on
/// line bundles and twisted S, S^v, Q, Q^v, and through the Cauchy formulas
/// for Sym^k and Lambda^k of a tensor product expression. Other plethysms
/// raise InputError.
SummandSet normalize(const BundleExpr& expr, const Grassmannian& gr);

SummandSet tensor_summands(const SummandSet& a, const SummandSet& b);

/// Sym^l((S^v)^{+n}) assembled from the composition decompositions.
SummandSet sym_conormal(const Grassmannian& gr, int l);

/// Sym^{l_1} E (x) ... (x) Sym^{l_n} E for E = S^v (or S when `use_sub`).
SummandSet composition_summands(const Grassmannian& gr, const std::vector<int>& composition,
                                bool use_sub = false);

/// Sym^l(E^{+n}) for E = S^v (or S when `use_sub`), summed over compositions.
SummandSet sym_of_copies(const Grassmannian& gr, int l, bool use_sub = false);

/// S_shape applied to a direct sum of irreducibles.
SummandSet schur_functor(const Partition& shape, const SummandSet& input);

}  // namespace grflop
