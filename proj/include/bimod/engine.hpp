#pragma once

#include <Eigen/Dense>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "bimod/mtc.hpp"

namespace bimod {

/// A direct sum of simple objects, one entry per summand copy. Summand order
/// is part of the object: it fixes the embeddings all component data refer to.
struct Object {
  std::vector<int> summands;

  Object() = default;
  explicit Object(std::vector<int> s) : summands(std::move(s)) {}
  static Object simple(int label) { return Object({label}); }

  int size() const { return static_cast<int>(summands.size()); }
  /// Index of the `copy`-th summand with the given label, or -1.
  int summand_index(int label, int copy) const;
  /// Number of summands isomorphic to U_label.
  int multiplicity(int label) const;
  auto operator<=>(const Object&) const = default;
};

/// Tensor word of objects; the empty word is the tensor unit.
using Word = std::vector<Object>;

Word simple_word(std::initializer_list<int> labels);
Object dual_object(const MtcData& C, const Object& X);
/// Dual of a word: reversed, each letter dualized.
Word dual_word(const MtcData& C, const Word& w);
Word concat(const Word& a, const Word& b);
std::string to_string(const MtcData& C, const Word& w);

/// Left-combed splitting tree of charge k into a word. `sel[t]` picks the
/// summand of letter t, `charge[t]` is the total charge of letters 0..t, and
/// `vertex[t]` the multiplicity index of charge[t-1] * letter_t -> charge[t].
struct Tree {
  std::vector<int> sel;
  std::vector<int> charge;
  std::vector<int> vertex;
  auto operator<=>(const Tree&) const = default;
};

struct TreeSpace {
  std::vector<Tree> trees;
  std::map<Tree, int> index;
  int size() const { return static_cast<int>(trees.size()); }
  int find(const Tree& t) const;
};

/// Basis of Hom(src, tgt): triples (k, target tree, source tree).
struct HomBasis {
  Word source;
  Word target;
  std::vector<std::tuple<int, int, int>> entries;
  int dimension() const { return static_cast<int>(entries.size()); }
};

/// Linear map between tensor words, stored block-diagonally over the
/// intermediate simple k: blocks[k] maps source trees of charge k to target
/// trees of charge k (rows target, columns source).
class Morphism {
 public:
  Word source;
  Word target;
  std::vector<Eigen::MatrixXcd> blocks;

  double norm() const;
  /// Value of a closed diagram; throws TypeMismatch unless source and target are empty.
  cplx scalar() const;
  Eigen::VectorXcd flatten() const;
  void assign(const Eigen::VectorXcd& coeffs);
  int dimension() const;

  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  Morphism& operator*=(cplx s);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(cplx s, Morphism a) { return a *= s; }
};

double distance(const Morphism& a, const Morphism& b);

/// The four duality morphisms of a simple object U_i:
/// b in Hom(1, i ibar), d in Hom(ibar i, 1), bt in Hom(1, ibar i), dt in Hom(i ibar, 1).
struct DualityData {
  int label = 0;
  Morphism b, d, bt, dt;
  double zigzag_residual = 0.0;
  double sovereign_residual = 0.0;
};

/// Evaluator for the graphical calculus of a ribbon fusion category in
/// left-combed fusion-tree bases. Tree spaces, change-of-basis matrices and
/// duality data are cached; all methods are safe to call concurrently.
class Engine {
 public:
  explicit Engine(std::shared_ptr<const MtcData> C);

  const MtcData& category() const { return *C_; }
  std::shared_ptr<const MtcData> category_ptr() const { return C_; }
  double tol() const { return C_->tol; }

  const TreeSpace& trees(const Word& w, int k) const;
  int dim(const Word& w, int k) const { return trees(w, k).size(); }
  HomBasis hom_space(const Word& src, const Word& tgt) const;
  Morphism basis_element(const HomBasis& basis, int index) const;
  Morphism from_coefficients(const Word& src, const Word& tgt, const Eigen::VectorXcd& coeffs) const;

  Morphism zero(const Word& src, const Word& tgt) const;
  Morphism identity(const Word& w) const;
  /// g after f, i.e. g o f. Requires f.target == g.source.
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  /// `id^{(x) pos} (x) c_{w[pos], w[pos+1]} (x) id`, or its inverse (which has
  /// the swapped word as source).
  Morphism braiding(const Word& w, std::size_t pos, bool inverse) const;
  /// c_{u,v} : u v -> v u, or c_{u,v}^{-1} : v u -> u v.
  Morphism braid(const Word& u, const Word& v, bool inverse) const;

  const DualityData& duality(int label) const;
  /// Word-level dualities: b_w in Hom(1, w w^v), d_w in Hom(w^v w, 1),
  /// bt_w in Hom(1, w^v w), dt_w in Hom(w w^v, 1).
  Morphism coev(const Word& w) const;
  Morphism ev(const Word& w) const;
  Morphism coev_tilde(const Word& w) const;
  Morphism ev_tilde(const Word& w) const;

  /// Right trace dt o (f (x) id) o b, evaluated as a diagram.
  cplx trace(const Morphism& f) const;
  /// Left trace d o (id (x) f) o bt.
  cplx trace_left(const Morphism& f) const;
  /// Quantum dimension of U_i as d_i o bt_i.
  cplx dimension(int label) const;
  cplx dimension(const Object& X) const;

  /// Change of basis from the product basis (w1 -> a) (x) (w2 -> b) -> k into
  /// the left-combed basis of w1 w2 (columns are product vectors).
  struct ProductBasis {
    struct Entry {
      int a, b, mu, offset, rows1, rows2;
    };
    std::vector<Entry> groups;
    int size = 0;
  };
  const ProductBasis& product_basis(const Word& w1, const Word& w2, int k) const;
  const Eigen::MatrixXcd& product_change(const Word& w1, const Word& w2, int k, bool inverse) const;

 private:
  using WordKey = std::vector<std::vector<int>>;
  static WordKey key(const Word& w);
  TreeSpace build_trees(const Word& w, int k) const;
  void expand(const Word& w1, const Tree& t1, const Word& w2, const Tree& t2, int mu, int k, cplx coef,
              std::map<Tree, cplx>& out) const;
  DualityData build_duality(int label) const;

  std::shared_ptr<const MtcData> C_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<WordKey, int>, TreeSpace> tree_cache_;
  mutable std::map<std::tuple<WordKey, WordKey, int>, ProductBasis> prod_cache_;
  mutable std::map<std::tuple<WordKey, WordKey, int, bool>, Eigen::MatrixXcd> change_cache_;
  mutable std::map<int, DualityData> duality_cache_;
};

}  // namespace bimod
