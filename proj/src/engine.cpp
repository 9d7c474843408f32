#include "bimod/engine.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <sstream>

#include "bimod/errors.hpp"

namespace bimod {

int Object::summand_index(int label, int copy) const {
  for (int s = 0; s < size(); ++s) {
    if (summands[s] == label && copy-- == 0) return s;
  }
  return -1;
}

int Object::multiplicity(int label) const {
  int n = 0;
  for (int x : summands) n += (x == label);
  return n;
}

Word simple_word(std::initializer_list<int> labels) {
  Word w;
  for (int a : labels) w.push_back(Object::simple(a));
  return w;
}

Object dual_object(const MtcData& C, const Object& X) {
  Object Y;
  for (int x : X.summands) Y.summands.push_back(C.dual.at(x));
  return Y;
}

Word dual_word(const MtcData& C, const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(dual_object(C, *it));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const MtcData& C, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) os << ' ';
    const auto& s = w[t].summands;
    if (s.size() != 1) os << '(';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "+" : "") << C.name(s[i]);
    if (s.size() != 1) os << ')';
  }
  return os.str();
}

int TreeSpace::find(const Tree& t) const {
  auto it = index.find(t);
  return it == index.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------
// Morphism

double Morphism::norm() const {
  double s = 0.0;
  for (const auto& b : blocks) s += b.squaredNorm();
  return std::sqrt(s);
}

cplx Morphism::scalar() const {
  if (!source.empty() || !target.empty()) throw TypeMismatch("scalar() of a morphism with open strands");
  return blocks.at(0)(0, 0);
}

int Morphism::dimension() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

Eigen::VectorXcd Morphism::flatten() const {
  Eigen::VectorXcd v(dimension());
  int p = 0;
  for (const auto& b : blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) v(p++) = b(i, j);
  return v;
}

void Morphism::assign(const Eigen::VectorXcd& coeffs) {
  if (coeffs.size() != dimension()) throw ShapeError("coefficient vector has wrong length");
  int p = 0;
  for (auto& b : blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) b(i, j) = coeffs(p++);
}

static void check_same_type(const Morphism& a, const Morphism& b) {
  if (a.source != b.source || a.target != b.target) throw TypeMismatch("morphisms of different type");
}

Morphism& Morphism::operator+=(const Morphism& o) {
  check_same_type(*this, o);
  for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] += o.blocks[k];
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
  check_same_type(*this, o);
  for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] -= o.blocks[k];
  return *this;
}

Morphism& Morphism::operator*=(cplx s) {
  for (auto& b : blocks) b *= s;
  return *this;
}

double distance(const Morphism& a, const Morphism& b) { return (a - b).norm(); }

// ---------------------------------------------------------------------------
// Trees

Engine::Engine(std::shared_ptr<const MtcData> C) : C_(std::move(C)) {}

Engine::WordKey Engine::key(const Word& w) {
  WordKey k;
  k.reserve(w.size());
  for (const auto& x : w) k.push_back(x.summands);
  return k;
}

TreeSpace Engine::build_trees(const Word& w, int k) const {
  const MtcData& C = *C_;
  const int n = static_cast<int>(w.size());
  const int r = C.rank();
  TreeSpace space;
  if (n == 0) {
    if (k == 0) space.trees.push_back(Tree{});
  } else {
    Tree t;
    t.sel.resize(n);
    t.charge.resize(n);
    t.vertex.resize(n);
    // Depth-first over letters; lexicographic output order is the basis order.
    auto rec = [&](auto&& self, int pos, int prev) -> void {
      if (pos == n) {
        if (prev == k) space.trees.push_back(t);
        return;
      }
      for (int s = 0; s < w[pos].size(); ++s) {
        int x = w[pos].summands[s];
        t.sel[pos] = s;
        if (pos == 0) {
          t.charge[0] = x;
          t.vertex[0] = 0;
          self(self, 1, x);
          continue;
        }
        for (int c = 0; c < r; ++c) {
          int m = C.N(prev, x, c);
          for (int v = 0; v < m; ++v) {
            t.charge[pos] = c;
            t.vertex[pos] = v;
            self(self, pos + 1, c);
          }
        }
      }
    };
    rec(rec, 0, 0);
  }
  for (int i = 0; i < space.size(); ++i) space.index.emplace(space.trees[i], i);
  return space;
}

const TreeSpace& Engine::trees(const Word& w, int k) const {
  auto id = std::make_pair(key(w), k);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tree_cache_.find(id);
    if (it != tree_cache_.end()) return it->second;
  }
  TreeSpace built = build_trees(w, k);
  std::lock_guard<std::mutex> lock(mutex_);
  return tree_cache_.emplace(std::move(id), std::move(built)).first->second;
}

HomBasis Engine::hom_space(const Word& src, const Word& tgt) const {
  HomBasis basis{src, tgt, {}};
  for (int k = 0; k < C_->rank(); ++k) {
    int rows = dim(tgt, k), cols = dim(src, k);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) basis.entries.emplace_back(k, i, j);
  }
  return basis;
}

Morphism Engine::zero(const Word& src, const Word& tgt) const {
  Morphism f;
  f.source = src;
  f.target = tgt;
  f.blocks.resize(C_->rank());
  for (int k = 0; k < C_->rank(); ++k) f.blocks[k] = Eigen::MatrixXcd::Zero(dim(tgt, k), dim(src, k));
  return f;
}

Morphism Engine::basis_element(const HomBasis& basis, int index) const {
  Morphism f = zero(basis.source, basis.target);
  auto [k, i, j] = basis.entries.at(index);
  f.blocks[k](i, j) = 1.0;
  return f;
}

Morphism Engine::from_coefficients(const Word& src, const Word& tgt, const Eigen::VectorXcd& coeffs) const {
  Morphism f = zero(src, tgt);
  f.assign(coeffs);
  return f;
}

Morphism Engine::identity(const Word& w) const {
  Morphism f = zero(w, w);
  for (auto& b : f.blocks) b.setIdentity();
  return f;
}

Morphism Engine::compose(const Morphism& g, const Morphism& f) const {
  if (f.target != g.source) {
    throw TypeMismatch("cannot compose: target " + to_string(*C_, f.target) + " vs source " +
                       to_string(*C_, g.source));
  }
  Morphism h;
  h.source = f.source;
  h.target = g.target;
  h.blocks.resize(C_->rank());
  for (int k = 0; k < C_->rank(); ++k) h.blocks[k] = g.blocks[k] * f.blocks[k];
  return h;
}

// ---------------------------------------------------------------------------
// Tensor products

const Engine::ProductBasis& Engine::product_basis(const Word& w1, const Word& w2, int k) const {
  auto id = std::make_tuple(key(w1), key(w2), k);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = prod_cache_.find(id);
    if (it != prod_cache_.end()) return it->second;
  }
  ProductBasis pb;
  const int r = C_->rank();
  for (int a = 0; a < r; ++a) {
    int d1 = dim(w1, a);
    if (!d1) continue;
    for (int b = 0; b < r; ++b) {
      int d2 = dim(w2, b);
      if (!d2) continue;
      for (int mu = 0; mu < C_->N(a, b, k); ++mu) {
        pb.groups.push_back({a, b, mu, pb.size, d1, d2});
        pb.size += d1 * d2;
      }
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return prod_cache_.emplace(std::move(id), std::move(pb)).first->second;
}

void Engine::expand(const Word& w1, const Tree& t1, const Word& w2, const Tree& t2, int mu, int k, cplx coef,
                    std::map<Tree, cplx>& out) const {
  const std::size_t n2 = w2.size();
  if (n2 == 0) {
    out[t1] += coef;
    return;
  }
  if (w1.empty()) {
    out[t2] += coef;
    return;
  }
  const int a = t1.charge.back();
  if (n2 == 1) {
    Tree t = t1;
    t.sel.push_back(t2.sel[0]);
    t.charge.push_back(k);
    t.vertex.push_back(mu);
    out[t] += coef;
    return;
  }
  const int b = t2.charge.back();
  const int bp = t2.charge[n2 - 2];
  const int y = w2[n2 - 1].summands[t2.sel[n2 - 1]];
  const int nu = t2.vertex[n2 - 1];
  Tree t2p{{t2.sel.begin(), t2.sel.end() - 1},
           {t2.charge.begin(), t2.charge.end() - 1},
           {t2.vertex.begin(), t2.vertex.end() - 1}};
  Word w2p(w2.begin(), w2.end() - 1);
  const FBlock* F = C_->F_block(a, bp, y, k);
  const int col = F->col_index(b, nu, mu);
  for (std::size_t r = 0; r < F->rows.size(); ++r) {
    cplx c = F->inv(col, r);
    if (c == cplx(0.0)) continue;
    auto [e, alpha, beta] = F->rows[r];
    std::map<Tree, cplx> part;
    expand(w1, t1, w2p, t2p, alpha, e, coef * c, part);
    for (auto& [t, v] : part) {
      Tree tt = t;
      tt.sel.push_back(t2.sel[n2 - 1]);
      tt.charge.push_back(k);
      tt.vertex.push_back(beta);
      out[tt] += v;
    }
  }
}

const Eigen::MatrixXcd& Engine::product_change(const Word& w1, const Word& w2, int k, bool inverse) const {
  auto id = std::make_tuple(key(w1), key(w2), k, inverse);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = change_cache_.find(id);
    if (it != change_cache_.end()) return it->second;
  }
  Eigen::MatrixXcd M;
  if (inverse) {
    M = product_change(w1, w2, k, false).inverse();
  } else {
    const ProductBasis& pb = product_basis(w1, w2, k);
    const TreeSpace& target = trees(concat(w1, w2), k);
    if (target.size() != pb.size) throw ShapeError("product basis size mismatch");
    M = Eigen::MatrixXcd::Zero(target.size(), pb.size);
    for (const auto& g : pb.groups) {
      const TreeSpace& s1 = trees(w1, g.a);
      const TreeSpace& s2 = trees(w2, g.b);
      for (int i1 = 0; i1 < g.rows1; ++i1) {
        for (int i2 = 0; i2 < g.rows2; ++i2) {
          std::map<Tree, cplx> out;
          expand(w1, s1.trees[i1], w2, s2.trees[i2], g.mu, k, 1.0, out);
          int col = g.offset + i1 * g.rows2 + i2;
          for (auto& [t, v] : out) M(target.find(t), col) += v;
        }
      }
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return change_cache_.emplace(std::move(id), std::move(M)).first->second;
}

Morphism Engine::tensor(const Morphism& f, const Morphism& g) const {
  Morphism h;
  h.source = concat(f.source, g.source);
  h.target = concat(f.target, g.target);
  h.blocks.resize(C_->rank());
  for (int k = 0; k < C_->rank(); ++k) {
    const ProductBasis& pu = product_basis(f.target, g.target, k);
    const ProductBasis& pv = product_basis(f.source, g.source, k);
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(pu.size, pv.size);
    for (const auto& gu : pu.groups) {
      for (const auto& gv : pv.groups) {
        if (gu.a != gv.a || gu.b != gv.b || gu.mu != gv.mu) continue;
        P.block(gu.offset, gv.offset, gu.rows1 * gu.rows2, gv.rows1 * gv.rows2) =
            Eigen::kroneckerProduct(f.blocks[gu.a], g.blocks[gu.b]);
      }
    }
    if (pu.size == 0 || pv.size == 0) {
      h.blocks[k] = Eigen::MatrixXcd::Zero(pu.size, pv.size);
      continue;
    }
    h.blocks[k] = product_change(f.target, g.target, k, false) * P * product_change(f.source, g.source, k, true);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Braiding

Morphism Engine::braiding(const Word& w, std::size_t pos, bool inverse) const {
  if (pos + 1 >= w.size()) throw TypeMismatch("braiding position out of range");
  const MtcData& C = *C_;
  Word w2 = w;
  std::swap(w2[pos], w2[pos + 1]);
  Morphism h = zero(w, w2);
  auto mat = [&](int x, int y, int f) -> const Eigen::MatrixXcd& {
    return inverse ? C.R_inverse_reversed(x, y, f) : C.R(x, y, f);
  };
  for (int k = 0; k < C.rank(); ++k) {
    const TreeSpace& src = trees(w, k);
    const TreeSpace& tgt = trees(w2, k);
    for (int j = 0; j < src.size(); ++j) {
      const Tree& s = src.trees[j];
      const int x = w[pos].summands[s.sel[pos]];
      const int y = w[pos + 1].summands[s.sel[pos + 1]];
      Tree t = s;
      std::swap(t.sel[pos], t.sel[pos + 1]);
      const int c2 = s.charge[pos + 1];
      if (pos == 0) {
        const auto& M = mat(x, y, c2);
        t.charge[0] = y;
        for (int a = 0; a < M.cols(); ++a) {
          t.vertex[1] = a;
          h.blocks[k](tgt.find(t), j) += M(s.vertex[1], a);
        }
        continue;
      }
      const int p = s.charge[pos - 1];
      const FBlock* F1 = C.F_block(p, x, y, c2);
      const FBlock* F2 = C.F_block(p, y, x, c2);
      const int row = F1->row_index(s.charge[pos], s.vertex[pos], s.vertex[pos + 1]);
      for (std::size_t c = 0; c < F1->cols.size(); ++c) {
        cplx f1 = F1->mat(row, c);
        if (f1 == cplx(0.0)) continue;
        auto [f, m1, nu] = F1->cols[c];
        const auto& M = mat(x, y, f);
        for (int m2 = 0; m2 < M.cols(); ++m2) {
          cplx rm = M(m1, m2);
          if (rm == cplx(0.0)) continue;
          const int c2i = F2->col_index(f, m2, nu);
          for (std::size_t r = 0; r < F2->rows.size(); ++r) {
            cplx f2 = F2->inv(c2i, r);
            if (f2 == cplx(0.0)) continue;
            auto [e, alpha, beta] = F2->rows[r];
            t.charge[pos] = e;
            t.vertex[pos] = alpha;
            t.vertex[pos + 1] = beta;
            h.blocks[k](tgt.find(t), j) += f1 * rm * f2;
          }
        }
      }
    }
  }
  return h;
}

Morphism Engine::braid(const Word& u, const Word& v, bool inverse) const {
  // c_{u,v} moves letters of u across v, last letter first.
  std::vector<std::pair<Word, std::size_t>> steps;
  Word w = concat(u, v);
  for (std::size_t i = u.size(); i-- > 0;) {
    for (std::size_t p = i; p < i + v.size(); ++p) {
      steps.emplace_back(w, p);
      std::swap(w[p], w[p + 1]);
    }
  }
  if (!inverse) {
    Morphism h = identity(concat(u, v));
    for (const auto& [word, p] : steps) h = compose(braiding(word, p, false), h);
    return h;
  }
  Morphism h = identity(concat(v, u));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    Word word = it->first;
    std::swap(word[it->second], word[it->second + 1]);
    h = compose(braiding(word, it->second, true), h);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Duality

namespace {

// Single charge-0 cup or cap on the two-letter word [x, y].
Morphism cup_or_cap(const Engine& E, int x, int y, bool cup, cplx value) {
  Word w = simple_word({x, y});
  Morphism f = cup ? E.zero({}, w) : E.zero(w, {});
  f.blocks[0](0, 0) = value;
  return f;
}

}  // namespace

DualityData Engine::build_duality(int i) const {
  const MtcData& C = *C_;
  const int ib = C.dual.at(i);
  const Word I = simple_word({i});
  const Word Ib = simple_word({ib});
  DualityData D;
  D.label = i;
  D.b = cup_or_cap(*this, i, ib, true, 1.0);
  Morphism d_raw = cup_or_cap(*this, ib, i, false, 1.0);
  cplx x = compose(tensor(identity(I), d_raw), tensor(D.b, identity(I))).blocks[i](0, 0);
  D.d = cup_or_cap(*this, ib, i, false, 1.0 / x);

  // dt is fixed by theta_i id_i = (id (x) dt)(c_{i,i} (x) id)(id (x) b).
  Morphism dt_raw = cup_or_cap(*this, i, ib, false, 1.0);
  Morphism loop = compose(tensor(braid(I, I, false), identity(Ib)), tensor(identity(I), D.b));
  cplx z = compose(tensor(identity(I), dt_raw), loop).blocks[i](0, 0);
  D.dt = cup_or_cap(*this, i, ib, false, C.twist.at(i) / z);

  Morphism bt_raw = cup_or_cap(*this, ib, i, true, 1.0);
  cplx y = compose(tensor(D.dt, identity(I)), tensor(identity(I), bt_raw)).blocks[i](0, 0);
  D.bt = cup_or_cap(*this, ib, i, true, 1.0 / y);

  D.zigzag_residual = std::max(
      distance(compose(tensor(identity(I), D.d), tensor(D.b, identity(I))), identity(I)),
      distance(compose(tensor(D.dt, identity(I)), tensor(identity(I), D.bt)), identity(I)));
  cplx left = compose(D.d, D.bt).scalar();
  cplx right = compose(D.dt, D.b).scalar();
  D.sovereign_residual = std::abs(left - right);
  if (D.sovereign_residual > C.tol * std::max(1.0, std::abs(left))) {
    throw NonSovereignGauge("left and right dimensions of " + C.name(i) + " differ");
  }
  return D;
}

const DualityData& Engine::duality(int label) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = duality_cache_.find(label);
    if (it != duality_cache_.end()) return it->second;
  }
  DualityData D = build_duality(label);
  std::lock_guard<std::mutex> lock(mutex_);
  return duality_cache_.emplace(label, std::move(D)).first->second;
}

namespace {

enum class Kind { b, d, bt, dt };

}  // namespace

static Morphism object_duality(const Engine& E, const Object& X, Kind kind) {
  const MtcData& C = E.category();
  const Word Xw{X};
  const Word Xv{dual_object(C, X)};
  Word w;
  switch (kind) {
    case Kind::b:
    case Kind::dt:
      w = concat(Xw, Xv);
      break;
    case Kind::d:
    case Kind::bt:
      w = concat(Xv, Xw);
      break;
  }
  const bool cup = kind == Kind::b || kind == Kind::bt;
  Morphism f = cup ? E.zero({}, w) : E.zero(w, {});
  const TreeSpace& ts = E.trees(w, 0);
  for (int s = 0; s < X.size(); ++s) {
    const DualityData& D = E.duality(X.summands[s]);
    const Morphism& m = kind == Kind::b ? D.b : kind == Kind::d ? D.d : kind == Kind::bt ? D.bt : D.dt;
    Tree t{{s, s}, {w[0].summands[s], 0}, {0, 0}};
    int idx = ts.find(t);
    if (cup)
      f.blocks[0](idx, 0) = m.blocks[0](0, 0);
    else
      f.blocks[0](0, idx) = m.blocks[0](0, 0);
  }
  return f;
}

Morphism Engine::coev(const Word& w) const {
  if (w.empty()) return identity({});
  if (w.size() == 1) return object_duality(*this, w[0], Kind::b);
  Word X{w[0]}, Y(w.begin() + 1, w.end());
  Word Xv = dual_word(*C_, X);
  Morphism inner = tensor(tensor(identity(X), coev(Y)), identity(Xv));
  return compose(inner, coev(X));
}

Morphism Engine::ev(const Word& w) const {
  if (w.empty()) return identity({});
  if (w.size() == 1) return object_duality(*this, w[0], Kind::d);
  Word X{w[0]}, Y(w.begin() + 1, w.end());
  Word Yv = dual_word(*C_, Y);
  Morphism inner = tensor(tensor(identity(Yv), ev(X)), identity(Y));
  return compose(ev(Y), inner);
}

Morphism Engine::coev_tilde(const Word& w) const {
  if (w.empty()) return identity({});
  if (w.size() == 1) return object_duality(*this, w[0], Kind::bt);
  Word X{w[0]}, Y(w.begin() + 1, w.end());
  Word Yv = dual_word(*C_, Y);
  Morphism inner = tensor(tensor(identity(Yv), coev_tilde(X)), identity(Y));
  return compose(inner, coev_tilde(Y));
}

Morphism Engine::ev_tilde(const Word& w) const {
  if (w.empty()) return identity({});
  if (w.size() == 1) return object_duality(*this, w[0], Kind::dt);
  Word X{w[0]}, Y(w.begin() + 1, w.end());
  Word Xv = dual_word(*C_, X);
  Morphism inner = tensor(tensor(identity(X), ev_tilde(Y)), identity(Xv));
  return compose(ev_tilde(X), inner);
}

cplx Engine::trace(const Morphism& f) const {
  if (f.source != f.target) throw TypeMismatch("trace of a non-endomorphism");
  Word wv = dual_word(*C_, f.source);
  return compose(ev_tilde(f.source), compose(tensor(f, identity(wv)), coev(f.source))).scalar();
}

cplx Engine::trace_left(const Morphism& f) const {
  if (f.source != f.target) throw TypeMismatch("trace of a non-endomorphism");
  Word wv = dual_word(*C_, f.source);
  return compose(ev(f.source), compose(tensor(identity(wv), f), coev_tilde(f.source))).scalar();
}

cplx Engine::dimension(int label) const {
  const DualityData& D = duality(label);
  return compose(D.d, D.bt).scalar();
}

cplx Engine::dimension(const Object& X) const {
  cplx s = 0.0;
  for (int x : X.summands) s += dimension(x);
  return s;
}

}  // namespace bimod
