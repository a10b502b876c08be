#include "stk/matrix.hpp"

#include "stk/error.hpp"

namespace stk {

int MatrixRep::index(int label) const {
  if (phi_->family() == Family::A) return label - 1;
  int l = phi_->rank();
  return label > 0 ? label - 1 : 2 * l + label;
}

std::shared_ptr<const MatrixRep> MatrixRep::build(RootSystemPtr phi) {
  if (phi->family() == Family::E) throw ConfigError("no matrix representation for the E family");
  auto rep = std::make_shared<MatrixRep>();
  rep->phi_ = phi;
  int l = phi->rank();
  rep->dim_ = phi->family() == Family::A ? l + 1 : 2 * l;
  rep->pat_.resize(phi->size());
  rep->at_.assign(rep->dim_ * rep->dim_, -1);
  for (Root r = 0; r < phi->size(); ++r) {
    const auto& v = phi->coords(r);
    std::vector<int> nz;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
      if (v[i]) nz.push_back(i);
    int i = nz[0] + 1, j = nz[1] + 1;
    int si = v[nz[0]], sj = v[nz[1]];
    auto& p = rep->pat_[r];
    auto ix = [&](int lab) { return rep->index(lab); };
    if (phi->family() == Family::A) {
      if (si > 0)
        p.push_back({ix(i), ix(j), 1});
      else
        p.push_back({ix(j), ix(i), 1});
    } else if (si > 0 && sj < 0) {
      p.push_back({ix(i), ix(j), 1});
      p.push_back({ix(-j), ix(-i), -1});
    } else if (si < 0 && sj > 0) {
      p.push_back({ix(j), ix(i), 1});
      p.push_back({ix(-i), ix(-j), -1});
    } else if (si > 0) {
      p.push_back({ix(i), ix(-j), 1});
      p.push_back({ix(j), ix(-i), -1});
    } else {
      p.push_back({ix(-j), ix(i), 1});
      p.push_back({ix(-i), ix(j), -1});
    }
    for (const auto& e : p) rep->at_[e.row * rep->dim_ + e.col] = r;
  }
  return rep;
}

Mat<int64_t> MatrixRep::form() const {
  Mat<int64_t> f(dim_, 0);
  if (phi_->family() == Family::A) {
    for (int i = 0; i < dim_; ++i) f(i, i) = 1;
  } else {
    for (int i = 0; i < dim_; ++i) f(i, dim_ - 1 - i) = 1;
  }
  return f;
}

Mat<int64_t> MatrixRep::int_gen(Root r, int64_t c) const {
  auto m = Mat<int64_t>::identity(dim_, 0, 1);
  apply_right<int64_t>(m, r, c);
  return m;
}

}  // namespace stk
