#include "tensalg/tensor_space.hpp"

#include <sstream>
#include <stdexcept>

namespace tensalg {

TensorSpace::TensorSpace(FiniteRankContext ctx, int p, int q) : ctx_(ctx), p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative tensor degree");
  if (ctx.g != GType::sl && q != 0)
    throw std::invalid_argument("o/sp tensor spaces have no dual factors");
  dim_ = 1;
  for (int k = 0; k < p_ + q_; ++k) dim_ *= ctx_.dimV();
}

std::vector<int> TensorSpace::tuple_of(long index) const {
  std::vector<int> t(p_ + q_);
  int d = ctx_.dimV();
  for (int k = p_ + q_ - 1; k >= 0; --k) {
    t[k] = static_cast<int>(index % d) + 1;
    index /= d;
  }
  return t;
}

long TensorSpace::index_of(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != p_ + q_) throw std::invalid_argument("bad tuple length");
  long idx = 0;
  int d = ctx_.dimV();
  for (int k = 0; k < p_ + q_; ++k) {
    if (tuple[k] < 1 || tuple[k] > d) throw std::invalid_argument("tuple entry out of range");
    idx = idx * d + (tuple[k] - 1);
  }
  return idx;
}

WeightVec TensorSpace::weight_of(long index) const {
  std::vector<int> t = tuple_of(index);
  WeightVec w(ctx_.n, 0);
  for (int k = 0; k < p_ + q_; ++k) {
    WeightVec wk = ctx_.weight_of_e(t[k]);
    int s = (k < p_) ? 1 : -1;  // dual factors carry the negative weight
    for (int i = 0; i < ctx_.n; ++i) w[i] += s * wk[i];
  }
  return w;
}

const std::map<WeightVec, std::vector<long>>& TensorSpace::weight_blocks() const {
  if (blocks_.empty() && dim_ > 0) {
    for (long i = 0; i < dim_; ++i) blocks_[weight_of(i)].push_back(i);
  }
  return blocks_;
}

std::string TensorSpace::str() const {
  std::ostringstream os;
  os << "T^{" << p_;
  if (ctx_.g == GType::sl) os << "," << q_;
  os << "} over " << gtype_str(ctx_.g) << "(n=" << ctx_.n << ")";
  return os.str();
}

}  // namespace tensalg
