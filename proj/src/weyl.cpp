#include "tensalg/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace tensalg {

RootType root_type(GType g) {
  switch (g) {
    case GType::sl: return RootType::A;
    case GType::sp: return RootType::C;
    case GType::o: return RootType::D;
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<WeightVec> positive_roots(RootType type, int n) {
  std::vector<WeightVec> roots;
  auto vec = [&](int i, int j, int ci, int cj) {
    WeightVec w(n, 0);
    w[i] += ci;
    if (j >= 0) w[j] += cj;
    return w;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) roots.push_back(vec(i, j, 1, -1));
  if (type == RootType::C || type == RootType::D)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) roots.push_back(vec(i, j, 1, 1));
  if (type == RootType::C)
    for (int i = 0; i < n; ++i) roots.push_back(vec(i, -1, 2, 0));
  return roots;
}

std::vector<WeightVec> simple_roots(RootType type, int n) {
  std::vector<WeightVec> roots;
  auto vec = [&](int i, int j, int ci, int cj) {
    WeightVec w(n, 0);
    w[i] += ci;
    if (j >= 0) w[j] += cj;
    return w;
  };
  for (int i = 0; i + 1 < n; ++i) roots.push_back(vec(i, i + 1, 1, -1));
  if (type == RootType::C) roots.push_back(vec(n - 1, -1, 2, 0));
  if (type == RootType::D && n >= 2) roots.push_back(vec(n - 2, n - 1, 1, 1));
  return roots;
}

WeightVec rho_vec(RootType type, int n) {
  WeightVec r(n, 0);
  // half sum of positive roots
  std::vector<WeightVec> roots = positive_roots(type, n);
  for (const auto& a : roots)
    for (int i = 0; i < n; ++i) r[i] += a[i];
  // entries of the sum are even for these types except type A (where any
  // rho-shift works for Freudenthal); use the exact half with a doubled
  // lattice to stay integral
  return r;  // this is 2*rho
}

long dot(const WeightVec& a, const WeightVec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

WeightVec add(const WeightVec& a, const WeightVec& b, int c = 1) {
  WeightVec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] += c * b[i];
  return r;
}

struct MemoKey {
  RootType type;
  int n;
  WeightVec highest;
  auto operator<=>(const MemoKey&) const = default;
};

std::mutex memo_mutex;
std::map<MemoKey, std::map<WeightVec, long>> memo;

}  // namespace

std::map<WeightVec, long> irrep_weight_multiplicities(RootType type, int n,
                                                      const WeightVec& highest) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({type, n, highest});
    if (it != memo.end()) return it->second;
  }
  std::vector<WeightVec> simples = simple_roots(type, n);
  std::vector<WeightVec> positives = positive_roots(type, n);

  // weight set: saturate downward along simple root strings
  std::set<WeightVec> weights{highest};
  std::deque<WeightVec> queue{highest};
  while (!queue.empty()) {
    WeightVec mu = queue.front();
    queue.pop_front();
    for (const auto& a : simples) {
      long num = 2 * dot(mu, a), den = dot(a, a);
      long k = num / den;  // <mu, alpha^vee>
      for (long s = 1; s <= k; ++s) {
        WeightVec nu = add(mu, a, static_cast<int>(-s));
        if (weights.insert(nu).second) queue.push_back(nu);
      }
    }
  }

  // Freudenthal, processing by increasing depth = height of (highest - mu)
  std::map<long, std::vector<WeightVec>> by_depth;
  for (const auto& mu : weights) {
    long depth = 0;
    for (int i = 0; i < n; ++i) depth += highest[i] - mu[i];
    // height in the root lattice is proportional to the coordinate sum drop
    // for A; for C/D the sum drop may be 0 for eps_i + eps_j steps, so use
    // a positive functional: sum of (n - i) * coordinate
    long h = 0;
    for (int i = 0; i < n; ++i) h += static_cast<long>(n - i) * (highest[i] - mu[i]);
    (void)depth;
    by_depth[h].push_back(mu);
  }

  std::map<WeightVec, long> mult;
  WeightVec two_rho = rho_vec(type, n);
  // norms computed in the doubled lattice: |2(mu+rho)|^2 = |2mu + 2rho|^2
  auto norm2 = [&](const WeightVec& mu) {
    WeightVec d(n);
    for (int i = 0; i < n; ++i) d[i] = 2 * mu[i] + two_rho[i];
    return dot(d, d);
  };
  for (const auto& [h, group] : by_depth) {
    for (const auto& mu : group) {
      if (mu == highest) {
        mult[mu] = 1;
        continue;
      }
      Rat rhs = 0;
      for (const auto& a : positives) {
        WeightVec nu = mu;
        while (true) {
          nu = add(nu, a);
          auto it = mult.find(nu);
          if (it == mult.end()) {
            if (!weights.count(nu)) break;
            throw std::logic_error("Freudenthal processing order violated");
          }
          rhs += Rat(it->second) * Rat(dot(nu, a));
        }
      }
      rhs *= 2;
      long denom_scaled = (norm2(highest) - norm2(mu));
      // norms were computed on doubled weights: |2x+2rho|^2 = 4|x+rho|^2, and
      // the rhs uses unscaled inner products, so scale rhs accordingly
      Rat m = rhs * 4 / Rat(denom_scaled);
      if (m.get_den() != 1) throw std::logic_error("Freudenthal: non-integral multiplicity");
      mult[mu] = static_cast<long>(m.get_num().get_si());
    }
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo[{type, n, highest}] = mult;
  }
  return mult;
}

Int weyl_dim(RootType type, int n, const WeightVec& highest) {
  WeightVec two_rho = rho_vec(type, n);
  Int num = 1, den = 1;
  for (const auto& a : positive_roots(type, n)) {
    WeightVec lam2 = highest;
    for (int i = 0; i < n; ++i) lam2[i] = 2 * highest[i] + two_rho[i];
    num *= dot(lam2, a);
    den *= dot(two_rho, a);
  }
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("Weyl dimension: non-integral quotient");
  return q;
}

WeightVec mixed_gl_weight(const BiPartition& label, int n) {
  if (label.first().length() + label.second().length() > n)
    throw std::invalid_argument("label too long for the rank");
  WeightVec w(n, 0);
  for (int i = 0; i < label.first().length(); ++i) w[i] = label.first().parts()[i];
  for (int i = 0; i < label.second().length(); ++i)
    w[n - 1 - i] = -label.second().parts()[i];
  return w;
}

BiPartition bipartition_of_gl_weight(const WeightVec& w) {
  std::vector<int> pos, neg;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) throw std::invalid_argument("weight is not dominant");
  for (int x : w) {
    if (x > 0) pos.push_back(x);
    if (x < 0) neg.push_back(-x);
  }
  std::reverse(neg.begin(), neg.end());
  return {Partition(pos), Partition(neg)};
}

Partition partition_of_weight(const WeightVec& w) {
  std::vector<int> parts;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) throw std::invalid_argument("weight is not dominant");
  for (int x : w) {
    if (x < 0) throw std::invalid_argument("weight has negative entries");
    if (x > 0) parts.push_back(x);
  }
  return Partition(parts);
}

WeightVec weight_of_partition(const Partition& mu, int n) {
  if (mu.length() > n) throw std::invalid_argument("partition too long for the rank");
  WeightVec w(n, 0);
  for (int i = 0; i < mu.length(); ++i) w[i] = mu.parts()[i];
  return w;
}

namespace {

WeightVec max_weight(const WeightDecomposition& w) {
  auto it = std::max_element(w.begin(), w.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;  // lexicographic on vectors
  });
  return it->first;
}

void subtract_character(WeightDecomposition& w, const std::map<WeightVec, long>& chi, long m) {
  for (const auto& [mu, k] : chi) {
    auto it = w.find(mu);
    long cur = (it == w.end()) ? 0 : it->second;
    long next = cur - m * k;
    if (next < 0) throw std::runtime_error("negative multiplicity while peeling");
    if (next == 0) {
      if (it != w.end()) w.erase(it);
    } else {
      w[mu] = next;
    }
  }
}

}  // namespace

std::map<BiPartition, long> decompose_gl_character(WeightDecomposition w, int n) {
  std::map<BiPartition, long> out;
  while (!w.empty()) {
    WeightVec top = max_weight(w);
    BiPartition label = bipartition_of_gl_weight(top);  // throws if not dominant
    long m = w.at(top);
    subtract_character(w, irrep_weight_multiplicities(RootType::A, n, top), m);
    out[label] += m;
  }
  return out;
}

std::map<Partition, long> decompose_osp_character(WeightDecomposition w, RootType type, int n) {
  std::map<Partition, long> out;
  while (!w.empty()) {
    WeightVec top = max_weight(w);
    Partition label = partition_of_weight(top);
    long m = w.at(top);
    subtract_character(w, irrep_weight_multiplicities(type, n, top), m);
    out[label] += m;
  }
  return out;
}

}  // namespace tensalg
