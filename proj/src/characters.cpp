#include "tensalg/characters.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tensalg {

namespace {

std::mutex mn_mutex;
std::map<std::pair<Partition, Partition>, long> mn_cache;

// Border-strip recursion via first-column hook lengths (beta numbers).
long mn_impl(const Partition& shape, const Partition& ct) {
  if (shape.size() != ct.size()) throw std::invalid_argument("shape/cycle-type size mismatch");
  if (shape.size() == 0) return 1;
  {
    std::lock_guard<std::mutex> lock(mn_mutex);
    auto it = mn_cache.find({shape, ct});
    if (it != mn_cache.end()) return it->second;
  }
  int k = ct.parts()[0];
  std::vector<int> rest_parts(ct.parts().begin() + 1, ct.parts().end());
  Partition rest(rest_parts);

  int len = shape.length();
  std::vector<long> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = shape.parts()[i] + (len - 1 - i);

  long total = 0;
  for (int i = 0; i < len; ++i) {
    long b = beta[i] - k;
    if (b < 0) continue;
    bool clash = false;
    int height = 0;
    for (int j = 0; j < len; ++j) {
      if (j == i) continue;
      if (beta[j] == b) clash = true;
      if (beta[j] > b && beta[j] < beta[i]) ++height;
    }
    if (clash) continue;
    std::vector<long> nb = beta;
    nb[i] = b;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> ns(len);
    for (int j = 0; j < len; ++j) ns[j] = static_cast<int>(nb[j] - (len - 1 - j));
    Partition nshape(ns);
    total += (height % 2 ? -1 : 1) * mn_impl(nshape, rest);
  }
  {
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_cache.emplace(std::make_pair(shape, ct), total);
  }
  return total;
}

}  // namespace

long mn_character(const Partition& shape, const Partition& cycle_type) {
  return mn_impl(shape, cycle_type);
}

long character_value(const BiPartition& label, const BiPartition& cycle_type) {
  return mn_character(label.first(), cycle_type.first()) *
         mn_character(label.second(), cycle_type.second());
}

Int centralizer_order(const Partition& ct) {
  std::map<int, int> mult;
  for (int k : ct.parts()) mult[k]++;
  Int z = 1;
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return z;
}

Rat character_inner_product(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) return 0;
  int n = mu.size();
  Rat total = 0;
  for (const Partition& ct : partitions_of(n)) {
    Rat cls = Rat(factorial(n)) / Rat(centralizer_order(ct));
    total += cls * mn_character(mu, ct) * mn_character(nu, ct);
  }
  return total / Rat(factorial(n));
}

}  // namespace tensalg
