#include "tensalg/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tensalg {

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw std::invalid_argument("bad transposition letters");
  Permutation p(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> one_based) {
  Permutation p;
  p.img_.resize(one_based.size());
  std::vector<bool> seen(one_based.size(), false);
  for (size_t i = 0; i < one_based.size(); ++i) {
    int v = one_based[i];
    if (v < 1 || v > static_cast<int>(one_based.size()) || seen[v - 1])
      throw std::invalid_argument("images do not form a bijection");
    seen[v - 1] = true;
    p.img_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::parse(const std::string& text, int degree) {
  size_t i = 0;
  while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '(') {
    // cycle notation
    Permutation p(degree);
    while (i < text.size()) {
      while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i == text.size()) break;
      if (text[i] != '(') throw std::invalid_argument("expected '(' in cycles: " + text);
      ++i;
      std::vector<int> cyc;
      while (true) {
        while (i < text.size() && (isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
          ++i;
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        size_t j = i;
        while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw std::invalid_argument("expected letter in cycles: " + text);
        cyc.push_back(std::stoi(text.substr(i, j - i)));
        i = j;
      }
      if (cyc.size() >= 2) {
        Permutation c(degree);
        for (size_t k = 0; k < cyc.size(); ++k) {
          int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
          if (from < 1 || from > degree) throw std::invalid_argument("cycle letter out of range");
          c.img_[from - 1] = to - 1;
        }
        p = c.after(p);
      }
    }
    return p;
  }
  // one-line notation
  std::istringstream is(text);
  std::vector<int> imgs;
  int v;
  while (is >> v) imgs.push_back(v);
  if (static_cast<int>(imgs.size()) != degree)
    throw std::invalid_argument("one-line notation has wrong length");
  return from_images(imgs);
}

Permutation Permutation::after(const Permutation& first) const {
  if (degree() != first.degree()) throw std::invalid_argument("degree mismatch in composition");
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[first.img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
  return r;
}

int Permutation::sign() const {
  std::vector<int> tmp = img_;
  int s = 1;
  for (size_t i = 0; i < tmp.size(); ++i)
    while (tmp[i] != static_cast<int>(i)) {
      std::swap(tmp[i], tmp[tmp[i]]);
      s = -s;
    }
  return s;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lens;
  for (size_t i = 0; i < img_.size(); ++i)
    if (!seen[i]) {
      int len = 0;
      size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = img_[j];
        ++len;
      }
      lens.push_back(len);
    }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < img_.size(); ++i)
    if (!seen[i] && img_[i] != static_cast<int>(i)) {
      any = true;
      os << '(';
      size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) os << ' ';
        os << (j + 1);
        first = false;
        j = img_[j];
      }
      os << ')';
    }
  if (!any) return "()";
  return os.str();
}

bool Permutation::stabilizes_block(int lo, int hi) const {
  for (int i = lo; i <= hi; ++i) {
    int v = apply(i);
    if (v < lo || v > hi) return false;
  }
  return true;
}

int Permutation::block_sign(int lo, int hi) const {
  if (!stabilizes_block(lo, hi)) throw std::invalid_argument("block not stabilized");
  std::vector<int> tmp;
  for (int i = lo; i <= hi; ++i) tmp.push_back(apply(i) - lo);
  int s = 1;
  for (size_t i = 0; i < tmp.size(); ++i)
    while (tmp[i] != static_cast<int>(i)) {
      std::swap(tmp[i], tmp[tmp[i]]);
      s = -s;
    }
  return s;
}

}  // namespace tensalg
