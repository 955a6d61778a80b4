#include "tensalg/partition.hpp"

#include <algorithm>
#include <sstream>

namespace tensalg {

static void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
}

static Partition parse_partition_at(const std::string& s, size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '[') throw std::invalid_argument("expected '[' in partition: " + s);
  ++i;
  std::vector<int> parts;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
    return Partition(parts);
  }
  while (true) {
    skip_ws(s, i);
    size_t j = i;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected integer in partition: " + s);
    parts.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ']') {
      ++i;
      break;
    }
    throw std::invalid_argument("expected ',' or ']' in partition: " + s);
  }
  return Partition(parts);
}

Partition Partition::parse(const std::string& text) {
  size_t i = 0;
  Partition p = parse_partition_at(text, i);
  skip_ws(text, i);
  if (i != text.size()) throw std::invalid_argument("trailing characters in partition: " + text);
  return p;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (parts_.empty()) return Partition();
  cols.resize(parts_[0], 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) cols[c]++;
  return Partition(cols);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (parts_[i] < other.parts_[i]) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

BiPartition BiPartition::parse(const std::string& text) {
  size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '(') throw std::invalid_argument("expected '(' in bipartition: " + text);
  ++i;
  Partition a = parse_partition_at(text, i);
  skip_ws(text, i);
  if (i >= text.size() || text[i] != ',') throw std::invalid_argument("expected ',' in bipartition: " + text);
  ++i;
  Partition b = parse_partition_at(text, i);
  skip_ws(text, i);
  if (i >= text.size() || text[i] != ')') throw std::invalid_argument("expected ')' in bipartition: " + text);
  ++i;
  skip_ws(text, i);
  if (i != text.size()) throw std::invalid_argument("trailing characters in bipartition: " + text);
  return {a, b};
}

std::string BiPartition::str() const { return "(" + first_.str() + "," + second_.str() + ")"; }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // descending enumeration
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
  return out;
}

std::set<Partition> up_set(const Partition& mu) {
  std::set<Partition> out;
  for (int i = 0; i <= mu.length(); ++i) {
    std::vector<int> parts = mu.parts();
    if (i == mu.length())
      parts.push_back(1);
    else
      parts[i]++;
    try {
      out.insert(Partition(parts));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

std::set<Partition> down_set(const Partition& mu) {
  std::set<Partition> out;
  for (int i = 0; i < mu.length(); ++i) {
    std::vector<int> parts = mu.parts();
    parts[i]--;
    try {
      out.insert(Partition(parts));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

std::set<BiPartition> bipartition_up(const BiPartition& lambda) {
  std::set<BiPartition> out;
  for (const Partition& p : up_set(lambda.first())) out.insert({p, lambda.second()});
  return out;
}

std::set<BiPartition> bipartition_down(const BiPartition& lambda) {
  std::set<BiPartition> out;
  for (const Partition& p : down_set(lambda.second())) out.insert({lambda.first(), p});
  return out;
}

std::set<Partition> pieri_s2(const Partition& lambda) {
  std::set<Partition> out;
  int rows = lambda.length() + 2;
  // all ways to distribute two boxes over rows 0..rows-1
  for (int i = 0; i < rows; ++i) {
    for (int j = i; j < rows; ++j) {
      std::vector<int> parts;
      for (int k = 0; k < rows; ++k) parts.push_back(lambda.part(k));
      parts[i]++;
      parts[j]++;
      // the displayed condition: two distinct growing rows must have had
      // different lengths
      if (i != j && lambda.part(i) == lambda.part(j)) continue;
      try {
        out.insert(Partition(parts));
      } catch (const std::invalid_argument&) {
      }
    }
  }
  return out;
}

Int symmetric_group_dim(const Partition& mu) {
  int n = mu.size();
  if (n == 0) return 1;
  Partition conj = mu.conjugate();
  Int hooks = 1;
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu.parts()[i]; ++j) {
      int arm = mu.parts()[i] - j - 1;
      int leg = conj.parts()[j] - i - 1;
      hooks *= (arm + leg + 1);
    }
  Int num = factorial(n);
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
  if (r != 0) throw std::logic_error("hook length formula: non-integral quotient");
  return q;
}

std::string gtype_str(GType g) {
  switch (g) {
    case GType::sl: return "sl";
    case GType::o: return "o";
    case GType::sp: return "sp";
  }
  return "?";
}

GType parse_gtype(const std::string& s) {
  if (s == "sl") return GType::sl;
  if (s == "o") return GType::o;
  if (s == "sp") return GType::sp;
  throw std::invalid_argument("unknown g-type: " + s);
}

std::string BlockLabel::str() const {
  if (g == GType::sl) return std::to_string(value);
  return value == 0 ? "even" : "odd";
}

BlockLabel block_label(GType g, const BiPartition& lambda) {
  if (g != GType::sl)
    throw std::invalid_argument("bipartition block labels are defined for sl only");
  return {g, static_cast<long>(lambda.first().size() - lambda.second().size())};
}

BlockLabel block_label(GType g, const Partition& lambda) {
  if (g == GType::sl)
    throw std::invalid_argument("sl block labels require a bipartition");
  return {g, static_cast<long>(lambda.size() % 2)};
}

}  // namespace tensalg
