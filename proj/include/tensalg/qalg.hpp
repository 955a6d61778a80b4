#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tensalg/right_ideal.hpp"

namespace tensalg {

/*
 * The graded algebra A^r_g from its presentation:
 *   base ring   (A^r)_0 = ⊕ C[S_p x S_q]  (p+q <= r; sl)   resp. ⊕ C[S_p] (p <= r)
 *   degree one  (A)_1^{p,q} free of rank one over C[S_p x S_q]  (sl)
 *               (A)_1^p = triv (o) / sgn (sp) induced from S' = <(p-1,p)>
 *   relations   R^{p,q} = (1-(p-1,p)_l)(1+(q-1,q)_r) C ⊕ (1+..)(1-..) C   (sl)
 *               R^p = the 3-dimensional hook isotypic of the degree-two
 *               component supported on the last four letters, induced up (o/sp)
 *
 * Everything is realized concretely inside the top group algebra: the degree-k
 * chain space at index (p,q) is E^(k) C[group] (E = 1 for sl, a product of
 * transposition (anti)symmetrizers for o/sp), and the relation ideal in degree
 * k is the sum of the embedded R's.  Graded components are the quotients.
 */
struct AlgebraIndex {
  int p = 0, q = 0;  // q ignored for o/sp
  auto operator<=>(const AlgebraIndex&) const = default;
};

class QuadraticAlgebra {
 public:
  static QuadraticAlgebra build(GType g, int r);

  GType g() const { return g_; }
  int r() const { return r_; }
  bool is_dual() const { return dual_; }

  std::vector<AlgebraIndex> indices() const;  // all base-ring indices
  GroupShape shape(const AlgebraIndex& idx) const;

  // degree-1 component as a right ideal (empty optional when it vanishes)
  std::optional<RightIdeal> degree_one(const AlgebraIndex& idx) const;

  // presentation relation space at the index (zero ideal when degenerate)
  RightIdeal relation_space(const AlgebraIndex& idx) const;
  // the complementary sl space Rbar (sl only)
  RightIdeal rbar_space(const AlgebraIndex& idx) const;

  // degree-k chain space E^(k) C[group] and the embedded relation ideal
  std::optional<RightIdeal> chain_space(const AlgebraIndex& idx, int k) const;
  RightIdeal relation_ideal(const AlgebraIndex& idx, int k) const;
  // dim of the degree-k graded component at the index
  long component_dim(const AlgebraIndex& idx, int k) const;
  int top_degree() const;  // largest k with a nonzero chain space anywhere

  // quadratic dual: same chains, relations replaced by the orthogonal
  // complement under the trace form
  QuadraticAlgebra quadratic_dual() const;

  // multiplicity matrices of the degree-k components over the simple
  // (A_0)-labels (rows: target-index labels, cols: source-index labels)
  struct LabelSet {
    std::vector<std::pair<AlgebraIndex, BiPartition>> labels;
    std::map<std::pair<AlgebraIndex, BiPartition>, int> pos;
  };
  LabelSet label_set() const;
  std::vector<std::vector<long>> multiplicity_matrix(int k, const LabelSet& L) const;

  std::string dump_json() const;

 private:
  GType g_;
  int r_ = 0;
  bool dual_ = false;
  // memoized relation spaces (presentation or complement)
  mutable std::map<AlgebraIndex, RightIdeal> relations_;
  const RightIdeal& relation(const AlgebraIndex& idx) const;
};

// independent oracle route: the relation space as the kernel of evaluating
// degree-two chains against the finite-rank contraction composites, computed
// at two ranks (throws if the two disagree: rank too small)
RightIdeal relation_space_from_oracle(GType g, int p, int q, int rank_override = 0);

// sigma(R^{p,q}) = Rbar^{p,q} for all p+q <= r; on failure returns the first
// witness index through *witness
bool check_self_duality_sl(int r, AlgebraIndex* witness = nullptr);

// the sign twist carries the o presentation onto the sp presentation
bool check_o_sp_isomorphism(int r, AlgebraIndex* witness = nullptr);

// numerical Koszulity: sum_k (-1)^k M_{m-k} N_k = 0 for 2 <= m <= depth,
// M from the algebra, N from its quadratic dual
bool hilbert_koszul_test(const QuadraticAlgebra& a, int depth);

}  // namespace tensalg
