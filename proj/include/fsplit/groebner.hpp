#ifndef FSPLIT_GROEBNER_HPP
#define FSPLIT_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fsplit/poly.hpp"

namespace fsplit {

// An ideal of the ambient polynomial ring, with reduced Groebner bases cached
// per monomial order.  Handles are cheap to copy; the cache is shared and
// internally synchronized.
class IdealHandle {
 public:
  IdealHandle() = default;
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return state_->ring; }
  const std::vector<Polynomial>& generators() const { return state_->gens; }
  bool is_zero() const { return state_->gens.empty(); }

  // Reduced Groebner basis (monic, inter-reduced, deterministic).
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord) const;
  const std::vector<Polynomial>& groebner_basis() const {
    return groebner_basis(ring()->default_order);
  }

  bool equals(const IdealHandle& other) const;  // reduced-GB equality
  bool contains(const IdealHandle& other) const;

 private:
  struct OrderLess {
    bool operator()(const MonomialOrder& a, const MonomialOrder& b) const {
      return a.less(b);
    }
  };
  struct State {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::mutex mu;
    std::map<MonomialOrder, std::vector<Polynomial>, OrderLess> cache;
  };
  std::shared_ptr<State> state_;
};

// Unique remainder of f modulo the reduced basis of I under ord.
Polynomial normal_form(const Polynomial& f, const IdealHandle& I,
                       const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& f, const IdealHandle& I);

bool ideal_member(const Polynomial& f, const IdealHandle& I);

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_intersect(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_colon(const IdealHandle& I, const Polynomial& g);
IdealHandle ideal_colon_ideal(const IdealHandle& I, const IdealHandle& J);

// I intersected with the subring on the non-eliminated variables.
IdealHandle eliminate(const IdealHandle& I, const std::vector<int>& var_indices);

// Number of standard monomials; nullopt when infinite.
std::optional<long long> colength(const IdealHandle& I);

// Cofactors of f over the original generators, or nullopt when f is not a
// member.  Soundness: sum c_i * gens_i == f exactly.
std::optional<std::vector<Polynomial>> lift_cofactors(const Polynomial& f,
                                                      const IdealHandle& I);

// Exact quotient a/b; nullopt when b does not divide a.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

}  // namespace fsplit

#endif
