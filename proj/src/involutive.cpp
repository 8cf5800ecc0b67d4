#include "formsig/involutive.hpp"

namespace formsig {

std::vector<Ordering> nil_set(const InvolutiveAlgebra& A) {
  std::vector<Ordering> out;
  for (const auto& o : A.base().orderings())
    if (A.is_nil_at(o)) out.push_back(o);
  return out;
}

}  // namespace formsig
