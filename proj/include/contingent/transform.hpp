#ifndef CONTINGENT_TRANSFORM_HPP
#define CONTINGENT_TRANSFORM_HPP

#include "contingent/formula.hpp"
#include "contingent/model.hpp"

namespace contingent {

// Superset closure of every N(s). The result is supplemented (property m) and
// extends the input. Valuations are untouched when applied to a model.
// Bounded because the closure can reach all 2^n subsets.
constexpr int kMaxSupplementationStates = 16;
Frame supplementation(const Frame& frame);
Model supplementation(const Model& m);

// Adds the complement of every member of N(s). The result is closed under
// complements (property z) and extends the input. Truth of Delta-formulas is
// invariant under this transform.
Frame complementation(const Frame& frame);
Model complementation(const Model& m);

// Least fixed point of the flagged closures, applied per pass in the order
// m, c, n, z until stable. Intersection closure can blow up doubly
// exponentially, hence the small state bound.
constexpr int kMaxCloseUnderStates = 5;
Frame close_under(const Frame& frame, PropertySet props);
Model close_under(const Model& m, PropertySet props);

// Embedding of the noncontingency language into the necessity language:
// atoms and Boolean connectives map homomorphically and
// Delta f  ~>  B f' | B~f'. Input must be Box-free; output is Delta-free.
Formula star_translate(const Formula& f);

}  // namespace contingent

#endif  // CONTINGENT_TRANSFORM_HPP
