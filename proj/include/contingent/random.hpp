#ifndef CONTINGENT_RANDOM_HPP
#define CONTINGENT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "contingent/formula.hpp"
#include "contingent/model.hpp"

namespace contingent {

// Seed used whenever none is given; overridable through the CONTINGENT_SEED
// environment variable in the CLI.
constexpr std::uint64_t kDefaultSeed = 8954;

// Deterministic generator. Draws raw engine output only, never standard
// distributions, so identical seeds give identical streams on every
// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return next_u64() & 1u; }

 private:
  std::mt19937_64 engine_;
};

// Uniform subset of an n-state frame's state set.
StateSet random_state_set(Rng& rng, int n);

// Uniformly random neighborhood collection over n <= 5 states: each of the
// 2^n subsets is a member independently with probability 1/2.
std::vector<StateSet> random_collection(Rng& rng, int n);

// Frame of size n with uniformly random collections; state names follow the
// canonical s, t, u, v, w list.
Frame random_frame(Rng& rng, int n);

// Random frame repaired to the requested closure properties. Repair biases
// sampling toward larger collections; fine for countermodel hunting, not a
// uniform sampler of the closed family.
Frame random_frame_with(Rng& rng, int n, PropertySet props);

// random_frame plus a uniform valuation of the given atoms.
Model random_model(Rng& rng, int n, const std::vector<std::string>& atoms);

// Random formula over the given atoms with modal depth <= max depth.
// with_box selects the necessity language; otherwise only Delta appears.
Formula random_formula(Rng& rng, int depth, const std::vector<std::string>& atoms, bool with_box);

// Replaces one uniformly chosen connective occurrence (Not/And/Or/Imp/Iff/
// Delta/Box) by a different connective of the same arity. Returns the input
// unchanged when it has no connectives.
Formula mutate_connective(Rng& rng, const Formula& f);

// Canonical state names used by enumeration and sampling.
std::vector<std::string> canonical_state_names(int n);

}  // namespace contingent

#endif  // CONTINGENT_RANDOM_HPP
