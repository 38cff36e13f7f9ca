#ifndef CONTINGENT_FIXTURES_HPP
#define CONTINGENT_FIXTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "contingent/model.hpp"
#include "contingent/proof.hpp"

namespace contingent {

// Countermodels and derivations the test and reproduction suites rely on.
// The same texts are shipped under fixtures/ in the repository; the embedded
// copies keep the library self-contained.

struct FixtureText {
  std::string_view name;
  std::string_view text;
};

// Shipped models:
//   c_not_dc      (c)-model falsifying Dp & D~p -> D(p & ~p) at s
//   cn_not_dc     (cn)-model falsifying Dp & Dq -> D(p & q) at s
//   mcn_not_sdm   (mcn)-model falsifying Dp -> D(p | q) at s
const std::vector<FixtureText>& fixture_model_texts();

// Shipped derivations:
//   dcprime_from_dc    dC' instance in R-delta
//   dc_from_dcprime    dC instance in M-delta+dC'
//   dmprime_from_dm    dM' instance in M-delta
//   dm_from_dmprime    dM instance in E-delta+dM'
const std::vector<FixtureText>& fixture_derivation_texts();

Model fixture_model(std::string_view name);
Derivation fixture_derivation(std::string_view name);

}  // namespace contingent

#endif  // CONTINGENT_FIXTURES_HPP
