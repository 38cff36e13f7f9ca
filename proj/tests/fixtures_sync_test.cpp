// The fixture texts are embedded in the library and also shipped as files;
// the two copies must stay byte-identical.

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "contingent/fixtures.hpp"

using namespace contingent;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing ", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string kRoot = CONTINGENT_SOURCE_DIR;

}  // namespace

TEST_CASE("shipped model files match the embedded texts") {
  for (const auto& entry : fixture_model_texts()) {
    const std::string path = kRoot + "/fixtures/models/" + std::string(entry.name) + ".model";
    CHECK(slurp(path) == entry.text);
  }
}

TEST_CASE("shipped derivation files match the embedded texts") {
  for (const auto& entry : fixture_derivation_texts()) {
    const std::string path =
        kRoot + "/fixtures/derivations/" + std::string(entry.name) + ".drv";
    CHECK(slurp(path) == entry.text);
  }
}

TEST_CASE("every shipped fixture parses") {
  for (const auto& entry : fixture_model_texts()) CHECK_NOTHROW(fixture_model(entry.name));
  for (const auto& entry : fixture_derivation_texts()) {
    CHECK_NOTHROW(fixture_derivation(entry.name));
  }
  CHECK_THROWS_AS(fixture_model("missing"), std::invalid_argument);
  CHECK_THROWS_AS(fixture_derivation("missing"), std::invalid_argument);
}
