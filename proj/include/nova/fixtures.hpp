// Embedded reference objects, addressable by name from the CLI and tests.

#ifndef NOVA_FIXTURES_HPP
#define NOVA_FIXTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "nova/io.hpp"

namespace nova {

struct FixtureInfo {
  std::string name;
  std::string summary;
};

const std::vector<FixtureInfo>& fixture_catalog();
bool is_fixture(std::string_view name);

/// The fixture as a bundle definition. Throws ParseError for unknown names.
Definition fixture(std::string_view name);

/// First part of the given kind (and class, when non-empty). Throws ParseError if absent.
Definition fixture_part(std::string_view name, DefKind kind, std::string_view cls = {});

}  // namespace nova

#endif  // NOVA_FIXTURES_HPP
