#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hullkit/document.hpp"

namespace hullkit {

/// "name" or "name:key=value:key=v1,v2", e.g. "example1:m=2:n=0:a=1,2".
struct FixtureId {
  std::string name;
  std::map<std::string, std::vector<Rational>> params;
};

/// Throws ParseError on malformed ids.
FixtureId parse_fixture_id(std::string_view text);
std::string to_string(const FixtureId& id);

/// Throws PreconditionError for unknown names or parameters out of range.
InputDocument fixture(const FixtureId& id);
inline InputDocument fixture(std::string_view id) { return fixture(parse_fixture_id(id)); }

/// Ids of every built-in fixture, default parameters.
std::vector<std::string> fixture_names();

}  // namespace hullkit
