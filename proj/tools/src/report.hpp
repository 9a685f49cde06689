#pragma once

#include <string>

#include "ekc/catalog.hpp"
#include "json.hpp"
#include "tables.hpp"

namespace ekc::cli {

// Keys sorted (nlohmann's default map), rationals as "num/den" strings.
nlohmann::json to_json(const InvariantsReport& r);
std::string to_text(const InvariantsReport& r);

nlohmann::json to_json(const Table& t);
std::string to_text(const Table& t);

}  // namespace ekc::cli
